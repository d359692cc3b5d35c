#pragma once

#include "symcoh/linalg.hpp"
#include "symcoh/oracle.hpp"
#include "symcoh/product.hpp"
#include "symcoh/ring.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace symcoh {

namespace detail {

/// Write-once cache: values are computed outside the lock and the first insert wins.
template <class K, class V>
class OnceCache {
public:
    template <class F>
    std::shared_ptr<const V> get(const K& k, F&& make) {
        {
            std::lock_guard lock(mu_);
            auto it = map_.find(k);
            if (it != map_.end()) return it->second;
        }
        auto v = std::make_shared<const V>(make());
        std::lock_guard lock(mu_);
        return map_.emplace(k, std::move(v)).first->second;
    }

private:
    std::mutex mu_;
    std::map<K, std::shared_ptr<const V>> map_;
};

}  // namespace detail

inline SpaceSpec sym_space(int g, int n) { return SpaceSpec{FactorSpec::sym(g, n)}; }
inline SpaceSpec sym_pair(int g, int a, int b) { return SpaceSpec{FactorSpec::sym(g, a), FactorSpec::sym(g, b)}; }

inline CohClass single(const SpaceSpec& space, const FactorMonomial& fm, const Rational& c = 1) {
    Monomial m(1);
    m[0] = fm;
    return CohClass::monomial(space, m, c);
}

/// Pullback of a monomial along C^(a) x C^(b) -> C^(a+b).
inline std::shared_ptr<const CohClass> pull_sum_monomial(int g, int a, int b, const FactorMonomial& m) {
    using Key = std::tuple<int, int, int, XiMask, int>;
    static detail::OnceCache<Key, CohClass> cache;
    return cache.get(Key{g, a, b, m.xi, m.eta}, [&] {
        SpaceSpec s = sym_pair(g, a, b);
        CohClass r = CohClass::unit(s);
        for (int i : xi_indices(m.xi)) r = mul(r, gen_xi(s, 0, i) + gen_xi(s, 1, i));
        CohClass e = gen_eta(s, 0) + gen_eta(s, 1);
        for (int j = 0; j < m.eta; ++j) r = mul(r, e);
        return r;
    });
}

/// Ring homomorphism H(C^(a+b)) -> H(C^(a)) x H(C^(b)): xi -> xi x 1 + 1 x xi, eta -> eta x 1 + 1 x eta.
inline CohClass pull_sum(const CohClass& c, int a, int b) {
    const SpaceSpec& s = c.space();
    if (s.size() != 1 || !s[0].is_sym() || s[0].exponent != a + b)
        throw std::invalid_argument("pull_sum: expected a class on sym(g," + std::to_string(a + b) + ")");
    int g = s[0].genus;
    CohClass r(sym_pair(g, a, b));
    for (const auto& [m, coef] : c.terms()) r += *pull_sum_monomial(g, a, b, m[0]) * coef;
    return r;
}

/// Inverse of the Poincare pairing matrix P[z][y] = int z*y, z in basis(k), y in basis(2n-k).
inline std::shared_ptr<const MatrixQ> pairing_inverse(int g, int n, int k) {
    using Key = std::tuple<int, int, int>;
    static detail::OnceCache<Key, MatrixQ> cache;
    return cache.get(Key{g, n, k}, [&] {
        auto z = basis(g, n, k);
        auto y = basis(g, n, 2 * n - k);
        if (z.size() != y.size()) throw std::logic_error("pairing matrix is not square");
        SpaceSpec s = sym_space(g, n);
        const auto& ring = factor_ring(s[0]);
        MatrixQ p(z.size(), y.size());
        for (std::size_t i = 0; i < z.size(); ++i)
            for (std::size_t j = 0; j < y.size(); ++j) {
                long long v = 0;
                for (const auto& [m, c] : ring.mul(z[i], y[j])) v += c * ring.integrate(m);
                p(i, j) = v;
            }
        auto inv = inverse(p);
        if (!inv) throw std::logic_error("singular pairing matrix");
        return *inv;
    });
}

/// The pairing matrix itself (not cached), for the duality property tests.
inline MatrixQ pairing_matrix(int g, int n, int k) {
    auto z = basis(g, n, k);
    auto y = basis(g, n, 2 * n - k);
    SpaceSpec s = sym_space(g, n);
    MatrixQ p(z.size(), y.size());
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) p(i, j) = integrate(single(s, z[i]) * single(s, y[j]));
    return p;
}

/// Gysin image of one monomial of C^(a) x C^(b), by duality.
inline std::shared_ptr<const CohClass> gysin_monomial(int g, int a, int b, const Monomial& t) {
    using Key = std::tuple<int, int, int, XiMask, int, XiMask, int>;
    static detail::OnceCache<Key, CohClass> cache;
    return cache.get(Key{g, a, b, t[0].xi, t[0].eta, t[1].xi, t[1].eta}, [&] {
        int n = a + b;
        int p = t.degree();
        SpaceSpec target = sym_space(g, n);
        CohClass out(target);
        if (p > 2 * n) return out;
        SpaceSpec src = sym_pair(g, a, b);
        auto zs = basis(g, n, p);
        auto ys = basis(g, n, 2 * n - p);
        auto pinv = pairing_inverse(g, n, p);
        std::vector<Rational> r(ys.size());
        const auto& r0 = factor_ring(src[0]);
        const auto& r1 = factor_ring(src[1]);
        int d0 = t[0].degree(), d1 = t[1].degree();
        for (std::size_t j = 0; j < ys.size(); ++j) {
            auto pulled = pull_sum_monomial(g, a, b, ys[j]);
            Rational acc;
            for (const auto& [u, cu] : pulled->terms()) {
                if (u[0].degree() + d0 != 2 * a || u[1].degree() + d1 != 2 * b) continue;
                long long v = r0.pair(t[0], u[0]);
                if (!v) continue;
                v *= r1.pair(t[1], u[1]);
                if (!v) continue;
                // (t0 x t1)(u0 x u1) = (-1)^{deg t1 deg u0} t0 u0 x t1 u1
                if ((d1 & 1) && (u[0].degree() & 1)) v = -v;
                acc += cu * Rational(v);
            }
            r[j] = acc;
        }
        for (std::size_t i = 0; i < zs.size(); ++i) {
            Rational c;
            for (std::size_t j = 0; j < ys.size(); ++j)
                if (!r[j].is_zero() && !(*pinv)(j, i).is_zero()) c += r[j] * (*pinv)(j, i);
            // c P = r  =>  c = r P^{-1}; P^{-1} is indexed (y, z)
            if (!c.is_zero()) out += single(target, zs[i], c);
        }
        return out;
    });
}

/// Gysin push-forward m_*: H(C^(a) x C^(b)) -> H(C^(a+b)), characterized by
/// int m_*(x) y = int x pull_sum(y).
inline CohClass gysin_sum(const CohClass& c) {
    const SpaceSpec& s = c.space();
    if (s.size() != 2 || !s[0].is_sym() || !s[1].is_sym() || s[0].genus != s[1].genus)
        throw std::invalid_argument("gysin_sum: expected sym(g,a) x sym(g,b)");
    int g = s[0].genus, a = s[0].exponent, b = s[1].exponent;
    CohClass r(sym_space(g, a + b));
    for (const auto& [m, coef] : c.terms()) r += *gysin_monomial(g, a, b, m) * coef;
    return r;
}

/// Applies id x m_* x id to factors (k, k+1) of a product; m_* has degree 0 so no sign appears.
inline CohClass gysin_on_factors(const CohClass& c, std::size_t k) {
    const SpaceSpec& s = c.space();
    if (k + 1 >= s.size()) throw std::out_of_range("gysin_on_factors: factor index");
    const auto& fa = s[k];
    const auto& fb = s[k + 1];
    if (!fa.is_sym() || !fb.is_sym() || fa.genus != fb.genus)
        throw std::invalid_argument("gysin_on_factors: expected two sym factors of one genus");
    std::vector<FactorSpec> fs;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i == k) fs.push_back(FactorSpec::sym(fa.genus, fa.exponent + fb.exponent));
        else if (i != k + 1) fs.push_back(s[i]);
    }
    SpaceSpec target(fs);
    CohClass r(target);
    for (const auto& [m, coef] : c.terms()) {
        Monomial mid(2);
        mid[0] = m[k];
        mid[1] = m[k + 1];
        for (const auto& [z, cz] : gysin_monomial(fa.genus, fa.exponent, fb.exponent, mid)->terms()) {
            Monomial out(target.size());
            std::size_t j = 0;
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (i == k) out[j++] = z[0];
                else if (i != k + 1) out[j++] = m[i];
            }
            r.add_term(out, coef * cz);
        }
    }
    return r;
}

/// Oracle push-forward: (1/(a! b!)) sum over S_{a+b} of the pulled-back class, read back on C^(a+b).
inline CohClass gysin_sum_oracle(const CohClass& c, OracleConfig cfg = {}) {
    const SpaceSpec& s = c.space();
    if (s.size() != 2 || !s[0].is_sym() || !s[1].is_sym() || s[0].genus != s[1].genus)
        throw std::invalid_argument("gysin_sum_oracle: expected sym(g,a) x sym(g,b)");
    int g = s[0].genus, a = s[0].exponent, b = s[1].exponent;
    CartesianOracle o(g, a + b, cfg);
    auto sym = o.symmetrize(o.embed(c));
    Rational scale = Rational(1) / (factorial(a) * factorial(b));
    for (auto& [k, v] : sym) v *= scale;
    return o.de_embed(sym);
}

/// Pullback along the Abel-Jacobi map C^(n) -> Pic: xi_i -> xi_i.
inline CohClass pull_aj(const CohClass& c, int n) {
    const SpaceSpec& s = c.space();
    if (s.size() != 1 || s[0].is_sym()) throw std::invalid_argument("pull_aj: expected a class on ab(g)");
    SpaceSpec target = sym_space(s[0].genus, n);
    CohClass r(target);
    for (const auto& [m, coef] : c.terms())
        for (const auto& [fm, fc] : factor_ring(target[0]).normalize(m[0].xi, 0)) r += single(target, fm, coef * fc);
    return r;
}

/// Involution on H^4(C^(g-1)): identity on xi-only classes, eta*w -> (theta - eta)*w,
/// eta^2 -> theta^2/2 - eta*theta + eta^2.
inline CohClass serre_involution_monomial(const FactorSpec& f, const FactorMonomial& m) {
    SpaceSpec s{f};
    if (m.degree() != 4) throw std::invalid_argument("serre_involution: degree must be 4");
    CohClass th = gen_theta(s, 0), et = gen_eta(s, 0);
    CohClass xi_part = single(s, FactorMonomial{m.xi, 0});
    if (m.eta == 0) return xi_part;
    if (m.eta == 1) return mul(th - et, xi_part);
    return mul(th, th) * Rational(1, 2) - mul(et, th) + mul(et, et);
}

inline void check_involution_factor(const FactorSpec& f) {
    if (!f.is_sym() || f.exponent != f.genus - 1)
        throw std::invalid_argument("serre_involution: expected sym(g,g-1), got " + f.str());
}

inline CohClass serre_involution(const CohClass& c) {
    if (c.space().size() != 1) throw std::invalid_argument("serre_involution: expected a single factor");
    check_involution_factor(c.space()[0]);
    if (c.degree() != 4 && !c.is_zero()) throw std::invalid_argument("serre_involution: degree must be 4");
    CohClass r(c.space());
    for (const auto& [m, coef] : c.terms()) r += serre_involution_monomial(c.space()[0], m[0]) * coef;
    return r;
}

/// The involution applied on factor k; every term must have degree 4 there.
inline CohClass serre_involution_on_factor(const CohClass& c, std::size_t k) {
    const auto& f = c.space().at_checked(k);
    check_involution_factor(f);
    return apply_on_factor(c, k, c.space(), [&](const FactorMonomial& fm) {
        return serre_involution_monomial(f, fm);
    });
}

/// Integrates out factor k, leaving a class on the remaining factors (which must be nonempty).
inline CohClass integrate_factor(const CohClass& c, std::size_t k) {
    const SpaceSpec& s = c.space();
    if (s.size() < 2) throw std::invalid_argument("integrate_factor needs at least two factors");
    std::vector<FactorSpec> rest;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (i != k) rest.push_back(s[i]);
    SpaceSpec target(rest);
    CohClass r(target);
    const auto& ring = factor_ring(s.at_checked(k));
    for (const auto& [m, coef] : c.terms()) {
        long long v = ring.integrate(m[k]);
        if (!v || m[k].degree() != s[k].top_degree()) continue;
        Monomial out(target.size());
        std::size_t j = 0;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (i != k) out[j++] = m[i];
        // the removed factor has even degree, so no sign
        r.add_term(out, coef * Rational(v));
    }
    return r;
}

// ---- the correspondence W inside C^(n) x C^(n) ----

/// A class on W x rest written through q_1: for each power e of eta_2, a class on
/// (first factor) x rest multiplying q_2^* eta^e.
struct WClass {
    SpaceSpec space;
    std::map<int, CohClass> by_eta2;

    bool is_zero() const {
        for (const auto& [e, c] : by_eta2)
            if (!c.is_zero()) return false;
        return true;
    }
    friend bool operator==(const WClass& a, const WClass& b) {
        if (!(a.space == b.space)) return false;
        auto nz = [](const WClass& w) {
            std::map<int, CohClass> out;
            for (const auto& [e, c] : w.by_eta2)
                if (!c.is_zero()) out.emplace(e, c);
            return out;
        };
        return nz(a) == nz(b);
    }
    WClass& operator+=(const WClass& o) {
        for (const auto& [e, c] : o.by_eta2) {
            auto [it, ins] = by_eta2.try_emplace(e, c);
            if (!ins) it->second += c;
        }
        return *this;
    }
};

/// Restricts a class on C^(n) x C^(n) x rest to W x rest using q_2^* xi_i = -q_1^* xi_i;
/// eta on the second factor stays symbolic.
inline WClass w_restrict(const CohClass& c) {
    const SpaceSpec& s = c.space();
    if (s.size() < 2 || !s[0].is_sym() || !(s[0] == s[1]))
        throw std::invalid_argument("w_restrict: first two factors must be equal sym(g,n)");
    std::vector<FactorSpec> fs{s[0]};
    for (std::size_t i = 2; i < s.size(); ++i) fs.push_back(s[i]);
    WClass w{SpaceSpec(fs), {}};
    const auto& ring = factor_ring(s[0]);
    for (const auto& [m, coef] : c.terms()) {
        XiMask t = m[1].xi;
        int sign = (popcount(t) & 1) ? -1 : 1;
        auto prod = ring.mul(m[0], FactorMonomial{t, 0});
        if (prod.empty()) continue;
        auto [it, ins] = w.by_eta2.try_emplace(m[1].eta, CohClass(w.space));
        for (const auto& [fm, fc] : prod) {
            Monomial out(w.space.size());
            out[0] = fm;
            for (std::size_t i = 2; i < s.size(); ++i) out[i - 1] = m[i];
            // m[1]'s xi's moved left past nothing but m[0]: q_2^* xi_T sits right after q_1^* m[0]
            it->second.add_term(out, coef * Rational(sign * fc));
        }
    }
    return w;
}

/// q_{1*} q_2^*(eta^e) on C^(n); only e = 0, 1 are known.
inline CohClass w_push_rule(const FactorSpec& f, int e) {
    SpaceSpec s{f};
    CohClass th = gen_theta(s, 0), et = gen_eta(s, 0);
    if (e == 0) return th - et;
    if (e == 1) return mul(th, th) * Rational(1, 2) - mul(th, et) + mul(et, et);
    throw std::domain_error("unsupported W-integrand: q_1* q_2^* eta^" + std::to_string(e));
}

/// q_{1*}: W x rest -> C^(n) x rest.
inline CohClass w_pushforward(const WClass& w) {
    CohClass r(w.space);
    for (const auto& [e, c] : w.by_eta2) {
        if (c.is_zero()) continue;
        r += mul(c, inject(w_push_rule(w.space[0], e), w.space, 0));
    }
    return r;
}

/// int_W q_1^*(a * extra) q_2^*(b) for classes a, b, extra on C^(n).
inline Rational integrate_over_W(const CohClass& a, const CohClass& b, const CohClass& extra) {
    a.check_space(b);
    a.check_space(extra);
    const SpaceSpec& s = a.space();
    if (s.size() != 1 || !s[0].is_sym()) throw std::invalid_argument("integrate_over_W: expected sym(g,n) classes");
    SpaceSpec pair{s[0], s[0]};
    CohClass ab = mul(place(mul(a, extra), pair, {0}), place(b, pair, {1}));
    return integrate(w_pushforward(w_restrict(ab)));
}

}  // namespace symcoh
