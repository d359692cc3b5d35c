#pragma once

// Brute-force model of H(C^(n)) as the symmetric-group invariants of H(C^n).
// It shares no rewriting code with ring.hpp: only the basis enumeration is reused,
// as coordinates for translating results back.

#include "symcoh/ring.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace symcoh {

struct OracleConfig {
    int cutoff = 4;  // largest Cartesian power the oracle will build
};

/// Classes on the N-fold Cartesian power of a genus g curve. Each position carries a code:
/// 0 = unit, 1..2g = xi_i, 2g+1 = point class. Six bits per position.
class CartesianOracle {
public:
    using Key = std::uint64_t;
    using Vec = std::unordered_map<Key, Rational>;

    CartesianOracle(int g, int positions, OracleConfig cfg = {}) : g_(g), n_(positions) {
        if (positions > cfg.cutoff)
            throw std::length_error("oracle scale exceeded: " + std::to_string(positions) + " > cutoff " +
                                    std::to_string(cfg.cutoff));
        if (positions > 10 || 2 * g + 1 > 63) throw std::length_error("oracle scale exceeded");
    }

    int genus() const { return g_; }
    int positions() const { return n_; }
    int pt() const { return 2 * g_ + 1; }

    static int code_at(Key k, int p) { return static_cast<int>((k >> (6 * p)) & 63); }
    static Key with_code(Key k, int p, int c) { return (k & ~(Key(63) << (6 * p))) | (Key(c) << (6 * p)); }
    int code_degree(int c) const { return c == 0 ? 0 : (c == pt() ? 2 : 1); }

    /// Product of two position-wise monomials, with sign; sign 0 means the product vanishes.
    std::pair<Key, int> mul_key(Key a, Key b) const {
        int parity = 0, a_odd_after = 0;
        // moving b_q left past a_p for p > q
        for (int p = n_ - 1; p >= 0; --p) {
            if (code_degree(code_at(b, p)) == 1) parity += a_odd_after;
            if (code_degree(code_at(a, p)) == 1) ++a_odd_after;
        }
        Key out = 0;
        int sign = (parity & 1) ? -1 : 1;
        for (int p = 0; p < n_; ++p) {
            int x = code_at(a, p), y = code_at(b, p), z;
            if (x == 0) z = y;
            else if (y == 0) z = x;
            else if (x == pt() || y == pt()) return {0, 0};
            else if (y == x + g_) z = pt();
            else if (x == y + g_) { z = pt(); sign = -sign; }
            else return {0, 0};
            out = with_code(out, p, z);
        }
        return {out, sign};
    }

    Vec mul(const Vec& a, const Vec& b) const {
        Vec r;
        for (const auto& [ka, ca] : a)
            for (const auto& [kb, cb] : b) {
                auto [k, s] = mul_key(ka, kb);
                if (s == 0) continue;
                accumulate(r, k, s > 0 ? ca * cb : -(ca * cb));
            }
        return r;
    }

    /// Image of xi_i (or eta when i == 0) from C^(count) placed on positions [offset, offset+count).
    Vec generator(int i, int offset, int count) const {
        Vec r;
        int code = (i == 0) ? pt() : i;
        for (int p = offset; p < offset + count; ++p) r[with_code(0, p, code)] = 1;
        return r;
    }

    Vec unit() const { return Vec{{0, Rational(1)}}; }

    /// Pullback of a normal-form monomial of C^(count) placed on a block of positions.
    Vec embed_monomial(const FactorMonomial& m, int offset, int count) const {
        Vec r = unit();
        for (int i : xi_indices(m.xi)) r = mul(r, generator(i, offset, count));
        for (int j = 0; j < m.eta; ++j) r = mul(r, generator(0, offset, count));
        return r;
    }

    /// Pullback of a class on C^(a_1) x ... x C^(a_k) with sum a_j = N.
    Vec embed(const CohClass& c) const {
        std::vector<int> offsets;
        int off = 0;
        for (const auto& f : c.space().factors) {
            if (!f.is_sym() || f.genus != g_) throw std::invalid_argument("oracle needs sym(g,*) factors");
            offsets.push_back(off);
            off += f.exponent;
        }
        if (off != n_) throw std::invalid_argument("oracle position count mismatch");
        Vec r;
        for (const auto& [m, coef] : c.terms()) {
            Vec t = unit();
            for (std::size_t i = 0; i < m.size(); ++i)
                t = mul(t, embed_monomial(m[i], offsets[i], c.space()[i].exponent));
            for (const auto& [k, v] : t) accumulate(r, k, coef * v);
        }
        return r;
    }

    Rational integrate_cartesian(const Vec& v) const {
        Key top = 0;
        for (int p = 0; p < n_; ++p) top = with_code(top, p, pt());
        auto it = v.find(top);
        return it == v.end() ? Rational(0) : it->second;
    }

    /// Sum over all permutations of the positions of the pulled-back class.
    Vec symmetrize(const Vec& v) const {
        std::vector<int> perm(n_);
        std::iota(perm.begin(), perm.end(), 0);
        Vec r;
        do {
            for (const auto& [k, c] : v) {
                Key out = 0;
                std::vector<int> odd_targets;
                for (int p = 0; p < n_; ++p) {
                    int code = code_at(k, p);
                    out = with_code(out, perm[p], code);
                    if (code_degree(code) == 1) odd_targets.push_back(perm[p]);
                }
                int inv = 0;
                for (std::size_t i = 0; i < odd_targets.size(); ++i)
                    for (std::size_t j = i + 1; j < odd_targets.size(); ++j)
                        if (odd_targets[i] > odd_targets[j]) ++inv;
                accumulate(r, out, (inv & 1) ? -c : c);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        return r;
    }

    /// Writes an invariant class as the pullback of a class on C^(N).
    CohClass de_embed(const Vec& v) const {
        SpaceSpec target{FactorSpec::sym(g_, n_)};
        CohClass out(target);
        Vec residual = v;
        for (int k = 0; k <= 2 * n_; ++k) {
            auto b = basis(g_, n_, k);
            std::stable_sort(b.begin(), b.end(), [](const auto& x, const auto& y) { return x.eta < y.eta; });
            for (const auto& z : b) {
                Key lead = 0;
                int p = 0;
                for (int i : xi_indices(z.xi)) lead = with_code(lead, p++, i);
                for (int j = 0; j < z.eta; ++j) lead = with_code(lead, p++, pt());
                auto it = residual.find(lead);
                if (it == residual.end()) continue;
                Rational c = it->second / factorial(z.eta);
                Monomial m(1);
                m[0] = z;
                out.add_term(m, c);
                for (const auto& [key, val] : embed_monomial(z, 0, n_)) accumulate(residual, key, -(c * val));
            }
        }
        if (!residual.empty()) throw std::logic_error("oracle: class is not symmetric");
        return out;
    }

    static void accumulate(Vec& r, Key k, const Rational& v) {
        if (v.is_zero()) return;
        auto [it, ins] = r.try_emplace(k, v);
        if (!ins) {
            it->second += v;
            if (it->second.is_zero()) r.erase(it);
        }
    }

private:
    int g_, n_;
};

inline void require_oracle_space(const SpaceSpec& s, int& g, int& total) {
    total = 0;
    g = s[0].genus;
    for (const auto& f : s.factors) {
        if (!f.is_sym() || f.genus != g) throw std::invalid_argument("oracle supports sym(g,*) factors of one genus");
        total += f.exponent;
    }
}

/// Integral computed in the Cartesian power: (1/N!) * integral of the pullback.
inline Rational oracle_integrate(const CohClass& c, OracleConfig cfg = {}) {
    int g, total;
    require_oracle_space(c.space(), g, total);
    CartesianOracle o(g, total, cfg);
    Rational denom = 1;
    for (const auto& f : c.space().factors) denom *= factorial(f.exponent);
    return o.integrate_cartesian(o.embed(c)) / denom;
}

/// Product computed in the Cartesian power and translated back (single-factor spaces).
inline CohClass oracle_mul(const CohClass& a, const CohClass& b, OracleConfig cfg = {}) {
    a.check_space(b);
    if (a.space().size() != 1) throw std::invalid_argument("oracle_mul supports a single factor");
    const auto& f = a.space()[0];
    CartesianOracle o(f.genus, f.exponent, cfg);
    return o.de_embed(o.mul(o.embed(a), o.embed(b)));
}

}  // namespace symcoh
