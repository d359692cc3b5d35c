#pragma once

#include "symcoh/char_classes.hpp"
#include "symcoh/constants.hpp"
#include "symcoh/expr.hpp"
#include "symcoh/geo_maps.hpp"
#include "symcoh/linalg.hpp"
#include "symcoh/product.hpp"

#include <array>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace symcoh {

// ---- the subspace theta * H^2(Pic) inside H^4(C^(n)) ----

/// Canonical representatives of H^4(C^(n)) modulo theta * xi_i xi_j (all i < j).
class ThetaPicQuotient {
public:
    using Vec = std::map<FactorMonomial, Rational>;

    explicit ThetaPicQuotient(FactorSpec f) : f_(f), s_{f} {
        if (!f.is_sym()) throw std::invalid_argument("theta H^2(Pic) quotient needs a sym factor");
        CohClass th = gen_theta(s_, 0);
        for (int i = 1; i <= 2 * f.genus; ++i)
            for (int j = i + 1; j <= 2 * f.genus; ++j) span_.add(to_vec(th * gen_xi(s_, 0, i) * gen_xi(s_, 0, j)));
    }

    std::size_t rank() const { return span_.rank(); }

    static Vec to_vec(const CohClass& c) {
        Vec v;
        for (const auto& [m, coef] : c.terms()) v.emplace(m[0], coef);
        return v;
    }

    /// Single-factor class: degree-4 part reduced, other degrees untouched.
    CohClass reduce(const CohClass& c) const { return reduce_on_factor(c, 0); }

    bool contains(const CohClass& c) const { return reduce(c.degree_part(4)).is_zero(); }

    /// Reduces the degree-4 pieces on factor k of a product class.
    CohClass reduce_on_factor(const CohClass& c, std::size_t k) const {
        if (!(c.space().at_checked(k) == f_)) throw std::invalid_argument("quotient factor mismatch");
        return apply_on_factor(c, k, c.space(), [&](const FactorMonomial& fm) { return reduce_monomial(fm); });
    }

private:
    FactorSpec f_;
    SpaceSpec s_;
    SparseEchelon<FactorMonomial> span_;
    mutable std::mutex mu_;
    mutable std::map<FactorMonomial, CohClass> memo_;

    CohClass reduce_monomial(const FactorMonomial& fm) const {
        if (fm.degree() != 4) return single(s_, fm);
        std::lock_guard lock(mu_);
        auto it = memo_.find(fm);
        if (it != memo_.end()) return it->second;
        CohClass r(s_);
        for (const auto& [m, coef] : span_.reduce(Vec{{fm, Rational(1)}})) r += single(s_, m, coef);
        return memo_.emplace(fm, r).first->second;
    }
};

inline const ThetaPicQuotient& theta_pic_quotient(int g, int n) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<ThetaPicQuotient>> table;
    std::lock_guard lock(mu);
    auto& slot = table[{g, n}];
    if (!slot) slot = std::make_unique<ThetaPicQuotient>(FactorSpec::sym(g, n));
    return *slot;
}

// ---- cycle classes on C^(3) x C^(3) x C^(4) ----

inline constexpr int kAjGenus = 5;

inline SpaceSpec correspondence_space() {
    return SpaceSpec{FactorSpec::sym(kAjGenus, 3), FactorSpec::sym(kAjGenus, 3), FactorSpec::sym(kAjGenus, 4)};
}

enum class BidegreeTag { B41_23, B23_41, B23_23 };

inline const std::vector<std::pair<BidegreeTag, std::string>>& bidegree_tags() {
    static const std::vector<std::pair<BidegreeTag, std::string>> t = {
        {BidegreeTag::B41_23, "(4,1)(2,3)"}, {BidegreeTag::B23_41, "(2,3)(4,1)"}, {BidegreeTag::B23_23, "(2,3)(2,3)"}};
    return t;
}

inline BidegreeTag parse_bidegree_tag(const std::string& s) {
    std::string t;
    for (char c : s)
        if (c != ' ') t += c;
    for (const auto& [tag, name] : bidegree_tags())
        if (t == name) return tag;
    throw std::invalid_argument("unknown bidegree tag '" + s + "'");
}

inline const std::string& tag_name(BidegreeTag t) {
    for (const auto& [tag, name] : bidegree_tags())
        if (tag == t) return name;
    throw std::invalid_argument("unknown bidegree tag");
}

namespace detail {

/// Terms of degree 2 on the first two factors together.
inline CohClass h2_first_pair(const CohClass& c) {
    CohClass r(c.space());
    for (const auto& [m, coef] : c.terms())
        if (m[0].degree() + m[1].degree() == 2) r.add_term(m, coef);
    return r;
}

/// h2_first_pair(a * b), skipping products that cannot land there.
inline CohClass h2_first_pair_product(const CohClass& a, const CohClass& b) {
    return mul_where(a, b, [](const Monomial& x, const Monomial& y) {
        return x[0].degree() + x[1].degree() + y[0].degree() + y[1].degree() == 2;
    });
}

/// Secant class on C^(a+b) pulled back along the sum map onto factors (p, q) of `target`.
inline CohClass pulled_secant(int d, int r, const SpaceSpec& target, std::size_t p, std::size_t q) {
    int a = target[p].exponent, b = target[q].exponent;
    return place(pull_sum(secant_class(d, kAjGenus, r, a + b), a, b), target, {p, q});
}

inline SpaceSpec four_factor_space(int e3, int e4) {
    return SpaceSpec{FactorSpec::sym(kAjGenus, 3), FactorSpec::sym(kAjGenus, 3), FactorSpec::sym(kAjGenus, e3),
                     FactorSpec::sym(kAjGenus, e4)};
}

}  // namespace detail

/// The (4,1)(2,3) class before push-forward, on C^(3) x C^(3) x C x C^(3), split by Kunneth type.
inline std::map<MultiDegree, CohClass> bidegree_41_23_types() {
    SpaceSpec s = detail::four_factor_space(1, 3);
    // degree 4 secant class on factors 2,4 and theta - eta on factors 1,3 (1-based)
    CohClass c = detail::h2_first_pair_product(detail::pulled_secant(8, 4, s, 1, 3), detail::pulled_secant(7, 3, s, 0, 2));
    std::map<MultiDegree, CohClass> out;
    for (const auto& [m, coef] : c.terms()) {
        auto [it, ins] = out.try_emplace(multidegree(m), CohClass(s));
        it->second.add_term(m, coef);
    }
    return out;
}

/// H^2 x H^4 Kunneth component of the cycle class in the given bidegree, on C^(3) x C^(3) x C^(4).
inline CohClass bidegree_class(BidegreeTag tag) {
    switch (tag) {
        case BidegreeTag::B41_23: {
            SpaceSpec s = detail::four_factor_space(1, 3);
            CohClass r(s);
            for (const auto& [md, c] : bidegree_41_23_types()) r += c;
            return gysin_on_factors(r, 2);
        }
        case BidegreeTag::B23_41: {
            SpaceSpec s = detail::four_factor_space(1, 3);
            CohClass c = detail::h2_first_pair(detail::pulled_secant(7, 3, s, 0, 3));
            return gysin_on_factors(c, 2);
        }
        case BidegreeTag::B23_23: {
            SpaceSpec s = detail::four_factor_space(2, 2);
            CohClass c = detail::h2_first_pair_product(detail::pulled_secant(8, 4, s, 0, 2) * gen_eta(s, 2),
                                                       detail::pulled_secant(8, 4, s, 1, 3));
            // the map to the theta divisor goes through K - D, hence the involution
            return serre_involution_on_factor(gysin_on_factors(c, 2), 2);
        }
    }
    throw std::invalid_argument("unknown bidegree tag");
}

inline CohClass bidegree_class(const std::string& tag) { return bidegree_class(parse_bidegree_tag(tag)); }

/// Sum of the three bidegree classes.
inline CohClass total_class() {
    CohClass r(correspondence_space());
    for (const auto& [tag, name] : bidegree_tags()) r += bidegree_class(tag);
    return r;
}

/// Reduces every eta_2-slice of a W-form modulo theta_3 H^2(Pic) on its last factor.
inline WClass reduce_mod_theta_pic(const WClass& w) {
    const auto& q = theta_pic_quotient(kAjGenus, 4);
    WClass out{w.space, {}};
    for (const auto& [e, c] : w.by_eta2) {
        CohClass r = q.reduce_on_factor(c, w.space.size() - 1);
        if (!r.is_zero()) out.by_eta2.emplace(e, r);
    }
    return out;
}

inline CohClass reduce_mod_theta_pic(const CohClass& c, std::size_t k) {
    const auto& f = c.space().at_checked(k);
    return theta_pic_quotient(f.genus, f.exponent).reduce_on_factor(c, k);
}

/// Restriction of total_class() to W_1 x C^(4), reduced modulo theta_3 H^2(Pic).
inline WClass total_class_restricted() { return reduce_mod_theta_pic(w_restrict(total_class())); }

// ---- AJ^0_1 ----

inline SpaceSpec aj_source() { return sym_space(kAjGenus, 3); }
inline SpaceSpec aj_target() { return sym_space(kAjGenus, 4); }

namespace detail {

inline void check_aj1_input(const CohClass& w) {
    if (!(w.space() == aj_source())) throw std::invalid_argument("aj1_bar expects a class on sym(5,3), got " + w.space().str());
    if (w.degree() != 2 && w.degree() != -1) throw std::invalid_argument("aj1_bar expects a homogeneous degree 2 class");
}

}  // namespace detail

/// Closed formula: integrals over C^(3) against theta - eta and the W-rule for q_2^* eta.
inline CohClass aj1_bar_formula(const CohClass& w) {
    detail::check_aj1_input(w);
    const int g = kAjGenus;
    SpaceSpec s = aj_source(), t = aj_target();
    CohClass th = gen_theta(s, 0), et = gen_eta(s, 0), wcls = th - et;
    CohClass pushed_eta2 = w_push_rule(s[0], 1);
    auto xi = [&](int i) { return gen_xi(s, 0, i); };
    auto txi = [&](int i) { return gen_xi(t, 0, i); };
    CohClass teta = gen_eta(t, 0);

    CohClass r(t);
    Rational c_eta2 = integrate(w * (Rational(-2) * th + Rational(4) * et) * wcls) + Rational(4) * integrate(w * pushed_eta2);
    r += c_eta2 * teta * teta;
    for (int i = 1; i <= g; ++i) {
        for (int j = 1; j <= g; ++j) {
            Rational a = integrate(w * xi(i) * xi(j + g) * wcls);
            if (!a.is_zero()) r += Rational(8) * a * txi(i + g) * txi(j) * teta;
            Rational b = integrate(w * xi(i) * xi(j) * wcls);
            if (!b.is_zero()) r -= Rational(4) * b * txi(i + g) * txi(j + g) * teta;
            Rational c = integrate(w * xi(i + g) * xi(j + g) * wcls);
            if (!c.is_zero()) r -= Rational(4) * c * txi(i) * txi(j) * teta;
        }
    }
    r += integrate(w * wcls * wcls) * gen_theta(t, 0) * teta;
    return reduce_mod_theta_pic(r, 0);
}

/// Same map through the correspondence: cup with total_class(), restrict to W_1, push to C^(3) x C^(4)
/// and integrate out C^(3).
inline CohClass aj1_bar_correspondence(const CohClass& w) {
    detail::check_aj1_input(w);
    static const CohClass total = total_class();
    CohClass lifted = place(w, total.space(), {0}) * total;
    CohClass pushed = w_pushforward(w_restrict(lifted));
    return reduce_mod_theta_pic(integrate_factor(pushed, 0), 0);
}

inline CohClass aj1_bar(const CohClass& w) { return aj1_bar_formula(w); }

struct Aj1ImageReport {
    std::size_t domain_dim = 0;
    std::size_t rank = 0;            // rank of the image in H^4(C^(4)) / theta H^2(Pic)
    bool contains_target = false;    // image contains eta H^2(Pic) + Q eta^2
    bool paths_agree = false;        // formula and correspondence agree on every basis vector
    std::vector<FactorMonomial> disagreements;
};

inline Aj1ImageReport aj1_image_check() {
    Aj1ImageReport rep;
    SpaceSpec s = aj_source(), t = aj_target();
    SparseEchelon<FactorMonomial> img;
    rep.paths_agree = true;
    auto basis2 = basis(kAjGenus, 3, 2);
    rep.domain_dim = basis2.size();
    for (const auto& fm : basis2) {
        CohClass w = single(s, fm);
        CohClass a = aj1_bar_formula(w);
        if (!(a == aj1_bar_correspondence(w))) {
            rep.paths_agree = false;
            rep.disagreements.push_back(fm);
        }
        img.add(ThetaPicQuotient::to_vec(a));
    }
    rep.rank = img.rank();
    rep.contains_target = img.contains(ThetaPicQuotient::to_vec(gen_eta(t, 0) * gen_eta(t, 0)));
    for (int i = 1; i <= 2 * kAjGenus; ++i)
        for (int j = i + 1; j <= 2 * kAjGenus; ++j)
            if (!img.contains(ThetaPicQuotient::to_vec(gen_xi(t, 0, i) * gen_xi(t, 0, j) * gen_eta(t, 0))))
                rep.contains_target = false;
    return rep;
}

struct CijEntry {
    int i = 0, j = 0;
    Rational c;
    bool pure = false;  // image is exactly c * xi_i xi_j eta
};

/// aj1_bar(xi_i xi_j) for 1 <= i < j <= 10, j != i + 5.
inline std::vector<CijEntry> aj1_cij_table() {
    std::vector<CijEntry> out;
    SpaceSpec s = aj_source(), t = aj_target();
    for (int i = 1; i <= 2 * kAjGenus; ++i) {
        for (int j = i + 1; j <= 2 * kAjGenus; ++j) {
            if (j == i + kAjGenus) continue;
            CohClass img = aj1_bar(gen_xi(s, 0, i) * gen_xi(s, 0, j));
            CohClass unit = gen_xi(t, 0, i) * gen_xi(t, 0, j) * gen_eta(t, 0);
            CijEntry e{i, j, 0, false};
            if (unit.size() == 1) {
                e.c = img.coeff(unit.terms().begin()->first) / unit.terms().begin()->second;
                e.pure = img == unit * e.c;
            }
            out.push_back(e);
        }
    }
    return out;
}

// ---- AJ^0_2 ----

enum class Aj2Reading { A, B };

inline const char* reading_name(Aj2Reading r) { return r == Aj2Reading::A ? "A" : "B"; }

/// An element of H^2(W_k): curve classes plus ambient classes pulled back by q_1 and q_2.
struct WH2 {
    std::array<Rational, 5> c{}, cp{};
    CohClass q1 = CohClass(aj_source());
    CohClass q2 = CohClass(aj_source());

    bool is_zero() const {
        for (int i = 0; i < 5; ++i)
            if (!c[i].is_zero() || !cp[i].is_zero()) return false;
        return q1.is_zero() && q2.is_zero();
    }
    WH2& operator+=(const WH2& o) {
        for (int i = 0; i < 5; ++i) {
            c[i] += o.c[i];
            cp[i] += o.cp[i];
        }
        q1 += o.q1;
        q2 += o.q2;
        return *this;
    }
    friend WH2 operator+(WH2 a, const WH2& b) { return a += b; }
    friend WH2 operator*(const Rational& s, WH2 a) {
        for (int i = 0; i < 5; ++i) {
            a.c[i] *= s;
            a.cp[i] *= s;
        }
        a.q1 *= s;
        a.q2 *= s;
        return a;
    }

    static WH2 curve(int i, bool primed, const Rational& coef = 1) {
        if (i < 1 || i > 5) throw std::out_of_range("curve index must be 1..5");
        WH2 x;
        (primed ? x.cp : x.c)[i - 1] = coef;
        return x;
    }
    static WH2 c_tot() {
        WH2 x;
        x.c.fill(Rational(1));
        return x;
    }
    static WH2 ambient(int which, const CohClass& w) {
        if (!(w.space() == aj_source()) || (w.degree() != 2 && !w.is_zero()))
            throw std::invalid_argument("ambient classes must be degree 2 on sym(5,3)");
        WH2 x;
        (which == 1 ? x.q1 : x.q2) = w;
        return x;
    }
};

struct AJ2Domain {
    WH2 w1, w2;
};

/// Coefficients of [P^2_1..P^2_10]; the j_2* f and j_2* tau_1 directions are quotiented out.
struct AJ2Target {
    std::array<Rational, 10> p{};
    static constexpr const char* quotient = "<j2*f>";

    friend bool operator==(const AJ2Target& a, const AJ2Target& b) { return a.p == b.p; }
    std::string str() const {
        std::vector<std::pair<Rational, std::string>> terms;
        for (int i = 0; i < 10; ++i)
            if (!p[i].is_zero()) terms.emplace_back(p[i], "P" + std::to_string(i + 1));
        return detail::join_terms(terms) + " mod " + quotient;
    }
};

/// Gram matrix of the curves on W_pq and their push-forwards to C^(3).
class PairingTable {
public:
    static PairingTable load(const std::string& path) {
        PairingTable t;
        auto j = read_json(path);
        const auto& g = j.at("gram");
        t.cc_ = json_rational(g.at("C.C"));
        t.cpcp_ = json_rational(g.at("Cp.Cp"));
        t.ccp_same_ = json_rational(g.at("C.Cp_same"));
        t.cc_other_ = json_rational(g.at("C.C_other"));
        t.cpcp_other_ = json_rational(g.at("Cp.Cp_other"));
        t.ccp_other_ = json_rational(g.at("C.Cp_other"));
        SpaceSpec s = aj_source();
        for (const auto& [k, v] : j.at("pushforwards").at("q1").items())
            if (k != "citation") t.q1_.emplace(k, evaluate_class(v.get<std::string>(), s));
        for (const auto& [r, body] : j.at("readings").items())
            for (const auto& [k, v] : body.at("q2").items()) t.q2_[r].emplace(k, evaluate_class(v.get<std::string>(), s));
        return t;
    }
    static const PairingTable& shipped() {
        static const PairingTable t = load(data_path("aj2_pairings.json"));
        return t;
    }

    /// Intersection number of two curve classes; primed selects C'.
    Rational curve_curve(int i, bool pi, int j, bool pj) const {
        if (i == j) return pi == pj ? (pi ? cpcp_ : cc_) : ccp_same_;
        if (pi != pj) return ccp_other_;
        return pi ? cpcp_other_ : cc_other_;
    }

    /// q_{k*} of a named curve ("C", "Cp", "X1p", "X1q").
    const CohClass& push(int k, const std::string& curve, Aj2Reading r) const {
        const auto& m = k == 1 ? q1_ : q2_.at(reading_name(r));
        auto it = m.find(curve);
        if (it == m.end())
            throw std::out_of_range("unresolvable pairing: no push-forward q" + std::to_string(k) + "_*[" + curve + "]");
        return it->second;
    }

    /// int_W x * y.
    Rational pairing(const WH2& x, const WH2& y, Aj2Reading r) const {
        Rational s = 0;
        SpaceSpec src = aj_source();
        CohClass wcls = gen_theta(src, 0) - gen_eta(src, 0);
        for (int i = 0; i < 5; ++i) {
            for (int j = 0; j < 5; ++j) {
                s += x.c[i] * y.c[j] * curve_curve(i, false, j, false);
                s += x.c[i] * y.cp[j] * curve_curve(i, false, j, true);
                s += x.cp[i] * y.c[j] * curve_curve(i, true, j, false);
                s += x.cp[i] * y.cp[j] * curve_curve(i, true, j, true);
            }
        }
        auto curve_ambient = [&](const WH2& cur, const WH2& amb) {
            Rational v = 0;
            for (int i = 0; i < 5; ++i) {
                for (int k : {1, 2}) {
                    const CohClass& w = k == 1 ? amb.q1 : amb.q2;
                    if (w.is_zero()) continue;
                    if (!cur.c[i].is_zero()) v += cur.c[i] * integrate(w * push(k, "C", r));
                    if (!cur.cp[i].is_zero()) v += cur.cp[i] * integrate(w * push(k, "Cp", r));
                }
            }
            return v;
        };
        s += curve_ambient(x, y) + curve_ambient(y, x);
        // ambient x ambient: [W] = theta - eta under either q_k, and the W-rule across q_1, q_2
        s += integrate(x.q1 * y.q1 * wcls) + integrate(x.q2 * y.q2 * wcls);
        CohClass one = CohClass::unit(src);
        if (!x.q1.is_zero() && !y.q2.is_zero()) s += integrate_over_W(x.q1, y.q2, one);
        if (!x.q2.is_zero() && !y.q1.is_zero()) s += integrate_over_W(y.q1, x.q2, one);
        return s;
    }

private:
    Rational cc_, cpcp_, ccp_same_, cc_other_, cpcp_other_, ccp_other_;
    std::map<std::string, CohClass> q1_;
    std::map<std::string, std::map<std::string, CohClass>> q2_;
};

inline AJ2Target aj2_map(const AJ2Domain& x, Aj2Reading r, const PairingTable& t = PairingTable::shipped()) {
    AJ2Target out;
    SpaceSpec s = aj_source();
    CohClass wcls = gen_theta(s, 0) - gen_eta(s, 0);
    WH2 q1w = WH2::ambient(1, wcls), q2w = WH2::ambient(2, wcls);
    if (!x.w1.is_zero()) {
        for (int i = 1; i <= 5; ++i) {
            out.p[i + 4] += t.pairing(x.w1, WH2::curve(i, false), r);
            WH2 d = WH2::c_tot() + WH2::curve(i, true, 4) + Rational(2) * q1w;
            out.p[i - 1] += t.pairing(x.w1, d, r);
        }
    }
    if (!x.w2.is_zero()) {
        for (int i = 1; i <= 5; ++i) {
            out.p[i + 4] -= t.pairing(x.w2, WH2::curve(i, false, 3) + WH2::curve(i, true), r);
            out.p[i - 1] += t.pairing(x.w2, WH2::curve(i, true) + q2w, r);
        }
    }
    return out;
}

/// The input (12[C_i] - 3[C]_tot + 2 q_2^*(eta - sigma_i), 3[C_i]).
inline AJ2Domain aj2_example_input(int i) {
    SpaceSpec s = aj_source();
    AJ2Domain x;
    x.w1 = WH2::curve(i, false, 12) + Rational(-3) * WH2::c_tot() +
           WH2::ambient(2, Rational(2) * (gen_eta(s, 0) - gen_sigma(s, 0, i)));
    x.w2 = WH2::curve(i, false, 3);
    return x;
}

inline AJ2Domain aj2_curve_pair_input(int i) {
    AJ2Domain x;
    x.w1 = WH2::curve(i, false);
    x.w2 = WH2::curve(i, true);
    return x;
}

struct Aj2RankReport {
    std::size_t full_rank = 0;
    std::size_t ambient_rank = 0;
    std::size_t domain_dim = 0;
    bool ok() const { return full_rank == 10; }
};

/// Generators of H^2(W_1) + H^2(W_2): all curves and q_1^*, q_2^* of the degree-2 basis of C^(3).
inline std::vector<AJ2Domain> aj2_generators(bool ambient_only) {
    std::vector<AJ2Domain> gens;
    SpaceSpec s = aj_source();
    for (int side = 1; side <= 2; ++side) {
        auto put = [&](const WH2& w) {
            AJ2Domain d;
            (side == 1 ? d.w1 : d.w2) = w;
            gens.push_back(d);
        };
        if (!ambient_only)
            for (int i = 1; i <= 5; ++i) {
                put(WH2::curve(i, false));
                put(WH2::curve(i, true));
            }
        for (const auto& fm : basis(kAjGenus, 3, 2))
            for (int k : {1, 2}) put(WH2::ambient(k, single(s, fm)));
    }
    return gens;
}

inline std::size_t aj2_rank(const std::vector<AJ2Domain>& gens, Aj2Reading r) {
    MatrixQ m(10, gens.size());
    for (std::size_t c = 0; c < gens.size(); ++c) {
        auto y = aj2_map(gens[c], r);
        for (int i = 0; i < 10; ++i) m(i, c) = y.p[i];
    }
    return rank(m);
}

inline Aj2RankReport aj2_rank_check(Aj2Reading r = Aj2Reading::A) {
    Aj2RankReport rep;
    auto all = aj2_generators(false);
    rep.domain_dim = all.size();
    rep.full_rank = aj2_rank(all, r);
    rep.ambient_rank = aj2_rank(aj2_generators(true), r);
    return rep;
}

// ---- span of the curve push-forwards ----

struct SpanReport {
    std::size_t dim = 0;
    bool equals_theta_eta = false;
    CohClass theta_squared;  // theta^2 in normal form on C^(3)
};

inline SpanReport span_check_theta_eta(const PairingTable& t = PairingTable::shipped()) {
    SpaceSpec s = aj_source();
    CohClass th = gen_theta(s, 0), et = gen_eta(s, 0), wcls = th - et;
    std::vector<CohClass> gens = {t.push(1, "C", Aj2Reading::A),
                                  Rational(2) * t.push(1, "Cp", Aj2Reading::A) + wcls * wcls,
                                  t.push(1, "X1p", Aj2Reading::A), t.push(1, "X1q", Aj2Reading::A)};
    SparseEchelon<FactorMonomial> span;
    for (const auto& g : gens) span.add(ThetaPicQuotient::to_vec(g));
    SparseEchelon<FactorMonomial> target;
    target.add(ThetaPicQuotient::to_vec(th * et));
    target.add(ThetaPicQuotient::to_vec(et * et));
    SpanReport rep;
    rep.dim = span.rank();
    rep.equals_theta_eta = rep.dim == 2 && span.contains(ThetaPicQuotient::to_vec(th * et)) &&
                           span.contains(ThetaPicQuotient::to_vec(et * et));
    for (const auto& g : gens)
        if (!target.contains(ThetaPicQuotient::to_vec(g))) rep.equals_theta_eta = false;
    rep.theta_squared = th * th;
    return rep;
}

}  // namespace symcoh
