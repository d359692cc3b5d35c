#pragma once

#include "symcoh/constants.hpp"
#include "symcoh/product.hpp"
#include "symcoh/ring.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace symcoh {

/// Univariate polynomial in n with rational coefficients, ascending powers, no trailing zeros.
class PolynomialQ {
public:
    PolynomialQ() = default;
    PolynomialQ(std::initializer_list<Rational> c) : c_(c) { trim(); }
    explicit PolynomialQ(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

    const std::vector<Rational>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    Rational operator()(const Rational& n) const {
        Rational r;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * n + *it;
        return r;
    }

    friend PolynomialQ operator+(const PolynomialQ& a, const PolynomialQ& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return PolynomialQ(std::move(c));
    }
    friend PolynomialQ operator-(const PolynomialQ& a, const PolynomialQ& b) { return a + b * Rational(-1); }
    friend PolynomialQ operator*(const PolynomialQ& a, const Rational& s) {
        std::vector<Rational> c = a.c_;
        for (auto& x : c) x *= s;
        return PolynomialQ(std::move(c));
    }
    friend PolynomialQ operator*(const Rational& s, const PolynomialQ& a) { return a * s; }
    friend bool operator==(const PolynomialQ& a, const PolynomialQ& b) { return a.c_ == b.c_; }

    /// e.g. "30*n^2 - 50*n + 22"
    std::string str() const {
        if (c_.empty()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            const Rational& c = c_[i];
            if (c.is_zero()) continue;
            bool neg = c.sign() < 0;
            Rational a = neg ? -c : c;
            if (s.empty()) s += neg ? "-" : "";
            else s += neg ? " - " : " + ";
            std::string mono = i == 0 ? "" : (i == 1 ? "n" : "n^" + std::to_string(i));
            if (mono.empty()) s += a.str();
            else if (a == 1) s += mono;
            else s += a.str() + "*" + mono;
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Class of the secant-plane locus in C^(k) for a g^r_d on a genus g curve:
/// sum_{l=0}^{k-r} C(d-g-r, l) eta^l theta^{k-r-l} / (k-r-l)!.
inline CohClass secant_class(int d, int g, int r, int k) {
    if (k < r) throw std::invalid_argument("secant_class: k < r");
    if (r < 0 || d < k) throw std::invalid_argument("secant_class: need d >= k >= r >= 0");
    SpaceSpec s{FactorSpec::sym(g, k)};
    CohClass th = gen_theta(s, 0), et = gen_eta(s, 0);
    CohClass out(s);
    for (int l = 0; l <= k - r; ++l) {
        Rational c = binomial(d - g - r, l) / factorial(k - r - l);
        if (c.is_zero()) continue;
        out += mul(pow(et, l), pow(th, k - r - l)) * c;
    }
    return out;
}

/// Drops all terms of degree above `max_degree`.
inline CohClass truncate(const CohClass& c, int max_degree) {
    CohClass r(c.space());
    for (const auto& [m, coef] : c.terms())
        if (m.degree() <= max_degree) r.add_term(m, coef);
    return r;
}

/// Total Chern class of C^(n): (1+eta)^{n-2g+1} prod_i (1 + eta - sigma_i).
inline CohClass chern_sym(int g, int n) {
    SpaceSpec s{FactorSpec::sym(g, n)};
    CohClass one = CohClass::unit(s), et = gen_eta(s, 0);
    long long e = n - 2LL * g + 1;
    CohClass series(s);
    for (int j = 0; j <= n; ++j) series += pow(et, j) * binomial(e, j);
    CohClass out = series;
    for (int i = 1; i <= g; ++i) out = mul(out, one + et - gen_sigma(s, 0, i));
    return out;
}

/// Restricted total Chern class of a smooth divisor: c(T_X) (1 + D)^{-1}, up to the divisor's dimension.
inline CohClass chern_restrict_sub(const CohClass& ambient_chern, const CohClass& divisor) {
    ambient_chern.check_space(divisor);
    if (divisor.degree() != 2) throw std::invalid_argument("chern_restrict_sub: divisor class must have degree 2");
    const SpaceSpec& s = ambient_chern.space();
    int dim = s.top_degree() / 2;
    CohClass inv(s), term = CohClass::unit(s);
    for (int j = 0; j < dim; ++j) {
        inv += term;
        term = mul(term, -divisor);
    }
    return truncate(mul(ambient_chern, inv), 2 * (dim - 1));
}

/// A curve on the surface known only through cited intersection numbers.
struct ExtraCurve {
    std::string name;
    Rational self_intersection;
    /// pairings with labeled ambient classes (e.g. "theta", "c1") and with other extra curves
    std::map<std::string, Rational> pairings;
};

/// A smooth surface S inside an ambient product, with [S] and the restricted Chern classes.
struct SurfaceData {
    SpaceSpec ambient;
    CohClass surface_class;  // [S] in the ambient, degree = 2 * codim
    CohClass c1;             // ambient classes whose restrictions give c1(T_S), c2(T_S)
    CohClass c2;
    std::vector<ExtraCurve> extra_curves;

    Rational ambient_pairing(const CohClass& a, const CohClass& b) const {
        return integrate(mul(mul(a, b), surface_class));
    }
    const ExtraCurve& curve(const std::string& name) const {
        for (const auto& c : extra_curves)
            if (c.name == name) return c;
        throw std::out_of_range("unknown extra curve: " + name);
    }
};

/// A divisor on S: (restriction of an ambient class, with a label) + sum of extra-curve multiples.
struct SurfaceDivisor {
    std::optional<CohClass> ambient;
    std::string ambient_label;
    std::map<std::string, Rational> extra;
};

namespace detail {

inline Rational extra_pairing(const SurfaceData& s, const std::string& curve, const std::string& with) {
    const ExtraCurve& c = s.curve(curve);
    if (with == curve) return c.self_intersection;
    auto it = c.pairings.find(with);
    if (it != c.pairings.end()) return it->second;
    for (const auto& o : s.extra_curves)
        if (o.name == with) {
            auto jt = o.pairings.find(curve);
            if (jt != o.pairings.end()) return jt->second;
        }
    throw std::out_of_range("missing pairing datum: " + curve + "." + with);
}

inline Rational divisor_pairing(const SurfaceData& s, const SurfaceDivisor& a, const SurfaceDivisor& b) {
    Rational r;
    if (a.ambient && b.ambient) r += s.ambient_pairing(*a.ambient, *b.ambient);
    for (const auto& [name, m] : b.extra)
        if (a.ambient) r += m * extra_pairing(s, name, a.ambient_label);
    for (const auto& [name, m] : a.extra) {
        if (b.ambient) r += m * extra_pairing(s, name, b.ambient_label);
        for (const auto& [name2, m2] : b.extra) r += m * m2 * extra_pairing(s, name, name2);
    }
    return r;
}

}  // namespace detail

/// chi(nD) = D^2/2 n^2 + D.c1/2 n + (c1^2 + c2)/12 on a surface.
inline PolynomialQ hrr_surface_chi(const SurfaceData& s, const SurfaceDivisor& d) {
    SurfaceDivisor c1{s.c1, "c1", {}};
    Rational dd = detail::divisor_pairing(s, d, d);
    Rational dc = detail::divisor_pairing(s, d, c1);
    Rational c1c1 = s.ambient_pairing(s.c1, s.c1);
    Rational c2 = integrate(mul(s.c2, s.surface_class));
    return PolynomialQ{(c1c1 + c2) / Rational(12), dc / Rational(2), dd / Rational(2)};
}

/// chi(nL) on a curve: deg*n + 1 - genus.
inline PolynomialQ rr_curve_chi(long long genus, long long degree) {
    return PolynomialQ{Rational(1 - genus), Rational(degree)};
}

/// Genus from adjunction 2g - 2 = (K_S + C).C = (-c1 + C).C.
inline long long curve_genus_adjunction(const SurfaceData& s, const SurfaceDivisor& curve) {
    SurfaceDivisor c1{s.c1, "c1", {}};
    Rational two_g_minus_2 = detail::divisor_pairing(s, curve, curve) - detail::divisor_pairing(s, curve, c1);
    Rational g = (two_g_minus_2 + Rational(2)) / Rational(2);
    if (!g.is_integer()) throw std::domain_error("non-reduced or wrong class: genus " + g.str());
    return g.to_int();
}

inline long long curve_genus_adjunction(const SurfaceData& s, const CohClass& curve_class) {
    if (curve_class.degree() != 2) throw std::invalid_argument("curve class must have degree 2");
    return curve_genus_adjunction(s, SurfaceDivisor{curve_class, "", {}});
}

/// Degree of the restriction of an ambient divisor to a curve of class `curve` on S.
inline Rational degree_on_curve(const SurfaceData& s, const CohClass& divisor, const CohClass& curve) {
    return s.ambient_pairing(divisor, curve);
}

/// W_pq: the divisor of class theta - eta in C^(3) of a genus 5 curve, with X_q attached.
inline SurfaceData surface_W_pq(const CitedConstants& k) {
    SpaceSpec s{FactorSpec::sym(5, 3)};
    CohClass w = secant_class(6, 5, 2, 3);
    CohClass c = chern_restrict_sub(chern_sym(5, 3), w);
    ExtraCurve xq{"X_q", k.value("X_q.X_q"), {{"theta", k.value("theta.X_q")}, {"c1", k.value("c1.X_q")}}};
    return SurfaceData{s, w, c.degree_part(2), c.degree_part(4), {xq}};
}

/// X^(2) for a genus g curve X; the surface is the whole ambient.
inline SurfaceData surface_sym2(int g) {
    SpaceSpec s{FactorSpec::sym(g, 2)};
    CohClass c = chern_sym(g, 2);
    return SurfaceData{s, CohClass::unit(s), c.degree_part(2), c.degree_part(4), {}};
}

struct PolyCheck {
    std::string id;
    std::string citation;
    PolynomialQ expected;
    PolynomialQ computed;
    bool pass() const { return expected == computed; }
};

struct HilbertReport {
    std::vector<PolyCheck> checks;
    long long genus_X2_g14 = 0;  // from adjunction
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass()) return false;
        return true;
    }
};

/// Both routes to the Hilbert polynomial of the limit of W^1_5.
inline HilbertReport hilbert_suite(const CitedConstants& k) {
    HilbertReport rep;
    SurfaceData w = surface_W_pq(k);
    SpaceSpec s5 = w.ambient;
    PolynomialQ chi_w = hrr_surface_chi(w, SurfaceDivisor{gen_theta(s5, 0), "theta", {{"X_q", 1}}});
    PolynomialQ chi_w14 = rr_curve_chi(k.value("genus.W14").to_int(), k.value("deg_theta.W14").to_int());

    int gx = static_cast<int>(k.value("genus.X").to_int());
    SurfaceData x2 = surface_sym2(gx);
    CohClass thx = gen_theta(x2.ambient, 0);
    PolynomialQ chi_x2 = hrr_surface_chi(x2, SurfaceDivisor{thx, "theta", {}});
    CohClass x2g14 = secant_class(static_cast<int>(k.value("d.X2_g14").to_int()), gx,
                                  static_cast<int>(k.value("r.X2_g14").to_int()), 2);
    rep.genus_X2_g14 = curve_genus_adjunction(x2, x2g14);
    Rational deg = degree_on_curve(x2, thx, x2g14);
    PolynomialQ chi_c = rr_curve_chi(rep.genus_X2_g14, deg.to_int());

    PolynomialQ target{32, -60, 30};
    rep.checks.push_back({"chi_W_pq", "Hilbert polynomial of theta on W_pq", {22, -50, 30}, chi_w});
    rep.checks.push_back({"chi_W14", "Hilbert polynomial of theta on W^1_4", {-10, 10}, chi_w14});
    rep.checks.push_back({"chi_X2", "Hilbert polynomial of theta on X^(2)", {10, -24, 15}, chi_x2});
    rep.checks.push_back({"chi_X2_g14", "Hilbert polynomial of theta on X_2(g^1_4)", {-12, 12}, chi_c});
    rep.checks.push_back({"route_degenerate", "limit fibre: chi(W_pq) - chi(W^1_4)", target, chi_w - chi_w14});
    rep.checks.push_back({"route_trigonal", "smooth fibre: 2 chi(X^(2)) - chi(X_2(g^1_4))", target,
                          chi_x2 * Rational(2) - chi_c});
    return rep;
}

}  // namespace symcoh
