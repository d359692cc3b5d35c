#pragma once

#include "symcoh/rational.hpp"
#include "symcoh/space.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symcoh {

/// Bit i-1 stands for xi_i, i = 1..2g; xi'_i = xi_{i+g}.
using XiMask = std::uint64_t;

inline int popcount(XiMask m) { return std::popcount(m); }

/// Lexicographic order on sorted index lists encoded as bitmasks.
inline bool xi_lex_less(XiMask a, XiMask b) {
    if (a == b) return false;
    XiMask d = a ^ b;
    int b0 = std::countr_zero(d);
    XiMask above = (b0 >= 63) ? 0 : ~((XiMask(2) << b0) - 1);
    bool a_has = (a >> b0) & 1;
    XiMask other = a_has ? b : a;
    bool other_continues = (other & above) != 0;
    // the list holding b0 is smaller unless the other one has already ended
    return a_has ? other_continues : !other_continues;
}

/// Sign of sorting the word (A ascending)(B ascending); 0 if A and B overlap.
inline int concat_sign(XiMask a, XiMask b) {
    if (a & b) return 0;
    int inv = 0;
    while (b) {
        int j = std::countr_zero(b);
        b &= b - 1;
        XiMask above = (j >= 63) ? 0 : ~((XiMask(2) << j) - 1);
        inv += popcount(a & above);
    }
    return (inv & 1) ? -1 : 1;
}

/// Sign of sorting an arbitrary word of distinct indices (1-based); 0 if an index repeats.
inline int word_sign(const std::vector<int>& word) {
    XiMask seen = 0;
    int inv = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
        XiMask bit = XiMask(1) << (word[i] - 1);
        if (seen & bit) return 0;
        seen |= bit;
        for (std::size_t j = i + 1; j < word.size(); ++j)
            if (word[i] > word[j]) ++inv;
    }
    return (inv & 1) ? -1 : 1;
}

inline XiMask xi_bit(int i) { return XiMask(1) << (i - 1); }

inline std::vector<int> xi_indices(XiMask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m) + 1);
        m &= m - 1;
    }
    return out;
}

/// Per-factor monomial xi_S * eta^d with S sorted.
struct FactorMonomial {
    XiMask xi = 0;
    int eta = 0;

    int degree() const { return popcount(xi) + 2 * eta; }
    friend bool operator==(const FactorMonomial&, const FactorMonomial&) = default;
    friend bool operator<(const FactorMonomial& a, const FactorMonomial& b) {
        if (a.eta != b.eta) return a.eta < b.eta;
        return xi_lex_less(a.xi, b.xi);
    }
};

constexpr std::size_t kMaxFactors = 8;

/// Product-space monomial: one FactorMonomial per factor, read left to right.
struct Monomial {
    std::array<FactorMonomial, kMaxFactors> f{};
    std::uint8_t n = 0;

    Monomial() = default;
    explicit Monomial(std::size_t factors) : n(static_cast<std::uint8_t>(factors)) {}

    FactorMonomial& operator[](std::size_t i) { return f[i]; }
    const FactorMonomial& operator[](std::size_t i) const { return f[i]; }
    std::size_t size() const { return n; }

    int degree() const {
        int d = 0;
        for (std::size_t i = 0; i < n; ++i) d += f[i].degree();
        return d;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        if (a.n != b.n) return false;
        for (std::size_t i = 0; i < a.n; ++i)
            if (!(a.f[i] == b.f[i])) return false;
        return true;
    }
    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.n != b.n) return a.n < b.n;
        for (std::size_t i = 0; i < a.n; ++i) {
            if (a.f[i] < b.f[i]) return true;
            if (b.f[i] < a.f[i]) return false;
        }
        return false;
    }
};

using FactorTerms = std::vector<std::pair<FactorMonomial, long long>>;

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in factor rewriting");
    return r;
}
inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in factor rewriting");
    return r;
}

/// Multiplication and normal form inside a single factor. Results are memoized; the memo is
/// internally synchronized so a FactorRing can be shared between threads.
class FactorRing {
public:
    explicit FactorRing(FactorSpec spec) : spec_(spec) {
        low_ = (spec.genus >= 64) ? ~XiMask(0) : ((XiMask(1) << spec.genus) - 1);
        all_ = (2 * spec.genus >= 64) ? ~XiMask(0) : ((XiMask(1) << (2 * spec.genus)) - 1);
    }

    const FactorSpec& spec() const { return spec_; }
    int genus() const { return spec_.genus; }
    XiMask all_xi() const { return all_; }

    bool is_normal(const FactorMonomial& m) const {
        if ((m.xi & ~all_) != 0 || m.eta < 0) return false;
        if (!spec_.is_sym()) return m.eta == 0;
        return popcount(m.xi) + m.eta <= spec_.exponent;
    }

    /// Normal form of xi_S eta^d with S already sorted.
    FactorTerms normalize(XiMask s, int d) const {
        if ((s & ~all_) != 0) throw std::out_of_range("xi index out of range for " + spec_.str());
        if (!spec_.is_sym()) {
            if (d != 0) return {};  // no eta on an abelian factor
            return {{FactorMonomial{s, 0}, 1}};
        }
        int n = spec_.exponent;
        if (popcount(s) + d <= n) return {{FactorMonomial{s, d}, 1}};
        {
            std::lock_guard lock(mu_);
            auto it = memo_.find({s, d});
            if (it != memo_.end()) return it->second;
        }
        FactorTerms out = rewrite(s, d);
        std::lock_guard lock(mu_);
        memo_.emplace(std::make_pair(s, d), out);
        return out;
    }

    FactorTerms mul(const FactorMonomial& a, const FactorMonomial& b) const {
        int sign = concat_sign(a.xi, b.xi);
        if (sign == 0) return {};
        if (!spec_.is_sym() && (a.eta || b.eta)) return {};
        FactorTerms t = normalize(a.xi | b.xi, a.eta + b.eta);
        if (sign < 0)
            for (auto& [m, c] : t) c = -c;
        return t;
    }

    /// Integral of a normal-form monomial (nonzero only in top degree).
    long long integrate(const FactorMonomial& m) const {
        if (spec_.is_sym()) return (m.xi == 0 && m.eta == spec_.exponent) ? 1 : 0;
        if (m.xi != all_) return 0;
        // xi_1..xi_2g sorted versus sigma_1...sigma_g: g(g-1)/2 transpositions
        long long g = spec_.genus;
        return ((g * (g - 1) / 2) % 2) ? -1 : 1;
    }

    /// int a*b for normal-form monomials of complementary degree.
    long long pair(const FactorMonomial& a, const FactorMonomial& b) const {
        if (a.degree() + b.degree() != spec_.top_degree()) return 0;
        int sign = concat_sign(a.xi, b.xi);
        if (sign == 0) return 0;
        if (!spec_.is_sym()) return (a.eta || b.eta) ? 0 : sign * integrate(FactorMonomial{a.xi | b.xi, 0});
        return sign * top_coefficient(a.xi | b.xi, a.eta + b.eta);
    }

    /// Normal-form basis of H^k, ordered by (eta, xi-lex).
    std::vector<FactorMonomial> basis(int k) const {
        std::vector<FactorMonomial> out;
        int twog = 2 * spec_.genus;
        if (k < 0 || k > spec_.top_degree()) return out;
        for (int d = 0; 2 * d <= k; ++d) {
            int s = k - 2 * d;
            if (!spec_.is_sym() && d > 0) break;
            if (spec_.is_sym() && s + d > spec_.exponent) continue;
            if (s > twog) continue;
            std::vector<int> idx(s);
            for (int i = 0; i < s; ++i) idx[i] = i;
            while (true) {
                XiMask m = 0;
                for (int i : idx) m |= XiMask(1) << i;
                out.push_back({m, d});
                int i = s - 1;
                while (i >= 0 && idx[i] == twog - s + i) --i;
                if (i < 0) break;
                ++idx[i];
                for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
        return out;
    }

private:
    long long top_coefficient(XiMask s, int d) const {
        {
            std::lock_guard lock(mu_);
            auto it = top_memo_.find({s, d});
            if (it != top_memo_.end()) return it->second;
        }
        long long v = 0;
        for (const auto& [m, c] : normalize(s, d)) v += c * integrate(m);
        std::lock_guard lock(mu_);
        top_memo_.emplace(std::make_pair(s, d), v);
        return v;
    }

    FactorTerms rewrite(XiMask s, int d) const {
        int n = spec_.exponent;
        int g = spec_.genus;
        XiMask lo = s & low_;
        XiMask hi = (s >> g) & low_;
        XiMask c = lo & hi;
        XiMask a = lo & ~c;
        XiMask b = hi & ~c;
        int w = popcount(s) + d;
        if (d + popcount(a) + popcount(b) + popcount(c) >= n + 1) return {};
        if (w == n + 1) return apply_relation(a, b, c, d);
        // peel one generator off the right end, normalize the rest, multiply back
        FactorTerms out;
        std::map<FactorMonomial, long long> acc;
        if (d > 0) {
            for (const auto& [m, coef] : normalize(s, d - 1))
                for (const auto& [m2, c2] : normalize(m.xi, m.eta + 1)) add(acc, m2, checked_mul(coef, c2));
        } else {
            int top = 63 - std::countl_zero(s);
            XiMask bit = XiMask(1) << top;
            for (const auto& [m, coef] : normalize(s & ~bit, 0)) {
                int sign = concat_sign(m.xi, bit);
                if (sign == 0) continue;
                for (const auto& [m2, c2] : normalize(m.xi | bit, m.eta)) add(acc, m2, checked_mul(sign * coef, c2));
            }
        }
        for (const auto& [m, coef] : acc) out.emplace_back(m, coef);
        return out;
    }

    static void add(std::map<FactorMonomial, long long>& acc, const FactorMonomial& m, long long v) {
        auto [it, ins] = acc.try_emplace(m, v);
        if (!ins) {
            it->second = checked_add(it->second, v);
            if (it->second == 0) acc.erase(it);
        }
    }

    /// Sign of xi_A xi'_B sigma_T written as that word, relative to the sorted set.
    int block_sign(XiMask a, XiMask b, XiMask t) const {
        std::vector<int> word;
        for (int i : xi_indices(a)) word.push_back(i);
        for (int i : xi_indices(b)) word.push_back(i + spec_.genus);
        for (int i : xi_indices(t)) {
            word.push_back(i);
            word.push_back(i + spec_.genus);
        }
        return word_sign(word);
    }

    XiMask assemble(XiMask a, XiMask b, XiMask t) const {
        int g = spec_.genus;
        return a | (b << g) | t | (t << g);
    }

    /// xi_A xi'_B sigma_C eta^d = -sum_{T < C} (-1)^{|C\T|} xi_A xi'_B sigma_T eta^{d+|C\T|}.
    FactorTerms apply_relation(XiMask a, XiMask b, XiMask c, int d) const {
        int eps = block_sign(a, b, c);
        std::map<FactorMonomial, long long> acc;
        // enumerate proper subsets T of C
        for (XiMask t = (c - 1) & c;; t = (t - 1) & c) {
            int missing = popcount(c & ~t);
            int sign = -eps * ((missing & 1) ? -1 : 1) * block_sign(a, b, t);
            add(acc, FactorMonomial{assemble(a, b, t), d + missing}, sign);
            if (t == 0) break;
        }
        FactorTerms out;
        for (const auto& [m, coef] : acc) out.emplace_back(m, coef);
        return out;
    }

    FactorSpec spec_;
    XiMask low_ = 0, all_ = 0;
    mutable std::mutex mu_;
    mutable std::map<std::pair<XiMask, int>, FactorTerms> memo_;
    mutable std::map<std::pair<XiMask, int>, long long> top_memo_;
};

/// Shared per-factor ring instance (write-once registry).
inline const FactorRing& factor_ring(const FactorSpec& spec) {
    static std::mutex mu;
    static std::map<FactorSpec, std::unique_ptr<FactorRing>> rings;
    std::lock_guard lock(mu);
    auto& slot = rings[spec];
    if (!slot) slot = std::make_unique<FactorRing>(spec);
    return *slot;
}

/// Exact rational combination of normal-form monomials on a fixed product space.
class CohClass {
public:
    using Terms = std::map<Monomial, Rational>;

    CohClass() = default;
    explicit CohClass(SpaceSpec space) : space_(std::move(space)) {}

    static CohClass unit(const SpaceSpec& space) { return scalar(space, 1); }
    static CohClass scalar(const SpaceSpec& space, const Rational& c) {
        CohClass r(space);
        if (!c.is_zero()) r.terms_.emplace(Monomial(space.size()), c);
        return r;
    }
    /// A single monomial, assumed to be in normal form.
    static CohClass monomial(const SpaceSpec& space, const Monomial& m, const Rational& c = 1) {
        CohClass r(space);
        r.add_term(m, c);
        return r;
    }

    const SpaceSpec& space() const { return space_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, ins] = terms_.try_emplace(m, c);
        if (!ins) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    CohClass& operator+=(const CohClass& o) {
        check_space(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    CohClass& operator-=(const CohClass& o) {
        check_space(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    CohClass& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }
    friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
    friend CohClass operator-(CohClass a, const CohClass& b) { return a -= b; }
    friend CohClass operator*(CohClass a, const Rational& s) { return a *= s; }
    friend CohClass operator*(const Rational& s, CohClass a) { return a *= s; }
    CohClass operator-() const { return *this * Rational(-1); }

    friend bool operator==(const CohClass& a, const CohClass& b) {
        return a.space_ == b.space_ && a.terms_ == b.terms_;
    }

    /// Sum of the terms of total degree k.
    CohClass degree_part(int k) const {
        CohClass r(space_);
        for (const auto& [m, c] : terms_)
            if (m.degree() == k) r.terms_.emplace(m, c);
        return r;
    }

    /// Degree if homogeneous, -1 for the zero class, -2 if mixed.
    int degree() const {
        if (terms_.empty()) return -1;
        int d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return -2;
        return d;
    }
    bool is_homogeneous() const { return degree() != -2; }

    void check_space(const CohClass& o) const {
        if (!(space_ == o.space_))
            throw std::invalid_argument("incompatible spaces: " + space_.str() + " vs " + o.space_.str());
    }

private:
    SpaceSpec space_;
    Terms terms_;
};

/// Koszul sign for (a_1 x ... x a_k)(b_1 x ... x b_k) -> prod (a_i b_i).
inline int koszul_sign(const Monomial& a, const Monomial& b) {
    int parity = 0;
    int b_odd_before = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].degree() & 1) parity += b_odd_before;
        if (b[i].degree() & 1) ++b_odd_before;
    }
    return (parity & 1) ? -1 : 1;
}

inline std::vector<const FactorRing*> factor_rings(const SpaceSpec& space) {
    std::vector<const FactorRing*> r;
    for (const auto& f : space.factors) r.push_back(&factor_ring(f));
    return r;
}

/// Product of two normal-form monomials as a list of normal-form terms.
inline std::vector<std::pair<Monomial, long long>> mul_monomials(const std::vector<const FactorRing*>& rings,
                                                                 const Monomial& a, const Monomial& b) {
    std::vector<std::pair<Monomial, long long>> acc{{Monomial(rings.size()), koszul_sign(a, b)}};
    for (std::size_t i = 0; i < rings.size(); ++i) {
        FactorTerms t = rings[i]->mul(a[i], b[i]);
        if (t.empty()) return {};
        std::vector<std::pair<Monomial, long long>> next;
        next.reserve(acc.size() * t.size());
        for (const auto& [m, c] : acc)
            for (const auto& [fm, fc] : t) {
                Monomial m2 = m;
                m2[i] = fm;
                next.emplace_back(m2, checked_mul(c, fc));
            }
        acc = std::move(next);
    }
    return acc;
}

inline std::vector<std::pair<Monomial, long long>> mul_monomials(const SpaceSpec& space, const Monomial& a,
                                                                 const Monomial& b) {
    return mul_monomials(factor_rings(space), a, b);
}

/// Product restricted to the pairs of terms accepted by keep(ma, mb); used to extract a
/// Kunneth component without forming the full product.
template <class Keep>
CohClass mul_where(const CohClass& a, const CohClass& b, Keep&& keep) {
    a.check_space(b);
    CohClass r(a.space());
    auto rings = factor_rings(a.space());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            if (!keep(ma, mb)) continue;
            Rational cab = ca * cb;
            for (const auto& [m, c] : mul_monomials(rings, ma, mb)) r.add_term(m, cab * Rational(c));
        }
    return r;
}

inline CohClass mul(const CohClass& a, const CohClass& b) {
    return mul_where(a, b, [](const Monomial&, const Monomial&) { return true; });
}

inline CohClass operator*(const CohClass& a, const CohClass& b) { return mul(a, b); }

inline CohClass pow(const CohClass& a, unsigned e) {
    CohClass r = CohClass::unit(a.space());
    for (unsigned i = 0; i < e; ++i) r = mul(r, a);
    return r;
}

/// Normalizes a raw word of xi indices (any order, repeats allowed) times eta^d on one factor.
inline CohClass normalize(const std::vector<int>& word, int eta, const FactorSpec& f) {
    SpaceSpec space{f};
    CohClass r(space);
    XiMask s = 0;
    for (int i : word) {
        if (i < 1 || i > 2 * f.genus) throw std::out_of_range("xi index out of range: " + std::to_string(i));
        s |= xi_bit(i);
    }
    int sign = word_sign(word);
    if (sign == 0) return r;
    for (const auto& [m, c] : factor_ring(f).normalize(s, eta)) {
        Monomial mm(1);
        mm[0] = m;
        r.add_term(mm, Rational(sign * c));
    }
    return r;
}

/// Re-normalizes every term; the identity on classes built by this library.
inline CohClass normalize(const CohClass& c) {
    CohClass r(c.space());
    for (const auto& [m, coef] : c.terms()) {
        CohClass t = CohClass::unit(c.space()) * coef;
        for (std::size_t i = 0; i < m.size(); ++i) {
            Monomial one(c.space().size());
            CohClass piece(c.space());
            for (const auto& [fm, fc] : factor_ring(c.space()[i]).normalize(m[i].xi, m[i].eta)) {
                Monomial mm = one;
                mm[i] = fm;
                piece.add_term(mm, Rational(fc));
            }
            t = mul(t, piece);
        }
        r += t;
    }
    return r;
}

/// Generator classes on factor k (0-based) of a product space.
inline Monomial unit_monomial(const SpaceSpec& space) { return Monomial(space.size()); }

inline CohClass gen_xi(const SpaceSpec& space, std::size_t k, int i) {
    const auto& f = space.at_checked(k);
    if (i < 1 || i > 2 * f.genus) throw std::out_of_range("xi index out of range: " + std::to_string(i));
    CohClass r(space);
    for (const auto& [fm, c] : factor_ring(f).normalize(xi_bit(i), 0)) {
        Monomial m(space.size());
        m[k] = fm;
        r.add_term(m, Rational(c));
    }
    return r;
}

inline CohClass gen_eta(const SpaceSpec& space, std::size_t k) {
    const auto& f = space.at_checked(k);
    if (!f.is_sym()) throw std::invalid_argument("eta is not defined on " + f.str());
    CohClass r(space);
    for (const auto& [fm, c] : factor_ring(f).normalize(0, 1)) {
        Monomial m(space.size());
        m[k] = fm;
        r.add_term(m, Rational(c));
    }
    return r;
}

inline CohClass gen_sigma(const SpaceSpec& space, std::size_t k, int i) {
    const auto& f = space.at_checked(k);
    if (i < 1 || i > f.genus) throw std::out_of_range("sigma index out of range: " + std::to_string(i));
    return mul(gen_xi(space, k, i), gen_xi(space, k, i + f.genus));
}

inline CohClass gen_theta(const SpaceSpec& space, std::size_t k) {
    const auto& f = space.at_checked(k);
    CohClass r(space);
    for (int i = 1; i <= f.genus; ++i) r += gen_sigma(space, k, i);
    return r;
}

/// Basis of H^k(C^(n)) for a genus g curve.
inline std::vector<FactorMonomial> basis(int g, int n, int k) {
    return factor_ring(FactorSpec::sym(g, n)).basis(k);
}

/// Basis of H^k of a product space (all multidegrees), in lexicographic monomial order.
inline std::vector<Monomial> basis(const SpaceSpec& space, int k) {
    std::vector<Monomial> out;
    Monomial cur(space.size());
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i == space.size()) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (int d = 0; d <= std::min(left, space[i].top_degree()); ++d)
            for (const auto& fm : factor_ring(space[i]).basis(d)) {
                cur[i] = fm;
                self(self, i + 1, left - d);
            }
    };
    rec(rec, 0, k);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<long long> betti_sym(int g, int n) {
    std::vector<long long> out;
    const auto& ring = factor_ring(FactorSpec::sym(g, n));
    for (int k = 0; k <= 2 * n; ++k) out.push_back(static_cast<long long>(ring.basis(k).size()));
    return out;
}

inline std::vector<long long> betti(const FactorSpec& f) {
    std::vector<long long> out;
    const auto& ring = factor_ring(f);
    for (int k = 0; k <= f.top_degree(); ++k) out.push_back(static_cast<long long>(ring.basis(k).size()));
    return out;
}

struct IntegralReport {
    Rational value;
    bool non_top_degree = false;  // some term was below top degree and was ignored
};

inline IntegralReport integrate_report(const CohClass& c) {
    IntegralReport rep;
    int top = c.space().top_degree();
    for (const auto& [m, coef] : c.terms()) {
        if (m.degree() != top) {
            rep.non_top_degree = true;
            continue;
        }
        long long v = 1;
        for (std::size_t i = 0; i < m.size() && v; ++i) v *= factor_ring(c.space()[i]).integrate(m[i]);
        if (v) rep.value += coef * Rational(v);
    }
    return rep;
}

inline Rational integrate(const CohClass& c) { return integrate_report(c).value; }

}  // namespace symcoh
