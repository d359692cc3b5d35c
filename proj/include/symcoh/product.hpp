#pragma once

#include "symcoh/ring.hpp"

#include <stdexcept>
#include <vector>

namespace symcoh {

using MultiDegree = std::vector<int>;

inline MultiDegree multidegree(const Monomial& m) {
    MultiDegree md(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) md[i] = m[i].degree();
    return md;
}

/// Pulls a class on a sub-product back along the projection onto the factors `positions`
/// (0-based, distinct). The source factors are placed in the given order.
inline CohClass place(const CohClass& c, const SpaceSpec& target, const std::vector<std::size_t>& positions) {
    const SpaceSpec& src = c.space();
    if (positions.size() != src.size()) throw std::invalid_argument("placement arity mismatch");
    std::vector<bool> used(target.size(), false);
    for (std::size_t j = 0; j < positions.size(); ++j) {
        std::size_t p = positions[j];
        if (p >= target.size()) throw std::out_of_range("factor index out of range");
        if (used[p]) throw std::invalid_argument("factor used twice in placement");
        used[p] = true;
        if (!(target[p] == src[j]))
            throw std::invalid_argument("factor mismatch: " + src[j].str() + " vs " + target[p].str());
    }
    CohClass r(target);
    for (const auto& [m, coef] : c.terms()) {
        Monomial out(target.size());
        int inv = 0;
        for (std::size_t j = 0; j < m.size(); ++j) {
            out[positions[j]] = m[j];
            if (!(m[j].degree() & 1)) continue;
            for (std::size_t k = j + 1; k < m.size(); ++k)
                if ((m[k].degree() & 1) && positions[k] < positions[j]) ++inv;
        }
        r.add_term(out, (inv & 1) ? -coef : coef);
    }
    return r;
}

/// omega -> omega_k: pullback of a single-factor class to factor k (0-based).
inline CohClass inject(const CohClass& c, const SpaceSpec& target, std::size_t k) {
    if (c.space().size() != 1) throw std::invalid_argument("inject expects a single-factor class");
    return place(c, target, {k});
}

/// delta_kl = sum_i (xi_{k,i} xi'_{l,i} + xi_{l,i} xi'_{k,i}) for factors k != l (0-based).
inline CohClass delta(const SpaceSpec& space, std::size_t k, std::size_t l) {
    if (k == l) throw std::invalid_argument("delta needs two distinct factors");
    const auto& fk = space.at_checked(k);
    const auto& fl = space.at_checked(l);
    if (fk.genus != fl.genus) throw std::invalid_argument("genus mismatch in delta");
    int g = fk.genus;
    CohClass r(space);
    for (int i = 1; i <= g; ++i) {
        r += mul(gen_xi(space, k, i), gen_xi(space, l, i + g));
        r += mul(gen_xi(space, l, i), gen_xi(space, k, i + g));
    }
    return r;
}

inline CohClass kunneth_component(const CohClass& c, const MultiDegree& md) {
    if (md.size() != c.space().size()) throw std::invalid_argument("multidegree length mismatch");
    CohClass r(c.space());
    for (const auto& [m, coef] : c.terms())
        if (multidegree(m) == md) r.add_term(m, coef);
    return r;
}

/// Restriction to the terms whose degree on factor k is d.
inline CohClass factor_degree_part(const CohClass& c, std::size_t k, int d) {
    CohClass r(c.space());
    for (const auto& [m, coef] : c.terms())
        if (m[k].degree() == d) r.add_term(m, coef);
    return r;
}

/// dim H^m of a product space from the factor Betti numbers.
inline long long kunneth_dimension(const SpaceSpec& space, int m) {
    std::vector<long long> acc{1};
    for (const auto& f : space.factors) {
        auto b = betti(f);
        std::vector<long long> next(acc.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < acc.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) next[i + j] += acc[i] * b[j];
        acc = std::move(next);
    }
    return (m >= 0 && static_cast<std::size_t>(m) < acc.size()) ? acc[m] : 0;
}

/// Splits a class into (monomial on factor k) x (rest), keyed by the rest.
/// Used for factor-wise linear maps; the sign is untouched because we keep positions.
template <class F>
CohClass apply_on_factor(const CohClass& c, std::size_t k, const SpaceSpec& target, F&& fn) {
    // fn(FactorMonomial) -> CohClass on SpaceSpec{target[k]}, degree-preserving parity
    CohClass r(target);
    for (const auto& [m, coef] : c.terms()) {
        CohClass img = fn(m[k]);
        for (const auto& [fm, fc] : img.terms()) {
            if ((fm[0].degree() & 1) != (m[k].degree() & 1))
                throw std::logic_error("apply_on_factor: parity-changing map");
            Monomial out = m;
            out[k] = fm[0];
            r.add_term(out, coef * fc);
        }
    }
    return r;
}

}  // namespace symcoh
