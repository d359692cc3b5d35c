#pragma once

#include "symcoh/ring.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace symcoh {

namespace detail {

inline std::string tag(std::size_t factor, std::size_t nfactors) {
    return nfactors > 1 ? "@" + std::to_string(factor + 1) : "";
}

inline std::string power(const std::string& base, int e) {
    return e == 1 ? base : base + "^" + std::to_string(e);
}

/// Joins signed terms "c*word" into canonical text.
inline std::string join_terms(const std::vector<std::pair<Rational, std::string>>& terms) {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [c, word] : terms) {
        bool neg = c.sign() < 0;
        Rational a = neg ? -c : c;
        if (s.empty()) s += neg ? "-" : "";
        else s += neg ? " - " : " + ";
        if (word.empty()) s += a.str();
        else if (a == 1) s += word;
        else s += a.str() + "*" + word;
    }
    return s;
}

}  // namespace detail

/// Normal-form text: every xi index written as xi(i), i in 1..2g, e.g. "3/2*eta^2 - xi(1)*xi(6)*eta".
/// Terms are ordered by degree (descending), then eta exponent (descending), then xi sets.
inline std::string to_raw_string(const CohClass& c) {
    std::vector<std::pair<Monomial, Rational>> terms(c.terms().begin(), c.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
        if (x.first.degree() != y.first.degree()) return x.first.degree() > y.first.degree();
        for (std::size_t i = 0; i < x.first.size(); ++i) {
            const auto& a = x.first[i];
            const auto& b = y.first[i];
            if (a.eta != b.eta) return a.eta > b.eta;
            if (a.xi != b.xi) return xi_lex_less(a.xi, b.xi);
        }
        return false;
    });
    std::size_t nf = c.space().size();
    std::vector<std::pair<Rational, std::string>> out;
    for (const auto& [m, coef] : terms) {
        std::vector<std::string> parts;
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (int x : xi_indices(m[i].xi)) parts.push_back("xi(" + std::to_string(x) + ")" + detail::tag(i, nf));
            if (m[i].eta) parts.push_back(detail::power("eta" + detail::tag(i, nf), m[i].eta));
        }
        std::string word;
        for (std::size_t k = 0; k < parts.size(); ++k) word += (k ? "*" : "") + parts[k];
        out.emplace_back(coef, word);
    }
    return detail::join_terms(out);
}

namespace detail {

struct PrettyFactor {
    XiMask a = 0, b = 0, c = 0;  // unpaired low, unpaired high (as low indices), sigma set
    int theta = 0;
    int eta = 0;
    auto key() const { return std::tie(a, b, c, theta, eta); }
};

using PrettyWord = std::vector<PrettyFactor>;

inline bool pretty_less(const PrettyWord& x, const PrettyWord& y) {
    auto deg = [](const PrettyWord& w) {
        int d = 0;
        for (const auto& f : w) d += popcount(f.a) + popcount(f.b) + 2 * popcount(f.c) + 2 * f.theta + 2 * f.eta;
        return d;
    };
    if (deg(x) != deg(y)) return deg(x) > deg(y);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const auto& p = x[i];
        const auto& q = y[i];
        if (p.eta != q.eta) return p.eta < q.eta;
        if (p.theta != q.theta) return p.theta > q.theta;
        if (p.a != q.a) return xi_lex_less(p.a, q.a);
        if (p.b != q.b) return xi_lex_less(p.b, q.b);
        if (p.c != q.c) return xi_lex_less(p.c, q.c);
    }
    return false;
}

struct PrettyLess {
    bool operator()(const PrettyWord& x, const PrettyWord& y) const {
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i].key() < y[i].key()) return true;
            if (y[i].key() < x[i].key()) return false;
        }
        return false;
    }
};

}  // namespace detail

/// Readable text: xi'(i) for high indices, sigma(i) for pairs, and theta^k whenever a block of
/// sigma monomials carries one common coefficient. Parses back to the same class.
inline std::string to_pretty_string(const CohClass& c) {
    using namespace detail;
    const SpaceSpec& sp = c.space();
    std::map<PrettyWord, Rational, PrettyLess> cur;
    for (const auto& [m, coef] : c.terms()) {
        PrettyWord w(m.size());
        int sign = 1;
        for (std::size_t i = 0; i < m.size(); ++i) {
            int g = sp[i].genus;
            XiMask low = (XiMask(1) << g) - 1;
            XiMask lo = m[i].xi & low, hi = (m[i].xi >> g) & low;
            XiMask pairs = lo & hi;
            w[i] = {lo & ~pairs, hi & ~pairs, pairs, 0, m[i].eta};
            std::vector<int> word;
            for (int x : xi_indices(w[i].a)) word.push_back(x);
            for (int x : xi_indices(w[i].b)) word.push_back(x + g);
            for (int x : xi_indices(pairs)) {
                word.push_back(x);
                word.push_back(x + g);
            }
            sign *= word_sign(word);
        }
        cur[w] += sign > 0 ? coef : -coef;
    }
    // collapse complete, uniform sigma blocks into theta powers, one factor at a time
    for (std::size_t i = 0; i < sp.size(); ++i) {
        int g = sp[i].genus;
        XiMask low = (XiMask(1) << g) - 1;
        std::map<PrettyWord, std::vector<std::pair<XiMask, Rational>>, PrettyLess> groups;
        std::map<PrettyWord, Rational, PrettyLess> next;
        for (const auto& [w, coef] : cur) {
            if (coef.is_zero()) continue;
            if (w[i].theta != 0 || w[i].c == 0) {
                next[w] += coef;
                continue;
            }
            PrettyWord key = w;
            key[i].c = 0;
            key[i].theta = -popcount(w[i].c);  // marks the block size
            groups[key].emplace_back(w[i].c, coef);
        }
        for (const auto& [key, members] : groups) {
            int k = -key[i].theta;
            XiMask free = low & ~(key[i].a | key[i].b);
            long long expected = 0;
            {
                // number of k-subsets of the free indices
                int f = popcount(free);
                Rational b = binomial(f, k);
                expected = b.to_int();
            }
            bool uniform = static_cast<long long>(members.size()) == expected;
            for (const auto& [cm, v] : members)
                if (v != members.front().second || (cm & ~free)) uniform = false;
            if (uniform) {
                PrettyWord w = key;
                w[i].theta = k;
                next[w] += members.front().second / factorial(k);
            } else {
                for (const auto& [cm, v] : members) {
                    PrettyWord w = key;
                    w[i].theta = 0;
                    w[i].c = cm;
                    next[w] += v;
                }
            }
        }
        cur = std::move(next);
    }
    std::vector<std::pair<PrettyWord, Rational>> terms;
    for (const auto& [w, coef] : cur)
        if (!coef.is_zero()) terms.emplace_back(w, coef);
    std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return pretty_less(x.first, y.first); });
    std::vector<std::pair<Rational, std::string>> out;
    std::size_t nf = sp.size();
    for (const auto& [w, coef] : terms) {
        std::vector<std::string> parts;
        for (std::size_t i = 0; i < w.size(); ++i) {
            std::string t = tag(i, nf);
            for (int x : xi_indices(w[i].a)) parts.push_back("xi(" + std::to_string(x) + ")" + t);
            for (int x : xi_indices(w[i].b)) parts.push_back("xi'(" + std::to_string(x) + ")" + t);
            for (int x : xi_indices(w[i].c)) parts.push_back("sigma(" + std::to_string(x) + ")" + t);
            if (w[i].theta) parts.push_back(power("theta" + t, w[i].theta));
            if (w[i].eta) parts.push_back(power("eta" + t, w[i].eta));
        }
        std::string word;
        for (std::size_t k = 0; k < parts.size(); ++k) word += (k ? "*" : "") + parts[k];
        out.emplace_back(coef, word);
    }
    return join_terms(out);
}

inline nlohmann::json to_json(const CohClass& c) {
    nlohmann::json j;
    j["space"] = c.space().str();
    j["text"] = to_raw_string(c);
    j["terms"] = nlohmann::json::array();
    for (const auto& [m, coef] : c.terms()) {
        nlohmann::json t;
        t["coeff"] = coef.str();
        nlohmann::json fs = nlohmann::json::array();
        for (std::size_t i = 0; i < m.size(); ++i) fs.push_back({{"xi", xi_indices(m[i].xi)}, {"eta", m[i].eta}});
        t["factors"] = fs;
        j["terms"].push_back(t);
    }
    return j;
}

}  // namespace symcoh
