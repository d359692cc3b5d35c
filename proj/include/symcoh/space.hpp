#pragma once

#include <cctype>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace symcoh {

enum class FactorKind { SymCurve, AbelianTorus };

/// One factor of a product space: C^(n) for a genus g curve, or a g-dimensional abelian variety.
struct FactorSpec {
    FactorKind kind = FactorKind::SymCurve;
    int genus = 1;
    int exponent = 0;  // SymCurve only

    static FactorSpec sym(int g, int n) {
        if (g < 1 || g > 31) throw std::invalid_argument("genus out of range: " + std::to_string(g));
        if (n < 0) throw std::invalid_argument("negative exponent");
        return {FactorKind::SymCurve, g, n};
    }
    static FactorSpec ab(int g) {
        if (g < 1 || g > 31) throw std::invalid_argument("genus out of range: " + std::to_string(g));
        return {FactorKind::AbelianTorus, g, 0};
    }

    bool is_sym() const { return kind == FactorKind::SymCurve; }
    /// Complex dimension.
    int dim() const { return is_sym() ? exponent : genus; }
    int top_degree() const { return 2 * dim(); }

    std::string str() const {
        return is_sym() ? "sym(" + std::to_string(genus) + "," + std::to_string(exponent) + ")"
                        : "ab(" + std::to_string(genus) + ")";
    }

    auto operator<=>(const FactorSpec&) const = default;
};

struct SpaceSpec {
    std::vector<FactorSpec> factors;

    SpaceSpec() = default;
    explicit SpaceSpec(std::vector<FactorSpec> f) : factors(std::move(f)) {
        if (factors.empty()) throw std::invalid_argument("empty space");
        if (factors.size() > 8) throw std::invalid_argument("at most 8 factors supported");
    }
    SpaceSpec(std::initializer_list<FactorSpec> f) : SpaceSpec(std::vector<FactorSpec>(f)) {}

    std::size_t size() const { return factors.size(); }
    const FactorSpec& operator[](std::size_t i) const { return factors[i]; }
    const FactorSpec& at_checked(std::size_t i) const {
        if (i >= factors.size())
            throw std::out_of_range("factor index " + std::to_string(i + 1) + " out of range for " + str());
        return factors[i];
    }
    int top_degree() const {
        int t = 0;
        for (const auto& f : factors) t += f.top_degree();
        return t;
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) s += " x ";
            s += factors[i].str();
        }
        return s;
    }

    auto operator<=>(const SpaceSpec&) const = default;
};

/// Parses `sym(g,n)` and `ab(g)` joined by `x`, e.g. "sym(5,3) x sym(5,4)".
inline SpaceSpec parse_space(const std::string& text) {
    std::size_t i = 0;
    auto skip = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("bad space '" + text + "' at column " + std::to_string(i + 1) + ": " + what);
    };
    auto expect = [&](char c) {
        skip();
        if (i >= text.size() || text[i] != c) fail(std::string("expected '") + c + "'");
        ++i;
    };
    auto number = [&] {
        skip();
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) fail("expected integer");
        return std::stoi(text.substr(start, i - start));
    };
    std::vector<FactorSpec> out;
    while (true) {
        skip();
        if (text.compare(i, 3, "sym") == 0) {
            i += 3;
            expect('(');
            int g = number();
            expect(',');
            int n = number();
            expect(')');
            out.push_back(FactorSpec::sym(g, n));
        } else if (text.compare(i, 2, "ab") == 0) {
            i += 2;
            expect('(');
            int g = number();
            expect(')');
            out.push_back(FactorSpec::ab(g));
        } else {
            fail("expected sym(g,n) or ab(g)");
        }
        skip();
        if (i == text.size()) break;
        if (text[i] != 'x') fail("expected 'x' between factors");
        ++i;
    }
    return SpaceSpec(std::move(out));
}

}  // namespace symcoh
