#pragma once

#include "symcoh/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace symcoh {

/// Dense rational matrix, row-major.
class MatrixQ {
public:
    MatrixQ() = default;
    MatrixQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static MatrixQ identity(std::size_t n) {
        MatrixQ m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    friend bool operator==(const MatrixQ& x, const MatrixQ& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    friend MatrixQ operator*(const MatrixQ& x, const MatrixQ& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("matrix shape mismatch");
        MatrixQ r(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const Rational& v = x(i, k);
                if (v.is_zero()) continue;
                for (std::size_t j = 0; j < y.cols_; ++j)
                    if (!y(k, j).is_zero()) r(i, j) += v * y(k, j);
            }
        return r;
    }

    MatrixQ transpose() const {
        MatrixQ t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

struct Rref {
    MatrixQ m;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form by Gauss-Jordan elimination.
inline Rref rref(MatrixQ m) {
    Rref out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rational inv = Rational(1) / m(r, c);
        std::vector<std::size_t> nz;
        for (std::size_t j = c; j < m.cols(); ++j)
            if (!m(r, j).is_zero()) {
                m(r, j) *= inv;
                nz.push_back(j);
            }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Rational f = m(i, c);
            for (std::size_t j : nz) m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.m = std::move(m);
    return out;
}

inline std::size_t rank(const MatrixQ& m) { return rref(m).pivots.size(); }

inline std::optional<MatrixQ> inverse(const MatrixQ& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    std::size_t n = m.rows();
    MatrixQ aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    Rref r = rref(std::move(aug));
    if (r.pivots.size() < n || r.pivots[n - 1] != n - 1) return std::nullopt;
    MatrixQ inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.m(i, n + j);
    return inv;
}

/// Basis of the null space, one column vector per entry.
inline std::vector<std::vector<Rational>> nullspace(const MatrixQ& m) {
    Rref r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : r.pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> out;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.m(i, f);
        out.push_back(std::move(v));
    }
    return out;
}

/// A rational matrix with labeled bases; the matrix is codomain x domain.
struct LinearMapQ {
    std::string name;
    std::vector<std::string> domain;
    std::vector<std::string> codomain;
    MatrixQ matrix;

    LinearMapQ() = default;
    LinearMapQ(std::string n, std::vector<std::string> dom, std::vector<std::string> cod)
        : name(std::move(n)), domain(std::move(dom)), codomain(std::move(cod)),
          matrix(codomain.size(), domain.size()) {}

    std::size_t rank() const { return symcoh::rank(matrix); }
    std::size_t kernel_dim() const { return domain.size() - rank(); }
    std::size_t cokernel_dim() const { return codomain.size() - rank(); }
    bool is_surjective() const { return rank() == codomain.size(); }
    bool is_injective() const { return rank() == domain.size(); }
};

/// Incrementally maintained fully reduced echelon basis of a span of sparse vectors.
/// Reduction of a vector against it gives a canonical representative of its class in the quotient.
template <class Key, class Cmp = std::less<Key>>
class SparseEchelon {
public:
    using Vec = std::map<Key, Rational, Cmp>;

    std::size_t rank() const { return rows_.size(); }

    /// Reduces v modulo the span.
    Vec reduce(Vec v) const {
        for (const auto& [pivot, row] : rows_) {
            auto it = v.find(pivot);
            if (it == v.end()) continue;
            Rational f = it->second;
            axpy(v, -f, row);
        }
        return v;
    }

    /// Adds v to the span; returns false if it was already in the span.
    bool add(const Vec& v0) {
        Vec v = reduce(v0);
        if (v.empty()) return false;
        Key pivot = v.begin()->first;
        Rational inv = Rational(1) / v.begin()->second;
        for (auto& [k, c] : v) c *= inv;
        for (auto& [p, row] : rows_) {
            auto it = row.find(pivot);
            if (it == row.end()) continue;
            Rational f = it->second;
            axpy(row, -f, v);
        }
        rows_.emplace(pivot, std::move(v));
        return true;
    }

    bool contains(const Vec& v) const { return reduce(v).empty(); }

    static void axpy(Vec& y, const Rational& a, const Vec& x) {
        for (const auto& [k, c] : x) {
            auto [it, inserted] = y.try_emplace(k, a * c);
            if (!inserted) {
                it->second += a * c;
                if (it->second.is_zero()) y.erase(it);
            }
        }
    }

private:
    std::map<Key, Vec, Cmp> rows_;
};

}  // namespace symcoh
