#pragma once

#include "symcoh/constants.hpp"
#include "symcoh/expr.hpp"
#include "symcoh/linalg.hpp"
#include "symcoh/ring.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symcoh {

using BettiRow = std::vector<long long>;

// ---------------------------------------------------------------------------
// Leray and blow-up Betti numbers

struct FibrationSpec {
    int base_genus = 0;
    BettiRow fiber_betti{1};
    std::vector<std::pair<int, long long>> corrections;  // (q, count): skyscraper R^q summands
};

/// Betti numbers of a fibration over a smooth curve whose higher direct images are constant
/// sheaves plus skyscrapers. Skyscrapers contribute to H^0 of the base only.
inline BettiRow leray_curve_betti(const FibrationSpec& f) {
    if (f.fiber_betti.empty() || f.fiber_betti[0] != 1) throw std::invalid_argument("fiber_betti[0] must be 1");
    if (f.base_genus < 0) throw std::invalid_argument("negative base genus");
    BettiRow base{1, 2LL * f.base_genus, 1};
    std::size_t top = f.fiber_betti.size() + 2;
    for (const auto& [q, n] : f.corrections)
        if (q < 0) throw std::invalid_argument("negative correction degree");
        else top = std::max(top, static_cast<std::size_t>(q) + 1);
    BettiRow h(top, 0);
    for (std::size_t p = 0; p < base.size(); ++p)
        for (std::size_t q = 0; q < f.fiber_betti.size(); ++q) h[p + q] += base[p] * f.fiber_betti[q];
    for (const auto& [q, n] : f.corrections) h[q] += n;
    while (h.size() > 1 && h.back() == 0) h.pop_back();
    return h;
}

/// h^k(blow-up) = h^k(ambient) + sum_{j=1}^{codim-1} h^{k-2j}(center).
inline BettiRow blowup_betti(const BettiRow& ambient, const BettiRow& center, int codim) {
    if (codim < 2) throw std::invalid_argument("blowup_betti: codim must be >= 2");
    BettiRow h = ambient;
    for (int j = 1; j < codim; ++j)
        for (std::size_t k = 0; k < center.size(); ++k) {
            std::size_t at = k + 2 * static_cast<std::size_t>(j);
            if (at >= h.size()) h.resize(at + 1, 0);
            h[at] += center[k];
        }
    return h;
}

inline long long euler_number(const BettiRow& b) {
    long long e = 0;
    for (std::size_t k = 0; k < b.size(); ++k) e += (k % 2 ? -1 : 1) * b[k];
    return e;
}

// ---------------------------------------------------------------------------
// SNC model and the Mayer-Vietoris E_1 page

struct ModelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Summand {
    std::string label;
    int degree = 0;
    std::size_t dim = 0;
};

struct Stratum {
    std::string name;
    int codim = 0;    // column p of the E_1 page
    int d1_sign = 1;  // sign of this stratum's restriction maps inside d_1
    std::vector<Summand> summands;
};

/// A block of d_1 between two summands; the matrix is codomain x domain and excludes d1_sign.
struct Block {
    std::string from, to;  // "stratum/label"
    std::string rule;
    MatrixQ matrix;
    std::string note;
    // restriction blocks only
    std::optional<std::size_t> declared_rank;
};

struct SNCModel {
    std::string name;
    std::vector<int> degrees;  // degrees for which every stratum is complete
    std::vector<Stratum> strata;
    std::vector<Block> blocks;

    const Summand& summand(const std::string& key) const {
        auto slash = key.find('/');
        if (slash == std::string::npos) throw ModelError("bad summand key '" + key + "'");
        std::string s = key.substr(0, slash), l = key.substr(slash + 1);
        for (const auto& st : strata)
            if (st.name == s)
                for (const auto& m : st.summands)
                    if (m.label == l) return m;
        throw ModelError("unknown summand '" + key + "'");
    }
    const Stratum& stratum_of(const std::string& key) const {
        std::string s = key.substr(0, key.find('/'));
        for (const auto& st : strata)
            if (st.name == s) return st;
        throw ModelError("unknown stratum '" + s + "'");
    }
    bool has_degree(int q) const { return std::find(degrees.begin(), degrees.end(), q) != degrees.end(); }
    int max_codim() const {
        int p = 0;
        for (const auto& s : strata) p = std::max(p, s.codim);
        return p;
    }
};

namespace detail {

/// Block for a restriction p^*w: entry j is the integral of basis_j times the cycle class.
inline MatrixQ restriction_row(const std::string& space_text, const std::string& cycle, int degree) {
    SpaceSpec s = parse_space(space_text);
    if (s.size() != 1) throw ModelError("restriction block needs a single-factor space");
    CohClass z = evaluate_class(cycle, s);
    auto basis = factor_ring(s[0]).basis(degree);
    MatrixQ m(1, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        Monomial mono(1);
        mono[0] = basis[j];
        m(0, j) = integrate(mul(CohClass::monomial(s, mono), z));
    }
    return m;
}

inline MatrixQ block_matrix(const std::string& rule, std::size_t rows, std::size_t cols) {
    MatrixQ m(rows, cols);
    if (rule == "zero") return m;
    if (rule == "iso" || rule == "sign-iso") {
        if (rows != cols) throw ModelError(rule + " block between summands of dimensions " + std::to_string(cols) +
                                           " and " + std::to_string(rows));
        for (std::size_t i = 0; i < rows; ++i) m(i, i) = rule == "iso" ? 1 : -1;
        return m;
    }
    if (rule == "injective") {
        if (cols > rows) throw ModelError("injective block from dimension " + std::to_string(cols) + " into " +
                                          std::to_string(rows));
        for (std::size_t i = 0; i < cols; ++i) m(i, i) = 1;
        return m;
    }
    throw ModelError("unknown block rule '" + rule + "'");
}

}  // namespace detail

inline SNCModel parse_snc_model(const nlohmann::json& j) {
    SNCModel model;
    model.name = j.value("name", "");
    model.degrees = j.at("degrees").get<std::vector<int>>();
    std::set<std::string> seen;
    for (const auto& s : j.at("strata")) {
        Stratum st{s.at("name").get<std::string>(), s.at("codim").get<int>(), s.value("d1_sign", 1), {}};
        if (st.codim < 0) throw ModelError("negative codim for stratum " + st.name);
        for (const auto& m : s.at("summands")) {
            Summand sm{m.at("label").get<std::string>(), m.at("degree").get<int>(), m.at("dim").get<std::size_t>()};
            if (!seen.insert(st.name + "/" + sm.label).second)
                throw ModelError("summand listed twice: " + st.name + "/" + sm.label);
            st.summands.push_back(sm);
        }
        model.strata.push_back(std::move(st));
    }
    for (const auto& b : j.value("blocks", nlohmann::json::array())) {
        Block blk;
        blk.from = b.at("from").get<std::string>();
        blk.to = b.at("to").get<std::string>();
        blk.rule = b.at("rule").get<std::string>();
        blk.note = b.value("note", "");
        const Summand& src = model.summand(blk.from);
        const Summand& dst = model.summand(blk.to);
        if (src.degree != dst.degree)
            throw ModelError("inconsistent blocks: " + blk.from + " -> " + blk.to + " changes degree");
        if (model.stratum_of(blk.to).codim != model.stratum_of(blk.from).codim + 1)
            throw ModelError("inconsistent blocks: " + blk.from + " -> " + blk.to + " does not raise codim by one");
        if (blk.rule == "matrix") {
            const auto& rows = b.at("rows");
            blk.matrix = MatrixQ(rows.size(), rows.empty() ? 0 : rows[0].size());
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (rows[r].size() != blk.matrix.cols()) throw ModelError("ragged matrix in block " + blk.from);
                for (std::size_t c = 0; c < rows[r].size(); ++c) blk.matrix(r, c) = json_rational(rows[r][c]);
            }
        } else if (blk.rule == "restriction") {
            blk.matrix = detail::restriction_row(b.at("space").get<std::string>(), b.at("class").get<std::string>(),
                                                 src.degree);
            if (b.contains("declared_rank")) blk.declared_rank = b.at("declared_rank").get<std::size_t>();
        } else {
            blk.matrix = detail::block_matrix(blk.rule, dst.dim, src.dim);
        }
        if (blk.matrix.rows() != dst.dim || blk.matrix.cols() != src.dim)
            throw ModelError("inconsistent blocks: " + blk.from + " -> " + blk.to + " has shape " +
                             std::to_string(blk.matrix.rows()) + "x" + std::to_string(blk.matrix.cols()) +
                             ", expected " + std::to_string(dst.dim) + "x" + std::to_string(src.dim));
        model.blocks.push_back(std::move(blk));
    }
    return model;
}

inline SNCModel load_snc_model(const std::string& path) { return parse_snc_model(read_json(path)); }

/// The shipped model of the central fiber M1 + M2.
inline const SNCModel& theta_tilde_0() {
    static const SNCModel m = load_snc_model(data_path("theta_tilde_0.json"));
    return m;
}

/// E_1^{p,q} with its labeled basis: one label per basis vector.
inline std::vector<std::string> e1_basis(const SNCModel& model, int p, int q) {
    std::vector<std::string> out;
    for (const auto& st : model.strata) {
        if (st.codim != p) continue;
        for (const auto& s : st.summands)
            if (s.degree == q)
                for (std::size_t i = 0; i < s.dim; ++i)
                    out.push_back(st.name + "/" + s.label + (s.dim > 1 ? "[" + std::to_string(i + 1) + "]" : ""));
    }
    return out;
}

inline std::size_t e1_dim(const SNCModel& model, int p, int q) {
    std::size_t n = 0;
    for (const auto& st : model.strata)
        if (st.codim == p)
            for (const auto& s : st.summands)
                if (s.degree == q) n += s.dim;
    return n;
}

/// d_1 : E_1^{p,q} -> E_1^{p+1,q}, assembled from the blocks with the stratum signs.
inline LinearMapQ d1_map(const SNCModel& model, int p, int q) {
    LinearMapQ map("d1^{" + std::to_string(p) + "," + std::to_string(q) + "}", e1_basis(model, p, q),
                   e1_basis(model, p + 1, q));
    auto offset = [&](int col, const std::string& key) -> std::optional<std::size_t> {
        std::size_t off = 0;
        for (const auto& st : model.strata) {
            if (st.codim != col) continue;
            for (const auto& s : st.summands) {
                if (s.degree != q) continue;
                if (st.name + "/" + s.label == key) return off;
                off += s.dim;
            }
        }
        return std::nullopt;
    };
    for (const auto& b : model.blocks) {
        auto src = offset(p, b.from);
        auto dst = offset(p + 1, b.to);
        if (!src || !dst) continue;
        Rational sign(model.stratum_of(b.from).d1_sign);
        for (std::size_t r = 0; r < b.matrix.rows(); ++r)
            for (std::size_t c = 0; c < b.matrix.cols(); ++c)
                if (!b.matrix(r, c).is_zero()) map.matrix(*dst + r, *src + c) += sign * b.matrix(r, c);
    }
    return map;
}

/// Dimensions of Gr^W_k H^m, keyed by k.
struct GradedDims {
    int m = 0;
    std::map<int, long long> gr;

    long long at(int k) const {
        auto it = gr.find(k);
        return it == gr.end() ? 0 : it->second;
    }
    long long total() const {
        long long t = 0;
        for (const auto& [k, v] : gr) t += v;
        return t;
    }
};

/// E_2^{p,q} = ker d_1^{p,q} / im d_1^{p-1,q}.
inline long long e2_dim(const SNCModel& model, int p, int q) {
    if (p < 0 || p > model.max_codim()) return 0;
    std::size_t n = e1_dim(model, p, q);
    if (n == 0) return 0;
    if (!model.has_degree(q)) throw ModelError("model does not cover degree " + std::to_string(q));
    std::size_t out = d1_map(model, p, q).rank();
    std::size_t in = p > 0 ? d1_map(model, p - 1, q).rank() : 0;
    if (in + out > n) throw ModelError("inconsistent blocks: d1 o d1 != 0 in degree " + std::to_string(q));
    return static_cast<long long>(n - in - out);
}

/// Checks d_1 o d_1 = 0 in degree q.
inline bool d1_squares_to_zero(const SNCModel& model, int q) {
    for (int p = 0; p + 1 < model.max_codim(); ++p) {
        MatrixQ prod = d1_map(model, p + 1, q).matrix * d1_map(model, p, q).matrix;
        for (std::size_t i = 0; i < prod.rows(); ++i)
            for (std::size_t j = 0; j < prod.cols(); ++j)
                if (!prod(i, j).is_zero()) return false;
    }
    return true;
}

/// Gr_k H^m(Y_0) = E_2^{m-k,k}; the spectral sequence degenerates at E_2.
inline GradedDims mv_e2(const SNCModel& model, int m) {
    GradedDims g;
    g.m = m;
    for (int k = std::max(0, m - model.max_codim()); k <= m; ++k) {
        if (!d1_squares_to_zero(model, k)) throw ModelError("inconsistent blocks: d1 o d1 != 0 in degree " + std::to_string(k));
        long long d = e2_dim(model, m - k, k);
        if (d) g.gr[k] = d;
    }
    return g;
}

/// Euler characteristic of the E_1 page over the listed degrees.
inline long long e1_euler(const SNCModel& model) {
    long long e = 0;
    for (int q : model.degrees)
        for (int p = 0; p <= model.max_codim(); ++p)
            e += ((p + q) % 2 ? -1 : 1) * static_cast<long long>(e1_dim(model, p, q));
    return e;
}

struct BlockCheck {
    std::string from, to;
    std::size_t computed_rank = 0;
    std::size_t declared_rank = 0;
    bool ok() const { return computed_rank == declared_rank; }
};

/// Restriction blocks computed by the ring engine against their declared ranks.
inline std::vector<BlockCheck> check_restriction_blocks(const SNCModel& model) {
    std::vector<BlockCheck> out;
    for (const auto& b : model.blocks)
        if (b.declared_rank) out.push_back({b.from, b.to, rank(b.matrix), *b.declared_rank});
    return out;
}

/// j_1^* - j_2^* on H^4(M1) + H^4(M2) -> H^4(M12) for the shipped model.
inline LinearMapQ d1_degree4_blocks() { return d1_map(theta_tilde_0(), 0, 4); }

/// Restriction of one stratum alone (j_k^* for k = 1, 2) in degree q.
inline LinearMapQ stratum_restriction(const SNCModel& model, const std::string& stratum, int q) {
    SNCModel one = model;
    for (auto& st : one.strata)
        if (st.codim == 0 && st.name != stratum)
            for (auto& s : st.summands)
                if (s.degree == q) s.dim = 0;
    std::erase_if(one.blocks, [&](const Block& b) { return one.summand(b.from).dim == 0; });
    LinearMapQ m = d1_map(one, 0, q);
    m.name = "j^* from " + stratum;
    return m;
}

// ---------------------------------------------------------------------------
// Clemens-Schmid

/// Graded pieces of H^4 of the general fiber: Gr_k unchanged for k <= 3, Gr_4 drops by h^2(M12)
/// (the image of H^2(M12) in Gr_4 H^4(Y_0)), Gr_{8-k} = Gr_k.
inline GradedDims clemens_schmid_gr(const GradedDims& h4, long long h2_m12) {
    if (h4.m != 4) throw std::invalid_argument("clemens_schmid_gr expects graded pieces of H^4");
    GradedDims t;
    t.m = 4;
    for (int k = 0; k <= 3; ++k)
        if (h4.at(k)) t.gr[k] = h4.at(k);
    long long g4 = h4.at(4) - h2_m12;
    if (g4 < 0) throw std::invalid_argument("h^2(M12) exceeds Gr_4");
    if (g4) t.gr[4] = g4;
    for (int k = 0; k <= 3; ++k)
        if (h4.at(k)) t.gr[8 - k] = h4.at(k);
    return t;
}

/// h^m of a smooth theta divisor for m below its middle degree: C(2g, m).
inline long long theta_low_betti(int g, int m) { return binomial(2 * g, m).to_int(); }

/// rank of the primitive part: g! - C(2g, g) / (g + 1).
inline long long primitive_rank(int g) {
    Rational r = factorial(g) - binomial(2 * g, g) / Rational(g + 1);
    return r.to_int();
}

// ---------------------------------------------------------------------------
// Strata table

struct StrataRow {
    std::string name;
    BettiRow betti;
};

inline constexpr int kW14Genus = 11;

inline BettiRow quadric3_betti() { return {1, 0, 1, 0, 1, 0, 1}; }
/// Rank 4 quadric cone in P^4; taken as given.
inline BettiRow quadric3_sing_betti() { return {1, 0, 1, 0, 2, 0, 1}; }

inline std::vector<StrataRow> strata_table() {
    BettiRow c14 = leray_curve_betti({kW14Genus, {1, 0, 1}, {}});
    BettiRow c4 = betti_sym(5, 4);
    std::vector<StrataRow> rows{
        {"C14", c14},
        {"C(4)", c4},
        {"M1", blowup_betti(c4, c14, 2)},
        {"Q3", quadric3_betti()},
        {"Q3sing", quadric3_sing_betti()},
        {"M12", leray_curve_betti({kW14Genus, {1, 0, 2, 0, 1}, {}})},
        // ten singular fibers each add one class in degree 4
        {"M2", leray_curve_betti({kW14Genus, quadric3_betti(), {{4, 10}}})},
    };
    for (auto& r : rows) r.betti.resize(9, 0);
    return rows;
}

inline const BettiRow& strata_row(const std::string& name) {
    static const auto rows = strata_table();
    for (const auto& r : rows)
        if (r.name == name) return r.betti;
    throw std::out_of_range("no strata row '" + name + "'");
}

struct DegenerationSummary {
    GradedDims h4_central;
    GradedDims h4_general;
    std::size_t d1_rank_deg3 = 0;
    std::size_t d1_rank_deg4 = 0;
    bool j1_surjective = false, j2_surjective = false;
};

inline DegenerationSummary degeneration_summary() {
    const SNCModel& m = theta_tilde_0();
    DegenerationSummary s;
    s.h4_central = mv_e2(m, 4);
    s.h4_general = clemens_schmid_gr(s.h4_central, strata_row("M12")[2]);
    s.d1_rank_deg3 = d1_map(m, 0, 3).rank();
    s.d1_rank_deg4 = d1_degree4_blocks().rank();
    s.j1_surjective = stratum_restriction(m, "M1", 4).is_surjective();
    s.j2_surjective = stratum_restriction(m, "M2", 4).is_surjective();
    return s;
}

}  // namespace symcoh
