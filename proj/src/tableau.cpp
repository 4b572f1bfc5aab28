#include "waring/tableau.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace waring {

namespace {

constexpr int kMaxCols = 12;
constexpr int kMaxRows = 8;

struct Box {
    int col;
    int row;
};

std::vector<std::array<Box, 3>> label_boxes(const Tableau& t) {
    std::vector<std::array<Box, 3>> boxes(t.nforms());
    std::vector<int> seen(t.nforms(), 0);
    for (int c = 0; c < t.ncols(); ++c)
        for (int r = 0; r < t.nrows(); ++r) {
            const int l = t.columns()[c][r] - 1;
            boxes[l][seen[l]++] = {c, r};
        }
    return boxes;
}

// visit labels so that already-touched columns fill up as fast as possible;
// this is what makes the pruned search feasible on the 30-box filling
std::vector<int> visit_order(const Tableau& t) {
    auto boxes = label_boxes(t);
    std::vector<int> order;
    std::vector<bool> used(t.nforms(), false), col_touched(t.ncols(), false);
    for (int step = 0; step < t.nforms(); ++step) {
        int best = -1, best_overlap = -1;
        for (int l = 0; l < t.nforms(); ++l) {
            if (used[l]) continue;
            int overlap = 0;
            for (const auto& b : boxes[l]) overlap += col_touched[b.col] ? 1 : 0;
            if (overlap > best_overlap) {
                best = l;
                best_overlap = overlap;
            }
        }
        used[best] = true;
        for (const auto& b : boxes[best]) col_touched[b.col] = true;
        order.push_back(best);
    }
    return order;
}

void add_i128(mpz_class& acc, __int128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    mpz_class w(static_cast<unsigned long>(u >> 64));
    w <<= 64;
    w += static_cast<unsigned long>(u);
    if (neg) acc -= w; else acc += w;
}

struct Triple {
    std::uint8_t v[3];
    long long e;
};

struct ContractionDfs {
    int nlabels = 0;
    std::vector<std::array<Box, 3>> boxes;  // by visit order
    std::vector<Triple> triples;
    long long max_nodes = 0, nodes = 0;
    bool aborted = false;
    std::uint16_t mask[kMaxCols] = {};
    std::uint8_t val[kMaxCols][kMaxRows];
    mpz_class acc;

    void run(int depth, int sign, __int128 prod) {
        if (depth == nlabels) {
            add_i128(acc, sign > 0 ? prod : -prod);
            return;
        }
        const auto& bx = boxes[depth];
        for (const auto& t : triples) {
            if (++nodes > max_nodes) {
                aborted = true;
                return;
            }
            if (mask[bx[0].col] & (1u << t.v[0])) continue;
            if (mask[bx[1].col] & (1u << t.v[1])) continue;
            if (mask[bx[2].col] & (1u << t.v[2])) continue;
            int s = sign;
            for (int b = 0; b < 3; ++b) {
                const int c = bx[b].col, r = bx[b].row, v = t.v[b];
                for (int rr = 0; rr < kMaxRows; ++rr) {
                    const std::uint8_t w = val[c][rr];
                    if (w == 0xFF) continue;
                    if ((rr < r) != (w < v)) s = -s;
                }
                val[c][r] = static_cast<std::uint8_t>(v);
                mask[c] |= 1u << v;
            }
            run(depth + 1, s, prod * t.e);
            for (int b = 0; b < 3; ++b) {
                mask[bx[b].col] &= static_cast<std::uint16_t>(~(1u << t.v[b]));
                val[bx[b].col][bx[b].row] = 0xFF;
            }
            if (aborted) return;
        }
    }
};

Rational det_rows(const std::vector<const std::vector<Rational>*>& rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<std::vector<Rational>> a;
    a.reserve(n);
    for (const auto* r : rows) a.push_back(*r);
    Rational det(1);
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        const Rational inv = Rational(1) / a[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            const Rational f = a[r][col] * inv;
            for (int j = col; j < n; ++j) a[r][j] -= f * a[col][j];
        }
    }
    return det;
}

struct CubesDfs {
    int nlabels = 0, nrows = 0;
    std::vector<int> order;                            // visit order -> label
    std::vector<std::array<Box, 3>> boxes;             // by label
    const std::vector<WaringTerm<Rational>>* forms = nullptr;
    const std::vector<std::vector<int>>* columns = nullptr;
    std::vector<int> assigned;                         // label -> form or -1
    std::uint64_t used[kMaxCols] = {};
    std::unordered_map<std::uint64_t, Rational> dets;
    long long max_nodes = 0, nodes = 0;
    bool aborted = false;
    Rational acc{0};

    const Rational& column_det(int c) {
        std::uint64_t key = 0;
        for (int r = 0; r < nrows; ++r)
            key = key << 6 | static_cast<std::uint64_t>(assigned[(*columns)[c][r] - 1]);
        auto it = dets.find(key);
        if (it != dets.end()) return it->second;
        std::vector<const std::vector<Rational>*> rows;
        rows.reserve(nrows);
        for (int r = 0; r < nrows; ++r)
            rows.push_back(&(*forms)[assigned[(*columns)[c][r] - 1]].form);
        return dets.emplace(key, det_rows(rows)).first->second;
    }

    void run(int depth, const Rational& coeff_prod) {
        if (depth == nlabels) {
            Rational term = coeff_prod;
            for (std::size_t c = 0; c < columns->size(); ++c) {
                term *= column_det(static_cast<int>(c));
                if (term.is_zero()) break;
            }
            acc += term;
            return;
        }
        const int label = order[depth];
        const auto& bx = boxes[label];
        const int k = static_cast<int>(forms->size());
        for (int f = 0; f < k; ++f) {
            if (++nodes > max_nodes) {
                aborted = true;
                return;
            }
            const std::uint64_t bit = std::uint64_t{1} << f;
            if ((used[bx[0].col] | used[bx[1].col] | used[bx[2].col]) & bit) continue;
            for (const auto& b : bx) used[b.col] |= bit;
            assigned[label] = f;
            run(depth + 1, coeff_prod * (*forms)[f].coeff);
            assigned[label] = -1;
            for (const auto& b : bx) used[b.col] &= ~bit;
            if (aborted) return;
        }
    }
};

}  // namespace

Tableau::Tableau(std::vector<std::vector<int>> columns, int nforms)
    : columns_(std::move(columns)), nforms_(nforms) {
    if (nforms_ < 1) throw std::invalid_argument("Tableau: need at least one label");
    if (columns_.empty()) throw std::invalid_argument("Tableau: no columns");
    if (static_cast<int>(columns_.size()) > kMaxCols)
        throw std::invalid_argument("Tableau: too many columns");
    nrows_ = static_cast<int>(columns_[0].size());
    if (nrows_ < 1 || nrows_ > kMaxRows) throw std::invalid_argument("Tableau: bad column height");
    std::vector<int> count(nforms_, 0);
    int total = 0;
    for (const auto& col : columns_) {
        if (static_cast<int>(col.size()) != nrows_)
            throw std::invalid_argument("Tableau: columns must have equal height");
        for (int l : col) {
            if (l < 1 || l > nforms_) throw std::invalid_argument("Tableau: label out of range");
            ++count[l - 1];
            ++total;
        }
    }
    for (int c : count)
        if (c != 3) throw std::invalid_argument("Tableau: every label must appear exactly 3 times");
    if (total != 3 * nforms_) throw std::invalid_argument("Tableau: box count mismatch");
}

Tableau t10() {
    return Tableau({{1, 2, 4, 6, 7, 9},
                    {1, 3, 4, 6, 8, 10},
                    {1, 3, 5, 7, 8, 9},
                    {2, 3, 5, 6, 9, 10},
                    {2, 4, 5, 7, 8, 10}},
                   10);
}

bool pair_coverage(const Tableau& t) {
    std::vector<std::uint64_t> colset(t.ncols(), 0);
    for (int c = 0; c < t.ncols(); ++c)
        for (int l : t.columns()[c]) colset[c] |= std::uint64_t{1} << (l - 1);
    for (int i = 0; i < t.nforms(); ++i)
        for (int j = i + 1; j < t.nforms(); ++j) {
            bool covered = false;
            for (const auto& s : colset)
                if ((s >> i & 1) && (s >> j & 1)) {
                    covered = true;
                    break;
                }
            if (!covered) return false;
        }
    return true;
}

InvariantValue eval_contraction(const Tableau& t, const SymTensor3<Rational>& tensor,
                                long long max_nodes) {
    if (tensor.nvars() != t.nrows())
        throw std::invalid_argument("eval_contraction: tensor must have one variable per row");
    if (t.nrows() > 16)
        throw std::invalid_argument("eval_contraction: too many variables");

    // clear denominators; each label consumes one entry, so a scale factor
    // of lcm comes out as lcm^nforms
    mpz_class lcm = 1;
    for (const auto& [m, v] : tensor.entries())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.den().get_mpz_t());

    ContractionDfs dfs;
    dfs.nlabels = t.nforms();
    auto boxes = label_boxes(t);
    for (int l : visit_order(t)) dfs.boxes.push_back(boxes[l]);
    for (const auto& [m, v] : tensor.entries()) {
        const mpz_class entry = mpz_class(v.num() * lcm) / v.den();
        if (!entry.fits_slong_p())
            throw std::overflow_error("eval_contraction: tensor entry too large");
        const long long e = entry.get_si();
        // the running product of nforms entries must fit in 128 bits
        if (std::abs(e) > 6000)
            throw std::overflow_error("eval_contraction: tensor entry too large");
        std::set<Mono> perms;
        for (const auto& perm : perms3())
            perms.insert(Mono{m[perm[0]], m[perm[1]], m[perm[2]]});
        for (const auto& q : perms)
            dfs.triples.push_back({{static_cast<std::uint8_t>(q[0]), static_cast<std::uint8_t>(q[1]),
                                    static_cast<std::uint8_t>(q[2])},
                                   e});
    }
    dfs.max_nodes = max_nodes;
    for (auto& row : dfs.val)
        for (auto& x : row) x = 0xFF;
    dfs.run(0, 1, 1);

    InvariantValue out;
    out.nodes = dfs.nodes;
    if (dfs.aborted) {
        out.conclusive = false;
        return out;
    }
    mpz_class denom = 1;
    for (int i = 0; i < t.nforms(); ++i) denom *= lcm;
    out.value = Rational(mpq_class(dfs.acc, denom));
    out.nonzero = !out.value.is_zero();
    return out;
}

InvariantValue eval_on_cubes(const Tableau& t, const std::vector<WaringTerm<Rational>>& forms,
                             long long max_nodes) {
    if (forms.empty()) throw std::invalid_argument("eval_on_cubes: no forms");
    if (forms.size() > 64) throw std::invalid_argument("eval_on_cubes: at most 64 forms");
    for (const auto& f : forms)
        if (static_cast<int>(f.form.size()) != t.nrows())
            throw std::invalid_argument("eval_on_cubes: forms must have one entry per row");

    CubesDfs dfs;
    dfs.nlabels = t.nforms();
    dfs.nrows = t.nrows();
    dfs.order = visit_order(t);
    dfs.boxes = label_boxes(t);
    dfs.forms = &forms;
    dfs.columns = &t.columns();
    dfs.assigned.assign(t.nforms(), -1);
    dfs.max_nodes = max_nodes;
    dfs.run(0, Rational(1));

    InvariantValue out;
    out.nodes = dfs.nodes;
    if (dfs.aborted) {
        out.conclusive = false;
        return out;
    }
    out.value = dfs.acc;
    out.nonzero = !out.value.is_zero();
    return out;
}

bool weight_covariance_check(const Tableau& t, const SymTensor3<Rational>& tensor,
                             const LinearMap<Rational>& g, long long max_nodes) {
    if (g.domain_dim != t.nrows() || g.codomain_dim != t.nrows())
        throw std::invalid_argument("weight_covariance_check: g must be square of the right size");
    std::vector<const std::vector<Rational>*> rows;
    rows.reserve(g.rows.size());
    for (const auto& r : g.rows) rows.push_back(&r);
    const Rational d = det_rows(rows);
    if (d.is_zero()) throw std::invalid_argument("weight_covariance_check: singular matrix");

    const auto moved = as_sym_tensor(substitute(as_cubic(tensor), g));
    const auto lhs = eval_contraction(t, moved, max_nodes);
    const auto rhs = eval_contraction(t, tensor, max_nodes);
    if (!lhs.conclusive || !rhs.conclusive)
        throw std::runtime_error("weight_covariance_check: node budget exhausted");
    Rational factor(1);
    for (int c = 0; c < t.ncols(); ++c) factor *= d;
    return lhs.value == factor * rhs.value;
}

}  // namespace waring
