#include "waring/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace waring {

namespace {

#include "numeric_data.inc"

int mono_mult(const Mono& m) {
    if (m[0] == m[1] && m[1] == m[2]) return 1;
    if (m[0] == m[1] || m[1] == m[2]) return 3;
    return 6;
}

Mono sorted_mono(int a, int b, int c) {
    Mono m{a, b, c};
    std::sort(m.begin(), m.end());
    return m;
}

// All monomials x_i x_j x_k with i <= j <= k, lexicographic.
struct MonoBasis {
    std::vector<Mono> monos;
    std::map<Mono, int> index;

    explicit MonoBasis(int nvars) {
        for (int i = 0; i < nvars; ++i)
            for (int j = i; j < nvars; ++j)
                for (int k = j; k < nvars; ++k) monos.push_back({i, j, k});
        for (int q = 0; q < static_cast<int>(monos.size()); ++q) index.emplace(monos[q], q);
    }

    int dim() const { return static_cast<int>(monos.size()); }
};

// The residual system with its mask resolved into per-entry constraints and
// free entries numbered as complex parameter slots.
struct System {
    FamilyId id;
    int nvars = 0;
    MonoBasis basis{0};
    Eigen::VectorXcd target;
    double target_norm = 1.0;

    std::vector<ComplexF> coeffs;                 // per-term, held constant
    std::vector<std::vector<MaskEntry>> entries;  // resolved constraints
    std::vector<std::vector<int>> slot;           // complex slot per entry, -1 if constrained
    int nslots = 0;
    bool real_only = false;

    int real_params() const { return real_only ? nslots : 2 * nslots; }
};

System make_system(const FamilyId& id, int nterms, const std::vector<ComplexF>& coeffs,
                   const StructureMask* mask) {
    System s;
    s.id = id;
    CubicForm<Rational> f = family_cubic(id);
    s.nvars = f.nvars();
    s.basis = MonoBasis(s.nvars);
    s.target = Eigen::VectorXcd::Zero(s.basis.dim());
    for (const auto& [m, c] : f.terms()) s.target(s.basis.index.at(m)) = to_complex(c);
    s.target_norm = s.target.norm();
    if (s.target_norm == 0.0) s.target_norm = 1.0;

    s.coeffs = coeffs;
    s.entries.assign(nterms, std::vector<MaskEntry>(s.nvars));
    if (mask) {
        s.real_only = mask->real_only;
        if (!mask->terms.empty()) {
            if (static_cast<int>(mask->terms.size()) != nterms)
                throw std::invalid_argument("mask term count does not match the decomposition");
            for (int t = 0; t < nterms; ++t) {
                if (static_cast<int>(mask->terms[t].size()) != s.nvars)
                    throw std::invalid_argument("mask entry count does not match the variable count");
                s.entries[t] = mask->terms[t];
            }
        }
    }
    s.slot.assign(nterms, std::vector<int>(s.nvars, -1));
    for (int t = 0; t < nterms; ++t)
        for (int e = 0; e < s.nvars; ++e)
            if (s.entries[t][e].kind == EntryKind::Free) s.slot[t][e] = s.nslots++;
    return s;
}

std::vector<std::vector<ComplexF>> forms_at(const System& s, const Eigen::VectorXd& x) {
    std::vector<std::vector<ComplexF>> forms(s.entries.size(), std::vector<ComplexF>(s.nvars));
    for (std::size_t t = 0; t < s.entries.size(); ++t)
        for (int e = 0; e < s.nvars; ++e) {
            const MaskEntry& me = s.entries[t][e];
            int sl = s.slot[t][e];
            if (me.kind == EntryKind::Free)
                forms[t][e] = s.real_only ? ComplexF(x(sl), 0.0) : ComplexF(x(2 * sl), x(2 * sl + 1));
            else if (me.kind == EntryKind::Fixed)
                forms[t][e] = me.value;
            else
                forms[t][e] = ComplexF(0.0, 0.0);
        }
    return forms;
}

Eigen::VectorXd pack_point(const System& s, const NumericDecomposition& d) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(s.real_params());
    for (std::size_t t = 0; t < d.terms.size(); ++t)
        for (int e = 0; e < s.nvars; ++e) {
            int sl = s.slot[t][e];
            if (sl < 0) continue;
            ComplexF v = d.terms[t].form[e];
            if (s.real_only) {
                x(sl) = v.real();
            } else {
                x(2 * sl) = v.real();
                x(2 * sl + 1) = v.imag();
            }
        }
    return x;
}

Eigen::VectorXcd residual_complex(const System& s, const std::vector<std::vector<ComplexF>>& forms) {
    Eigen::VectorXcd r = -s.target;
    for (std::size_t t = 0; t < forms.size(); ++t) {
        const auto& v = forms[t];
        ComplexF c = s.coeffs[t];
        for (int i = 0; i < s.nvars; ++i) {
            if (v[i] == ComplexF(0.0)) continue;
            for (int j = i; j < s.nvars; ++j) {
                if (v[j] == ComplexF(0.0)) continue;
                ComplexF cij = c * v[i] * v[j];
                for (int k = j; k < s.nvars; ++k) {
                    if (v[k] == ComplexF(0.0)) continue;
                    r(s.basis.index.at(sorted_mono(i, j, k))) +=
                        static_cast<double>(mono_mult({i, j, k})) * cij * v[k];
                }
            }
        }
    }
    return r;
}

Eigen::VectorXd realify(const Eigen::VectorXcd& r) {
    Eigen::VectorXd y(2 * r.size());
    for (Eigen::Index q = 0; q < r.size(); ++q) {
        y(2 * q) = r(q).real();
        y(2 * q + 1) = r(q).imag();
    }
    return y;
}

// Columns are the complex partials d residual / d form[t][e]; the coefficient
// of the monomial containing e with the pair {p, q} left over is
// 3 c (2 - [p == q]) v_p v_q.
Eigen::MatrixXcd complex_jacobian(const System& s, const std::vector<std::vector<ComplexF>>& forms) {
    Eigen::MatrixXcd J = Eigen::MatrixXcd::Zero(s.basis.dim(), s.nslots);
    for (std::size_t t = 0; t < forms.size(); ++t) {
        const auto& v = forms[t];
        ComplexF c3 = 3.0 * s.coeffs[t];
        for (int e = 0; e < s.nvars; ++e) {
            int sl = s.slot[t][e];
            if (sl < 0) continue;
            for (int p = 0; p < s.nvars; ++p) {
                if (v[p] == ComplexF(0.0)) continue;
                for (int q = p; q < s.nvars; ++q) {
                    if (v[q] == ComplexF(0.0)) continue;
                    double pm = (p == q) ? 1.0 : 2.0;
                    J(s.basis.index.at(sorted_mono(e, p, q)), sl) += c3 * pm * v[p] * v[q];
                }
            }
        }
    }
    return J;
}

Eigen::MatrixXd real_jacobian(const System& s, const std::vector<std::vector<ComplexF>>& forms) {
    Eigen::MatrixXcd Jc = complex_jacobian(s, forms);
    Eigen::MatrixXd J(2 * Jc.rows(), s.real_params());
    for (Eigen::Index q = 0; q < Jc.rows(); ++q)
        for (int sl = 0; sl < s.nslots; ++sl) {
            ComplexF a = Jc(q, sl);
            if (s.real_only) {
                J(2 * q, sl) = a.real();
                J(2 * q + 1, sl) = a.imag();
            } else {
                J(2 * q, 2 * sl) = a.real();
                J(2 * q + 1, 2 * sl) = a.imag();
                J(2 * q, 2 * sl + 1) = -a.imag();
                J(2 * q + 1, 2 * sl + 1) = a.real();
            }
        }
    return J;
}

struct LmResult {
    Eigen::VectorXd x;
    double rel = 0.0;
    int iters = 0;
    bool converged = false;
    std::string reason;
};

// Damped Gauss-Newton. Steps are only ever accepted when they decrease the
// residual; a window of rejected or non-improving iterations ends the run.
LmResult run_lm(const System& s, Eigen::VectorXd x, double target_rel, int max_iters, int patience,
                std::vector<double>* trace) {
    auto eval = [&](const Eigen::VectorXd& xx) { return realify(residual_complex(s, forms_at(s, xx))); };
    Eigen::VectorXd r = eval(x);
    double f = r.squaredNorm();
    double rel = std::sqrt(f) / s.target_norm;
    if (trace) trace->push_back(std::sqrt(f));
    double lambda = 1e-3;
    int bad = 0;
    int it = 0;
    std::string reason = "iteration cap reached";
    for (; it < max_iters && rel > target_rel; ++it) {
        Eigen::MatrixXd J = real_jacobian(s, forms_at(s, x));
        Eigen::MatrixXd A = J.transpose() * J;
        Eigen::VectorXd g = J.transpose() * r;
        bool stepped = false;
        for (int tries = 0; tries < 20 && lambda < 1e16; ++tries) {
            Eigen::MatrixXd Ad = A;
            Ad.diagonal().array() += lambda;
            Eigen::LDLT<Eigen::MatrixXd> ldlt(Ad);
            if (ldlt.info() == Eigen::Success) {
                Eigen::VectorXd xn = x + ldlt.solve(-g);
                Eigen::VectorXd rn = eval(xn);
                double fn = rn.squaredNorm();
                if (std::isfinite(fn) && fn < f) {
                    bad = (f - fn > 1e-6 * f) ? 0 : bad + 1;
                    x = std::move(xn);
                    r = std::move(rn);
                    f = fn;
                    rel = std::sqrt(f) / s.target_norm;
                    if (trace) trace->push_back(std::sqrt(f));
                    lambda = std::max(lambda / 3.0, 1e-14);
                    stepped = true;
                    break;
                }
            }
            lambda *= 4.0;
        }
        if (!stepped) {
            ++bad;
            if (lambda >= 1e16) {
                reason = "damping exhausted without an accepted step";
                break;
            }
        }
        if (bad > patience) {
            reason = stepped ? "progress stalled over the patience window"
                             : "residual would increase over the patience window";
            break;
        }
    }
    LmResult out;
    out.x = std::move(x);
    out.rel = rel;
    out.iters = it;
    out.converged = rel <= target_rel;
    out.reason = out.converged ? "" : reason;
    return out;
}

NumericDecomposition assemble(const System& s, const Eigen::VectorXd& x) {
    NumericDecomposition d;
    d.target = s.id;
    auto forms = forms_at(s, x);
    for (std::size_t t = 0; t < forms.size(); ++t) d.terms.push_back({s.coeffs[t], std::move(forms[t])});
    d.residual_norm = residual(d).norm;
    return d;
}

std::vector<ComplexF> coeffs_of(const NumericDecomposition& d) {
    std::vector<ComplexF> c;
    c.reserve(d.terms.size());
    for (const auto& t : d.terms) c.push_back(t.coeff);
    return c;
}

void check_shapes(const NumericDecomposition& d, int nvars) {
    for (const auto& t : d.terms)
        if (static_cast<int>(t.form.size()) != nvars)
            throw std::invalid_argument("numeric decomposition: form length does not match the family");
}

}  // namespace

ResidualReport residual(const NumericDecomposition& d) {
    System s = make_system(d.target, static_cast<int>(d.terms.size()), coeffs_of(d), nullptr);
    check_shapes(d, s.nvars);
    std::vector<std::vector<ComplexF>> forms;
    for (const auto& t : d.terms) forms.push_back(t.form);
    Eigen::VectorXcd r = residual_complex(s, forms);
    ResidualReport rep;
    rep.vec.assign(r.data(), r.data() + r.size());
    rep.norm = r.norm();
    rep.relative = rep.norm / s.target_norm;
    return rep;
}

NumericDecomposition refine(const NumericDecomposition& d, const StructureMask* mask,
                            const RefineOptions& opts) {
    System s = make_system(d.target, static_cast<int>(d.terms.size()), coeffs_of(d), mask);
    check_shapes(d, s.nvars);
    Eigen::VectorXd x = pack_point(s, d);
    double start = realify(residual_complex(s, forms_at(s, x))).norm() / s.target_norm;
    if (!(start <= opts.max_start_relative)) {
        std::ostringstream msg;
        msg << "refine: starting relative residual " << start
            << " is outside the local-convergence heuristic " << opts.max_start_relative;
        throw std::invalid_argument(msg.str());
    }
    LmResult lm = run_lm(s, std::move(x), opts.target_relative, opts.max_iterations, opts.patience,
                         opts.accepted_trace);
    if (!lm.converged) {
        std::ostringstream msg;
        msg << "refine: " << lm.reason << " at relative residual " << lm.rel << " after " << lm.iters
            << " iterations";
        throw std::runtime_error(msg.str());
    }
    return assemble(s, lm.x);
}

SearchResult search(const FamilyId& target, int k, const StructureMask* mask,
                    const SearchOptions& opts) {
    if (k < 1) throw std::invalid_argument("search: the term count must be positive");
    if (opts.seeds < 1) throw std::invalid_argument("search: need at least one seed");
    System s = make_system(target, k, std::vector<ComplexF>(k, ComplexF(1.0, 0.0)), mask);
    double lm_target = std::min(opts.tol * 1e-2, 1e-12);

    auto one_seed = [&](std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> unit(-1.0, 1.0);
        Eigen::VectorXd x0(s.real_params());
        for (Eigen::Index i = 0; i < x0.size(); ++i) x0(i) = unit(rng);
        return run_lm(s, std::move(x0), lm_target, opts.max_iterations, opts.patience, nullptr);
    };

    unsigned workers = opts.threads > 0
                           ? static_cast<unsigned>(opts.threads)
                           : std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    SearchResult result;
    result.best_relative = std::numeric_limits<double>::infinity();
    Eigen::VectorXd best_x;
    for (int base = 0; base < opts.seeds; base += static_cast<int>(workers)) {
        int batch = std::min<int>(workers, opts.seeds - base);
        std::vector<std::future<LmResult>> jobs;
        for (int i = 0; i < batch; ++i)
            jobs.push_back(std::async(std::launch::async, one_seed, opts.seed0 + base + i));
        for (auto& job : jobs) {
            LmResult lm = job.get();
            ++result.seeds_run;
            if (lm.rel < result.best_relative) {
                result.best_relative = lm.rel;
                best_x = std::move(lm.x);
            }
        }
        if (result.best_relative < opts.tol) break;  // merged at batch granularity
    }
    result.best = assemble(s, best_x);
    result.success = result.best_relative < opts.tol;
    return result;
}

LocalDimReport local_dimension(const NumericDecomposition& d) {
    ResidualReport rr = residual(d);
    if (rr.relative > 1e-10)
        throw std::invalid_argument("local_dimension: relative residual above 1e-10, refine first");
    System s = make_system(d.target, static_cast<int>(d.terms.size()), coeffs_of(d), nullptr);
    std::vector<std::vector<ComplexF>> forms;
    for (const auto& t : d.terms) forms.push_back(t.form);
    Eigen::MatrixXcd J = complex_jacobian(s, forms);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(J);
    const auto& sv = svd.singularValues();
    double smax = sv.size() ? sv(0) : 0.0;
    double thresh = 1e-6 * smax;
    long rank = 0;
    while (rank < sv.size() && sv(rank) > thresh) ++rank;
    LocalDimReport rep;
    rep.parameter_count = s.nslots;
    rep.jacobian_rank = rank;
    rep.estimated_local_dimension = rep.parameter_count - rank;
    double below = rank < sv.size() ? sv(rank) : 0.0;
    rep.gap = below > 0.0 ? sv(rank - 1) / below : std::numeric_limits<double>::infinity();
    rep.conclusive = rank == 0 || rep.gap >= 1e2;
    return rep;
}

LocalDimReport exact_jacobian_rank(const WaringDecomposition<Rational>& d, int nprimes,
                                   std::uint64_t seed) {
    int n = d.target.nvars();
    SparseIntMatrix m;
    m.cols = n * static_cast<long>(d.terms.size());
    std::map<Mono, long> rowidx;
    for (std::size_t t = 0; t < d.terms.size(); ++t) {
        const auto& term = d.terms[t];
        if (static_cast<int>(term.form.size()) != n)
            throw std::invalid_argument("exact_jacobian_rank: form length mismatch");
        for (int e = 0; e < n; ++e) {
            std::map<Mono, Rational> col;
            for (int p = 0; p < n; ++p) {
                if (term.form[p].is_zero()) continue;
                for (int q = p; q < n; ++q) {
                    if (term.form[q].is_zero()) continue;
                    Rational val = term.coeff * term.form[p] * term.form[q] * Rational(p == q ? 3 : 6);
                    col[sorted_mono(e, p, q)] += val;
                }
            }
            mpz_class lcm = 1;
            for (const auto& [mono, v] : col)
                if (!v.is_zero()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.den().get_mpz_t());
            for (const auto& [mono, v] : col) {
                if (v.is_zero()) continue;
                auto [it, inserted] = rowidx.emplace(mono, static_cast<long>(rowidx.size()));
                m.entries.push_back(
                    {it->second, static_cast<long>(t) * n + e, mpz_class(v.num() * lcm) / v.den()});
            }
        }
    }
    m.rows = static_cast<long>(rowidx.size());
    FlatteningReport rep = certified_rank(m, nprimes, seed);
    LocalDimReport out;
    out.parameter_count = m.cols;
    out.jacobian_rank = rep.rank;
    out.estimated_local_dimension = m.cols - rep.rank;
    out.conclusive = rep.exact;
    out.gap = 0.0;
    return out;
}

bool eigenvalue_audit(const NumericDecomposition& d, EigenPattern pattern, double tol) {
    if (d.target.kind != FamilyKind::Symmetric || d.target.n != 3)
        throw std::invalid_argument("eigenvalue_audit: terms must reshape to symmetric 3x3 matrices");
    check_shapes(d, 6);
    for (const auto& t : d.terms) {
        Eigen::Matrix3cd M;
        M << t.form[0], t.form[1], t.form[2],  //
            t.form[1], t.form[3], t.form[4],   //
            t.form[2], t.form[4], t.form[5];
        Eigen::ComplexEigenSolver<Eigen::Matrix3cd> es(M, false);
        std::array<ComplexF, 3> ev{es.eigenvalues()(0), es.eigenvalues()(1), es.eigenvalues()(2)};
        bool ok;
        if (pattern == EigenPattern::RankDeficient) {
            std::sort(ev.begin(), ev.end(),
                      [](const ComplexF& a, const ComplexF& b) { return std::abs(a) < std::abs(b); });
            ComplexF l1 = ev[1], l2 = ev[2];
            ok = std::abs(ev[0]) <= tol &&
                 std::abs((l1 + l2) * (l1 * l1 + l1 * l2 + l2 * l2) - 1.0) <= tol;
        } else {
            ok = std::abs(ev[0] + ev[1] + ev[2]) <= tol &&
                 std::abs((ev[0] + ev[1]) * (ev[0] + ev[2]) * (ev[1] + ev[2]) + 2.0) <= tol;
        }
        if (!ok) return false;
    }
    return true;
}

RankAudit numeric_rank_audit(const NumericDecomposition& d) {
    int n = d.target.n;
    check_shapes(d, family_nvars(d.target));
    RankAudit audit;
    for (const auto& t : d.terms) {
        Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n, n);
        switch (d.target.kind) {
            case FamilyKind::General:
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) M(i, j) = t.form[mat_index(n, i, j)];
                break;
            case FamilyKind::Symmetric:
                for (int i = 0; i < n; ++i)
                    for (int j = i; j < n; ++j) M(i, j) = M(j, i) = t.form[sym_index(n, i, j)];
                break;
            case FamilyKind::SymmetricTraceless: {
                int last = sym_index(n, n - 1, n - 1);
                for (int i = 0; i < n; ++i)
                    for (int j = i; j < n; ++j) {
                        int sidx = sym_index(n, i, j);
                        if (sidx == last) continue;
                        M(i, j) = M(j, i) = t.form[sidx];
                    }
                for (int i = 0; i + 1 < n; ++i) M(n - 1, n - 1) -= M(i, i);
                break;
            }
            case FamilyKind::ZeroDiagonal:
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) M(i, j) = M(j, i) = t.form[pair_index(n, i, j)];
                break;
            default:
                throw std::invalid_argument("numeric_rank_audit: target is not matrix-shaped");
        }
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
        const auto& sv = svd.singularValues();
        double thresh = sv.size() ? 1e-6 * sv(0) : 0.0;
        int r = 0;
        while (r < sv.size() && sv(r) > thresh) ++r;
        audit.ranks.push_back(r);
        audit.max_rank = std::max(audit.max_rank, r);
        ++audit.count_per_rank[r];
    }
    return audit;
}

double jacobian_fd_error(const NumericDecomposition& d, const StructureMask* mask, double h) {
    System s = make_system(d.target, static_cast<int>(d.terms.size()), coeffs_of(d), mask);
    check_shapes(d, s.nvars);
    Eigen::VectorXd x = pack_point(s, d);
    Eigen::MatrixXd J = real_jacobian(s, forms_at(s, x));
    double worst = 0.0;
    double scale = std::max(1.0, J.cwiseAbs().maxCoeff());
    for (int p = 0; p < s.real_params(); ++p) {
        Eigen::VectorXd xp = x, xm = x;
        xp(p) += h;
        xm(p) -= h;
        Eigen::VectorXd fd =
            (realify(residual_complex(s, forms_at(s, xp))) - realify(residual_complex(s, forms_at(s, xm)))) /
            (2.0 * h);
        worst = std::max(worst, (fd - J.col(p)).cwiseAbs().maxCoeff());
    }
    return worst / scale;
}

namespace {

NumericDecomposition from_table(const FamilyId& id, const double (*data)[9][2], int k,
                                const int* pos, int npos) {
    NumericDecomposition d;
    d.target = id;
    for (int t = 0; t < k; ++t) {
        NumericTerm term;
        term.form.reserve(npos);
        for (int e = 0; e < npos; ++e)
            term.form.emplace_back(data[t][pos[e]][0], data[t][pos[e]][1]);
        d.terms.push_back(std::move(term));
    }
    d.residual_norm = residual(d).norm;
    return d;
}

StructureMask mask_from_table(const double (*data)[9][2], const unsigned* fixed, int k,
                              const int* pos, int npos) {
    StructureMask mask;
    for (int t = 0; t < k; ++t) {
        std::vector<MaskEntry> row(npos);
        for (int e = 0; e < npos; ++e) {
            if (!(fixed[t] >> pos[e] & 1u)) continue;
            ComplexF v(data[t][pos[e]][0], data[t][pos[e]][1]);
            row[e] = v == ComplexF(0.0) ? MaskEntry{EntryKind::Zero, {}} : MaskEntry{EntryKind::Fixed, v};
        }
        mask.terms.push_back(std::move(row));
    }
    return mask;
}

constexpr int kFullPos[9] = {0, 1, 2, 3, 4, 5, 6, 7, 8};
constexpr int kSymPos[6] = {0, 1, 2, 4, 5, 8};       // upper triangle of the printed matrix
constexpr int kSym0Pos[5] = {0, 1, 2, 4, 5};         // same minus the dependent last diagonal

}  // namespace

NumericDecomposition load_sm3_18() {
    return from_table({FamilyKind::General, 3}, kSm3_18, 18, kFullPos, 9);
}

StructureMask load_sm3_18_mask() { return mask_from_table(kSm3_18, kFixedSm3_18, 18, kFullPos, 9); }

NumericDecomposition load_sms3_10() {
    return from_table({FamilyKind::Symmetric, 3}, kSms3_10, 10, kSymPos, 6);
}

StructureMask load_sms3_10_mask() {
    return mask_from_table(kSms3_10, kFixedSms3_10, 10, kSymPos, 6);
}

NumericDecomposition load_sms03_8() {
    return from_table({FamilyKind::SymmetricTraceless, 3}, kSms03_8, 8, kSym0Pos, 5);
}

StructureMask ten_cube_pattern_mask() {
    StructureMask mask;
    auto shape = [](std::initializer_list<int> zeros) {
        std::vector<MaskEntry> row(6);
        for (int z : zeros) row[z] = {EntryKind::Zero, {}};
        return row;
    };
    // coordinates (a00, a01, a02, a11, a12, a22): bordered around the first,
    // second and third diagonal entries, then one zero-diagonal summand
    for (int r = 0; r < 3; ++r) mask.terms.push_back(shape({3, 4, 5}));
    for (int r = 0; r < 3; ++r) mask.terms.push_back(shape({0, 2, 5}));
    for (int r = 0; r < 3; ++r) mask.terms.push_back(shape({0, 1, 3}));
    mask.terms.push_back(shape({0, 3, 5}));
    return mask;
}

}  // namespace waring
