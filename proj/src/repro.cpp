#include "waring/repro.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "waring/catalog.hpp"
#include "waring/decomp.hpp"
#include "waring/families.hpp"
#include "waring/flatten.hpp"
#include "waring/numeric.hpp"
#include "waring/tableau.hpp"

namespace waring {

namespace {

struct Outcome {
    ClaimStatus status;
    json detail;
};

Outcome check(bool ok, json detail, ClaimStatus on_pass = ClaimStatus::Reproduced) {
    return {ok ? on_pass : ClaimStatus::Failed, std::move(detail)};
}

struct Claim {
    std::string id;
    Scope scope;
    std::function<Outcome()> run;
};

// ---- exact scope ----

// trace(A) * (trace(A)^2 - 3 det(A)) expanded term by term against the
// 2x2 trace cubic; variables (a00, a01, a10, a11).
Outcome factorization_2x2() {
    const std::pair<int, long> lin[] = {{0, 1}, {3, 1}};
    const std::tuple<int, int, long> quad[] = {{0, 0, 1}, {3, 3, 1}, {0, 3, -1}, {1, 2, 3}};
    CubicForm<Rational> prod(4);
    for (const auto& [i, c] : lin)
        for (const auto& [j, k, q] : quad) prod.add_term(i, j, k, Rational(c * q));
    return check(prod == make_smn(2), {{"monomials", prod.term_count()}});
}

// (a0 + a2)(a0^2 + 3 a1^2 - a0 a2 + a2^2) against the symmetric 2x2 trace
// cubic in upper-triangle coordinates.
Outcome factorization_sym_2x2() {
    const std::pair<int, long> lin[] = {{0, 1}, {2, 1}};
    const std::tuple<int, int, long> quad[] = {{0, 0, 1}, {1, 1, 3}, {0, 2, -1}, {2, 2, 1}};
    CubicForm<Rational> prod(3);
    for (const auto& [i, c] : lin)
        for (const auto& [j, k, q] : quad) prod.add_term(i, j, k, Rational(c * q));
    return check(prod == make_smn_s(2), {{"monomials", prod.term_count()}});
}

template <class K>
Outcome verify_stored(const WaringDecomposition<K>& d, std::size_t terms, long scale) {
    bool zero = verify_exact(d).ok;
    bool ok = d.terms.size() == terms && d.scale == K(scale) && zero;
    return check(ok, {{"terms", d.terms.size()}, {"residual_zero", zero}});
}

Outcome pn_claim(int n) {
    auto d = build_pn_decomposition(n);
    bool ok = verify_exact(d).ok && d.terms.size() == (1u << (n - 1)) &&
              d.scale == Rational(1L << (n + 2));
    return check(ok, {{"n", n}, {"terms", d.terms.size()}, {"scale", d.scale.str()}});
}

Outcome pn_plus_claim() {
    auto d = build_pn_plus_decomposition(8);
    bool ok = verify_exact(d).ok && d.terms.size() == 64 && d.scale == Rational(512);
    return check(ok, {{"n", 8}, {"terms", d.terms.size()}, {"scale", d.scale.str()}});
}

Outcome modest_claim(int n) {
    auto d = build_modest_upper_bound(n);
    std::size_t expect = 8 * binom(n, 3) + 4 * binom(n, 2) + n;
    bool ok = verify_exact(d).ok && d.terms.size() == expect;
    return check(ok, {{"n", n}, {"terms", d.terms.size()}, {"expected", expect}});
}

Outcome reduce_claim(WaringDecomposition<Rational> d, int matmul_n) {
    auto td = extract_matmul_decomposition(d);
    bool ok = verify_tensor(td).ok && td.target == make_matmul_tensor(matmul_n);
    return check(ok, {{"matmul_n", matmul_n}, {"tensor_terms", td.terms.size()}});
}

// max rank 3 forces at least one genuinely 3-dimensional summand; on 2x2
// targets the sharp statement is that some summand has rank exactly 2.
bool rank_law_holds(int n, const RankAudit& audit) {
    if (n >= 3) return audit.max_rank >= 3;
    return audit.count_per_rank.count(2) > 0;
}

Outcome rank_law_exact_claim() {
    json rows = json::array();
    bool ok = true;
    auto add = [&](const std::string& name, int n, const RankAudit& audit) {
        bool holds = rank_law_holds(n, audit);
        ok = ok && holds;
        rows.push_back({{"target", name}, {"n", n}, {"max_rank", audit.max_rank},
                        {"holds", holds}});
    };
    add("sm2-6", 2, audit_ranks(load_sm2_6()));
    add("sms2-4", 2, audit_ranks(load_sms2_4()));
    add("smz6-30", 6, audit_ranks(load_smz6_30()));
    add("smz7-48", 7, audit_ranks(load_smz7_48()));
    for (int n = 3; n <= 8; ++n)
        add("pn-" + std::to_string(n), n, audit_ranks(build_pn_decomposition(n)));
    add("pnplus-8", 8, audit_ranks(build_pn_plus_decomposition(8)));
    for (int n = 2; n <= 5; ++n)
        add("modest-" + std::to_string(n), n, audit_ranks(build_modest_upper_bound(n)));
    return check(ok, std::move(rows));
}

// ---- bounds scope ----

Outcome bound_claim(const CubicForm<Rational>& f, long rank, long unit, long bound) {
    auto rep = border_rank_lower_bound(f);
    bool ok = rep.rank == rank && rep.unit_rank == unit && rep.bound == bound;
    if (!ok) return {ClaimStatus::Failed, flattening_report_to_json(rep)};
    return {rep.exact ? ClaimStatus::Reproduced : ClaimStatus::Inconclusive,
            flattening_report_to_json(rep)};
}

Outcome cube_unit_claim() {
    std::vector<Rational> l(9, Rational(1));
    auto rep = border_rank_lower_bound(cube_of_linear(l));
    bool ok = rep.rank == 70 && rep.unit_rank == 70 && rep.bound == 1;
    if (!ok) return {ClaimStatus::Failed, flattening_report_to_json(rep)};
    return {rep.exact ? ClaimStatus::Reproduced : ClaimStatus::Inconclusive,
            flattening_report_to_json(rep)};
}

// ---- tableau scope ----

std::vector<WaringTerm<Rational>> sparse_forms(int k, std::mt19937& rng) {
    std::uniform_int_distribution<int> vi(0, 5);
    std::uniform_int_distribution<long> ci(1, 4);
    std::vector<WaringTerm<Rational>> forms;
    for (int i = 0; i < k; ++i) {
        WaringTerm<Rational> t;
        t.coeff = Rational(ci(rng), ci(rng));
        t.form.assign(6, Rational(0));
        t.form[vi(rng)] += Rational(ci(rng));
        t.form[vi(rng)] -= Rational(ci(rng));
        forms.push_back(std::move(t));
    }
    return forms;
}

Outcome tableau_vanishing_claim() {
    std::mt19937 rng(71);
    json rows = json::array();
    bool ok = true;
    for (int k = 1; k <= 6; ++k) {
        auto v = eval_on_cubes(t10(), sparse_forms(k, rng));
        ok = ok && v.conclusive && v.value.is_zero();
        rows.push_back({{"k", k}, {"zero", v.value.is_zero()}, {"nodes", v.nodes}});
    }
    return check(ok, std::move(rows));
}

Outcome tableau_sym3_claim(long long max_nodes) {
    auto v = eval_contraction(t10(), as_sym_tensor(make_smn_s(3)), max_nodes);
    json detail{{"value", v.value.str()}, {"nonzero", v.nonzero}, {"nodes", v.nodes},
                {"budget", max_nodes}};
    if (!v.conclusive) return {ClaimStatus::Inconclusive, std::move(detail)};
    return check(v.nonzero && v.value == Rational(302400), std::move(detail));
}

Outcome tableau_consistency_claim() {
    std::mt19937 rng(84);
    json rows = json::array();
    bool ok = true;
    for (int k = 2; k <= 5; ++k) {
        auto forms = sparse_forms(k, rng);
        CubicForm<Rational> f(6);
        for (const auto& t : forms) f += cube_of_linear(t.form, t.coeff);
        auto a = eval_on_cubes(t10(), forms);
        auto b = eval_contraction(t10(), as_sym_tensor(f));
        ok = ok && a.conclusive && b.conclusive && a.value == b.value;
        rows.push_back({{"k", k}, {"agree", a.value == b.value}});
    }
    return check(ok, std::move(rows), ClaimStatus::Derived);
}

// ---- numeric scope ----

// The three printed starting points refine once per run; later claims
// share the results.
struct NumericCache {
    std::mutex m;
    std::optional<NumericDecomposition> full18, sym10, traceless8;

    const NumericDecomposition& refined18() {
        std::scoped_lock lock(m);
        if (!full18) {
            auto mask = load_sm3_18_mask();
            full18 = refine(load_sm3_18(), &mask);
        }
        return *full18;
    }
    const NumericDecomposition& refined10() {
        std::scoped_lock lock(m);
        if (!sym10) {
            auto mask = load_sms3_10_mask();
            sym10 = refine(load_sms3_10(), &mask);
        }
        return *sym10;
    }
    const NumericDecomposition& refined8() {
        std::scoped_lock lock(m);
        if (!traceless8) traceless8 = refine(load_sms03_8());
        return *traceless8;
    }
};

Outcome refine_claim(const NumericDecomposition& start, const NumericDecomposition& refined) {
    double before = residual(start).relative;
    double after = residual(refined).relative;
    return check(after < 1e-12,
                 {{"start_relative", before}, {"final_relative", after},
                  {"terms", refined.terms.size()}});
}

Outcome eigen_relations_claim(const NumericDecomposition& refined) {
    NumericDecomposition head = refined, tail = refined;
    head.terms.assign(refined.terms.begin(), refined.terms.begin() + 9);
    tail.terms.assign(refined.terms.begin() + 9, refined.terms.end());
    bool ok = eigenvalue_audit(head, EigenPattern::RankDeficient) &&
              eigenvalue_audit(tail, EigenPattern::Traceless);
    return check(ok, {{"rank_deficient_terms", 9}, {"traceless_terms", 1},
                      {"tolerance", 1e-8}});
}

Outcome jacobian_rank_claim() {
    auto rep = exact_jacobian_rank(build_pn_plus_decomposition(8));
    bool ok = rep.jacobian_rank == 1792 && rep.parameter_count == 1792 &&
              rep.estimated_local_dimension == 0;
    if (!ok) return {ClaimStatus::Failed, localdim_report_to_json(rep)};
    return {rep.conclusive ? ClaimStatus::Reproduced : ClaimStatus::Inconclusive,
            localdim_report_to_json(rep)};
}

Outcome localdim_claim(const NumericDecomposition& refined, long at_least) {
    auto rep = local_dimension(refined);
    json detail = localdim_report_to_json(rep);
    detail["expected_at_least"] = at_least;
    if (!rep.conclusive) return {ClaimStatus::Inconclusive, std::move(detail)};
    return check(rep.estimated_local_dimension >= at_least, std::move(detail));
}

Outcome search_success_claim(const ReproOptions& opts) {
    auto mask = ten_cube_pattern_mask();
    SearchOptions so;
    so.seeds = opts.seeds;
    so.seed0 = opts.seed0;
    so.threads = resolve_thread_count(opts.threads);
    auto res = search({FamilyKind::Symmetric, 3}, 10, &mask, so);
    return check(res.success,
                 {{"k", 10}, {"seeds_run", res.seeds_run},
                  {"best_relative", res.best_relative}});
}

Outcome search_failure_claim(int n, const ReproOptions& opts) {
    int k = (1 << (n - 1)) - 1;  // one cube below the certified border bound
    SearchOptions so;
    so.seeds = std::min(opts.seeds, 6);
    so.seed0 = opts.seed0;
    so.max_iterations = 150;
    so.threads = resolve_thread_count(opts.threads);
    auto res = search({FamilyKind::ZeroDiagonal, n}, k, nullptr, so);
    bool ok = !res.success && res.best_relative > 1e-8;
    return check(ok,
                 {{"n", n}, {"k", k}, {"seeds_run", res.seeds_run},
                  {"best_relative", res.best_relative}},
                 ClaimStatus::Derived);
}

Outcome jacobian_fd_claim(const NumericDecomposition& refined18) {
    auto mask = load_sms3_10_mask();
    auto d10 = load_sms3_10();
    double masked = jacobian_fd_error(d10, &mask);
    double free18 = jacobian_fd_error(refined18);
    return check(masked < 1e-6 && free18 < 1e-6,
                 {{"masked_10_term", masked}, {"free_18_term", free18}},
                 ClaimStatus::Derived);
}

Outcome rank_law_numeric_claim(NumericCache& cache) {
    json rows = json::array();
    bool ok = true;
    auto add = [&](const std::string& name, const NumericDecomposition& d) {
        auto audit = numeric_rank_audit(d);
        bool holds = rank_law_holds(d.target.n, audit);
        ok = ok && holds;
        rows.push_back({{"target", name}, {"max_rank", audit.max_rank}, {"holds", holds}});
    };
    add("refined-sm3-18", cache.refined18());
    add("refined-sms3-10", cache.refined10());
    add("refined-sms03-8", cache.refined8());
    return check(ok, std::move(rows));
}

std::vector<Claim> build_registry(const ReproOptions& opts) {
    auto cache = std::make_shared<NumericCache>();
    std::vector<Claim> claims;
    auto add = [&](std::string id, Scope scope, std::function<Outcome()> fn) {
        claims.push_back({std::move(id), scope, std::move(fn)});
    };

    add("exact-sm2-factorization", Scope::Exact, factorization_2x2);
    add("exact-sms2-factorization", Scope::Exact, factorization_sym_2x2);
    add("exact-sm2-6term", Scope::Exact, [] { return verify_stored(load_sm2_6(), 6, 1); });
    add("exact-sms2-4term", Scope::Exact, [] { return verify_stored(load_sms2_4(), 4, 6); });
    add("exact-smz6-30term", Scope::Exact, [] { return verify_stored(load_smz6_30(), 30, 32); });
    add("exact-smz7-48term", Scope::Exact,
        [] { return verify_stored(load_smz7_48(), 48, 160); });
    for (int n = 3; n <= 8; ++n)
        add("exact-signvector-n" + std::to_string(n), Scope::Exact,
            [n] { return pn_claim(n); });
    add("exact-signvector-even-n8", Scope::Exact, pn_plus_claim);
    for (int n = 1; n <= 5; ++n)
        add("exact-modest-n" + std::to_string(n), Scope::Exact,
            [n] { return modest_claim(n); });
    add("exact-reduce-sm3-matmul1", Scope::Exact,
        [] { return reduce_claim(build_modest_upper_bound(3), 1); });
    add("exact-reduce-smz6-matmul2", Scope::Exact,
        [] { return reduce_claim(load_smz6_30(), 2); });
    add("exact-rank-law", Scope::Exact, rank_law_exact_claim);

    add("bounds-unit-cube-70", Scope::Bounds, cube_unit_claim);
    add("bounds-sm3-950-14", Scope::Bounds,
        [] { return bound_claim(make_smn(3), 950, 70, 14); });
    add("bounds-smz3-8-4", Scope::Bounds,
        [] { return bound_claim(make_smn_z(3), 8, 2, 4); });
    add("bounds-smz4-72-8", Scope::Bounds,
        [] { return bound_claim(make_smn_z(4), 72, 10, 8); });
    add("bounds-smz5-1920-16", Scope::Bounds,
        [] { return bound_claim(make_smn_z(5), 1920, 126, 16); });
    add("bounds-sms03-45-8", Scope::Bounds,
        [] { return bound_claim(make_smn_s0(3), 45, 6, 8); });
    add("bounds-sms04-950-14", Scope::Bounds,
        [] { return bound_claim(make_smn_s0(4), 950, 70, 14); });

    add("tableau-pair-coverage", Scope::Tableau,
        [] { return check(pair_coverage(t10()), {{"labels", 10}, {"columns", 5}}); });
    add("tableau-vanishes-upto-6-cubes", Scope::Tableau, tableau_vanishing_claim);
    add("tableau-sms3-nonzero", Scope::Tableau,
        [max_nodes = opts.max_nodes] { return tableau_sym3_claim(max_nodes); });
    add("tableau-engines-agree", Scope::Tableau, tableau_consistency_claim);

    add("numeric-refine-sm3-18", Scope::Numeric,
        [cache] { return refine_claim(load_sm3_18(), cache->refined18()); });
    add("numeric-refine-sms3-10", Scope::Numeric,
        [cache] { return refine_claim(load_sms3_10(), cache->refined10()); });
    add("numeric-refine-sms03-8", Scope::Numeric,
        [cache] { return refine_claim(load_sms03_8(), cache->refined8()); });
    add("numeric-ranks-sm3-18", Scope::Numeric, [cache] {
        auto audit = numeric_rank_audit(cache->refined18());
        bool ok = audit.ranks.size() == 18 && audit.count_per_rank.count(3) &&
                  audit.count_per_rank.at(3) == 18;
        return check(ok, {{"ranks_of_3", audit.count_per_rank.count(3)
                                             ? audit.count_per_rank.at(3) : 0}});
    });
    add("numeric-eigen-sms3-10", Scope::Numeric,
        [cache] { return eigen_relations_claim(cache->refined10()); });
    add("numeric-jacobian-rank-1792", Scope::Numeric, jacobian_rank_claim);
    add("numeric-localdim-sm3-18", Scope::Numeric,
        [cache] { return localdim_claim(cache->refined18(), 9); });
    add("numeric-localdim-sms3-10", Scope::Numeric,
        [cache] { return localdim_claim(cache->refined10(), 3); });
    if (opts.seeds > 0) {
        add("numeric-search-sms3-k10", Scope::Numeric,
            [opts] { return search_success_claim(opts); });
        add("numeric-search-smz3-k3-fails", Scope::Numeric,
            [opts] { return search_failure_claim(3, opts); });
        add("numeric-search-smz4-k7-fails", Scope::Numeric,
            [opts] { return search_failure_claim(4, opts); });
    }
    add("numeric-jacobian-fd", Scope::Numeric,
        [cache] { return jacobian_fd_claim(cache->refined18()); });
    add("numeric-rank-law", Scope::Numeric,
        [cache] { return rank_law_numeric_claim(*cache); });

    return claims;
}

}  // namespace

std::string scope_code(Scope s) {
    switch (s) {
        case Scope::Exact: return "exact";
        case Scope::Bounds: return "bounds";
        case Scope::Tableau: return "tableau";
        case Scope::Numeric: return "numeric";
    }
    throw std::logic_error("scope_code: bad scope");
}

Scope scope_from_code(const std::string& code) {
    if (code == "exact") return Scope::Exact;
    if (code == "bounds") return Scope::Bounds;
    if (code == "tableau") return Scope::Tableau;
    if (code == "numeric") return Scope::Numeric;
    throw std::invalid_argument("unknown scope '" + code + "'");
}

std::string status_code(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::Reproduced: return "reproduced";
        case ClaimStatus::Derived: return "derived";
        case ClaimStatus::Failed: return "failed";
        case ClaimStatus::Inconclusive: return "inconclusive";
    }
    throw std::logic_error("status_code: bad status");
}

int resolve_thread_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("WARING_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

std::vector<ReportEntry> run_reproduction_suite(const ReproOptions& opts) {
    auto registry = build_registry(opts);
    std::vector<Claim> selected;
    for (auto& c : registry) {
        bool wanted = opts.scopes.empty();
        for (Scope s : opts.scopes) wanted = wanted || s == c.scope;
        if (wanted) selected.push_back(std::move(c));
    }

    std::vector<ReportEntry> report(selected.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < selected.size();) {
            ReportEntry& e = report[i];
            e.claim_id = selected[i].id;
            e.scope = selected[i].scope;
            try {
                Outcome oc = selected[i].run();
                e.status = oc.status;
                e.detail = std::move(oc.detail);
            } catch (const std::exception& ex) {
                e.status = ClaimStatus::Failed;
                e.detail = {{"error", ex.what()}};
            }
        }
    };
    int nthreads = std::max(1, resolve_thread_count(opts.threads));
    std::vector<std::thread> pool;
    for (int t = 1; t < nthreads && t < static_cast<int>(selected.size()); ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return report;
}

json report_to_json(const std::vector<ReportEntry>& report) {
    json out = json::array();
    for (const auto& e : report)
        out.push_back({{"claim_id", e.claim_id}, {"scope", scope_code(e.scope)},
                       {"status", status_code(e.status)}, {"detail", e.detail}});
    return out;
}

std::string format_report_table(const std::vector<ReportEntry>& report) {
    std::ostringstream os;
    for (const auto& e : report) {
        std::string detail = e.detail.dump();
        if (detail.size() > 72) detail = detail.substr(0, 69) + "...";
        os << std::left << std::setw(34) << e.claim_id << std::setw(9)
           << scope_code(e.scope) << std::setw(14) << status_code(e.status) << detail
           << '\n';
    }
    return os.str();
}

int report_exit_code(const std::vector<ReportEntry>& report) {
    bool exact_failed = false, any_failed = false, any_inconclusive = false;
    for (const auto& e : report) {
        if (e.status == ClaimStatus::Failed) {
            any_failed = true;
            if (e.scope == Scope::Exact) exact_failed = true;
        }
        if (e.status == ClaimStatus::Inconclusive) any_inconclusive = true;
    }
    if (exact_failed) return 1;
    if (any_failed || any_inconclusive) return 2;
    return 0;
}

}  // namespace waring
