#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "waring/catalog.hpp"
#include "waring/json_io.hpp"
#include "waring/numeric.hpp"
#include "waring/repro.hpp"
#include "waring/tableau.hpp"

namespace {

void emit(const waring::json& j, const std::string& out_path) {
    if (out_path.empty())
        std::cout << j.dump(2) << '\n';
    else
        waring::write_json_file(out_path, j);
}

std::string describe(const waring::FamilyId& id) {
    return waring::family_code(id.kind) + " n=" + std::to_string(id.n);
}

int cmd_generate(const std::string& family, int n, const std::string& out) {
    waring::FamilyId id{waring::family_kind_from_code(family), n};
    if (id.kind == waring::FamilyKind::MatMulTensor)
        emit(waring::tensor_to_json(waring::make_matmul_tensor(n)), out);
    else
        emit(waring::cubic_to_json(waring::family_cubic(id)), out);
    return 0;
}

template <class K>
int verify_exact_doc(const waring::WaringDecomposition<K>& d) {
    auto res = waring::verify_exact(d);
    std::string target = d.family ? describe(*d.family) : "inline cubic";
    if (res.ok) {
        std::cerr << "ok: " << d.terms.size() << " cubes sum to scale * (" << target
                  << "), residual identically zero\n";
        return 0;
    }
    std::cerr << "FAIL: residual has " << res.residual.term_count()
              << " nonzero monomials against " << target << '\n';
    return 1;
}

int cmd_verify(const std::string& path) {
    waring::json j = waring::read_json_file(path);
    switch (waring::classify_decomposition(j)) {
        case waring::DecompositionKind::Rational:
            return verify_exact_doc(waring::decomposition_rational_from_json(j));
        case waring::DecompositionKind::Quadratic:
            return verify_exact_doc(waring::decomposition_quadext_from_json(j));
        case waring::DecompositionKind::Numeric: {
            auto d = waring::numeric_decomposition_from_json(j);
            double rel = waring::residual(d).relative;
            bool ok = rel < 1e-10;
            std::cerr << (ok ? "ok" : "FAIL") << ": relative residual " << rel
                      << " for " << describe(d.target) << " (numeric threshold 1e-10)\n";
            return ok ? 0 : 1;
        }
    }
    return 1;
}

int cmd_build(const std::string& construction, int n, const std::string& out) {
    auto need_n = [&](int lo) {
        if (n < lo)
            throw CLI::ValidationError("--n must be at least " + std::to_string(lo) +
                                       " for construction '" + construction + "'");
    };
    int rc = 0;
    auto finish = [&](const auto& d) {
        if (!waring::verify_exact(d).ok) {
            std::cerr << "warning: construction does not verify against its target\n";
            rc = 1;
        }
        emit(waring::decomposition_to_json(d), out);
    };
    if (construction == "pn") {
        need_n(2);
        finish(waring::build_pn_decomposition(n));
    } else if (construction == "pnplus") {
        need_n(3);
        finish(waring::build_pn_plus_decomposition(n));
    } else if (construction == "modest") {
        need_n(1);
        finish(waring::build_modest_upper_bound(n));
    } else if (construction == "appendix-smz6") {
        finish(waring::load_smz6_30());
    } else if (construction == "appendix-smz7") {
        finish(waring::load_smz7_48());
    } else {
        throw CLI::ValidationError("unknown construction '" + construction + "'");
    }
    return rc;
}

int cmd_reduce(const std::string& path, const std::string& to, const std::string& out) {
    if (to != "matmul") throw CLI::ValidationError("--to only supports 'matmul'");
    waring::json j = waring::read_json_file(path);
    if (waring::classify_decomposition(j) != waring::DecompositionKind::Rational)
        throw std::invalid_argument("reduce expects a rational decomposition document");
    auto d = waring::decomposition_rational_from_json(j);
    auto td = waring::extract_matmul_decomposition(d);
    int m = d.family->n / 3;
    std::cerr << "ok: " << td.terms.size() << " rank-one terms for the " << m << "x" << m
              << " matrix multiplication tensor\n";
    emit(waring::tensor_decomposition_to_json(td), out);
    return 0;
}

int cmd_bound(const std::string& path, int p, int primes, std::uint64_t seed,
              const std::string& out) {
    waring::json j = waring::read_json_file(path);
    auto f = waring::cubic_from_json(j);
    auto rep = p >= 0 ? waring::border_rank_lower_bound(f, p, primes, seed)
                      : waring::border_rank_lower_bound(f);
    emit(waring::flattening_report_to_json(rep), out);
    return rep.exact ? 0 : 2;
}

int cmd_tableau_eval(const std::string& target, long long max_nodes,
                     const std::string& out) {
    if (target != "sms3")
        throw CLI::ValidationError("--target only supports 'sms3'");
    auto v = waring::eval_contraction(waring::t10(),
                                      waring::as_sym_tensor(waring::make_smn_s(3)),
                                      max_nodes);
    waring::json j{{"value", v.value.str()}, {"nonzero", v.nonzero}};
    if (!v.conclusive) j["conclusive"] = false;
    emit(j, out);
    return v.conclusive ? 0 : 2;
}

int cmd_search(const std::string& family, int n, int k, const std::string& mask_name,
               const waring::SearchOptions& so, const std::string& out) {
    waring::FamilyId id{waring::family_kind_from_code(family), n};
    const waring::StructureMask* mask = nullptr;
    waring::StructureMask pattern;
    if (mask_name == "prop10") {
        pattern = waring::ten_cube_pattern_mask();
        mask = &pattern;
        if (!(id.kind == waring::FamilyKind::Symmetric && n == 3 && k == 10))
            throw CLI::ValidationError(
                "--mask prop10 is the 10-cube pattern on sms n=3 (use --k 10)");
    } else if (!mask_name.empty()) {
        throw CLI::ValidationError("unknown mask '" + mask_name + "'");
    }
    auto res = waring::search(id, k, mask, so);
    std::cout << waring::json{{"success", res.success},
                              {"best_relative", res.best_relative},
                              {"seeds_run", res.seeds_run}}
                     .dump(2)
              << '\n';
    if (!out.empty() && res.success)
        waring::write_json_file(out, waring::decomposition_to_json(res.best));
    return res.success ? 0 : 1;
}

waring::NumericDecomposition load_numeric_input(const std::string& path,
                                                const std::string& fixture,
                                                const waring::StructureMask** mask) {
    static waring::StructureMask mask18, mask10;
    if (!fixture.empty()) {
        if (fixture == "sm3-18") {
            mask18 = waring::load_sm3_18_mask();
            if (mask) *mask = &mask18;
            return waring::load_sm3_18();
        }
        if (fixture == "sms3-10") {
            mask10 = waring::load_sms3_10_mask();
            if (mask) *mask = &mask10;
            return waring::load_sms3_10();
        }
        if (fixture == "sms03-8") return waring::load_sms03_8();
        throw CLI::ValidationError("unknown fixture '" + fixture + "'");
    }
    waring::json j = waring::read_json_file(path);
    switch (waring::classify_decomposition(j)) {
        case waring::DecompositionKind::Numeric:
            return waring::numeric_decomposition_from_json(j);
        case waring::DecompositionKind::Rational:
            return waring::to_numeric(waring::decomposition_rational_from_json(j));
        case waring::DecompositionKind::Quadratic:
            return waring::to_numeric(waring::decomposition_quadext_from_json(j));
    }
    throw std::invalid_argument("unreadable decomposition document");
}

int cmd_refine(const std::string& path, const std::string& fixture,
               const std::string& out) {
    const waring::StructureMask* mask = nullptr;
    auto d = load_numeric_input(path, fixture, &mask);
    double before = waring::residual(d).relative;
    auto refined = waring::refine(d, mask);
    double after = waring::residual(refined).relative;
    std::cerr << "relative residual " << before << " -> " << after << '\n';
    emit(waring::decomposition_to_json(refined), out);
    return 0;
}

int cmd_localdim(const std::string& path, const std::string& fixture,
                 const std::string& out) {
    // the dimension estimate only makes sense at a solution, so built-in
    // starting points are polished first
    const waring::StructureMask* mask = nullptr;
    auto d = load_numeric_input(path, fixture, &mask);
    if (!fixture.empty()) d = waring::refine(d, mask);
    auto rep = waring::local_dimension(d);
    emit(waring::localdim_report_to_json(rep), out);
    return rep.conclusive ? 0 : 2;
}

int cmd_repro(const std::string& scope, const std::string& json_path,
              const waring::ReproOptions& base) {
    waring::ReproOptions opts = base;
    if (scope != "all") opts.scopes = {waring::scope_from_code(scope)};
    auto report = waring::run_reproduction_suite(opts);
    std::cout << waring::format_report_table(report);
    if (!json_path.empty()) waring::write_json_file(json_path, waring::report_to_json(report));
    return waring::report_exit_code(report);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for Waring decompositions of matrix trace cubics"};
    app.require_subcommand(1);

    std::string family = "sm", out, path, construction, to = "matmul";
    std::string mask_name, fixture, scope = "all", report_path, tableau_target = "sms3";
    int n = 3, k = 10, p = -1, primes = 2;
    std::uint64_t seed = 0;
    long long max_nodes = 1'000'000'000;
    waring::SearchOptions so;
    waring::ReproOptions ro;

    auto* gen = app.add_subcommand("generate", "write a family target as JSON");
    gen->add_option("--family", family, "sm, sms, sms0, smz or mm")->required();
    gen->add_option("--n", n, "matrix size")->required()->check(CLI::PositiveNumber);
    gen->add_option("--out", out, "output path (default stdout)");

    auto* ver = app.add_subcommand("verify", "check a decomposition document");
    ver->add_option("file", path, "decomposition JSON")->required();

    auto* bld = app.add_subcommand("build", "construct a stored or generated decomposition");
    bld->add_option("--construction", construction,
                    "pn, pnplus, modest, appendix-smz6 or appendix-smz7")
        ->required();
    bld->add_option("--n", n, "matrix size (pn, pnplus, modest)");
    bld->add_option("--out", out, "output path (default stdout)");

    auto* red = app.add_subcommand("reduce", "transport a verified decomposition to the "
                                             "matrix multiplication tensor");
    red->add_option("file", path, "decomposition JSON")->required();
    red->add_option("--to", to, "only 'matmul'");
    red->add_option("--out", out, "output path (default stdout)");

    auto* bnd = app.add_subcommand("bound", "Koszul flattening border rank lower bound");
    bnd->add_option("file", path, "cubic JSON")->required();
    bnd->add_option("--p", p, "exterior power (default floor((N-1)/2))");
    bnd->add_option("--primes", primes, "number of modular ranks")->check(CLI::PositiveNumber);
    bnd->add_option("--seed", seed, "prime sampling seed");
    bnd->add_option("--out", out, "output path (default stdout)");

    auto* tev = app.add_subcommand("tableau-eval", "degree-10 invariant of a named cubic");
    tev->add_option("--target", tableau_target, "only 'sms3'");
    tev->add_option("--max-nodes", max_nodes, "contraction node budget");
    tev->add_option("--out", out, "output path (default stdout)");

    app.add_subcommand("tableau-check-coverage",
                       "confirm every label pair of the invariant shares a column");

    auto* sea = app.add_subcommand("search", "random-restart numeric decomposition search");
    sea->add_option("--family", family, "sm, sms, sms0 or smz")->required();
    sea->add_option("--n", n, "matrix size")->required()->check(CLI::PositiveNumber);
    sea->add_option("--k", k, "number of cubes")->required()->check(CLI::PositiveNumber);
    sea->add_option("--mask", mask_name, "structure mask (prop10)");
    sea->add_option("--seeds", so.seeds, "random restarts")->check(CLI::PositiveNumber);
    sea->add_option("--tol", so.tol, "relative residual success threshold");
    sea->add_option("--seed0", so.seed0, "base RNG seed");
    sea->add_option("--threads", so.threads, "worker threads (default WARING_THREADS)");
    sea->add_option("--out", out, "write the best decomposition here on success");

    auto* ref = app.add_subcommand("refine", "polish a numeric decomposition");
    ref->add_option("file", path, "decomposition JSON");
    ref->add_option("--fixture", fixture, "built-in starting point: sm3-18, sms3-10, sms03-8");
    ref->add_option("--out", out, "output path (default stdout)");

    auto* loc = app.add_subcommand("localdim", "Jacobian rank and local dimension at a "
                                               "refined point");
    loc->add_option("file", path, "decomposition JSON");
    loc->add_option("--fixture", fixture,
                    "built-in starting point (refined first): sm3-18, sms3-10, sms03-8");
    loc->add_option("--out", out, "output path (default stdout)");

    auto* rep = app.add_subcommand("repro", "run the claim reproduction suite");
    rep->add_option("--scope", scope, "exact, bounds, tableau, numeric or all");
    rep->add_option("--json", report_path, "write the machine-readable report here");
    rep->add_option("--seeds", ro.seeds, "search restarts (0 keeps refinement-only entries)");
    rep->add_option("--seed0", ro.seed0, "base RNG seed for the numeric scope");
    rep->add_option("--threads", ro.threads, "claim worker threads (default WARING_THREADS)");
    rep->add_option("--max-nodes", ro.max_nodes, "tableau contraction node budget");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_generate(family, n, out);
        if (ver->parsed()) return cmd_verify(path);
        if (bld->parsed()) return cmd_build(construction, bld->count("--n") ? n : 0, out);
        if (red->parsed()) return cmd_reduce(path, to, out);
        if (bnd->parsed()) return cmd_bound(path, p, primes, seed, out);
        if (tev->parsed()) return cmd_tableau_eval(tableau_target, max_nodes, out);
        if (app.get_subcommand("tableau-check-coverage")->parsed()) {
            bool ok = waring::pair_coverage(waring::t10());
            emit(waring::json{{"pair_coverage", ok}}, out);
            return ok ? 0 : 1;
        }
        if (sea->parsed()) {
            so.threads = waring::resolve_thread_count(so.threads);
            return cmd_search(family, n, k, mask_name, so, out);
        }
        if (ref->parsed()) {
            if (path.empty() == fixture.empty())
                throw CLI::ValidationError("refine needs a file or --fixture, not both");
            return cmd_refine(path, fixture, out);
        }
        if (loc->parsed()) {
            if (path.empty() == fixture.empty())
                throw CLI::ValidationError("localdim needs a file or --fixture, not both");
            return cmd_localdim(path, fixture, out);
        }
        if (rep->parsed()) return cmd_repro(scope, report_path, ro);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
