#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "waring/json_io.hpp"

namespace waring {

// Reproduction report: one entry per claim, stable ids, machine-readable
// detail. The claim list is fixed; scopes select subsets of it.

enum class Scope { Exact, Bounds, Tableau, Numeric };
enum class ClaimStatus { Reproduced, Derived, Failed, Inconclusive };

struct ReportEntry {
    std::string claim_id;
    Scope scope = Scope::Exact;
    ClaimStatus status = ClaimStatus::Failed;
    json detail;
};

std::string scope_code(Scope s);
Scope scope_from_code(const std::string& code);  // also accepts "all" -> throws
std::string status_code(ClaimStatus s);

struct ReproOptions {
    std::vector<Scope> scopes;        // empty selects every scope
    int seeds = 24;                   // 0 drops the random-search claims
    std::uint64_t seed0 = 1;          // base seed for the numeric scope
    long long max_nodes = 1'000'000'000;  // tableau contraction budget
    int threads = 0;                  // 0 = WARING_THREADS env, then hardware
};

// Claims run concurrently; the returned list is in registry order
// regardless of completion order. A claim that throws becomes a failed
// entry carrying the message.
std::vector<ReportEntry> run_reproduction_suite(const ReproOptions& opts = {});

json report_to_json(const std::vector<ReportEntry>& report);
std::string format_report_table(const std::vector<ReportEntry>& report);

// 1 when an exact-scope claim failed; 2 when nothing exact failed but some
// claim failed elsewhere or came back inconclusive; 0 otherwise.
int report_exit_code(const std::vector<ReportEntry>& report);

// requested if positive, else the WARING_THREADS environment variable,
// else hardware concurrency.
int resolve_thread_count(int requested);

}  // namespace waring
