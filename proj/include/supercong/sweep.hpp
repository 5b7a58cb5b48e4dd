#pragma once

#include "supercong/catalog.hpp"

namespace supercong {

struct SweepConfig {
    std::vector<std::string> ids;          // empty = every entry
    std::optional<Status> status_filter;
    long pmin = 5;
    long pmax = 500;
    std::optional<int> mod_exp;
    int guard = 3;
    int draws = 50;
    uint64_t seed = 1;
    int workers = 1;
    bool sorted = false;  // order records by (case, p)
};

struct SweepReport {
    std::vector<CheckResult> records;
    long passes = 0, fails = 0, skips = 0;
    long theorem_fails = 0;     // status theorem/lemma, non-exploratory
    long conjecture_fails = 0;  // status conjecture, non-exploratory
};

std::vector<long> primes_in(long lo, long hi);

// Selected registry entries under the config filters (registry order).
std::vector<const CongruenceCase*> select_cases(const SweepConfig& cfg);

// Shards primes across workers; each worker owns its caches. With one
// worker, records appear prime-major in registry order.
SweepReport run_sweep(const SweepConfig& cfg);

// 0 = clean; 1 = theorem/lemma failure; 2 = conjecture counterexample.
int report_exit_code(const SweepReport& r);

} // namespace supercong
