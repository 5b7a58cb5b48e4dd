#include "supercong/sweep.hpp"

#include <algorithm>
#include <thread>

namespace supercong {

std::vector<long> primes_in(long lo, long hi) {
    std::vector<long> ps;
    for (long n = std::max(lo, 2L); n <= hi; ++n) {
        bool prime = n >= 2;
        for (long q = 2; q * q <= n; ++q)
            if (n % q == 0) {
                prime = false;
                break;
            }
        if (prime) ps.push_back(n);
    }
    return ps;
}

std::vector<const CongruenceCase*> select_cases(const SweepConfig& cfg) {
    std::vector<const CongruenceCase*> out;
    for (const auto& c : registry()) {
        if (!cfg.ids.empty() &&
            std::find(cfg.ids.begin(), cfg.ids.end(), c.id) == cfg.ids.end())
            continue;
        if (cfg.status_filter && c.status != *cfg.status_filter) continue;
        out.push_back(&c);
    }
    return out;
}

SweepReport run_sweep(const SweepConfig& cfg) {
    const auto cases = select_cases(cfg);
    const auto primes = primes_in(cfg.pmin, cfg.pmax);
    EvalOptions opt;
    opt.guard = cfg.guard;
    opt.draws = cfg.draws;
    opt.seed = cfg.seed;
    opt.mod_exp = cfg.mod_exp;

    const int W = std::max(1, cfg.workers);
    std::vector<std::vector<CheckResult>> buckets(static_cast<size_t>(W));

    auto work = [&](int w) {
        SeqCache cache;
        auto& out = buckets[static_cast<size_t>(w)];
        for (size_t i = static_cast<size_t>(w); i < primes.size(); i += static_cast<size_t>(W)) {
            long p = primes[i];
            CtxPool pool(p, &cache);
            for (const auto* c : cases) out.push_back(evaluate(*c, p, pool, opt));
        }
    };

    if (W == 1) {
        work(0);
    } else {
        std::vector<std::thread> ts;
        ts.reserve(static_cast<size_t>(W));
        for (int w = 0; w < W; ++w) ts.emplace_back(work, w);
        for (auto& t : ts) t.join();
    }

    SweepReport rep;
    for (auto& b : buckets)
        for (auto& r : b) rep.records.push_back(std::move(r));
    if (cfg.sorted) {
        std::stable_sort(rep.records.begin(), rep.records.end(),
                         [](const CheckResult& a, const CheckResult& b) {
                             return std::tie(a.case_id, a.p) < std::tie(b.case_id, b.p);
                         });
    }
    for (const auto& r : rep.records) {
        switch (r.verdict) {
            case CheckResult::Verdict::pass: ++rep.passes; break;
            case CheckResult::Verdict::skipped: ++rep.skips; break;
            case CheckResult::Verdict::fail: {
                ++rep.fails;
                if (!r.exploratory) {
                    const CongruenceCase* c = find_case(r.case_id);
                    if (c && c->status == Status::conjecture)
                        ++rep.conjecture_fails;
                    else
                        ++rep.theorem_fails;
                }
                break;
            }
        }
    }
    return rep;
}

int report_exit_code(const SweepReport& r) {
    if (r.theorem_fails > 0) return 1;
    if (r.conjecture_fails > 0) return 2;
    return 0;
}

} // namespace supercong
