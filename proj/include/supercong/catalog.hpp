#pragma once

#include <atomic>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "supercong/engines.hpp"
#include "supercong/rng.hpp"

namespace supercong {

enum class Status { theorem, lemma, conjecture };
const char* status_name(Status s);

struct Params {
    std::vector<std::pair<std::string, Rat>> v;
    bool empty() const { return v.empty(); }
    const Rat& get(const std::string& name) const;
    std::string str() const;  // "a=-1/3;b=1/4"
};

struct CheckResult {
    enum class Verdict { pass, fail, skipped };
    std::string case_id;
    long p = 0;
    int modulus = 0;  // exponent actually used
    Int lhs = 0, rhs = 0;
    Verdict verdict = Verdict::skipped;
    std::string reason;
    std::string params;
    int draws = 0;
    bool exploratory = false;  // modulus raised above the registry exponent
    std::string probe;         // exploratory higher-modulus probe, if any
};

const char* verdict_name(CheckResult::Verdict v);

// One registry entry: applicability predicate, modulus exponent, and the
// chain of quantities that must all agree mod p^m (first entry is the
// reported LHS).
struct CongruenceCase {
    std::string id;
    Status status = Status::theorem;
    int modulus = 2;
    std::string condition;
    std::string citation;
    bool parameterized = false;

    std::function<bool(long)> residue_ok;                   // residue-class condition
    std::vector<std::pair<long, Rat>> fixed_divisors;       // (d, e): skip when degenerate at p
    long exclude_p = 0;                                     // a single excluded prime, if any
    std::function<int(long)> modulus_override;              // p-dependent modulus (optional)
    int probe_modulus = 0;                                  // extra exploratory reduction
    std::function<bool(long)> probe_when;

    std::function<std::optional<Params>(SplitMix&, long)> sample;
    std::function<std::vector<PadicNum>(EvalContext&, const Params&)> sides;

    int modulus_for(long p) const;
    // empty string = applicable; otherwise the skip reason
    std::string applicable(long p) const;
};

struct EvalOptions {
    int guard = 3;
    int draws = 50;   // parameter draws per prime for parameterized entries
    uint64_t seed = 1;
    std::optional<int> mod_exp;  // global modulus override
};

const std::vector<CongruenceCase>& registry();
const CongruenceCase* find_case(const std::string& id);

CheckResult evaluate(const CongruenceCase& c, long p, CtxPool& pool, const EvalOptions& opt);
CheckResult evaluate(const CongruenceCase& c, long p, const EvalOptions& opt = {});
// Fixed parameters (fixture/testing path); bypasses the sampler.
CheckResult evaluate_with_params(const CongruenceCase& c, long p, const Params& ps,
                                 CtxPool& pool, const EvalOptions& opt);

// Times the PrecisionLoss retry path was taken (telemetry for tests).
long precision_retries();
void reset_precision_retries();

} // namespace supercong
