#include "supercong/quadforms.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace supercong {

const char* norm_name(Normalization n) {
    switch (n) {
        case Normalization::positive: return "positive";
        case Normalization::x_mod4_1: return "x=1 mod 4";
        case Normalization::L_mod3_1: return "L=1 mod 3";
        case Normalization::x_mod3_1: return "x=1 mod 3";
        case Normalization::AB_pair: return "x=1 mod 4, y=x mod 3";
    }
    return "?";
}

std::string FormSpec::str() const {
    std::ostringstream os;
    if (multiplier != 1) os << multiplier;
    os << "p = x^2";
    if (d != 1) os << " + " << d << "y^2";
    else os << " + y^2";
    os << " [" << norm_name(norm) << "]";
    return os.str();
}

std::vector<std::pair<long, long>> all_representations(long p, int multiplier, int d) {
    const long n = multiplier * p;
    std::set<std::pair<long, long>> sols;
    for (long x = 0; x * x <= n; ++x) {
        long r = n - x * x;
        if (r % d != 0) continue;
        long y2 = r / d;
        long y = std::lround(std::sqrt(static_cast<double>(y2)));
        while (y * y > y2) --y;
        while ((y + 1) * (y + 1) <= y2) ++y;
        if (y * y != y2) continue;
        for (long sx : {x, -x})
            for (long sy : {y, -y}) sols.emplace(sx, sy);
    }
    return {sols.begin(), sols.end()};
}

namespace {

bool satisfies(long x, long y, Normalization norm) {
    auto mod = [](long a, long m) { return ((a % m) + m) % m; };
    switch (norm) {
        case Normalization::positive: return x > 0 && y > 0;
        case Normalization::x_mod4_1: return mod(x, 4) == 1 && y > 0;
        case Normalization::L_mod3_1:
        case Normalization::x_mod3_1: return mod(x, 3) == 1 && y > 0;
        case Normalization::AB_pair: return mod(x, 4) == 1 && mod(y - x, 3) == 0;
    }
    return false;
}

} // namespace

QuadRep represent(long p, const FormSpec& spec) {
    auto sols = all_representations(p, spec.multiplier, spec.d);
    std::vector<std::pair<long, long>> keep;
    for (auto& [x, y] : sols)
        if (satisfies(x, y, spec.norm)) keep.emplace_back(x, y);
    if (keep.empty())
        throw NotRepresentable(spec.str() + " has no solution at p=" + std::to_string(p));
    if (keep.size() > 1)
        throw AmbiguousNormalization(spec.str() + " has " + std::to_string(keep.size()) +
                                     " normalized solutions at p=" + std::to_string(p));
    return {keep[0].first, keep[0].second, spec};
}

long c_value(long p) {
    if (p % 4 != 1) throw DomainError("c_value requires p = 1 mod 4");
    QuadRep r = represent(p, {1, 1, Normalization::x_mod4_1});  // x odd, x = 1 mod 4, y > 0
    if (p % 12 == 1) return r.x % 3 == 0 ? -r.x : r.x;
    // p = 5 mod 12: neither coordinate is divisible by 3; pick the y sign
    // congruent to x.
    long y = ((r.y - r.x) % 3 + 3) % 3 == 0 ? r.y : -r.y;
    if (((y - r.x) % 3 + 3) % 3 != 0)
        throw NotRepresentable("no y = x mod 3 at p=" + std::to_string(p));
    return y;
}

} // namespace supercong
