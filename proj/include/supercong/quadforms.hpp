#pragma once

#include <string>
#include <vector>

#include "supercong/rational.hpp"

namespace supercong {

// Sign conventions used by the congruence right-hand sides.
enum class Normalization {
    positive,   // x > 0, y > 0
    x_mod4_1,   // x = 1 mod 4, y > 0
    L_mod3_1,   // x = 1 mod 3, y > 0 (the L of 4p = L^2 + 27M^2)
    x_mod3_1,   // x = 1 mod 3, y > 0
    AB_pair,    // x = 1 mod 4 and y = x mod 3
};

// Equation multiplier*p = x^2 + d*y^2 plus the sign normalization.
struct FormSpec {
    int multiplier;  // 1, 2 or 4
    int d;           // 1, 2, 3, 4, 9 or 27
    Normalization norm;

    std::string str() const;
    bool operator==(const FormSpec&) const = default;
};

struct QuadRep {
    long x;
    long y;
    FormSpec spec;
};

// All integer solutions (x, y) of multiplier*p = x^2 + d*y^2 (both signs).
std::vector<std::pair<long, long>> all_representations(long p, int multiplier, int d);

// The unique normalized solution. Throws NotRepresentable when the form does
// not represent multiplier*p, AmbiguousNormalization if the normalization
// fails to pin a single solution.
QuadRep represent(long p, const FormSpec& spec);

// The c of the 864-kernel closed form: p = x^2 + y^2 with x odd, x = 1 mod 4;
// c = x (p = 1 mod 12, 3 not dividing x), -x (p = 1 mod 12, 3 | x), or the
// y with y = x mod 3 (p = 5 mod 12). Requires p = 1 mod 4.
long c_value(long p);

const char* norm_name(Normalization n);

} // namespace supercong
