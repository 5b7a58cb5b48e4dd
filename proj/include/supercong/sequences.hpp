#pragma once

#include <vector>

#include "supercong/modtables.hpp"

namespace supercong {

enum class SeqTag { domb, az, w };

// definition = the defining triple/quadruple-binomial sum; reduced = the
// single-index rewrite; reduced_alt = the second rewrite (az only).
enum class SeqFormula { definition, reduced, reduced_alt };

// Exact integer values S_0..S_{n_max} under the selected formula.
std::vector<Int> sequence_exact(SeqTag tag, SeqFormula formula, long n_max);

// Residues mod p^m, computed natively in modular arithmetic with
// valuation-tracked binomials (exact: no division by p ever occurs).
std::vector<Int> sequence_mod(SeqTag tag, long n_max, long p, int m);
std::vector<Int> sequence_mod(SeqTag tag, long n_max, FactTable& fact);

} // namespace supercong
