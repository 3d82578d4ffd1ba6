#pragma once

#include "ktheory/intmat.hpp"

namespace a2ck::ktheory {

// Determinant-divisor route to the invariant factors: d_k = gcd of all k x k
// minors, invariant factor s_k = d_k / d_{k-1}. Exponential in the dimension,
// usable up to ~7x7; deliberately shares no code with smith_normal_form so
// the two can cross-check each other.
std::vector<Int> invariant_factors_by_minors(const IntMatrix& a);

// Runs `count` random matrices (dims <= 6, entries in [-9,9], deterministic
// seed) through both routes; returns a human-readable summary, throws
// Errc::count_mismatch on the first disagreement.
std::string snf_minors_crosscheck(int count, std::uint64_t seed);

}  // namespace a2ck::ktheory
