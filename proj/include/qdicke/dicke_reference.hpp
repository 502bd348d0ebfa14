#pragma once
/*
 * dicke_reference: ground-truth Dicke states built by brute-force basis
 * enumeration, plus the defining recursion as an oracle.  Deliberately
 * independent of the synthesizer so circuit output can be checked against
 * it.
 *
 * The Dicke state |D^n(k)> is the equal-weight superposition (coefficient
 * 1/sqrt(multinomial(k))) of every n-qudit basis string whose digit
 * multiset has multiplicities k = (k_0, ..., k_{d-1}).
 */

#include <cstdint>
#include <vector>

#include "qdicke/qudit_core.hpp"

namespace qdicke {

// Exact binomial coefficient; throws std::length_error for n > 60 (the
// largest n whose row fits comfortably in 64 bits).
std::uint64_t binomial(int n, int k);

// n! / prod_j k_j!, exactly, via a product of binomials; guarded to
// n <= 20 (std::length_error beyond).
std::uint64_t multinomial(const CompositionVector& k);

// Amplitude 1/sqrt(multinomial(k)) on every basis index whose digit
// multiset matches k; zero elsewhere.  Guarded by the default amplitude
// cap (2^20).
QuditState reference_dicke_state(const CompositionVector& k);

// Checks the defining recursion
//   |D^n(k)> = sum_s sqrt(k_s / n) |D^(n-1)(k - s_hat)> (x) |s>
// amplitude-wise within kZeroTol (terms with k_s = 0 are skipped).
bool recursion_check(const CompositionVector& k);

// All weak d-compositions of n in lexicographic ascending order of
// (k_0, ..., k_{d-1}).
std::vector<CompositionVector> all_compositions(int n, int d);

}  // namespace qdicke
