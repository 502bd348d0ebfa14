#pragma once
/*
 * synthesis: constructs the Dicke preparation circuits.
 *
 * The building block is the staged ladder operator
 *   V^(i_0, ..., i_{j-1})_{m, l_1, ..., l_{j-1}}
 * acting on wires 0..m-1, defined for strictly ascending levels i_0 < ...
 * < i_{j-1} and strictly descending split points l_1 > ... > l_{j-1} >= 1
 * with l_1 <= m-1.  On the sorted input that holds level i_0 on wires
 * >= l_1, level i_k on wires l_{k+1}..l_k-1, and level i_{j-1} below
 * l_{j-1}, it rotates amplitude from the "all sorted" branch into the j-1
 * branches where one boundary wire has been promoted, with coefficients
 * sqrt(k_s/m); on every other input it acts as the identity.
 *
 * Wider operators are products of V's:
 *   build_w_dj:  all level j-subsets x all split tuples at fixed j
 *   build_w:     j = 2..min(d, m) composed in ascending execution order
 *   build_u:     W_m embedded on the top m wires, m = n down to 2 in
 *                execution order; maps every sorted input to its Dicke state
 *
 * Synthesis of one V works by ACTIVE-BRANCH DIGIT TRACKING: the relevant
 * wires are RW = {l_k, l_k - 1 : k} u ({m-1} if i_0 > 0) minus wire 0, as
 * a set (coinciding wires merge).  Each wire's tracked digit starts at
 * its level in the sorted input.  Stages run k = j-1 down to 1; stage k
 * emits (a) a NOT X^(i_{k-1}, i_k) on wire l_k controlled on wire 0
 * holding i_k, which flips wire l_k's tracked digit to i_k, (b) a
 * rotation R^(i_{k-1}, i_k)(theta_{j-k}) on wire 0 controlled on every
 * relevant wire at its current tracked digit, and (c) the same NOT again.
 * The tracked digits single out the branch still eligible for later
 * rotations, and the set semantics handles every edge case (l_k = 1,
 * adjacent split points, i_0-control coinciding with a split wire).
 */

#include <string>
#include <vector>

#include "qdicke/circuit.hpp"

namespace qdicke {

struct VOperatorSpec {
    int m = 0;                // sub-register width; wires 0..m-1 active
    std::vector<int> levels;  // i_0 < i_1 < ... < i_{j-1}, j >= 2
    std::vector<int> ls;      // l_1 > l_2 > ... > l_{j-1} >= 1, l_1 <= m-1

    int j() const { return static_cast<int>(levels.size()); }
    // Throws std::invalid_argument on any ordering/range violation.
    void validate(int d) const;
};

/*
 * Rotation angles theta_1..theta_{j-1} (each in [-2*pi, 0]) solving
 *   cos(theta_1/2) = sqrt(l_{j-1}/m)
 *   cos(theta_s/2) * prod_{i'<s} (-sin(theta_{i'}/2))
 *       = sqrt((l_{j-s} - l_{j-s+1})/m)          for s = 2..j-1,
 * so that the branch weights multiply out to sqrt((m - l_1)/m) on the
 * final branch.  Arguments of arccos are clamped to [0, 1] to absorb
 * 1-ulp rounding overshoot.
 */
std::vector<double> solve_angles(int m, const std::vector<int>& ls);

// The tag shared by all gates of this V operator ("I[m,l]" for two-level
// V's at d <= 3, "II[m,l1,l2]" for the three-level qutrit V, and
// "V{j}(levels)[m,ls]" otherwise).
std::string v_tag(const VOperatorSpec& spec, int d);

// One V operator on wires 0..m-1 of an n-wire circuit.
Circuit build_v_operator(const VOperatorSpec& spec, int d, int n);

// All V's of ladder width j: split tuples enumerate with l_{j-1} in the
// outermost ascending loop and l_1 innermost; for each tuple the level
// j-subsets run in lexicographic ascending execution order.
Circuit build_w_dj(int m, int d, int j, int n);

// The full recursion-step operator W_m on wires 0..m-1.
Circuit build_w(int m, int d, int n);

// The Dicke operator U_n: W_m on the top m wires for m = n down to 2 in
// execution order (empty for n = 1).
Circuit build_u(int n, int d);

// Number of V operators in W_m counting the j=1 identity terms:
// binom(m+d-1, d-1), the number of weak d-compositions of m.
long long predicted_w_count(int m, int d);

// Number of V operators in U_n counting identity terms:
// sum_{m=2..n} binom(m+d-1, d-1) = binom(n+d, d) - d - 1.
long long predicted_v_count(int n, int d);

// Emitted (non-identity) V instances in a synthesized circuit, derived
// from the macro-tag census (an "I" tag covers three V's when d = 3).
long long count_v_operators(const Circuit& c);

}  // namespace qdicke
