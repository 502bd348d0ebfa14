#pragma once
/*
 * pruning: composition-specialized circuits with redundant macro
 * operators removed.
 *
 * For a FIXED composition k, most V operators in U_n act as the identity
 * on the reachable states and can be dropped.  The d=2 pruning is an
 * exact result; the d=3 pruning is an experimentally-found conjecture,
 * shipped behind the "pruned" mode and validated exhaustively (n <= 6,
 * every composition) by the test suite — a failure would be a
 * counterexample and is reported, never papered over.
 */

#include <utility>

#include "qdicke/circuit.hpp"
#include "qdicke/qudit_core.hpp"

namespace qdicke {

/*
 * Derived split points for a fixed composition:
 *   d=2:  l  = k_1
 *   d=3:  l2 = k_2,  l1 = k_1 + k_2,
 *         ktilde = k_2 if k_0 = 0, else max(k_1, k_2)
 */
struct PrunedSpec {
    CompositionVector k;

    explicit PrunedSpec(CompositionVector k_);

    int l() const;       // d=2 only
    int l1() const;      // d=3 only
    int l2() const;      // d=3 only
    int ktilde() const;  // d=3 only

    // Throws std::invalid_argument unless k is valid with d in {2, 3}.
    void validate() const;
};

// Pruned qubit circuit: per m (executed n down to 2), the surviving
// I_{m,l'} for l' in [max(l+m-n, 1), min(l, m-1)] ascending.  Empty for
// l in {0, n} (the target is already a product state).
Circuit build_pruned_u_qubit(const PrunedSpec& spec);

// Pruned qutrit circuit (conjecture): per m, the surviving two-level
// blocks I_{m,l} with l drawn, in ascending order, from the union of
//   [max(ktilde+m-n, 1), min(ktilde, m-1)]   (branches containing 0) and
//   [max(m-k1, 1),       min(k2, m-1)]       (branches on {1,2} alone —
// detaches from the first range when k1 > k0+k2, e.g. k = (1,3,1)),
// followed by the surviving three-level block II_{m,l1',l2'} over
//   l2' in [max(l2+m-n, 1), min(l2, m-2)],
//   l1' in [max(l1+m-n, l2'+1), min(l1, m-1)].
// Empty ranges contribute nothing.
Circuit build_pruned_u_qutrit(const PrunedSpec& spec);

// Dispatch on k.d (2 or 3; std::invalid_argument otherwise).
Circuit build_pruned_u(const CompositionVector& k);

// Exact (N_I, N_II) macro counts of the pruned circuit, evaluated from
// the closed-form sums (N_II = 0 for d=2).
std::pair<long long, long long> predicted_pruned_counts(const PrunedSpec& spec);

}  // namespace qdicke
