#include "qdicke/pruning.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "qdicke/synthesis.hpp"

namespace qdicke {

namespace {

// Splits l whose two-level block I_{m,l} must survive at step m of the
// pruned qutrit circuit.  Sorting the target composition k = (k0, k1, k2)
// step by step only ever visits compositions dominated by k, and each one
// with exactly two distinct symbols has a single designated operator:
//   * branches that still contain symbol 0 need
//       l in [max(ktilde + m - n, 1), min(ktilde, m - 1)],
//   * branches supported on {1, 2} alone need
//       l in [max(m - k1, 1), min(k2, m - 1)].
// The two ranges coincide when k0 = 0 and the first contains the second
// while k1 <= k0 + k2, but they detach for lopsided compositions such as
// (1, 3, 1), so both are kept; every other operator is inert on every
// reachable branch and is dropped.
std::vector<int> qutrit_i_splits(const PrunedSpec& spec, int m) {
    const int n = spec.k.n();
    const int kt = spec.ktilde();
    const int k1 = spec.k.parts[1];
    const int k2 = spec.k.parts[2];
    std::set<int> splits;
    for (int l = std::max(kt + m - n, 1); l <= std::min(kt, m - 1); ++l)
        splits.insert(l);
    for (int l = std::max(m - k1, 1); l <= std::min(k2, m - 1); ++l)
        splits.insert(l);
    return {splits.begin(), splits.end()};
}

}  // namespace

PrunedSpec::PrunedSpec(CompositionVector k_) : k(std::move(k_)) { validate(); }

void PrunedSpec::validate() const {
    k.validate();
    if (k.d != 2 && k.d != 3)
        throw std::invalid_argument("PrunedSpec: pruning is defined for d in {2, 3}");
    if (k.n() < 1)
        throw std::invalid_argument("PrunedSpec: composition sums to zero");
}

int PrunedSpec::l() const {
    if (k.d != 2) throw std::invalid_argument("PrunedSpec::l: d != 2");
    return k.parts[1];
}

int PrunedSpec::l1() const {
    if (k.d != 3) throw std::invalid_argument("PrunedSpec::l1: d != 3");
    return k.parts[1] + k.parts[2];
}

int PrunedSpec::l2() const {
    if (k.d != 3) throw std::invalid_argument("PrunedSpec::l2: d != 3");
    return k.parts[2];
}

int PrunedSpec::ktilde() const {
    if (k.d != 3) throw std::invalid_argument("PrunedSpec::ktilde: d != 3");
    return k.parts[0] == 0 ? k.parts[2] : std::max(k.parts[1], k.parts[2]);
}

Circuit build_pruned_u_qubit(const PrunedSpec& spec) {
    spec.validate();
    if (spec.k.d != 2)
        throw std::invalid_argument("build_pruned_u_qubit: need d = 2");
    const int n = spec.k.n();
    const int l = spec.l();
    Circuit c(2, n);
    if (l == 0 || l == n) return c;  // target is already a product state
    for (int m = n; m >= 2; --m) {
        Circuit w(2, m);
        VOperatorSpec v;
        v.m = m;
        v.levels = {0, 1};
        for (int lp = std::max(l + m - n, 1); lp <= std::min(l, m - 1); ++lp) {
            v.ls = {lp};
            w.append(build_v_operator(v, 2, m));
        }
        c.append(shift_wires(w, n, n - m));
    }
    return c;
}

Circuit build_pruned_u_qutrit(const PrunedSpec& spec) {
    spec.validate();
    if (spec.k.d != 3)
        throw std::invalid_argument("build_pruned_u_qutrit: need d = 3");
    const int n = spec.k.n();
    const int l1 = spec.l1();
    const int l2 = spec.l2();
    Circuit c(3, n);
    for (int m = n; m >= 2; --m) {
        Circuit w(3, m);
        // Surviving two-level block: I_{m,l} = V^(0,1) V^(0,2) V^(1,2).
        VOperatorSpec v;
        v.m = m;
        for (int l : qutrit_i_splits(spec, m)) {
            v.ls = {l};
            for (const auto& pair :
                 {std::vector<int>{0, 1}, {0, 2}, {1, 2}}) {
                v.levels = pair;
                w.append(build_v_operator(v, 3, m));
            }
        }
        // Surviving three-level block: II_{m,l1',l2'}.
        v.levels = {0, 1, 2};
        for (int l2p = std::max(l2 + m - n, 1); l2p <= std::min(l2, m - 2); ++l2p) {
            for (int l1p = std::max({l1 + m - n, l2p + 1});
                 l1p <= std::min(l1, m - 1); ++l1p) {
                v.ls = {l1p, l2p};
                w.append(build_v_operator(v, 3, m));
            }
        }
        c.append(shift_wires(w, n, n - m));
    }
    return c;
}

Circuit build_pruned_u(const CompositionVector& k) {
    const PrunedSpec spec(k);
    return k.d == 2 ? build_pruned_u_qubit(spec) : build_pruned_u_qutrit(spec);
}

std::pair<long long, long long> predicted_pruned_counts(const PrunedSpec& spec) {
    spec.validate();
    const int n = spec.k.n();
    long long n_one = 0;
    long long n_two = 0;
    if (spec.k.d == 2) {
        const int l = spec.l();
        for (int m = 2; m <= n; ++m)
            n_one += 1 + std::min(l, m - 1) - std::max(l + m - n, 1);
    } else {
        const int l1 = spec.l1();
        const int l2 = spec.l2();
        for (int m = 2; m <= n; ++m) {
            n_one += static_cast<long long>(qutrit_i_splits(spec, m).size());
            for (int l2p = std::max(l2 + m - n, 1); l2p <= std::min(l2, m - 2);
                 ++l2p)
                n_two += 1 + std::min(l1, m - 1) - std::max(l1 + m - n, l2p + 1);
        }
    }
    return {n_one, n_two};
}

}  // namespace qdicke
