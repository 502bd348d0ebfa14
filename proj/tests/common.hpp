#pragma once
/*
 * Shared helpers for the unit and acceptance test suites (doctest-free so
 * the acceptance binary can reuse them).
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "qdicke/circuit.hpp"
#include "qdicke/dicke_reference.hpp"
#include "qdicke/gate_model.hpp"
#include "qdicke/qudit_core.hpp"

namespace testutil {

// Applies a circuit gate by gate through the stride kernel (kept local to
// the tests so module checks do not depend on the simulator under test).
inline qdicke::QuditState run_gates(const qdicke::Circuit& c,
                                    qdicke::QuditState state) {
    for (const qdicke::ControlledGate& g : c.gates)
        qdicke::apply_controlled_gate_in_place(state, g);
    return state;
}

// Linear index of a ket string written left-to-right (leftmost symbol is
// the highest wire, n-1): "0012" at d=3 -> 5.
inline std::size_t ket_index(const std::string& ket, int d) {
    std::size_t linear = 0;
    for (char c : ket) linear = linear * static_cast<std::size_t>(d) +
                                static_cast<std::size_t>(c - '0');
    return linear;
}

inline qdicke::QuditState ket_state(const std::string& ket, int d) {
    return qdicke::QuditState::basis(d, static_cast<int>(ket.size()),
                                     ket_index(ket, d));
}

inline double max_amp_diff(const qdicke::QuditState& a,
                           const qdicke::QuditState& b) {
    double worst = 0.0;
    for (std::size_t x = 0; x < a.amps.size(); ++x)
        worst = std::max(worst, std::abs(a.amps[x] - b.amps[x]));
    return worst;
}

// Tags with consecutive duplicates collapsed: the macro-operator sequence
// of a synthesized circuit in execution order.
inline std::vector<std::string> macro_sequence(
    const std::vector<std::string>& tags) {
    std::vector<std::string> out;
    for (const std::string& tag : tags)
        if (out.empty() || out.back() != tag) out.push_back(tag);
    return out;
}

inline std::vector<std::size_t> nonzero_indices(const qdicke::QuditState& s,
                                                double tol = 1e-12) {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < s.amps.size(); ++x)
        if (std::abs(s.amps[x]) > tol) out.push_back(x);
    return out;
}

// Right side of the W-operator contract on |e(k)>:
//   sum_s sqrt(k_s/m) |e(k - s_hat)> (x) |s>,  wire 0 holding s.
inline qdicke::QuditState w_contract_rhs(const qdicke::CompositionVector& k) {
    const int m = k.n();
    const int d = k.d;
    qdicke::QuditState rhs = qdicke::QuditState::blank(d, m);
    for (int s = 0; s < d; ++s) {
        if (k.parts[static_cast<std::size_t>(s)] == 0) continue;
        qdicke::CompositionVector reduced = k;
        --reduced.parts[static_cast<std::size_t>(s)];
        const qdicke::QuditState sub =
            qdicke::identity_permutation_state(reduced);
        const double coeff = std::sqrt(
            static_cast<double>(k.parts[static_cast<std::size_t>(s)]) / m);
        for (std::size_t x = 0; x < sub.amps.size(); ++x)
            if (std::abs(sub.amps[x]) > 0.0)
                rhs.amps[x * static_cast<std::size_t>(d) +
                         static_cast<std::size_t>(s)] += coeff;
    }
    return rhs;
}

}  // namespace testutil
