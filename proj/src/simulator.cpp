#include "qdicke/simulator.hpp"

#include <cmath>
#include <stdexcept>

#include "qdicke/dicke_reference.hpp"
#include "qdicke/pruning.hpp"
#include "qdicke/synthesis.hpp"

namespace qdicke {

QuditState run(const Circuit& c, QuditState input, std::size_t max_amps) {
    c.validate();
    input.validate();
    if (c.d != input.d || c.n != input.n)
        throw std::invalid_argument("run: circuit and state shapes differ");
    if (input.amps.size() > max_amps)
        throw std::length_error("run: d^n exceeds the amplitude guard");
    for (const ControlledGate& g : c.gates)
        apply_controlled_gate_in_place(input, g);
    return input;
}

VerifyReport verify(int d, int n, const CompositionVector& k,
                    SynthesisMode mode, double fidelity_tol) {
    k.validate();
    if (k.d != d)
        throw std::invalid_argument("verify: k.d differs from d");
    if (k.n() != n)
        throw std::invalid_argument("verify: k sums to " + std::to_string(k.n()) +
                                    ", not n = " + std::to_string(n));
    const Circuit c =
        mode == SynthesisMode::Full ? build_u(n, d) : build_pruned_u(k);
    const QuditState out = run(c, identity_permutation_state(k));
    const QuditState ref = reference_dicke_state(k);

    VerifyReport report;
    report.fidelity = fidelity(out, ref);
    for (std::size_t x = 0; x < out.amps.size(); ++x)
        report.max_amp_error =
            std::max(report.max_amp_error, std::abs(out.amps[x] - ref.amps[x]));
    report.counts = count_by_tag(c);
    report.size = c.size();
    report.depth = c.depth();
    report.pass = report.fidelity >= 1.0 - fidelity_tol &&
                  report.max_amp_error <= kAmpDeviationTol;
    return report;
}

}  // namespace qdicke
