#pragma once
/*
 * simulator: executes circuits on dense states via the stride kernel, and
 * packages the end-to-end verification (synthesize, run, compare against
 * the brute-force reference).
 */

#include <cstddef>
#include <map>
#include <string>

#include "qdicke/circuit.hpp"
#include "qdicke/qudit_core.hpp"

namespace qdicke {

// Default cap on amplitude-vector length (d^n).
inline constexpr std::size_t kDefaultAmpGuard = std::size_t{1} << 20;

// Pass thresholds for verification reports.
inline constexpr double kFidelityTol = 1e-10;      // pass: fidelity >= 1 - tol
inline constexpr double kAmpDeviationTol = 1e-8;   // pass: max |amp - ref| <= tol

enum class SynthesisMode { Full, Pruned };

// Applies the circuit's gates in sequence order.  Requires matching
// (d, n); throws std::length_error when d^n exceeds max_amps.
QuditState run(const Circuit& c, QuditState input,
               std::size_t max_amps = kDefaultAmpGuard);

struct VerifyReport {
    double fidelity = 0.0;        // vs. the reference Dicke state
    double max_amp_error = 0.0;   // max amplitude deviation from reference
    std::map<std::string, long long> counts;  // macro-tag census
    std::size_t size = 0;
    int depth = 0;
    bool pass = false;
};

// Builds the requested circuit (full U_n or pruned), runs it on the
// sorted input state for k, and compares against the brute-force
// reference.  pass requires fidelity >= 1 - fidelity_tol AND max
// amplitude deviation <= kAmpDeviationTol.
VerifyReport verify(int d, int n, const CompositionVector& k,
                    SynthesisMode mode, double fidelity_tol = kFidelityTol);

}  // namespace qdicke
