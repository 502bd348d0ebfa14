#pragma once
/*
 * qudit_core: dense n-qudit state vectors, basis indexing, and composition
 * vectors (level multiplicities), shared by every other module.
 *
 * Conventions used across the library:
 *   - wire q carries the base-d digit of weight d^q, so wire 0 is the
 *     least-significant digit; a ket string |x_{n-1} ... x_1 x_0> lists
 *     wires right to left (wire 0 is the rightmost symbol, drawn as the
 *     top wire in circuit diagrams)
 *   - amplitudes are stored densely, indexed by the linear basis index
 */

#include <complex>
#include <cstddef>
#include <vector>

#include "json.hpp"

namespace qdicke {

using Cx = std::complex<double>;

// Absolute tolerance for exact-zero / exact-equality comparisons.
inline constexpr double kZeroTol = 1e-12;

// d^n as an amplitude count; throws std::length_error on overflow.
std::size_t pow_dim(int d, int n);

// Wire digits of a linear basis index: digits[q] has weight d^q.
std::vector<int> basis_digits(std::size_t linear, int d, int n);

// Inverse of basis_digits; digits.size() determines n.
std::size_t basis_linear(const std::vector<int>& digits, int d);

/*
 * Multiplicity vector k = (k_0, ..., k_{d-1}): the target state contains
 * k_j qudits at level j, with n = sum_j k_j.
 */
struct CompositionVector {
    int d = 0;
    std::vector<int> parts;

    CompositionVector() = default;
    CompositionVector(int d_, std::vector<int> parts_);

    int n() const;
    // Throws std::invalid_argument unless parts has length d with all
    // entries >= 0 and d >= 1.
    void validate() const;

    bool operator==(const CompositionVector&) const = default;
};

/*
 * Dense state vector over the d^n computational basis.  amps[x] is the
 * amplitude of the basis state with linear index x.
 */
struct QuditState {
    int d = 0;
    int n = 0;
    std::vector<Cx> amps;

    // All-zero amplitude vector of the right dimension.
    static QuditState blank(int d, int n);
    // Computational basis state |linear>.
    static QuditState basis(int d, int n, std::size_t linear);

    std::size_t dim() const { return amps.size(); }
    double norm() const;
    void validate() const;
};

// The sorted product state |0>^k0 |1>^k1 ... |d-1>^k_{d-1}; wire 0 holds
// the highest occupied level (the ket string reads levels ascending left
// to right).
QuditState identity_permutation_state(const CompositionVector& k);

// Squared overlap |<a|b>|^2; requires matching (d, n).
double fidelity(const QuditState& a, const QuditState& b);

// JSON wire format: {"amps": [[re, im], ...], "d": int, "n": int}.
void to_json(nlohmann::json& j, const QuditState& s);
void from_json(const nlohmann::json& j, QuditState& s);

}  // namespace qdicke
