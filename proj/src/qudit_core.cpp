#include "qdicke/qudit_core.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qdicke {

std::size_t pow_dim(int d, int n) {
    if (d < 1 || n < 0)
        throw std::invalid_argument("pow_dim: need d >= 1 and n >= 0");
    std::size_t dim = 1;
    const std::size_t base = static_cast<std::size_t>(d);
    for (int q = 0; q < n; ++q) {
        if (dim > std::numeric_limits<std::size_t>::max() / base)
            throw std::length_error("pow_dim: d^n overflows size_t");
        dim *= base;
    }
    return dim;
}

std::vector<int> basis_digits(std::size_t linear, int d, int n) {
    if (linear >= pow_dim(d, n))
        throw std::invalid_argument("basis_digits: linear index out of range");
    std::vector<int> digits(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
        digits[static_cast<std::size_t>(q)] =
            static_cast<int>(linear % static_cast<std::size_t>(d));
        linear /= static_cast<std::size_t>(d);
    }
    return digits;
}

std::size_t basis_linear(const std::vector<int>& digits, int d) {
    if (d < 1) throw std::invalid_argument("basis_linear: need d >= 1");
    std::size_t linear = 0;
    std::size_t weight = 1;
    for (std::size_t q = 0; q < digits.size(); ++q) {
        const int x = digits[q];
        if (x < 0 || x >= d)
            throw std::invalid_argument("basis_linear: digit out of range");
        linear += static_cast<std::size_t>(x) * weight;
        if (q + 1 < digits.size()) weight *= static_cast<std::size_t>(d);
    }
    return linear;
}

CompositionVector::CompositionVector(int d_, std::vector<int> parts_)
    : d(d_), parts(std::move(parts_)) {
    validate();
}

int CompositionVector::n() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

void CompositionVector::validate() const {
    if (d < 1)
        throw std::invalid_argument("CompositionVector: need d >= 1");
    if (parts.size() != static_cast<std::size_t>(d))
        throw std::invalid_argument(
            "CompositionVector: parts length " + std::to_string(parts.size()) +
            " does not match d = " + std::to_string(d));
    for (int kj : parts)
        if (kj < 0)
            throw std::invalid_argument("CompositionVector: negative multiplicity");
}

QuditState QuditState::blank(int d, int n) {
    QuditState s;
    s.d = d;
    s.n = n;
    s.amps.assign(pow_dim(d, n), Cx{0.0, 0.0});
    return s;
}

QuditState QuditState::basis(int d, int n, std::size_t linear) {
    QuditState s = blank(d, n);
    if (linear >= s.amps.size())
        throw std::invalid_argument("QuditState::basis: linear index out of range");
    s.amps[linear] = Cx{1.0, 0.0};
    return s;
}

double QuditState::norm() const {
    double sum = 0.0;
    for (const Cx& a : amps) sum += std::norm(a);
    return std::sqrt(sum);
}

void QuditState::validate() const {
    if (d < 1 || n < 0)
        throw std::invalid_argument("QuditState: need d >= 1 and n >= 0");
    if (amps.size() != pow_dim(d, n))
        throw std::invalid_argument("QuditState: amplitude count is not d^n");
}

QuditState identity_permutation_state(const CompositionVector& k) {
    k.validate();
    const int n = k.n();
    if (n < 1)
        throw std::invalid_argument(
            "identity_permutation_state: composition sums to zero");
    // Wire 0 is the rightmost ket symbol, so it receives the highest
    // occupied level; ascending wires walk the levels downward.
    std::vector<int> digits(static_cast<std::size_t>(n));
    std::size_t q = 0;
    for (int level = k.d - 1; level >= 0; --level)
        for (int copy = 0; copy < k.parts[static_cast<std::size_t>(level)]; ++copy)
            digits[q++] = level;
    return QuditState::basis(k.d, n, basis_linear(digits, k.d));
}

double fidelity(const QuditState& a, const QuditState& b) {
    if (a.d != b.d || a.n != b.n)
        throw std::invalid_argument("fidelity: state shapes differ");
    Cx overlap{0.0, 0.0};
    for (std::size_t x = 0; x < a.amps.size(); ++x)
        overlap += std::conj(a.amps[x]) * b.amps[x];
    return std::norm(overlap);
}

void to_json(nlohmann::json& j, const QuditState& s) {
    nlohmann::json amps = nlohmann::json::array();
    for (const Cx& a : s.amps)
        amps.push_back(nlohmann::json::array({a.real(), a.imag()}));
    j = nlohmann::json{{"amps", std::move(amps)}, {"d", s.d}, {"n", s.n}};
}

void from_json(const nlohmann::json& j, QuditState& s) {
    s.d = j.at("d").get<int>();
    s.n = j.at("n").get<int>();
    s.amps.clear();
    for (const auto& pair : j.at("amps"))
        s.amps.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
    s.validate();
}

}  // namespace qdicke
