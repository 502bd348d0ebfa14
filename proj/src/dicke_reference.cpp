#include "qdicke/dicke_reference.hpp"

#include <cmath>
#include <stdexcept>

#include "qdicke/simulator.hpp"

namespace qdicke {

std::uint64_t binomial(int n, int k) {
    if (n < 0 || k < 0)
        throw std::invalid_argument("binomial: negative argument");
    if (n > 60)
        throw std::length_error("binomial: n > 60 exceeds the 64-bit guard");
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (int t = 1; t <= k; ++t) {
        // Exact at every step: result * (n - k + t) is divisible by t.
        result = result * static_cast<std::uint64_t>(n - k + t) /
                 static_cast<std::uint64_t>(t);
    }
    return result;
}

std::uint64_t multinomial(const CompositionVector& k) {
    k.validate();
    const int n = k.n();
    if (n > 20)
        throw std::length_error("multinomial: n > 20 exceeds the 64-bit guard");
    // n! / prod k_j! as a product of binomials over the partial sums.
    std::uint64_t result = 1;
    int placed = 0;
    for (int kj : k.parts) {
        placed += kj;
        result *= binomial(placed, kj);
    }
    return result;
}

QuditState reference_dicke_state(const CompositionVector& k) {
    k.validate();
    const int n = k.n();
    if (n < 1)
        throw std::invalid_argument("reference_dicke_state: empty composition");
    const std::size_t dim = pow_dim(k.d, n);
    if (dim > kDefaultAmpGuard)
        throw std::length_error("reference_dicke_state: d^n exceeds the amplitude guard");
    QuditState s = QuditState::blank(k.d, n);
    const double amp = 1.0 / std::sqrt(static_cast<double>(multinomial(k)));
    std::vector<int> histogram(static_cast<std::size_t>(k.d), 0);
    for (std::size_t x = 0; x < dim; ++x) {
        std::fill(histogram.begin(), histogram.end(), 0);
        std::size_t rest = x;
        for (int q = 0; q < n; ++q) {
            ++histogram[rest % static_cast<std::size_t>(k.d)];
            rest /= static_cast<std::size_t>(k.d);
        }
        if (histogram == k.parts) s.amps[x] = Cx{amp, 0.0};
    }
    return s;
}

bool recursion_check(const CompositionVector& k) {
    k.validate();
    const int n = k.n();
    if (n < 2)
        throw std::invalid_argument("recursion_check: need n >= 2");
    const QuditState lhs = reference_dicke_state(k);
    // sum_s sqrt(k_s/n) |D^(n-1)(k - s_hat)> (x) |s>, wire 0 holding s.
    QuditState rhs = QuditState::blank(k.d, n);
    for (int s = 0; s < k.d; ++s) {
        if (k.parts[static_cast<std::size_t>(s)] == 0) continue;
        CompositionVector reduced = k;
        --reduced.parts[static_cast<std::size_t>(s)];
        const QuditState sub = reference_dicke_state(reduced);
        const double coeff =
            std::sqrt(static_cast<double>(k.parts[static_cast<std::size_t>(s)]) / n);
        for (std::size_t x = 0; x < sub.amps.size(); ++x)
            rhs.amps[x * static_cast<std::size_t>(k.d) +
                     static_cast<std::size_t>(s)] += coeff * sub.amps[x];
    }
    for (std::size_t x = 0; x < lhs.amps.size(); ++x)
        if (std::abs(lhs.amps[x] - rhs.amps[x]) > kZeroTol) return false;
    return true;
}

std::vector<CompositionVector> all_compositions(int n, int d) {
    if (n < 0 || d < 1)
        throw std::invalid_argument("all_compositions: need n >= 0 and d >= 1");
    std::vector<CompositionVector> out;
    std::vector<int> parts(static_cast<std::size_t>(d), 0);
    // Lexicographic ascending order of (k_0, ..., k_{d-1}) by recursion
    // on the leading part.
    auto emit = [&](auto&& self, int slot, int remaining) -> void {
        if (slot == d - 1) {
            parts[static_cast<std::size_t>(slot)] = remaining;
            out.emplace_back(d, parts);
            return;
        }
        for (int kj = 0; kj <= remaining; ++kj) {
            parts[static_cast<std::size_t>(slot)] = kj;
            self(self, slot + 1, remaining - kj);
        }
    };
    emit(emit, 0, n);
    return out;
}

}  // namespace qdicke
