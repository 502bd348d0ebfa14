#include "qdicke/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "qdicke/dicke_reference.hpp"

namespace qdicke {

namespace {

// -2 * arccos(sqrt(x)) with x clamped to [0, 1] to absorb 1-ulp overshoot
// in the l/m ratios; the result lies in [-2*pi, 0].
double angle_from_ratio(double x) {
    return -2.0 * std::acos(std::sqrt(std::clamp(x, 0.0, 1.0)));
}

// All ascending count-subsets of {lo, ..., hi} in lexicographic ascending
// order.
std::vector<std::vector<int>> combinations(int lo, int hi, int count) {
    std::vector<std::vector<int>> out;
    if (count < 0 || hi - lo + 1 < count) return out;
    std::vector<int> pick(static_cast<std::size_t>(count));
    auto rec = [&](auto&& self, int slot, int next) -> void {
        if (slot == count) {
            out.push_back(pick);
            return;
        }
        for (int v = next; v <= hi - (count - 1 - slot); ++v) {
            pick[static_cast<std::size_t>(slot)] = v;
            self(self, slot + 1, v + 1);
        }
    };
    rec(rec, 0, lo);
    return out;
}

}  // namespace

void VOperatorSpec::validate(int d) const {
    const int jj = j();
    if (jj < 2 || jj > d)
        throw std::invalid_argument("VOperatorSpec: need 2 <= j <= d");
    if (ls.size() != static_cast<std::size_t>(jj - 1))
        throw std::invalid_argument("VOperatorSpec: need j-1 split points");
    for (int idx = 0; idx < jj; ++idx) {
        const int level = levels[static_cast<std::size_t>(idx)];
        if (level < 0 || level > d - 1)
            throw std::invalid_argument("VOperatorSpec: level out of range");
        if (idx > 0 && level <= levels[static_cast<std::size_t>(idx - 1)])
            throw std::invalid_argument("VOperatorSpec: levels must ascend strictly");
    }
    for (std::size_t idx = 0; idx < ls.size(); ++idx) {
        if (idx > 0 && ls[idx] >= ls[idx - 1])
            throw std::invalid_argument("VOperatorSpec: split points must descend strictly");
    }
    if (ls.back() < 1)
        throw std::invalid_argument("VOperatorSpec: need l_{j-1} >= 1");
    if (ls.front() > m - 1)
        throw std::invalid_argument("VOperatorSpec: need l_1 <= m-1");
}

std::vector<double> solve_angles(int m, const std::vector<int>& ls) {
    if (ls.empty())
        throw std::invalid_argument("solve_angles: need at least one split point");
    for (std::size_t idx = 0; idx < ls.size(); ++idx)
        if (idx > 0 && ls[idx] >= ls[idx - 1])
            throw std::invalid_argument("solve_angles: split points must descend strictly");
    if (ls.back() < 1 || ls.front() > m - 1)
        throw std::invalid_argument("solve_angles: need 1 <= l_{j-1} < ... < l_1 <= m-1");

    const int j = static_cast<int>(ls.size()) + 1;
    std::vector<double> thetas(static_cast<std::size_t>(j - 1));
    thetas[0] = angle_from_ratio(static_cast<double>(ls.back()) / m);
    double sin_prod = 1.0;  // prod of -sin(theta_{i'}/2) for i' < s
    for (int s = 2; s <= j - 1; ++s) {
        sin_prod *= -std::sin(thetas[static_cast<std::size_t>(s - 2)] / 2.0);
        if (!(sin_prod > 0.0))
            throw std::runtime_error("solve_angles: vanishing branch weight");
        const int l_upper = ls[static_cast<std::size_t>(j - s - 1)];  // l_{j-s}
        const int l_lower = ls[static_cast<std::size_t>(j - s)];      // l_{j-s+1}
        const double cos_half =
            std::sqrt(static_cast<double>(l_upper - l_lower) / m) / sin_prod;
        thetas[static_cast<std::size_t>(s - 1)] =
            -2.0 * std::acos(std::clamp(cos_half, 0.0, 1.0));
    }
    return thetas;
}

std::string v_tag(const VOperatorSpec& spec, int d) {
    std::string splits;
    for (std::size_t idx = 0; idx < spec.ls.size(); ++idx)
        splits += (idx ? "," : "") + std::to_string(spec.ls[idx]);
    const std::string body =
        "[" + std::to_string(spec.m) + "," + splits + "]";
    if (d <= 3 && spec.j() == 2) return "I" + body;
    if (d == 3 && spec.j() == 3) return "II" + body;
    std::string levels;
    for (std::size_t idx = 0; idx < spec.levels.size(); ++idx)
        levels += (idx ? "," : "") + std::to_string(spec.levels[idx]);
    return "V" + std::to_string(spec.j()) + "(" + levels + ")" + body;
}

Circuit build_v_operator(const VOperatorSpec& spec, int d, int n) {
    spec.validate(d);
    if (spec.m < 2 || spec.m > n)
        throw std::invalid_argument("build_v_operator: need 2 <= m <= n");
    const int j = spec.j();
    const std::vector<double> thetas = solve_angles(spec.m, spec.ls);
    const std::string tag = v_tag(spec, d);

    // Level held by wire w in the sorted input state.
    auto region_level = [&spec, j](int w) -> int {
        if (w >= spec.ls.front()) return spec.levels.front();
        for (int k = 1; k < j - 1; ++k)
            if (w >= spec.ls[static_cast<std::size_t>(k)] &&
                w < spec.ls[static_cast<std::size_t>(k - 1)])
                return spec.levels[static_cast<std::size_t>(k)];
        return spec.levels.back();
    };

    // Relevant wires with their active-branch digits.  emplace() merges
    // coinciding wires (adjacent split points, i_0-control on a split
    // wire); wire 0 is the rotation target and never a control.
    std::map<int, int> tracked;
    auto add_wire = [&](int w) {
        if (w != 0) tracked.emplace(w, region_level(w));
    };
    for (int k = 1; k <= j - 1; ++k) {
        add_wire(spec.ls[static_cast<std::size_t>(k - 1)]);
        add_wire(spec.ls[static_cast<std::size_t>(k - 1)] - 1);
    }
    if (spec.levels.front() > 0) add_wire(spec.m - 1);

    Circuit c(d, n);
    for (int k = j - 1; k >= 1; --k) {
        const int lk = spec.ls[static_cast<std::size_t>(k - 1)];
        const int lower = spec.levels[static_cast<std::size_t>(k - 1)];
        const int upper = spec.levels[static_cast<std::size_t>(k)];
        const ControlledGate flank = make_gate(
            GatePrimitive::subspace_not(lower, upper), lk, {{0, upper}});
        c.push(flank, tag);
        tracked[lk] = upper;  // the NOT promotes the active branch's digit
        std::vector<Control> rot_controls;
        rot_controls.reserve(tracked.size());
        for (const auto& [wire, digit] : tracked)
            rot_controls.push_back({wire, digit});
        c.push(make_gate(GatePrimitive::subspace_rotation(
                             lower, upper,
                             thetas[static_cast<std::size_t>(j - 1 - k)]),
                         0, std::move(rot_controls)),
               tag);
        c.push(flank, tag);
    }
    return c;
}

Circuit build_w_dj(int m, int d, int j, int n) {
    if (j < 2 || j > std::min(d, m))
        throw std::invalid_argument("build_w_dj: need 2 <= j <= min(d, m)");
    Circuit c(d, n);
    // Ascending combinations (l_{j-1}, ..., l_1) enumerate with the
    // smallest split point in the outermost loop; each tuple then takes
    // every level j-subset in lexicographic ascending execution order.
    for (const std::vector<int>& splits : combinations(1, m - 1, j - 1)) {
        VOperatorSpec spec;
        spec.m = m;
        spec.ls.assign(splits.rbegin(), splits.rend());
        for (const std::vector<int>& levels : combinations(0, d - 1, j)) {
            spec.levels = levels;
            c.append(build_v_operator(spec, d, n));
        }
    }
    return c;
}

Circuit build_w(int m, int d, int n) {
    if (m < 2)
        throw std::invalid_argument("build_w: need m >= 2");
    if (m > n)
        throw std::invalid_argument("build_w: need m <= n");
    Circuit c(d, n);
    for (int j = 2; j <= std::min(d, m); ++j)
        c.append(build_w_dj(m, d, j, n));
    return c;
}

Circuit build_u(int n, int d) {
    if (n < 1 || d < 2)
        throw std::invalid_argument("build_u: need n >= 1 and d >= 2");
    Circuit c(d, n);
    // Execution order W_n, W_{n-1}, ..., W_2, each on the top m wires.
    for (int m = n; m >= 2; --m)
        c.append(shift_wires(build_w(m, d, m), n, n - m));
    return c;
}

long long predicted_w_count(int m, int d) {
    if (m < 0 || d < 1)
        throw std::invalid_argument("predicted_w_count: need m >= 0 and d >= 1");
    if (m + d > 30)
        throw std::length_error("predicted_w_count: m + d > 30 exceeds the guard");
    return static_cast<long long>(binomial(m + d - 1, d - 1));
}

long long predicted_v_count(int n, int d) {
    if (n < 1 || d < 1)
        throw std::invalid_argument("predicted_v_count: need n >= 1 and d >= 1");
    if (n + d > 30)
        throw std::length_error("predicted_v_count: n + d > 30 exceeds the guard");
    return static_cast<long long>(binomial(n + d, d)) - d - 1;
}

long long count_v_operators(const Circuit& c) {
    long long total = 0;
    for (const auto& [kind, count] : count_by_tag(c)) {
        // A qutrit "I" macro bundles the three two-level V's; every other
        // kind is a single V per instance.
        const long long per_instance = (c.d == 3 && kind == "I") ? 3 : 1;
        total += per_instance * count;
    }
    return total;
}

}  // namespace qdicke
