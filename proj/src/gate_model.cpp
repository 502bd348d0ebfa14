#include "qdicke/gate_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace qdicke {

GatePrimitive GatePrimitive::subspace_not(int i, int j) {
    GatePrimitive g;
    g.kind = PrimitiveKind::SubspaceNot;
    g.i = i;
    g.j = j;
    return g;
}

GatePrimitive GatePrimitive::subspace_rotation(int i, int j, double theta) {
    GatePrimitive g;
    g.kind = PrimitiveKind::SubspaceRotation;
    g.i = i;
    g.j = j;
    g.theta = theta;
    return g;
}

void GatePrimitive::validate(int d) const {
    if (i < 0 || j <= i || j > d - 1)
        throw std::invalid_argument(
            "GatePrimitive: levels must satisfy 0 <= i < j <= d-1 (got i=" +
            std::to_string(i) + ", j=" + std::to_string(j) + ", d=" +
            std::to_string(d) + ")");
}

void ControlledGate::validate(int d, int n) const {
    primitive.validate(d);
    if (target < 0 || target >= n)
        throw std::invalid_argument("ControlledGate: target wire out of range");
    int prev_wire = -1;
    for (const Control& c : controls) {
        if (c.wire < 0 || c.wire >= n)
            throw std::invalid_argument("ControlledGate: control wire out of range");
        if (c.wire == target)
            throw std::invalid_argument("ControlledGate: target wire used as control");
        if (c.wire <= prev_wire)
            throw std::invalid_argument(
                "ControlledGate: controls must be sorted by wire, no repeats");
        if (c.value < 0 || c.value >= d)
            throw std::invalid_argument("ControlledGate: control value out of range");
        prev_wire = c.wire;
    }
}

bool ControlledGate::operator==(const ControlledGate& o) const {
    return target == o.target && primitive.kind == o.primitive.kind &&
           primitive.i == o.primitive.i && primitive.j == o.primitive.j &&
           primitive.theta == o.primitive.theta && controls == o.controls;
}

ControlledGate make_gate(GatePrimitive primitive, int target,
                         std::vector<Control> controls) {
    ControlledGate g;
    g.primitive = primitive;
    g.target = target;
    g.controls = std::move(controls);
    std::sort(g.controls.begin(), g.controls.end(),
              [](const Control& a, const Control& b) { return a.wire < b.wire; });
    return g;
}

Eigen::MatrixXcd primitive_matrix(const GatePrimitive& g, int d) {
    g.validate(d);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(d, d);
    if (g.kind == PrimitiveKind::SubspaceNot) {
        m(g.i, g.i) = 0.0;
        m(g.j, g.j) = 0.0;
        m(g.i, g.j) = 1.0;
        m(g.j, g.i) = 1.0;
    } else {
        const double c = std::cos(g.theta / 2.0);
        const double s = std::sin(g.theta / 2.0);
        m(g.i, g.i) = c;
        m(g.i, g.j) = -s;
        m(g.j, g.i) = s;
        m(g.j, g.j) = c;
    }
    return m;
}

void apply_controlled_gate_in_place(QuditState& state, const ControlledGate& g) {
    state.validate();
    g.validate(state.d, state.n);
    const std::size_t d = static_cast<std::size_t>(state.d);
    const std::size_t dim = state.amps.size();
    const std::size_t stride = pow_dim(state.d, g.target);
    const std::size_t block = stride * d;

    // Control digits are read off the fiber root (target digit = 0);
    // control wires never coincide with the target, so the digit is the
    // same for every member of the fiber.
    struct ControlStride {
        std::size_t stride;
        std::size_t value;
    };
    std::vector<ControlStride> cs;
    cs.reserve(g.controls.size());
    for (const Control& c : g.controls)
        cs.push_back({pow_dim(state.d, c.wire),
                      static_cast<std::size_t>(c.value)});

    const std::size_t oi = static_cast<std::size_t>(g.primitive.i) * stride;
    const std::size_t oj = static_cast<std::size_t>(g.primitive.j) * stride;
    const bool is_not = g.primitive.kind == PrimitiveKind::SubspaceNot;
    const double c = is_not ? 0.0 : std::cos(g.primitive.theta / 2.0);
    const double s = is_not ? 0.0 : std::sin(g.primitive.theta / 2.0);

    for (std::size_t base = 0; base < dim; base += block) {
        for (std::size_t off = 0; off < stride; ++off) {
            const std::size_t root = base + off;
            bool live = true;
            for (const ControlStride& ctrl : cs) {
                if ((root / ctrl.stride) % d != ctrl.value) {
                    live = false;
                    break;
                }
            }
            if (!live) continue;
            Cx& ai = state.amps[root + oi];
            Cx& aj = state.amps[root + oj];
            if (is_not) {
                std::swap(ai, aj);  // exact involution
            } else {
                const Cx new_i = c * ai - s * aj;
                const Cx new_j = s * ai + c * aj;
                ai = new_i;
                aj = new_j;
            }
        }
    }
}

QuditState apply_controlled_gate(QuditState state, const ControlledGate& g) {
    apply_controlled_gate_in_place(state, g);
    return state;
}

Eigen::MatrixXcd controlled_gate_matrix(const ControlledGate& g, int d, int n) {
    g.validate(d, n);
    const std::size_t dim = pow_dim(d, n);
    if (dim > (std::size_t{1} << 14))
        throw std::length_error(
            "controlled_gate_matrix: d^n exceeds the 2^14 materialization guard");
    const Eigen::MatrixXcd p = primitive_matrix(g.primitive, d);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(
        static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    const std::size_t stride = pow_dim(d, g.target);
    const std::size_t block = stride * static_cast<std::size_t>(d);
    for (std::size_t base = 0; base < dim; base += block) {
        for (std::size_t off = 0; off < stride; ++off) {
            const std::size_t root = base + off;
            bool live = true;
            for (const Control& c : g.controls) {
                const std::size_t w = pow_dim(d, c.wire);
                if ((root / w) % static_cast<std::size_t>(d) !=
                    static_cast<std::size_t>(c.value)) {
                    live = false;
                    break;
                }
            }
            if (!live) continue;
            const auto ri = static_cast<Eigen::Index>(
                root + static_cast<std::size_t>(g.primitive.i) * stride);
            const auto rj = static_cast<Eigen::Index>(
                root + static_cast<std::size_t>(g.primitive.j) * stride);
            m(ri, ri) = p(g.primitive.i, g.primitive.i);
            m(ri, rj) = p(g.primitive.i, g.primitive.j);
            m(rj, ri) = p(g.primitive.j, g.primitive.i);
            m(rj, rj) = p(g.primitive.j, g.primitive.j);
        }
    }
    return m;
}

void to_json(nlohmann::json& jj, const ControlledGate& g) {
    nlohmann::json controls = nlohmann::json::array();
    for (const Control& c : g.controls)
        controls.push_back(nlohmann::json{{"value", c.value}, {"wire", c.wire}});
    jj = nlohmann::json{
        {"controls", std::move(controls)},
        {"i", g.primitive.i},
        {"j", g.primitive.j},
        {"kind", g.primitive.kind == PrimitiveKind::SubspaceNot ? "X" : "R"},
        {"target", g.target},
    };
    if (g.primitive.kind == PrimitiveKind::SubspaceRotation)
        jj["theta"] = g.primitive.theta;
}

void from_json(const nlohmann::json& jj, ControlledGate& g) {
    const std::string kind = jj.at("kind").get<std::string>();
    const int i = jj.at("i").get<int>();
    const int j = jj.at("j").get<int>();
    if (kind == "X") {
        g.primitive = GatePrimitive::subspace_not(i, j);
    } else if (kind == "R") {
        g.primitive = GatePrimitive::subspace_rotation(
            i, j, jj.at("theta").get<double>());
    } else {
        throw std::invalid_argument("gate JSON: unknown kind \"" + kind + "\"");
    }
    g.target = jj.at("target").get<int>();
    g.controls.clear();
    for (const auto& c : jj.at("controls"))
        g.controls.push_back(
            {c.at("wire").get<int>(), c.at("value").get<int>()});
    std::sort(g.controls.begin(), g.controls.end(),
              [](const Control& a, const Control& b) { return a.wire < b.wire; });
}

}  // namespace qdicke
