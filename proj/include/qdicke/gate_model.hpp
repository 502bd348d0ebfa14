#pragma once
/*
 * gate_model: elementary single-qudit gates (subspace NOT, subspace R^y
 * rotation), multi-controlled wrappers, a stride-based state kernel, and
 * explicit dense-matrix realizations for verification.
 *
 * Both primitives act on the two-dimensional subspace spanned by levels
 * {i, j} of one qudit and fix every other level:
 *   X^(ij):      |i> <-> |j>
 *   R^(ij)(t):   |i> -> cos(t/2)|i> + sin(t/2)|j>
 *                |j> -> -sin(t/2)|i> + cos(t/2)|j>
 */

#include <Eigen/Dense>
#include <vector>

#include "json.hpp"
#include "qdicke/qudit_core.hpp"

namespace qdicke {

enum class PrimitiveKind { SubspaceNot, SubspaceRotation };

struct GatePrimitive {
    PrimitiveKind kind = PrimitiveKind::SubspaceNot;
    int i = 0;          // lower level, 0 <= i < j
    int j = 1;          // upper level
    double theta = 0.0; // radians; rotations only

    static GatePrimitive subspace_not(int i, int j);
    static GatePrimitive subspace_rotation(int i, int j, double theta);

    // Throws std::invalid_argument unless 0 <= i < j <= d-1.
    void validate(int d) const;
};

// One control condition: the gate fires only when `wire` holds `value`.
struct Control {
    int wire = 0;
    int value = 0;

    bool operator==(const Control&) const = default;
};

/*
 * A primitive on a target wire, gated on every control matching its
 * required value.  Controls are kept sorted by wire (canonical form); no
 * wire may appear twice, and the target is never a control.
 */
struct ControlledGate {
    int target = 0;
    GatePrimitive primitive;
    std::vector<Control> controls;

    // Throws std::invalid_argument on any wire/level/ordering violation.
    void validate(int d, int n) const;

    bool operator==(const ControlledGate&) const;
};

// Convenience constructor; sorts the controls by wire.
ControlledGate make_gate(GatePrimitive primitive, int target,
                         std::vector<Control> controls);

// Dense d x d unitary of the primitive: the 2x2 NOT or rotation block on
// rows/columns (i, j), identity elsewhere.
Eigen::MatrixXcd primitive_matrix(const GatePrimitive& g, int d);

// Applies the gate in place with a stride kernel: for every basis index
// whose control digits all match, the 2x2 primitive block mixes the
// amplitudes whose target digit is i or j.  Cost O(d^(n-1)) per gate.
void apply_controlled_gate_in_place(QuditState& state, const ControlledGate& g);

// Value-returning variant of the kernel.
QuditState apply_controlled_gate(QuditState state, const ControlledGate& g);

// Materialized d^n x d^n unitary of the controlled gate, built directly
// from the block structure (independent of the stride kernel).  Guarded:
// throws std::length_error when d^n > 2^14.
Eigen::MatrixXcd controlled_gate_matrix(const ControlledGate& g, int d, int n);

// JSON wire format:
//   {"controls": [{"value": v, "wire": w}, ...], "i": i, "j": j,
//    "kind": "X"|"R", "target": t[, "theta": t]}  (theta for "R" only)
void to_json(nlohmann::json& jj, const ControlledGate& g);
void from_json(const nlohmann::json& jj, ControlledGate& g);

}  // namespace qdicke
