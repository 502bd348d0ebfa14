#pragma once
/*
 * circuit: ordered gate sequences with (d, n) metadata, synthesis tags,
 * size/depth metrics, and a bit-stable JSON interchange format.
 *
 * Gates execute in sequence order (gates[0] first).  Every gate carries a
 * tag naming the macro operator it belongs to (e.g. "I[4,2]",
 * "II[4,3,1]", "V2(1,3)[5,2]"); the empty tag marks hand-built gates.
 */

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "qdicke/gate_model.hpp"

namespace qdicke {

struct Circuit {
    int d = 0;
    int n = 0;
    std::vector<ControlledGate> gates;
    std::vector<std::string> tags;  // parallel to gates

    Circuit() = default;
    Circuit(int d_, int n_) : d(d_), n(n_) {}

    std::size_t size() const { return gates.size(); }

    // Greedy wire-disjoint layering: gates sharing any wire (target or
    // control) cannot co-occupy a layer; returns the layer count.
    int depth() const;

    void push(ControlledGate gate, std::string tag);

    // Appends another circuit's gates (in-place compose); requires
    // matching (d, n).
    void append(const Circuit& other);

    // Throws std::invalid_argument if any gate or the tag vector is
    // inconsistent with (d, n).
    void validate() const;

    bool operator==(const Circuit&) const;
};

// Concatenation: gates of `first` followed by gates of `then`.
Circuit compose(const Circuit& first, const Circuit& then);

// Re-homes a circuit onto new_n wires with every wire index shifted up by
// `offset` (used to embed an m-wire block on the top wires of a wider
// register).  Tags are preserved.
Circuit shift_wires(const Circuit& c, int new_n, int offset);

/*
 * Macro-operator census: groups tags by their kind prefix (the text
 * before the first '(' or '[') and counts DISTINCT full tags per kind, so
 * the result counts macro-operator instances, not elementary gates.
 * Untagged gates are ignored.
 */
std::map<std::string, long long> count_by_tag(const Circuit& c);

// JSON wire format: {"d": int, "gates": [...], "n": int, "tags": [...]}.
// Serialization is bit-stable: equal circuits produce byte-equal text.
void to_json(nlohmann::json& j, const Circuit& c);
void from_json(const nlohmann::json& j, Circuit& c);

std::string to_json_string(const Circuit& c);
Circuit circuit_from_json_string(const std::string& text);

}  // namespace qdicke
