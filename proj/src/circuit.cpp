#include "qdicke/circuit.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace qdicke {

int Circuit::depth() const {
    std::vector<int> wire_level(static_cast<std::size_t>(n), 0);
    int depth = 0;
    for (const ControlledGate& g : gates) {
        int layer = wire_level[static_cast<std::size_t>(g.target)];
        for (const Control& c : g.controls)
            layer = std::max(layer, wire_level[static_cast<std::size_t>(c.wire)]);
        wire_level[static_cast<std::size_t>(g.target)] = layer + 1;
        for (const Control& c : g.controls)
            wire_level[static_cast<std::size_t>(c.wire)] = layer + 1;
        depth = std::max(depth, layer + 1);
    }
    return depth;
}

void Circuit::push(ControlledGate gate, std::string tag) {
    gate.validate(d, n);
    gates.push_back(std::move(gate));
    tags.push_back(std::move(tag));
}

void Circuit::append(const Circuit& other) {
    if (other.d != d || other.n != n)
        throw std::invalid_argument("Circuit::append: (d, n) mismatch");
    gates.insert(gates.end(), other.gates.begin(), other.gates.end());
    tags.insert(tags.end(), other.tags.begin(), other.tags.end());
}

void Circuit::validate() const {
    if (d < 1 || n < 0)
        throw std::invalid_argument("Circuit: need d >= 1 and n >= 0");
    if (tags.size() != gates.size())
        throw std::invalid_argument("Circuit: tag count differs from gate count");
    for (const ControlledGate& g : gates) g.validate(d, n);
}

bool Circuit::operator==(const Circuit& o) const {
    return d == o.d && n == o.n && gates == o.gates && tags == o.tags;
}

Circuit compose(const Circuit& first, const Circuit& then) {
    Circuit out = first;
    out.append(then);
    return out;
}

Circuit shift_wires(const Circuit& c, int new_n, int offset) {
    if (offset < 0 || c.n + offset > new_n)
        throw std::invalid_argument("shift_wires: shifted wires do not fit");
    Circuit out(c.d, new_n);
    out.tags = c.tags;
    out.gates.reserve(c.gates.size());
    for (ControlledGate g : c.gates) {
        g.target += offset;
        for (Control& ctrl : g.controls) ctrl.wire += offset;
        out.gates.push_back(std::move(g));
    }
    return out;
}

std::map<std::string, long long> count_by_tag(const Circuit& c) {
    // Distinct full tags, keyed by kind prefix: one macro operator emits
    // several gates under one tag, so distinct tags count instances.
    std::map<std::string, std::set<std::string>> instances;
    for (const std::string& tag : c.tags) {
        if (tag.empty()) continue;
        const std::size_t cut = tag.find_first_of("([");
        instances[tag.substr(0, cut)].insert(tag);
    }
    std::map<std::string, long long> counts;
    for (const auto& [kind, tags] : instances)
        counts[kind] = static_cast<long long>(tags.size());
    return counts;
}

void to_json(nlohmann::json& j, const Circuit& c) {
    j = nlohmann::json{
        {"d", c.d}, {"gates", c.gates}, {"n", c.n}, {"tags", c.tags}};
}

void from_json(const nlohmann::json& j, Circuit& c) {
    c.d = j.at("d").get<int>();
    c.n = j.at("n").get<int>();
    c.gates = j.at("gates").get<std::vector<ControlledGate>>();
    c.tags = j.at("tags").get<std::vector<std::string>>();
    c.validate();
}

std::string to_json_string(const Circuit& c) {
    return nlohmann::json(c).dump(2);
}

Circuit circuit_from_json_string(const std::string& text) {
    return nlohmann::json::parse(text).get<Circuit>();
}

}  // namespace qdicke
