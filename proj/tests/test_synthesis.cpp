#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "qdicke/dicke_reference.hpp"
#include "qdicke/gate_model.hpp"
#include "qdicke/synthesis.hpp"

#include "common.hpp"

using qdicke::all_compositions;
using qdicke::binomial;
using qdicke::build_u;
using qdicke::build_v_operator;
using qdicke::build_w;
using qdicke::build_w_dj;
using qdicke::Circuit;
using qdicke::CompositionVector;
using qdicke::Control;
using qdicke::ControlledGate;
using qdicke::count_v_operators;
using qdicke::GatePrimitive;
using qdicke::make_gate;
using qdicke::predicted_v_count;
using qdicke::predicted_w_count;
using qdicke::QuditState;
using qdicke::solve_angles;
using qdicke::VOperatorSpec;
using qdicke::v_tag;

namespace {

VOperatorSpec spec_of(int m, std::vector<int> levels, std::vector<int> ls) {
    VOperatorSpec s;
    s.m = m;
    s.levels = std::move(levels);
    s.ls = std::move(ls);
    return s;
}

// All strictly descending split tuples (l_1 > ... > l_{j-1}) drawn from
// {1, ..., m-1}, any length >= 1.
std::vector<std::vector<int>> all_split_tuples(int m) {
    std::vector<std::vector<int>> out;
    const int top = m - 1;
    for (int mask = 1; mask < (1 << top); ++mask) {
        std::vector<int> tuple;
        for (int v = top; v >= 1; --v)
            if (mask & (1 << (v - 1))) tuple.push_back(v);
        out.push_back(std::move(tuple));
    }
    return out;
}

// The unique sorted input this V operator acts on nontrivially.
CompositionVector designated_input(const VOperatorSpec& spec, int d) {
    std::vector<int> parts(static_cast<std::size_t>(d), 0);
    const int j = spec.j();
    parts[static_cast<std::size_t>(spec.levels.front())] += spec.m - spec.ls.front();
    for (int s = 1; s <= j - 2; ++s)
        parts[static_cast<std::size_t>(spec.levels[static_cast<std::size_t>(s)])] +=
            spec.ls[static_cast<std::size_t>(s - 1)] - spec.ls[static_cast<std::size_t>(s)];
    parts[static_cast<std::size_t>(spec.levels.back())] += spec.ls.back();
    return CompositionVector(d, std::move(parts));
}

}  // namespace

TEST_CASE("solve_angles reproduces the closed-form fixtures") {
    CHECK(solve_angles(2, {1})[0] == doctest::Approx(-M_PI / 2).epsilon(1e-14));
    CHECK(solve_angles(6, {3})[0] == doctest::Approx(-M_PI / 2).epsilon(1e-14));
    CHECK(solve_angles(4, {3})[0] == doctest::Approx(-M_PI / 3).epsilon(1e-14));
    CHECK(solve_angles(4, {1})[0] ==
          doctest::Approx(-2.0 * M_PI / 3).epsilon(1e-14));

    const std::vector<double> two = solve_angles(5, {4, 2});
    REQUIRE(two.size() == 2);
    CHECK(std::abs(two[0] - (-2.0 * std::acos(std::sqrt(2.0 / 5.0)))) < 1e-12);
    CHECK(std::abs(two[1] - (-2.0 * std::acos(std::sqrt(2.0 / 3.0)))) < 1e-12);

    const std::vector<double> steep = solve_angles(3, {2, 1});
    CHECK(std::abs(steep[0] - (-2.0 * std::acos(std::sqrt(1.0 / 3.0)))) < 1e-12);
    CHECK(std::abs(steep[1] - (-M_PI / 2)) < 1e-12);

    CHECK_THROWS_AS(solve_angles(3, {}), std::invalid_argument);
    CHECK_THROWS_AS(solve_angles(3, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(solve_angles(3, {2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(solve_angles(3, {0}), std::invalid_argument);
    CHECK_THROWS_AS(solve_angles(3, {3}), std::invalid_argument);
}

TEST_CASE("solve_angles branch weights multiply out across all tuples") {
    for (int m = 2; m <= 8; ++m) {
        for (const std::vector<int>& ls : all_split_tuples(m)) {
            const std::vector<double> thetas = solve_angles(m, ls);
            REQUIRE(thetas.size() == ls.size());
            double prod = 1.0;
            for (double theta : thetas) {
                REQUIRE(theta <= 0.0);
                REQUIRE(theta >= -2.0 * M_PI);
                prod *= -std::sin(theta / 2.0);
            }
            const double want =
                std::sqrt(static_cast<double>(m - ls.front()) / m);
            REQUIRE(std::abs(prod - want) < 1e-10);

            // First angle in closed form; for the qutrit ladder the second
            // angle reduces to a ratio of split gaps.
            REQUIRE(std::abs(thetas[0] -
                             (-2.0 * std::acos(std::sqrt(
                                  static_cast<double>(ls.back()) / m)))) < 1e-12);
            if (ls.size() == 2) {
                const double closed = -2.0 * std::acos(std::sqrt(
                    static_cast<double>(ls[0] - ls[1]) / (m - ls[1])));
                REQUIRE(std::abs(thetas[1] - closed) < 1e-12);
            }
        }
    }
}

TEST_CASE("v_tag names the macro kinds") {
    CHECK(v_tag(spec_of(2, {0, 1}, {1}), 2) == "I[2,1]");
    CHECK(v_tag(spec_of(6, {0, 1}, {3}), 2) == "I[6,3]");
    CHECK(v_tag(spec_of(2, {1, 2}, {1}), 3) == "I[2,1]");
    CHECK(v_tag(spec_of(5, {0, 1, 2}, {4, 2}), 3) == "II[5,4,2]");
    CHECK(v_tag(spec_of(4, {1, 2, 3}, {2, 1}), 4) == "V3(1,2,3)[4,2,1]");
    CHECK(v_tag(spec_of(4, {0, 1}, {3}), 4) == "V2(0,1)[4,3]");
}

TEST_CASE("spec validation rejects malformed ladders") {
    CHECK_THROWS_AS(spec_of(4, {1, 0}, {1}).validate(3), std::invalid_argument);
    CHECK_THROWS_AS(spec_of(4, {0, 1, 2}, {2, 3}).validate(3),
                    std::invalid_argument);
    CHECK_THROWS_AS(spec_of(3, {0, 1}, {3}).validate(3), std::invalid_argument);
    CHECK_THROWS_AS(spec_of(3, {0, 1}, {0}).validate(3), std::invalid_argument);
    CHECK_THROWS_AS(spec_of(3, {0}, {}).validate(3), std::invalid_argument);
    CHECK_THROWS_AS(spec_of(3, {0, 3}, {1}).validate(3), std::invalid_argument);
    CHECK_THROWS_AS(spec_of(3, {0, 1, 2}, {2, 1}).validate(2),
                    std::invalid_argument);
    CHECK_NOTHROW(spec_of(3, {0, 1, 2}, {2, 1}).validate(3));

    CHECK_THROWS_AS(build_v_operator(spec_of(3, {0, 1}, {2}), 2, 2),
                    std::invalid_argument);  // m > n
    CHECK_THROWS_AS(build_w(1, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_w(3, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_w_dj(3, 2, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_w_dj(2, 3, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_u(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_u(2, 1), std::invalid_argument);
}

TEST_CASE("two-level ladder fixtures match gate for gate") {
    {
        const VOperatorSpec spec = spec_of(2, {0, 1}, {1});
        const Circuit c = build_v_operator(spec, 2, 2);
        const double theta = solve_angles(2, {1})[0];
        const ControlledGate flank =
            make_gate(GatePrimitive::subspace_not(0, 1), 1, {{0, 1}});
        const std::vector<ControlledGate> want = {
            flank,
            make_gate(GatePrimitive::subspace_rotation(0, 1, theta), 0,
                      {{1, 1}}),
            flank};
        CHECK(c.gates == want);
        CHECK(c.tags == std::vector<std::string>(3, "I[2,1]"));
        CHECK(std::abs(theta - (-M_PI / 2)) < 1e-12);
    }
    {
        const Circuit c = build_v_operator(spec_of(6, {0, 1}, {3}), 2, 6);
        const double theta = solve_angles(6, {3})[0];
        const ControlledGate flank =
            make_gate(GatePrimitive::subspace_not(0, 1), 3, {{0, 1}});
        const std::vector<ControlledGate> want = {
            flank,
            make_gate(GatePrimitive::subspace_rotation(0, 1, theta), 0,
                      {{2, 1}, {3, 1}}),
            flank};
        CHECK(c.gates == want);
        CHECK(c.tags == std::vector<std::string>(3, "I[6,3]"));
    }
    {
        // Highest-levels pair: the extra top-wire control collapses onto
        // the split wire at m = 2.
        const Circuit c = build_v_operator(spec_of(2, {1, 2}, {1}), 3, 2);
        const double theta = solve_angles(2, {1})[0];
        const ControlledGate flank =
            make_gate(GatePrimitive::subspace_not(1, 2), 1, {{0, 2}});
        const std::vector<ControlledGate> want = {
            flank,
            make_gate(GatePrimitive::subspace_rotation(1, 2, theta), 0,
                      {{1, 2}}),
            flank};
        CHECK(c.gates == want);
    }
    {
        // At m = 4 the same pair keeps a genuine top-wire control.
        const Circuit c = build_v_operator(spec_of(4, {1, 2}, {1}), 3, 4);
        const double theta = solve_angles(4, {1})[0];
        const ControlledGate flank =
            make_gate(GatePrimitive::subspace_not(1, 2), 1, {{0, 2}});
        const std::vector<ControlledGate> want = {
            flank,
            make_gate(GatePrimitive::subspace_rotation(1, 2, theta), 0,
                      {{1, 2}, {3, 1}}),
            flank};
        CHECK(c.gates == want);
    }
    {
        const Circuit c = build_v_operator(spec_of(4, {0, 1}, {3}), 3, 4);
        const double theta = solve_angles(4, {3})[0];
        const ControlledGate flank =
            make_gate(GatePrimitive::subspace_not(0, 1), 3, {{0, 1}});
        const std::vector<ControlledGate> want = {
            flank,
            make_gate(GatePrimitive::subspace_rotation(0, 1, theta), 0,
                      {{2, 1}, {3, 1}}),
            flank};
        CHECK(c.gates == want);
    }
}

TEST_CASE("three-level ladder fixtures match gate for gate") {
    {
        const VOperatorSpec spec = spec_of(5, {0, 1, 2}, {4, 2});
        const Circuit c = build_v_operator(spec, 3, 5);
        const std::vector<double> thetas = solve_angles(5, {4, 2});
        const ControlledGate low =
            make_gate(GatePrimitive::subspace_not(1, 2), 2, {{0, 2}});
        const ControlledGate high =
            make_gate(GatePrimitive::subspace_not(0, 1), 4, {{0, 1}});
        const std::vector<ControlledGate> want = {
            low,
            make_gate(GatePrimitive::subspace_rotation(1, 2, thetas[0]), 0,
                      {{1, 2}, {2, 2}, {3, 1}, {4, 0}}),
            low,
            high,
            make_gate(GatePrimitive::subspace_rotation(0, 1, thetas[1]), 0,
                      {{1, 2}, {2, 2}, {3, 1}, {4, 1}}),
            high};
        CHECK(c.gates == want);
        CHECK(c.tags == std::vector<std::string>(6, "II[5,4,2]"));
    }
    {
        const Circuit c = build_v_operator(spec_of(3, {0, 1, 2}, {2, 1}), 3, 3);
        const std::vector<double> thetas = solve_angles(3, {2, 1});
        const ControlledGate low =
            make_gate(GatePrimitive::subspace_not(1, 2), 1, {{0, 2}});
        const ControlledGate high =
            make_gate(GatePrimitive::subspace_not(0, 1), 2, {{0, 1}});
        const std::vector<ControlledGate> want = {
            low,
            make_gate(GatePrimitive::subspace_rotation(1, 2, thetas[0]), 0,
                      {{1, 2}, {2, 0}}),
            low,
            high,
            make_gate(GatePrimitive::subspace_rotation(0, 1, thetas[1]), 0,
                      {{1, 2}, {2, 1}}),
            high};
        CHECK(c.gates == want);
    }
    {
        const Circuit c = build_v_operator(spec_of(4, {0, 1, 2}, {3, 1}), 3, 4);
        const std::vector<double> thetas = solve_angles(4, {3, 1});
        const ControlledGate low =
            make_gate(GatePrimitive::subspace_not(1, 2), 1, {{0, 2}});
        const ControlledGate high =
            make_gate(GatePrimitive::subspace_not(0, 1), 3, {{0, 1}});
        const std::vector<ControlledGate> want = {
            low,
            make_gate(GatePrimitive::subspace_rotation(1, 2, thetas[0]), 0,
                      {{1, 2}, {2, 1}, {3, 0}}),
            low,
            high,
            make_gate(GatePrimitive::subspace_rotation(0, 1, thetas[1]), 0,
                      {{1, 2}, {2, 1}, {3, 1}}),
            high};
        CHECK(c.gates == want);
    }
    {
        const Circuit c = build_v_operator(spec_of(4, {0, 1, 2}, {3, 2}), 3, 4);
        const std::vector<double> thetas = solve_angles(4, {3, 2});
        const ControlledGate low =
            make_gate(GatePrimitive::subspace_not(1, 2), 2, {{0, 2}});
        const ControlledGate high =
            make_gate(GatePrimitive::subspace_not(0, 1), 3, {{0, 1}});
        const std::vector<ControlledGate> want = {
            low,
            make_gate(GatePrimitive::subspace_rotation(1, 2, thetas[0]), 0,
                      {{1, 2}, {2, 2}, {3, 0}}),
            low,
            high,
            make_gate(GatePrimitive::subspace_rotation(0, 1, thetas[1]), 0,
                      {{1, 2}, {2, 2}, {3, 1}}),
            high};
        CHECK(c.gates == want);
    }
    {
        // A d = 4 ladder over levels (1, 2, 3): the top-wire control rides
        // along at the base level 1.
        const VOperatorSpec spec = spec_of(4, {1, 2, 3}, {2, 1});
        const Circuit c = build_v_operator(spec, 4, 4);
        const std::vector<double> thetas = solve_angles(4, {2, 1});
        const ControlledGate low =
            make_gate(GatePrimitive::subspace_not(2, 3), 1, {{0, 3}});
        const ControlledGate high =
            make_gate(GatePrimitive::subspace_not(1, 2), 2, {{0, 2}});
        const std::vector<ControlledGate> want = {
            low,
            make_gate(GatePrimitive::subspace_rotation(2, 3, thetas[0]), 0,
                      {{1, 3}, {2, 1}, {3, 1}}),
            low,
            high,
            make_gate(GatePrimitive::subspace_rotation(1, 2, thetas[1]), 0,
                      {{1, 3}, {2, 2}, {3, 1}}),
            high};
        CHECK(c.gates == want);
        CHECK(c.tags == std::vector<std::string>(6, "V3(1,2,3)[4,2,1]"));
    }
}

TEST_CASE("a V operator is inert on every other sorted input") {
    const int d = 3;
    for (int m = 2; m <= 4; ++m) {
        std::vector<VOperatorSpec> specs;
        for (int l = 1; l <= m - 1; ++l)
            for (const std::vector<int>& pair :
                 {std::vector<int>{0, 1}, std::vector<int>{0, 2},
                  std::vector<int>{1, 2}})
                specs.push_back(spec_of(m, pair, {l}));
        for (int l1 = 2; l1 <= m - 1; ++l1)
            for (int l2 = 1; l2 < l1; ++l2)
                specs.push_back(spec_of(m, {0, 1, 2}, {l1, l2}));

        for (const VOperatorSpec& spec : specs) {
            const Circuit c = build_v_operator(spec, d, m);
            const CompositionVector active = designated_input(spec, d);
            for (const CompositionVector& k : all_compositions(m, d)) {
                const QuditState in = qdicke::identity_permutation_state(k);
                const QuditState out = testutil::run_gates(c, in);
                if (k == active) {
                    REQUIRE(testutil::max_amp_diff(out, in) > 1e-3);
                } else {
                    REQUIRE(out.amps == in.amps);  // bit-exact identity
                }
            }
        }
    }
}

TEST_CASE("W_m satisfies the recursion-step contract on every sorted input") {
    for (int d = 2; d <= 3; ++d) {
        for (int m = 2; m <= 4; ++m) {
            const Circuit w = build_w(m, d, m);
            for (const CompositionVector& k : all_compositions(m, d)) {
                const QuditState got =
                    testutil::run_gates(w, qdicke::identity_permutation_state(k));
                const QuditState want = testutil::w_contract_rhs(k);
                REQUIRE(testutil::max_amp_diff(got, want) < 1e-10);
            }
        }
    }
}

TEST_CASE("build_w_dj groups levels times splits at fixed width") {
    const Circuit c = build_w_dj(3, 4, 2, 3);
    // C(4,2) level pairs x C(2,1) split points, three gates per V.
    CHECK(qdicke::count_by_tag(c).at("V2") == 12);
    CHECK(c.size() == 12 * 3);
    CHECK(count_v_operators(c) == 12);

    const Circuit qutrit = build_w_dj(4, 3, 3, 4);
    CHECK(qdicke::count_by_tag(qutrit).at("II") == 3);
    CHECK(qutrit.size() == 3 * 6);
}

TEST_CASE("predicted operator counts match the synthesized circuits") {
    CHECK(predicted_w_count(4, 3) == 15);
    CHECK(predicted_v_count(3, 2) == 7);
    CHECK_THROWS_AS(predicted_w_count(28, 3), std::length_error);
    CHECK_THROWS_AS(predicted_v_count(26, 5), std::length_error);
    CHECK_THROWS_AS(predicted_w_count(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(predicted_v_count(0, 2), std::invalid_argument);

    for (int d = 2; d <= 5; ++d) {
        for (int n = 1; n <= 8; ++n) {
            // Composition-count form vs the summed per-step form: the
            // per-step totals telescope to the full-circuit total.
            long long total = 0;
            for (int m = 2; m <= n; ++m) total += predicted_w_count(m, d);
            CHECK(predicted_v_count(n, d) == total);
            CHECK(predicted_v_count(n, d) ==
                  static_cast<long long>(binomial(n + d, d)) - d - 1);

            // Equivalent closed form with the leading (n+1)/d factor,
            // evaluated in exact integer arithmetic.
            const unsigned long long scaled =
                static_cast<unsigned long long>(n + 1) * binomial(n + d, d - 1);
            REQUIRE(scaled % static_cast<unsigned long long>(d) == 0);
            CHECK(predicted_v_count(n, d) ==
                  static_cast<long long>(scaled / d) - d - 1);
        }
    }

    for (int d = 2; d <= 5; ++d)
        for (int m = 2; m <= 6; ++m)
            CHECK(count_v_operators(build_w(m, d, m)) + d ==
                  predicted_w_count(m, d));

    for (int d = 2; d <= 4; ++d)
        for (int n = 2; n <= 6; ++n)
            CHECK(count_v_operators(build_u(n, d)) +
                      static_cast<long long>(d) * (n - 1) ==
                  predicted_v_count(n, d));
}

TEST_CASE("U_n assembles the recursion steps top-down") {
    CHECK(build_u(1, 3).size() == 0);

    const Circuit u6 = build_u(6, 2);
    CHECK(u6.size() == 45);
    CHECK(u6.depth() > 0);
    const std::vector<std::string> u6_macros = {
        "I[6,1]", "I[6,2]", "I[6,3]", "I[6,4]", "I[6,5]", "I[5,1]", "I[5,2]",
        "I[5,3]", "I[5,4]", "I[4,1]", "I[4,2]", "I[4,3]", "I[3,1]", "I[3,2]",
        "I[2,1]"};
    CHECK(testutil::macro_sequence(u6.tags) == u6_macros);

    const Circuit u3 = build_u(3, 3);
    CHECK(u3.size() == 33);
    CHECK(testutil::macro_sequence(u3.tags) ==
          std::vector<std::string>{"I[3,1]", "I[3,2]", "II[3,2,1]", "I[2,1]"});

    const Circuit u4 = build_u(4, 3);
    CHECK(u4.size() == 78);
    CHECK(testutil::macro_sequence(u4.tags) ==
          std::vector<std::string>{"I[4,1]", "I[4,2]", "I[4,3]", "II[4,2,1]",
                                   "II[4,3,1]", "II[4,3,2]", "I[3,1]", "I[3,2]",
                                   "II[3,2,1]", "I[2,1]"});

    // The last nine gates are W_2 shifted onto wires {2, 3}: the three
    // level-pair ladders in ascending order.
    const double theta = solve_angles(2, {1})[0];
    std::vector<ControlledGate> tail;
    for (const auto& [i, j] : std::vector<std::pair<int, int>>{
             {0, 1}, {0, 2}, {1, 2}}) {
        const ControlledGate flank =
            make_gate(GatePrimitive::subspace_not(i, j), 3, {{2, j}});
        tail.push_back(flank);
        tail.push_back(make_gate(GatePrimitive::subspace_rotation(i, j, theta),
                                 2, {{3, j}}));
        tail.push_back(flank);
    }
    REQUIRE(u4.size() >= tail.size());
    const std::vector<ControlledGate> got(u4.gates.end() - 9, u4.gates.end());
    CHECK(got == tail);
}
