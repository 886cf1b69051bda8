#include <doctest.h>

#include <algorithm>

#include "normcalc/verifier.hpp"

using namespace normcalc;

namespace {

SplitnessPattern pat(const Scenario& s, std::initializer_list<const char*> split) {
    std::vector<bool> bits(static_cast<std::size_t>(s.brauer().generator_count()), false);
    for (const char* name : split) bits[static_cast<std::size_t>(s.brauer().generator_index(name))] = true;
    return SplitnessPattern(bits);
}

bool has_state(const std::vector<FieldState>& states, const FieldState& want) {
    return std::find(states.begin(), states.end(), want) != states.end();
}

} // namespace

TEST_CASE("enumerate_states: e7") {
    const Scenario s = Scenario::create(ScenarioName::e7);
    const auto states = enumerate_states(s);
    CHECK(!states.empty());

    const SplitnessPattern split = pat(s, {"A"});
    const SplitnessPattern nonsplit = pat(s, {});

    CHECK(has_state(states, {split, true, vertices_mask({1}, 7)}));
    CHECK(has_state(states, {split, true, vertices_mask({7}, 7)}));
    CHECK(has_state(states, {split, true, full_mask(7)}));
    CHECK(has_state(states, {nonsplit, true, 0}));
    // R-split: a nonsplit A cannot circle a vertex carrying [A]
    CHECK(!has_state(states, {nonsplit, true, vertices_mask({7}, 7)}));
    CHECK(!has_state(states, {nonsplit, true, vertices_mask({2}, 7)}));
    // R-E7: isotropic with split A but no vertex 7 forces index {1}
    CHECK(!has_state(states, {split, true, vertices_mask({3}, 7)}));
    CHECK(!has_state(states, {split, true, vertices_mask({1, 3}, 7)}));
    // nonsplit A with vertex 1 circled (class k there) is allowed by R-split
    CHECK(has_state(states, {nonsplit, true, vertices_mask({1}, 7)}));
}

TEST_CASE("enumerate_states: gorth stability under the fork swap") {
    const Scenario s = Scenario::create(ScenarioName::gorth, 4);
    const auto states = enumerate_states(s);
    for (const auto& st : states) {
        if (st.disc_trivial) continue;
        const bool has5 = st.distinguished & (VertexMask{1} << 2);
        const bool has6 = st.distinguished & (VertexMask{1} << 3);
        CHECK(has5 == has6);
    }
    // both discriminant values appear
    CHECK(std::any_of(states.begin(), states.end(), [](const FieldState& st) { return st.disc_trivial; }));
    CHECK(std::any_of(states.begin(), states.end(), [](const FieldState& st) { return !st.disc_trivial; }));
}

TEST_CASE("enumerate_states: spin R-Dn-split") {
    const Scenario s = Scenario::create(ScenarioName::spin, 6);
    const auto states = enumerate_states(s);
    const SplitnessPattern a_split = pat(s, {"A"});
    CHECK(!has_state(states, {a_split, true, vertices_mask({2}, 6)}));
    CHECK(has_state(states, {a_split, true, vertices_mask({1}, 6)}));
    CHECK(has_state(states, {a_split, true, vertices_mask({1, 2}, 6)}));
    CHECK(has_state(states, {a_split, true, 0}));
    // nonsplit A admits only vertices with label k
    CHECK(has_state(states, {pat(s, {}), true, vertices_mask({2}, 6)}));
    CHECK(!has_state(states, {pat(s, {}), true, vertices_mask({1}, 6)}));
}

TEST_CASE("enumerate_states: e6 R-E6 and its type-6 mirror") {
    const Scenario s = Scenario::create(ScenarioName::e6);
    const auto states1 = enumerate_states(s);
    const SplitnessPattern split = pat(s, {"A"});
    CHECK(has_state(states1, {split, true, vertices_mask({2, 4}, 6)}));
    CHECK(has_state(states1, {split, true, vertices_mask({1}, 6)}));
    CHECK(!has_state(states1, {split, true, vertices_mask({6}, 6)}));
    CHECK(!has_state(states1, {split, true, vertices_mask({2}, 6)}));

    DriverConfig cfg6;
    cfg6.e6_variant = E6Variant::type6;
    const auto states6 = enumerate_states(s, cfg6);
    CHECK(has_state(states6, {split, true, vertices_mask({6}, 6)}));
    CHECK(!has_state(states6, {split, true, vertices_mask({1}, 6)}));
    CHECK(has_state(states6, {split, true, vertices_mask({2, 4}, 6)}));
}

TEST_CASE("x_point_predicate") {
    const Scenario spin = Scenario::create(ScenarioName::spin, 6);
    CHECK(x_point_predicate(spin, {pat(spin, {"A"}), true, vertices_mask({1}, 6)}));
    CHECK(!x_point_predicate(spin, {pat(spin, {"A"}), true, 0}));

    const Scenario g = Scenario::create(ScenarioName::gorth, 6);
    CHECK(x_point_predicate(g, {pat(g, {"C+"}), true, vertices_mask({5}, 6)}));
    CHECK(!x_point_predicate(g, {pat(g, {"C+", "C-", "A"}), false, vertices_mask({5, 6}, 6)}));

    const Scenario e6 = Scenario::create(ScenarioName::e6);
    const FieldState st6{pat(e6, {"A"}), true, vertices_mask({6}, 6)};
    CHECK(!x_point_predicate(e6, st6, E6Variant::type1));
    CHECK(x_point_predicate(e6, st6, E6Variant::type6));
}

TEST_CASE("check_condition1 fixtures") {
    // e6 at the index {2,4}: the Omega premise fails, vacuous pass
    const Scenario e6 = Scenario::create(ScenarioName::e6);
    const FieldState rost_state{pat(e6, {"A"}), true, vertices_mask({2, 4}, 6)};
    const ConditionResult r1 = check_condition1(e6, rost_state, {1});
    CHECK(r1.pass);
    CHECK(r1.vacuous);

    // gorth, nontrivial disc: X(phi) empty, vacuous pass
    const Scenario g = Scenario::create(ScenarioName::gorth, 5);
    const FieldState gstate{pat(g, {}), false, 0};
    const ConditionResult r2 = check_condition1(g, gstate, {1});
    CHECK(r2.pass);
    CHECK(r2.vacuous);

    // spin, split A, alpha1 circled: substantive pass
    const Scenario spin = Scenario::create(ScenarioName::spin, 6);
    const FieldState sstate{pat(spin, {"A"}), true, vertices_mask({1}, 6)};
    const ConditionResult r3 = check_condition1(spin, sstate, {1});
    CHECK(r3.pass);
    CHECK(!r3.vacuous);
}

TEST_CASE("check_condition2 fixtures") {
    const Scenario spin = Scenario::create(ScenarioName::spin, 6);
    const ConditionResult r1 =
        check_condition2(spin, {pat(spin, {"A"}), true, vertices_mask({1}, 6)}, {1});
    CHECK(r1.pass);
    CHECK(!r1.vacuous);

    const Scenario e7 = Scenario::create(ScenarioName::e7);
    const ConditionResult r2 =
        check_condition2(e7, {pat(e7, {"A"}), true, vertices_mask({7}, 7)}, {1});
    CHECK(r2.pass);
    CHECK(!r2.vacuous);

    const ConditionResult r3 = check_condition2(e7, {pat(e7, {}), true, 0}, {1});
    CHECK(r3.pass);
    CHECK(r3.vacuous);
}

TEST_CASE("check_claim fixtures") {
    const Scenario e7 = Scenario::create(ScenarioName::e7);
    const ClaimResult split_all = check_claim(e7, {pat(e7, {"A"}), true, full_mask(7)});
    CHECK(split_all.pass);
    CHECK(split_all.x_point);
    CHECK(split_all.all_special);

    const ClaimResult aniso = check_claim(e7, {pat(e7, {}), true, 0});
    CHECK(aniso.pass);
    CHECK(!aniso.x_point);
    CHECK(!aniso.all_special);

    const Scenario e6 = Scenario::create(ScenarioName::e6);
    const ClaimResult rost = check_claim(e6, {pat(e6, {"A"}), true, vertices_mask({2, 4}, 6)});
    CHECK(rost.pass);
    CHECK(!rost.x_point);
    CHECK(!rost.all_special);
}

TEST_CASE("claim holds on every admissible state of every scenario") {
    std::vector<std::pair<Scenario, DriverConfig>> runs;
    for (int n = 3; n <= 8; ++n) runs.emplace_back(Scenario::create(ScenarioName::spin, n), DriverConfig{});
    for (int n = 3; n <= 8; ++n) runs.emplace_back(Scenario::create(ScenarioName::gorth, n), DriverConfig{});
    runs.emplace_back(Scenario::create(ScenarioName::e6), DriverConfig{});
    DriverConfig cfg6;
    cfg6.e6_variant = E6Variant::type6;
    runs.emplace_back(Scenario::create(ScenarioName::e6), cfg6);
    runs.emplace_back(Scenario::create(ScenarioName::e7), DriverConfig{});
    for (const auto& [s, cfg] : runs)
        for (const auto& st : enumerate_states(s, cfg)) CHECK(check_claim(s, st, cfg).pass);
}

TEST_CASE("lemma4 consistency: clean for all scenarios, one violation for the corrupted fixture") {
    for (const auto& [name, rank] :
         std::vector<std::pair<ScenarioName, int>>{{ScenarioName::spin, 5},
                                                   {ScenarioName::spin, 6},
                                                   {ScenarioName::gorth, 5},
                                                   {ScenarioName::gorth, 6},
                                                   {ScenarioName::e6, 0},
                                                   {ScenarioName::e7, 0}}) {
        const Scenario s = Scenario::create(name, rank);
        const auto states = enumerate_states(s);
        CHECK(lemma4_consistency(s, states).empty());
    }

    // corrupted fixture: allow a nonsplit A with vertex 7 circled in E7
    const Scenario e7 = Scenario::create(ScenarioName::e7);
    auto states = enumerate_states(e7);
    states.push_back({pat(e7, {}), true, vertices_mask({7}, 7)});
    const auto violations = lemma4_consistency(e7, states);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].state_index == states.size() - 1);
    CHECK(violations[0].phi == 1);
}

TEST_CASE("negative control: dropping R-E7 produces a condition-1 failure") {
    const Scenario e7 = Scenario::create(ScenarioName::e7);
    DriverConfig weak;
    weak.rules.r_e7 = false;
    const auto states = enumerate_states(e7, weak);
    bool failed = false;
    for (const auto& st : states)
        if (!check_condition1(e7, st, {1}, weak).pass) failed = true;
    CHECK(failed);
    // with the full rule set everything passes
    for (const auto& st : enumerate_states(e7))
        CHECK(check_condition1(e7, st, {1}).pass);
}

TEST_CASE("verify_corollary: all four families verify") {
    const Report springer = verify_corollary(CorollaryName::springer, 6);
    CHECK(springer.verified);
    CHECK(springer.p == 2);
    CHECK(springer.lemma4_violations == 0);
    CHECK(springer.substantive_passes > 0);
    CHECK(springer.vacuous_passes > 0);
    CHECK(std::all_of(springer.claims.begin(), springer.claims.end(), [](bool b) { return b; }));

    const Report bfl = verify_corollary(CorollaryName::bfl, 5);
    CHECK(bfl.verified);
    CHECK(bfl.p == 2);

    const Report rost = verify_corollary(CorollaryName::rost);
    CHECK(rost.verified);
    CHECK(rost.p == 3);

    const Report rost6 = verify_corollary(CorollaryName::rost6);
    CHECK(rost6.verified);

    const Report e7 = verify_corollary(CorollaryName::e7);
    CHECK(e7.verified);
    CHECK(e7.p == 2);
    bool has_odd_note = false;
    for (const auto& n : e7.notes)
        if (n.find("odd-degree") != std::string::npos) has_odd_note = true;
    CHECK(has_odd_note);
}

TEST_CASE("verify_corollary: rank handling") {
    CHECK_THROWS_AS(verify_corollary(CorollaryName::springer), input_error);
    CHECK_THROWS_AS(verify_corollary(CorollaryName::e7, 7), input_error);
    CHECK_THROWS_AS(verify_corollary(CorollaryName::springer, 2), input_error);
}

TEST_CASE("vacuity accounting: every family has both kinds of passes") {
    for (const Report& rep :
         {verify_corollary(CorollaryName::springer, 5), verify_corollary(CorollaryName::bfl, 6),
          verify_corollary(CorollaryName::rost), verify_corollary(CorollaryName::e7)}) {
        CHECK(rep.substantive_passes > 0);
        CHECK(rep.vacuous_passes > 0);
    }
}

TEST_CASE("remark coverage: the all-split state is admissible and has a point") {
    for (CorollaryName name : {CorollaryName::rost, CorollaryName::e7}) {
        const Report rep = verify_corollary(name);
        bool found = false;
        for (const auto& n : rep.notes)
            if (n.find("equality direction") != std::string::npos) found = true;
        CHECK(found);
    }
}

TEST_CASE("determinism: two verifier runs agree exactly") {
    const Report a = verify_corollary(CorollaryName::bfl, 6);
    const Report b = verify_corollary(CorollaryName::bfl, 6);
    CHECK(a.states == b.states);
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].state == b.checks[i].state);
        CHECK(a.checks[i].phi == b.checks[i].phi);
        CHECK(a.checks[i].cond1 == b.checks[i].cond1);
        CHECK(a.checks[i].cond2 == b.checks[i].cond2);
        CHECK(a.checks[i].vacuous == b.checks[i].vacuous);
    }
    CHECK(a.notes == b.notes);
    CHECK(a.claims == b.claims);
}

TEST_CASE("verify_all covers the whole suite") {
    const auto reports = verify_all();
    CHECK(reports.size() == 15); // 6 springer + 6 bfl + rost + rost6 + e7
    for (const auto& r : reports) CHECK(r.verified);
}
