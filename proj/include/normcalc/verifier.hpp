#pragma once

#include <optional>
#include <string>
#include <vector>

#include "normcalc/normprinciple.hpp"

namespace normcalc {

/// Which parabolic variety the e6 driver checks: type 1 or its mirror type 6.
enum class E6Variant { type1, type6 };

/// Admissibility rules. Tests switch individual rules off to exercise the
/// negative controls; production runs keep everything on.
struct RuleSet {
    bool r_split = true;    // distinguished vertices carry split Tits classes
    bool r_dn_split = true; // spin: split A + isotropic forces vertex 1
    bool r_e6 = true;       // e6, split A: isotropic without the point vertex means index {2,4}
    bool r_e7 = true;       // e7, split A: isotropic without vertex 7 means index {1}
};

struct DriverConfig {
    E6Variant e6_variant = E6Variant::type1;
    RuleSet rules;
};

/// Finite abstraction of a field extension: Brauer splitness, discriminant
/// flag, Tits index.
struct FieldState {
    SplitnessPattern splitness{std::vector<bool>{}};
    bool disc_trivial = true;
    VertexMask distinguished = 0;

    bool operator==(const FieldState& rhs) const = default;
};

std::string state_display(const Scenario& s, const FieldState& state);

/// All admissible states: consistent splitness patterns x discriminant flags
/// x Galois-stable distinguished sets passing the rule set.
std::vector<FieldState> enumerate_states(const Scenario& s, const DriverConfig& cfg = {});

/// Does the checked variety have a rational point in this state?
bool x_point_predicate(const Scenario& s, const FieldState& state,
                       E6Variant variant = E6Variant::type1);

struct ConditionResult {
    bool pass = false;
    bool vacuous = false; // premise failed
    std::string trace;
};

ConditionResult check_condition1(const Scenario& s, const FieldState& state, Cocharacter phi,
                                 const DriverConfig& cfg = {});
ConditionResult check_condition2(const Scenario& s, const FieldState& state, Cocharacter phi,
                                 const DriverConfig& cfg = {});

struct ClaimResult {
    bool pass = false;
    bool x_point = false;
    bool all_special = false;
    std::string trace;
};

/// The proof's Claim: X(K) nonempty iff every coprime residue is special.
ClaimResult check_claim(const Scenario& s, const FieldState& state, const DriverConfig& cfg = {});

struct Lemma4Violation {
    std::size_t state_index = 0;
    Int phi = 0;
    std::string detail;
};

/// For every state and coprime residue where the specialness criterion holds,
/// 0 must lie in beta(X(phi)). Violations indicate broken admissibility rules.
std::vector<Lemma4Violation> lemma4_consistency(const Scenario& s,
                                                const std::vector<FieldState>& states,
                                                const DriverConfig& cfg = {});

enum class CorollaryName { springer, bfl, rost, rost6, e7 };

std::string corollary_name_str(CorollaryName name);
CorollaryName parse_corollary(const std::string& name);

struct CheckRecord {
    int state = 0;
    Int phi = 0;
    bool cond1 = false;
    bool cond2 = false;
    bool vacuous = false; // condition-1 premise failed
};

struct Report {
    std::string corollary;
    std::string scenario;
    Int p = 0;
    int rank = 0; // 0 when the type fixes it
    std::vector<FieldState> states;
    std::vector<CheckRecord> checks;
    std::vector<bool> claims; // per state
    std::size_t lemma4_violations = 0;
    std::size_t substantive_passes = 0;
    std::size_t vacuous_passes = 0;
    bool verified = false;
    std::vector<std::string> counterexamples;
    std::vector<std::string> notes;
};

Report verify_corollary(CorollaryName name, std::optional<int> rank = {},
                        const DriverConfig& cfg = {}, const ScenarioOverrides& overrides = {});

/// springer and bfl over ranks 3..8, rost, rost6, e7.
std::vector<Report> verify_all();

} // namespace normcalc
