#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "normcalc/abgroup.hpp"
#include "normcalc/galois.hpp"
#include "normcalc/rootdata.hpp"
#include "normcalc/titsalg.hpp"

namespace normcalc {

/// Cocharacter of the quotient torus, identified with an integer.
struct Cocharacter {
    Int value = 0;
    bool operator==(const Cocharacter& rhs) const = default;
};

enum class ScenarioName { spin, gorth, e6, e7 };

std::string scenario_name_str(ScenarioName name);
ScenarioName parse_scenario(const std::string& name);

/// Expert knobs, normally loaded from an override file. gamma_kernel is
/// applied first (it changes mu(-1)); beta_image is then read in the new
/// mu(-1) coordinates; relations extend the Brauer context.
struct ScenarioOverrides {
    std::optional<Vec> beta_image;
    std::optional<std::vector<Vec>> gamma_kernel;
    std::optional<std::vector<Vec>> relations;
};

/// One exact sequence 1 -> G1 -> G -> Gm -> 1 packaged as explicit maps:
/// alpha: Z -> Z on cocharacters, beta: Z -> mu(-1), gamma: C* -> mu(-1),
/// plus the Brauer context, the Tits table, and the Galois actions the
/// discriminant flag can select.
class Scenario {
public:
    static Scenario create(ScenarioName name, int rank = 0, const ScenarioOverrides& overrides = {});

    ScenarioName name() const { return name_; }
    Kind kind() const { return rs_.kind(); }
    int rank() const { return rs_.rank(); }
    Int p() const { return p_; }
    const RootSystem& root_system() const { return rs_; }
    const FinAbGroup& mu_twist() const { return mu_; }
    const AbHom& alpha() const { return alpha_; }
    const AbHom& beta_map() const { return beta_; }
    const AbHom& gamma() const { return gamma_; }
    const BrauerContext& brauer() const { return tits_.context(); }
    const TitsAlgebraTable& tits() const { return tits_; }

    /// Inner action, or the fork swap for gorth with nontrivial discriminant.
    const GaloisAction& galois_action(bool disc_trivial) const;
    bool has_disc_freedom() const { return name_ == ScenarioName::gorth; }

    /// X(phi) depends on phi only modulo this (the order of beta(1)).
    Int phi_period() const;
    /// Residues modulo phi_period() that are coprime to p.
    std::vector<Int> coprime_residues() const;

    const std::vector<std::pair<std::string, std::string>>& metadata() const { return metadata_; }

private:
    Scenario() = default;

    ScenarioName name_ = ScenarioName::spin;
    Int p_ = 2;
    RootSystem rs_;
    FinAbGroup mu_;
    AbHom alpha_ = AbHom::identity(FinAbGroup::free(1));
    AbHom beta_ = AbHom::identity(FinAbGroup::free(1));
    AbHom gamma_ = AbHom::identity(FinAbGroup::free(1));
    TitsAlgebraTable tits_ = normcalc::tits_table(Kind::E, 7);
    std::vector<GaloisAction> actions_; // [0] inner, [1] fork swap (gorth only)
    std::vector<std::pair<std::string, std::string>> metadata_;
};

/// Intermediate sets of the X(phi) computation, for tracing.
struct XPhiStages {
    Subset alpha_preimage; // in Z
    Subset beta_image;     // in mu(-1)
    Subset gamma_preimage; // in C*
    Subset fixed;          // C*^Gamma
    Subset result;         // X(phi)
};

XPhiStages x_phi_stages(const Scenario& s, bool disc_trivial, Cocharacter phi);
Subset x_phi(const Scenario& s, bool disc_trivial, Cocharacter phi);

/// Subsets of Delta as bitmasks, bit v-1 for vertex v.
using VertexMask = std::uint32_t;

VertexMask full_mask(int rank);
std::vector<int> mask_vertices(VertexMask mask, int rank);
VertexMask vertices_mask(const std::vector<int>& vertices, int rank);
bool mask_stable(VertexMask mask, const GaloisAction& action);
std::string mask_display(VertexMask mask, int rank);

/// The family Omega(phi) of all Theta subsets of Delta whose complement's
/// Gamma-orbit sums generate a subgroup meeting X(phi). Downward closed in
/// Theta.
class OmegaFamily {
public:
    OmegaFamily(int rank, std::vector<bool> members);

    int rank() const { return rank_; }
    bool contains(VertexMask theta) const;
    std::size_t count() const;
    std::vector<VertexMask> members() const;

    /// The antichain of minimal complements Delta \ Theta over all members.
    std::vector<VertexMask> minimal_complements() const;

private:
    int rank_;
    std::vector<bool> members_;
};

OmegaFamily omega(const RootSystem& rs, const GaloisAction& action, const Subset& x);

/// Tits index: the Galois-stable set of distinguished (circled) vertices.
/// A parabolic of type Theta is defined over the field iff Theta is stable
/// and Delta \ Theta is contained in `distinguished`.
struct TitsIndex {
    VertexMask distinguished = 0;
    bool parabolic_defined(VertexMask theta, const GaloisAction& action, int rank) const;
};

/// Specialness criterion: some parabolic defined over the field has its type
/// in Omega. By downward closure it suffices to test Delta \ distinguished.
bool is_f_special(const TitsIndex& index, const OmegaFamily& om, const GaloisAction& action);

/// Norm-principle scaling: phi special over a degree-d extension makes d*phi
/// special over the base.
Cocharacter scale_special(Cocharacter phi, Int degree);

bool coprime(Int a, Int p);

} // namespace normcalc
