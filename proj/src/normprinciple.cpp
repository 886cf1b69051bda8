#include "normcalc/normprinciple.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace normcalc {

std::string scenario_name_str(ScenarioName name) {
    switch (name) {
        case ScenarioName::spin: return "spin";
        case ScenarioName::gorth: return "gorth";
        case ScenarioName::e6: return "e6";
        case ScenarioName::e7: return "e7";
    }
    return "?";
}

ScenarioName parse_scenario(const std::string& name) {
    if (name == "spin") return ScenarioName::spin;
    if (name == "gorth") return ScenarioName::gorth;
    if (name == "e6") return ScenarioName::e6;
    if (name == "e7") return ScenarioName::e7;
    throw input_error("unknown scenario '" + name + "' (expected spin, gorth, e6 or e7)");
}

Scenario Scenario::create(ScenarioName name, int rank, const ScenarioOverrides& overrides) {
    Scenario s;
    s.name_ = name;

    Vec beta_source; // element of C* whose gamma-image is beta(1)
    switch (name) {
        case ScenarioName::spin:
        case ScenarioName::gorth: {
            if (rank < 3)
                throw input_error("type D scenarios need --rank n >= 3 (degree 2n >= 6); n = 2 is rejected");
            s.rs_ = RootSystem::create(Kind::D, rank);
            s.p_ = 2;
            break;
        }
        case ScenarioName::e6:
            s.rs_ = RootSystem::create(Kind::E, 6);
            s.p_ = 3;
            break;
        case ScenarioName::e7:
            s.rs_ = RootSystem::create(Kind::E, 7);
            s.p_ = 2;
            break;
    }
    s.tits_ = tits_table(s.rs_.kind(), s.rs_.rank());

    switch (name) {
        case ScenarioName::spin:
            beta_source = s.rs_.restriction(1); // chi
            s.metadata_ = {{"G1", "Spin(A, sigma)"},
                           {"G", "Clifford group Gamma(A, sigma)"},
                           {"G'", "Spin(A, sigma)"},
                           {"f", "spinor norm"},
                           {"Z", "center of the Clifford group"},
                           {"Z'", "Gm"},
                           {"mu", "full center of Spin(A, sigma)"}};
            break;
        case ScenarioName::gorth:
            beta_source = s.rs_.restriction(s.rs_.rank() - 1); // chi+
            s.metadata_ = {{"G1", "O+(A, sigma)"},
                           {"G", "GO+(A, sigma)"},
                           {"G'", "commutator subgroup of GO+(A, sigma)"},
                           {"f", "multiplier map"},
                           {"Z", "Gm"},
                           {"Z'", "Gm"},
                           {"mu", "mu_2"}};
            break;
        case ScenarioName::e6:
            beta_source = s.rs_.restriction(1); // g
            s.metadata_ = {{"G1", "simply connected inner E6 (norm similarities of an Albert algebra, multiplier 1)"},
                           {"G", "all norm similarities"},
                           {"G'", "= G1"},
                           {"f", "multiplier"},
                           {"Z", "Gm"},
                           {"Z'", "Gm"},
                           {"mu", "mu_3"}};
            break;
        case ScenarioName::e7:
            beta_source = s.rs_.restriction(7); // chi
            s.metadata_ = {{"G1", "simply connected E7 (similarities of a gift, multiplier 1)"},
                           {"G", "all similarities"},
                           {"G'", "= G1"},
                           {"f", "multiplier"},
                           {"Z", "Gm"},
                           {"Z'", "Gm"},
                           {"mu", "mu_2"}};
            break;
    }

    // gamma: C* -> mu(-1). The default kernel is trivial except for gorth,
    // where gamma kills {0, chi} and mu(-1) = Z/2.
    std::vector<Vec> kernel_gens;
    if (name == ScenarioName::gorth) kernel_gens.push_back(s.rs_.restriction(1));
    if (overrides.gamma_kernel) {
        kernel_gens = *overrides.gamma_kernel;
        for (const auto& k : kernel_gens)
            if (!s.rs_.center().is_reduced(k))
                throw input_error("gamma_kernel element is not a reduced element of C*");
    }
    Quotient q = quotient(s.rs_.center(), kernel_gens);
    s.mu_ = q.group;
    s.gamma_ = q.proj;

    Vec beta1 = s.gamma_.apply(beta_source);
    if (overrides.beta_image) {
        if (static_cast<int>(overrides.beta_image->size()) != s.mu_.dim())
            throw input_error("beta_image has the wrong number of coordinates for mu(-1)");
        beta1 = s.mu_.reduce(*overrides.beta_image);
    }
    if (name == ScenarioName::gorth && !overrides.beta_image && !overrides.gamma_kernel) {
        // consistency of the encoded sequence: both fork classes map to beta(1)
        if (s.gamma_.apply(s.rs_.restriction(s.rs_.rank())) != beta1 || s.mu_.is_zero(beta1))
            throw input_error("gorth scenario data is inconsistent");
    }

    s.alpha_ = AbHom::identity(FinAbGroup::free(1));
    s.beta_ = AbHom(FinAbGroup::free(1), s.mu_, Matrix::from_columns({beta1}));

    if (overrides.relations) {
        const BrauerContext& base = s.tits_.context();
        std::vector<Vec> rels = base.relations();
        for (const auto& r : *overrides.relations) rels.push_back(r);
        s.tits_ = s.tits_.with_context(BrauerContext(base.names(), base.exponents(), rels));
    }

    s.actions_.push_back(GaloisAction::inner(s.rs_));
    if (name == ScenarioName::gorth) {
        DiagramAut swap = DiagramAut::identity(s.rs_.rank());
        swap.images[static_cast<std::size_t>(s.rs_.rank() - 2)] = s.rs_.rank();
        swap.images[static_cast<std::size_t>(s.rs_.rank() - 1)] = s.rs_.rank() - 1;
        s.actions_.push_back(GaloisAction(s.rs_, swap));
    }
    return s;
}

const GaloisAction& Scenario::galois_action(bool disc_trivial) const {
    if (name_ == ScenarioName::gorth) return disc_trivial ? actions_[0] : actions_[1];
    if (!disc_trivial)
        throw input_error("scenario '" + scenario_name_str(name_) + "' fixes a trivial discriminant");
    return actions_[0];
}

Int Scenario::phi_period() const { return mu_.element_order(beta_.apply({1})); }

std::vector<Int> Scenario::coprime_residues() const {
    const Int m = phi_period();
    if (m == 1) return {1};
    std::vector<Int> out;
    for (Int r = 1; r < m; ++r)
        if (coprime(r, p_)) out.push_back(r);
    return out;
}

XPhiStages x_phi_stages(const Scenario& s, bool disc_trivial, Cocharacter phi) {
    const FinAbGroup z = FinAbGroup::free(1);
    const Subset target = Subset::of_elements(z, {{phi.value}});
    XPhiStages st{
        .alpha_preimage = preimage(s.alpha(), target),
        .beta_image = Subset::empty(s.mu_twist()),
        .gamma_preimage = Subset::empty(s.root_system().center()),
        .fixed = s.galois_action(disc_trivial).fixed_subgroup(),
        .result = Subset::empty(s.root_system().center()),
    };
    st.beta_image = image(s.beta_map(), st.alpha_preimage);
    st.gamma_preimage = preimage(s.gamma(), st.beta_image);
    st.result = intersect(st.gamma_preimage, st.fixed);
    return st;
}

Subset x_phi(const Scenario& s, bool disc_trivial, Cocharacter phi) {
    return x_phi_stages(s, disc_trivial, phi).result;
}

VertexMask full_mask(int rank) {
    if (rank < 0 || rank > 31) throw input_error("rank out of mask range");
    return rank == 0 ? 0u : (VertexMask{1} << rank) - 1u;
}

std::vector<int> mask_vertices(VertexMask mask, int rank) {
    std::vector<int> out;
    for (int v = 1; v <= rank; ++v)
        if (mask & (VertexMask{1} << (v - 1))) out.push_back(v);
    return out;
}

VertexMask vertices_mask(const std::vector<int>& vertices, int rank) {
    VertexMask m = 0;
    for (int v : vertices) {
        if (v < 1 || v > rank) throw input_error("vertex out of range");
        m |= VertexMask{1} << (v - 1);
    }
    return m;
}

bool mask_stable(VertexMask mask, const GaloisAction& action) {
    const int rank = action.root_system().rank();
    for (int v = 1; v <= rank; ++v) {
        const bool in_v = mask & (VertexMask{1} << (v - 1));
        const bool in_sv = mask & (VertexMask{1} << (action.apply(v) - 1));
        if (in_v != in_sv) return false;
    }
    return true;
}

std::string mask_display(VertexMask mask, int rank) {
    std::string out = "{";
    bool first = true;
    for (int v : mask_vertices(mask, rank)) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

OmegaFamily::OmegaFamily(int rank, std::vector<bool> members) : rank_(rank), members_(std::move(members)) {
    if (members_.size() != (std::size_t{1} << rank_)) throw input_error("Omega family size mismatch");
}

bool OmegaFamily::contains(VertexMask theta) const {
    if (theta > full_mask(rank_)) throw input_error("Theta out of range");
    return members_[theta];
}

std::size_t OmegaFamily::count() const {
    return static_cast<std::size_t>(std::count(members_.begin(), members_.end(), true));
}

std::vector<VertexMask> OmegaFamily::members() const {
    std::vector<VertexMask> out;
    for (VertexMask t = 0; t < members_.size(); ++t)
        if (members_[t]) out.push_back(t);
    return out;
}

std::vector<VertexMask> OmegaFamily::minimal_complements() const {
    const VertexMask full = full_mask(rank_);
    std::vector<VertexMask> out;
    for (VertexMask theta = 0; theta <= full; ++theta) {
        if (!members_[theta]) continue;
        const VertexMask comp = full & ~theta;
        bool minimal = true;
        for (int v = 1; v <= rank_ && minimal; ++v) {
            const VertexMask bit = VertexMask{1} << (v - 1);
            if ((comp & bit) && members_[theta | bit]) minimal = false;
        }
        if (minimal) out.push_back(comp);
    }
    std::sort(out.begin(), out.end(), [](VertexMask a, VertexMask b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    return out;
}

OmegaFamily omega(const RootSystem& rs, const GaloisAction& action, const Subset& x) {
    if (x.ambient() != rs.center()) throw input_error("omega: X must live in C*");
    for (const auto& e : x.elements())
        if (action.act(e) != e) throw input_error("omega: X must be fixed by the Galois action");

    const int rank = rs.rank();
    const VertexMask full = full_mask(rank);
    std::vector<bool> members(std::size_t{1} << rank, false);
    for (VertexMask theta = 0; theta <= full; ++theta) {
        const std::vector<int> comp = mask_vertices(full & ~theta, rank);
        std::vector<Vec> sums;
        for (const auto& orbit : action.orbits(comp)) {
            Vec sum = rs.center().zero();
            for (int v : orbit) sum = rs.center().add(sum, rs.restriction(v));
            sums.push_back(std::move(sum));
        }
        const Subset sub = subgroup_generated(rs.center(), sums);
        members[theta] = !intersect(sub, x).is_empty();
    }
    return OmegaFamily(rank, std::move(members));
}

bool TitsIndex::parabolic_defined(VertexMask theta, const GaloisAction& action, int rank) const {
    const VertexMask comp = full_mask(rank) & ~theta;
    return mask_stable(theta, action) && (comp & ~distinguished) == 0;
}

bool is_f_special(const TitsIndex& index, const OmegaFamily& om, const GaloisAction& action) {
    if (!mask_stable(index.distinguished, action))
        throw input_error("Tits index must be stable under the Galois action");
    const VertexMask theta_min = full_mask(om.rank()) & ~index.distinguished;
    return om.contains(theta_min);
}

Cocharacter scale_special(Cocharacter phi, Int degree) {
    if (degree <= 0) throw input_error("scale_special: degree must be positive");
    return {checked_mul(phi.value, degree)};
}

bool coprime(Int a, Int p) { return std::gcd(a, p) == 1; }

} // namespace normcalc
