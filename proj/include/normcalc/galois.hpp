#pragma once

#include <optional>
#include <vector>

#include "normcalc/abgroup.hpp"
#include "normcalc/rootdata.hpp"

namespace normcalc {

/// Galois action on the Dynkin diagram through a diagram automorphism of
/// order at most 2, together with the induced automorphism of C*. Triality
/// (the order-3 automorphisms of D4) is rejected.
///
/// The Tate-twist action on mu(-1) is the identity for every scenario in this
/// library (Hom(mu_n, mu_n) carries the trivial action); a scenario with an
/// outer mu-action would have to override it explicitly via `with_mu_twist`.
class GaloisAction {
public:
    GaloisAction(RootSystem rs, DiagramAut generator);
    static GaloisAction inner(RootSystem rs);
    GaloisAction with_mu_twist(AbHom twist) const;

    const RootSystem& root_system() const { return rs_; }
    const DiagramAut& generator() const { return gen_; }
    bool is_inner() const { return gen_.is_identity(); }
    const Matrix& induced() const { return induced_; }
    const std::optional<AbHom>& mu_twist_action() const { return mu_twist_; }

    int apply(int vertex) const { return gen_.apply(vertex); }
    Vec act(const Vec& center_element) const;

    /// Orbits contained in `vertices`; an orbit that leaves the set is dropped.
    std::vector<std::vector<int>> orbits(const std::vector<int>& vertices) const;

    /// {x in C* : sigma(x) = x}.
    Subset fixed_subgroup() const;

private:
    RootSystem rs_;
    DiagramAut gen_;
    Matrix induced_;
    std::optional<AbHom> mu_twist_;
};

} // namespace normcalc
