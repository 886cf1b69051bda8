#include "normcalc/galois.hpp"

#include <algorithm>
#include <set>

namespace normcalc {

GaloisAction::GaloisAction(RootSystem rs, DiagramAut generator)
    : rs_(std::move(rs)), gen_(std::move(generator)) {
    if (gen_.order() > 2)
        throw capability_error(
            "only Galois actions through a diagram automorphism of order <= 2 are supported "
            "(D4 triality is out of scope)");
    induced_ = rs_.induced_center_matrix(gen_);
}

GaloisAction GaloisAction::inner(RootSystem rs) {
    const int rank = rs.rank();
    return GaloisAction(std::move(rs), DiagramAut::identity(rank));
}

GaloisAction GaloisAction::with_mu_twist(AbHom twist) const {
    GaloisAction copy = *this;
    copy.mu_twist_ = std::move(twist);
    return copy;
}

Vec GaloisAction::act(const Vec& center_element) const {
    return rs_.center().reduce(induced_.apply(rs_.center().reduce(center_element)));
}

std::vector<std::vector<int>> GaloisAction::orbits(const std::vector<int>& vertices) const {
    std::set<int> in(vertices.begin(), vertices.end());
    for (int v : in)
        if (v < 1 || v > rs_.rank()) throw input_error("vertex out of range");
    std::vector<std::vector<int>> out;
    std::set<int> done;
    for (int v : in) {
        if (done.count(v)) continue;
        std::vector<int> orbit{v};
        const int w = gen_.apply(v);
        if (w != v) orbit.push_back(w);
        std::sort(orbit.begin(), orbit.end());
        bool inside = true;
        for (int u : orbit) {
            done.insert(u);
            if (!in.count(u)) inside = false;
        }
        if (inside) out.push_back(std::move(orbit));
    }
    return out;
}

Subset GaloisAction::fixed_subgroup() const {
    std::vector<Vec> fixed;
    for (const auto& x : rs_.center().elements())
        if (act(x) == x) fixed.push_back(x);
    return Subset::of_elements(rs_.center(), std::move(fixed));
}

} // namespace normcalc
