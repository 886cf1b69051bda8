#pragma once

#include <string>
#include <vector>

#include "normcalc/abgroup.hpp"

namespace normcalc {

/// Simply-laced families. Multiply-laced types are rejected at parse time.
enum class Kind { A, D, E };

Kind parse_kind(const std::string& name);
std::string kind_name(Kind kind);

/// Permutation of the Dynkin diagram vertices (1-based Bourbaki numbers).
struct DiagramAut {
    std::vector<int> images; // images[v-1] = sigma(v)

    static DiagramAut identity(int rank);
    int apply(int vertex) const;
    int order() const;
    bool is_identity() const;
    bool operator==(const DiagramAut& rhs) const = default;
};

/// Standard simply-laced Cartan matrix in Bourbaki numbering:
/// D-type fork at vertices n-1, n attached to n-2; E-type vertex 2 attached
/// to vertex 4.
Matrix cartan_matrix(Kind kind, int rank);

/// Full automorphism group of the diagram.
std::vector<DiagramAut> diagram_automorphisms(Kind kind, int rank);

/// Root system with its center character group C* = P/Q and the restriction
/// classes of the fundamental weights. C* is computed as the cokernel of the
/// Cartan matrix via Smith reduction; restriction(i) is the class of the i-th
/// standard basis vector of the weight lattice.
class RootSystem {
public:
    RootSystem() = default; // empty placeholder; use create()
    static RootSystem create(Kind kind, int rank);

    Kind kind() const { return kind_; }
    int rank() const { return rank_; }
    const Matrix& cartan() const { return cartan_; }
    const FinAbGroup& center() const { return center_; }

    /// Restriction of the i-th fundamental weight to the center (1-based).
    const Vec& restriction(int vertex) const;
    const std::vector<Vec>& restrictions() const { return restrictions_; }

    /// Class in C* of an arbitrary weight-lattice vector.
    Vec weight_class(const Vec& weight_coords) const;

    /// Projection Z^rank -> C* coordinates and an integer section of it.
    const Matrix& class_projection() const { return proj_; }
    const Matrix& class_lift() const { return lift_; }

    /// Matrix of the automorphism of C* induced by a diagram automorphism.
    Matrix induced_center_matrix(const DiagramAut& aut) const;

    bool adjacent(int i, int j) const;

    /// Conventional glyph for a center element: chi/chi+/chi- for D, g/2g for
    /// E6, chi for E7, coordinates otherwise.
    std::string element_name(const Vec& center_element) const;

    bool operator==(const RootSystem& rhs) const = default;

private:
    Kind kind_ = Kind::A;
    int rank_ = 0;
    Matrix cartan_;
    FinAbGroup center_;
    std::vector<Vec> restrictions_;
    Matrix proj_;
    Matrix lift_;
};

/// Convenience wrapper: the center group and the restriction map.
std::pair<FinAbGroup, std::vector<Vec>> center_characters(Kind kind, int rank);

} // namespace normcalc
