#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "normcalc/errors.hpp"

namespace normcalc {

using Int = std::int64_t;
using Vec = std::vector<Int>;

// Overflow-checked 64-bit arithmetic. Magnitudes in this library are tiny,
// but wrapping would silently corrupt group arithmetic, so every ring
// operation goes through these.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_neg(Int a);

/// "3" for 1-dimensional vectors, "(3, 1)" otherwise.
std::string vec_display(const Vec& x);

/// Dense integer matrix, row-major. All arithmetic is overflow-checked.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols);
    Matrix(int rows, int cols, std::vector<Int> data);
    static Matrix identity(int n);
    static Matrix from_rows(const std::vector<Vec>& rows);
    static Matrix from_columns(const std::vector<Vec>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    Int at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    Vec row(int i) const;
    Vec column(int j) const;
    Matrix times(const Matrix& rhs) const;
    Vec apply(const Vec& x) const;
    Matrix transposed() const;
    bool operator==(const Matrix& rhs) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> data_;
};

/// Result of Smith reduction: u * m * v == s, with s diagonal,
/// each diagonal entry non-negative and dividing the next, and
/// u, v unimodular.
struct SmithForm {
    Matrix s;
    Matrix u;
    Matrix v;
};

SmithForm smith_normal_form(const Matrix& m);

/// Inverse of a unimodular integer matrix (throws input_error otherwise).
Matrix unimodular_inverse(const Matrix& u);

/// Finitely generated abelian group Z^r + Z/d1 + ... + Z/dk in invariant-factor
/// form (d1 | d2 | ... | dk, each >= 2). Elements are integer vectors of length
/// r + k; the free coordinates come first, torsion coordinates are reduced into
/// [0, di).
class FinAbGroup {
public:
    FinAbGroup() = default; // trivial group
    FinAbGroup(Int free_rank, std::vector<Int> invariant_factors);
    static FinAbGroup free(Int rank) { return FinAbGroup(rank, {}); }
    static FinAbGroup cyclic(Int n) { return FinAbGroup(0, {n}); }

    Int free_rank() const { return free_rank_; }
    const std::vector<Int>& invariant_factors() const { return factors_; }
    int dim() const { return static_cast<int>(free_rank_ + static_cast<Int>(factors_.size())); }
    bool is_trivial() const { return dim() == 0; }
    bool is_finite() const { return free_rank_ == 0; }
    Int order() const; // finite groups only
    Int exponent() const; // finite groups only; 1 for the trivial group

    Vec zero() const { return Vec(static_cast<std::size_t>(dim()), 0); }
    Vec reduce(Vec x) const;
    bool is_reduced(const Vec& x) const;
    Vec add(const Vec& a, const Vec& b) const;
    Vec neg(const Vec& a) const;
    Vec scale(Int c, const Vec& a) const;
    bool is_zero(const Vec& a) const;
    Int element_order(const Vec& a) const; // finite groups only

    /// All elements in lexicographic coordinate order (finite groups only).
    std::vector<Vec> elements() const;

    std::string display() const; // "Z^2 x Z/2 x Z/4", "0" for trivial

    bool operator==(const FinAbGroup& rhs) const = default;

private:
    void check_element(const Vec& x) const;

    Int free_rank_ = 0;
    std::vector<Int> factors_;
};

/// Homomorphism between finitely generated abelian groups, given by the images
/// of the canonical generators of the domain (column j = image of generator j).
class AbHom {
public:
    AbHom(FinAbGroup domain, FinAbGroup codomain, Matrix matrix);
    static AbHom identity(const FinAbGroup& g);
    static AbHom zero(const FinAbGroup& domain, const FinAbGroup& codomain);

    const FinAbGroup& domain() const { return domain_; }
    const FinAbGroup& codomain() const { return codomain_; }
    const Matrix& matrix() const { return matrix_; }

    Vec apply(const Vec& x) const;
    AbHom compose_after(const AbHom& inner) const; // (*this) o inner

private:
    FinAbGroup domain_;
    FinAbGroup codomain_;
    Matrix matrix_;
};

/// A finite subset of a group, or a coset base + lattice inside a free group.
/// Finite ambients always use the explicit form; free ambients use the coset
/// form (a singleton is a coset with no lattice generators).
class Subset {
public:
    static Subset empty(FinAbGroup ambient);
    static Subset of_elements(FinAbGroup ambient, std::vector<Vec> elements);
    static Subset whole_group(FinAbGroup ambient); // finite ambients only
    static Subset coset(FinAbGroup ambient, Vec base, std::vector<Vec> lattice_gens);

    const FinAbGroup& ambient() const { return ambient_; }
    bool is_empty() const;
    bool is_explicit() const { return !is_coset_; }
    bool is_coset() const { return is_coset_; }

    /// Sorted, deduplicated element list (explicit form only).
    const std::vector<Vec>& elements() const;
    std::size_t size() const; // explicit form only
    const Vec& coset_base() const;
    const std::vector<Vec>& coset_lattice() const;

    bool contains(const Vec& x) const;
    std::string display() const;

    bool operator==(const Subset& rhs) const = default;

private:
    Subset() = default;

    FinAbGroup ambient_;
    bool is_coset_ = false;
    std::vector<Vec> elements_; // explicit form: sorted + unique
    Vec base_;
    std::vector<Vec> lattice_;
};

/// Closure of `gens` under addition and negation inside a finite group.
/// Generators must be reduced; the result always contains 0.
Subset subgroup_generated(const FinAbGroup& g, const std::vector<Vec>& gens);

/// Exact preimage {x : h(x) in target}. Finite domains are enumerated; free
/// domains are solved via Smith reduction and yield a coset (or empty).
Subset preimage(const AbHom& h, const Subset& target);

/// Exact image of a subset. Cosets into finite codomains are materialized.
Subset image(const AbHom& h, const Subset& source);

Subset intersect(const Subset& a, const Subset& b);
bool contains(const Subset& a, const Vec& x);

/// Cokernel of the column lattice of `relations` acting on Z^rows:
/// the quotient group, the projection Z^rows -> group, and an integer lift
/// with proj * lift = identity on group coordinates.
struct Cokernel {
    FinAbGroup group;
    Matrix proj; // dim(group) x rows
    Matrix lift; // rows x dim(group)
    AbHom projection_hom() const;
};

Cokernel cokernel(const Matrix& relations, int ambient_rank);

/// Quotient of g by the subgroup generated by `gens`, with the projection hom.
struct Quotient {
    FinAbGroup group;
    AbHom proj;
};

Quotient quotient(const FinAbGroup& g, const std::vector<Vec>& gens);

} // namespace normcalc
