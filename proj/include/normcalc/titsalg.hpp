#pragma once

#include <string>
#include <vector>

#include "normcalc/abgroup.hpp"
#include "normcalc/rootdata.hpp"

namespace normcalc {

/// Formal Brauer-group fragment: named algebra classes with declared exponents
/// and optional integer relations among them. No index arithmetic happens
/// here; a class is just an element of the presented finite group.
class BrauerContext {
public:
    BrauerContext(std::vector<std::string> names, std::vector<Int> exponents,
                  std::vector<Vec> relations = {});

    int generator_count() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<Int>& exponents() const { return exponents_; }
    const std::vector<Vec>& relations() const { return relations_; }
    const FinAbGroup& group() const { return group_; }

    int generator_index(const std::string& name) const;
    Vec generator_class(int i) const;

    /// Class of an arbitrary generator-coordinate combination.
    Vec class_of(const Vec& generator_coords) const;

    /// "k" for 0, "[A]", "[A]^2", "[C+]", ... ; coordinates as a fallback.
    std::string element_name(const Vec& element) const;

    bool operator==(const BrauerContext& rhs) const = default;

private:
    std::vector<std::string> names_;
    std::vector<Int> exponents_;
    std::vector<Vec> relations_;
    FinAbGroup group_;
    Matrix proj_;
};

/// Per-generator split / nonsplit assignment.
class SplitnessPattern {
public:
    explicit SplitnessPattern(std::vector<bool> split) : split_(std::move(split)) {}

    int size() const { return static_cast<int>(split_.size()); }
    bool is_split(int i) const { return split_.at(static_cast<std::size_t>(i)); }
    const std::vector<bool>& bits() const { return split_; }
    std::string display(const BrauerContext& ctx) const;

    bool operator==(const SplitnessPattern& rhs) const = default;

private:
    std::vector<bool> split_;
};

/// Subgroup of the Brauer group generated by the split classes.
Subset split_subgroup(const BrauerContext& ctx, const SplitnessPattern& pattern);

/// A pattern is consistent when no nonsplit generator's class is forced to
/// zero by the split ones together with the declared relations.
bool pattern_consistent(const BrauerContext& ctx, const SplitnessPattern& pattern);

/// Tits-algebra assignment beta(res(i)) per vertex, stored as generator
/// combinations so the context's relations can be swapped out. The data must
/// factor through the restriction map as a homomorphism C* -> Br.
class TitsAlgebraTable {
public:
    TitsAlgebraTable(RootSystem rs, BrauerContext ctx, std::vector<Vec> generator_coords);

    const RootSystem& root_system() const { return rs_; }
    const BrauerContext& context() const { return ctx_; }

    Vec assignment(int vertex) const; // class of the label over `vertex` (1-based)
    const Vec& generator_coords(int vertex) const;

    /// The homomorphism C* -> Br induced by the assignment.
    Vec beta(const Vec& center_element) const;
    const AbHom& beta_hom() const { return beta_hom_; }

    /// Same vertex labels over a different context (e.g. extra relations).
    TitsAlgebraTable with_context(BrauerContext ctx) const;

private:
    RootSystem rs_;
    BrauerContext ctx_;
    std::vector<Vec> gen_coords_;
    AbHom beta_hom_;
};

/// The standard tables: D_n with [A] along the odd chain vertices and
/// [C+], [C-] on the fork, E6 with [A], [A]^2 on 1,5 / 3,6, E7 with [A]
/// on 2, 5, 7. The C+/C- orientation is fixed data, not derived.
TitsAlgebraTable tits_table(Kind kind, int rank);

/// True iff some x in X has beta(x) = 0 once split generators are sent to 0.
bool beta_eval(const Subset& x, const TitsAlgebraTable& table, const SplitnessPattern& pattern);

} // namespace normcalc
