#include "normcalc/titsalg.hpp"

#include <algorithm>

namespace normcalc {

BrauerContext::BrauerContext(std::vector<std::string> names, std::vector<Int> exponents,
                             std::vector<Vec> relations)
    : names_(std::move(names)), exponents_(std::move(exponents)), relations_(std::move(relations)) {
    if (names_.size() != exponents_.size()) throw input_error("generator name/exponent count mismatch");
    for (Int e : exponents_)
        if (e < 1) throw input_error("generator exponents must be >= 1");
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j]) throw input_error("duplicate generator name '" + names_[i] + "'");

    const int n = generator_count();
    std::vector<Vec> cols;
    for (int i = 0; i < n; ++i) {
        Vec rel(static_cast<std::size_t>(n), 0);
        rel[static_cast<std::size_t>(i)] = exponents_[static_cast<std::size_t>(i)];
        cols.push_back(std::move(rel));
    }
    for (const auto& r : relations_) {
        if (static_cast<int>(r.size()) != n) throw input_error("relation length must match generator count");
        cols.push_back(r);
    }
    const Cokernel ck = cokernel(cols.empty() ? Matrix(n, 0) : Matrix::from_columns(cols), n);
    if (!ck.group.is_finite()) throw input_error("Brauer context group must be finite");
    group_ = ck.group;
    proj_ = ck.proj;
}

int BrauerContext::generator_index(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    throw input_error("unknown Brauer generator '" + name + "'");
}

Vec BrauerContext::generator_class(int i) const {
    if (i < 0 || i >= generator_count()) throw input_error("generator index out of range");
    return group_.reduce(proj_.column(i));
}

Vec BrauerContext::class_of(const Vec& generator_coords) const {
    if (static_cast<int>(generator_coords.size()) != generator_count())
        throw input_error("generator coordinate length mismatch");
    return group_.reduce(proj_.apply(generator_coords));
}

std::string BrauerContext::element_name(const Vec& element) const {
    const Vec r = group_.reduce(element);
    if (group_.is_zero(r)) return "k";
    for (int i = 0; i < generator_count(); ++i)
        if (r == generator_class(i)) return "[" + names_[static_cast<std::size_t>(i)] + "]";
    for (int i = 0; i < generator_count(); ++i)
        if (r == group_.scale(2, generator_class(i)))
            return "[" + names_[static_cast<std::size_t>(i)] + "]^2";
    return vec_display(r);
}

std::string SplitnessPattern::display(const BrauerContext& ctx) const {
    if (size() != ctx.generator_count()) throw input_error("pattern size mismatch");
    std::string out;
    for (int i = 0; i < size(); ++i) {
        if (i) out += ", ";
        out += ctx.names()[static_cast<std::size_t>(i)] + (is_split(i) ? ":split" : ":nonsplit");
    }
    return out;
}

Subset split_subgroup(const BrauerContext& ctx, const SplitnessPattern& pattern) {
    if (pattern.size() != ctx.generator_count()) throw input_error("pattern size mismatch");
    std::vector<Vec> gens;
    for (int i = 0; i < ctx.generator_count(); ++i)
        if (pattern.is_split(i)) gens.push_back(ctx.generator_class(i));
    return subgroup_generated(ctx.group(), gens);
}

bool pattern_consistent(const BrauerContext& ctx, const SplitnessPattern& pattern) {
    const Subset killed = split_subgroup(ctx, pattern);
    for (int i = 0; i < ctx.generator_count(); ++i)
        if (!pattern.is_split(i) && killed.contains(ctx.generator_class(i))) return false;
    return true;
}

TitsAlgebraTable::TitsAlgebraTable(RootSystem rs, BrauerContext ctx, std::vector<Vec> generator_coords)
    : rs_(std::move(rs)),
      ctx_(std::move(ctx)),
      gen_coords_(std::move(generator_coords)),
      beta_hom_(AbHom::zero(rs_.center(), ctx_.group())) {
    if (static_cast<int>(gen_coords_.size()) != rs_.rank())
        throw input_error("one label per vertex required");

    std::vector<Vec> classes;
    classes.reserve(gen_coords_.size());
    for (const auto& gc : gen_coords_) classes.push_back(ctx_.class_of(gc));

    for (int v = 1; v <= rs_.rank(); ++v) {
        const Vec& cls = classes[static_cast<std::size_t>(v - 1)];
        if (rs_.center().is_zero(rs_.restriction(v)) && !ctx_.group().is_zero(cls))
            throw input_error("vertex with trivial restriction must carry the split label");
        for (int w = v + 1; w <= rs_.rank(); ++w)
            if (rs_.restriction(v) == rs_.restriction(w) && cls != classes[static_cast<std::size_t>(w - 1)])
                throw input_error("labels must factor through the restriction map");
    }

    // the homomorphism C* -> Br determined by res(i) |-> class(i)
    const Matrix assign = Matrix::from_columns(classes);
    beta_hom_ = AbHom(rs_.center(), ctx_.group(), assign.times(rs_.class_lift()));
    for (int v = 1; v <= rs_.rank(); ++v)
        if (beta_hom_.apply(rs_.restriction(v)) != classes[static_cast<std::size_t>(v - 1)])
            throw input_error("labels do not define a homomorphism on C*");
}

Vec TitsAlgebraTable::assignment(int vertex) const {
    return ctx_.class_of(generator_coords(vertex));
}

const Vec& TitsAlgebraTable::generator_coords(int vertex) const {
    if (vertex < 1 || vertex > rs_.rank()) throw input_error("vertex out of range");
    return gen_coords_[static_cast<std::size_t>(vertex - 1)];
}

Vec TitsAlgebraTable::beta(const Vec& center_element) const {
    return beta_hom_.apply(rs_.center().reduce(center_element));
}

TitsAlgebraTable TitsAlgebraTable::with_context(BrauerContext ctx) const {
    return TitsAlgebraTable(rs_, std::move(ctx), gen_coords_);
}

TitsAlgebraTable tits_table(Kind kind, int rank) {
    if (kind == Kind::A)
        throw capability_error("no Tits algebra table is defined for type A groups here; "
                               "supported tables: D_n, E6, E7");
    RootSystem rs = RootSystem::create(kind, rank);
    if (kind == Kind::D) {
        // Exponents and relations depend on the parity of n: the fork classes
        // generate C* = Z/4 for odd n (with [A] = 2[C+], [C-] = 3[C+]) and
        // C* = Z/2 x Z/2 for even n (with [A] = [C+] + [C-]).
        const bool odd = rank % 2 != 0;
        const std::vector<std::string> names{"A", "C+", "C-"};
        const std::vector<Int> exps = odd ? std::vector<Int>{2, 4, 4} : std::vector<Int>{2, 2, 2};
        const std::vector<Vec> rels = odd ? std::vector<Vec>{{1, -2, 0}, {0, 3, -1}}
                                          : std::vector<Vec>{{1, -1, -1}};
        BrauerContext ctx(names, exps, rels);
        std::vector<Vec> coords;
        for (int v = 1; v <= rank - 2; ++v)
            coords.push_back(v % 2 == 1 ? Vec{1, 0, 0} : Vec{0, 0, 0});
        coords.push_back({0, 1, 0});
        coords.push_back({0, 0, 1});
        return TitsAlgebraTable(std::move(rs), std::move(ctx), std::move(coords));
    }
    if (rank == 6) {
        BrauerContext ctx({"A"}, {3});
        std::vector<Vec> coords{{1}, {0}, {2}, {0}, {1}, {2}};
        return TitsAlgebraTable(std::move(rs), std::move(ctx), std::move(coords));
    }
    BrauerContext ctx({"A"}, {2});
    std::vector<Vec> coords{{0}, {1}, {0}, {0}, {1}, {0}, {1}};
    return TitsAlgebraTable(std::move(rs), std::move(ctx), std::move(coords));
}

bool beta_eval(const Subset& x, const TitsAlgebraTable& table, const SplitnessPattern& pattern) {
    if (x.ambient() != table.root_system().center())
        throw input_error("beta_eval: subset must live in the table's center character group");
    const Subset killed = split_subgroup(table.context(), pattern);
    for (const auto& elem : x.elements())
        if (killed.contains(table.beta(elem))) return true;
    return false;
}

} // namespace normcalc
