#include "normcalc/abgroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

namespace normcalc {

namespace {

[[noreturn]] void overflow() { throw std::overflow_error("normcalc: 64-bit integer overflow"); }

} // namespace

std::string vec_display(const Vec& x) {
    if (x.size() == 1) return std::to_string(x[0]);
    std::string out = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(x[i]);
    }
    return out + ")";
}

Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) overflow();
    return r;
}

Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) overflow();
    return r;
}

Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) overflow();
    return r;
}

Int checked_neg(Int a) { return checked_sub(0, a); }

Matrix::Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {
    if (rows < 0 || cols < 0) throw input_error("matrix dimensions must be non-negative");
}

Matrix::Matrix(int rows, int cols, std::vector<Int> data) : Matrix(rows, cols) {
    if (data.size() != data_.size()) throw input_error("matrix data size mismatch");
    data_ = std::move(data);
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r ? static_cast<int>(rows[0].size()) : 0;
    Matrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw input_error("ragged matrix rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols) {
    const int c = static_cast<int>(cols.size());
    const int r = c ? static_cast<int>(cols[0].size()) : 0;
    Matrix m(r, c);
    for (int j = 0; j < c; ++j) {
        if (static_cast<int>(cols[j].size()) != r) throw input_error("ragged matrix columns");
        for (int i = 0; i < r; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Vec Matrix::row(int i) const {
    Vec out(static_cast<std::size_t>(cols_));
    for (int j = 0; j < cols_; ++j) out[j] = at(i, j);
    return out;
}

Vec Matrix::column(int j) const {
    Vec out(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) out[i] = at(i, j);
    return out;
}

Matrix Matrix::times(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw input_error("matrix product shape mismatch");
    Matrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < rhs.cols_; ++j) {
            Int acc = 0;
            for (int k = 0; k < cols_; ++k) acc = checked_add(acc, checked_mul(at(i, k), rhs.at(k, j)));
            out.at(i, j) = acc;
        }
    return out;
}

Vec Matrix::apply(const Vec& x) const {
    if (static_cast<int>(x.size()) != cols_) throw input_error("matrix/vector shape mismatch");
    Vec out(static_cast<std::size_t>(rows_), 0);
    for (int i = 0; i < rows_; ++i) {
        Int acc = 0;
        for (int j = 0; j < cols_; ++j) acc = checked_add(acc, checked_mul(at(i, j), x[j]));
        out[i] = acc;
    }
    return out;
}

Matrix Matrix::transposed() const {
    Matrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

SmithForm smith_normal_form(const Matrix& m_in) {
    Matrix a = m_in;
    const int m = a.rows();
    const int n = a.cols();
    Matrix u = Matrix::identity(m);
    Matrix v = Matrix::identity(n);

    auto swap_rows = [&](int r1, int r2) {
        if (r1 == r2) return;
        for (int j = 0; j < n; ++j) std::swap(a.at(r1, j), a.at(r2, j));
        for (int j = 0; j < m; ++j) std::swap(u.at(r1, j), u.at(r2, j));
    };
    auto swap_cols = [&](int c1, int c2) {
        if (c1 == c2) return;
        for (int i = 0; i < m; ++i) std::swap(a.at(i, c1), a.at(i, c2));
        for (int i = 0; i < n; ++i) std::swap(v.at(i, c1), v.at(i, c2));
    };
    // row_dst -= q * row_src
    auto submul_row = [&](int dst, int src, Int q) {
        for (int j = 0; j < n; ++j) a.at(dst, j) = checked_sub(a.at(dst, j), checked_mul(q, a.at(src, j)));
        for (int j = 0; j < m; ++j) u.at(dst, j) = checked_sub(u.at(dst, j), checked_mul(q, u.at(src, j)));
    };
    auto submul_col = [&](int dst, int src, Int q) {
        for (int i = 0; i < m; ++i) a.at(i, dst) = checked_sub(a.at(i, dst), checked_mul(q, a.at(i, src)));
        for (int i = 0; i < n; ++i) v.at(i, dst) = checked_sub(v.at(i, dst), checked_mul(q, v.at(i, src)));
    };

    const int steps = std::min(m, n);
    for (int t = 0; t < steps; ++t) {
        for (;;) {
            int pi = -1, pj = -1;
            for (int i = t; i < m; ++i)
                for (int j = t; j < n; ++j)
                    if (a.at(i, j) != 0 &&
                        (pi < 0 || std::llabs(a.at(i, j)) < std::llabs(a.at(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) break; // remaining block is zero
            swap_rows(t, pi);
            swap_cols(t, pj);

            bool clean = true;
            for (int i = t + 1; i < m; ++i) {
                if (a.at(i, t) == 0) continue;
                const Int q = a.at(i, t) / a.at(t, t);
                if (q != 0) submul_row(i, t, q);
                if (a.at(i, t) != 0) clean = false;
            }
            if (!clean) continue;
            for (int j = t + 1; j < n; ++j) {
                if (a.at(t, j) == 0) continue;
                const Int q = a.at(t, j) / a.at(t, t);
                if (q != 0) submul_col(j, t, q);
                if (a.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // the pivot must divide the remaining block for the invariant chain
            const Int d = a.at(t, t);
            bool fixed = false;
            for (int i = t + 1; i < m && !fixed; ++i)
                for (int j = t + 1; j < n && !fixed; ++j)
                    if (a.at(i, j) % d != 0) {
                        submul_row(t, i, -1); // fold row i into row t, then re-reduce
                        fixed = true;
                    }
            if (fixed) continue;
            break;
        }
        if (a.at(t, t) == 0) break;
        if (a.at(t, t) < 0) {
            for (int j = 0; j < n; ++j) a.at(t, j) = checked_neg(a.at(t, j));
            for (int j = 0; j < m; ++j) u.at(t, j) = checked_neg(u.at(t, j));
        }
    }
    return {a, u, v};
}

Matrix unimodular_inverse(const Matrix& u) {
    if (u.rows() != u.cols()) throw input_error("unimodular_inverse: matrix not square");
    const SmithForm f = smith_normal_form(u);
    for (int i = 0; i < u.rows(); ++i)
        if (f.s.at(i, i) != 1) throw input_error("unimodular_inverse: matrix is not unimodular");
    // f.u * u * f.v == I, hence u^{-1} == f.v * f.u
    return f.v.times(f.u);
}

FinAbGroup::FinAbGroup(Int free_rank, std::vector<Int> invariant_factors)
    : free_rank_(free_rank), factors_(std::move(invariant_factors)) {
    if (free_rank_ < 0) throw input_error("free rank must be non-negative");
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] < 2) throw input_error("invariant factors must be >= 2");
        if (i > 0 && factors_[i] % factors_[i - 1] != 0)
            throw input_error("invariant factors must form a divisibility chain");
    }
}

Int FinAbGroup::order() const {
    if (!is_finite()) throw input_error("order of an infinite group");
    Int n = 1;
    for (Int d : factors_) n = checked_mul(n, d);
    return n;
}

Int FinAbGroup::exponent() const {
    if (!is_finite()) throw input_error("exponent of an infinite group");
    return factors_.empty() ? 1 : factors_.back();
}

void FinAbGroup::check_element(const Vec& x) const {
    if (static_cast<int>(x.size()) != dim()) throw input_error("element dimension mismatch");
}

Vec FinAbGroup::reduce(Vec x) const {
    check_element(x);
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        Int& c = x[static_cast<std::size_t>(free_rank_) + i];
        c %= factors_[i];
        if (c < 0) c += factors_[i];
    }
    return x;
}

bool FinAbGroup::is_reduced(const Vec& x) const {
    check_element(x);
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const Int c = x[static_cast<std::size_t>(free_rank_) + i];
        if (c < 0 || c >= factors_[i]) return false;
    }
    return true;
}

Vec FinAbGroup::add(const Vec& a, const Vec& b) const {
    check_element(a);
    check_element(b);
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_add(a[i], b[i]);
    return reduce(std::move(out));
}

Vec FinAbGroup::neg(const Vec& a) const {
    check_element(a);
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_neg(a[i]);
    return reduce(std::move(out));
}

Vec FinAbGroup::scale(Int c, const Vec& a) const {
    check_element(a);
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_mul(c, a[i]);
    return reduce(std::move(out));
}

bool FinAbGroup::is_zero(const Vec& a) const {
    const Vec r = reduce(a);
    return std::all_of(r.begin(), r.end(), [](Int c) { return c == 0; });
}

Int FinAbGroup::element_order(const Vec& a) const {
    if (!is_finite()) throw input_error("element_order in an infinite group");
    const Vec r = reduce(a);
    Int ord = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const Int d = factors_[i];
        const Int coord_ord = d / std::gcd(d, r[i]);
        ord = std::lcm(ord, coord_ord);
    }
    return ord;
}

std::vector<Vec> FinAbGroup::elements() const {
    if (!is_finite()) throw input_error("cannot enumerate an infinite group");
    if (order() > (1 << 20)) throw input_error("group too large to enumerate");
    std::vector<Vec> out;
    Vec cur = zero();
    for (;;) {
        out.push_back(cur);
        std::size_t i = factors_.size();
        while (i > 0) {
            --i;
            if (++cur[i] < factors_[i]) break;
            cur[i] = 0;
            if (i == 0) return out;
        }
        if (factors_.empty()) return out;
    }
}

std::string FinAbGroup::display() const {
    if (is_trivial()) return "0";
    std::vector<std::string> parts;
    if (free_rank_ == 1) parts.push_back("Z");
    else if (free_rank_ > 1) parts.push_back("Z^" + std::to_string(free_rank_));
    for (Int d : factors_) parts.push_back("Z/" + std::to_string(d));
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += " x ";
        out += parts[i];
    }
    return out;
}

AbHom::AbHom(FinAbGroup domain, FinAbGroup codomain, Matrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != codomain_.dim() || matrix_.cols() != domain_.dim())
        throw input_error("hom matrix shape mismatch");
    // reduce columns into canonical codomain coordinates
    for (int j = 0; j < matrix_.cols(); ++j) {
        const Vec col = codomain_.reduce(matrix_.column(j));
        for (int i = 0; i < matrix_.rows(); ++i) matrix_.at(i, j) = col[i];
    }
    // well-definedness: torsion generators must map to elements killed by their factor
    const auto& facs = domain_.invariant_factors();
    for (std::size_t t = 0; t < facs.size(); ++t) {
        const int j = static_cast<int>(domain_.free_rank() + static_cast<Int>(t));
        if (!codomain_.is_zero(codomain_.scale(facs[t], codomain_.reduce(matrix_.column(j)))))
            throw input_error("hom is not well defined on torsion generators");
    }
}

AbHom AbHom::identity(const FinAbGroup& g) { return AbHom(g, g, Matrix::identity(g.dim())); }

AbHom AbHom::zero(const FinAbGroup& domain, const FinAbGroup& codomain) {
    return AbHom(domain, codomain, Matrix(codomain.dim(), domain.dim()));
}

Vec AbHom::apply(const Vec& x) const {
    if (static_cast<int>(x.size()) != domain_.dim()) throw input_error("hom argument dimension mismatch");
    return codomain_.reduce(matrix_.apply(x));
}

AbHom AbHom::compose_after(const AbHom& inner) const {
    if (inner.codomain_ != domain_) throw input_error("hom composition domain mismatch");
    return AbHom(inner.domain_, codomain_, matrix_.times(inner.matrix_));
}

Subset Subset::empty(FinAbGroup ambient) {
    Subset s;
    s.ambient_ = std::move(ambient);
    return s;
}

Subset Subset::of_elements(FinAbGroup ambient, std::vector<Vec> elements) {
    Subset s;
    for (auto& e : elements) {
        if (static_cast<int>(e.size()) != ambient.dim()) throw input_error("subset element dimension mismatch");
        if (!ambient.is_reduced(e)) throw input_error("subset element is not reduced");
    }
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    s.ambient_ = std::move(ambient);
    s.elements_ = std::move(elements);
    return s;
}

Subset Subset::whole_group(FinAbGroup ambient) {
    auto elems = ambient.elements();
    return of_elements(std::move(ambient), std::move(elems));
}

Subset Subset::coset(FinAbGroup ambient, Vec base, std::vector<Vec> lattice_gens) {
    if (!ambient.invariant_factors().empty() || ambient.free_rank() == 0)
        throw input_error("coset form requires a free ambient group of positive rank");
    if (static_cast<int>(base.size()) != ambient.dim()) throw input_error("coset base dimension mismatch");
    for (const auto& g : lattice_gens)
        if (static_cast<int>(g.size()) != ambient.dim()) throw input_error("coset generator dimension mismatch");
    Subset s;
    s.ambient_ = std::move(ambient);
    s.is_coset_ = true;
    s.base_ = std::move(base);
    s.lattice_ = std::move(lattice_gens);
    return s;
}

bool Subset::is_empty() const { return !is_coset_ && elements_.empty(); }

const std::vector<Vec>& Subset::elements() const {
    if (is_coset_) throw input_error("coset subset has no explicit element list");
    return elements_;
}

std::size_t Subset::size() const { return elements().size(); }

const Vec& Subset::coset_base() const {
    if (!is_coset_) throw input_error("not a coset subset");
    return base_;
}

const std::vector<Vec>& Subset::coset_lattice() const {
    if (!is_coset_) throw input_error("not a coset subset");
    return lattice_;
}

namespace {

// Is x in the sublattice of Z^r spanned by gens?
bool lattice_contains(const std::vector<Vec>& gens, const Vec& x) {
    const int r = static_cast<int>(x.size());
    const Matrix l = Matrix::from_columns(gens.empty() ? std::vector<Vec>{} : gens);
    const Matrix lm = gens.empty() ? Matrix(r, 0) : l;
    const SmithForm f = smith_normal_form(lm);
    const Vec w = f.u.apply(x);
    const int diag = std::min(lm.rows(), lm.cols());
    for (int i = 0; i < r; ++i) {
        const Int s = i < diag ? f.s.at(i, i) : 0;
        if (s == 0) {
            if (w[i] != 0) return false;
        } else if (w[i] % s != 0) {
            return false;
        }
    }
    return true;
}

} // namespace

bool Subset::contains(const Vec& x) const {
    if (static_cast<int>(x.size()) != ambient_.dim()) throw input_error("element dimension mismatch");
    if (!is_coset_) {
        const Vec r = ambient_.reduce(x);
        return std::binary_search(elements_.begin(), elements_.end(), r);
    }
    Vec diff(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) diff[i] = checked_sub(x[i], base_[i]);
    return lattice_contains(lattice_, diff);
}

std::string Subset::display() const {
    if (is_coset_) {
        std::string out = vec_display(base_);
        if (!lattice_.empty()) {
            out += " + <";
            for (std::size_t i = 0; i < lattice_.size(); ++i) {
                if (i) out += ", ";
                out += vec_display(lattice_[i]);
            }
            out += ">";
        } else {
            out = "{" + out + "}";
        }
        return out;
    }
    std::string out = "{";
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i) out += ", ";
        out += vec_display(elements_[i]);
    }
    return out + "}";
}

Subset subgroup_generated(const FinAbGroup& g, const std::vector<Vec>& gens) {
    if (!g.is_finite()) throw input_error("subgroup_generated requires a finite ambient group");
    for (const auto& x : gens) {
        if (static_cast<int>(x.size()) != g.dim()) throw input_error("generator dimension mismatch");
        if (!g.is_reduced(x)) throw input_error("generator is not reduced");
    }
    std::set<Vec> seen;
    std::vector<Vec> stack;
    seen.insert(g.zero());
    stack.push_back(g.zero());
    while (!stack.empty()) {
        const Vec cur = stack.back();
        stack.pop_back();
        for (const auto& x : gens) {
            for (const Vec& next : {g.add(cur, x), g.add(cur, g.neg(x))}) {
                if (seen.insert(next).second) stack.push_back(next);
            }
        }
    }
    return Subset::of_elements(g, std::vector<Vec>(seen.begin(), seen.end()));
}

namespace {

struct AffineSolution {
    Vec base;
    std::vector<Vec> gens;
};

// All x in Z^r with M x congruent to t modulo the codomain torsion and the
// extra lattice generators. Solved over Z via Smith reduction of the
// augmented matrix [M | torsion relations | extra].
std::optional<AffineSolution> solve_affine(const Matrix& m, const FinAbGroup& codomain, const Vec& t,
                                           const std::vector<Vec>& extra) {
    const int r = m.cols();
    const int cd = m.rows();
    std::vector<Vec> cols;
    cols.reserve(static_cast<std::size_t>(r) + codomain.invariant_factors().size() + extra.size());
    for (int j = 0; j < r; ++j) cols.push_back(m.column(j));
    const auto& facs = codomain.invariant_factors();
    for (std::size_t i = 0; i < facs.size(); ++i) {
        Vec rel(static_cast<std::size_t>(cd), 0);
        rel[static_cast<std::size_t>(codomain.free_rank()) + i] = facs[i];
        cols.push_back(std::move(rel));
    }
    for (const auto& e : extra) cols.push_back(e);

    Matrix aug = cols.empty() ? Matrix(cd, 0) : Matrix::from_columns(cols);
    const SmithForm f = smith_normal_form(aug);
    const int n = aug.cols();
    const int diag = std::min(cd, n);
    const Vec w = f.u.apply(t);

    Vec y(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < cd; ++i) {
        const Int s = i < diag ? f.s.at(i, i) : 0;
        if (s == 0) {
            if (w[i] != 0) return std::nullopt;
        } else {
            if (w[i] % s != 0) return std::nullopt;
            y[i] = w[i] / s;
        }
    }
    const Vec z = f.v.apply(y);
    AffineSolution sol;
    sol.base.assign(z.begin(), z.begin() + r);
    for (int j = 0; j < n; ++j) {
        const bool free_col = j >= diag || f.s.at(j, j) == 0;
        if (!free_col) continue;
        const Vec kcol = f.v.column(j);
        Vec xpart(kcol.begin(), kcol.begin() + r);
        if (std::any_of(xpart.begin(), xpart.end(), [](Int c) { return c != 0; }))
            sol.gens.push_back(std::move(xpart));
    }
    return sol;
}

} // namespace

Subset preimage(const AbHom& h, const Subset& target) {
    if (target.ambient() != h.codomain()) throw input_error("preimage target ambient mismatch");
    const FinAbGroup& dom = h.domain();
    if (dom.is_finite()) {
        std::vector<Vec> hits;
        for (const auto& x : dom.elements())
            if (target.contains(h.apply(x))) hits.push_back(x);
        return Subset::of_elements(dom, std::move(hits));
    }
    if (!dom.invariant_factors().empty())
        throw capability_error("preimage over a mixed free/torsion domain is not supported");

    std::vector<std::pair<Vec, std::vector<Vec>>> pieces;
    if (target.is_explicit()) {
        for (const auto& t : target.elements()) {
            if (auto sol = solve_affine(h.matrix(), h.codomain(), t, {}))
                pieces.emplace_back(sol->base, sol->gens);
        }
    } else {
        if (auto sol = solve_affine(h.matrix(), h.codomain(), target.coset_base(), target.coset_lattice()))
            pieces.emplace_back(sol->base, sol->gens);
    }
    if (pieces.empty()) return Subset::empty(dom);
    if (pieces.size() > 1)
        throw capability_error("preimage is a union of cosets, which is not representable");
    return Subset::coset(dom, pieces[0].first, pieces[0].second);
}

Subset image(const AbHom& h, const Subset& source) {
    if (source.ambient() != h.domain()) throw input_error("image source ambient mismatch");
    const FinAbGroup& cod = h.codomain();
    if (source.is_explicit()) {
        std::vector<Vec> out;
        out.reserve(source.elements().size());
        for (const auto& x : source.elements()) out.push_back(h.apply(x));
        return Subset::of_elements(cod, std::move(out));
    }
    Vec base = h.apply(source.coset_base());
    std::vector<Vec> gen_images;
    for (const auto& g : source.coset_lattice()) gen_images.push_back(h.apply(g));
    if (cod.is_finite()) {
        const Subset sub = subgroup_generated(cod, gen_images);
        std::vector<Vec> out;
        out.reserve(sub.elements().size());
        for (const auto& s : sub.elements()) out.push_back(cod.add(base, s));
        return Subset::of_elements(cod, std::move(out));
    }
    if (!cod.invariant_factors().empty())
        throw capability_error("coset image into a mixed free/torsion codomain is not supported");
    return Subset::coset(cod, std::move(base), std::move(gen_images));
}

Subset intersect(const Subset& a, const Subset& b) {
    if (a.ambient() != b.ambient()) throw input_error("intersect: ambient group mismatch");
    if (!a.is_explicit() || !b.is_explicit())
        throw capability_error("intersect requires explicit finite subsets");
    std::vector<Vec> out;
    std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(),
                          b.elements().end(), std::back_inserter(out));
    return Subset::of_elements(a.ambient(), std::move(out));
}

bool contains(const Subset& a, const Vec& x) { return a.contains(x); }

AbHom Cokernel::projection_hom() const {
    return AbHom(FinAbGroup::free(proj.cols()), group, proj);
}

Cokernel cokernel(const Matrix& relations, int ambient_rank) {
    if (relations.rows() != ambient_rank) throw input_error("cokernel: relation rows must match ambient rank");
    const SmithForm f = smith_normal_form(relations);
    const Matrix uinv = unimodular_inverse(f.u);
    const int diag = std::min(relations.rows(), relations.cols());

    std::vector<int> free_rows, torsion_rows;
    std::vector<Int> factors;
    for (int i = 0; i < ambient_rank; ++i) {
        const Int s = i < diag ? f.s.at(i, i) : 0;
        if (s == 0) free_rows.push_back(i);
        else if (s >= 2) {
            torsion_rows.push_back(i);
            factors.push_back(s);
        }
    }

    Cokernel out;
    out.group = FinAbGroup(static_cast<Int>(free_rows.size()), factors);
    const int k = out.group.dim();
    out.proj = Matrix(k, ambient_rank);
    out.lift = Matrix(ambient_rank, k);
    std::vector<int> sel = free_rows;
    sel.insert(sel.end(), torsion_rows.begin(), torsion_rows.end());
    for (int c = 0; c < k; ++c) {
        for (int j = 0; j < ambient_rank; ++j) {
            out.proj.at(c, j) = f.u.at(sel[static_cast<std::size_t>(c)], j);
            out.lift.at(j, c) = uinv.at(j, sel[static_cast<std::size_t>(c)]);
        }
    }
    return out;
}

Quotient quotient(const FinAbGroup& g, const std::vector<Vec>& gens) {
    const int d = g.dim();
    std::vector<Vec> cols;
    const auto& facs = g.invariant_factors();
    for (std::size_t i = 0; i < facs.size(); ++i) {
        Vec rel(static_cast<std::size_t>(d), 0);
        rel[static_cast<std::size_t>(g.free_rank()) + i] = facs[i];
        cols.push_back(std::move(rel));
    }
    for (const auto& x : gens) {
        if (static_cast<int>(x.size()) != d) throw input_error("quotient generator dimension mismatch");
        if (!g.is_reduced(x)) throw input_error("quotient generator is not reduced");
        cols.push_back(x);
    }
    const Cokernel ck = cokernel(cols.empty() ? Matrix(d, 0) : Matrix::from_columns(cols), d);
    return {ck.group, AbHom(g, ck.group, ck.proj)};
}

} // namespace normcalc
