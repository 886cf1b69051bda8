#include "normcalc/rootdata.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace normcalc {

Kind parse_kind(const std::string& name) {
    std::string up = name;
    std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) { return std::toupper(c); });
    if (up == "A") return Kind::A;
    if (up == "D") return Kind::D;
    if (up == "E") return Kind::E;
    if (up == "B" || up == "C" || up == "F" || up == "G")
        throw capability_error("type " + up +
                               " has multiple edges in its Dynkin diagram; only the simply-laced "
                               "types A, D, E6, E7 are supported");
    throw input_error("unknown root system type '" + name + "'");
}

std::string kind_name(Kind kind) {
    switch (kind) {
        case Kind::A: return "A";
        case Kind::D: return "D";
        case Kind::E: return "E";
    }
    return "?";
}

DiagramAut DiagramAut::identity(int rank) {
    DiagramAut a;
    a.images.resize(static_cast<std::size_t>(rank));
    for (int v = 1; v <= rank; ++v) a.images[v - 1] = v;
    return a;
}

int DiagramAut::apply(int vertex) const {
    if (vertex < 1 || vertex > static_cast<int>(images.size())) throw input_error("vertex out of range");
    return images[static_cast<std::size_t>(vertex - 1)];
}

int DiagramAut::order() const {
    const int n = static_cast<int>(images.size());
    std::vector<int> cur(images.begin(), images.end());
    int ord = 1;
    auto is_id = [&](const std::vector<int>& p) {
        for (int v = 1; v <= n; ++v)
            if (p[v - 1] != v) return false;
        return true;
    };
    while (!is_id(cur)) {
        std::vector<int> next(static_cast<std::size_t>(n));
        for (int v = 1; v <= n; ++v) next[v - 1] = images[static_cast<std::size_t>(cur[v - 1] - 1)];
        cur = next;
        ++ord;
        if (ord > n + 1) throw input_error("not a permutation");
    }
    return ord;
}

bool DiagramAut::is_identity() const { return order() == 1; }

namespace {

std::vector<std::pair<int, int>> diagram_edges(Kind kind, int rank) {
    std::vector<std::pair<int, int>> edges;
    switch (kind) {
        case Kind::A:
            for (int i = 1; i < rank; ++i) edges.emplace_back(i, i + 1);
            break;
        case Kind::D:
            for (int i = 1; i + 1 <= rank - 2; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(rank - 2, rank - 1);
            edges.emplace_back(rank - 2, rank);
            break;
        case Kind::E:
            for (int i : {1, 3, 4, 5}) edges.emplace_back(i, i == 1 ? 3 : i + 1);
            if (rank == 7) edges.emplace_back(6, 7);
            edges.emplace_back(2, 4);
            break;
    }
    return edges;
}

void check_rank(Kind kind, int rank) {
    switch (kind) {
        case Kind::A:
            if (rank < 1) throw input_error("type A requires rank >= 1");
            break;
        case Kind::D:
            if (rank < 3) throw input_error("type D requires rank >= 3");
            break;
        case Kind::E:
            if (rank != 6 && rank != 7)
                throw capability_error("only E6 and E7 are supported among the exceptional types");
            break;
    }
    if (rank > 24) throw input_error("rank > 24 is outside the intended range of this tool");
}

} // namespace

Matrix cartan_matrix(Kind kind, int rank) {
    check_rank(kind, rank);
    Matrix m(rank, rank);
    for (int i = 0; i < rank; ++i) m.at(i, i) = 2;
    for (const auto& [a, b] : diagram_edges(kind, rank)) {
        m.at(a - 1, b - 1) = -1;
        m.at(b - 1, a - 1) = -1;
    }
    return m;
}

std::vector<DiagramAut> diagram_automorphisms(Kind kind, int rank) {
    check_rank(kind, rank);
    std::vector<DiagramAut> out;
    out.push_back(DiagramAut::identity(rank));
    auto swap2 = [&](std::initializer_list<std::pair<int, int>> swaps) {
        DiagramAut a = DiagramAut::identity(rank);
        for (auto [x, y] : swaps) {
            a.images[x - 1] = y;
            a.images[y - 1] = x;
        }
        return a;
    };
    switch (kind) {
        case Kind::A: {
            if (rank >= 2) {
                DiagramAut rev = DiagramAut::identity(rank);
                for (int v = 1; v <= rank; ++v) rev.images[v - 1] = rank + 1 - v;
                out.push_back(rev);
            }
            break;
        }
        case Kind::D: {
            if (rank == 4) {
                // S3 on the three outer vertices {1, 3, 4}
                out.pop_back();
                const int outer[3] = {1, 3, 4};
                int perm[3] = {0, 1, 2};
                std::vector<std::array<int, 3>> perms;
                std::sort(std::begin(perm), std::end(perm));
                do {
                    perms.push_back({perm[0], perm[1], perm[2]});
                } while (std::next_permutation(std::begin(perm), std::end(perm)));
                for (const auto& p : perms) {
                    DiagramAut a = DiagramAut::identity(rank);
                    for (int i = 0; i < 3; ++i) a.images[outer[i] - 1] = outer[p[i]];
                    out.push_back(a);
                }
            } else {
                out.push_back(swap2({{rank - 1, rank}}));
            }
            break;
        }
        case Kind::E: {
            if (rank == 6) out.push_back(swap2({{1, 6}, {3, 5}}));
            break;
        }
    }
    return out;
}

RootSystem RootSystem::create(Kind kind, int rank) {
    RootSystem rs;
    rs.kind_ = kind;
    rs.rank_ = rank;
    rs.cartan_ = cartan_matrix(kind, rank);
    const Cokernel ck = cokernel(rs.cartan_, rank);
    rs.center_ = ck.group;
    rs.proj_ = ck.proj;
    rs.lift_ = ck.lift;
    rs.restrictions_.reserve(static_cast<std::size_t>(rank));
    for (int v = 0; v < rank; ++v) rs.restrictions_.push_back(rs.center_.reduce(rs.proj_.column(v)));
    return rs;
}

const Vec& RootSystem::restriction(int vertex) const {
    if (vertex < 1 || vertex > rank_) throw input_error("vertex out of range");
    return restrictions_[static_cast<std::size_t>(vertex - 1)];
}

Vec RootSystem::weight_class(const Vec& weight_coords) const {
    return center_.reduce(proj_.apply(weight_coords));
}

Matrix RootSystem::induced_center_matrix(const DiagramAut& aut) const {
    if (static_cast<int>(aut.images.size()) != rank_) throw input_error("automorphism rank mismatch");
    for (int i = 1; i <= rank_; ++i)
        for (int j = 1; j <= rank_; ++j)
            if (cartan_.at(aut.apply(i) - 1, aut.apply(j) - 1) != cartan_.at(i - 1, j - 1))
                throw input_error("permutation does not preserve the Cartan matrix");
    Matrix perm(rank_, rank_);
    for (int v = 1; v <= rank_; ++v) perm.at(aut.apply(v) - 1, v - 1) = 1;
    Matrix t = proj_.times(perm).times(lift_);
    // reduce entries into canonical torsion coordinates
    for (int j = 0; j < t.cols(); ++j) {
        const Vec col = center_.reduce(t.column(j));
        for (int i = 0; i < t.rows(); ++i) t.at(i, j) = col[i];
    }
    // the induced map must permute the restriction classes
    for (int v = 1; v <= rank_; ++v) {
        if (center_.reduce(t.apply(restriction(v))) != restriction(aut.apply(v)))
            throw input_error("induced center action is inconsistent with the restriction map");
    }
    return t;
}

bool RootSystem::adjacent(int i, int j) const {
    if (i < 1 || i > rank_ || j < 1 || j > rank_) throw input_error("vertex out of range");
    return i != j && cartan_.at(i - 1, j - 1) != 0;
}

std::string RootSystem::element_name(const Vec& x) const {
    const Vec r = center_.reduce(x);
    if (center_.is_zero(r)) return "0";
    if (kind_ == Kind::D) {
        if (r == restriction(1)) return "chi";
        if (r == restriction(rank_ - 1)) return "chi+";
        if (r == restriction(rank_)) return "chi-";
    } else if (kind_ == Kind::E && rank_ == 6) {
        if (r == restriction(1)) return "g";
        if (r == center_.scale(2, restriction(1))) return "2g";
    } else if (kind_ == Kind::E && rank_ == 7) {
        if (r == restriction(7)) return "chi";
    }
    return vec_display(r);
}

std::pair<FinAbGroup, std::vector<Vec>> center_characters(Kind kind, int rank) {
    const RootSystem rs = RootSystem::create(kind, rank);
    return {rs.center(), rs.restrictions()};
}

} // namespace normcalc
