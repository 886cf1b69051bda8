#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "normcalc/rootdata.hpp"

using namespace normcalc;

namespace {

Int det_laplace(const Matrix& m, std::vector<int> cols, int row) {
    const int n = m.rows();
    if (row == n) return 1;
    Int acc = 0;
    for (std::size_t idx = 0; idx < cols.size(); ++idx) {
        const Int entry = m.at(row, cols[idx]);
        if (entry == 0) continue;
        std::vector<int> rest = cols;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(idx));
        const Int sub = det_laplace(m, rest, row + 1);
        const Int term = entry * sub;
        acc += (idx % 2 == 0) ? term : -term;
    }
    return acc;
}

// cofactor-expansion determinant, independent of the Smith machinery
Int det_oracle(const Matrix& m) {
    std::vector<int> cols(static_cast<std::size_t>(m.cols()));
    std::iota(cols.begin(), cols.end(), 0);
    return det_laplace(m, cols, 0);
}

// brute-force diagram automorphism count by permutation enumeration
int count_automorphisms(const Matrix& cartan) {
    const int n = cartan.rows();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    int count = 0;
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                if (cartan.at(perm[i], perm[j]) != cartan.at(i, j)) ok = false;
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

} // namespace

TEST_CASE("cartan matrices") {
    CHECK(cartan_matrix(Kind::A, 2) == Matrix(2, 2, {2, -1, -1, 2}));

    const Matrix d4 = cartan_matrix(Kind::D, 4);
    const RootSystem rs4 = RootSystem::create(Kind::D, 4);
    CHECK(rs4.adjacent(2, 1));
    CHECK(rs4.adjacent(2, 3));
    CHECK(rs4.adjacent(2, 4));
    CHECK(!rs4.adjacent(1, 3));
    CHECK(!rs4.adjacent(3, 4));
    for (int i = 0; i < 4; ++i) CHECK(d4.at(i, i) == 2);

    const RootSystem e7 = RootSystem::create(Kind::E, 7);
    for (auto [a, b] : {std::pair{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 4}})
        CHECK(e7.adjacent(a, b));
    CHECK(!e7.adjacent(1, 2));
    CHECK(!e7.adjacent(2, 3));

    // symmetry and off-diagonal range
    for (Kind k : {Kind::A, Kind::D, Kind::E}) {
        const int rank = k == Kind::E ? 7 : 6;
        const Matrix c = cartan_matrix(k, rank);
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) {
                CHECK(c.at(i, j) == c.at(j, i));
                if (i != j) CHECK((c.at(i, j) == 0 || c.at(i, j) == -1));
            }
    }
}

TEST_CASE("unsupported types are rejected") {
    CHECK_THROWS_AS(parse_kind("B"), capability_error);
    CHECK_THROWS_AS(parse_kind("C"), capability_error);
    CHECK_THROWS_AS(parse_kind("F"), capability_error);
    CHECK_THROWS_AS(parse_kind("G"), capability_error);
    CHECK_THROWS_AS(parse_kind("H"), input_error);
    CHECK_THROWS_AS(cartan_matrix(Kind::E, 8), capability_error);
    CHECK_THROWS_AS(cartan_matrix(Kind::D, 2), input_error);
    CHECK_THROWS_AS(cartan_matrix(Kind::A, 0), input_error);
    CHECK(parse_kind("d") == Kind::D);
}

TEST_CASE("center order equals the Cartan determinant") {
    for (int n = 3; n <= 10; ++n) {
        const RootSystem a = RootSystem::create(Kind::A, n);
        CHECK(a.center().order() == n + 1);
        CHECK(a.center().order() == det_oracle(a.cartan()));

        const RootSystem d = RootSystem::create(Kind::D, n);
        CHECK(d.center().order() == 4);
        CHECK(d.center().order() == det_oracle(d.cartan()));
        if (n % 2 == 0) CHECK(d.center() == FinAbGroup(0, {2, 2}));
        else CHECK(d.center() == FinAbGroup::cyclic(4));
    }
    const RootSystem e6 = RootSystem::create(Kind::E, 6);
    CHECK(e6.center() == FinAbGroup::cyclic(3));
    CHECK(det_oracle(e6.cartan()) == 3);
    const RootSystem e7 = RootSystem::create(Kind::E, 7);
    CHECK(e7.center() == FinAbGroup::cyclic(2));
    CHECK(det_oracle(e7.cartan()) == 2);
}

TEST_CASE("E6 restriction pattern (g, 0, 2g, 0, g, 2g)") {
    const RootSystem rs = RootSystem::create(Kind::E, 6);
    const Vec g = rs.restriction(1);
    const Vec g2 = rs.center().scale(2, g);
    CHECK(!rs.center().is_zero(g));
    CHECK(g != g2);
    CHECK(rs.center().is_zero(rs.center().scale(3, g)));
    CHECK(rs.restriction(2) == rs.center().zero());
    CHECK(rs.restriction(3) == g2);
    CHECK(rs.restriction(4) == rs.center().zero());
    CHECK(rs.restriction(5) == g);
    CHECK(rs.restriction(6) == g2);
    CHECK(rs.element_name(g) == "g");
    CHECK(rs.element_name(g2) == "2g");
}

TEST_CASE("E7 restrictions nontrivial exactly at 2, 5, 7") {
    const RootSystem rs = RootSystem::create(Kind::E, 7);
    for (int v = 1; v <= 7; ++v) {
        const bool nontrivial = v == 2 || v == 5 || v == 7;
        CHECK(rs.center().is_zero(rs.restriction(v)) == !nontrivial);
    }
    CHECK(rs.element_name(rs.restriction(7)) == "chi");
}

TEST_CASE("D_n restrictions: alternating chain, fork classes") {
    for (int n = 3; n <= 10; ++n) {
        const RootSystem rs = RootSystem::create(Kind::D, n);
        const FinAbGroup& c = rs.center();
        const Vec chi = rs.restriction(1);
        const Vec chip = rs.restriction(n - 1);
        const Vec chim = rs.restriction(n);
        CHECK(c.element_order(chi) == 2);
        for (int v = 1; v <= n - 2; ++v) {
            if (v % 2 == 1) CHECK(rs.restriction(v) == chi);
            else CHECK(c.is_zero(rs.restriction(v)));
        }
        if (n % 2 == 0) {
            CHECK(c.add(chip, chim) == chi);
            CHECK(c.element_order(chip) == 2);
            CHECK(c.element_order(chim) == 2);
        } else {
            CHECK(c.scale(2, chip) == chi);
            CHECK(c.element_order(chip) == 4);
            CHECK(chim == c.scale(3, chip));
        }
        // the four named elements exhaust C*
        CHECK(rs.element_name(chi) == "chi");
        CHECK(rs.element_name(chip) == "chi+");
        CHECK(rs.element_name(chim) == "chi-");
        CHECK(rs.element_name(c.zero()) == "0");
    }
}

TEST_CASE("restrictions generate the center") {
    for (Kind k : {Kind::A, Kind::D}) {
        for (int n = 3; n <= 10; ++n) {
            const RootSystem rs = RootSystem::create(k, n);
            CHECK(subgroup_generated(rs.center(), rs.restrictions()).size() ==
                  static_cast<std::size_t>(rs.center().order()));
        }
    }
    for (int n : {6, 7}) {
        const RootSystem rs = RootSystem::create(Kind::E, n);
        CHECK(subgroup_generated(rs.center(), rs.restrictions()).size() ==
              static_cast<std::size_t>(rs.center().order()));
    }
}

TEST_CASE("diagram automorphism groups") {
    CHECK(diagram_automorphisms(Kind::E, 7).size() == 1);
    CHECK(diagram_automorphisms(Kind::E, 6).size() == 2);
    CHECK(diagram_automorphisms(Kind::A, 1).size() == 1);
    CHECK(diagram_automorphisms(Kind::A, 5).size() == 2);
    CHECK(diagram_automorphisms(Kind::D, 4).size() == 6);
    CHECK(diagram_automorphisms(Kind::D, 6).size() == 2);

    const auto d6 = diagram_automorphisms(Kind::D, 6);
    CHECK(d6[0].is_identity());
    CHECK(d6[1].apply(5) == 6);
    CHECK(d6[1].apply(6) == 5);
    CHECK(d6[1].apply(1) == 1);

    // oracle: enumerate all permutations preserving the Cartan matrix
    for (auto [k, n] : {std::pair{Kind::D, 4}, {Kind::D, 5}, {Kind::A, 4}, {Kind::E, 6}, {Kind::E, 7}})
        CHECK(static_cast<int>(diagram_automorphisms(k, n).size()) ==
              count_automorphisms(cartan_matrix(k, n)));
}

TEST_CASE("every diagram automorphism induces a center automorphism") {
    for (auto [k, n] : {std::pair{Kind::D, 4}, {Kind::D, 5}, {Kind::D, 6}, {Kind::E, 6},
                        {Kind::E, 7}, {Kind::A, 4}}) {
        const RootSystem rs = RootSystem::create(k, n);
        for (const auto& aut : diagram_automorphisms(k, n)) {
            const Matrix t = rs.induced_center_matrix(aut);
            for (int v = 1; v <= n; ++v)
                CHECK(rs.center().reduce(t.apply(rs.restriction(v))) == rs.restriction(aut.apply(v)));
        }
    }
}

TEST_CASE("non-automorphisms are rejected") {
    const RootSystem rs = RootSystem::create(Kind::E, 6);
    DiagramAut bad = DiagramAut::identity(6);
    std::swap(bad.images[0], bad.images[1]); // 1 <-> 2 does not preserve the diagram
    CHECK_THROWS_AS(rs.induced_center_matrix(bad), input_error);
}

TEST_CASE("center_characters wrapper") {
    const auto [center, restrictions] = center_characters(Kind::D, 5);
    CHECK(center == FinAbGroup::cyclic(4));
    CHECK(restrictions.size() == 5);
}

TEST_CASE("weight_class projects arbitrary weight vectors") {
    const RootSystem rs = RootSystem::create(Kind::E, 6);
    // a root lattice vector (a Cartan column) must die in C*
    CHECK(rs.center().is_zero(rs.weight_class(rs.cartan().column(0))));
    Vec e1(6, 0);
    e1[0] = 1;
    CHECK(rs.weight_class(e1) == rs.restriction(1));
}
