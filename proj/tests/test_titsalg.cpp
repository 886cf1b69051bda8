#include <doctest.h>

#include "normcalc/titsalg.hpp"

using namespace normcalc;

namespace {

SplitnessPattern pattern(const BrauerContext& ctx, std::initializer_list<const char*> split) {
    std::vector<bool> bits(static_cast<std::size_t>(ctx.generator_count()), false);
    for (const char* name : split) bits[static_cast<std::size_t>(ctx.generator_index(name))] = true;
    return SplitnessPattern(bits);
}

} // namespace

TEST_CASE("tits table fixtures from the three diagrams") {
    const TitsAlgebraTable e7 = tits_table(Kind::E, 7);
    CHECK(e7.context().element_name(e7.assignment(7)) == "[A]");
    CHECK(e7.context().element_name(e7.assignment(2)) == "[A]");
    CHECK(e7.context().element_name(e7.assignment(5)) == "[A]");
    CHECK(e7.context().element_name(e7.assignment(1)) == "k");

    const TitsAlgebraTable e6 = tits_table(Kind::E, 6);
    CHECK(e6.context().element_name(e6.assignment(4)) == "k");
    CHECK(e6.context().element_name(e6.assignment(2)) == "k");
    CHECK(e6.context().element_name(e6.assignment(1)) == "[A]");
    CHECK(e6.context().element_name(e6.assignment(3)) == "[A]^2");
    CHECK(e6.context().element_name(e6.assignment(6)) == "[A]^2");

    const TitsAlgebraTable d6 = tits_table(Kind::D, 6);
    CHECK(d6.context().group().is_zero(d6.assignment(2)));
    CHECK(d6.context().element_name(d6.assignment(1)) == "[A]");
    CHECK(d6.context().element_name(d6.assignment(5)) == "[C+]");
    CHECK(d6.context().element_name(d6.assignment(6)) == "[C-]");
}

TEST_CASE("label is k exactly where the restriction is trivial") {
    for (auto [k, n] : {std::pair{Kind::D, 3}, {Kind::D, 4}, {Kind::D, 5}, {Kind::D, 6},
                        {Kind::D, 7}, {Kind::D, 8}, {Kind::D, 9}, {Kind::D, 10},
                        {Kind::E, 6}, {Kind::E, 7}}) {
        const TitsAlgebraTable table = tits_table(k, n);
        const RootSystem& rs = table.root_system();
        for (int v = 1; v <= n; ++v)
            CHECK(rs.center().is_zero(rs.restriction(v)) ==
                  table.context().group().is_zero(table.assignment(v)));
    }
}

TEST_CASE("beta is additive on all pairs of C*") {
    for (auto [k, n] : {std::pair{Kind::D, 5}, {Kind::D, 6}, {Kind::E, 6}, {Kind::E, 7}}) {
        const TitsAlgebraTable table = tits_table(k, n);
        const FinAbGroup& c = table.root_system().center();
        const FinAbGroup& br = table.context().group();
        for (const auto& x : c.elements())
            for (const auto& y : c.elements())
                CHECK(table.beta(c.add(x, y)) == br.add(table.beta(x), table.beta(y)));
    }
}

TEST_CASE("exponent consistency: order of the label divides the order of res") {
    for (auto [k, n] : {std::pair{Kind::D, 5}, {Kind::D, 6}, {Kind::D, 7}, {Kind::E, 6},
                        {Kind::E, 7}}) {
        const TitsAlgebraTable table = tits_table(k, n);
        const RootSystem& rs = table.root_system();
        for (int v = 1; v <= n; ++v) {
            const Int res_ord = rs.center().element_order(rs.restriction(v));
            const Int cls_ord = table.context().group().element_order(table.assignment(v));
            CHECK(res_ord % cls_ord == 0);
        }
    }
}

TEST_CASE("D_n Brauer context presentation") {
    // odd n: <A, C+, C- | A = 2C+, C- = 3C+, 4C+ = 0> = Z/4
    const TitsAlgebraTable d5 = tits_table(Kind::D, 5);
    CHECK(d5.context().group() == FinAbGroup::cyclic(4));
    const FinAbGroup& g5 = d5.context().group();
    CHECK(g5.scale(2, d5.context().generator_class(d5.context().generator_index("C+"))) ==
          d5.context().generator_class(d5.context().generator_index("A")));

    // even n: <A, C+, C- | A = C+ + C-, exponent 2> = Z/2 x Z/2
    const TitsAlgebraTable d6 = tits_table(Kind::D, 6);
    CHECK(d6.context().group() == FinAbGroup(0, {2, 2}));
    const auto& c6 = d6.context();
    CHECK(c6.group().add(c6.generator_class(c6.generator_index("C+")),
                         c6.generator_class(c6.generator_index("C-"))) ==
          c6.generator_class(c6.generator_index("A")));

    CHECK(tits_table(Kind::E, 6).context().group() == FinAbGroup::cyclic(3));
    CHECK(tits_table(Kind::E, 7).context().group() == FinAbGroup::cyclic(2));
}

TEST_CASE("splitness pattern consistency") {
    const TitsAlgebraTable even_table = tits_table(Kind::D, 6);
    const BrauerContext& even = even_table.context();
    CHECK(pattern_consistent(even, pattern(even, {})));
    CHECK(pattern_consistent(even, pattern(even, {"A"})));
    CHECK(pattern_consistent(even, pattern(even, {"C+"})));
    CHECK(pattern_consistent(even, pattern(even, {"C-"})));
    CHECK(pattern_consistent(even, pattern(even, {"A", "C+", "C-"})));
    CHECK(!pattern_consistent(even, pattern(even, {"C+", "C-"}))); // forces A split
    CHECK(!pattern_consistent(even, pattern(even, {"A", "C+"})));  // forces C- split

    const TitsAlgebraTable odd_table = tits_table(Kind::D, 5);
    const BrauerContext& odd = odd_table.context();
    CHECK(pattern_consistent(odd, pattern(odd, {})));
    CHECK(pattern_consistent(odd, pattern(odd, {"A"})));
    CHECK(!pattern_consistent(odd, pattern(odd, {"C+"}))); // C+ generates everything
    CHECK(pattern_consistent(odd, pattern(odd, {"A", "C+", "C-"})));
}

TEST_CASE("beta_eval fixtures") {
    const TitsAlgebraTable e6 = tits_table(Kind::E, 6);
    const RootSystem& rs6 = e6.root_system();
    const Subset xg = Subset::of_elements(rs6.center(), {rs6.restriction(1)});
    CHECK(!beta_eval(xg, e6, pattern(e6.context(), {})));     // A nonsplit blocks
    CHECK(beta_eval(xg, e6, pattern(e6.context(), {"A"})));   // everything dies

    const TitsAlgebraTable e7 = tits_table(Kind::E, 7);
    const RootSystem& rs7 = e7.root_system();
    const Subset xchi = Subset::of_elements(rs7.center(), {rs7.restriction(7)});
    CHECK(beta_eval(xchi, e7, pattern(e7.context(), {"A"})));
    CHECK(!beta_eval(xchi, e7, pattern(e7.context(), {})));

    CHECK(!beta_eval(Subset::empty(rs7.center()), e7, pattern(e7.context(), {"A"})));

    // 0 is always in the split subgroup
    const Subset zero = Subset::of_elements(rs7.center(), {rs7.center().zero()});
    CHECK(beta_eval(zero, e7, pattern(e7.context(), {})));

    // mismatched ambient
    CHECK_THROWS_AS(beta_eval(Subset::of_elements(rs6.center(), {rs6.center().zero()}), e7,
                              pattern(e7.context(), {})),
                    input_error);
}

TEST_CASE("splitting every generator makes beta_eval equivalent to nonemptiness") {
    for (auto [k, n] : {std::pair{Kind::D, 5}, {Kind::D, 6}, {Kind::E, 6}, {Kind::E, 7}}) {
        const TitsAlgebraTable table = tits_table(k, n);
        std::vector<bool> all(static_cast<std::size_t>(table.context().generator_count()), true);
        const SplitnessPattern split_all(all);
        const FinAbGroup& c = table.root_system().center();
        CHECK(!beta_eval(Subset::empty(c), table, split_all));
        for (const auto& x : c.elements())
            CHECK(beta_eval(Subset::of_elements(c, {x}), table, split_all));
    }
}

TEST_CASE("assignment must factor through the restriction map") {
    RootSystem rs = RootSystem::create(Kind::E, 7);
    BrauerContext ctx({"A"}, {2});
    // vertex 1 has trivial restriction but a nonsplit label
    std::vector<Vec> bad{{1}, {1}, {0}, {0}, {1}, {0}, {1}};
    CHECK_THROWS_AS(TitsAlgebraTable(rs, ctx, bad), input_error);
    // vertices 2 and 5 share a restriction class but get different labels
    std::vector<Vec> bad2{{0}, {1}, {0}, {0}, {0}, {0}, {1}};
    CHECK_THROWS_AS(TitsAlgebraTable(rs, ctx, bad2), input_error);
}

TEST_CASE("type A has no Tits table") {
    CHECK_THROWS_AS(tits_table(Kind::A, 4), capability_error);
}

TEST_CASE("extra relations rebuild the presented group") {
    const TitsAlgebraTable d6 = tits_table(Kind::D, 6);
    const BrauerContext& base = d6.context();
    std::vector<Vec> rels = base.relations();
    rels.push_back({0, 1, -1}); // force [C+] = [C-]
    const BrauerContext merged(base.names(), base.exponents(), rels);
    CHECK(merged.group() == FinAbGroup(0, {2}));
    const TitsAlgebraTable table2 = d6.with_context(merged);
    CHECK(table2.assignment(5) == table2.assignment(6));
    // A = C+ + C- = 2C+ = 0 in the merged context
    CHECK(merged.group().is_zero(table2.assignment(1)));
}
