#include "fixtures.hpp"

#include "phx/algebra.hpp"
#include "phx/error.hpp"
#include "phx/oracle.hpp"
#include "phx/text.hpp"

#include <gtest/gtest.h>

using namespace phx;
using namespace phx::oracle;
using phx::testing::expr;
using phx::testing::make_f1;

TEST(Oracle, EnumerationCounts) {
    const auto gp = make_f1();
    const auto a = enumerate_simple_collections(gp, kDefaultNodeLimit, Order::SubHierarchy);
    const auto b = enumerate_simple_collections(gp, kDefaultNodeLimit, Order::Product);
    EXPECT_EQ(a.size(), 20U);
    EXPECT_EQ(a, b);
    EXPECT_EQ(enumerate_simple_collections(GeneratingPolyhierarchy{}), std::vector<SimpleCollection>{SimpleCollection{}});

    GeneratingPolyhierarchy one;
    const auto c = one.add_criterion("C1");
    one.add_branch(c, "1");
    one.add_branch(c, "2");
    EXPECT_EQ(enumerate_simple_collections(one).size(), 3U);
    const auto star = materialize_dag(one);
    EXPECT_EQ(star.edges.size(), 2U);
    EXPECT_THROW(enumerate_simple_collections(gp, 10), Error);
}

TEST(Oracle, DagDegrees) {
    const auto gp = make_f1();
    const auto dag = materialize_dag(gp);
    const auto top = dag.find(SimpleCollection{});
    ASSERT_TRUE(top.has_value());
    EXPECT_EQ(dag.out_degree(*top), 5U);
    EXPECT_EQ(dag.in_degree(*top), 0U);
    for (std::size_t n = 0; n < dag.nodes.size(); ++n) {
        EXPECT_EQ(dag.in_degree(n), leaf_criteria(dag.nodes[n], gp).size()) << format(dag.nodes[n], gp);
    }
}

TEST(Oracle, Extensions) {
    const auto gp = make_f1();
    const auto closed = SyntheticUniverse::build(gp, 0);
    const auto open = SyntheticUniverse::build(gp, 1);
    // C1=1: 3 x 2 choices, C1=2: 3
    EXPECT_EQ(closed.objects.size(), 9U);
    EXPECT_EQ(extension(Expression::universe(), closed).count(), 9U);
    EXPECT_EQ(extension(expr(gp, "[C1=1]"), closed).count(), 6U);
    for (std::size_t k = 0; k < closed.objects.size(); ++k) {
        EXPECT_EQ(extension(expr(gp, "[C1=1]"), closed).test(k), closed.objects[k][0] == 1);
    }
    const auto excl = expr(gp, "[C1!={1,2}]");
    EXPECT_TRUE(extension(excl, closed).none());
    EXPECT_FALSE(extension(excl, open).none());
}

TEST(Oracle, ExtensionDistributes) {
    phx::testing::Rng rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        const auto gp = phx::testing::random_family(rng);
        const auto open = SyntheticUniverse::build(gp, 1);
        for (int k = 0; k < 20; ++k) {
            const Union a = phx::testing::random_union(rng, gp);
            const Union b = phx::testing::random_union(rng, gp);
            std::vector<SimpleCollection> both(a.components().begin(), a.components().end());
            both.insert(both.end(), b.components().begin(), b.components().end());
            EXPECT_EQ(extension(Union(both), open), extension(a, open) | extension(b, open));
        }
    }
}

TEST(Oracle, CheckEquivalence) {
    auto gp = make_f1();
    const auto x = expr(gp, "[C1=1] | [C2!={2}]");
    EXPECT_TRUE(check_equivalence(gp, Operation::Intersect, x, Expression::universe()).agree);
    EXPECT_TRUE(check_equivalence(gp, Operation::Includes, expr(gp, "[C1=1]"), expr(gp, "[C1=1 & C3=2]")).agree);
    const auto sym = check_equivalence(gp, Operation::ComplementSymbolic, Expression::universe(), expr(gp, "[C1=1]"));
    gp.add_branch(CriterionId{1}, "3");
    EXPECT_TRUE(sym.agree);
    EXPECT_TRUE(check_equivalence(gp, Operation::ComplementSymbolic, Expression::universe(), expr(gp, "[C1=1]")).agree);
}

TEST(Oracle, SecondPhantomChangesNothing) {
    phx::testing::Rng rng(62);
    for (int trial = 0; trial < 20; ++trial) {
        const auto gp = phx::testing::random_family(rng);
        const Checker one(gp, 1);
        const Checker two(gp, 2);
        for (int k = 0; k < 20; ++k) {
            const Expression a = phx::testing::random_union(rng, gp, 0.5);
            const Expression b = phx::testing::random_simple(rng, gp, 0.5, 0.5);
            for (Operation op : {Operation::Includes, Operation::Equals, Operation::IsEmpty}) {
                EXPECT_EQ(one.check(op, a, b).agree, two.check(op, a, b).agree);
                // the verdict of the symbolic side is the same in both universes
                const auto ea1 = extension(a, one.open());
                const auto eb1 = extension(b, one.open());
                const auto ea2 = extension(a, two.open());
                const auto eb2 = extension(b, two.open());
                EXPECT_EQ(eb1.subset_of(ea1), eb2.subset_of(ea2));
                EXPECT_EQ(ea1.none(), ea2.none());
            }
        }
    }
}

TEST(Oracle, BranchUnionEnumeration) {
    const auto gp = make_f1();
    const auto all = enumerate_branch_union_collections(gp);
    for (const auto& b : all) EXPECT_TRUE(validate(b, gp).ok()) << format(b, gp);
    // C3 (none|3 subsets) only under C1 in {1}; C1 otherwise none, {2} or {1,2}; C2 none|7 subsets
    EXPECT_EQ(all.size(), 3U * 8U + 8U * 4U);
    const auto closed = SyntheticUniverse::build(gp, 0);
    const auto dag = materialize_bu_dag(gp, closed);
    const auto top = dag.find(extension(Expression::universe(), closed));
    ASSERT_TRUE(top.has_value());
    for (std::size_t c : dag.children[*top]) EXPECT_TRUE(dag.nodes[c].subset_of(dag.nodes[*top]));
}
