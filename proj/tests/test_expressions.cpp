#include "fixtures.hpp"

#include "phx/error.hpp"
#include "phx/expressions.hpp"
#include "phx/oracle.hpp"
#include "phx/text.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace phx;
using phx::testing::expr;
using phx::testing::make_f1;

namespace {

constexpr CriterionId C1{1}, C2{2}, C3{3};

Attribute pos(CriterionId c, std::uint32_t b) { return {c, BranchId{b}, false}; }
Attribute neg(CriterionId c, std::uint32_t b) { return {c, BranchId{b}, true}; }

} // namespace

TEST(Validate, F1Examples) {
    const auto gp = make_f1();
    EXPECT_TRUE(validate(SimpleCollection({pos(C1, 1), pos(C3, 2)}), gp).ok());
    const auto missing = validate(SimpleCollection({pos(C3, 1)}), gp);
    EXPECT_TRUE(missing.has(FindingKind::MissingSupport)) << missing.to_string();
    EXPECT_TRUE(validate(SimpleCollection({pos(C1, 1), pos(C1, 2)}), gp).has(FindingKind::Exclusivity));
    EXPECT_FALSE(validate(SimpleCollection({pos(C1, 9)}), gp).ok());
    EXPECT_FALSE(validate(SimpleCollection({pos(CriterionId{7}, 1)}), gp).ok());
    EXPECT_TRUE(validate(Expression::empty(), gp).ok());
    EXPECT_TRUE(validate(Expression::universe(), gp).ok());
    EXPECT_THROW(require_valid(SimpleCollection({pos(C3, 1)}), gp), Error);
}

TEST(Validate, ComplementDoesNotSupportDependents) {
    const auto gp = make_f1();
    EXPECT_FALSE(validate(SimpleCollection({neg(C1, 2), pos(C3, 1)}), gp).ok());
    EXPECT_TRUE(validate(SimpleCollection({pos(C1, 1), neg(C3, 1)}), gp).ok());
}

TEST(Validate, BranchUnionsNeedSupport) {
    const auto gp = make_f1();
    EXPECT_TRUE(validate(BranchUnionCollection({{C1, {BranchId{1}}}, {C3, {BranchId{1}, BranchId{2}}}}), gp).ok());
    EXPECT_FALSE(validate(BranchUnionCollection({{C1, {BranchId{1}, BranchId{2}}}, {C3, {BranchId{1}}}}), gp).ok());
}

TEST(Null, Examples) {
    EXPECT_TRUE(is_null(SimpleCollection({pos(C1, 1), pos(C1, 2)})));
    EXPECT_TRUE(is_null(SimpleCollection({pos(C1, 1), neg(C1, 1)})));
    EXPECT_FALSE(is_null(SimpleCollection({pos(C1, 1), pos(C2, 2)})));
    const auto gp = make_f1();
    const SimpleCollection all_excluded({neg(C1, 1), neg(C1, 2)});
    EXPECT_FALSE(is_null(all_excluded));
    EXPECT_TRUE(is_null_closed(all_excluded, gp));
}

TEST(Canonicalize, Examples) {
    EXPECT_EQ(canonicalize(SimpleCollection({pos(C2, 2), pos(C1, 1)})), SimpleCollection({pos(C1, 1), pos(C2, 2)}));
    EXPECT_EQ(canonicalize(SimpleCollection({pos(C1, 1), neg(C1, 2)})), SimpleCollection({pos(C1, 1)}));
    const auto gp = make_f1();
    EXPECT_EQ(canonicalize(expr(gp, "[C1=1] | [C1=1 & C2=1]")), expr(gp, "[C1=1]"));
}

TEST(Reduce, Examples) {
    const Union absorbed({SimpleCollection({pos(C1, 1), pos(C2, 1)}), SimpleCollection({pos(C1, 1)})});
    EXPECT_EQ(reduce(absorbed), Union({SimpleCollection({pos(C1, 1)})}));
    const Union incomparable({SimpleCollection({pos(C1, 1)}), SimpleCollection({pos(C1, 2)})});
    EXPECT_EQ(reduce(incomparable), incomparable);
    EXPECT_EQ(reduce(Union{}), Union{});
}

TEST(ExpandBranchUnions, Examples) {
    const BranchUnionCollection buc({{C1, {BranchId{1}}}, {C2, {BranchId{1}, BranchId{2}}}});
    EXPECT_EQ(expand_branch_unions(buc), Union({SimpleCollection({pos(C1, 1), pos(C2, 1)}),
                                                SimpleCollection({pos(C1, 1), pos(C2, 2)})}));
    const BranchUnionCollection singletons({{C1, {BranchId{1}}}, {C2, {BranchId{3}}}});
    EXPECT_EQ(expand_branch_unions(singletons), Union({SimpleCollection({pos(C1, 1), pos(C2, 3)})}));

    const auto gp = make_f1();
    const BranchUnionCollection total({{C2, {BranchId{1}, BranchId{2}, BranchId{3}}}});
    EXPECT_TRUE(canonicalize_bu(total, gp).is_universe());
    EXPECT_EQ(expand_branch_unions(canonicalize_bu(total, gp)), Union({SimpleCollection{}}));
    EXPECT_THROW(expand_branch_unions(total, 2), Error);
}

TEST(ExpandBranchUnions, TotalUnionKeptWhenItSupportsADependent) {
    const auto gp = make_f1();
    const BranchUnionCollection buc({{C1, {BranchId{1}}}, {C3, {BranchId{1}, BranchId{2}}}});
    EXPECT_EQ(canonicalize_bu(buc, gp), BranchUnionCollection({{C1, {BranchId{1}}}}));
}

TEST(ExpandComplements, Examples) {
    const auto gp = make_f1();
    EXPECT_EQ(expand_complements(SimpleCollection({neg(C1, 1)}), gp), Union({SimpleCollection({pos(C1, 2)})}));
    EXPECT_EQ(expand_complements(SimpleCollection({neg(C2, 1), neg(C2, 2), neg(C2, 3)}), gp), Union{});
    const SimpleCollection plain({pos(C1, 1), pos(C2, 2)});
    EXPECT_EQ(expand_complements(plain, gp), Union({plain}));
}

TEST(Complete, AddsImpliedAttributes) {
    auto gp = make_f1();
    EXPECT_EQ(complete(SimpleCollection({pos(C3, 2)}), gp), SimpleCollection({pos(C1, 1), pos(C3, 2)}));
    try {
        complete(SimpleCollection({pos(C1, 2), pos(C3, 1)}), gp);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InconsistentAssignment);
        EXPECT_NE(std::string(e.what()).find("root(C3)"), std::string::npos) << e.what();
    }
    EXPECT_EQ(complete(SimpleCollection{}, gp), SimpleCollection{});
}

TEST(Complete, AmbiguousUnionRoot) {
    auto gp = make_f1();
    const auto c4 = gp.add_criterion("C4", expr(gp, "[C1=1] | [C2=1]"));
    gp.add_branch(c4, "1");
    EXPECT_THROW(complete(SimpleCollection({pos(c4, 1)}), gp), Error);
    EXPECT_EQ(complete(SimpleCollection({pos(C2, 1), pos(c4, 1)}), gp), SimpleCollection({pos(C2, 1), pos(c4, 1)}));
}

TEST(ExpressionsProperty, ValidateMatchesEnumeration) {
    phx::testing::Rng rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        phx::testing::FamilyOptions o;
        o.union_root_probability = 0.3;
        const auto gp = phx::testing::random_family(rng, o);
        const auto valid = oracle::enumerate_simple_collections(gp);
        // every positive collection with at most one branch per criterion
        std::vector<SimpleCollection> all{SimpleCollection{}};
        for (const auto& c : gp.criteria()) {
            const std::size_t n = all.size();
            for (std::size_t k = 0; k < n; ++k) {
                for (const auto& b : c.branches) all.push_back(all[k].with({c.id, b.id, false}));
            }
        }
        for (const auto& sc : all) {
            const bool listed = std::binary_search(valid.begin(), valid.end(), sc);
            EXPECT_EQ(validate(sc, gp).ok(), listed) << format(sc, gp);
        }
    }
}

TEST(ExpressionsProperty, ReduceAndExpansionPreserveExtension) {
    phx::testing::Rng rng(22);
    for (int trial = 0; trial < 40; ++trial) {
        const auto gp = phx::testing::random_family(rng);
        const auto open = oracle::SyntheticUniverse::build(gp, 1);
        const auto closed = oracle::SyntheticUniverse::build(gp, 0);
        for (int k = 0; k < 20; ++k) {
            const Union u = phx::testing::random_union(rng, gp);
            const Union r = reduce(u);
            EXPECT_EQ(oracle::extension(u, open), oracle::extension(r, open)) << format(u, gp);
            EXPECT_EQ(reduce(r), r);

            const auto buc = phx::testing::random_branch_unions(rng, gp);
            EXPECT_EQ(oracle::extension(buc, open), oracle::extension(expand_branch_unions(buc), open));
            EXPECT_EQ(oracle::extension(buc, closed),
                      oracle::extension(expand_branch_unions(canonicalize_bu(buc, gp)), closed));

            const auto sc = phx::testing::random_simple(rng, gp, 0.6, 0.5);
            EXPECT_EQ(oracle::extension(sc, closed), oracle::extension(expand_complements(sc, gp), closed));
            EXPECT_EQ(oracle::extension(sc, open), oracle::extension(canonicalize(sc), open));
        }
    }
}
