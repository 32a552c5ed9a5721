#include "fixtures.hpp"

#include "phx/algebra.hpp"
#include "phx/error.hpp"
#include "phx/oracle.hpp"
#include "phx/text.hpp"
#include "phx/universe.hpp"

#include <gtest/gtest.h>

using namespace phx;
using phx::testing::expr;
using phx::testing::make_f1;

namespace {

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::IoError;
}

struct F1World {
    GeneratingPolyhierarchy gp = make_f1();
    Universe u;

    F1World() {
        u.assign("o1", parse_assignment("C1=1,C3=2", gp), gp);
        u.assign("o2", parse_assignment("C1=2", gp), gp);
        u.assign("o3", SimpleCollection{}, gp);
    }
};

} // namespace

TEST(Universe, Assign) {
    F1World w;
    EXPECT_EQ(format(w.u.find_object("o1")->assignment, w.gp), "[C1=1 & C3=2]");
    const auto& completed = w.u.assign("o4", parse_assignment("C3=1", w.gp), w.gp, "note");
    EXPECT_EQ(format(completed.assignment, w.gp), "[C1=1 & C3=1]");
    EXPECT_EQ(completed.payload, "note");
    try {
        w.u.assign("o5", parse_assignment("C1=2,C3=1", w.gp), w.gp);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InconsistentAssignment);
        EXPECT_NE(std::string(e.what()).find("root(C3)"), std::string::npos);
    }
    EXPECT_EQ(code_of([&] { w.u.assign("o1", SimpleCollection{}, w.gp); }), ErrorCode::DuplicateObject);
    EXPECT_EQ(code_of([&] { w.u.assign("bad\tid", SimpleCollection{}, w.gp); }), ErrorCode::InvalidName);
    EXPECT_EQ(code_of([&] { w.u.assign("o6", *expr(w.gp, "[C1!={1}]").simple(), w.gp); }),
              ErrorCode::InconsistentAssignment);
    EXPECT_EQ(w.u.objects().size(), 4U);
}

TEST(Universe, Membership) {
    F1World w;
    EXPECT_TRUE(w.u.member_of("o1", expr(w.gp, "[C1=1]"), w.gp));
    EXPECT_TRUE(w.u.member_of("o1", expr(w.gp, "[C1!={2}]"), w.gp));
    EXPECT_FALSE(w.u.member_of("o3", expr(w.gp, "[C1=1]"), w.gp));
    EXPECT_FALSE(w.u.member_of("o3", expr(w.gp, "[C1!={2}]"), w.gp));
    EXPECT_TRUE(w.u.member_of("o1", expr(w.gp, "[C1 in {1} & C3 in {1,2}]"), w.gp));
    EXPECT_EQ(code_of([&] { w.u.member_of("nobody", Expression::universe(), w.gp); }), ErrorCode::UnknownObject);

    EXPECT_EQ(w.u.members(expr(w.gp, "[C1=1]"), w.gp), std::vector<std::string>{"o1"});
    EXPECT_EQ(w.u.members(Expression::universe(), w.gp), (std::vector<std::string>{"o1", "o2", "o3"}));
    EXPECT_TRUE(w.u.members(Expression::empty(), w.gp).empty());
}

TEST(Universe, CategoryRegistry) {
    F1World w;
    EXPECT_EQ(w.u.register_category("subshape-root", expr(w.gp, "[C1=1]"), w.gp).flag, CategoryFlag::Root);
    EXPECT_EQ(w.u.register_category("rounds", expr(w.gp, "[C1=2]"), w.gp).flag, CategoryFlag::Container);
    EXPECT_EQ(w.u.storage_class(expr(w.gp, "[C1=1 & C3=2]"), w.gp), CategoryFlag::Container);
    EXPECT_EQ(w.u.storage_class(expr(w.gp, "[C2=3]"), w.gp), std::nullopt);
    EXPECT_EQ(code_of([&] { w.u.register_category("rounds", expr(w.gp, "[C1=2]"), w.gp); }),
              ErrorCode::DuplicateName);
    EXPECT_EQ(code_of([&] { w.u.register_category("loose", expr(w.gp, "[C2=3]"), w.gp); }),
              ErrorCode::StorageRuleViolation);
    EXPECT_EQ(code_of([&] { w.u.register_category("x", expr(w.gp, "[C1=2]"), w.gp, CategoryFlag::Root); }),
              ErrorCode::StorageRuleViolation);
    EXPECT_TRUE(w.u.validate(w.gp).ok());
}

TEST(Universe, CompactnessStats) {
    const auto gp = make_f1();
    EXPECT_EQ(Universe{}.compactness_stats(gp).stored_expressions, 1U); // root(C3)
    EXPECT_EQ(Universe{}.compactness_stats(GeneratingPolyhierarchy{}).stored_expressions, 0U);

    Universe u;
    const char* attrs[] = {"C1=1,C3=2", "C1=2", "", "C2=3", "C1=1,C2=1,C3=1", "C1=2,C2=2", "C3=1", "C2=1", "C1=1", "C1=2"};
    for (int i = 0; i < 10; ++i) u.assign("o" + std::to_string(i), parse_assignment(attrs[i], gp), gp);
    u.register_category("root-c3", expr(gp, "[C1=1]"), gp);
    u.register_category("c2-3", expr(gp, "[C2=3]"), gp);
    const auto s = u.compactness_stats(gp);
    EXPECT_EQ(s.criteria_count, 3U);
    EXPECT_EQ(s.object_count, 10U);
    EXPECT_LE(s.stored_expressions, 13U);
}

TEST(UniverseProperty, MembershipRespectsAlgebra) {
    phx::testing::Rng rng(51);
    for (int trial = 0; trial < 25; ++trial) {
        const auto gp = phx::testing::random_family(rng);
        const auto closed = oracle::SyntheticUniverse::build(gp, 0);
        Universe u;
        for (std::size_t k = 0; k < closed.objects.size(); ++k) {
            std::vector<Attribute> attrs;
            for (std::size_t c = 0; c < closed.objects[k].size(); ++c) {
                if (closed.objects[k][c] != 0) {
                    attrs.push_back({CriterionId{static_cast<std::uint32_t>(c + 1)}, BranchId{closed.objects[k][c]}});
                }
            }
            u.assign("o" + std::to_string(k), SimpleCollection(attrs), gp);
        }
        for (int n = 0; n < 15; ++n) {
            const Expression a = phx::testing::random_union(rng, gp);
            const Expression b = n % 2 == 0 ? Expression(phx::testing::random_branch_unions(rng, gp))
                                            : Expression(phx::testing::random_simple(rng, gp));
            const auto both = unite(a, b, gp);
            const auto common = intersect(a, b, gp);
            const auto diff = complement(a, b, gp, ComplementMode::Expanded);
            const auto sym = complement(a, b, gp, ComplementMode::Symbolic);
            for (const auto& [id, rec] : u.objects()) {
                const bool ma = u.member_of(id, a, gp);
                const bool mb = u.member_of(id, b, gp);
                EXPECT_EQ(u.member_of(id, both, gp), ma || mb);
                EXPECT_EQ(u.member_of(id, common, gp), ma && mb);
                EXPECT_EQ(u.member_of(id, diff, gp), ma && !mb);
                EXPECT_EQ(u.member_of(id, sym, gp), ma && !mb);
            }
        }
    }
}
