#include "fixtures.hpp"

#include "phx/batch.hpp"
#include "phx/error.hpp"

#include <gtest/gtest.h>

using namespace phx;

TEST(Batch, ParallelMatchesSerial) {
    phx::testing::Rng rng(81);
    for (int trial = 0; trial < 10; ++trial) {
        const auto gp = phx::testing::random_family(rng);
        std::vector<Expression> outers, inners;
        for (int k = 0; k < 300; ++k) {
            outers.emplace_back(phx::testing::random_union(rng, gp));
            inners.emplace_back(k % 2 == 0 ? Expression(phx::testing::random_simple(rng, gp))
                                           : Expression(phx::testing::random_branch_unions(rng, gp)));
        }
        const auto serial = includes_batch_serial(outers, inners, gp);
        EXPECT_EQ(includes_batch(outers, inners, gp), serial);
        EXPECT_EQ(includes_batch(outers, inners, gp, World::Closed), includes_batch_serial(outers, inners, gp, World::Closed));
        for (std::size_t k = 0; k < serial.size(); ++k) EXPECT_EQ(serial[k] != 0, includes(outers[k], inners[k], gp));
    }
}

TEST(Batch, ErrorsPropagate) {
    const auto gp = phx::testing::make_f1();
    const std::vector<Expression> outers{Expression::universe(), Expression::universe()};
    const std::vector<Expression> inners{Expression::universe(), SimpleCollection({{CriterionId{3}, BranchId{1}}})};
    EXPECT_THROW(includes_batch(outers, inners, gp), Error);
    EXPECT_THROW(includes_batch_serial(outers, inners, gp), Error);
    EXPECT_TRUE(includes_batch(std::span<const Expression>{}, std::span<const Expression>{}, gp).empty());
}
