#ifndef PHX_TESTS_FIXTURES_HPP
#define PHX_TESTS_FIXTURES_HPP

#include "phx/expression.hpp"
#include "phx/polyhierarchy.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace phx::testing {

using Rng = std::mt19937_64;

/// C1 = {1,2}, C2 = {1,2,3} global; C3 = {1,2} rooted at [C1=1].
GeneratingPolyhierarchy make_f1();

struct FamilyOptions {
    int min_criteria = 2;
    int max_criteria = 4;
    int min_cardinality = 2;
    int max_cardinality = 3;
    double global_probability = 0.4;
    double union_root_probability = 0.0;
};

/// Random polyhierarchy with at least one dependent criterion. Roots are
/// completed positive collections over earlier criteria, or unions of two
/// of them.
GeneratingPolyhierarchy random_family(Rng& rng, const FamilyOptions& options = {});

/// Random valid simple collection; `complement_probability` is the chance
/// that a used criterion carries an excluded set instead of a branch.
SimpleCollection random_simple(Rng& rng, const GeneratingPolyhierarchy& gp, double use_probability = 0.5,
                               double complement_probability = 0.25);
Union random_union(Rng& rng, const GeneratingPolyhierarchy& gp, double complement_probability = 0.25);
BranchUnionCollection random_branch_unions(Rng& rng, const GeneratingPolyhierarchy& gp,
                                           double use_probability = 0.5);

Expression expr(const GeneratingPolyhierarchy& gp, const std::string& text);

} // namespace phx::testing

#endif
