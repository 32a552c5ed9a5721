#ifndef PHX_ALGEBRA_HPP
#define PHX_ALGEBRA_HPP

#include "phx/expression.hpp"
#include "phx/expressions.hpp"
#include "phx/polyhierarchy.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace phx {

/// Truth regime. Open: branch lists are never exhaustive, results survive
/// add_branch/add_criterion. Closed: the registered branches are all there is.
enum class World { Open, Closed };

/// How negated positive attributes are written by complement().
enum class ComplementMode {
    Symbolic, ///< as complemented attributes; invariant under add_branch
    Expanded  ///< as the other registered branches; a closed-world snapshot
};

struct Limits {
    std::size_t expansion = kDefaultExpansionLimit;
    std::size_t leaf_pool = 10'000;
};

/// inner ⊆ outer. Throws ValidationError.
bool includes(const Expression& outer, const Expression& inner, const GeneratingPolyhierarchy& gp,
              World world = World::Open, const Limits& limits = {});
bool equals(const Expression& a, const Expression& b, const GeneratingPolyhierarchy& gp,
            World world = World::Open, const Limits& limits = {});

/// a ∪ b, reduced. Branch-union collections are expanded first.
Expression unite(const Expression& a, const Expression& b, const GeneratingPolyhierarchy& gp,
                 const Limits& limits = {});
/// a ∩ b. Two branch-union collections intersect per criterion.
Expression intersect(const Expression& a, const Expression& b, const GeneratingPolyhierarchy& gp,
                     const Limits& limits = {});
/// a \ b.
Expression complement(const Expression& a, const Expression& b, const GeneratingPolyhierarchy& gp,
                      ComplementMode mode = ComplementMode::Symbolic, const Limits& limits = {});

bool is_empty(const Expression& e, const GeneratingPolyhierarchy& gp, World world = World::Open,
              const Limits& limits = {});

/// Criteria of `sc` no other criterion of `sc` depends on.
std::vector<CriterionId> leaf_criteria(const SimpleCollection& sc, const GeneratingPolyhierarchy& gp);
/// Unused criteria whose root includes `sc`.
std::vector<CriterionId> free_criteria(const SimpleCollection& sc, const GeneratingPolyhierarchy& gp);

/// Each valid collection obtained by removing one criterion. Throws
/// EmptyCollection for the universe.
std::vector<SimpleCollection> direct_parents(const SimpleCollection& sc, const GeneratingPolyhierarchy& gp);
/// One child per (free criterion, branch).
std::vector<SimpleCollection> direct_children(const SimpleCollection& sc, const GeneratingPolyhierarchy& gp);

struct HullResult {
    Expression expression; ///< intersection of the roots of the criteria used
};

HullResult hull(const BranchUnionCollection& buc, const GeneratingPolyhierarchy& gp);

/// Attributes (c, j), c used and j outside its union, whose addition keeps
/// the collection inside its hull.
std::vector<Attribute> hull_compatible_attributes(const BranchUnionCollection& buc,
                                                  const GeneratingPolyhierarchy& gp);

/// Covering children in the closed-world lattice of branch-union
/// collections: one branch removed from a union of cardinality ≥ 2, or a
/// free criterion added with all branches but one.
std::vector<BranchUnionCollection> direct_children_bu(const BranchUnionCollection& buc,
                                                      const GeneratingPolyhierarchy& gp);
/// One parent per hull-compatible attribute, total unions dropped.
std::vector<BranchUnionCollection> direct_parents_bu(const BranchUnionCollection& buc,
                                                     const GeneratingPolyhierarchy& gp);

/// Simple collections without free criteria, positive only. Throws
/// UnboundedLeafPool past `limit`.
std::vector<SimpleCollection> leaf_categories(const GeneratingPolyhierarchy& gp, std::size_t limit = 10'000);

/// e ∪ G for every leaf category G outside e.
std::vector<Expression> direct_parents_composite(const Expression& e, const GeneratingPolyhierarchy& gp,
                                                 const Limits& limits = {});
/// e \ F for every leaf category F inside e, when non-empty.
std::vector<Expression> direct_children_composite(const Expression& e, const GeneratingPolyhierarchy& gp,
                                                  const Limits& limits = {});

struct QuerySummary {
    bool empty = false;
    std::optional<std::vector<CriterionId>> leaf; // simple collections only
    std::optional<std::vector<CriterionId>> free;
    std::size_t parents = 0;
    std::size_t children = 0;
};

QuerySummary classify_query(const Expression& e, const GeneratingPolyhierarchy& gp, const Limits& limits = {});

} // namespace phx

#endif
