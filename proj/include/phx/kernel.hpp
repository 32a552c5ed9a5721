#ifndef PHX_KERNEL_HPP
#define PHX_KERNEL_HPP

// Unchecked set kernels shared by the expressions and algebra modules.
// Inputs are assumed valid; nothing here consults the universe of objects.

#include "phx/expression.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace phx {
class GeneratingPolyhierarchy;
}

namespace phx::kernel {

/// Open-world contradiction: two positives on one criterion, or a positive
/// branch that is also excluded.
bool is_null(const SimpleCollection& sc);

/// Closed-world contradiction: is_null, or an excluded set covering every
/// registered branch of its criterion.
bool is_null_closed(const SimpleCollection& sc, const GeneratingPolyhierarchy& gp);

/// Drops complements on criteria that carry a positive branch. Null
/// collections are returned unchanged.
SimpleCollection canonicalize(const SimpleCollection& sc);

/// Conjunction of two collections, canonical; nullopt when contradictory.
std::optional<SimpleCollection> merge(const SimpleCollection& a, const SimpleCollection& b);

/// Open-world `inner ⊆ outer` for two canonical simple collections.
bool subsumes(const SimpleCollection& outer, const SimpleCollection& inner);

/// Canonicalizes components, drops null ones and removes every component
/// absorbed by another.
Union reduce(std::vector<SimpleCollection> components);

/// Open-world `inner ⊆ outer`.
bool includes_open(const Union& outer, const Union& inner);

/// Closed-world `inner ⊆ outer` against the currently registered branches.
bool includes_closed(const Union& outer, const Union& inner, const GeneratingPolyhierarchy& gp,
                     std::size_t limit);

/// `a \ b`. With `expanded_gp == nullptr` negated positives become
/// complemented attributes (invariant under new branches); otherwise they
/// are enumerated over the branches registered in `*expanded_gp`.
/// Throws ExpansionTooLarge past `limit` components.
Union difference(const Union& a, const Union& b, const GeneratingPolyhierarchy* expanded_gp,
                 std::size_t limit);

/// Pairwise merge, reduced.
Union intersect(const Union& a, const Union& b, std::size_t limit);

Union to_union(const Expression& e, std::size_t limit);

} // namespace phx::kernel

#endif
