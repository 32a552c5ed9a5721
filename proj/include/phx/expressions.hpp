#ifndef PHX_EXPRESSIONS_HPP
#define PHX_EXPRESSIONS_HPP

#include "phx/expression.hpp"
#include "phx/polyhierarchy.hpp"
#include "phx/validation.hpp"

#include <cstddef>

namespace phx {

inline constexpr std::size_t kDefaultExpansionLimit = 1'000'000;

/// Empty report iff every attribute is registered, every criterion carries
/// at most one positive branch, and every collection is downward-closed: for
/// each criterion used, the attributes on earlier criteria imply its root.
ValidationReport validate(const Expression& e, const GeneratingPolyhierarchy& gp);

/// Throws ValidationError carrying the report.
void require_valid(const Expression& e, const GeneratingPolyhierarchy& gp);

bool is_null(const SimpleCollection& sc);
bool is_null_closed(const SimpleCollection& sc, const GeneratingPolyhierarchy& gp);

SimpleCollection canonicalize(const SimpleCollection& sc);

/// Canonical form of any expression: simple collections canonicalized,
/// unions reduced (and collapsed to a simple collection when they have one
/// component). Branch-union collections are returned unchanged.
Expression canonicalize(const Expression& e);

/// Removes absorbed components. Idempotent, extension-preserving.
Union reduce(const Union& u);

/// Cartesian distribution of the branch unions. Exact in the open world:
/// total unions are kept as written (see canonicalize_bu).
Union expand_branch_unions(const BranchUnionCollection& buc,
                           std::size_t limit = kDefaultExpansionLimit);

/// Replaces excluded sets with the disjunction of the remaining registered
/// branches. This is a closed-world snapshot: adding a branch later makes the
/// result stale.
Union expand_complements(const SimpleCollection& sc, const GeneratingPolyhierarchy& gp,
                         std::size_t limit = kDefaultExpansionLimit);

/// Removes total branch unions (all registered branches) wherever the
/// collection stays valid without them.
BranchUnionCollection canonicalize_bu(const BranchUnionCollection& buc,
                                      const GeneratingPolyhierarchy& gp);

/// Adds the attributes implied by criteria roots. Throws
/// InconsistentAssignment naming the violated root when an implied
/// attribute contradicts the collection, or when a composite root leaves the
/// support ambiguous.
SimpleCollection complete(const SimpleCollection& sc, const GeneratingPolyhierarchy& gp);

} // namespace phx

#endif
