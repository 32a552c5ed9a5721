#ifndef PHX_POLYHIERARCHY_HPP
#define PHX_POLYHIERARCHY_HPP

#include "phx/expression.hpp"
#include "phx/ids.hpp"
#include "phx/validation.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace phx {

struct Branch {
    BranchId id;
    std::string label;
};

struct Criterion {
    CriterionId id;
    std::string name;
    /// Domain of definition. The universe means "globally applicable",
    /// i.e. dependent only on the imaginary root criterion.
    Expression root;
    std::vector<Branch> branches;

    std::size_t cardinality() const { return branches.size(); }
};

/// The criteria DAG. Append-only: criteria and branches are never removed
/// or renumbered, so ids are also the generality order.
///
/// Single writer; const member functions are safe to call concurrently.
class GeneratingPolyhierarchy {
public:
    GeneratingPolyhierarchy() = default;

    /// Registers a criterion whose domain of definition is `root`. The root
    /// must validate against the current polyhierarchy, so it can only
    /// mention criteria registered earlier.
    CriterionId add_criterion(std::string name, Expression root = Expression::universe());
    BranchId add_branch(CriterionId criterion, std::string label);

    /// True iff `u` transitively depends on `v`. Never reflexive.
    bool depends_on(CriterionId u, CriterionId v) const;

    /// Criteria that appear in root(`criterion`).
    std::span<const CriterionId> direct_dependencies(CriterionId criterion) const;
    std::vector<std::pair<CriterionId, CriterionId>> dependency_edges() const;

    /// Every criterion after everything it depends on; ties in insertion order.
    std::vector<CriterionId> topological_order() const;

    /// Structural findings: dangling references, cycles, forward references,
    /// invalid roots. Empty for anything built through the API.
    ValidationReport validate() const;

    std::size_t size() const { return criteria_.size(); }
    bool empty() const { return criteria_.empty(); }
    std::span<const Criterion> criteria() const { return criteria_; }

    bool contains(CriterionId criterion) const;
    bool contains(CriterionId criterion, BranchId branch) const;
    /// Throws UnknownCriterion.
    const Criterion& criterion(CriterionId id) const;
    std::size_t cardinality(CriterionId id) const { return criterion(id).cardinality(); }
    const std::string& branch_label(CriterionId criterion, BranchId branch) const;

    std::optional<CriterionId> find_criterion(std::string_view name) const;
    std::optional<BranchId> find_branch(CriterionId criterion, std::string_view label) const;

    /// Builds a polyhierarchy from stored records without any checking.
    /// Records must carry ids 1..n in order. Use validate() afterwards.
    static GeneratingPolyhierarchy from_records(std::vector<Criterion> records);

private:
    void index_dependencies(std::size_t index);
    void rebuild_ancestors();

    std::vector<Criterion> criteria_;
    std::vector<std::vector<CriterionId>> direct_;
    std::vector<std::vector<CriterionId>> ancestors_; // sorted
    std::unordered_map<std::string, CriterionId> by_name_;
};

} // namespace phx

#endif
