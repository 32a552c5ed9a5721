#ifndef PHX_EXPRESSION_HPP
#define PHX_EXPRESSION_HPP

#include "phx/ids.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace phx {

/// Elementary attribute (C, i), or its complement when `complemented`.
struct Attribute {
    CriterionId criterion;
    BranchId branch;
    bool complemented = false;

    bool operator==(const Attribute&) const = default;

    // Grouped by criterion, positive before complemented, then by branch.
    std::strong_ordering operator<=>(const Attribute& other) const {
        if (auto c = criterion <=> other.criterion; c != 0) return c;
        if (auto c = complemented <=> other.complemented; c != 0) return c;
        return branch <=> other.branch;
    }
};

/// A conjunctive category: a sorted set of attributes. An empty collection
/// denotes the whole universe. A criterion may carry one positive branch or
/// a set of excluded (complemented) branches; two positives on one criterion
/// make the collection null.
class SimpleCollection {
public:
    SimpleCollection() = default;
    explicit SimpleCollection(std::vector<Attribute> attributes);

    std::span<const Attribute> attributes() const { return attributes_; }
    std::size_t size() const { return attributes_.size(); }
    bool is_universe() const { return attributes_.empty(); }
    bool has_complements() const;

    /// Distinct criteria used, ascending.
    std::vector<CriterionId> criteria() const;
    bool uses(CriterionId criterion) const;
    std::optional<BranchId> positive(CriterionId criterion) const;
    /// Excluded branches of `criterion`, ascending.
    std::vector<BranchId> excluded(CriterionId criterion) const;

    /// Attributes on criteria strictly before `criterion`.
    SimpleCollection prefix(CriterionId criterion) const;
    SimpleCollection without(CriterionId criterion) const;
    SimpleCollection with(Attribute attribute) const;

    bool operator==(const SimpleCollection&) const = default;
    auto operator<=>(const SimpleCollection&) const = default;

private:
    std::vector<Attribute> attributes_;
};

/// Disjunction of simple collections. No components denotes the empty
/// category. Components are kept sorted and distinct.
class Union {
public:
    Union() = default;
    explicit Union(std::vector<SimpleCollection> components);

    std::span<const SimpleCollection> components() const { return components_; }
    std::size_t size() const { return components_.size(); }
    bool is_empty_literal() const { return components_.empty(); }
    bool has_complements() const;

    bool operator==(const Union&) const = default;

private:
    std::vector<SimpleCollection> components_;
};

/// Disjunction of branches of a single criterion.
struct BranchUnion {
    CriterionId criterion;
    std::vector<BranchId> branches; // ascending, distinct, non-empty

    bool operator==(const BranchUnion&) const = default;
};

/// Conjunction of per-criterion branch unions, one per criterion.
class BranchUnionCollection {
public:
    BranchUnionCollection() = default;
    /// Sorts, deduplicates branches and intersects repeated criteria. Throws
    /// ValidationError if some union ends up empty.
    explicit BranchUnionCollection(std::vector<BranchUnion> unions);

    std::span<const BranchUnion> unions() const { return unions_; }
    std::size_t size() const { return unions_.size(); }
    bool is_universe() const { return unions_.empty(); }
    const BranchUnion* find(CriterionId criterion) const;
    std::vector<CriterionId> criteria() const;

    /// Number of attributes, i.e. the sum of union cardinalities.
    std::size_t attribute_count() const;

    static BranchUnionCollection from_simple(const SimpleCollection& positive);

    bool operator==(const BranchUnionCollection&) const = default;

private:
    std::vector<BranchUnion> unions_;
};

/// Any attributive expression.
class Expression {
public:
    enum class Kind { Simple, Union, BranchUnion };
    using Form = std::variant<SimpleCollection, Union, BranchUnionCollection>;

    Expression() = default;
    Expression(SimpleCollection simple) : form_(std::move(simple)) {}
    Expression(Union u) : form_(std::move(u)) {}
    Expression(BranchUnionCollection buc) : form_(std::move(buc)) {}

    static Expression universe() { return Expression(SimpleCollection{}); }
    static Expression empty() { return Expression(Union{}); }

    Kind kind() const { return static_cast<Kind>(form_.index()); }
    const Form& form() const { return form_; }

    const SimpleCollection* simple() const { return std::get_if<SimpleCollection>(&form_); }
    const Union* as_union() const { return std::get_if<Union>(&form_); }
    const BranchUnionCollection* branch_unions() const {
        return std::get_if<BranchUnionCollection>(&form_);
    }

    bool is_universe_literal() const;
    bool is_empty_literal() const;

    /// Every criterion mentioned, ascending.
    std::vector<CriterionId> criteria() const;

    bool operator==(const Expression&) const = default;

private:
    Form form_;
};

/// Collapses single-component unions to simple collections; leaves the
/// other forms untouched.
Expression normalize(Union u);

} // namespace phx

#endif
