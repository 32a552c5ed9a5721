#ifndef PHX_ORACLE_HPP
#define PHX_ORACLE_HPP

// Brute-force extensional reference. Deliberately naive: it never calls the
// symbolic kernels and decides everything by evaluating expressions on
// explicit synthetic objects.

#include "phx/expression.hpp"
#include "phx/polyhierarchy.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace phx::oracle {

inline constexpr std::size_t kDefaultNodeLimit = 100'000;

/// Set of object indices of a synthetic universe.
class Extension {
public:
    Extension() = default;
    explicit Extension(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    bool test(std::size_t i) const { return ((words_[i / 64] >> (i % 64)) & 1U) != 0; }
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    std::size_t count() const;
    bool none() const { return count() == 0; }
    bool subset_of(const Extension& other) const;

    Extension operator|(const Extension& other) const;
    Extension operator&(const Extension& other) const;
    Extension operator-(const Extension& other) const;

    bool operator==(const Extension&) const = default;
    auto operator<=>(const Extension&) const = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Every total assignment over applicable criteria. Each criterion gets
/// `phantom_branches` extra undeclared branches, numbered after the
/// registered ones; 0 gives the closed world.
struct SyntheticUniverse {
    /// objects[k][c - 1] is the branch of criterion c, 0 when inapplicable.
    std::vector<std::vector<std::uint32_t>> objects;
    std::uint32_t phantom_branches = 0;

    static SyntheticUniverse build(const GeneratingPolyhierarchy& gp, std::uint32_t phantom_branches,
                                   std::size_t limit = kDefaultNodeLimit);
};

bool evaluate(const Expression& e, const std::vector<std::uint32_t>& object);
Extension extension(const Expression& e, const SyntheticUniverse& universe);

enum class Order {
    SubHierarchy, ///< criterion by criterion, branching only where applicable
    Product       ///< every (none | branch) choice per criterion, filtered
};

/// All valid positive simple collections, sorted. Throws TooLarge.
std::vector<SimpleCollection> enumerate_simple_collections(const GeneratingPolyhierarchy& gp,
                                                           std::size_t limit = kDefaultNodeLimit,
                                                           Order order = Order::SubHierarchy);

struct ExplicitDag {
    std::vector<SimpleCollection> nodes;
    std::vector<std::pair<std::size_t, std::size_t>> edges; // (parent, child)

    std::optional<std::size_t> find(const SimpleCollection& sc) const;
    std::size_t in_degree(std::size_t node) const;
    std::size_t out_degree(std::size_t node) const;
    std::vector<std::size_t> parents(std::size_t node) const;
    std::vector<std::size_t> children(std::size_t node) const;
};

/// Nodes from the enumeration; an edge wherever two nodes differ by one
/// attribute.
ExplicitDag materialize_dag(const GeneratingPolyhierarchy& gp, std::size_t limit = kDefaultNodeLimit);

/// All valid branch-union collections (no empty union), validity decided
/// extensionally on the one-phantom universe.
std::vector<BranchUnionCollection> enumerate_branch_union_collections(const GeneratingPolyhierarchy& gp,
                                                                      std::size_t limit = kDefaultNodeLimit);

/// Closed-world lattice of categories representable by branch-union
/// collections, with its covering relation.
struct BranchUnionDag {
    std::vector<Extension> nodes;
    std::vector<std::vector<std::size_t>> children;

    std::optional<std::size_t> find(const Extension& e) const;
};

BranchUnionDag materialize_bu_dag(const GeneratingPolyhierarchy& gp, const SyntheticUniverse& closed,
                                  std::size_t limit = kDefaultNodeLimit);

enum class Operation { Includes, Equals, Union, Intersect, IsEmpty, ComplementSymbolic, ComplementExpanded };

struct Verdict {
    bool agree = true;
    std::string detail;
};

/// Runs one algebra operation symbolically and extensionally. Open-world
/// operations are judged on the phantom universe, ComplementExpanded on the
/// closed one.
class Checker {
public:
    explicit Checker(const GeneratingPolyhierarchy& gp, std::uint32_t phantom_branches = 1);

    Verdict check(Operation op, const Expression& a, const Expression& b = Expression::universe()) const;

    const SyntheticUniverse& open() const { return open_; }
    const SyntheticUniverse& closed() const { return closed_; }

private:
    const GeneratingPolyhierarchy& gp_;
    SyntheticUniverse open_;
    SyntheticUniverse closed_;
};

Verdict check_equivalence(const GeneratingPolyhierarchy& gp, Operation op, const Expression& a,
                          const Expression& b = Expression::universe());

} // namespace phx::oracle

#endif
