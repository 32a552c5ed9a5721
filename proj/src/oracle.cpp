#include "phx/oracle.hpp"

#include "phx/algebra.hpp"
#include "phx/error.hpp"
#include "phx/text.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace phx::oracle {

namespace {

std::uint32_t value_of(const std::vector<std::uint32_t>& object, CriterionId c) {
    return c.value - 1 < object.size() ? object[c.value - 1] : 0;
}

bool evaluate_simple(const SimpleCollection& sc, const std::vector<std::uint32_t>& object) {
    for (const auto& a : sc.attributes()) {
        const std::uint32_t v = value_of(object, a.criterion);
        if (v == 0) return false;
        if (a.complemented ? v == a.branch.value : v != a.branch.value) return false;
    }
    return true;
}

void too_large(std::size_t limit, const char* what) {
    throw Error(ErrorCode::TooLarge, std::string(what) + " exceeds " + std::to_string(limit));
}

/// Extensions of every criterion root on the one-phantom universe.
struct Applicability {
    SyntheticUniverse universe;
    std::vector<Extension> roots;

    explicit Applicability(const GeneratingPolyhierarchy& gp, std::size_t limit)
        : universe(SyntheticUniverse::build(gp, 1, limit)) {
        for (const auto& c : gp.criteria()) roots.push_back(extension(c.root, universe));
    }

    bool applicable(std::size_t index, const Expression& context) const {
        return extension(context, universe).subset_of(roots[index]);
    }
};

const char* operation_name(Operation op) {
    switch (op) {
        case Operation::Includes: return "includes";
        case Operation::Equals: return "equals";
        case Operation::Union: return "union";
        case Operation::Intersect: return "intersect";
        case Operation::IsEmpty: return "is_empty";
        case Operation::ComplementSymbolic: return "complement/symbolic";
        case Operation::ComplementExpanded: return "complement/expanded";
    }
    return "?";
}

} // namespace

std::size_t Extension::count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool Extension::subset_of(const Extension& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
}

Extension Extension::operator|(const Extension& other) const {
    Extension r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= other.words_[i];
    return r;
}

Extension Extension::operator&(const Extension& other) const {
    Extension r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= other.words_[i];
    return r;
}

Extension Extension::operator-(const Extension& other) const {
    Extension r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~other.words_[i];
    return r;
}

SyntheticUniverse SyntheticUniverse::build(const GeneratingPolyhierarchy& gp, std::uint32_t phantom_branches,
                                           std::size_t limit) {
    SyntheticUniverse u;
    u.phantom_branches = phantom_branches;
    std::vector<std::uint32_t> object(gp.size(), 0);
    auto recurse = [&](auto&& self, std::size_t index) -> void {
        if (index == gp.size()) {
            if (u.objects.size() == limit) too_large(limit, "synthetic universe");
            u.objects.push_back(object);
            return;
        }
        const Criterion& crit = gp.criteria()[index];
        const auto values = static_cast<std::uint32_t>(crit.cardinality()) + phantom_branches;
        if (values == 0 || !evaluate(crit.root, object)) {
            self(self, index + 1);
            return;
        }
        for (std::uint32_t v = 1; v <= values; ++v) {
            object[index] = v;
            self(self, index + 1);
        }
        object[index] = 0;
    };
    recurse(recurse, 0);
    return u;
}

bool evaluate(const Expression& e, const std::vector<std::uint32_t>& object) {
    if (const auto* s = e.simple()) return evaluate_simple(*s, object);
    if (const auto* u = e.as_union()) {
        for (const auto& s : u->components()) {
            if (evaluate_simple(s, object)) return true;
        }
        return false;
    }
    for (const auto& bu : e.branch_unions()->unions()) {
        const std::uint32_t v = value_of(object, bu.criterion);
        const bool in = std::any_of(bu.branches.begin(), bu.branches.end(),
                                    [&](BranchId b) { return b.value == v; });
        if (v == 0 || !in) return false;
    }
    return true;
}

Extension extension(const Expression& e, const SyntheticUniverse& universe) {
    Extension ext(universe.objects.size());
    for (std::size_t k = 0; k < universe.objects.size(); ++k) {
        if (evaluate(e, universe.objects[k])) ext.set(k);
    }
    return ext;
}

std::vector<SimpleCollection> enumerate_simple_collections(const GeneratingPolyhierarchy& gp, std::size_t limit,
                                                           Order order) {
    const Applicability app(gp, limit);
    std::vector<SimpleCollection> out;
    auto emit = [&](std::vector<Attribute> attrs) {
        if (out.size() == limit) too_large(limit, "collection enumeration");
        out.emplace_back(std::move(attrs));
    };

    if (order == Order::SubHierarchy) {
        std::vector<Attribute> current;
        auto recurse = [&](auto&& self, std::size_t index) -> void {
            if (index == gp.size()) {
                emit(current);
                return;
            }
            self(self, index + 1);
            if (!app.applicable(index, SimpleCollection(current))) return;
            const Criterion& crit = gp.criteria()[index];
            for (const auto& b : crit.branches) {
                current.push_back({crit.id, b.id, false});
                self(self, index + 1);
                current.pop_back();
            }
        };
        recurse(recurse, 0);
    } else {
        std::vector<std::uint32_t> choice(gp.size(), 0);
        for (;;) {
            std::vector<Attribute> attrs;
            for (std::size_t i = 0; i < choice.size(); ++i) {
                if (choice[i] != 0) attrs.push_back({gp.criteria()[i].id, BranchId{choice[i]}, false});
            }
            const SimpleCollection sc(attrs);
            bool valid = true;
            for (std::size_t i = 0; i < choice.size() && valid; ++i) {
                if (choice[i] != 0) valid = app.applicable(i, sc.prefix(gp.criteria()[i].id));
            }
            if (valid) emit(std::move(attrs));
            std::size_t i = 0;
            while (i < choice.size() && choice[i] == gp.criteria()[i].cardinality()) choice[i++] = 0;
            if (i == choice.size()) break;
            ++choice[i];
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::size_t> ExplicitDag::find(const SimpleCollection& sc) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), sc);
    if (it == nodes.end() || *it != sc) return std::nullopt;
    return static_cast<std::size_t>(it - nodes.begin());
}

std::size_t ExplicitDag::in_degree(std::size_t node) const { return parents(node).size(); }
std::size_t ExplicitDag::out_degree(std::size_t node) const { return children(node).size(); }

std::vector<std::size_t> ExplicitDag::parents(std::size_t node) const {
    std::vector<std::size_t> out;
    for (const auto& [p, c] : edges) {
        if (c == node) out.push_back(p);
    }
    return out;
}

std::vector<std::size_t> ExplicitDag::children(std::size_t node) const {
    std::vector<std::size_t> out;
    for (const auto& [p, c] : edges) {
        if (p == node) out.push_back(c);
    }
    return out;
}

ExplicitDag materialize_dag(const GeneratingPolyhierarchy& gp, std::size_t limit) {
    ExplicitDag dag;
    dag.nodes = enumerate_simple_collections(gp, limit);
    for (std::size_t i = 0; i < dag.nodes.size(); ++i) {
        for (CriterionId c : dag.nodes[i].criteria()) {
            if (auto p = dag.find(dag.nodes[i].without(c))) dag.edges.emplace_back(*p, i);
        }
    }
    std::sort(dag.edges.begin(), dag.edges.end());
    return dag;
}

std::vector<BranchUnionCollection> enumerate_branch_union_collections(const GeneratingPolyhierarchy& gp,
                                                                      std::size_t limit) {
    const Applicability app(gp, limit);
    std::vector<BranchUnionCollection> out;
    std::vector<BranchUnion> current;
    auto recurse = [&](auto&& self, std::size_t index) -> void {
        if (index == gp.size()) {
            if (out.size() == limit) too_large(limit, "branch-union enumeration");
            out.emplace_back(current);
            return;
        }
        self(self, index + 1);
        const Criterion& crit = gp.criteria()[index];
        if (crit.branches.empty() || !app.applicable(index, BranchUnionCollection(current))) return;
        const std::uint32_t masks = 1U << crit.cardinality();
        for (std::uint32_t mask = 1; mask < masks; ++mask) {
            BranchUnion u{crit.id, {}};
            for (std::uint32_t r = 0; r < crit.cardinality(); ++r) {
                if ((mask >> r) & 1U) u.branches.push_back(crit.branches[r].id);
            }
            current.push_back(std::move(u));
            self(self, index + 1);
            current.pop_back();
        }
    };
    recurse(recurse, 0);
    return out;
}

std::optional<std::size_t> BranchUnionDag::find(const Extension& e) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), e);
    if (it == nodes.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - nodes.begin());
}

BranchUnionDag materialize_bu_dag(const GeneratingPolyhierarchy& gp, const SyntheticUniverse& closed,
                                  std::size_t limit) {
    BranchUnionDag dag;
    for (const auto& buc : enumerate_branch_union_collections(gp, limit)) {
        dag.nodes.push_back(extension(buc, closed));
    }
    std::sort(dag.nodes.begin(), dag.nodes.end());
    dag.nodes.erase(std::unique(dag.nodes.begin(), dag.nodes.end()), dag.nodes.end());

    std::vector<std::size_t> by_count(dag.nodes.size());
    for (std::size_t i = 0; i < by_count.size(); ++i) by_count[i] = i;
    std::stable_sort(by_count.begin(), by_count.end(),
                     [&](std::size_t x, std::size_t y) { return dag.nodes[x].count() > dag.nodes[y].count(); });

    dag.children.resize(dag.nodes.size());
    for (std::size_t a = 0; a < dag.nodes.size(); ++a) {
        auto& covers = dag.children[a];
        for (std::size_t b : by_count) {
            if (b == a || !dag.nodes[b].subset_of(dag.nodes[a]) || dag.nodes[b] == dag.nodes[a]) continue;
            const bool below_cover = std::any_of(covers.begin(), covers.end(),
                                                 [&](std::size_t c) { return dag.nodes[b].subset_of(dag.nodes[c]); });
            if (!below_cover) covers.push_back(b);
        }
        std::sort(covers.begin(), covers.end());
    }
    return dag;
}

Checker::Checker(const GeneratingPolyhierarchy& gp, std::uint32_t phantom_branches)
    : gp_(gp), open_(SyntheticUniverse::build(gp, phantom_branches)), closed_(SyntheticUniverse::build(gp, 0)) {}

Verdict Checker::check(Operation op, const Expression& a, const Expression& b) const {
    Verdict v;
    std::string result;
    try {
        const Extension ea = extension(a, open_);
        const Extension eb = extension(b, open_);
        switch (op) {
            case Operation::Includes: {
                const bool got = includes(a, b, gp_);
                v.agree = got == eb.subset_of(ea);
                result = got ? "true" : "false";
                break;
            }
            case Operation::Equals: {
                const bool got = equals(a, b, gp_);
                v.agree = got == (ea == eb);
                result = got ? "true" : "false";
                break;
            }
            case Operation::Union: {
                const Expression r = unite(a, b, gp_);
                v.agree = extension(r, open_) == (ea | eb);
                result = format(r, gp_);
                break;
            }
            case Operation::Intersect: {
                const Expression r = intersect(a, b, gp_);
                v.agree = extension(r, open_) == (ea & eb);
                result = format(r, gp_);
                break;
            }
            case Operation::IsEmpty: {
                const bool got = is_empty(a, gp_);
                v.agree = got == ea.none();
                result = got ? "true" : "false";
                break;
            }
            case Operation::ComplementSymbolic: {
                const Expression r = complement(a, b, gp_, ComplementMode::Symbolic);
                v.agree = extension(r, open_) == (ea - eb);
                result = format(r, gp_);
                break;
            }
            case Operation::ComplementExpanded: {
                const Expression r = complement(a, b, gp_, ComplementMode::Expanded);
                v.agree = extension(r, closed_) == (extension(a, closed_) - extension(b, closed_));
                result = format(r, gp_);
                break;
            }
        }
    } catch (const Error& e) {
        v.agree = false;
        result = std::string("error: ") + e.what();
    }
    if (!v.agree) {
        v.detail = std::string(operation_name(op)) + "(" + format(a, gp_) + ", " + format(b, gp_) + ") = " + result;
    }
    return v;
}

Verdict check_equivalence(const GeneratingPolyhierarchy& gp, Operation op, const Expression& a,
                          const Expression& b) {
    return Checker(gp).check(op, a, b);
}

} // namespace phx::oracle
