#include "phx/algebra.hpp"

#include "phx/error.hpp"
#include "phx/kernel.hpp"
#include "phx/text.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <string>
#include <utility>

namespace phx {

namespace {

template <typename T>
void sort_by_text(std::vector<T>& items, const GeneratingPolyhierarchy& gp) {
    std::vector<std::pair<std::string, T>> keyed;
    keyed.reserve(items.size());
    for (auto& item : items) keyed.emplace_back(format(Expression(item), gp), std::move(item));
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    keyed.erase(std::unique(keyed.begin(), keyed.end(),
                            [](const auto& x, const auto& y) { return x.first == y.first; }),
                keyed.end());
    items.clear();
    for (auto& [key, item] : keyed) items.push_back(std::move(item));
}

bool includes_bu(const BranchUnionCollection& outer, const BranchUnionCollection& inner) {
    for (const auto& u : outer.unions()) {
        const BranchUnion* v = inner.find(u.criterion);
        if (v == nullptr) return false;
        if (!std::includes(u.branches.begin(), u.branches.end(), v->branches.begin(), v->branches.end())) {
            return false;
        }
    }
    return true;
}

std::optional<BranchUnionCollection> intersect_bu(const BranchUnionCollection& a, const BranchUnionCollection& b) {
    std::vector<BranchUnion> out;
    for (const auto& u : a.unions()) {
        const BranchUnion* v = b.find(u.criterion);
        if (v == nullptr) {
            out.push_back(u);
            continue;
        }
        BranchUnion w{u.criterion, {}};
        std::set_intersection(u.branches.begin(), u.branches.end(), v->branches.begin(), v->branches.end(),
                              std::back_inserter(w.branches));
        if (w.branches.empty()) return std::nullopt;
        out.push_back(std::move(w));
    }
    for (const auto& v : b.unions()) {
        if (a.find(v.criterion) == nullptr) out.push_back(v);
    }
    return BranchUnionCollection(std::move(out));
}

Union expand_all(const Union& u, const GeneratingPolyhierarchy& gp, std::size_t limit) {
    std::vector<SimpleCollection> comps;
    for (const auto& s : u.components()) {
        const Union x = expand_complements(s, gp, limit);
        comps.insert(comps.end(), x.components().begin(), x.components().end());
    }
    return kernel::reduce(std::move(comps));
}

BranchUnionCollection with_branch(const BranchUnionCollection& buc, CriterionId c, BranchId b) {
    std::vector<BranchUnion> unions(buc.unions().begin(), buc.unions().end());
    for (auto& u : unions) {
        if (u.criterion == c) u.branches.push_back(b);
    }
    return BranchUnionCollection(std::move(unions));
}

std::vector<BranchId> all_branches(CriterionId c, const GeneratingPolyhierarchy& gp) {
    std::vector<BranchId> out;
    for (const auto& b : gp.criterion(c).branches) out.push_back(b.id);
    return out;
}

std::size_t count_leaves(const Expression& e, const std::vector<SimpleCollection>& leaves,
                         const GeneratingPolyhierarchy& gp, const Limits& limits) {
    const Union u = kernel::to_union(e, limits.expansion);
    return static_cast<std::size_t>(std::count_if(leaves.begin(), leaves.end(), [&](const SimpleCollection& leaf) {
        return kernel::includes_closed(u, Union({leaf}), gp, limits.expansion);
    }));
}

} // namespace

bool includes(const Expression& outer, const Expression& inner, const GeneratingPolyhierarchy& gp, World world,
              const Limits& limits) {
    require_valid(outer, gp);
    require_valid(inner, gp);
    if (world == World::Open) {
        const auto* bo = outer.branch_unions();
        const auto* bi = inner.branch_unions();
        if (bo != nullptr && bi != nullptr) return includes_bu(*bo, *bi);
        return kernel::includes_open(kernel::to_union(outer, limits.expansion),
                                     kernel::to_union(inner, limits.expansion));
    }
    return kernel::includes_closed(kernel::to_union(outer, limits.expansion),
                                   kernel::to_union(inner, limits.expansion), gp, limits.expansion);
}

bool equals(const Expression& a, const Expression& b, const GeneratingPolyhierarchy& gp, World world,
            const Limits& limits) {
    return includes(a, b, gp, world, limits) && includes(b, a, gp, world, limits);
}

Expression unite(const Expression& a, const Expression& b, const GeneratingPolyhierarchy& gp, const Limits& limits) {
    require_valid(a, gp);
    require_valid(b, gp);
    if (is_empty(a, gp, World::Open, limits)) return canonicalize(b);
    if (is_empty(b, gp, World::Open, limits)) return canonicalize(a);
    const Union ua = kernel::to_union(a, limits.expansion);
    const Union ub = kernel::to_union(b, limits.expansion);
    std::vector<SimpleCollection> all(ua.components().begin(), ua.components().end());
    all.insert(all.end(), ub.components().begin(), ub.components().end());
    return normalize(kernel::reduce(std::move(all)));
}

Expression intersect(const Expression& a, const Expression& b, const GeneratingPolyhierarchy& gp,
                     const Limits& limits) {
    require_valid(a, gp);
    require_valid(b, gp);
    if (a.is_universe_literal()) return canonicalize(b);
    if (b.is_universe_literal()) return canonicalize(a);
    const auto* ba = a.branch_unions();
    const auto* bb = b.branch_unions();
    if (ba != nullptr && bb != nullptr) {
        auto r = intersect_bu(*ba, *bb);
        if (!r) return Expression::empty();
        return Expression(std::move(*r));
    }
    return normalize(kernel::intersect(kernel::to_union(a, limits.expansion), kernel::to_union(b, limits.expansion),
                                       limits.expansion));
}

Expression complement(const Expression& a, const Expression& b, const GeneratingPolyhierarchy& gp,
                      ComplementMode mode, const Limits& limits) {
    require_valid(a, gp);
    require_valid(b, gp);
    const Union ua = kernel::to_union(a, limits.expansion);
    const Union ub = kernel::to_union(b, limits.expansion);
    if (mode == ComplementMode::Symbolic) return normalize(kernel::difference(ua, ub, nullptr, limits.expansion));
    return normalize(expand_all(kernel::difference(ua, ub, &gp, limits.expansion), gp, limits.expansion));
}

bool is_empty(const Expression& e, const GeneratingPolyhierarchy& gp, World world, const Limits& limits) {
    require_valid(e, gp);
    if (e.branch_unions() != nullptr) return false;
    const Union u = kernel::to_union(e, limits.expansion);
    return std::all_of(u.components().begin(), u.components().end(), [&](const SimpleCollection& s) {
        return world == World::Open ? kernel::is_null(s) : kernel::is_null_closed(s, gp);
    });
}

std::vector<CriterionId> leaf_criteria(const SimpleCollection& sc, const GeneratingPolyhierarchy& gp) {
    require_valid(sc, gp);
    const auto used = sc.criteria();
    std::vector<CriterionId> out;
    for (CriterionId c : used) {
        const bool needed = std::any_of(used.begin(), used.end(), [&](CriterionId d) { return gp.depends_on(d, c); });
        if (!needed) out.push_back(c);
    }
    return out;
}

std::vector<CriterionId> free_criteria(const SimpleCollection& sc, const GeneratingPolyhierarchy& gp) {
    require_valid(sc, gp);
    const Union inner({kernel::canonicalize(sc)});
    std::vector<CriterionId> out;
    for (const auto& crit : gp.criteria()) {
        if (sc.uses(crit.id)) continue;
        if (crit.root.is_universe_literal() ||
            kernel::includes_open(kernel::to_union(crit.root, kDefaultExpansionLimit), inner)) {
            out.push_back(crit.id);
        }
    }
    return out;
}

std::vector<SimpleCollection> direct_parents(const SimpleCollection& sc, const GeneratingPolyhierarchy& gp) {
    require_valid(sc, gp);
    if (sc.is_universe()) throw Error(ErrorCode::EmptyCollection, "the universe has no parents");
    const SimpleCollection canon = kernel::canonicalize(sc);
    std::vector<SimpleCollection> out;
    for (CriterionId c : canon.criteria()) {
        SimpleCollection candidate = canon.without(c);
        if (validate(candidate, gp).ok()) out.push_back(std::move(candidate));
    }
    sort_by_text(out, gp);
    return out;
}

std::vector<SimpleCollection> direct_children(const SimpleCollection& sc, const GeneratingPolyhierarchy& gp) {
    const SimpleCollection canon = kernel::canonicalize(sc);
    std::vector<SimpleCollection> out;
    for (CriterionId c : free_criteria(sc, gp)) {
        for (const auto& b : gp.criterion(c).branches) out.push_back(canon.with({c, b.id, false}));
    }
    sort_by_text(out, gp);
    return out;
}

HullResult hull(const BranchUnionCollection& buc, const GeneratingPolyhierarchy& gp) {
    require_valid(buc, gp);
    Expression h = Expression::universe();
    for (CriterionId c : buc.criteria()) h = intersect(h, gp.criterion(c).root, gp);
    return {canonicalize(h)};
}

std::vector<Attribute> hull_compatible_attributes(const BranchUnionCollection& buc,
                                                  const GeneratingPolyhierarchy& gp) {
    const Union ceiling = kernel::to_union(hull(buc, gp).expression, kDefaultExpansionLimit);
    std::vector<Attribute> out;
    for (const auto& u : buc.unions()) {
        for (BranchId b : all_branches(u.criterion, gp)) {
            if (std::binary_search(u.branches.begin(), u.branches.end(), b)) continue;
            const BranchUnionCollection extended = with_branch(buc, u.criterion, b);
            if (!validate(extended, gp).ok()) continue;
            if (kernel::includes_open(ceiling, expand_branch_unions(extended))) {
                out.push_back({u.criterion, b, false});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BranchUnionCollection> direct_children_bu(const BranchUnionCollection& buc,
                                                      const GeneratingPolyhierarchy& gp) {
    require_valid(buc, gp);
    const BranchUnionCollection canon = canonicalize_bu(buc, gp);
    std::vector<BranchUnionCollection> out;
    const auto unions = canon.unions();
    for (std::size_t k = 0; k < unions.size(); ++k) {
        if (unions[k].branches.size() < 2) continue;
        for (BranchId drop : unions[k].branches) {
            std::vector<BranchUnion> next(unions.begin(), unions.end());
            std::erase(next[k].branches, drop);
            out.emplace_back(std::move(next));
        }
    }
    for (const auto& crit : gp.criteria()) {
        if (canon.find(crit.id) != nullptr || crit.cardinality() < 2) continue;
        std::vector<BranchUnion> total(unions.begin(), unions.end());
        total.push_back({crit.id, all_branches(crit.id, gp)});
        if (!validate(BranchUnionCollection(total), gp).ok()) continue;
        for (const auto& b : crit.branches) {
            auto next = total;
            std::erase(next.back().branches, b.id);
            out.emplace_back(std::move(next));
        }
    }
    sort_by_text(out, gp);
    return out;
}

std::vector<BranchUnionCollection> direct_parents_bu(const BranchUnionCollection& buc,
                                                     const GeneratingPolyhierarchy& gp) {
    std::vector<BranchUnionCollection> out;
    for (const auto& a : hull_compatible_attributes(buc, gp)) {
        out.push_back(canonicalize_bu(with_branch(buc, a.criterion, a.branch), gp));
    }
    sort_by_text(out, gp);
    return out;
}

std::vector<SimpleCollection> leaf_categories(const GeneratingPolyhierarchy& gp, std::size_t limit) {
    std::vector<Union> roots;
    roots.reserve(gp.size());
    for (const auto& crit : gp.criteria()) roots.push_back(kernel::to_union(crit.root, kDefaultExpansionLimit));

    std::vector<SimpleCollection> out;
    std::vector<Attribute> current;
    auto recurse = [&](auto&& self, std::size_t index) -> void {
        if (index == roots.size()) {
            if (out.size() == limit) {
                throw Error(ErrorCode::UnboundedLeafPool,
                            "more than " + std::to_string(limit) + " leaf categories");
            }
            out.emplace_back(current);
            return;
        }
        const Criterion& crit = gp.criteria()[index];
        const bool applicable = crit.root.is_universe_literal() ||
                                kernel::includes_open(roots[index], Union({SimpleCollection(current)}));
        if (!applicable || crit.branches.empty()) {
            self(self, index + 1);
            return;
        }
        for (const auto& b : crit.branches) {
            current.push_back({crit.id, b.id, false});
            self(self, index + 1);
            current.pop_back();
        }
    };
    recurse(recurse, 0);
    return out;
}

std::vector<Expression> direct_parents_composite(const Expression& e, const GeneratingPolyhierarchy& gp,
                                                 const Limits& limits) {
    require_valid(e, gp);
    const auto leaves = leaf_categories(gp, limits.leaf_pool);
    const std::size_t base = count_leaves(e, leaves, gp, limits);
    std::vector<Expression> out;
    for (const auto& g : leaves) {
        if (includes(e, g, gp, World::Open, limits)) continue;
        Expression p = unite(e, g, gp, limits);
        if (count_leaves(p, leaves, gp, limits) == base + 1) out.push_back(std::move(p));
    }
    sort_by_text(out, gp);
    return out;
}

std::vector<Expression> direct_children_composite(const Expression& e, const GeneratingPolyhierarchy& gp,
                                                  const Limits& limits) {
    require_valid(e, gp);
    const auto leaves = leaf_categories(gp, limits.leaf_pool);
    const std::size_t base = count_leaves(e, leaves, gp, limits);
    std::vector<Expression> out;
    for (const auto& f : leaves) {
        if (!includes(e, f, gp, World::Open, limits)) continue;
        Expression d = complement(e, f, gp, ComplementMode::Symbolic, limits);
        if (is_empty(d, gp, World::Open, limits)) continue;
        if (count_leaves(d, leaves, gp, limits) + 1 == base) out.push_back(std::move(d));
    }
    sort_by_text(out, gp);
    return out;
}

QuerySummary classify_query(const Expression& e, const GeneratingPolyhierarchy& gp, const Limits& limits) {
    require_valid(e, gp);
    QuerySummary q;
    q.empty = is_empty(e, gp, World::Open, limits);
    if (const auto* s = e.simple()) {
        q.leaf = leaf_criteria(*s, gp);
        q.free = free_criteria(*s, gp);
        q.parents = s->is_universe() ? 0 : direct_parents(*s, gp).size();
        q.children = direct_children(*s, gp).size();
    } else if (const auto* b = e.branch_unions()) {
        q.parents = direct_parents_bu(*b, gp).size();
        q.children = direct_children_bu(*b, gp).size();
    } else {
        q.parents = direct_parents_composite(e, gp, limits).size();
        q.children = direct_children_composite(e, gp, limits).size();
    }
    return q;
}

} // namespace phx
