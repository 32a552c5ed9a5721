#include "phx/kernel.hpp"

#include "phx/error.hpp"
#include "phx/expressions.hpp"
#include "phx/polyhierarchy.hpp"

#include <algorithm>
#include <iterator>

namespace phx::kernel {

namespace {

/// Contiguous run of attributes sharing one criterion.
struct Group {
    CriterionId criterion;
    std::span<const Attribute> attributes;

    bool has_positive() const { return !attributes.front().complemented; }
    BranchId positive() const { return attributes.front().branch; }
};

template <typename F>
void for_each_group(std::span<const Attribute> attrs, F&& f) {
    std::size_t i = 0;
    while (i < attrs.size()) {
        std::size_t j = i + 1;
        while (j < attrs.size() && attrs[j].criterion == attrs[i].criterion) ++j;
        if (!f(Group{attrs[i].criterion, attrs.subspan(i, j - i)})) return;
        i = j;
    }
}

std::vector<Group> groups_of(const SimpleCollection& sc) {
    std::vector<Group> out;
    for_each_group(sc.attributes(), [&](Group g) {
        out.push_back(g);
        return true;
    });
    return out;
}

void check_limit(std::size_t n, std::size_t limit) {
    if (n > limit) {
        throw Error(ErrorCode::ExpansionTooLarge,
                    "expansion exceeds " + std::to_string(limit) + " components");
    }
}

/// Disjuncts equivalent to the negation of one criterion's entry, given that
/// the criterion is applicable.
std::vector<SimpleCollection> negate(const Group& g, const GeneratingPolyhierarchy* expanded_gp) {
    std::vector<SimpleCollection> pieces;
    if (g.has_positive()) {
        const BranchId i = g.positive();
        if (expanded_gp == nullptr) {
            pieces.emplace_back(std::vector<Attribute>{{g.criterion, i, true}});
        } else {
            const auto n = expanded_gp->cardinality(g.criterion);
            for (std::uint32_t r = 1; r <= n; ++r) {
                if (r != i.value) pieces.emplace_back(std::vector<Attribute>{{g.criterion, BranchId{r}, false}});
            }
        }
    } else {
        for (const auto& a : g.attributes) {
            pieces.emplace_back(std::vector<Attribute>{{g.criterion, a.branch, false}});
        }
    }
    return pieces;
}

} // namespace

bool is_null(const SimpleCollection& sc) {
    bool null = false;
    for_each_group(sc.attributes(), [&](Group g) {
        std::size_t positives = 0;
        for (const auto& a : g.attributes) positives += a.complemented ? 0 : 1;
        if (positives > 1) {
            null = true;
        } else if (positives == 1) {
            for (const auto& a : g.attributes) {
                if (a.complemented && a.branch == g.positive()) null = true;
            }
        }
        return !null;
    });
    return null;
}

bool is_null_closed(const SimpleCollection& sc, const GeneratingPolyhierarchy& gp) {
    if (kernel::is_null(sc)) return true;
    bool null = false;
    for_each_group(sc.attributes(), [&](Group g) {
        if (!g.has_positive() && g.attributes.size() >= gp.cardinality(g.criterion)) null = true;
        return !null;
    });
    return null;
}

SimpleCollection canonicalize(const SimpleCollection& sc) {
    if (!sc.has_complements() || kernel::is_null(sc)) return sc;
    std::vector<Attribute> kept;
    kept.reserve(sc.size());
    for_each_group(sc.attributes(), [&](Group g) {
        if (g.has_positive()) {
            kept.push_back(g.attributes.front());
        } else {
            kept.insert(kept.end(), g.attributes.begin(), g.attributes.end());
        }
        return true;
    });
    return SimpleCollection(std::move(kept));
}

std::optional<SimpleCollection> merge(const SimpleCollection& a, const SimpleCollection& b) {
    std::vector<Attribute> all;
    all.reserve(a.size() + b.size());
    std::merge(a.attributes().begin(), a.attributes().end(), b.attributes().begin(), b.attributes().end(),
               std::back_inserter(all));
    SimpleCollection merged(std::move(all));
    if (kernel::is_null(merged)) return std::nullopt;
    return kernel::canonicalize(merged);
}

bool subsumes(const SimpleCollection& outer, const SimpleCollection& inner) {
    if (!outer.has_complements() && !inner.has_complements()) {
        return std::includes(inner.attributes().begin(), inner.attributes().end(),
                             outer.attributes().begin(), outer.attributes().end());
    }
    auto in = groups_of(inner);
    std::size_t k = 0;
    bool ok = true;
    for_each_group(outer.attributes(), [&](Group g) {
        while (k < in.size() && in[k].criterion < g.criterion) ++k;
        if (k == in.size() || in[k].criterion != g.criterion) {
            ok = false;
            return false;
        }
        const Group& h = in[k];
        if (g.has_positive()) {
            ok = h.has_positive() && h.positive() == g.positive();
        } else if (h.has_positive()) {
            ok = std::none_of(g.attributes.begin(), g.attributes.end(),
                              [&](const Attribute& a) { return a.branch == h.positive(); });
        } else {
            ok = std::includes(h.attributes.begin(), h.attributes.end(), g.attributes.begin(),
                               g.attributes.end());
        }
        return ok;
    });
    return ok;
}

Union reduce(std::vector<SimpleCollection> components) {
    std::vector<SimpleCollection> cs;
    cs.reserve(components.size());
    for (auto& s : components) {
        if (kernel::is_null(s)) continue;
        cs.push_back(kernel::canonicalize(s));
    }
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());

    // Shorter collections are the more general ones; only they can absorb.
    std::vector<std::size_t> by_size(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i) by_size[i] = i;
    std::stable_sort(by_size.begin(), by_size.end(),
                     [&](std::size_t x, std::size_t y) { return cs[x].size() < cs[y].size(); });
    std::vector<bool> keep(cs.size(), true);
    std::vector<std::size_t> kept;
    for (std::size_t i : by_size) {
        for (std::size_t j : kept) {
            if (subsumes(cs[j], cs[i])) {
                keep[i] = false;
                break;
            }
        }
        if (keep[i]) kept.push_back(i);
    }
    std::vector<SimpleCollection> out;
    out.reserve(kept.size());
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (keep[i]) out.push_back(std::move(cs[i]));
    }
    return Union(std::move(out));
}

Union difference(const Union& a, const Union& b, const GeneratingPolyhierarchy* expanded_gp,
                 std::size_t limit) {
    std::vector<SimpleCollection> subtrahends;
    for (const auto& t : b.components()) {
        if (kernel::is_null(t)) continue;
        subtrahends.push_back(kernel::canonicalize(t));
    }
    Union result = reduce({a.components().begin(), a.components().end()});
    for (const auto& t : subtrahends) {
        if (result.is_empty_literal()) break;
        if (t.is_universe()) return Union{};
        const auto tgroups = groups_of(t);
        std::vector<std::vector<SimpleCollection>> negations;
        negations.reserve(tgroups.size());
        for (const auto& g : tgroups) negations.push_back(negate(g, expanded_gp));

        std::vector<SimpleCollection> next;
        for (const auto& s : result.components()) {
            if (subsumes(t, s)) continue;
            if (!merge(s, t)) {
                next.push_back(s);
                continue;
            }
            // s \ t = OR over groups g of t: s AND (groups before g) AND NOT g.
            std::optional<SimpleCollection> base = s;
            for (std::size_t gi = 0; gi < tgroups.size() && base; ++gi) {
                for (const auto& piece : negations[gi]) {
                    if (auto r = merge(*base, piece)) next.push_back(std::move(*r));
                }
                base = merge(*base, SimpleCollection({tgroups[gi].attributes.begin(),
                                                      tgroups[gi].attributes.end()}));
            }
            check_limit(next.size(), limit);
        }
        result = reduce(std::move(next));
    }
    return result;
}

Union intersect(const Union& a, const Union& b, std::size_t limit) {
    std::vector<SimpleCollection> out;
    for (const auto& s : a.components()) {
        for (const auto& t : b.components()) {
            if (auto m = merge(s, t)) out.push_back(std::move(*m));
        }
        check_limit(out.size(), limit);
    }
    return reduce(std::move(out));
}

bool includes_open(const Union& outer, const Union& inner) {
    std::vector<SimpleCollection> targets;
    targets.reserve(outer.size());
    for (const auto& t : outer.components()) {
        if (!kernel::is_null(t)) targets.push_back(kernel::canonicalize(t));
    }
    const bool complements = outer.has_complements();
    for (const auto& raw : inner.components()) {
        if (kernel::is_null(raw)) continue;
        const SimpleCollection s = kernel::canonicalize(raw);
        bool covered = std::any_of(targets.begin(), targets.end(),
                                   [&](const SimpleCollection& t) { return subsumes(t, s); });
        if (covered) continue;
        // Without complements a single absorbing component is necessary.
        if (!complements) return false;
        if (!difference(Union({s}), outer, nullptr, kDefaultExpansionLimit).is_empty_literal()) return false;
    }
    return true;
}

bool includes_closed(const Union& outer, const Union& inner, const GeneratingPolyhierarchy& gp,
                     std::size_t limit) {
    const Union rest = difference(inner, outer, &gp, limit);
    return std::all_of(rest.components().begin(), rest.components().end(),
                       [&](const SimpleCollection& s) { return kernel::is_null_closed(s, gp); });
}

Union to_union(const Expression& e, std::size_t limit) {
    if (const auto* s = e.simple()) return Union({*s});
    if (const auto* u = e.as_union()) return *u;
    return expand_branch_unions(*e.branch_unions(), limit);
}

} // namespace phx::kernel
