#include "phx/expressions.hpp"

#include "phx/error.hpp"
#include "phx/kernel.hpp"
#include "phx/text.hpp"

#include <algorithm>

namespace phx {

namespace {

std::string root_text(CriterionId c, const GeneratingPolyhierarchy& gp) {
    const auto& crit = gp.criterion(c);
    return "root(" + quote_if_needed(crit.name) + ") = " + format(crit.root, gp);
}

/// Does `prefix` (attributes on earlier criteria) imply root(c)?
bool supports(CriterionId c, const SimpleCollection& sc, const GeneratingPolyhierarchy& gp) {
    const Expression& root = gp.criterion(c).root;
    if (root.is_universe_literal()) return true;
    if (const auto* r = root.simple(); r != nullptr && !r->has_complements()) {
        return std::all_of(r->attributes().begin(), r->attributes().end(), [&](const Attribute& a) {
            return std::binary_search(sc.attributes().begin(), sc.attributes().end(), a);
        });
    }
    return kernel::includes_open(kernel::to_union(root, kDefaultExpansionLimit),
                                 Union({kernel::canonicalize(sc.prefix(c))}));
}

bool supports_bu(CriterionId c, const BranchUnionCollection& buc, const GeneratingPolyhierarchy& gp) {
    const Expression& root = gp.criterion(c).root;
    if (root.is_universe_literal()) return true;
    if (const auto* r = root.simple(); r != nullptr && !r->has_complements()) {
        return std::all_of(r->attributes().begin(), r->attributes().end(), [&](const Attribute& a) {
            const auto* u = buc.find(a.criterion);
            return u != nullptr && u->branches.size() == 1 && u->branches.front() == a.branch;
        });
    }
    std::vector<BranchUnion> earlier;
    for (const auto& u : buc.unions()) {
        if (u.criterion < c) earlier.push_back(u);
    }
    return kernel::includes_open(kernel::to_union(root, kDefaultExpansionLimit),
                                 expand_branch_unions(BranchUnionCollection(std::move(earlier))));
}

void validate_simple(const SimpleCollection& sc, const GeneratingPolyhierarchy& gp,
                     const std::string& where, ValidationReport& report) {
    bool refs_ok = true;
    for (const auto& a : sc.attributes()) {
        if (!gp.contains(a.criterion)) {
            report.add(FindingKind::DanglingCriterion,
                       where + "unknown criterion #" + std::to_string(a.criterion.value));
            refs_ok = false;
        } else if (!gp.contains(a.criterion, a.branch)) {
            report.add(FindingKind::DanglingBranch,
                       where + "unknown branch #" + std::to_string(a.branch.value) + " of " +
                           gp.criterion(a.criterion).name);
            refs_ok = false;
        }
    }
    if (!refs_ok) return;
    for (CriterionId c : sc.criteria()) {
        const auto n = std::count_if(sc.attributes().begin(), sc.attributes().end(),
                                     [&](const Attribute& a) { return a.criterion == c && !a.complemented; });
        if (n > 1) {
            report.add(FindingKind::Exclusivity,
                       where + "more than one positive attribute on " + gp.criterion(c).name);
        }
    }
    for (CriterionId c : sc.criteria()) {
        if (!supports(c, sc, gp)) {
            report.add(FindingKind::MissingSupport,
                       where + quote_if_needed(gp.criterion(c).name) + " used outside " + root_text(c, gp));
        }
    }
}

void validate_bu(const BranchUnionCollection& buc, const GeneratingPolyhierarchy& gp,
                 ValidationReport& report) {
    bool refs_ok = true;
    for (const auto& u : buc.unions()) {
        if (!gp.contains(u.criterion)) {
            report.add(FindingKind::DanglingCriterion, "unknown criterion #" + std::to_string(u.criterion.value));
            refs_ok = false;
            continue;
        }
        for (BranchId b : u.branches) {
            if (!gp.contains(u.criterion, b)) {
                report.add(FindingKind::DanglingBranch, "unknown branch #" + std::to_string(b.value) + " of " +
                                                            gp.criterion(u.criterion).name);
                refs_ok = false;
            }
        }
    }
    if (!refs_ok) return;
    for (const auto& u : buc.unions()) {
        if (!supports_bu(u.criterion, buc, gp)) {
            report.add(FindingKind::MissingSupport,
                       quote_if_needed(gp.criterion(u.criterion).name) + " used outside " +
                           root_text(u.criterion, gp));
        }
    }
}

} // namespace

ValidationReport validate(const Expression& e, const GeneratingPolyhierarchy& gp) {
    ValidationReport report;
    if (const auto* s = e.simple()) {
        validate_simple(*s, gp, "", report);
    } else if (const auto* u = e.as_union()) {
        std::size_t k = 0;
        for (const auto& s : u->components()) {
            validate_simple(s, gp, "component " + std::to_string(++k) + ": ", report);
        }
    } else {
        validate_bu(*e.branch_unions(), gp, report);
    }
    return report;
}

void require_valid(const Expression& e, const GeneratingPolyhierarchy& gp) {
    auto report = validate(e, gp);
    if (!report.ok()) throw Error(ErrorCode::ValidationError, report.to_string());
}

bool is_null(const SimpleCollection& sc) { return kernel::is_null(sc); }

bool is_null_closed(const SimpleCollection& sc, const GeneratingPolyhierarchy& gp) {
    return kernel::is_null_closed(sc, gp);
}

SimpleCollection canonicalize(const SimpleCollection& sc) { return kernel::canonicalize(sc); }

Expression canonicalize(const Expression& e) {
    if (const auto* s = e.simple()) return kernel::canonicalize(*s);
    if (const auto* u = e.as_union()) return normalize(reduce(*u));
    return e;
}

Union reduce(const Union& u) { return kernel::reduce({u.components().begin(), u.components().end()}); }

Union expand_branch_unions(const BranchUnionCollection& buc, std::size_t limit) {
    std::size_t product = 1;
    for (const auto& u : buc.unions()) {
        if (product > limit / u.branches.size()) {
            throw Error(ErrorCode::ExpansionTooLarge,
                        "branch-union expansion exceeds " + std::to_string(limit) + " components");
        }
        product *= u.branches.size();
    }
    std::vector<std::vector<Attribute>> rows(1);
    for (const auto& u : buc.unions()) {
        std::vector<std::vector<Attribute>> next;
        next.reserve(rows.size() * u.branches.size());
        for (const auto& row : rows) {
            for (BranchId b : u.branches) {
                auto r = row;
                r.push_back({u.criterion, b, false});
                next.push_back(std::move(r));
            }
        }
        rows = std::move(next);
    }
    std::vector<SimpleCollection> comps;
    comps.reserve(rows.size());
    for (auto& r : rows) comps.emplace_back(std::move(r));
    return kernel::reduce(std::move(comps));
}

Union expand_complements(const SimpleCollection& sc, const GeneratingPolyhierarchy& gp, std::size_t limit) {
    if (kernel::is_null(sc)) return Union{};
    const SimpleCollection canon = kernel::canonicalize(sc);
    if (!canon.has_complements()) return Union({canon});
    std::vector<BranchUnion> alternatives;
    for (CriterionId c : canon.criteria()) {
        if (auto p = canon.positive(c)) {
            alternatives.push_back({c, {*p}});
            continue;
        }
        auto excluded = canon.excluded(c);
        BranchUnion u{c, {}};
        for (std::uint32_t r = 1; r <= gp.cardinality(c); ++r) {
            if (!std::binary_search(excluded.begin(), excluded.end(), BranchId{r})) u.branches.push_back(BranchId{r});
        }
        if (u.branches.empty()) return Union{};
        alternatives.push_back(std::move(u));
    }
    return expand_branch_unions(BranchUnionCollection(std::move(alternatives)), limit);
}

BranchUnionCollection canonicalize_bu(const BranchUnionCollection& buc, const GeneratingPolyhierarchy& gp) {
    BranchUnionCollection current = buc;
    for (bool changed = true; changed;) {
        changed = false;
        auto unions = current.unions();
        for (auto it = unions.rbegin(); it != unions.rend(); ++it) {
            if (it->branches.size() != gp.cardinality(it->criterion)) continue;
            std::vector<BranchUnion> rest;
            for (const auto& u : unions) {
                if (u.criterion != it->criterion) rest.push_back(u);
            }
            BranchUnionCollection candidate(std::move(rest));
            ValidationReport report;
            validate_bu(candidate, gp, report);
            if (report.ok()) {
                current = std::move(candidate);
                changed = true;
                break;
            }
        }
    }
    return current;
}

SimpleCollection complete(const SimpleCollection& sc, const GeneratingPolyhierarchy& gp) {
    for (const auto& a : sc.attributes()) {
        if (!gp.contains(a.criterion)) {
            throw Error(ErrorCode::UnknownCriterion, "unknown criterion #" + std::to_string(a.criterion.value));
        }
        if (!gp.contains(a.criterion, a.branch)) {
            throw Error(ErrorCode::UnknownBranch, "unknown branch #" + std::to_string(a.branch.value) + " of " +
                                                      gp.criterion(a.criterion).name);
        }
    }
    if (kernel::is_null(sc)) {
        throw Error(ErrorCode::InconsistentAssignment, "contradictory attributes in " + format(sc, gp));
    }
    SimpleCollection current = kernel::canonicalize(sc);
    for (bool progress = true; progress;) {
        progress = false;
        auto crits = current.criteria();
        for (auto it = crits.rbegin(); it != crits.rend(); ++it) {
            if (supports(*it, current, gp)) continue;
            const Expression& root = gp.criterion(*it).root;
            const auto* r = root.simple();
            if (r == nullptr) {
                throw Error(ErrorCode::InconsistentAssignment,
                            root_text(*it, gp) + " is composite and not implied by " + format(current, gp));
            }
            auto merged = kernel::merge(current, *r);
            if (!merged) {
                throw Error(ErrorCode::InconsistentAssignment,
                            root_text(*it, gp) + " violated by " + format(current, gp));
            }
            current = std::move(*merged);
            progress = true;
            break;
        }
    }
    return current;
}

} // namespace phx
