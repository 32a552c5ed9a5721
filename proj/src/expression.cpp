#include "phx/expression.hpp"

#include "phx/error.hpp"

#include <algorithm>
#include <iterator>

namespace phx {

SimpleCollection::SimpleCollection(std::vector<Attribute> attributes)
    : attributes_(std::move(attributes)) {
    std::sort(attributes_.begin(), attributes_.end());
    attributes_.erase(std::unique(attributes_.begin(), attributes_.end()), attributes_.end());
}

bool SimpleCollection::has_complements() const {
    return std::any_of(attributes_.begin(), attributes_.end(),
                       [](const Attribute& a) { return a.complemented; });
}

std::vector<CriterionId> SimpleCollection::criteria() const {
    std::vector<CriterionId> out;
    for (const auto& a : attributes_) {
        if (out.empty() || out.back() != a.criterion) out.push_back(a.criterion);
    }
    return out;
}

bool SimpleCollection::uses(CriterionId criterion) const {
    auto it = std::lower_bound(attributes_.begin(), attributes_.end(), criterion,
                               [](const Attribute& a, CriterionId c) { return a.criterion < c; });
    return it != attributes_.end() && it->criterion == criterion;
}

std::optional<BranchId> SimpleCollection::positive(CriterionId criterion) const {
    for (const auto& a : attributes_) {
        if (a.criterion == criterion && !a.complemented) return a.branch;
        if (a.criterion > criterion) break;
    }
    return std::nullopt;
}

std::vector<BranchId> SimpleCollection::excluded(CriterionId criterion) const {
    std::vector<BranchId> out;
    for (const auto& a : attributes_) {
        if (a.criterion == criterion && a.complemented) out.push_back(a.branch);
        if (a.criterion > criterion) break;
    }
    return out;
}

SimpleCollection SimpleCollection::prefix(CriterionId criterion) const {
    SimpleCollection out;
    for (const auto& a : attributes_) {
        if (a.criterion >= criterion) break;
        out.attributes_.push_back(a);
    }
    return out;
}

SimpleCollection SimpleCollection::without(CriterionId criterion) const {
    SimpleCollection out;
    for (const auto& a : attributes_) {
        if (a.criterion != criterion) out.attributes_.push_back(a);
    }
    return out;
}

SimpleCollection SimpleCollection::with(Attribute attribute) const {
    SimpleCollection out = *this;
    auto it = std::lower_bound(out.attributes_.begin(), out.attributes_.end(), attribute);
    if (it == out.attributes_.end() || *it != attribute) out.attributes_.insert(it, attribute);
    return out;
}

Union::Union(std::vector<SimpleCollection> components) : components_(std::move(components)) {
    std::sort(components_.begin(), components_.end());
    components_.erase(std::unique(components_.begin(), components_.end()), components_.end());
}

bool Union::has_complements() const {
    return std::any_of(components_.begin(), components_.end(),
                       [](const SimpleCollection& s) { return s.has_complements(); });
}

BranchUnionCollection::BranchUnionCollection(std::vector<BranchUnion> unions) {
    for (auto& u : unions) {
        std::sort(u.branches.begin(), u.branches.end());
        u.branches.erase(std::unique(u.branches.begin(), u.branches.end()), u.branches.end());
    }
    std::stable_sort(unions.begin(), unions.end(),
                     [](const BranchUnion& a, const BranchUnion& b) { return a.criterion < b.criterion; });
    for (auto& u : unions) {
        if (!unions_.empty() && unions_.back().criterion == u.criterion) {
            auto& target = unions_.back().branches;
            std::vector<BranchId> both;
            std::set_intersection(target.begin(), target.end(), u.branches.begin(), u.branches.end(),
                                  std::back_inserter(both));
            target = std::move(both);
        } else {
            unions_.push_back(std::move(u));
        }
    }
    for (const auto& u : unions_) {
        if (u.branches.empty()) {
            throw Error(ErrorCode::ValidationError,
                        "empty branch union on criterion " + std::to_string(u.criterion.value));
        }
    }
}

const BranchUnion* BranchUnionCollection::find(CriterionId criterion) const {
    auto it = std::lower_bound(unions_.begin(), unions_.end(), criterion,
                               [](const BranchUnion& u, CriterionId c) { return u.criterion < c; });
    return it != unions_.end() && it->criterion == criterion ? &*it : nullptr;
}

std::vector<CriterionId> BranchUnionCollection::criteria() const {
    std::vector<CriterionId> out;
    out.reserve(unions_.size());
    for (const auto& u : unions_) out.push_back(u.criterion);
    return out;
}

std::size_t BranchUnionCollection::attribute_count() const {
    std::size_t n = 0;
    for (const auto& u : unions_) n += u.branches.size();
    return n;
}

BranchUnionCollection BranchUnionCollection::from_simple(const SimpleCollection& positive) {
    std::vector<BranchUnion> unions;
    for (const auto& a : positive.attributes()) {
        if (a.complemented) {
            throw Error(ErrorCode::ValidationError,
                        "complemented attributes have no branch-union form");
        }
        unions.push_back({a.criterion, {a.branch}});
    }
    return BranchUnionCollection(std::move(unions));
}

bool Expression::is_universe_literal() const {
    if (const auto* s = simple()) return s->is_universe();
    if (const auto* b = branch_unions()) return b->is_universe();
    const auto& u = *as_union();
    return u.size() == 1 && u.components()[0].is_universe();
}

bool Expression::is_empty_literal() const {
    const auto* u = as_union();
    return u != nullptr && u->is_empty_literal();
}

std::vector<CriterionId> Expression::criteria() const {
    std::vector<CriterionId> out;
    std::visit(
        [&](const auto& f) {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, SimpleCollection>) {
                out = f.criteria();
            } else if constexpr (std::is_same_v<T, Union>) {
                for (const auto& s : f.components()) {
                    auto c = s.criteria();
                    out.insert(out.end(), c.begin(), c.end());
                }
            } else {
                out = f.criteria();
            }
        },
        form_);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Expression normalize(Union u) {
    if (u.size() == 1) return Expression(u.components()[0]);
    return Expression(std::move(u));
}

} // namespace phx
