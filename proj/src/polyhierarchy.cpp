#include "phx/polyhierarchy.hpp"

#include "phx/error.hpp"
#include "phx/expressions.hpp"
#include "phx/text.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace phx {

namespace {

void check_name(std::string_view what, std::string_view name) {
    if (name.empty()) throw Error(ErrorCode::InvalidName, std::string(what) + " must not be empty");
    for (char ch : name) {
        if (static_cast<unsigned char>(ch) < 0x20) {
            throw Error(ErrorCode::InvalidName,
                        std::string(what) + " contains a control character: " + quote_if_needed(name));
        }
    }
}

std::string criterion_tag(CriterionId id) { return "criterion #" + std::to_string(id.value); }

} // namespace

CriterionId GeneratingPolyhierarchy::add_criterion(std::string name, Expression root) {
    check_name("criterion name", name);
    if (by_name_.contains(name)) {
        throw Error(ErrorCode::DuplicateName, "criterion name already used: " + name);
    }
    ValidationReport report;
    try {
        report = phx::validate(root, *this);
    } catch (const Error& e) {
        throw Error(ErrorCode::InvalidRoot, "invalid root for " + name + ": " + e.what());
    }
    if (!report.ok()) {
        throw Error(ErrorCode::InvalidRoot, "invalid root for " + name + ":\n" + report.to_string());
    }
    CriterionId id{static_cast<std::uint32_t>(criteria_.size() + 1)};
    criteria_.push_back(Criterion{id, name, canonicalize(root), {}});
    by_name_.emplace(std::move(name), id);
    index_dependencies(criteria_.size() - 1);

    const auto& deps = direct_.back();
    std::vector<CriterionId> anc(deps.begin(), deps.end());
    for (CriterionId d : deps) {
        const auto& more = ancestors_[d.value - 1];
        anc.insert(anc.end(), more.begin(), more.end());
    }
    std::sort(anc.begin(), anc.end());
    anc.erase(std::unique(anc.begin(), anc.end()), anc.end());
    ancestors_.push_back(std::move(anc));
    return id;
}

BranchId GeneratingPolyhierarchy::add_branch(CriterionId criterion_id, std::string label) {
    if (!contains(criterion_id)) {
        throw Error(ErrorCode::UnknownCriterion, "unknown " + criterion_tag(criterion_id));
    }
    check_name("branch label", label);
    auto& c = criteria_[criterion_id.value - 1];
    for (const auto& b : c.branches) {
        if (b.label == label) {
            throw Error(ErrorCode::DuplicateLabel, "branch " + label + " already exists in " + c.name);
        }
    }
    BranchId id{static_cast<std::uint32_t>(c.branches.size() + 1)};
    c.branches.push_back(Branch{id, std::move(label)});
    return id;
}

void GeneratingPolyhierarchy::index_dependencies(std::size_t index) {
    if (direct_.size() <= index) direct_.resize(index + 1);
    direct_[index] = criteria_[index].root.criteria();
}

bool GeneratingPolyhierarchy::depends_on(CriterionId u, CriterionId v) const {
    if (!contains(u)) throw Error(ErrorCode::UnknownCriterion, "unknown " + criterion_tag(u));
    if (!contains(v)) throw Error(ErrorCode::UnknownCriterion, "unknown " + criterion_tag(v));
    if (u == v) return false;
    const auto& anc = ancestors_[u.value - 1];
    return std::binary_search(anc.begin(), anc.end(), v);
}

std::span<const CriterionId> GeneratingPolyhierarchy::direct_dependencies(CriterionId criterion) const {
    if (!contains(criterion)) {
        throw Error(ErrorCode::UnknownCriterion, "unknown " + criterion_tag(criterion));
    }
    return direct_[criterion.value - 1];
}

std::vector<std::pair<CriterionId, CriterionId>> GeneratingPolyhierarchy::dependency_edges() const {
    std::vector<std::pair<CriterionId, CriterionId>> edges;
    for (std::size_t i = 0; i < criteria_.size(); ++i) {
        for (CriterionId d : direct_[i]) edges.emplace_back(criteria_[i].id, d);
    }
    return edges;
}

std::vector<CriterionId> GeneratingPolyhierarchy::topological_order() const {
    const std::size_t n = criteria_.size();
    std::vector<std::size_t> pending(n, 0);
    std::vector<std::vector<std::size_t>> dependents(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (CriterionId d : direct_[i]) {
            if (d.value == 0 || d.value > n) continue;
            ++pending[i];
            dependents[d.value - 1].push_back(i);
        }
    }
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t i = 0; i < n; ++i) {
        if (pending[i] == 0) ready.push(i);
    }
    std::vector<CriterionId> order;
    std::vector<bool> placed(n, false);
    while (!ready.empty()) {
        std::size_t i = ready.top();
        ready.pop();
        order.push_back(criteria_[i].id);
        placed[i] = true;
        for (std::size_t j : dependents[i]) {
            if (--pending[j] == 0) ready.push(j);
        }
    }
    // Members of cycles (only possible in unchecked documents) go last.
    for (std::size_t i = 0; i < n; ++i) {
        if (!placed[i]) order.push_back(criteria_[i].id);
    }
    return order;
}

ValidationReport GeneratingPolyhierarchy::validate() const {
    ValidationReport report;
    const std::size_t n = criteria_.size();
    bool structural = true;

    std::set<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& c = criteria_[i];
        if (c.id.value != i + 1) {
            report.add(FindingKind::ForwardReference,
                       c.name + " stored out of order as " + criterion_tag(c.id));
            structural = false;
        }
        if (!names.insert(c.name).second) {
            report.add(FindingKind::DuplicateName, "criterion name repeated: " + c.name);
        }
    }

    auto check_attribute = [&](const Criterion& owner, CriterionId ref, BranchId branch) {
        if (ref.value == 0 || ref.value > n) {
            report.add(FindingKind::DanglingCriterion,
                       "root(" + owner.name + ") names missing " + criterion_tag(ref));
            structural = false;
            return;
        }
        if (ref.value >= owner.id.value) {
            report.add(FindingKind::ForwardReference,
                       "root(" + owner.name + ") names later criterion " + criteria_[ref.value - 1].name);
            structural = false;
        }
        if (branch.value == 0 || branch.value > criteria_[ref.value - 1].cardinality()) {
            report.add(FindingKind::DanglingBranch,
                       "root(" + owner.name + ") names branch #" + std::to_string(branch.value) + " of " +
                           criteria_[ref.value - 1].name + ", which has " +
                           std::to_string(criteria_[ref.value - 1].cardinality()) + " branches");
            structural = false;
        }
    };
    for (const auto& c : criteria_) {
        std::visit(
            [&](const auto& f) {
                using T = std::decay_t<decltype(f)>;
                if constexpr (std::is_same_v<T, SimpleCollection>) {
                    for (const auto& a : f.attributes()) check_attribute(c, a.criterion, a.branch);
                } else if constexpr (std::is_same_v<T, Union>) {
                    for (const auto& s : f.components()) {
                        for (const auto& a : s.attributes()) check_attribute(c, a.criterion, a.branch);
                    }
                } else {
                    for (const auto& u : f.unions()) {
                        for (BranchId b : u.branches) check_attribute(c, u.criterion, b);
                    }
                }
            },
            c.root.form());
    }

    // Cycle detection on the raw edge set.
    std::vector<std::size_t> pending(n, 0);
    std::vector<std::vector<std::size_t>> dependents(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (CriterionId d : direct_[i]) {
            if (d.value == 0 || d.value > n) continue;
            if (d.value == i + 1) {
                report.add(FindingKind::Cycle, criteria_[i].name + " depends on itself");
                structural = false;
                continue;
            }
            ++pending[i];
            dependents[d.value - 1].push_back(i);
        }
    }
    std::vector<std::size_t> queue;
    for (std::size_t i = 0; i < n; ++i) {
        if (pending[i] == 0) queue.push_back(i);
    }
    for (std::size_t k = 0; k < queue.size(); ++k) {
        for (std::size_t j : dependents[queue[k]]) {
            if (--pending[j] == 0) queue.push_back(j);
        }
    }
    if (queue.size() != n) {
        std::string members;
        for (std::size_t i = 0; i < n; ++i) {
            if (pending[i] != 0) members += (members.empty() ? "" : ", ") + criteria_[i].name;
        }
        report.add(FindingKind::Cycle, "dependency cycle through " + members);
        structural = false;
    }

    // Reachability from the imaginary root: every dependency must resolve.
    std::vector<bool> reachable(n, false);
    for (std::size_t k = 0; k < queue.size(); ++k) {
        std::size_t i = queue[k];
        bool ok = true;
        for (CriterionId d : direct_[i]) {
            if (d.value == 0 || d.value > n || !reachable[d.value - 1]) ok = false;
        }
        reachable[i] = ok;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!reachable[i]) {
            report.add(FindingKind::Unreachable, criteria_[i].name + " is not reachable from the root");
        }
    }

    if (structural) {
        for (const auto& c : criteria_) {
            auto sub = phx::validate(c.root, *this);
            for (auto& f : sub.findings) {
                report.add(FindingKind::InvalidRoot, "root(" + c.name + "): " + f.message);
            }
        }
    }
    return report;
}

bool GeneratingPolyhierarchy::contains(CriterionId criterion) const {
    return criterion.value >= 1 && criterion.value <= criteria_.size();
}

bool GeneratingPolyhierarchy::contains(CriterionId criterion, BranchId branch) const {
    return contains(criterion) && branch.value >= 1 &&
           branch.value <= criteria_[criterion.value - 1].branches.size();
}

const Criterion& GeneratingPolyhierarchy::criterion(CriterionId id) const {
    if (!contains(id)) throw Error(ErrorCode::UnknownCriterion, "unknown " + criterion_tag(id));
    return criteria_[id.value - 1];
}

const std::string& GeneratingPolyhierarchy::branch_label(CriterionId criterion_id, BranchId branch) const {
    const auto& c = criterion(criterion_id);
    if (branch.value == 0 || branch.value > c.branches.size()) {
        throw Error(ErrorCode::UnknownBranch,
                    "unknown branch #" + std::to_string(branch.value) + " of " + c.name);
    }
    return c.branches[branch.value - 1].label;
}

std::optional<CriterionId> GeneratingPolyhierarchy::find_criterion(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

std::optional<BranchId> GeneratingPolyhierarchy::find_branch(CriterionId criterion_id,
                                                           std::string_view label) const {
    if (!contains(criterion_id)) return std::nullopt;
    for (const auto& b : criteria_[criterion_id.value - 1].branches) {
        if (b.label == label) return b.id;
    }
    return std::nullopt;
}

GeneratingPolyhierarchy GeneratingPolyhierarchy::from_records(std::vector<Criterion> records) {
    GeneratingPolyhierarchy gp;
    gp.criteria_ = std::move(records);
    for (std::size_t i = 0; i < gp.criteria_.size(); ++i) {
        gp.by_name_.emplace(gp.criteria_[i].name, gp.criteria_[i].id);
        gp.index_dependencies(i);
    }
    gp.rebuild_ancestors();
    return gp;
}

void GeneratingPolyhierarchy::rebuild_ancestors() {
    const std::size_t n = criteria_.size();
    ancestors_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<bool> seen(n, false);
        std::vector<std::size_t> stack;
        for (CriterionId d : direct_[i]) {
            if (d.value >= 1 && d.value <= n) stack.push_back(d.value - 1);
        }
        while (!stack.empty()) {
            std::size_t j = stack.back();
            stack.pop_back();
            if (seen[j]) continue;
            seen[j] = true;
            for (CriterionId d : direct_[j]) {
                if (d.value >= 1 && d.value <= n) stack.push_back(d.value - 1);
            }
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (seen[j] && j != i) ancestors_[i].push_back(criteria_[j].id);
        }
    }
}

} // namespace phx
