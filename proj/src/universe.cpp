#include "phx/universe.hpp"

#include "phx/error.hpp"
#include "phx/expressions.hpp"
#include "phx/text.hpp"

#include <algorithm>
#include <set>

namespace phx {

namespace {

void check_id(std::string_view what, std::string_view id) {
    if (id.empty()) throw Error(ErrorCode::InvalidName, std::string(what) + " must not be empty");
    if (std::any_of(id.begin(), id.end(), [](char ch) { return static_cast<unsigned char>(ch) < 0x20; })) {
        throw Error(ErrorCode::InvalidName, std::string(what) + " contains a control character");
    }
}

bool holds_simple(const SimpleCollection& sc, const SimpleCollection& assignment) {
    return std::all_of(sc.attributes().begin(), sc.attributes().end(), [&](const Attribute& a) {
        const auto value = assignment.positive(a.criterion);
        if (!value) return false;
        return a.complemented ? *value != a.branch : *value == a.branch;
    });
}

bool satisfies_rule(const Expression& canon, CategoryFlag flag, const GeneratingPolyhierarchy& gp,
                    const std::map<std::string, ObjectRecord, std::less<>>& objects) {
    if (flag == CategoryFlag::Root) {
        return std::any_of(gp.criteria().begin(), gp.criteria().end(),
                           [&](const Criterion& c) { return canonicalize(c.root) == canon; });
    }
    return std::any_of(objects.begin(), objects.end(),
                       [&](const auto& kv) { return Expression(kv.second.assignment) == canon; });
}

} // namespace

std::string_view category_flag_name(CategoryFlag flag) {
    return flag == CategoryFlag::Root ? "root" : "container";
}

std::optional<CategoryFlag> parse_category_flag(std::string_view text) {
    if (text == "root") return CategoryFlag::Root;
    if (text == "container") return CategoryFlag::Container;
    return std::nullopt;
}

bool holds(const Expression& e, const SimpleCollection& assignment) {
    if (const auto* s = e.simple()) return holds_simple(*s, assignment);
    if (const auto* u = e.as_union()) {
        return std::any_of(u->components().begin(), u->components().end(),
                           [&](const SimpleCollection& s) { return holds_simple(s, assignment); });
    }
    const auto unions = e.branch_unions()->unions();
    return std::all_of(unions.begin(), unions.end(), [&](const BranchUnion& u) {
        const auto value = assignment.positive(u.criterion);
        return value && std::binary_search(u.branches.begin(), u.branches.end(), *value);
    });
}

const ObjectRecord& Universe::assign(std::string id, const SimpleCollection& attributes,
                                     const GeneratingPolyhierarchy& gp, std::string payload) {
    check_id("object id", id);
    if (std::any_of(payload.begin(), payload.end(), [](char ch) { return static_cast<unsigned char>(ch) < 0x20; })) {
        throw Error(ErrorCode::InvalidName, "payload contains a control character");
    }
    if (objects_.contains(id)) throw Error(ErrorCode::DuplicateObject, "object already classified: " + id);
    if (attributes.has_complements()) {
        throw Error(ErrorCode::InconsistentAssignment, "assignments take positive attributes only");
    }
    SimpleCollection full = complete(attributes, gp);
    if (auto report = phx::validate(full, gp); !report.ok()) {
        throw Error(ErrorCode::InconsistentAssignment, report.to_string());
    }
    ObjectRecord record{id, std::move(full), std::move(payload)};
    return objects_.emplace(std::move(id), std::move(record)).first->second;
}

bool Universe::member_of(std::string_view id, const Expression& e, const GeneratingPolyhierarchy& gp) const {
    const ObjectRecord* record = find_object(id);
    if (record == nullptr) throw Error(ErrorCode::UnknownObject, "unknown object: " + std::string(id));
    require_valid(e, gp);
    return holds(e, record->assignment);
}

std::vector<std::string> Universe::members(const Expression& e, const GeneratingPolyhierarchy& gp) const {
    require_valid(e, gp);
    std::vector<std::string> out;
    for (const auto& [id, record] : objects_) {
        if (holds(e, record.assignment)) out.push_back(id);
    }
    return out;
}

std::optional<CategoryFlag> Universe::storage_class(const Expression& e, const GeneratingPolyhierarchy& gp) const {
    const Expression canon = canonicalize(e);
    for (const auto& crit : gp.criteria()) {
        if (canonicalize(crit.root) == canon) return CategoryFlag::Root;
    }
    for (const auto& [id, record] : objects_) {
        if (Expression(record.assignment) == canon) return CategoryFlag::Container;
    }
    return std::nullopt;
}

const CategoryEntry& Universe::register_category(std::string name, const Expression& e,
                                                 const GeneratingPolyhierarchy& gp,
                                                 std::optional<CategoryFlag> flag) {
    check_id("category name", name);
    if (categories_.contains(name)) throw Error(ErrorCode::DuplicateName, "category already defined: " + name);
    require_valid(e, gp);
    const Expression canon = canonicalize(e);
    if (!flag) flag = storage_class(canon, gp);
    if (!flag || !satisfies_rule(canon, *flag, gp, objects_)) {
        throw Error(ErrorCode::StorageRuleViolation,
                    format(canon, gp) + " is neither a criterion root nor the container of a classified object");
    }
    CategoryEntry entry{name, *flag, canon};
    return categories_.emplace(std::move(name), std::move(entry)).first->second;
}

CompactnessStats Universe::compactness_stats(const GeneratingPolyhierarchy& gp) const {
    std::set<std::string> stored;
    auto note = [&](const Expression& e) {
        if (!e.is_universe_literal()) stored.insert(format(e, gp));
    };
    for (const auto& crit : gp.criteria()) note(crit.root);
    for (const auto& [id, record] : objects_) note(record.assignment);
    for (const auto& [name, entry] : categories_) note(entry.expression);
    return {stored.size(), gp.size(), objects_.size()};
}

const ObjectRecord* Universe::find_object(std::string_view id) const {
    auto it = objects_.find(id);
    return it == objects_.end() ? nullptr : &it->second;
}

const CategoryEntry* Universe::find_category(std::string_view name) const {
    auto it = categories_.find(name);
    return it == categories_.end() ? nullptr : &it->second;
}

Universe Universe::from_records(std::vector<ObjectRecord> objects, std::vector<CategoryEntry> categories) {
    Universe u;
    for (auto& o : objects) {
        std::string key = o.id;
        u.objects_.insert_or_assign(std::move(key), std::move(o));
    }
    for (auto& c : categories) {
        std::string key = c.name;
        u.categories_.insert_or_assign(std::move(key), std::move(c));
    }
    return u;
}

ValidationReport Universe::validate(const GeneratingPolyhierarchy& gp) const {
    ValidationReport report;
    for (const auto& [id, record] : objects_) {
        const std::string where = "object " + quote_if_needed(id) + ": ";
        if (record.assignment.has_complements()) {
            report.add(FindingKind::InconsistentObject, where + "complemented attribute");
            continue;
        }
        auto r = phx::validate(record.assignment, gp);
        for (auto& f : r.findings) report.add(f.kind, where + f.message);
        if (!r.ok()) continue;
        try {
            if (complete(record.assignment, gp) != record.assignment) {
                report.add(FindingKind::InconsistentObject, where + "assignment is not downward-closed");
            }
        } catch (const Error& e) {
            report.add(FindingKind::InconsistentObject, where + e.what());
        }
    }
    for (const auto& [name, entry] : categories_) {
        const std::string where = "category " + quote_if_needed(name) + ": ";
        auto r = phx::validate(entry.expression, gp);
        for (auto& f : r.findings) report.add(f.kind, where + f.message);
        if (!r.ok()) continue;
        if (!satisfies_rule(canonicalize(entry.expression), entry.flag, gp, objects_)) report.add(FindingKind::StorageRule, where + "violates the storage rule");
    }
    return report;
}

} // namespace phx
