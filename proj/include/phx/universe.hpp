#ifndef PHX_UNIVERSE_HPP
#define PHX_UNIVERSE_HPP

#include "phx/expression.hpp"
#include "phx/polyhierarchy.hpp"
#include "phx/validation.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace phx {

struct ObjectRecord {
    std::string id;
    SimpleCollection assignment; // positive, downward-closed
    std::string payload;

    bool operator==(const ObjectRecord&) const = default;
};

enum class CategoryFlag { Root, Container };

std::string_view category_flag_name(CategoryFlag flag);
std::optional<CategoryFlag> parse_category_flag(std::string_view text);

struct CategoryEntry {
    std::string name;
    CategoryFlag flag;
    Expression expression;

    bool operator==(const CategoryEntry&) const = default;
};

struct CompactnessStats {
    std::size_t stored_expressions = 0;
    std::size_t criteria_count = 0;
    std::size_t object_count = 0;
};

/// Evaluates `e` on a partial assignment. A criterion missing from the
/// assignment satisfies neither a positive nor a complemented attribute.
bool holds(const Expression& e, const SimpleCollection& assignment);

/// Classified objects and the persistent category registry.
///
/// Only root categories and categories equal to some object's container are
/// stored, so the stored expression count never exceeds criteria + objects.
class Universe {
public:
    /// Completes the downward closure and stores the record. Throws
    /// InconsistentAssignment, UnknownCriterion, UnknownBranch,
    /// DuplicateObject, InvalidName.
    const ObjectRecord& assign(std::string id, const SimpleCollection& attributes, const GeneratingPolyhierarchy& gp,
                               std::string payload = {});

    /// Throws UnknownObject.
    bool member_of(std::string_view id, const Expression& e, const GeneratingPolyhierarchy& gp) const;
    /// Ids in ascending order.
    std::vector<std::string> members(const Expression& e, const GeneratingPolyhierarchy& gp) const;

    /// Without a flag the storage class is detected. Throws DuplicateName,
    /// StorageRuleViolation, ValidationError.
    const CategoryEntry& register_category(std::string name, const Expression& e, const GeneratingPolyhierarchy& gp,
                                           std::optional<CategoryFlag> flag = std::nullopt);
    std::optional<CategoryFlag> storage_class(const Expression& e, const GeneratingPolyhierarchy& gp) const;

    CompactnessStats compactness_stats(const GeneratingPolyhierarchy& gp) const;

    const std::map<std::string, ObjectRecord, std::less<>>& objects() const { return objects_; }
    const std::map<std::string, CategoryEntry, std::less<>>& categories() const { return categories_; }
    const ObjectRecord* find_object(std::string_view id) const;
    const CategoryEntry* find_category(std::string_view name) const;

    /// Records as stored, without checking. Use validate() afterwards.
    static Universe from_records(std::vector<ObjectRecord> objects, std::vector<CategoryEntry> categories);
    ValidationReport validate(const GeneratingPolyhierarchy& gp) const;

    bool operator==(const Universe&) const = default;

private:
    std::map<std::string, ObjectRecord, std::less<>> objects_;
    std::map<std::string, CategoryEntry, std::less<>> categories_;
};

} // namespace phx

#endif
