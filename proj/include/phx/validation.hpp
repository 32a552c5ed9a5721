#ifndef PHX_VALIDATION_HPP
#define PHX_VALIDATION_HPP

#include <string>
#include <string_view>
#include <vector>

namespace phx {

enum class FindingKind {
    DanglingCriterion,
    DanglingBranch,
    ForwardReference,
    Cycle,
    Unreachable,
    DuplicateName,
    Exclusivity,
    MissingSupport,
    InvalidRoot,
    InconsistentObject,
    StorageRule,
};

std::string_view finding_kind_name(FindingKind kind);

struct Finding {
    FindingKind kind;
    std::string message;
};

struct ValidationReport {
    std::vector<Finding> findings;

    bool ok() const { return findings.empty(); }
    bool has(FindingKind kind) const;
    void add(FindingKind kind, std::string message) {
        findings.push_back({kind, std::move(message)});
    }
    /// One finding per line, "kind: message".
    std::string to_string() const;
};

} // namespace phx

#endif
