#include "phx/error.hpp"
#include "phx/validation.hpp"

namespace phx {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidRoot: return "invalid-root";
        case ErrorCode::DuplicateName: return "duplicate-name";
        case ErrorCode::DuplicateLabel: return "duplicate-label";
        case ErrorCode::InvalidName: return "invalid-name";
        case ErrorCode::UnknownCriterion: return "unknown-criterion";
        case ErrorCode::UnknownBranch: return "unknown-branch";
        case ErrorCode::UnknownObject: return "unknown-object";
        case ErrorCode::DuplicateObject: return "duplicate-object";
        case ErrorCode::ValidationError: return "validation-error";
        case ErrorCode::ExpansionTooLarge: return "expansion-too-large";
        case ErrorCode::EmptyCollection: return "empty-collection";
        case ErrorCode::UnboundedLeafPool: return "unbounded-leaf-pool";
        case ErrorCode::InconsistentAssignment: return "inconsistent-assignment";
        case ErrorCode::StorageRuleViolation: return "storage-rule-violation";
        case ErrorCode::SyntaxError: return "syntax-error";
        case ErrorCode::IoError: return "io-error";
        case ErrorCode::FormatError: return "format-error";
        case ErrorCode::VersionUnsupported: return "version-unsupported";
        case ErrorCode::CorruptDocument: return "corrupt-document";
        case ErrorCode::TooLarge: return "too-large";
    }
    return "unknown";
}

std::string_view finding_kind_name(FindingKind kind) {
    switch (kind) {
        case FindingKind::DanglingCriterion: return "dangling-criterion";
        case FindingKind::DanglingBranch: return "dangling-branch";
        case FindingKind::ForwardReference: return "forward-reference";
        case FindingKind::Cycle: return "cycle";
        case FindingKind::Unreachable: return "unreachable";
        case FindingKind::DuplicateName: return "duplicate-name";
        case FindingKind::Exclusivity: return "exclusivity";
        case FindingKind::MissingSupport: return "missing-support";
        case FindingKind::InvalidRoot: return "invalid-root";
        case FindingKind::InconsistentObject: return "inconsistent-object";
        case FindingKind::StorageRule: return "storage-rule";
    }
    return "unknown";
}

bool ValidationReport::has(FindingKind kind) const {
    for (const auto& f : findings) {
        if (f.kind == kind) return true;
    }
    return false;
}

std::string ValidationReport::to_string() const {
    std::string out;
    for (const auto& f : findings) {
        out += finding_kind_name(f.kind);
        out += ": ";
        out += f.message;
        out += '\n';
    }
    return out;
}

} // namespace phx
