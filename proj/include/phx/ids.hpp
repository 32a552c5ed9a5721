#ifndef PHX_IDS_HPP
#define PHX_IDS_HPP

#include <compare>
#include <cstdint>
#include <functional>

namespace phx {

/// Criterion identifier. Values are assigned in insertion order, which is
/// also the generality order: a criterion only depends on smaller ids.
/// Zero is reserved for the imaginary root criterion and never stored.
struct CriterionId {
    std::uint32_t value = 0;

    constexpr auto operator<=>(const CriterionId&) const = default;
};

inline constexpr CriterionId kRootCriterion{0};

/// Branch identifier, 1-based and unique within its criterion.
struct BranchId {
    std::uint32_t value = 0;

    constexpr auto operator<=>(const BranchId&) const = default;
};

} // namespace phx

template <>
struct std::hash<phx::CriterionId> {
    std::size_t operator()(phx::CriterionId id) const noexcept { return id.value; }
};

#endif
