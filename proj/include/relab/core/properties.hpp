#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace relab {

enum class VerdictKind { Holds, Violated, Inapplicable };

std::string_view to_string(VerdictKind k);
std::optional<VerdictKind> verdict_kind_from_string(std::string_view s);

// Keys naming checked properties: axioms ("continuity", "restricted_solvability", ...),
// basic properties ("order_dense", ...), or per-coordinate entries "restricted_solvability@2"
// (coordinates 1-based).
namespace keys {
inline constexpr std::string_view continuity = "continuity";
inline constexpr std::string_view wold = "wold";
inline constexpr std::string_view weak_wold = "weak_wold";
inline constexpr std::string_view mixture = "mixture";
inline constexpr std::string_view archimedean = "archimedean";
inline constexpr std::string_view separate = "separate";
inline constexpr std::string_view restricted_solvability = "restricted_solvability";
inline constexpr std::string_view unrestricted_solvability = "unrestricted_solvability";
inline constexpr std::string_view stronger_rs = "stronger_rs";
inline constexpr std::string_view complete = "complete";
inline constexpr std::string_view transitive = "transitive";
inline constexpr std::string_view weakly_monotone = "weakly_monotone";
inline constexpr std::string_view order_dense = "order_dense";
inline constexpr std::string_view convex_upper = "convex_upper";
}  // namespace keys

std::string coordinate_key(std::string_view property, int coordinate_one_based);

}  // namespace relab
