#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace relab {

enum class Comparison { Succ, Prec, Indiff, Incomp };

constexpr Comparison converse(Comparison c) {
  switch (c) {
    case Comparison::Succ: return Comparison::Prec;
    case Comparison::Prec: return Comparison::Succ;
    default: return c;
  }
}

// a >= b in the weak sense.
constexpr bool weakly_above(Comparison c) { return c == Comparison::Succ || c == Comparison::Indiff; }
constexpr bool weakly_below(Comparison c) { return c == Comparison::Prec || c == Comparison::Indiff; }

std::string_view to_string(Comparison c);
std::optional<Comparison> comparison_from_string(std::string_view s);

}  // namespace relab
