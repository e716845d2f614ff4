#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "ahpeval/ahp/ratio.hpp"

namespace ahpeval::ahp {

// One of the 17 admissible intensities of the 1-9 fundamental scale:
// 1/9, 1/8, ..., 1/2, 1, 2, ..., 9.
class SaatyJudgment {
 public:
  constexpr SaatyJudgment() = default;

  // Throws Error(kInvalidJudgment) for anything off the scale.
  static SaatyJudgment from_ratio(const Ratio& value);
  static SaatyJudgment integer(int k) { return from_ratio(Ratio(k)); }
  static SaatyJudgment inverse_of(int k) { return from_ratio(Ratio(1, k)); }

  // Strict textual match: "k" or "1/k" with k in 1..9, surrounding
  // whitespace allowed. No decimals, no other fractions.
  static std::optional<SaatyJudgment> try_parse(std::string_view text);
  static SaatyJudgment parse(std::string_view text);

  static bool admissible(const Ratio& value) noexcept;

  // Nearest admissible value to `x` > 0 in log space. Exact ties go to the
  // candidate closer to 1, so snap(1/x) == 1/snap(x).
  static SaatyJudgment nearest_in_log_space(double x);

  static const std::array<SaatyJudgment, 17>& all();

  const Ratio& value() const noexcept { return value_; }
  SaatyJudgment reciprocal() const noexcept { return SaatyJudgment(value_.reciprocal()); }
  double to_double() const noexcept { return value_.to_double(); }

  friend bool operator==(const SaatyJudgment&, const SaatyJudgment&) = default;

 private:
  explicit SaatyJudgment(Ratio value) : value_(value) {}
  Ratio value_;
};

// Verbal anchor for odd intensities >= 1 ("moderate", "strong", ...);
// empty for intermediates.
std::string_view verbal_label(const SaatyJudgment& judgment);

}  // namespace ahpeval::ahp
