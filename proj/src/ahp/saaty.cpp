#include "ahpeval/ahp/saaty.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "ahpeval/error.hpp"

namespace ahpeval::ahp {

bool SaatyJudgment::admissible(const Ratio& value) noexcept {
  const bool integer = value.den() == 1 && value.num() >= 1 && value.num() <= 9;
  const bool inverse = value.num() == 1 && value.den() >= 1 && value.den() <= 9;
  return integer || inverse;
}

SaatyJudgment SaatyJudgment::from_ratio(const Ratio& value) {
  if (!admissible(value)) {
    throw Error(ErrorKind::kInvalidJudgment,
                "'" + value.to_string() + "' is not a Saaty intensity (1/9..9)");
  }
  return SaatyJudgment(value);
}

std::optional<SaatyJudgment> SaatyJudgment::try_parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  auto digit = [](char c) { return c >= '1' && c <= '9'; };
  if (text.size() == 1 && digit(text[0])) {
    return SaatyJudgment(Ratio(text[0] - '0'));
  }
  if (text.size() == 3 && text[0] == '1' && text[1] == '/' && digit(text[2])) {
    return SaatyJudgment(Ratio(1, text[2] - '0'));
  }
  return std::nullopt;
}

SaatyJudgment SaatyJudgment::parse(std::string_view text) {
  if (auto j = try_parse(text)) return *j;
  throw Error(ErrorKind::kInvalidJudgment,
              "'" + std::string(text) + "' is not a Saaty intensity (expected k or 1/k, k=1..9)");
}

const std::array<SaatyJudgment, 17>& SaatyJudgment::all() {
  static const std::array<SaatyJudgment, 17> values = [] {
    std::array<SaatyJudgment, 17> out{};
    std::size_t k = 0;
    for (int d = 9; d >= 2; --d) out[k++] = SaatyJudgment(Ratio(1, d));
    for (int v = 1; v <= 9; ++v) out[k++] = SaatyJudgment(Ratio(v));
    return out;
  }();
  return values;
}

SaatyJudgment SaatyJudgment::nearest_in_log_space(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw Error(ErrorKind::kInvalidArgument, "cannot snap non-positive value to Saaty scale");
  }
  const double lx = std::log(x);
  const SaatyJudgment* best = nullptr;
  double best_distance = 0.0;
  for (const auto& candidate : all()) {
    const double lc = std::log(candidate.to_double());
    const double d = std::abs(lx - lc);
    if (best == nullptr) {
      best = &candidate;
      best_distance = d;
      continue;
    }
    const double scale = std::max(1.0, std::abs(lx));
    if (d < best_distance - 1e-12 * scale) {
      best = &candidate;
      best_distance = d;
    } else if (std::abs(d - best_distance) <= 1e-12 * scale &&
               std::abs(lc) < std::abs(std::log(best->to_double()))) {
      best = &candidate;
      best_distance = d;
    }
  }
  return *best;
}

std::string_view verbal_label(const SaatyJudgment& judgment) {
  const auto& v = judgment.value();
  if (v.den() != 1) return {};
  switch (v.num()) {
    case 1: return "nominal";
    case 3: return "moderate";
    case 5: return "strong";
    case 7: return "very strong";
    case 9: return "extreme";
    default: return {};
  }
}

}  // namespace ahpeval::ahp
