#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace ahpeval::ahp {

// Strictly positive rational number kept in lowest terms. Judgment matrices
// store these so that a_ji * a_ij == 1 holds exactly.
class Ratio {
 public:
  constexpr Ratio() = default;
  Ratio(std::int64_t numerator, std::int64_t denominator);
  explicit Ratio(std::int64_t integer) : Ratio(integer, 1) {}

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  Ratio reciprocal() const noexcept { return Ratio(Raw{}, den_, num_); }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  bool is_one() const noexcept { return num_ == 1 && den_ == 1; }

  // "p/q", or "p" when q == 1.
  std::string to_string() const;
  // Accepts "p", "p/q" with positive integers p, q. Throws Error(kParse).
  static Ratio parse(std::string_view text);

  friend Ratio operator*(const Ratio& a, const Ratio& b);
  friend bool operator==(const Ratio&, const Ratio&) = default;
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b);

 private:
  struct Raw {};
  constexpr Ratio(Raw, std::int64_t n, std::int64_t d) : num_(n), den_(d) {}

  std::int64_t num_ = 1;
  std::int64_t den_ = 1;
};

}  // namespace ahpeval::ahp
