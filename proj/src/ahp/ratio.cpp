#include "ahpeval/ahp/ratio.hpp"

#include <charconv>
#include <numeric>

#include "ahpeval/error.hpp"

namespace ahpeval::ahp {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorKind::kInvalidArgument, "rational overflow");
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool parse_positive(std::string_view s, std::int64_t& out) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size() && out > 0;
}

}  // namespace

Ratio::Ratio(std::int64_t numerator, std::int64_t denominator) {
  if (numerator <= 0 || denominator <= 0) {
    throw Error(ErrorKind::kInvalidArgument, "ratio must be strictly positive: " +
                                                 std::to_string(numerator) + "/" +
                                                 std::to_string(denominator));
  }
  const auto g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

std::string Ratio::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Ratio Ratio::parse(std::string_view text) {
  const auto s = trim(text);
  const auto slash = s.find('/');
  std::int64_t p = 0;
  std::int64_t q = 1;
  const bool ok = slash == std::string_view::npos
                      ? parse_positive(s, p)
                      : parse_positive(trim(s.substr(0, slash)), p) &&
                            parse_positive(trim(s.substr(slash + 1)), q);
  if (!ok) {
    throw ParseError(0, "not a positive rational: '" + std::string(text) + "'");
  }
  return Ratio(p, q);
}

Ratio operator*(const Ratio& a, const Ratio& b) {
  const auto g1 = std::gcd(a.num_, b.den_);
  const auto g2 = std::gcd(b.num_, a.den_);
  return Ratio(checked_mul(a.num_ / g1, b.num_ / g2), checked_mul(a.den_ / g2, b.den_ / g1));
}

std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace ahpeval::ahp
