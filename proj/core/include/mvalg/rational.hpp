#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace mvalg {

/// Exact rational with a positive denominator, always kept in lowest terms.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "k/d", denominators included even when 1 (e.g. "1/1", "0/1").
  std::string to_string() const;

  /// Parses "k/d" or a bare integer "k"; throws SchemaError otherwise.
  static Rational parse(std::string_view text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Truncated addition on [0,1]: min(a + b, 1).
Rational truncated_add(const Rational& a, const Rational& b);

/// 1 - a.
Rational complement(const Rational& a);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace mvalg
