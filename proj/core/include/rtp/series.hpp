#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rtp/rational.hpp"

namespace rtp {

// Formal power series known exactly up to x^order. Coefficients past the
// order are unknown, not zero: reading them is an error, and every operation
// truncates to the smallest order among its inputs.
class TruncatedSeries {
 public:
  // Throws PreconditionError when coefficients is empty.
  explicit TruncatedSeries(std::vector<Rational> coefficients);

  // 1 + 0x + ... + 0x^order
  static TruncatedSeries one(std::size_t order);

  std::size_t order() const { return coefficients_.size() - 1; }
  std::span<const Rational> coefficients() const { return coefficients_; }

  // [x^n] of the series. Throws TruncationError when n > order().
  const Rational& coefficient(std::size_t n) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Rational> coefficients_;
};

// Cauchy product truncated to min(order(lhs), order(rhs)).
TruncatedSeries multiply(const TruncatedSeries& lhs, const TruncatedSeries& rhs);
inline TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  return multiply(lhs, rhs);
}

// f^k truncated to order(f); f^0 = 1.
TruncatedSeries power(const TruncatedSeries& f, std::size_t k);

}  // namespace rtp
