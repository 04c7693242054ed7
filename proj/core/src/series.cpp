#include "rtp/series.hpp"

#include <algorithm>
#include <string>

#include "rtp/error.hpp"

namespace rtp {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw PreconditionError("series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
  std::vector<Rational> c(order + 1);
  c[0] = 1;
  return TruncatedSeries(std::move(c));
}

const Rational& TruncatedSeries::coefficient(std::size_t n) const {
  if (n > order()) {
    throw TruncationError("coefficient x^" + std::to_string(n) +
                          " lies beyond the truncation order " + std::to_string(order()));
  }
  return coefficients_[n];
}

TruncatedSeries multiply(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  const std::size_t order = std::min(lhs.order(), rhs.order());
  const auto a = lhs.coefficients();
  const auto b = rhs.coefficients();
  std::vector<Rational> out(order + 1);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries power(const TruncatedSeries& f, std::size_t k) {
  TruncatedSeries result = TruncatedSeries::one(f.order());
  TruncatedSeries base = f;
  // square-and-multiply; truncation order never changes since both share order(f)
  while (k > 0) {
    if (k & 1U) result = multiply(result, base);
    k >>= 1U;
    if (k > 0) base = multiply(base, base);
  }
  return result;
}

}  // namespace rtp
