#include "rtp/riordan.hpp"

#include <algorithm>
#include <string>

#include "rtp/error.hpp"

namespace rtp {
namespace {

const Rational kZero;

std::string entry_name(std::size_t n, std::size_t k) {
  return "r(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

}  // namespace

RiordanTriangle::RiordanTriangle(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw PreconditionError("triangle needs at least row 0");
  for (std::size_t n = 0; n < rows_.size(); ++n) {
    if (rows_[n].size() != n + 1) {
      throw PreconditionError("triangle row " + std::to_string(n) + " has " +
                              std::to_string(rows_[n].size()) + " entries, expected " +
                              std::to_string(n + 1));
    }
  }
}

const Rational& RiordanTriangle::at(std::size_t n, std::size_t k) const {
  if (n >= rows_.size()) {
    throw PreconditionError("row " + std::to_string(n) + " beyond triangle size " +
                            std::to_string(size()));
  }
  return k <= n ? rows_[n][k] : kZero;
}

std::vector<Rational> RiordanTriangle::column(std::size_t k) const {
  std::vector<Rational> out;
  out.reserve(rows_.size());
  for (std::size_t n = 0; n < rows_.size(); ++n) out.push_back(at(n, k));
  return out;
}

Matrix RiordanTriangle::to_matrix(std::size_t n) const {
  if (n > rows_.size()) {
    throw PreconditionError("requested " + std::to_string(n) + "x" + std::to_string(n) +
                            " block of a triangle with " + std::to_string(rows_.size()) + " rows");
  }
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k <= i; ++k) m(i, k) = rows_[i][k];
  }
  return m;
}

bool RiordanTriangle::has_nonzero_diagonal() const {
  return std::ranges::none_of(rows_, [](const auto& row) { return row.back().is_zero(); });
}

AZPair::AZPair(std::vector<Rational> a, std::vector<Rational> z)
    : a_(std::move(a)), z_(std::move(z)), stated_a_(a_.size()), stated_z_(z_.size()) {}

AZPair AZPair::padded(std::size_t length) const {
  AZPair out = *this;
  if (out.a_.size() < length) out.a_.resize(length);
  if (out.z_.size() < length) out.z_.resize(length);
  return out;
}

bool AZPair::same_sequences(const AZPair& other) const {
  const std::size_t na = std::max(a_.size(), other.a_.size());
  const std::size_t nz = std::max(z_.size(), other.z_.size());
  for (std::size_t i = 0; i < na; ++i) {
    if (a_at(i) != other.a_at(i)) return false;
  }
  for (std::size_t i = 0; i < nz; ++i) {
    if (z_at(i) != other.z_at(i)) return false;
  }
  return true;
}

RiordanTriangle triangle_from_gf(const TruncatedSeries& g, const TruncatedSeries& f, std::size_t N) {
  if (g.order() < N) {
    throw PreconditionError("g is truncated at order " + std::to_string(g.order()) +
                            " but " + std::to_string(N) + " rows were requested");
  }
  if (f.order() < N || f.order() < 1) {
    throw PreconditionError("f is truncated at order " + std::to_string(f.order()) +
                            " but order " + std::to_string(std::max<std::size_t>(N, 1)) +
                            " is required");
  }
  if (g.coefficient(0).is_zero()) throw PreconditionError("g_0 = 0 (g must be invertible)");
  if (!f.coefficient(0).is_zero()) throw PreconditionError("f_0 != 0 (f must have no constant term)");
  if (f.coefficient(1).is_zero()) throw PreconditionError("f_1 = 0 (f must have a nonzero linear term)");

  std::vector<std::vector<Rational>> rows(N + 1);
  for (std::size_t n = 0; n <= N; ++n) rows[n].resize(n + 1);

  // column k is g * f^k; f^k is built incrementally
  TruncatedSeries fk = TruncatedSeries::one(f.order());
  for (std::size_t k = 0; k <= N; ++k) {
    const TruncatedSeries column = multiply(g, fk);
    for (std::size_t n = 0; n < k; ++n) {
      if (!column.coefficient(n).is_zero()) {
        throw InternalError("g*f^" + std::to_string(k) + " has a nonzero coefficient above row " +
                            std::to_string(k));
      }
    }
    for (std::size_t n = k; n <= N; ++n) rows[n][k] = column.coefficient(n);
    fk = multiply(fk, f);
  }
  return RiordanTriangle(std::move(rows));
}

RiordanTriangle triangle_from_az(const AZPair& az, std::size_t N) {
  std::vector<std::vector<Rational>> rows(N + 1);
  rows[0] = {Rational(1)};
  for (std::size_t n = 0; n < N; ++n) {
    const auto& prev = rows[n];
    auto& next = rows[n + 1];
    next.resize(n + 2);
    for (std::size_t i = 0; i <= n; ++i) {
      if (!prev[i].is_zero()) next[0] += az.z_at(i) * prev[i];
    }
    for (std::size_t k = 0; k <= n; ++k) {
      Rational sum;
      for (std::size_t i = 0; k + i <= n; ++i) {
        if (!prev[k + i].is_zero()) sum += az.a_at(i) * prev[k + i];
      }
      next[k + 1] = std::move(sum);
    }
  }
  return RiordanTriangle(std::move(rows));
}

Matrix production_matrix(const AZPair& az, std::size_t N) {
  Matrix m(N + 1, N + 1);
  for (std::size_t i = 0; i <= N; ++i) {
    m(i, 0) = az.z_at(i);
    for (std::size_t j = 1; j <= std::min(N, i + 1); ++j) m(i, j) = az.a_at(i + 1 - j);
  }
  return m;
}

AZPair extract_az(const RiordanTriangle& triangle) {
  const std::size_t N = triangle.size();
  if (N < 1) throw PreconditionError("extract_az needs at least rows 0 and 1");

  std::vector<Rational> a(N);
  std::vector<Rational> z(N);
  for (std::size_t n = 0; n < N; ++n) {
    const Rational& pivot = triangle.at(n, n);
    if (pivot.is_zero()) {
      throw PreconditionError("singular system: zero diagonal entry " + entry_name(n, n) +
                              " at row " + std::to_string(n));
    }
    // r(n+1,0) = sum_{i<=n} z_i r(n,i) and r(n+1,1) = sum_{i<=n} a_i r(n,i);
    // the last unknown in each carries the coefficient r(n,n).
    Rational zs = triangle.at(n + 1, 0);
    Rational as = triangle.at(n + 1, 1);
    for (std::size_t i = 0; i < n; ++i) {
      zs -= z[i] * triangle.at(n, i);
      as -= a[i] * triangle.at(n, i);
    }
    z[n] = zs / pivot;
    a[n] = as / pivot;
  }

  AZPair az(std::move(a), std::move(z));
  for (std::size_t n = 0; n < N; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      Rational sum;
      for (std::size_t i = 0; k + i <= n; ++i) sum += az.a_at(i) * triangle.at(n, k + i);
      if (sum != triangle.at(n + 1, k + 1)) {
        throw PreconditionError("not a Riordan array: " + entry_name(n + 1, k + 1) +
                                " disagrees with the A-sequence recovered from columns 0 and 1");
      }
    }
  }
  return az;
}

Matrix toeplitz_matrix(std::span<const Rational> a, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j <= i && j < cols; ++j) {
      if (i - j < a.size()) m(i, j) = a[i - j];
    }
  }
  return m;
}

Matrix shift_matrix(const Rational& t, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  if (rows > 0 && cols > 0) m(0, 0) = t;
  for (std::size_t i = 0; i < rows; ++i) {
    if (i + 1 < cols) m(i, i + 1) = 1;
  }
  return m;
}

ConsistentFactorization factor_consistent(std::span<const Rational> a, const Rational& t,
                                          FactorSide side, std::size_t N) {
  if (a.empty()) throw PreconditionError("A-sequence is empty");
  const std::size_t n = N + 1;
  std::vector<Rational> av(a.begin(), a.end());
  auto at = [&](std::size_t i) { return i < av.size() ? av[i] : Rational(); };

  if (side == FactorSide::right) {
    std::vector<Rational> z;
    z.reserve(av.size());
    for (const auto& ai : av) z.push_back(t * ai);
    AZPair az(av, std::move(z));
    return {toeplitz_matrix(av, n, n), shift_matrix(t, n, n), production_matrix(az, N), az};
  }

  std::vector<Rational> z{t * at(0) + at(1)};
  for (std::size_t i = 2; i < av.size(); ++i) z.push_back(av[i]);
  AZPair az(av, std::move(z));
  return {shift_matrix(t, n, n + 1), toeplitz_matrix(av, n + 1, n), production_matrix(az, N), az};
}

}  // namespace rtp
