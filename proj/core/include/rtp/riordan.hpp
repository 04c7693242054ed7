#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rtp/matrix.hpp"
#include "rtp/rational.hpp"
#include "rtp/series.hpp"

namespace rtp {

// Lower-triangular array r(n, k), rows 0..size(). Entries above the diagonal
// are zero and not stored.
class RiordanTriangle {
 public:
  // Row n must hold exactly n + 1 entries; at least one row.
  explicit RiordanTriangle(std::vector<std::vector<Rational>> rows);

  // Largest row index N.
  std::size_t size() const { return rows_.size() - 1; }

  // r(n, k); zero for k > n. Throws PreconditionError for n > size().
  const Rational& at(std::size_t n, std::size_t k) const;
  std::span<const Rational> row(std::size_t n) const { return rows_.at(n); }

  // (r(0,k), ..., r(N,k)), zeros above the diagonal included.
  std::vector<Rational> column(std::size_t k) const;

  // Leading n x n block as a dense matrix; defaults to the full (N+1) x (N+1).
  Matrix to_matrix() const { return to_matrix(rows_.size()); }
  Matrix to_matrix(std::size_t n) const;

  // Every r(n, n) is nonzero. Holds for proper arrays; needed by extract_az.
  bool has_nonzero_diagonal() const;

  friend bool operator==(const RiordanTriangle&, const RiordanTriangle&) = default;

 private:
  std::vector<std::vector<Rational>> rows_;
};

// A- and Z-sequences. Entries past the stated length read as zero; the
// stated lengths are kept so padding is never confused with data.
class AZPair {
 public:
  AZPair(std::vector<Rational> a, std::vector<Rational> z);

  std::span<const Rational> a() const { return a_; }
  std::span<const Rational> z() const { return z_; }
  std::size_t stated_a_length() const { return stated_a_; }
  std::size_t stated_z_length() const { return stated_z_; }

  Rational a_at(std::size_t i) const { return i < a_.size() ? a_[i] : Rational(); }
  Rational z_at(std::size_t i) const { return i < z_.size() ? z_[i] : Rational(); }

  // Copy whose sequences are zero-extended to at least `length` entries.
  // Stated lengths are preserved.
  AZPair padded(std::size_t length) const;

  // Equal as sequences once both are zero-padded to a common length.
  bool same_sequences(const AZPair& other) const;

  friend bool operator==(const AZPair&, const AZPair&) = default;

 private:
  std::vector<Rational> a_;
  std::vector<Rational> z_;
  std::size_t stated_a_ = 0;
  std::size_t stated_z_ = 0;
};

// r(n, k) = [x^n] g(x) f(x)^k for 0 <= k <= n <= N.
// Requires g_0 != 0, f_0 = 0, f_1 != 0 and both orders >= N.
RiordanTriangle triangle_from_gf(const TruncatedSeries& g, const TruncatedSeries& f, std::size_t N);

// Rows 0..N from r(0,0) = 1 and the A/Z recurrences. A may start with zero,
// in which case the result has a zero diagonal (not a proper array).
RiordanTriangle triangle_from_az(const AZPair& az, std::size_t N);

// (N+1) x (N+1) leading block of the production matrix: column 0 is Z, and
// entry (i, j) for j >= 1 is a_{i-j+1} (zero when i < j - 1).
Matrix production_matrix(const AZPair& az, std::size_t N);

// Recovers a_0..a_{N-1} and z_0..z_{N-1} row by row. Throws
// PreconditionError on a zero diagonal entry or when some row disagrees with
// the recovered sequences (the triangle is not a Riordan array).
AZPair extract_az(const RiordanTriangle& triangle);

// Lower-triangular Toeplitz block (a_{i-j}) with the given shape.
Matrix toeplitz_matrix(std::span<const Rational> a, std::size_t rows, std::size_t cols);

// Block of the matrix with first row (t, 1, 0, ...) and ones on the
// superdiagonal below it.
Matrix shift_matrix(const Rational& t, std::size_t rows, std::size_t cols);

enum class FactorSide {
  right,  // Z = (t a_0, t a_1, ...),      J = Toeplitz(A) * S_t
  left,   // Z = (t a_0 + a_1, a_2, ...),  J = S_t * Toeplitz(A)
};

struct ConsistentFactorization {
  Matrix first;       // left factor of the product
  Matrix second;      // right factor of the product
  Matrix production;  // production_matrix(az, N), built independently
  AZPair az;
};

// The two factorizations of production matrices whose Z-sequence is built
// from A and t. For side == left the factors are (N+1) x (N+2) and
// (N+2) x (N+1) so that the product is exact in the last row as well.
ConsistentFactorization factor_consistent(std::span<const Rational> a, const Rational& t,
                                          FactorSide side, std::size_t N);

}  // namespace rtp
