#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "rtp/matrix.hpp"
#include "rtp/rational.hpp"
#include "rtp/riordan.hpp"

namespace rtp {

// det M[rows, cols] by fraction-free (Bareiss) elimination with row pivoting.
// Throws PreconditionError on mismatched or empty index sets and on indices
// outside the matrix.
Rational minor(const Matrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols);

Rational determinant(const Matrix& m);

struct MinorWitness {
  IndexSet rows;
  IndexSet cols;
  Rational value;  // strictly negative
};

// Outcome of a TP_r check on the leading size x size block. `pass` is never
// a claim about the infinite matrix.
struct TPReport {
  bool pass = true;
  std::size_t order = 0;  // r as requested
  std::size_t size = 0;   // n
  std::uint64_t minors_checked = 0;
  std::optional<MinorWitness> witness;  // present iff !pass
};

// Number of minors a TP_r check on an n x n block evaluates: sum_{k=1}^{min(r,n)} C(n,k)^2.
std::uint64_t minor_count(std::size_t n, std::size_t r);

// Every minor of order <= r inside the leading n x n block is >= 0. Minors
// are visited in lexicographic order of (|I|, I, J) and the first negative
// one is reported, so the witness is deterministic.
// Throws PreconditionError when r == 0 or n exceeds either dimension of m.
TPReport is_tp_r(const Matrix& m, std::size_t r, std::size_t n);

// TP_r of the n x n lower-triangular Toeplitz block (a_{i-j}); entries past
// the end of seq are zero.
TPReport is_pf_r(std::span<const Rational> seq, std::size_t r, std::size_t n);

struct SequenceCheck {
  bool pass = true;
  std::optional<std::size_t> failing_index;  // interior index i where the inequality breaks
};

// seq[i]^2 >= seq[i-1] seq[i+1] for every interior i.
SequenceCheck is_log_concave(std::span<const Rational> seq);
// seq[i]^2 <= seq[i-1] seq[i+1] for every interior i.
SequenceCheck is_log_convex(std::span<const Rational> seq);

// The five parameters of the tri-diagonal production matrix with first
// column (a, b, 0, ...), superdiagonal r, diagonal s (after the corner a)
// and subdiagonal t (after b).
class TridiagParams {
 public:
  // Throws PreconditionError if any parameter is negative.
  TridiagParams(Rational a, Rational b, Rational r, Rational s, Rational t);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& r() const { return r_; }
  const Rational& s() const { return s_; }
  const Rational& t() const { return t_; }

  // s^2 - 4rt
  const Rational& discriminant() const { return discriminant_; }

  // A = (r, s, t), Z = (a, b).
  AZPair az() const;

  Matrix production(std::size_t N) const { return production_matrix(az(), N); }

 private:
  Rational a_, b_, r_, s_, t_;
  Rational discriminant_;
};

// a s >= b r and s^2 >= r t.
bool tp2_criterion(const TridiagParams& p);

// s^2 >= 4rt and a (s + sqrt(s^2 - 4rt)) / 2 >= b r, decided without
// irrational arithmetic.
bool tp_criterion(const TridiagParams& p);

// Intermediate quantities of both criteria, for reporting.
struct CriteriaDetail {
  Rational as_minus_br;
  Rational s2_minus_rt;
  Rational discriminant;
  // 2br/a - s when a > 0; the threshold inequality holds iff
  // threshold <= 0 or discriminant >= threshold^2.
  std::optional<Rational> threshold;
  bool tp2 = false;
  bool tp = false;
};

CriteriaDetail criteria_detail(const TridiagParams& p);

}  // namespace rtp
