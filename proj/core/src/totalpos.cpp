#include "rtp/totalpos.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "rtp/error.hpp"

namespace rtp {
namespace {

// Determinant of the k x k row-major block in `a`, which is destroyed.
// Bareiss: every intermediate entry is itself a minor of the input, and the
// division by the previous pivot is exact.
Rational bareiss(std::vector<Rational>& a, std::size_t k) {
  bool negate = false;
  Rational prev(1);
  for (std::size_t p = 0; p < k; ++p) {
    if (a[p * k + p].is_zero()) {
      std::size_t r = p + 1;
      while (r < k && a[r * k + p].is_zero()) ++r;
      if (r == k) return Rational();
      for (std::size_t j = p; j < k; ++j) std::swap(a[p * k + j], a[r * k + j]);
      negate = !negate;
    }
    const Rational& pivot = a[p * k + p];
    for (std::size_t i = p + 1; i < k; ++i) {
      for (std::size_t j = p + 1; j < k; ++j) {
        a[i * k + j] = (a[i * k + j] * pivot - a[i * k + p] * a[p * k + j]) / prev;
      }
    }
    prev = pivot;
  }
  Rational det = a[k * k - 1];
  return negate ? -det : det;
}

Rational small_minor(const Matrix& m, std::span<const std::size_t> rows,
                     std::span<const std::size_t> cols, std::vector<Rational>& scratch) {
  const std::size_t k = rows.size();
  if (k == 1) return m(rows[0], cols[0]);
  if (k == 2) {
    return m(rows[0], cols[0]) * m(rows[1], cols[1]) - m(rows[0], cols[1]) * m(rows[1], cols[0]);
  }
  scratch.resize(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) scratch[i * k + j] = m(rows[i], cols[j]);
  }
  return bareiss(scratch, k);
}

// Advances `c` (strictly increasing, values < n) to the next k-subset in
// lexicographic order. Returns false after the last one.
bool next_combination(IndexSet& c, std::size_t n) {
  const std::size_t k = c.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

IndexSet first_combination(std::size_t k) {
  IndexSet c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  return c;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::uint64_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

}  // namespace

Rational minor(const Matrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
  if (rows.size() != cols.size()) {
    throw PreconditionError("minor needs |I| = |J|, got " + std::to_string(rows.size()) + " and " +
                            std::to_string(cols.size()));
  }
  if (rows.empty()) throw PreconditionError("minor of order 0 requested");
  for (auto i : rows) {
    if (i >= m.rows()) throw PreconditionError("row index " + std::to_string(i) + " out of bounds");
  }
  for (auto j : cols) {
    if (j >= m.cols()) throw PreconditionError("column index " + std::to_string(j) + " out of bounds");
  }
  std::vector<Rational> scratch;
  return small_minor(m, rows, cols, scratch);
}

Rational determinant(const Matrix& m) {
  if (!m.is_square()) throw PreconditionError("determinant of a non-square matrix");
  if (m.rows() == 0) return Rational(1);
  const IndexSet all = first_combination(m.rows());
  return minor(m, all, all);
}

std::uint64_t minor_count(std::size_t n, std::size_t r) {
  std::uint64_t total = 0;
  for (std::size_t k = 1; k <= std::min(n, r); ++k) {
    const std::uint64_t c = binomial(n, k);
    total += c * c;
  }
  return total;
}

TPReport is_tp_r(const Matrix& m, std::size_t r, std::size_t n) {
  if (r == 0) throw PreconditionError("TP order must be at least 1");
  if (n > m.rows() || n > m.cols()) {
    throw PreconditionError("check size " + std::to_string(n) + " exceeds matrix " +
                            std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  TPReport report;
  report.order = r;
  report.size = n;
  std::vector<Rational> scratch;
  for (std::size_t k = 1; k <= std::min(r, n); ++k) {
    IndexSet rows = first_combination(k);
    do {
      IndexSet cols = first_combination(k);
      do {
        ++report.minors_checked;
        Rational value = small_minor(m, rows, cols, scratch);
        if (value.sign() < 0) {
          report.pass = false;
          report.witness = MinorWitness{rows, cols, std::move(value)};
          return report;
        }
      } while (next_combination(cols, n));
    } while (next_combination(rows, n));
  }
  return report;
}

TPReport is_pf_r(std::span<const Rational> seq, std::size_t r, std::size_t n) {
  return is_tp_r(toeplitz_matrix(seq, n, n), r, n);
}

SequenceCheck is_log_concave(std::span<const Rational> seq) {
  for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
    if (seq[i] * seq[i] < seq[i - 1] * seq[i + 1]) return {false, i};
  }
  return {};
}

SequenceCheck is_log_convex(std::span<const Rational> seq) {
  for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
    if (seq[i] * seq[i] > seq[i - 1] * seq[i + 1]) return {false, i};
  }
  return {};
}

TridiagParams::TridiagParams(Rational a, Rational b, Rational r, Rational s, Rational t)
    : a_(std::move(a)), b_(std::move(b)), r_(std::move(r)), s_(std::move(s)), t_(std::move(t)) {
  const std::pair<const char*, const Rational*> named[] = {
      {"a", &a_}, {"b", &b_}, {"r", &r_}, {"s", &s_}, {"t", &t_}};
  for (const auto& [name, value] : named) {
    if (value->sign() < 0) {
      throw PreconditionError(std::string("parameter ") + name + " = " + value->str() +
                              " is negative");
    }
  }
  discriminant_ = s_ * s_ - Rational(4) * r_ * t_;
}

AZPair TridiagParams::az() const { return AZPair({r_, s_, t_}, {a_, b_}); }

bool tp2_criterion(const TridiagParams& p) { return criteria_detail(p).tp2; }

bool tp_criterion(const TridiagParams& p) { return criteria_detail(p).tp; }

CriteriaDetail criteria_detail(const TridiagParams& p) {
  CriteriaDetail d;
  d.as_minus_br = p.a() * p.s() - p.b() * p.r();
  d.s2_minus_rt = p.s() * p.s() - p.r() * p.t();
  d.discriminant = p.discriminant();
  d.tp2 = d.as_minus_br.sign() >= 0 && d.s2_minus_rt.sign() >= 0;

  const Rational br = p.b() * p.r();
  bool threshold_holds = false;
  if (p.a().is_zero()) {
    // a (s + sqrt D) / 2 = 0
    threshold_holds = br.is_zero();
  } else {
    // a (s + sqrt D) / 2 >= br  <=>  sqrt D >= 2br/a - s
    Rational q = Rational(2) * br / p.a() - p.s();
    threshold_holds = q.sign() <= 0 || d.discriminant >= q * q;
    d.threshold = std::move(q);
  }
  d.tp = d.discriminant.sign() >= 0 && threshold_holds;
  return d;
}

}  // namespace rtp
