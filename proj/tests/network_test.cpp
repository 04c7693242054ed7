#include <gtest/gtest.h>

#include <numeric>
#include <string>

#include "oracles.hpp"
#include "rtp/error.hpp"
#include "rtp/network.hpp"
#include "rtp/riordan.hpp"

namespace rtp {
namespace {

using testing::mat;
using testing::Random;
using testing::seq;

std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> out(n);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

TridiagParams params(long a, long b, long r, long s, long t) { return {a, b, r, s, t}; }

// Arbitrary layered network, crossings allowed, weights may be negative.
WeightedNetwork random_network(Random& rng, std::size_t max_layers, std::size_t max_width) {
  const auto layers = static_cast<std::size_t>(rng.integer(2, static_cast<long>(max_layers)));
  std::vector<std::size_t> widths(layers);
  for (auto& w : widths) w = static_cast<std::size_t>(rng.integer(1, static_cast<long>(max_width)));
  std::vector<Arc> arcs;
  for (std::size_t l = 0; l + 1 < layers; ++l) {
    for (std::size_t t = 0; t < widths[l]; ++t) {
      for (std::size_t h = 0; h < widths[l + 1]; ++h) {
        if (rng.integer(0, 1) == 0) arcs.push_back({{l, t}, {l + 1, h}, rng.integer(-2, 3)});
      }
    }
  }
  return WeightedNetwork(widths, std::move(arcs), iota(widths.front()), iota(widths.back()),
                         Planarity::nonplanar);
}

std::string error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return "no error";
}

TEST(WeightedNetwork, Validation) {
  const std::vector<Arc> crossing = {{{0, 0}, {1, 1}, 1}, {{0, 1}, {1, 0}, 1}};
  EXPECT_THROW(WeightedNetwork({2, 2}, crossing, {0, 1}, {0, 1}, Planarity::planar), PreconditionError);
  EXPECT_NO_THROW(WeightedNetwork({2, 2}, crossing, {0, 1}, {0, 1}, Planarity::nonplanar));
  EXPECT_THROW(WeightedNetwork({1, 1, 1}, {{{0, 0}, {2, 0}, 1}}, {0}, {0}, Planarity::planar),
               PreconditionError);
  EXPECT_THROW(WeightedNetwork({2, 2}, {{{0, 0}, {1, 2}, 1}}, {0}, {0}, Planarity::planar),
               PreconditionError);
  EXPECT_THROW(WeightedNetwork({2, 2}, {}, {1, 0}, {0}, Planarity::planar), PreconditionError);
  EXPECT_THROW(WeightedNetwork({2}, {}, {0}, {0}, Planarity::planar), PreconditionError);
}

TEST(PathWeightMatrix, BidiagonalExamples) {
  const auto upper = bidiagonal_network(seq({1, 2, 3}), seq({4, 5}), BidiagonalOrientation::upper);
  EXPECT_EQ(path_weight_matrix(upper), mat({{1, 4, 0}, {0, 2, 5}, {0, 0, 3}}));
  const auto lower = bidiagonal_network(seq({1, 2}), seq({7, 8}), BidiagonalOrientation::lower);
  EXPECT_EQ(path_weight_matrix(lower), mat({{1, 0}, {7, 2}, {0, 8}}));
  EXPECT_EQ(path_weight_matrix(upper.with_sinks(2)), mat({{1, 4}, {0, 2}, {0, 0}}));
}

TEST(PathWeightMatrix, SumsOverParallelRoutes) {
  // two routes 0 -> 0: through middle rows 0 and 1
  const WeightedNetwork net({1, 2, 1},
                            {{{0, 0}, {1, 0}, 2}, {{0, 0}, {1, 1}, 3}, {{1, 0}, {2, 0}, 5},
                             {{1, 1}, {2, 0}, 7}},
                            {0}, {0}, Planarity::planar);
  EXPECT_EQ(path_weight_matrix(net), mat({{31}}));
}

TEST(Tp2Network, ReproducesProductionAndItsMinors) {
  for (const auto& p : {params(1, 1, 1, 2, 1), params(1, 3, 1, 2, 1), params(2, 1, 3, 2, 1)}) {
    const auto net = tridiag_tp2_network(p, 4);
    EXPECT_FALSE(net.is_planar());
    EXPECT_EQ(path_weight_matrix(net), p.production(3));
    const std::size_t first[] = {0, 1};
    const std::size_t second[] = {1, 2};
    EXPECT_EQ(lgv_signed_determinant(net, first, first), p.a() * p.s() - p.b() * p.r());
    EXPECT_EQ(lgv_signed_determinant(net, second, second), p.s() * p.s() - p.r() * p.t());
  }
}

TEST(Compatibility, Examples) {
  const auto bidiag = bidiagonal_network(seq({1, 1, 1}), seq({1, 1}), BidiagonalOrientation::upper);
  EXPECT_TRUE(check_full_compatibility(bidiag, 3));

  const auto tp2 = tridiag_tp2_network(params(1, 1, 1, 2, 1), 3);
  const std::size_t pair[] = {0, 1};
  // U0 -> V1 and U1 -> V0 are vertex-disjoint, so the swap admits a family
  EXPECT_FALSE(check_compatibility(tp2, pair, pair));
  EXPECT_FALSE(check_full_compatibility(tp2, 3));
  EXPECT_THROW(lgv_nonintersecting_sum(tp2, pair, pair), PreconditionError);
}

TEST(Compatibility, NonintersectingSumOnPlanarExample) {
  const auto net = bidiagonal_network(seq({1, 2, 3}), seq({4, 5}), BidiagonalOrientation::upper);
  const std::size_t rows[] = {0, 1};
  const std::size_t cols[] = {1, 2};
  EXPECT_EQ(lgv_nonintersecting_sum(net, rows, cols), Rational(20));
  EXPECT_EQ(lgv_signed_determinant(net, rows, cols), Rational(20));
}

TEST(OracleCaps, ExceedingACapThrows) {
  const auto net = tridiag_tp2_network(params(1, 1, 1, 2, 1), 6);
  const std::size_t rows[] = {0, 1, 2};
  OracleCaps caps;
  caps.max_order = 2;
  EXPECT_THROW(lgv_signed_determinant(net, rows, rows, caps), CapExceededError);
  caps = {};
  caps.max_families = 1;
  EXPECT_THROW(lgv_signed_determinant(net, rows, rows, caps), CapExceededError);
}

TEST(PlanarTridiag, PositiveA) {
  const auto result = tridiag_planar_network(params(1, 1, 1, 2, 1), 4);
  EXPECT_EQ(result.kind, TridiagCase::positive_a);
  EXPECT_EQ(result.k, seq({1, 1, 1, 1}));
  EXPECT_EQ(result.l, seq({1, 1, 1}));
  EXPECT_TRUE(result.network.is_planar());
  EXPECT_EQ(path_weight_matrix(result.network), params(1, 1, 1, 2, 1).production(3));
}

TEST(PlanarTridiag, ZeroA) {
  const auto result = tridiag_planar_network(params(0, 0, 1, 2, 1), 4);
  EXPECT_EQ(result.kind, TridiagCase::zero_a);
  EXPECT_EQ(result.k, (std::vector<Rational>{0, 2, Rational(3, 2), Rational(4, 3)}));
  EXPECT_EQ(result.l, (std::vector<Rational>{0, Rational(1, 2), Rational(2, 3)}));
}

TEST(PlanarTridiag, BidiagonalCases) {
  const auto r_zero = tridiag_planar_network(params(1, 2, 0, 3, 4), 4);
  EXPECT_EQ(r_zero.kind, TridiagCase::bidiagonal_r_zero);
  EXPECT_EQ(path_weight_matrix(r_zero.network),
            mat({{1, 0, 0, 0}, {2, 3, 0, 0}, {0, 4, 3, 0}, {0, 0, 4, 3}}));
  const auto s_zero = tridiag_planar_network(params(2, 0, 1, 0, 0), 3);
  EXPECT_EQ(s_zero.kind, TridiagCase::bidiagonal_s_zero);
  EXPECT_EQ(path_weight_matrix(s_zero.network), mat({{2, 1, 0}, {0, 0, 1}, {0, 0, 0}}));
}

TEST(PlanarTridiag, NamesTheFailingInequality) {
  EXPECT_NE(error_of([] { tridiag_planar_network(params(1, 1, 1, 1, 1), 3); }).find("s^2 >= 4rt"),
            std::string::npos);
  EXPECT_NE(error_of([] { tridiag_planar_network(params(0, 1, 1, 2, 1), 3); }).find(">= br"),
            std::string::npos);
  EXPECT_NE(error_of([] { tridiag_planar_network(params(1, 3, 1, 2, 1), 3); }).find(">= br"),
            std::string::npos);
}

TEST(Compose, IdentityIsNeutral) {
  const auto id = bidiagonal_network(seq({1, 1, 1}), seq({0, 0}), BidiagonalOrientation::upper);
  const auto net = tridiag_tp2_network(params(1, 2, 3, 2, 1), 3);
  EXPECT_EQ(path_weight_matrix(compose(id, net)), path_weight_matrix(net));
  EXPECT_EQ(path_weight_matrix(compose(net, id)), path_weight_matrix(net));
}

TEST(Compose, MultipliesPathMatrices) {
  const auto a = bidiagonal_network(seq({1, 2}), seq({3}), BidiagonalOrientation::lower);
  const auto b = bidiagonal_network(seq({4, 5}), seq({6}), BidiagonalOrientation::upper);
  const auto ab = compose(a, b);
  EXPECT_EQ(ab.layer_count(), 3U);
  EXPECT_TRUE(ab.is_planar());
  EXPECT_EQ(path_weight_matrix(ab), mat({{4, 6}, {12, 28}}));
  const auto c = bidiagonal_network(seq({1, 1, 1}), seq({1, 1}), BidiagonalOrientation::upper);
  EXPECT_THROW(compose(a, c), PreconditionError);
  EXPECT_FALSE(compose(tridiag_tp2_network(params(1, 1, 1, 2, 1), 2), a).is_planar());
}

TEST(ToeplitzNetwork, Examples) {
  EXPECT_EQ(path_weight_matrix(network_from_toeplitz(seq({1, 1, 1}), 3)),
            mat({{1, 0, 0}, {1, 1, 0}, {1, 1, 1}}));
  EXPECT_EQ(path_weight_matrix(network_from_toeplitz(seq({1, 0, 0}), 3)), Matrix::identity(3));
  EXPECT_EQ(path_weight_matrix(network_from_toeplitz(seq({1, 2, 1}), 3)),
            mat({{1, 0, 0}, {2, 1, 0}, {1, 2, 1}}));
  for (const auto& a : {seq({1, 2, 1}), seq({1, 3, 3, 1}), seq({2, 1})}) {
    const auto net = network_from_toeplitz(a, 6);
    EXPECT_TRUE(net.is_planar());
    EXPECT_TRUE(net.all_weights_nonnegative());
    EXPECT_EQ(path_weight_matrix(net), toeplitz_matrix(a, 6, 6));
  }
  EXPECT_EQ(path_weight_matrix(network_from_toeplitz(seq({3}), 1)), mat({{3}}));
}

TEST(ToeplitzNetwork, ComposedWithShiftGivesConsistentProduction) {
  const auto toeplitz = network_from_toeplitz(seq({1, 1, 1}), 3);
  const auto shift = bidiagonal_network(seq({1, 0, 0}), seq({1, 1}), BidiagonalOrientation::upper);
  const auto expected = factor_consistent(seq({1, 1, 1}), Rational(1), FactorSide::right, 2);
  EXPECT_EQ(path_weight_matrix(shift), expected.second);
  EXPECT_EQ(path_weight_matrix(compose(toeplitz, shift)), expected.production);
}

TEST(ToeplitzNetwork, NotPolyaFrequencyCanBeInfeasible) {
  // 1 + x + x^2 is not PF: the 4x4 block has a negative 3-minor
  EXPECT_THROW(network_from_toeplitz(seq({1, 1, 1}), 5), InfeasibleError);
}

TEST(ToeplitzNetwork, InfeasibleNamesTheBlockingPivot) {
  const std::string message = error_of([] { network_from_toeplitz(seq({1, 0, 1}), 3); });
  EXPECT_NE(message.find("(1,0)"), std::string::npos) << message;
  EXPECT_NE(message.find("(2,0)"), std::string::npos) << message;
  EXPECT_THROW(network_from_toeplitz(seq({1, 0, 1}), 3), InfeasibleError);
}

TEST(MatrixNetwork, PlanarOnlyWithoutCrossings) {
  EXPECT_TRUE(network_from_matrix(mat({{1, 2}, {0, 3}})).is_planar());
  EXPECT_FALSE(network_from_matrix(mat({{1, 2}, {3, 4}})).is_planar());
  EXPECT_EQ(path_weight_matrix(network_from_matrix(mat({{1, -2}, {3, 4}}))), mat({{1, -2}, {3, 4}}));
}

TEST(NetworkProperty, DynamicProgrammingMatchesPathEnumeration) {
  Random rng(1);
  for (int trial = 0; trial < 60; ++trial) {
    const auto net = random_network(rng, 5, 4);
    EXPECT_EQ(path_weight_matrix(net), testing::brute_path_matrix(net));
  }
}

TEST(NetworkProperty, SignedLgvEqualsMinor) {
  Random rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    const auto net = random_network(rng, 4, 4);
    const Matrix m = path_weight_matrix(net);
    const std::size_t n = std::min(m.rows(), m.cols());
    for (std::size_t k = 1; k <= std::min<std::size_t>(n, 3); ++k) {
      for (const auto& I : testing::subsets(m.rows(), k)) {
        for (const auto& J : testing::subsets(m.cols(), k)) {
          EXPECT_EQ(lgv_signed_determinant(net, I, J), testing::leibniz_minor(m, I, J));
        }
      }
    }
  }
}

void expect_lgv_agreement(const WeightedNetwork& net) {
  const Matrix m = path_weight_matrix(net);
  const std::size_t ns = std::min<std::size_t>(m.rows(), 5);
  const std::size_t nt = std::min<std::size_t>(m.cols(), 5);
  for (std::size_t k = 1; k <= std::min<std::size_t>({ns, nt, 3}); ++k) {
    for (const auto& I : testing::subsets(ns, k)) {
      for (const auto& J : testing::subsets(nt, k)) {
        ASSERT_EQ(lgv_signed_determinant(net, I, J), minor(m, I, J));
      }
    }
  }
}

TEST(NetworkProperty, LgvAgreesOnEveryConstruction) {
  for (long a = 0; a <= 3; ++a)
    for (long b = 0; b <= 3; ++b)
      for (long r = 0; r <= 3; ++r)
        for (long s = 0; s <= 3; ++s)
          for (long t = 0; t <= 3; ++t) {
            const auto p = params(a, b, r, s, t);
            if ((a + b + r + s + t) % 7 == 0) expect_lgv_agreement(tridiag_tp2_network(p, 5));
            if (tp_criterion(p)) expect_lgv_agreement(tridiag_planar_network(p, 5).network);
          }
  for (long x = 0; x <= 3; ++x) {
    for (long y = 0; y <= 3; ++y) {
      const auto diag = seq({x, y, x + 1, y});
      const auto off = seq({y, x, 2});
      expect_lgv_agreement(bidiagonal_network(diag, off, BidiagonalOrientation::upper));
      expect_lgv_agreement(bidiagonal_network(diag, off, BidiagonalOrientation::lower));
      try {
        expect_lgv_agreement(network_from_toeplitz(seq({1, x, y}), 5));
      } catch (const InfeasibleError&) {
      }
    }
  }
}

TEST(NetworkProperty, PlanarNonintersectingSumEqualsSignedSum) {
  Random rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto net = rng.planar_network(4, 4, 3);
    const Matrix m = path_weight_matrix(net);
    const std::size_t n = std::min(m.rows(), m.cols());
    for (std::size_t k = 1; k <= std::min<std::size_t>(n, 3); ++k) {
      for (const auto& I : testing::subsets(m.rows(), k)) {
        for (const auto& J : testing::subsets(m.cols(), k)) {
          ASSERT_TRUE(check_compatibility(net, I, J));
          EXPECT_EQ(lgv_nonintersecting_sum(net, I, J), lgv_signed_determinant(net, I, J));
        }
      }
    }
  }
}

TEST(NetworkProperty, NonnegativePlanarNetworksAreTotallyPositive) {
  Random rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    const auto net = rng.planar_network(5, 5, 3);
    const Matrix m = path_weight_matrix(net);
    const std::size_t n = std::min<std::size_t>({m.rows(), m.cols(), 5});
    EXPECT_TRUE(is_tp_r(m, 3, n).pass);
  }
}

// k_i never drops below the smaller root (s - sqrt D) / 2 of x^2 - s x + rt.
// Exact form: 2k - s >= -sqrt D  <=>  2k - s >= 0 or (2k - s)^2 <= D.
TEST(NetworkProperty, PlanarWeightsRespectTheLowerRoot) {
  Random rng(5);
  int built = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const TridiagParams p(rng.rational(0, 3, 2), rng.rational(0, 3, 2), rng.rational(0, 3, 2),
                          rng.rational(0, 3, 2), rng.rational(0, 3, 2));
    if (!tp_criterion(p) || p.r().is_zero() || p.s().is_zero()) continue;
    ++built;
    const auto result = tridiag_planar_network(p, 7);
    for (std::size_t i = 1; i < result.k.size(); ++i) {
      const Rational x = Rational(2) * result.k[i] - p.s();
      EXPECT_TRUE(x.sign() >= 0 || x * x <= p.discriminant()) << i;
      if (result.kind == TridiagCase::zero_a && p.t().sign() > 0 && i >= 2) EXPECT_GT(x, Rational(0)) << i;
    }
    EXPECT_TRUE(result.network.all_weights_nonnegative());
  }
  EXPECT_GT(built, 50);
}

TEST(NetworkProperty, CompositionIsAssociative) {
  Random rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(1, 4));
    auto bidiag = [&] {
      const auto orientation =
          rng.integer(0, 1) ? BidiagonalOrientation::upper : BidiagonalOrientation::lower;
      return bidiagonal_network(rng.integers(n, 0, 3), rng.integers(n - 1, 0, 3), orientation);
    };
    const auto a = bidiag();
    const auto b = bidiag();
    const auto c = bidiag();
    const Matrix left = path_weight_matrix(compose(compose(a, b), c));
    EXPECT_EQ(left, path_weight_matrix(compose(a, compose(b, c))));
    EXPECT_EQ(left, testing::naive_product(
                        testing::naive_product(path_weight_matrix(a), path_weight_matrix(b)),
                        path_weight_matrix(c)));
  }
}

TEST(NetworkProperty, ToeplitzNetworksOfPolyaFrequencySequences) {
  // products of (1 + c x) factors with c >= 0 are PF
  Random rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Rational> a = {Rational(1)};
    const auto factors = rng.integer(1, 4);
    for (long f = 0; f < factors; ++f) {
      const Rational c = rng.rational(0, 3, 2);
      std::vector<Rational> next(a.size() + 1);
      for (std::size_t i = 0; i < a.size(); ++i) {
        next[i] += a[i];
        next[i + 1] += c * a[i];
      }
      a = std::move(next);
    }
    const std::size_t n = static_cast<std::size_t>(rng.integer(1, 6));
    const auto net = network_from_toeplitz(a, n);
    EXPECT_TRUE(net.all_weights_nonnegative());
    EXPECT_EQ(testing::brute_path_matrix(net), toeplitz_matrix(a, n, n));
  }
}

}  // namespace
}  // namespace rtp
