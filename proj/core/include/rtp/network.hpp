#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "rtp/matrix.hpp"
#include "rtp/rational.hpp"
#include "rtp/totalpos.hpp"

namespace rtp {

// A vertex is addressed by its layer and its row inside the layer. In a
// drawing, layer l sits at x = l and row i at y = -i.
struct Vertex {
  std::size_t layer = 0;
  std::size_t row = 0;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

// Every arc advances exactly one layer, which makes the digraph acyclic and
// locally finite.
struct Arc {
  Vertex tail;
  Vertex head;
  Rational weight;
  friend bool operator==(const Arc&, const Arc&) = default;
};

enum class Planarity { planar, nonplanar };

// Layered acyclic digraph with exact arc weights. Sources are an ordered
// list of rows in layer 0, sinks an ordered list of rows in the last layer.
//
// A network declared planar has no crossing pair of arcs: within one layer
// gap, arcs with tails t1 < t2 have heads h1 <= h2. That is exactly the
// crossing test for the straight-line drawing above.
class WeightedNetwork {
 public:
  // Throws PreconditionError on fewer than two layers, arcs that skip or
  // reverse layers, rows outside their layer, unsorted or duplicate
  // sources/sinks, or a crossing in a network declared planar.
  WeightedNetwork(std::vector<std::size_t> layer_widths, std::vector<Arc> arcs,
                  std::vector<std::size_t> sources, std::vector<std::size_t> sinks,
                  Planarity planarity);

  std::size_t layer_count() const { return widths_.size(); }
  std::size_t layer_width(std::size_t layer) const { return widths_.at(layer); }
  std::span<const std::size_t> layer_widths() const { return widths_; }
  std::size_t vertex_count() const { return offsets_.back(); }

  std::span<const Arc> arcs() const { return arcs_; }
  // Indices into arcs() leaving the given vertex.
  std::span<const std::size_t> out_arcs(Vertex v) const;

  std::span<const std::size_t> sources() const { return sources_; }
  std::span<const std::size_t> sinks() const { return sinks_; }
  Vertex source(std::size_t i) const { return {0, sources_.at(i)}; }
  Vertex sink(std::size_t j) const { return {widths_.size() - 1, sinks_.at(j)}; }

  Planarity planarity() const { return planarity_; }
  bool is_planar() const { return planarity_ == Planarity::planar; }

  // Dense id in [0, vertex_count()).
  std::size_t id(Vertex v) const { return offsets_[v.layer] + v.row; }

  // Same digraph with only the first `count` sinks designated.
  WeightedNetwork with_sinks(std::size_t count) const;

  // True if some pair of arcs crosses in the layered drawing.
  bool has_crossing() const;

  bool all_weights_nonnegative() const;

 private:
  std::vector<std::size_t> widths_;
  std::vector<std::size_t> offsets_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::size_t> sources_;
  std::vector<std::size_t> sinks_;
  Planarity planarity_;
};

// Entry (i, j) is the sum over directed paths from source i to sink j of the
// product of arc weights. Layer-by-layer dynamic programming.
Matrix path_weight_matrix(const WeightedNetwork& net);

// Bounds for the exhaustive path-family oracles.
struct OracleCaps {
  std::size_t max_order = 4;              // largest |I| = |J|
  std::size_t max_paths_per_pair = 10000;  // paths from one source to one sink
  std::size_t max_families = 10000;        // non-intersecting families per query
};

// sum over sigma of sign(sigma) * sum over non-intersecting families
// (source I_m -> sink J_sigma(m)) of the product of path weights. Equals
// minor(path_weight_matrix(net), I, J) on any network.
// Throws CapExceededError when a cap would be exceeded and
// PreconditionError on malformed index sets.
Rational lgv_signed_determinant(const WeightedNetwork& net, std::span<const std::size_t> rows,
                                std::span<const std::size_t> cols, const OracleCaps& caps = {});

// Sum over identity-assignment non-intersecting families only. Requires a
// network declared planar whose (I, J) pair passes check_compatibility;
// otherwise throws PreconditionError.
Rational lgv_nonintersecting_sum(const WeightedNetwork& net, std::span<const std::size_t> rows,
                                 std::span<const std::size_t> cols, const OracleCaps& caps = {});

// True iff no non-identity assignment of sinks J to sources I admits a
// non-intersecting family.
bool check_compatibility(const WeightedNetwork& net, std::span<const std::size_t> rows,
                         std::span<const std::size_t> cols, const OracleCaps& caps = {});

// Pairwise compatibility of every (i1 < i2) x (j1 < j2) within the first
// `prefix` sources and sinks, which certifies full compatibility of those
// prefixes.
bool check_full_compatibility(const WeightedNetwork& net, std::size_t prefix,
                              const OracleCaps& caps = {});

enum class BidiagonalOrientation {
  upper,  // arcs U_i -> V_i and U_i -> V_{i+1}
  lower,  // arcs U_i -> V_i and U_{i+1} -> V_i
};

// Two-layer planar network for a bidiagonal matrix with the given diagonal
// and off-diagonal. offdiag may be one shorter than diag (square matrix) or
// the same length, in which case the matrix gains one extra column (upper)
// or one extra row (lower).
WeightedNetwork bidiagonal_network(std::span<const Rational> diag, std::span<const Rational> offdiag,
                                   BidiagonalOrientation orientation);

// Two-layer network for the depth x depth block of the tri-diagonal
// production matrix: U_i -> V_i (a, then s), U_i -> V_{i+1} (r),
// U_{i+1} -> V_i (b, then t). Flagged nonplanar: the last two families of
// arcs cross.
WeightedNetwork tridiag_tp2_network(const TridiagParams& p, std::size_t depth);

enum class TridiagCase {
  bidiagonal_r_zero,  // r = 0: lower bidiagonal
  bidiagonal_s_zero,  // r > 0, s = 0: forces b = t = 0, upper bidiagonal
  positive_a,         // r, s, a > 0
  zero_a,             // r, s > 0, a = b = 0
};

struct PlanarTridiagNetwork {
  WeightedNetwork network;
  TridiagCase kind;
  std::vector<Rational> k;  // W_i -> V_i weights (empty in the bidiagonal cases)
  std::vector<Rational> l;  // U_{i+1} -> W_i weights
};

// Planar network with nonnegative weights for the depth x depth block of the
// tri-diagonal production matrix. In the non-degenerate cases it has three
// layers U, W, V with arcs U_i -> W_i (1), W_i -> V_{i+1} (r),
// W_i -> V_i (k_i), U_{i+1} -> W_i (l_i).
// Throws PreconditionError naming the failing inequality when tp_criterion
// does not hold, and InternalError if the result fails to reproduce the
// production matrix.
PlanarTridiagNetwork tridiag_planar_network(const TridiagParams& p, std::size_t depth);

// Fuses sink m of `first` with source m of `second`. The path matrix of the
// result is the product of the two path matrices. Planar iff both inputs are.
// Throws PreconditionError when the sink and source counts differ.
WeightedNetwork compose(const WeightedNetwork& first, const WeightedNetwork& second);

// Planar network for the n x n lower-triangular Toeplitz block (a_{i-j}),
// built from the Neville elimination of that block as a composition of
// n - 1 lower-bidiagonal networks. Throws InfeasibleError when elimination
// meets a zero pivot above a nonzero entry (the blocking pivot is named).
WeightedNetwork network_from_toeplitz(std::span<const Rational> a, std::size_t n);

// Two-layer network with one arc i -> j per nonzero entry. Planar only when
// those arcs happen not to cross.
WeightedNetwork network_from_matrix(const Matrix& m);

}  // namespace rtp
