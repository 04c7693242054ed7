#include "rtp/network.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rtp/error.hpp"
#include "rtp/riordan.hpp"

namespace rtp {
namespace {

std::string vertex_name(Vertex v) {
  return "(" + std::to_string(v.layer) + "," + std::to_string(v.row) + ")";
}

void require_strictly_increasing(std::span<const std::size_t> rows, std::size_t width,
                                 const char* what) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] >= width) {
      throw PreconditionError(std::string(what) + " row " + std::to_string(rows[i]) +
                              " outside a layer of width " + std::to_string(width));
    }
    if (i > 0 && rows[i] <= rows[i - 1]) {
      throw PreconditionError(std::string(what) + " must be listed in strictly increasing row order");
    }
  }
}

struct Path {
  std::vector<std::size_t> vertices;  // dense ids
  Rational weight;
};

// All directed paths from `from` (layer 0) to `to` (last layer).
std::vector<Path> enumerate_paths(const WeightedNetwork& net, Vertex from, Vertex to,
                                  std::size_t cap) {
  // reach[id]: `to` is reachable from the vertex
  std::vector<char> reach(net.vertex_count(), 0);
  reach[net.id(to)] = 1;
  for (std::size_t layer = net.layer_count() - 1; layer-- > 0;) {
    for (std::size_t row = 0; row < net.layer_width(layer); ++row) {
      const Vertex v{layer, row};
      for (auto a : net.out_arcs(v)) {
        if (reach[net.id(net.arcs()[a].head)]) {
          reach[net.id(v)] = 1;
          break;
        }
      }
    }
  }

  std::vector<Path> paths;
  if (!reach[net.id(from)]) return paths;

  std::vector<std::size_t> stack_vertices{net.id(from)};
  std::vector<Rational> stack_weights{Rational(1)};
  auto visit = [&](auto&& self, Vertex v) -> void {
    if (v.layer + 1 == net.layer_count()) {
      if (paths.size() == cap) {
        throw CapExceededError("more than " + std::to_string(cap) + " paths from " +
                               vertex_name(from) + " to " + vertex_name(to));
      }
      paths.push_back({stack_vertices, stack_weights.back()});
      return;
    }
    for (auto a : net.out_arcs(v)) {
      const Arc& arc = net.arcs()[a];
      if (!reach[net.id(arc.head)]) continue;
      stack_vertices.push_back(net.id(arc.head));
      stack_weights.push_back(stack_weights.back() * arc.weight);
      self(self, arc.head);
      stack_vertices.pop_back();
      stack_weights.pop_back();
    }
  };
  visit(visit, from);
  return paths;
}

// Non-intersecting family search over a fixed source -> sink assignment.
class FamilySearch {
 public:
  FamilySearch(std::size_t vertex_count, std::size_t cap) : used_(vertex_count, 0), cap_(cap) {}

  // Sum of weight products over all families where source m uses paths[m].
  Rational sum(const std::vector<const std::vector<Path>*>& paths) {
    Rational total;
    walk(paths, 0, Rational(1), [&](const Rational& w) {
      total += w;
      return true;
    });
    return total;
  }

  bool exists(const std::vector<const std::vector<Path>*>& paths) {
    bool found = false;
    walk(paths, 0, Rational(1), [&](const Rational&) {
      found = true;
      return false;
    });
    return found;
  }

 private:
  // Returns false to stop the search.
  template <class OnFamily>
  bool walk(const std::vector<const std::vector<Path>*>& paths, std::size_t m,
            const Rational& weight, OnFamily&& on_family) {
    if (m == paths.size()) {
      if (++families_ > cap_) {
        throw CapExceededError("more than " + std::to_string(cap_) +
                               " non-intersecting families in one query");
      }
      return on_family(weight);
    }
    for (const Path& p : *paths[m]) {
      if (std::ranges::any_of(p.vertices, [&](std::size_t v) { return used_[v] != 0; })) continue;
      for (auto v : p.vertices) used_[v] = 1;
      const bool go_on = walk(paths, m + 1, weight * p.weight, on_family);
      for (auto v : p.vertices) used_[v] = 0;
      if (!go_on) return false;
    }
    return true;
  }

  std::vector<char> used_;
  std::size_t cap_;
  std::size_t families_ = 0;
};

// paths[m][j]: paths from source rows[m] to sink cols[j].
std::vector<std::vector<std::vector<Path>>> pair_paths(const WeightedNetwork& net,
                                                       std::span<const std::size_t> rows,
                                                       std::span<const std::size_t> cols,
                                                       const OracleCaps& caps) {
  if (rows.size() != cols.size()) {
    throw PreconditionError("index sets differ in size: " + std::to_string(rows.size()) + " vs " +
                            std::to_string(cols.size()));
  }
  if (rows.empty()) throw PreconditionError("empty index sets");
  if (rows.size() > caps.max_order) {
    throw CapExceededError("order " + std::to_string(rows.size()) + " exceeds oracle cap " +
                           std::to_string(caps.max_order));
  }
  for (std::size_t m = 0; m < rows.size(); ++m) {
    if (rows[m] >= net.sources().size() || cols[m] >= net.sinks().size()) {
      throw PreconditionError("index outside the source/sink lists");
    }
    if (m > 0 && (rows[m] <= rows[m - 1] || cols[m] <= cols[m - 1])) {
      throw PreconditionError("index sets must be strictly increasing");
    }
  }
  std::vector<std::vector<std::vector<Path>>> out(rows.size());
  for (std::size_t m = 0; m < rows.size(); ++m) {
    out[m].reserve(cols.size());
    for (auto c : cols) {
      out[m].push_back(enumerate_paths(net, net.source(rows[m]), net.sink(c), caps.max_paths_per_pair));
    }
  }
  return out;
}

bool odd_permutation(const std::vector<std::size_t>& perm) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j] ? 1 : 0;
  }
  return (inversions % 2) != 0;
}

std::vector<const std::vector<Path>*> assignment(
    const std::vector<std::vector<std::vector<Path>>>& paths, const std::vector<std::size_t>& perm) {
  std::vector<const std::vector<Path>*> chosen(perm.size());
  for (std::size_t m = 0; m < perm.size(); ++m) chosen[m] = &paths[m][perm[m]];
  return chosen;
}

// rt / k with the convention 0 / k = 0 (k may vanish when t = 0).
Rational ratio(const Rational& num, const Rational& den) {
  if (num.is_zero()) return {};
  if (den.is_zero()) throw InternalError("tri-diagonal recursion divided by a zero k_i");
  return num / den;
}

}  // namespace

WeightedNetwork::WeightedNetwork(std::vector<std::size_t> layer_widths, std::vector<Arc> arcs,
                                 std::vector<std::size_t> sources, std::vector<std::size_t> sinks,
                                 Planarity planarity)
    : widths_(std::move(layer_widths)),
      arcs_(std::move(arcs)),
      sources_(std::move(sources)),
      sinks_(std::move(sinks)),
      planarity_(planarity) {
  if (widths_.size() < 2) throw PreconditionError("a network needs at least two layers");
  offsets_.resize(widths_.size() + 1, 0);
  std::partial_sum(widths_.begin(), widths_.end(), offsets_.begin() + 1);
  out_.resize(offsets_.back());
  for (std::size_t a = 0; a < arcs_.size(); ++a) {
    const Arc& arc = arcs_[a];
    if (arc.head.layer != arc.tail.layer + 1 || arc.head.layer >= widths_.size()) {
      throw PreconditionError("arc " + vertex_name(arc.tail) + " -> " + vertex_name(arc.head) +
                              " must advance exactly one layer");
    }
    if (arc.tail.row >= widths_[arc.tail.layer] || arc.head.row >= widths_[arc.head.layer]) {
      throw PreconditionError("arc " + vertex_name(arc.tail) + " -> " + vertex_name(arc.head) +
                              " leaves its layer");
    }
    out_[id(arc.tail)].push_back(a);
  }
  require_strictly_increasing(sources_, widths_.front(), "sources");
  require_strictly_increasing(sinks_, widths_.back(), "sinks");
  if (planarity_ == Planarity::planar && has_crossing()) {
    throw PreconditionError("network declared planar has crossing arcs");
  }
}

std::span<const std::size_t> WeightedNetwork::out_arcs(Vertex v) const { return out_.at(id(v)); }

WeightedNetwork WeightedNetwork::with_sinks(std::size_t count) const {
  if (count > sinks_.size()) throw PreconditionError("with_sinks: not that many sinks");
  return WeightedNetwork(widths_, arcs_, sources_,
                         std::vector<std::size_t>(sinks_.begin(), sinks_.begin() + count),
                         planarity_);
}

bool WeightedNetwork::has_crossing() const {
  std::vector<std::vector<const Arc*>> by_gap(widths_.size() - 1);
  for (const Arc& arc : arcs_) by_gap[arc.tail.layer].push_back(&arc);
  for (const auto& gap : by_gap) {
    for (std::size_t x = 0; x < gap.size(); ++x) {
      for (std::size_t y = 0; y < gap.size(); ++y) {
        if (gap[x]->tail.row < gap[y]->tail.row && gap[x]->head.row > gap[y]->head.row) return true;
      }
    }
  }
  return false;
}

bool WeightedNetwork::all_weights_nonnegative() const {
  return std::ranges::all_of(arcs_, [](const Arc& a) { return a.weight.sign() >= 0; });
}

Matrix path_weight_matrix(const WeightedNetwork& net) {
  Matrix out(net.sources().size(), net.sinks().size());
  std::vector<Rational> value(net.vertex_count());
  for (std::size_t i = 0; i < net.sources().size(); ++i) {
    std::ranges::fill(value, Rational());
    value[net.id(net.source(i))] = 1;
    // dense ids are layer-major, hence already a topological order
    for (std::size_t layer = 0; layer + 1 < net.layer_count(); ++layer) {
      for (std::size_t row = 0; row < net.layer_width(layer); ++row) {
        const Vertex v{layer, row};
        const Rational& here = value[net.id(v)];
        if (here.is_zero()) continue;
        for (auto a : net.out_arcs(v)) {
          const Arc& arc = net.arcs()[a];
          value[net.id(arc.head)] += here * arc.weight;
        }
      }
    }
    for (std::size_t j = 0; j < net.sinks().size(); ++j) out(i, j) = value[net.id(net.sink(j))];
  }
  return out;
}

Rational lgv_signed_determinant(const WeightedNetwork& net, std::span<const std::size_t> rows,
                                std::span<const std::size_t> cols, const OracleCaps& caps) {
  const auto paths = pair_paths(net, rows, cols, caps);
  FamilySearch search(net.vertex_count(), caps.max_families);
  std::vector<std::size_t> perm(rows.size());
  std::iota(perm.begin(), perm.end(), 0);
  Rational total;
  do {
    Rational part = search.sum(assignment(paths, perm));
    if (odd_permutation(perm)) {
      total -= part;
    } else {
      total += part;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

bool check_compatibility(const WeightedNetwork& net, std::span<const std::size_t> rows,
                         std::span<const std::size_t> cols, const OracleCaps& caps) {
  const auto paths = pair_paths(net, rows, cols, caps);
  FamilySearch search(net.vertex_count(), caps.max_families);
  std::vector<std::size_t> perm(rows.size());
  std::iota(perm.begin(), perm.end(), 0);
  while (std::next_permutation(perm.begin(), perm.end())) {
    if (search.exists(assignment(paths, perm))) return false;
  }
  return true;
}

bool check_full_compatibility(const WeightedNetwork& net, std::size_t prefix, const OracleCaps& caps) {
  const std::size_t ns = std::min(prefix, net.sources().size());
  const std::size_t nt = std::min(prefix, net.sinks().size());
  for (std::size_t i1 = 0; i1 < ns; ++i1) {
    for (std::size_t i2 = i1 + 1; i2 < ns; ++i2) {
      for (std::size_t j1 = 0; j1 < nt; ++j1) {
        for (std::size_t j2 = j1 + 1; j2 < nt; ++j2) {
          const std::size_t rows[] = {i1, i2};
          const std::size_t cols[] = {j1, j2};
          if (!check_compatibility(net, rows, cols, caps)) return false;
        }
      }
    }
  }
  return true;
}

Rational lgv_nonintersecting_sum(const WeightedNetwork& net, std::span<const std::size_t> rows,
                                 std::span<const std::size_t> cols, const OracleCaps& caps) {
  if (!net.is_planar()) {
    throw PreconditionError("non-intersecting sum needs a planar network; use the signed oracle");
  }
  if (!check_compatibility(net, rows, cols, caps)) {
    throw PreconditionError("sources and sinks are not compatible on the requested index sets");
  }
  const auto paths = pair_paths(net, rows, cols, caps);
  std::vector<std::size_t> identity(rows.size());
  std::iota(identity.begin(), identity.end(), 0);
  FamilySearch search(net.vertex_count(), caps.max_families);
  return search.sum(assignment(paths, identity));
}

WeightedNetwork bidiagonal_network(std::span<const Rational> diag, std::span<const Rational> offdiag,
                                   BidiagonalOrientation orientation) {
  const std::size_t n = diag.size();
  if (n == 0) throw PreconditionError("bidiagonal network needs a nonempty diagonal");
  if (offdiag.size() + 1 != n && offdiag.size() != n) {
    throw PreconditionError("off-diagonal must have " + std::to_string(n - 1) + " or " +
                            std::to_string(n) + " entries, got " + std::to_string(offdiag.size()));
  }
  const bool upper = orientation == BidiagonalOrientation::upper;
  const std::size_t extra = offdiag.size() == n ? 1 : 0;
  const std::size_t n_sources = upper ? n : n + extra;
  const std::size_t n_sinks = upper ? n + extra : n;

  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < n; ++i) arcs.push_back({{0, i}, {1, i}, diag[i]});
  for (std::size_t i = 0; i < offdiag.size(); ++i) {
    if (upper) {
      arcs.push_back({{0, i}, {1, i + 1}, offdiag[i]});
    } else {
      arcs.push_back({{0, i + 1}, {1, i}, offdiag[i]});
    }
  }
  std::vector<std::size_t> sources(n_sources);
  std::vector<std::size_t> sinks(n_sinks);
  std::iota(sources.begin(), sources.end(), 0);
  std::iota(sinks.begin(), sinks.end(), 0);
  return WeightedNetwork({n_sources, n_sinks}, std::move(arcs), std::move(sources), std::move(sinks),
                         Planarity::planar);
}

WeightedNetwork tridiag_tp2_network(const TridiagParams& p, std::size_t depth) {
  if (depth == 0) throw PreconditionError("depth must be at least 1");
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < depth; ++i) {
    arcs.push_back({{0, i}, {1, i}, i == 0 ? p.a() : p.s()});
    if (i + 1 < depth) {
      arcs.push_back({{0, i}, {1, i + 1}, p.r()});
      arcs.push_back({{0, i + 1}, {1, i}, i == 0 ? p.b() : p.t()});
    }
  }
  std::vector<std::size_t> ends(depth);
  std::iota(ends.begin(), ends.end(), 0);
  return WeightedNetwork({depth, depth}, std::move(arcs), ends, ends, Planarity::nonplanar);
}

PlanarTridiagNetwork tridiag_planar_network(const TridiagParams& p, std::size_t depth) {
  if (depth == 0) throw PreconditionError("depth must be at least 1");
  const CriteriaDetail detail = criteria_detail(p);
  if (!detail.tp) {
    if (detail.discriminant.sign() < 0) {
      throw PreconditionError("s^2 >= 4rt violated: s^2 - 4rt = " + detail.discriminant.str());
    }
    throw PreconditionError("a(s+sqrt(s^2-4rt))/2 >= br violated");
  }

  auto result = [&]() -> PlanarTridiagNetwork {
    if (p.r().is_zero()) {
      std::vector<Rational> diag(depth, p.s());
      std::vector<Rational> sub(depth - 1, p.t());
      diag[0] = p.a();
      if (depth > 1) sub[0] = p.b();
      return {bidiagonal_network(diag, sub, BidiagonalOrientation::lower),
              TridiagCase::bidiagonal_r_zero, {}, {}};
    }
    if (p.s().is_zero()) {
      // the criterion forces b = t = 0 here
      std::vector<Rational> diag(depth);
      std::vector<Rational> super(depth - 1, p.r());
      diag[0] = p.a();
      return {bidiagonal_network(diag, super, BidiagonalOrientation::upper),
              TridiagCase::bidiagonal_s_zero, {}, {}};
    }

    const bool positive_a = p.a().sign() > 0;
    const Rational rt = p.r() * p.t();
    std::vector<Rational> k(depth);
    std::vector<Rational> l(depth - 1);
    k[0] = positive_a ? p.a() : Rational();
    if (depth > 1) k[1] = positive_a ? p.s() - p.b() * p.r() / p.a() : p.s();
    for (std::size_t i = 2; i < depth; ++i) k[i] = p.s() - ratio(rt, k[i - 1]);
    if (depth > 1) l[0] = positive_a ? p.b() / p.a() : Rational();
    for (std::size_t i = 1; i + 1 < depth; ++i) l[i] = ratio(p.t(), k[i]);

    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < depth; ++i) {
      arcs.push_back({{0, i}, {1, i}, 1});
      arcs.push_back({{1, i}, {2, i}, k[i]});
      if (i + 1 < depth) {
        arcs.push_back({{0, i + 1}, {1, i}, l[i]});
        arcs.push_back({{1, i}, {2, i + 1}, p.r()});
      }
    }
    std::vector<std::size_t> ends(depth);
    std::iota(ends.begin(), ends.end(), 0);
    return {WeightedNetwork({depth, depth, depth}, std::move(arcs), ends, ends, Planarity::planar),
            positive_a ? TridiagCase::positive_a : TridiagCase::zero_a, std::move(k), std::move(l)};
  }();

  if (!result.network.all_weights_nonnegative()) {
    throw InternalError("planar tri-diagonal network has a negative weight");
  }
  if (path_weight_matrix(result.network) != p.production(depth - 1)) {
    throw InternalError("planar tri-diagonal network does not reproduce the production matrix");
  }
  return result;
}

WeightedNetwork compose(const WeightedNetwork& first, const WeightedNetwork& second) {
  if (first.sinks().size() != second.sources().size()) {
    throw PreconditionError("cannot compose: " + std::to_string(first.sinks().size()) +
                            " sinks against " + std::to_string(second.sources().size()) +
                            " sources");
  }
  const std::size_t shift = first.layer_count() - 1;
  std::vector<std::size_t> widths(first.layer_widths().begin(), first.layer_widths().end());
  widths.insert(widths.end(), second.layer_widths().begin() + 1, second.layer_widths().end());

  // second's layer-0 rows that are sources, mapped onto first's sink rows
  constexpr std::size_t kUnmapped = static_cast<std::size_t>(-1);
  std::vector<std::size_t> junction(second.layer_width(0), kUnmapped);
  for (std::size_t m = 0; m < second.sources().size(); ++m) {
    junction[second.sources()[m]] = first.sinks()[m];
  }

  std::vector<Arc> arcs(first.arcs().begin(), first.arcs().end());
  for (const Arc& arc : second.arcs()) {
    Arc moved = arc;
    if (arc.tail.layer == 0) {
      if (junction[arc.tail.row] == kUnmapped) continue;  // unreachable from any source
      moved.tail.row = junction[arc.tail.row];
    }
    moved.tail.layer += shift;
    moved.head.layer += shift;
    arcs.push_back(std::move(moved));
  }
  const Planarity planarity =
      first.is_planar() && second.is_planar() ? Planarity::planar : Planarity::nonplanar;
  return WeightedNetwork(std::move(widths), std::move(arcs),
                         std::vector<std::size_t>(first.sources().begin(), first.sources().end()),
                         std::vector<std::size_t>(second.sinks().begin(), second.sinks().end()),
                         planarity);
}

WeightedNetwork network_from_toeplitz(std::span<const Rational> a, std::size_t n) {
  if (n == 0) throw PreconditionError("Toeplitz network needs n >= 1");
  const Matrix target = toeplitz_matrix(a, n, n);

  // Neville elimination: clear column k bottom-up, each row against the
  // (still unmodified) row right above it.
  Matrix work = target;
  Matrix multiplier(n, n);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::size_t i = n - 1; i > k; --i) {
      if (work(i, k).is_zero()) continue;
      if (work(i - 1, k).is_zero()) {
        throw InfeasibleError("Neville elimination hits a zero pivot at (" + std::to_string(i - 1) +
                              "," + std::to_string(k) + ") above the nonzero entry (" +
                              std::to_string(i) + "," + std::to_string(k) + ")");
      }
      const Rational m = work(i, k) / work(i - 1, k);
      for (std::size_t j = k; j < n; ++j) work(i, j) -= m * work(i - 1, j);
      multiplier(i, k) = m;
    }
  }

  // T = F_{n-1} ... F_2 (F_1 D), where F_d carries multiplier(i, i-d) at
  // position (i, i-1) and D = diag(work).
  std::vector<WeightedNetwork> factors;
  for (std::size_t d = n - 1; d >= 2; --d) {
    std::vector<Rational> ones(n, Rational(1));
    std::vector<Rational> sub(n - 1);
    for (std::size_t j = 0; j + 1 < n; ++j) {
      if (j + 1 >= d) sub[j] = multiplier(j + 1, j + 1 - d);
    }
    factors.push_back(bidiagonal_network(ones, sub, BidiagonalOrientation::lower));
  }
  std::vector<Rational> diag(n);
  std::vector<Rational> sub(n - 1);
  for (std::size_t i = 0; i < n; ++i) diag[i] = work(i, i);
  for (std::size_t j = 0; j + 1 < n; ++j) sub[j] = multiplier(j + 1, j) * work(j, j);
  factors.push_back(bidiagonal_network(diag, sub, BidiagonalOrientation::lower));

  WeightedNetwork net = factors.front();
  for (std::size_t f = 1; f < factors.size(); ++f) net = compose(net, factors[f]);
  if (path_weight_matrix(net) != target) {
    throw InternalError("Toeplitz network does not reproduce its matrix");
  }
  return net;
}

WeightedNetwork network_from_matrix(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) throw PreconditionError("empty matrix");
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) arcs.push_back({{0, i}, {1, j}, m(i, j)});
    }
  }
  std::vector<std::size_t> sources(m.rows());
  std::vector<std::size_t> sinks(m.cols());
  std::iota(sources.begin(), sources.end(), 0);
  std::iota(sinks.begin(), sinks.end(), 0);
  WeightedNetwork net({m.rows(), m.cols()}, std::move(arcs), std::move(sources), std::move(sinks),
                      Planarity::nonplanar);
  if (net.has_crossing()) return net;
  return WeightedNetwork({m.rows(), m.cols()},
                         std::vector<Arc>(net.arcs().begin(), net.arcs().end()),
                         std::vector<std::size_t>(net.sources().begin(), net.sources().end()),
                         std::vector<std::size_t>(net.sinks().begin(), net.sinks().end()),
                         Planarity::planar);
}

}  // namespace rtp
