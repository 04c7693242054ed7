#include "rtp/cli/network_io.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "rtp/error.hpp"

namespace rtp::cli {
namespace {

using nlohmann::json;

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw ParseError(std::string("network JSON is missing \"") + name + "\"");
  }
  return j.at(name);
}

std::size_t natural(const json& j, const char* what) {
  if (!j.is_number_unsigned()) throw ParseError(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<std::size_t> naturals(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<std::size_t> out;
  for (const auto& x : j) out.push_back(natural(x, what));
  return out;
}

Vertex vertex(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("arc endpoints must be [layer, row] pairs");
  return {natural(j[0], "layer"), natural(j[1], "row")};
}

std::string node(Vertex v) { return "v" + std::to_string(v.layer) + "_" + std::to_string(v.row); }

}  // namespace

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw ParseError("expected an integer or a \"p/q\" string, got " + j.dump());
}

json network_to_json(const WeightedNetwork& net) {
  json arcs = json::array();
  for (const Arc& a : net.arcs()) {
    arcs.push_back({{"from", {a.tail.layer, a.tail.row}},
                    {"to", {a.head.layer, a.head.row}},
                    {"weight", a.weight.str()}});
  }
  return {{"layers", std::vector<std::size_t>(net.layer_widths().begin(), net.layer_widths().end())},
          {"arcs", std::move(arcs)},
          {"sources", std::vector<std::size_t>(net.sources().begin(), net.sources().end())},
          {"sinks", std::vector<std::size_t>(net.sinks().begin(), net.sinks().end())},
          {"planar", net.is_planar()}};
}

WeightedNetwork network_from_json(const json& j) {
  std::vector<Arc> arcs;
  const json& arc_list = field(j, "arcs");
  if (!arc_list.is_array()) throw ParseError("\"arcs\" must be an array");
  for (const auto& a : arc_list) {
    arcs.push_back({vertex(field(a, "from")), vertex(field(a, "to")), rational_from_json(field(a, "weight"))});
  }
  const json& planar = field(j, "planar");
  if (!planar.is_boolean()) throw ParseError("\"planar\" must be true or false");
  return WeightedNetwork(naturals(field(j, "layers"), "layer width"), std::move(arcs),
                         naturals(field(j, "sources"), "source"), naturals(field(j, "sinks"), "sink"),
                         planar.get<bool>() ? Planarity::planar : Planarity::nonplanar);
}

std::string network_to_dot(const WeightedNetwork& net) {
  std::ostringstream out;
  out << "digraph network {\n";
  out << "  // layer l at x = l, row i at y = -i; render with neato -n or fdp\n";
  out << "  node [shape=circle, fontsize=10];\n";
  const std::size_t last = net.layer_count() - 1;
  for (std::size_t l = 0; l <= last; ++l) {
    out << "  { rank=same;";
    for (std::size_t r = 0; r < net.layer_width(l); ++r) out << ' ' << node({l, r}) << ';';
    out << " }\n";
    for (std::size_t r = 0; r < net.layer_width(l); ++r) {
      out << "  " << node({l, r}) << " [label=\"" << l << ',' << r << "\", pos=\"" << l << ','
          << (r ? "-" : "") << r << "!\"";
      const bool is_source = l == 0 && std::ranges::find(net.sources(), r) != net.sources().end();
      const bool is_sink = l == last && std::ranges::find(net.sinks(), r) != net.sinks().end();
      if (is_source || is_sink) out << ", shape=doublecircle";
      out << "];\n";
    }
  }
  for (const Arc& a : net.arcs()) {
    out << "  " << node(a.tail) << " -> " << node(a.head) << " [label=\"" << a.weight.str() << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace rtp::cli
