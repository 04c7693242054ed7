#include "rtp/cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rtp/cli/network_io.hpp"
#include "rtp/error.hpp"
#include "rtp/riordan.hpp"
#include "rtp/series.hpp"
#include "rtp/totalpos.hpp"

namespace rtp::cli {
namespace {

using nlohmann::json;

struct Options {
  std::string a, z, g, f, seq, params, diag, offdiag;
  std::vector<std::string> gf_files;
  std::string input;
  std::size_t rows = 10;
  std::size_t order = 3;
  std::size_t size = 10;
  std::size_t depth = 4;
  std::string target, kind;
  std::string orientation = "upper";
  std::string format;
  std::string left, right, network, output;
  std::string index_rows = "0", index_cols = "0";
  std::optional<std::size_t> max_order, max_paths, max_families;
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::vector<std::size_t> parse_indices(const std::string& text) {
  std::vector<std::size_t> out;
  for (const Rational& x : parse_list(text)) {
    if (!x.is_integer() || x.sign() < 0) throw ParseError("index " + x.str() + " is not a natural number");
    out.push_back(x.value().get_num().get_ui());
  }
  return out;
}

std::vector<Rational> json_sequence(const json& j, const char* name) {
  if (!j.contains(name) || !j.at(name).is_array()) {
    throw ParseError(std::string("input JSON needs an array \"") + name + "\"");
  }
  std::vector<Rational> out;
  for (const auto& x : j.at(name)) out.push_back(rational_from_json(x));
  return out;
}

TridiagParams parse_params(const std::string& text) {
  const auto v = parse_list(text);
  if (v.size() != 5) throw ParseError("--params needs five values a,b,r,s,t, got " + std::to_string(v.size()));
  return {v[0], v[1], v[2], v[3], v[4]};
}

// The one (A, Z) or (g, f) description a triangle command was given.
struct TriangleInput {
  std::optional<AZPair> az;
  std::optional<std::pair<TruncatedSeries, TruncatedSeries>> gf;
};

TriangleInput triangle_input(const Options& o) {
  const bool az = !o.a.empty() || !o.z.empty();
  const bool gf = !o.g.empty() || !o.f.empty();
  const bool files = !o.gf_files.empty();
  const bool input = !o.input.empty();
  if (az + gf + files + input != 1) {
    throw PreconditionError("exactly one of --a/--z, --g/--f, --gf or --input is required");
  }
  TriangleInput out;
  if (az) {
    if (o.a.empty() || o.z.empty()) throw PreconditionError("--a and --z must be given together");
    out.az = AZPair(parse_list(o.a), parse_list(o.z));
  } else if (gf) {
    if (o.g.empty() || o.f.empty()) throw PreconditionError("--g and --f must be given together");
    out.gf.emplace(TruncatedSeries(parse_list(o.g)), TruncatedSeries(parse_list(o.f)));
  } else if (files) {
    out.gf.emplace(TruncatedSeries(read_sequence_file(o.gf_files[0])),
                   TruncatedSeries(read_sequence_file(o.gf_files[1])));
  } else {
    const json j = read_json(o.input);
    if (j.contains("a") || j.contains("z")) {
      out.az = AZPair(json_sequence(j, "a"), json_sequence(j, "z"));
    } else if (j.contains("g") || j.contains("f")) {
      out.gf.emplace(TruncatedSeries(json_sequence(j, "g")), TruncatedSeries(json_sequence(j, "f")));
    } else {
      throw ParseError("input JSON needs either \"a\" and \"z\" or \"g\" and \"f\"");
    }
  }
  return out;
}

RiordanTriangle build_triangle(const TriangleInput& in, std::size_t N) {
  if (in.az) return triangle_from_az(*in.az, N);
  return triangle_from_gf(in.gf->first, in.gf->second, N);
}

void print_rows(std::ostream& out, const std::vector<std::vector<Rational>>& rows, const std::string& format) {
  if (format == "json") {
    json j = json::array();
    for (const auto& row : rows) {
      json r = json::array();
      for (const auto& x : row) r.push_back(x.str());
      j.push_back(std::move(r));
    }
    out << json{{"rows", std::move(j)}}.dump() << '\n';
    return;
  }
  const char sep = format == "csv" ? ',' : ' ';
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? std::string(1, sep) : "") << row[k];
    out << '\n';
  }
}

std::vector<std::vector<Rational>> matrix_rows(const Matrix& m) {
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.emplace_back(m.row(i).begin(), m.row(i).end());
  return rows;
}

std::string set_str(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

int cmd_gen(const Options& o, std::ostream& out) {
  const RiordanTriangle t = build_triangle(triangle_input(o), o.rows);
  std::vector<std::vector<Rational>> rows;
  for (std::size_t n = 0; n <= t.size(); ++n) rows.emplace_back(t.row(n).begin(), t.row(n).end());
  print_rows(out, rows, o.format);
  return kPass;
}

int cmd_check(const Options& o, std::ostream& out) {
  if (o.size == 0) throw PreconditionError("--size must be at least 1");
  Matrix m;
  if (o.target == "triangle") {
    m = build_triangle(triangle_input(o), o.size - 1).to_matrix();
  } else if (o.target == "production") {
    if (!o.params.empty()) {
      m = parse_params(o.params).production(o.size - 1);
    } else if (!o.input.empty()) {
      const json j = read_json(o.input);
      m = production_matrix(AZPair(json_sequence(j, "a"), json_sequence(j, "z")), o.size - 1);
    } else {
      if (o.a.empty() || o.z.empty()) throw PreconditionError("production needs --a and --z, --params or --input");
      m = production_matrix(AZPair(parse_list(o.a), parse_list(o.z)), o.size - 1);
    }
  } else {
    if (o.seq.empty()) throw PreconditionError("toeplitz needs --seq");
    m = toeplitz_matrix(parse_list(o.seq), o.size, o.size);
  }

  const TPReport report = is_tp_r(m, o.order, o.size);
  if (o.format == "json") {
    json j = {{"target", o.target},
              {"order", report.order},
              {"size", report.size},
              {"pass", report.pass},
              {"minors_checked", report.minors_checked}};
    if (report.witness) {
      j["witness"] = {{"rows", report.witness->rows},
                      {"cols", report.witness->cols},
                      {"value", report.witness->value.str()}};
    }
    out << j.dump() << '\n';
  } else {
    out << "TP_" << report.order << " on the leading " << report.size << "x" << report.size << " block of the "
        << o.target << ": " << (report.pass ? "pass" : "fail") << " (" << report.minors_checked
        << " minors checked)\n";
    if (report.witness) {
      out << "witness: rows " << set_str(report.witness->rows) << " cols " << set_str(report.witness->cols)
          << " minor = " << report.witness->value << '\n';
    }
  }
  return report.pass ? kPass : kViolation;
}

int cmd_criteria(const Options& o, std::ostream& out) {
  const TridiagParams p = parse_params(o.params);
  const CriteriaDetail d = criteria_detail(p);
  const char* tp_reason = d.tp ? "" : d.discriminant.sign() < 0 ? " (D < 0)" : " (a(s+sqrt D)/2 < br)";
  if (o.format == "json") {
    json j = {{"as_minus_br", d.as_minus_br.str()},
              {"s2_minus_rt", d.s2_minus_rt.str()},
              {"discriminant", d.discriminant.str()},
              {"tp2", d.tp2},
              {"tp", d.tp}};
    j["threshold"] = d.threshold ? json(d.threshold->str()) : json(nullptr);
    out << j.dump() << '\n';
    return kPass;
  }
  out << "as - br = " << d.as_minus_br << '\n';
  out << "s^2 - rt = " << d.s2_minus_rt << '\n';
  out << "D = s^2 - 4rt = " << d.discriminant << '\n';
  if (d.threshold) {
    out << "Q = 2br/a - s = " << *d.threshold << "; a(s+sqrt D)/2 >= br iff Q <= 0 or D >= Q^2\n";
  } else {
    out << "a = 0: a(s+sqrt D)/2 >= br iff br = 0\n";
  }
  out << "TP2: " << (d.tp2 ? "yes" : "no") << '\n';
  out << "TP: " << (d.tp ? "yes" : "no") << tp_reason << '\n';
  return kPass;
}

Matrix bidiagonal_matrix(const std::vector<Rational>& diag, const std::vector<Rational>& off, bool upper) {
  const std::size_t n = diag.size();
  const std::size_t extra = off.size() == n ? 1 : 0;
  Matrix m(upper ? n : n + extra, upper ? n + extra : n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = diag[i];
  for (std::size_t i = 0; i < off.size(); ++i) {
    if (upper) {
      m(i, i + 1) = off[i];
    } else {
      m(i + 1, i) = off[i];
    }
  }
  return m;
}

void emit_network(const WeightedNetwork& net, const Options& o, std::ostream& sink,
                  const std::vector<std::string>& notes) {
  if (o.format == "dot") {
    sink << network_to_dot(net);
  } else if (o.format == "json") {
    sink << network_to_json(net).dump(2) << '\n';
  } else if (o.format == "csv") {
    print_rows(sink, matrix_rows(path_weight_matrix(net)), "csv");
  } else {
    sink << "layers:";
    for (auto w : net.layer_widths()) sink << ' ' << w;
    sink << "\nplanar: " << (net.is_planar() ? "yes" : "no") << "\narcs: " << net.arcs().size() << '\n';
    for (const auto& note : notes) sink << note << '\n';
    sink << "path matrix:\n";
    print_rows(sink, matrix_rows(path_weight_matrix(net)), "text");
  }
}

std::string join(const std::vector<Rational>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].str();
  return out;
}

int cmd_net(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.depth == 0) throw PreconditionError("--depth must be at least 1");
  std::optional<WeightedNetwork> net;
  Matrix expected;
  std::vector<std::string> notes;
  if (o.kind == "tridiag-planar" || o.kind == "tridiag-tp2") {
    if (o.params.empty()) throw PreconditionError(o.kind + " needs --params a,b,r,s,t");
    const TridiagParams p = parse_params(o.params);
    expected = p.production(o.depth - 1);
    if (o.kind == "tridiag-tp2") {
      net = tridiag_tp2_network(p, o.depth);
    } else {
      auto planar = tridiag_planar_network(p, o.depth);
      static const char* const kinds[] = {"bidiagonal (r = 0)", "bidiagonal (s = 0)", "a > 0", "a = 0"};
      notes.push_back(std::string("case: ") + kinds[static_cast<int>(planar.kind)]);
      if (!planar.k.empty()) {
        notes.push_back("k: " + join(planar.k));
        notes.push_back("l: " + join(planar.l));
      }
      net = std::move(planar.network);
    }
  } else if (o.kind == "bidiag") {
    if (o.diag.empty()) throw PreconditionError("bidiag needs --diag");
    const auto diag = parse_list(o.diag);
    const auto off = o.offdiag.empty() ? std::vector<Rational>(diag.size() - 1) : parse_list(o.offdiag);
    const bool upper = o.orientation == "upper";
    net = bidiagonal_network(diag, off, upper ? BidiagonalOrientation::upper : BidiagonalOrientation::lower);
    expected = bidiagonal_matrix(diag, off, upper);
  } else if (o.kind == "toeplitz") {
    if (o.seq.empty()) throw PreconditionError("toeplitz needs --seq");
    const auto a = parse_list(o.seq);
    net = network_from_toeplitz(a, o.depth);
    expected = toeplitz_matrix(a, o.depth, o.depth);
  } else {
    if (o.left.empty() || o.right.empty()) throw PreconditionError("compose needs --left and --right");
    const WeightedNetwork first = network_from_json(read_json(o.left));
    const WeightedNetwork second = network_from_json(read_json(o.right));
    net = compose(first, second);
    expected = path_weight_matrix(first) * path_weight_matrix(second);
  }

  if (path_weight_matrix(*net) != expected) {
    err << "self-check failed: the network's path matrix differs from the expected matrix\n";
    return kViolation;
  }
  if (o.output.empty()) {
    emit_network(*net, o, out, notes);
  } else {
    std::ofstream file(o.output);
    if (!file) throw ParseError("cannot write " + o.output);
    emit_network(*net, o, file, notes);
  }
  return kPass;
}

int cmd_lgv(const Options& o, std::ostream& out) {
  if (o.network.empty()) throw PreconditionError("lgv needs --network");
  const WeightedNetwork net = network_from_json(read_json(o.network));
  const auto rows = parse_indices(o.index_rows);
  const auto cols = parse_indices(o.index_cols);
  OracleCaps caps = caps_from_env();
  if (o.max_order) caps.max_order = *o.max_order;
  if (o.max_paths) caps.max_paths_per_pair = *o.max_paths;
  if (o.max_families) caps.max_families = *o.max_families;

  const Rational signed_sum = lgv_signed_determinant(net, rows, cols, caps);
  const Rational direct = minor(path_weight_matrix(net), rows, cols);
  std::optional<Rational> nonintersecting;
  std::string skipped;
  if (!net.is_planar()) {
    skipped = "network not planar";
  } else if (!check_compatibility(net, rows, cols, caps)) {
    skipped = "sources and sinks not compatible";
  } else {
    nonintersecting = lgv_nonintersecting_sum(net, rows, cols, caps);
  }
  const bool agree = signed_sum == direct && (!nonintersecting || *nonintersecting == direct);

  if (o.format == "json") {
    json j = {{"rows", rows}, {"cols", cols}, {"signed_sum", signed_sum.str()}, {"minor", direct.str()},
              {"agree", agree}};
    j["nonintersecting_sum"] = nonintersecting ? json(nonintersecting->str()) : json(nullptr);
    out << j.dump() << '\n';
  } else {
    out << "rows " << set_str(rows) << " cols " << set_str(cols) << '\n';
    out << "signed path-family sum = " << signed_sum << '\n';
    out << "minor of path matrix = " << direct << '\n';
    if (nonintersecting) {
      out << "non-intersecting sum = " << *nonintersecting << '\n';
    } else {
      out << "non-intersecting sum: skipped (" << skipped << ")\n";
    }
    out << "agreement: " << (agree ? "yes" : "no") << '\n';
  }
  return agree ? kPass : kViolation;
}

}  // namespace

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const std::string value = trim(item);
    if (value.empty()) throw ParseError("empty item in list \"" + text + "\"");
    out.push_back(Rational::parse(value));
  }
  if (out.empty()) throw ParseError("empty list");
  return out;
}

std::vector<Rational> read_sequence_file(const std::string& path) {
  std::stringstream in(read_file(path));
  std::vector<std::vector<std::string>> lines;
  std::string line;
  bool has_comma = false;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    has_comma = has_comma || t.find(',') != std::string::npos;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::stringstream tokens(line);
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(w);
    lines.push_back(std::move(words));
  }
  const bool bfile = !has_comma && !lines.empty() &&
                     std::ranges::all_of(lines, [](const auto& w) { return w.size() == 2; });
  std::vector<Rational> out;
  for (std::size_t n = 0; n < lines.size(); ++n) {
    if (bfile) {
      if (lines[n][0] != std::to_string(n)) {
        throw ParseError(path + ": expected index " + std::to_string(n) + ", got " + lines[n][0]);
      }
      out.push_back(Rational::parse(lines[n][1]));
    } else {
      for (const auto& w : lines[n]) out.push_back(Rational::parse(w));
    }
  }
  if (out.empty()) throw ParseError(path + ": no coefficients");
  return out;
}

OracleCaps caps_from_env() {
  OracleCaps caps;
  const char* env = std::getenv("RTP_ORACLE_CAPS");
  if (env == nullptr) return caps;
  std::stringstream in(env);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("RTP_ORACLE_CAPS: expected key=value, got \"" + item + "\"");
    const std::string key = trim(item.substr(0, eq));
    const Rational v = Rational::parse(item.substr(eq + 1));
    if (!v.is_integer() || v.sign() <= 0) throw ParseError("RTP_ORACLE_CAPS: " + key + " must be a positive integer");
    const auto n = static_cast<std::size_t>(v.value().get_num().get_ui());
    if (key == "order") {
      caps.max_order = n;
    } else if (key == "paths") {
      caps.max_paths_per_pair = n;
    } else if (key == "families") {
      caps.max_families = n;
    } else {
      throw ParseError("RTP_ORACLE_CAPS: unknown key \"" + key + "\"");
    }
  }
  return caps;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app("Riordan arrays, total positivity and planar networks, in exact arithmetic.", "rtp");
  app.require_subcommand(1);

  auto add_az = [&](CLI::App* cmd) {
    cmd->add_option("--a", o.a, "A-sequence, e.g. 1,2,1");
    cmd->add_option("--z", o.z, "Z-sequence, e.g. 1,1");
  };
  auto add_gf = [&](CLI::App* cmd) {
    cmd->add_option("--g", o.g, "coefficients of g, e.g. 1,1,1");
    cmd->add_option("--f", o.f, "coefficients of f, e.g. 0,1,1");
    cmd->add_option("--gf", o.gf_files, "coefficient files for g and f")->expected(2);
    cmd->add_option("--input", o.input, "JSON file with {a, z} or {g, f}");
  };

  auto* gen = app.add_subcommand("gen", "print rows 0..N of a Riordan triangle");
  add_az(gen);
  add_gf(gen);
  gen->add_option("--rows", o.rows, "last row N")->capture_default_str();
  gen->add_option("--format", o.format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->default_val("text");

  auto* check = app.add_subcommand("check", "enumerate minors of a leading block");
  check->add_option("target", o.target, "triangle, production or toeplitz")
      ->required()
      ->check(CLI::IsMember({"triangle", "production", "toeplitz"}));
  add_az(check);
  add_gf(check);
  check->add_option("--params", o.params, "tri-diagonal production a,b,r,s,t");
  check->add_option("--seq", o.seq, "Toeplitz sequence a_0,a_1,...");
  check->add_option("--order", o.order, "TP order r")->capture_default_str();
  check->add_option("--size", o.size, "leading block size")->capture_default_str();
  check->add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");

  auto* criteria = app.add_subcommand("criteria", "tri-diagonal TP2 and TP criteria");
  criteria->add_option("--params", o.params, "a,b,r,s,t")->required();
  criteria->add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");

  auto* net = app.add_subcommand("net", "build and export a weighted network");
  net->add_option("kind", o.kind, "tridiag-planar, tridiag-tp2, bidiag, toeplitz or compose")
      ->required()
      ->check(CLI::IsMember({"tridiag-planar", "tridiag-tp2", "bidiag", "toeplitz", "compose"}));
  net->add_option("--params", o.params, "a,b,r,s,t");
  net->add_option("--depth", o.depth, "matrix size")->capture_default_str();
  net->add_option("--diag", o.diag, "bidiagonal diagonal");
  net->add_option("--offdiag", o.offdiag, "bidiagonal off-diagonal");
  net->add_option("--orientation", o.orientation, "upper or lower")
      ->check(CLI::IsMember({"upper", "lower"}))
      ->capture_default_str();
  net->add_option("--seq", o.seq, "Toeplitz sequence");
  net->add_option("--left", o.left, "network JSON applied first");
  net->add_option("--right", o.right, "network JSON applied second");
  net->add_option("--format", o.format, "dot, json, text or csv")
      ->check(CLI::IsMember({"dot", "json", "text", "csv"}))
      ->default_val("dot");
  net->add_option("--output", o.output, "write to a file instead of stdout");

  auto* lgv = app.add_subcommand("lgv", "path-family oracles for one minor of a network");
  lgv->add_option("--network", o.network, "network JSON")->required();
  lgv->add_option("--rows", o.index_rows, "source indices I")->capture_default_str();
  lgv->add_option("--cols", o.index_cols, "sink indices J")->capture_default_str();
  lgv->add_option("--max-order", o.max_order, "largest |I| (overrides RTP_ORACLE_CAPS)");
  lgv->add_option("--max-paths", o.max_paths, "paths per source/sink pair");
  lgv->add_option("--max-families", o.max_families, "families per query");
  lgv->add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kPass;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (check->parsed()) return cmd_check(o, out);
    if (criteria->parsed()) return cmd_criteria(o, out);
    if (net->parsed()) return cmd_net(o, out, err);
    return cmd_lgv(o, out);
  } catch (const InternalError& e) {
    err << "internal consistency check failed: " << e.what() << '\n';
    return kViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace rtp::cli
