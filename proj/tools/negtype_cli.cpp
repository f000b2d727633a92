// negtype: command-line front end for the library.
//
// Exit codes: 0 the property holds (or the requested output was produced),
// 1 the property is refuted and a certificate was written, 2 bad input.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "negtype/analysis.hpp"
#include "negtype/certificate.hpp"
#include "negtype/families.hpp"
#include "negtype/io.hpp"
#include "negtype/l1cut.hpp"
#include "negtype/theta.hpp"
#include "negtype/transform.hpp"
#include "negtype/verify/suite.hpp"
#include "negtype/witness.hpp"

using namespace negtype;

namespace {

constexpr int kHolds = 0;
constexpr int kRefuted = 1;
constexpr int kInputError = 2;

/// 64-bit FNV-1a, rendered as 16 hex digits.
class Digest {
 public:
  void add(const std::string& s) {
    for (unsigned char c : s) {
      h_ ^= c;
      h_ *= 1099511628211ULL;
    }
    h_ ^= 0xff;  // field separator
    h_ *= 1099511628211ULL;
  }
  std::string hex() const {
    std::ostringstream out;
    out << std::hex;
    out.width(16);
    out.fill('0');
    out << h_;
    return out.str();
  }

 private:
  std::uint64_t h_ = 14695981039346656037ULL;
};

struct Common {
  std::uint64_t seed = 0;
  std::size_t starts = 64;
  std::size_t iters = 400;
  std::string points;
  std::string out;
  std::size_t max_cuts_n = 14;
};

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)), start_(std::chrono::steady_clock::now()) {
    digest_.add(command_);
  }

  void input_file(const std::string& path) { digest_.add(read_text_file(path)); }
  void input_value(const std::string& name, const std::string& value) { digest_.add(name + "=" + value); }

  Json verdicts = Json::object();
  std::optional<Json> certificate;
  Json extra = Json::object();

  void emit(const std::string& out_path) const {
    Json j{{"command", command_}, {"inputs_digest", digest_.hex()}, {"verdicts", verdicts}};
    for (const auto& [k, v] : extra.items()) j[k] = v;
    if (certificate) j["certificate"] = *certificate;
    j["wall_time_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    const std::string text = dump(j);
    if (out_path.empty())
      std::cout << text;
    else
      write_text_file(out_path, text);
  }

 private:
  std::string command_;
  std::chrono::steady_clock::time_point start_;
  Digest digest_;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) out.push_back(part);
  return out;
}

std::vector<Point> all_vertices(const MetricGraph& g) {
  std::vector<Point> out;
  for (const auto& v : g.vertices()) out.push_back(Point::vertex(v));
  return out;
}

/// Points from --points, or every vertex of the graph.
std::vector<Point> load_points(const MetricGraph& g, const Common& c, Report& report) {
  if (c.points.empty()) return all_vertices(g);
  report.input_file(c.points);
  auto pts = read_points_file(c.points);
  if (pts.empty()) throw InputError("points file is empty");
  for (auto& p : pts) p = canonical_point(g, p);
  return pts;
}

MetricGraph load_graph(const std::string& path, Report& report) {
  report.input_file(path);
  return read_graph_file(path);
}

Json theta_summary(const Theta& t) {
  Json lengths = Json::array();
  for (const auto& p : t.paths) lengths.push_back(rational_to_json(p.length));
  return {{"u", t.u}, {"v", t.v}, {"path_lengths", lengths}, {"total", rational_to_json(t.total)}};
}

// ---- subcommands ---------------------------------------------------------

struct MakeArgs {
  std::string family;
  std::string lengths;
  std::size_t n = 0;
  std::string parts;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  std::string min_len = "1";
  bool loops = false;
  std::string of;
  std::size_t k = 0;
  std::string out;
};

int cmd_make(const MakeArgs& a) {
  MetricGraph g;
  if (a.family == "subdivide") {
    if (a.of.empty()) throw InputError("make subdivide needs --of <graph file>");
    if (a.k == 0) throw InputError("make subdivide needs -k >= 1");
    g = subdivide(read_graph_file(a.of), a.k);
  } else {
    FamilySpec spec;
    spec.seed = a.seed;
    spec.min_len = parse_rational(a.min_len);
    spec.allow_loops = a.loops;
    spec.n = a.n;
    spec.m = a.m;
    if (a.family == "theta") {
      spec.family = Family::theta;
      for (const auto& s : split(a.lengths.empty() ? "1,1,1" : a.lengths, ',')) spec.lengths.push_back(parse_rational(s));
    } else if (a.family == "complete") {
      spec.family = Family::complete;
    } else if (a.family == "complete_bipartite") {
      spec.family = Family::complete_bipartite;
      const auto p = split(a.parts, ',');
      if (p.size() != 2) throw InputError("complete_bipartite needs --parts a,b");
      spec.a = std::stoul(p[0]);
      spec.b = std::stoul(p[1]);
    } else if (a.family == "cycle") {
      spec.family = Family::cycle;
    } else if (a.family == "path") {
      spec.family = Family::path;
    } else if (a.family == "random_connected") {
      spec.family = Family::random_connected;
    } else if (a.family == "cactus") {
      spec.family = Family::cactus;
    } else {
      throw InputError("unknown family '" + a.family + "'");
    }
    g = make_named(spec);
  }
  const std::string text = dump(graph_to_json(g));
  if (a.out.empty())
    std::cout << text;
  else
    write_text_file(a.out, text);
  return kHolds;
}

int cmd_info(const std::string& graph, const Common& c) {
  Report report("info");
  const MetricGraph g = load_graph(graph, report);
  report.verdicts["connected"] = true;  // enforced when the graph is built
  report.extra["vertices"] = g.vertex_count();
  report.extra["edges"] = g.edge_count();
  const bool has_theta = find_theta(g).has_value();
  report.verdicts["theta_containing"] = has_theta;
  if (has_theta) {
    const Theta t = minimal_theta(g);
    report.extra["minimal_theta"] = theta_summary(t);
    report.certificate = theta_certificate(t);
  }
  report.emit(c.out);
  return kHolds;
}

int cmd_witness(const std::string& graph, const Common& c) {
  Report report("witness");
  const MetricGraph g = load_graph(graph, report);
  const Witness w = construct_witness(g);
  const bool ok = w.gap >= frac(1, 12);
  report.verdicts["gap"] = rational_to_json(w.gap);
  report.verdicts["gap_at_least_1/12"] = ok;
  report.extra["theta"] = theta_summary(w.theta);
  report.certificate = witness_certificate(w);
  report.emit(c.out);
  return ok ? kHolds : kRefuted;
}

int cmd_negtype(const std::string& graph, const Common& c) {
  Report report("negtype");
  const MetricGraph g = load_graph(graph, report);
  const auto pts = load_points(g, c, report);
  const FiniteMetric m = distance_matrix(g, pts);
  const auto v = is_negative_type(m);
  report.verdicts["negative_type"] = v.negative_type;
  if (!v.negative_type) report.verdicts["gamma"] = rational_to_json(v.violation_gamma);
  report.certificate = negtype_certificate(pts, m, v);
  report.emit(c.out);
  return v.negative_type ? kHolds : kRefuted;
}

int cmd_gap(const std::string& graph, const Common& c) {
  Report report("gap");
  report.input_value("seed", std::to_string(c.seed));
  report.input_value("starts", std::to_string(c.starts));
  report.input_value("iters", std::to_string(c.iters));
  const MetricGraph g = load_graph(graph, report);
  const auto pts = load_points(g, c, report);
  const FiniteMetric m = distance_matrix(g, pts);
  GapOptions o;
  o.seed = c.seed;
  o.starts = c.starts;
  o.iters = c.iters;
  const GapBracket b = gap_bracket(m, o);
  report.verdicts["lower"] = rational_to_json(b.lower);
  report.verdicts["upper"] = rational_to_json(b.upper);
  report.certificate = gap_certificate(pts, m, b);
  report.emit(c.out);
  return kHolds;
}

int cmd_l1(const std::string& graph, const Common& c) {
  Report report("l1");
  report.input_value("max-cuts-n", std::to_string(c.max_cuts_n));
  const MetricGraph g = load_graph(graph, report);
  const auto pts = load_points(g, c, report);
  const FiniteMetric m = distinct_points(distance_matrix(g, pts));
  if (m.size() != pts.size()) throw InputError("l1 needs distinct points");
  L1Options o;
  o.max_points = c.max_cuts_n;
  const L1Result r = is_l1_embeddable(m, o);
  const bool feasible = std::holds_alternative<CutDecomposition>(r);
  report.verdicts["l1_embeddable"] = feasible;
  if (feasible) report.verdicts["cuts"] = std::get<CutDecomposition>(r).terms.size();
  report.certificate = l1_certificate(pts, m, r);
  report.emit(c.out);
  return feasible ? kHolds : kRefuted;
}

int cmd_subdivide(const std::string& graph, std::size_t k, const std::string& graph_out, const Common& c) {
  Report report("subdivide");
  report.input_value("k", std::to_string(k));
  const MetricGraph g = load_graph(graph, report);
  const SubdivisionWitness s = subdivision_witness(g, k);
  if (!graph_out.empty()) write_text_file(graph_out, dump(graph_to_json(s.graph)));
  report.verdicts["continuous_gap"] = rational_to_json(s.continuous_gap);
  report.verdicts["vertex_gap"] = rational_to_json(s.vertex_gap);
  report.verdicts["vertex_gap_positive"] = s.vertex_gap > 0;
  report.extra["subdivided_vertices"] = s.graph.vertex_count();
  report.certificate = subdivision_certificate(s);
  report.emit(c.out);
  return s.vertex_gap > 0 ? kHolds : kRefuted;
}

int cmd_verify(const std::string& cert_path, const std::string& graph, const Common& c) {
  Report report("verify");
  report.input_file(cert_path);
  const MetricGraph g = load_graph(graph, report);
  Json cert = read_json_file(cert_path);
  if (cert.is_object() && cert.contains("certificate")) cert = cert.at("certificate");
  const VerifyReport v = verify_certificate(cert, g);
  report.verdicts["kind"] = v.kind;
  report.verdicts["valid"] = v.ok();
  report.extra["problems"] = v.problems;
  report.emit(c.out);
  return v.ok() ? kHolds : kRefuted;
}

int cmd_check_suite(bool list, bool mutation, const std::vector<int>& only, const Common& c) {
  if (list) {
    for (const auto& info : verify::check_list()) std::cout << info.id << "  " << info.title << "\n";
    return kHolds;
  }
  verify::CheckSuite suite(mutation ? verify::MetricOracle(verify::corrupted_oracle)
                                    : verify::MetricOracle(verify::exact_oracle));
  Report report(mutation ? "check-paper --self-test-mutation" : "check-paper");
  Json results = Json::array();
  bool all = true;
  for (const auto& info : verify::check_list()) {
    if (!only.empty() && std::find(only.begin(), only.end(), info.id) == only.end()) continue;
    const auto r = suite.run(info.id);
    std::cerr << verify::format_result(r) << "\n";
    all = all && r.passed;
    results.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
  }
  report.verdicts["all_passed"] = all;
  report.extra["checks"] = std::move(results);
  report.emit(c.out);
  return all ? kHolds : kRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Negative type, l1 embeddings and theta witnesses for metric graphs"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", common.out, "Write the report here instead of stdout");
  };
  auto add_points = [&](CLI::App* sub) {
    sub->add_option("--points", common.points, "Points file (default: all vertices)")->check(CLI::ExistingFile);
  };

  MakeArgs make;
  auto* make_cmd = app.add_subcommand("make", "Write a graph from a named family");
  make_cmd->add_option("family", make.family,
                       "theta, complete, complete_bipartite, cycle, path, random_connected, cactus, subdivide")
      ->required();
  make_cmd->add_option("--lengths", make.lengths, "Theta path lengths, e.g. 1,1,1");
  make_cmd->add_option("-n", make.n, "Vertex count");
  make_cmd->add_option("--parts", make.parts, "Part sizes a,b for complete_bipartite");
  make_cmd->add_option("-m", make.m, "Edge count (random_connected) or block count (cactus)");
  make_cmd->add_option("--seed", make.seed, "Random seed");
  make_cmd->add_option("--min-len", make.min_len, "Smallest random edge length");
  make_cmd->add_flag("--loops", make.loops, "Allow loops in random_connected");
  make_cmd->add_option("--of", make.of, "Graph file to subdivide")->check(CLI::ExistingFile);
  make_cmd->add_option("-k", make.k, "Subdivision vertices per edge");
  make_cmd->add_option("--out", make.out, "Write the graph here instead of stdout");

  std::string graph, cert;
  auto* info_cmd = app.add_subcommand("info", "Counts, theta-containment and the minimal theta");
  info_cmd->add_option("graph", graph)->required()->check(CLI::ExistingFile);
  add_common(info_cmd);

  auto* witness_cmd = app.add_subcommand("witness", "Six-point witness with gap at least 1/12");
  witness_cmd->add_option("graph", graph)->required()->check(CLI::ExistingFile);
  add_common(witness_cmd);

  auto* negtype_cmd = app.add_subcommand("negtype", "Exact negative-type test");
  negtype_cmd->add_option("graph", graph)->required()->check(CLI::ExistingFile);
  add_points(negtype_cmd);
  add_common(negtype_cmd);

  auto* gap_cmd = app.add_subcommand("gap", "Bracket for the largest normalized gamma");
  gap_cmd->add_option("graph", graph)->required()->check(CLI::ExistingFile);
  add_points(gap_cmd);
  gap_cmd->add_option("--seed", common.seed);
  gap_cmd->add_option("--starts", common.starts);
  gap_cmd->add_option("--iters", common.iters);
  add_common(gap_cmd);

  auto* l1_cmd = app.add_subcommand("l1", "Exact cut-cone membership");
  l1_cmd->add_option("graph", graph)->required()->check(CLI::ExistingFile);
  add_points(l1_cmd);
  l1_cmd->add_option("--max-cuts-n", common.max_cuts_n, "Largest point count accepted");
  add_common(l1_cmd);

  std::size_t sub_k = 180;
  std::string graph_out;
  auto* sub_cmd = app.add_subcommand("subdivide", "Rounded vertex witness on the k-subdivision");
  sub_cmd->add_option("graph", graph)->required()->check(CLI::ExistingFile);
  sub_cmd->add_option("-k", sub_k, "Subdivision vertices per edge (>= 180)");
  sub_cmd->add_option("--graph-out", graph_out, "Also write the subdivided graph");
  add_common(sub_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Re-check a certificate against a graph");
  verify_cmd->add_option("certificate", cert)->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("graph", graph)->required()->check(CLI::ExistingFile);
  add_common(verify_cmd);

  bool list = false, mutation = false;
  std::vector<int> only;
  auto* check_cmd = app.add_subcommand("check-paper", "Run the reproduction suite");
  check_cmd->add_flag("--list", list, "List the checks without running them");
  check_cmd->add_flag("--self-test-mutation", mutation, "Run against a corrupted distance oracle");
  check_cmd->add_option("--only", only, "Run only these check numbers");
  add_common(check_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kHolds : kInputError;
  }

  try {
    if (*make_cmd) return cmd_make(make);
    if (*info_cmd) return cmd_info(graph, common);
    if (*witness_cmd) return cmd_witness(graph, common);
    if (*negtype_cmd) return cmd_negtype(graph, common);
    if (*gap_cmd) return cmd_gap(graph, common);
    if (*l1_cmd) return cmd_l1(graph, common);
    if (*sub_cmd) return cmd_subdivide(graph, sub_k, graph_out, common);
    if (*verify_cmd) return cmd_verify(cert, graph, common);
    if (*check_cmd) return cmd_check_suite(list, mutation, only, common);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const PreconditionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
