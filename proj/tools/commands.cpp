#include "commands.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "graphprod/contact.hpp"
#include "graphprod/disk_diagram.hpp"
#include "graphprod/errors.hpp"
#include "graphprod/render.hpp"
#include "graphprod/subgroup.hpp"
#include "graphprod/word_calculus.hpp"
#include "oracle.hpp"

namespace graphprod::cli {

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << content;
}

void expect_args(const CommandOptions& o, std::size_t lo, std::size_t hi) {
  if (o.args.size() < lo || o.args.size() > hi) {
    throw InputError("expected " + (lo == hi ? std::to_string(lo) : std::to_string(lo) + "-" + std::to_string(hi)) +
                     " arguments, got " + std::to_string(o.args.size()));
  }
}

std::string trace_text(const ReductionTrace& trace) {
  std::string out;
  for (const auto& m : trace) {
    if (!out.empty()) out += ' ';
    out += (m.kind == ReductionMove::Kind::Swap ? "swap(" : "merge(") + std::to_string(m.position) + ")";
  }
  return out;
}

void print_functions(std::ostream& out, const char* label, const CombingFunctions& f) {
  out << label << " beginning";
  for (auto b : f.beginning) out << ' ' << b;
  out << "\n" << label << " ending";
  for (auto e : f.ending) out << ' ' << e;
  out << "\n";
}

int cmd_reduce(const DefiningGraph& graph, const CommandOptions& o, std::ostream& out) {
  expect_args(o, 1, 1);
  const PrismWord w = parse_word(graph, o.args[0]);
  const Reduction r = reduce_to_geodesic(graph, w);
  out << format_word(graph, r.geodesic) << "\nlength " << r.geodesic.size() << "\n";
  if (!o.json.empty()) {
    std::ostringstream j;
    j << "{\"input\": \"" << format_word(graph, w) << "\", \"geodesic\": \"" << format_word(graph, r.geodesic)
      << "\", \"length\": " << r.geodesic.size() << ", \"trace\": \"" << trace_text(r.trace) << "\"}\n";
    write_file(o.json, j.str());
  }
  return kOk;
}

int cmd_geodesics(const ProjectConfig& config, const DefiningGraph& graph, const CommandOptions& o,
                  std::ostream& out) {
  expect_args(o, 1, 1);
  const auto reps =
      geodesic_representatives(graph, parse_word(graph, o.args[0]), o.budget.value_or(config.budgets.geodesics));
  for (const auto& w : reps) out << format_word(graph, w) << "\n";
  out << "count " << reps.size() << "\n";
  return kOk;
}

int cmd_star_length(const DefiningGraph& graph, const CommandOptions& o, std::ostream& out) {
  expect_args(o, 1, 1);
  const PrismWord g = geodesic_form(graph, parse_word(graph, o.args[0]));
  out << format_word(graph, g) << "\nprism-length " << g.size() << "\nstar-length " << star_length(graph, g)
      << "\n";
  return kOk;
}

int cmd_diagram(const DefiningGraph& graph, const CommandOptions& o, std::ostream& out) {
  expect_args(o, 1, 1);
  const DiskDiagram d = build_diagram(graph, parse_word(graph, o.args[0]));
  for (const auto& b : d.blocks) {
    out << graph.name(b.vertex) << ":";
    for (auto p : b.roots) out << ' ' << p;
    out << "\n";
  }
  out << "blocks " << d.blocks.size() << "\n";
  const auto violations = validate(graph, d);
  for (const auto& v : violations) out << "violation " << v << "\n";
  if (!o.svg.empty()) write_file(o.svg, diagram_to_svg(graph, d));
  if (!o.json.empty()) write_file(o.json, diagram_to_json(graph, d));
  return violations.empty() ? kOk : kInvariantViolation;
}

int cmd_comb(const DefiningGraph& graph, const CommandOptions& o, std::ostream& out) {
  expect_args(o, 1, 2);
  const PrismWord g = parse_word(graph, o.args[0]);
  const PrismWord w = o.args.size() > 1 ? parse_word(graph, o.args[1]) : geodesic_form(graph, g);
  if (is_geodesic(graph, w)) throw InputError("w is not geodesic");
  if (!same_element(graph, g, w)) throw InputError("g and w are different elements");
  const DiskDiagram d = build_diagram(graph, concat(g, inverse(graph, w)));
  const BoundaryRange range = w.empty() ? BoundaryRange{0, 0} : BoundaryRange{g.size(), w.size()};
  print_functions(out, "before", combing_functions(graph, d, range));
  const CombResult r = o.right ? right_comb(graph, d, range) : left_comb(graph, d, range);
  print_functions(out, "after", combing_functions(graph, r.diagram, range));
  out << "w' " << format_word(graph, r.word) << "\npermutation";
  for (auto p : r.permutation) out << ' ' << p;
  out << "\n";
  if (!o.svg.empty()) write_file(o.svg, diagram_to_svg(graph, r.diagram));
  if (!o.json.empty()) write_file(o.json, diagram_to_json(graph, r.diagram));
  return kOk;
}

int cmd_contact_bounds(const ProjectConfig& config, const DefiningGraph& graph, const CommandOptions& o,
                       std::ostream& out) {
  expect_args(o, 4, 4);
  const Hyperplane h1 = make_hyperplane(graph, graph.id(o.args[0]), parse_word(graph, o.args[1]));
  const Hyperplane h2 = make_hyperplane(graph, graph.id(o.args[2]), parse_word(graph, o.args[3]));
  StarLength star(graph);
  const ContactBounds b = contact_distance_bounds(star, h1, h2);
  out << "h1 " << format_hyperplane(graph, h1) << "\nh2 " << format_hyperplane(graph, h2) << "\n";
  out << "carriers-intersect " << (carriers_intersect(graph, h1, h2) ? "true" : "false") << "\n";
  out << "star-length " << b.star << "\nlower " << b.lower << "\nupper " << b.upper << "\n";
  const auto found = contact_distance_search(graph, h1, h2, o.budget.value_or(config.budgets.search));
  out << "restricted-search " << (found ? std::to_string(*found) : "none") << "\n";
  if (!o.dot.empty()) {
    const PrismWord x = product(graph, inverse(graph, h1.carrier_rep), h2.carrier_rep);
    std::vector<Hyperplane> nodes{h1};
    PrismWord prefix = h1.carrier_rep;
    for (const auto& l : x) {
      nodes.push_back(make_hyperplane(graph, l.vertex, prefix));
      prefix.push_back(l);
    }
    nodes.push_back(h2);
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    write_file(o.dot, contact_dot(graph, nodes));
  }
  return kOk;
}

int cmd_orbit(const DefiningGraph& graph, const CommandOptions& o, std::ostream& out) {
  expect_args(o, 1, 1);
  StarLength star(graph);
  const OrbitProfile p = orbit_profile(star, parse_word(graph, o.args[0]), static_cast<long>(o.horizon.value_or(10)));
  std::ostringstream text;
  text << orbit_jsonl(p);
  text << "{\"translation_estimate\": " << std::setprecision(6) << p.translation_estimate
       << ", \"loxodromic_at_horizon\": " << (p.loxodromic_at_horizon ? "true" : "false") << "}\n";
  out << text.str();
  if (!o.json.empty()) write_file(o.json, text.str());
  return kOk;
}

int cmd_analyze(const ProjectConfig& config, const DefiningGraph& graph, const CommandOptions& o,
                std::ostream& out) {
  expect_args(o, 0, 1);
  if (config.subgroups.empty()) throw InputError("the config declares no subgroups");
  const std::string name = o.args.empty() ? config.subgroups.front().name : o.args[0];
  const SubgroupSpec h = config.subgroup(graph, name);
  SamplingOptions sampling;
  sampling.budget = o.budget.value_or(config.budgets.ball);
  sampling.seed = o.seed.value_or(config.seed);
  const AnalysisReport report = analyze(graph, h, o.horizon.value_or(8), sampling);
  const std::string text = report_json(graph, report, config_hash(config), config.warnings);
  if (o.json.empty()) {
    out << text;
  } else {
    write_file(o.json, text);
    out << "observed N " << report.join_busting.n << "\nobserved D " << report.constants.d << "\nobserved K "
        << report.constants.k << "\nobserved C " << report.constants.c << "\ncertificates "
        << report.certificates.size() << "\n";
  }
  return report.constants.redcon_bound_failures == 0 ? kOk : kInvariantViolation;
}

// Finite stand-in for every vertex group: BFS needs finite generating sets.
DefiningGraph oracle_graph(const ProjectConfig& config) {
  std::vector<GroupSpec> groups;
  for (const auto& g : config.groups) groups.push_back(g.is_finite() ? g : GroupSpec::finite_cyclic(5));
  return DefiningGraph(config.vertices, config.edges, groups);
}

int cmd_oracle_check(const ProjectConfig& config, const CommandOptions& o, std::ostream& out) {
  expect_args(o, 0, 0);
  const DefiningGraph graph = oracle_graph(config);
  std::size_t failures = 0;
  out << "groups";
  for (VertexId v = 0; v < graph.vertex_count(); ++v) out << ' ' << graph.name(v) << ':' << graph.group(v).tag();
  out << "\n";

  const auto ball = oracle::prism_ball(graph, o.radius);
  std::size_t prism_bad = 0;
  for (const auto& [k, d] : ball) {
    if (prism_length(graph, oracle::word_of(k)) != d) ++prism_bad;
  }
  out << "prism-length " << ball.size() << " elements, " << prism_bad << " mismatches\n";
  failures += prism_bad;

  const std::size_t sr = std::min(o.star_radius, o.radius);
  const oracle::StarOracle star_oracle(graph, sr);
  StarLength star(graph);
  std::size_t star_bad = 0;
  std::size_t star_total = 0;
  for (const auto& [k, d] : ball) {
    if (d > sr) continue;
    ++star_total;
    const PrismWord w = oracle::word_of(k);
    if (star(w) != star_oracle.distance(w)) ++star_bad;
  }
  out << "star-length " << star_total << " elements, " << star_bad << " mismatches\n";
  failures += star_bad;

  std::mt19937_64 rng(o.seed.value_or(config.seed));
  std::size_t diagram_bad = 0;
  for (std::size_t i = 0; i < o.samples; ++i) {
    const auto id = oracle::random_identity_word(graph, rng, 12);
    const DiskDiagram d = build_diagram(graph, id.s);
    const BoundaryRange range = id.w.empty() ? BoundaryRange{0, 0} : BoundaryRange{id.g.size(), id.w.size()};
    if (!validate(graph, d, range).empty()) ++diagram_bad;
  }
  out << "diagrams " << o.samples << " identity words, " << diagram_bad << " invalid\n";
  failures += diagram_bad;
  out << (failures == 0 ? "oracle-check passed" : "oracle-check FAILED") << "\n";
  return failures == 0 ? kOk : kInvariantViolation;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"reduce",         "geodesics", "star-length", "diagram",     "comb",
                                              "contact-bounds", "orbit",     "analyze",     "oracle-check"};
  return names;
}

ProjectConfig default_config() {
  return parse_config(R"(graph:
  vertices: [a, b, c, d]
  edges: [[a, b], [b, c], [c, d]]
groups: {a: Z, b: Z, c: Z, d: Z}
subgroups:
  H1: {generators: ["a:1.d:1"]}
  H2: {generators: ["a:1.b:1"]}
)");
}

int run_command(const ProjectConfig& config, const std::string& command, const CommandOptions& options,
                std::ostream& out, std::ostream& err) {
  try {
    const DefiningGraph graph = config.graph();
    if (command == "reduce") return cmd_reduce(graph, options, out);
    if (command == "geodesics") return cmd_geodesics(config, graph, options, out);
    if (command == "star-length") return cmd_star_length(graph, options, out);
    if (command == "diagram") return cmd_diagram(graph, options, out);
    if (command == "comb") return cmd_comb(graph, options, out);
    if (command == "contact-bounds") return cmd_contact_bounds(config, graph, options, out);
    if (command == "orbit") return cmd_orbit(graph, options, out);
    if (command == "analyze") return cmd_analyze(config, graph, options, out);
    if (command == "oracle-check") return cmd_oracle_check(config, options, out);
    err << "error: unknown command '" << command << "'\n";
    return kInputError;
  } catch (const BudgetExceeded& e) {
    err << "error: budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const InvalidDiagram& e) {
    err << "error: " << e.what() << "\n";
    return kInvariantViolation;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace graphprod::cli
