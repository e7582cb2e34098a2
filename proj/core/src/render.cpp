#include "graphprod/render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "json.hpp"

#include "graphprod/errors.hpp"

namespace graphprod {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                    "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

ordered_json vertex_set_json(const DefiningGraph& graph, const VertexSet& s) {
  ordered_json out = ordered_json::array();
  for (VertexId v : s.members()) out.push_back(graph.name(v));
  return out;
}

}  // namespace

std::string diagram_to_json(const DefiningGraph& graph, const DiskDiagram& d) {
  ordered_json doc;
  doc["boundary"] = ordered_json::array();
  for (const auto& l : d.boundary) doc["boundary"].push_back(format_letter(graph, l));
  doc["blocks"] = ordered_json::array();
  for (const auto& b : d.blocks) {
    doc["blocks"].push_back({{"vertex", graph.name(b.vertex)}, {"roots", b.roots}});
  }
  return doc.dump(2) + "\n";
}

DiskDiagram diagram_from_json(const DefiningGraph& graph, std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("diagram JSON: ") + e.what());
  }
  try {
    DiskDiagram d;
    for (const auto& token : doc.at("boundary")) {
      PrismWord letter = parse_word(graph, token.get<std::string>());
      if (letter.size() != 1) throw InputError("boundary token '" + token.get<std::string>() + "' is not one letter");
      d.boundary.push_back(letter[0]);
    }
    for (const auto& block : doc.at("blocks")) {
      d.blocks.push_back({graph.id(block.at("vertex").get<std::string>()),
                          block.at("roots").get<std::vector<std::size_t>>()});
    }
    return d;
  } catch (const json::exception& e) {
    throw InputError(std::string("diagram JSON: ") + e.what());
  }
}

std::string diagram_to_svg(const DefiningGraph& graph, const DiskDiagram& d) {
  const double size = 480.0;
  const double c = size / 2;
  const double radius = size / 2 - 60;
  const std::size_t n = d.size();
  auto point = [&](std::size_t p, double r) {
    const double angle = -std::numbers::pi / 2 + 2 * std::numbers::pi * static_cast<double>(p) /
                                                      static_cast<double>(std::max<std::size_t>(n, 1));
    return std::pair{c + r * std::cos(angle), c + r * std::sin(angle)};
  };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
  out << "  <circle cx=\"" << fixed(c) << "\" cy=\"" << fixed(c) << "\" r=\"" << fixed(radius)
      << "\" fill=\"none\" stroke=\"#444\" stroke-width=\"1.5\"/>\n";
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    const DualGraph& block = d.blocks[b];
    const char* colour = kPalette[block.vertex % std::size(kPalette)];
    double mx = 0;
    double my = 0;
    for (std::size_t p : block.roots) {
      auto [x, y] = point(p, radius);
      mx += x;
      my += y;
    }
    const auto k = static_cast<double>(std::max<std::size_t>(block.roots.size(), 1));
    mx /= k;
    my /= k;
    out << "  <g class=\"block\" data-vertex=\"" << xml_escape(graph.name(block.vertex)) << "\" stroke=\""
        << colour << "\" stroke-width=\"2\" fill=\"none\">\n";
    if (block.roots.size() == 2) {
      auto [x0, y0] = point(block.roots[0], radius);
      auto [x1, y1] = point(block.roots[1], radius);
      out << "    <line x1=\"" << fixed(x0) << "\" y1=\"" << fixed(y0) << "\" x2=\"" << fixed(x1) << "\" y2=\""
          << fixed(y1) << "\"/>\n";
    } else {
      for (std::size_t p : block.roots) {
        auto [x, y] = point(p, radius);
        out << "    <line x1=\"" << fixed(x) << "\" y1=\"" << fixed(y) << "\" x2=\"" << fixed(mx)
            << "\" y2=\"" << fixed(my) << "\"/>\n";
      }
    }
    out << "  </g>\n";
  }
  for (std::size_t p = 0; p < n; ++p) {
    auto [x, y] = point(p, radius);
    auto [lx, ly] = point(p, radius + 28);
    const char* colour = kPalette[d.boundary[p].vertex % std::size(kPalette)];
    out << "  <circle cx=\"" << fixed(x) << "\" cy=\"" << fixed(y) << "\" r=\"4\" fill=\"" << colour << "\"/>\n";
    out << "  <text x=\"" << fixed(lx) << "\" y=\"" << fixed(ly)
        << "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"middle\">"
        << xml_escape(format_letter(graph, d.boundary[p])) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string format_hyperplane(const DefiningGraph& graph, const Hyperplane& h) {
  return graph.name(h.vertex) + "@" + format_word(graph, h.carrier_rep);
}

std::string contact_dot(const DefiningGraph& graph, const std::vector<Hyperplane>& hyperplanes) {
  std::ostringstream out;
  out << "graph contact {\n  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < hyperplanes.size(); ++i) {
    out << "  h" << i << " [label=\"" << format_hyperplane(graph, hyperplanes[i]) << "\", color=\""
        << kPalette[hyperplanes[i].vertex % std::size(kPalette)] << "\"];\n";
  }
  for (std::size_t i = 0; i < hyperplanes.size(); ++i) {
    for (std::size_t j = i + 1; j < hyperplanes.size(); ++j) {
      if (carriers_intersect(graph, hyperplanes[i], hyperplanes[j])) out << "  h" << i << " -- h" << j << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string orbit_jsonl(const OrbitProfile& profile) {
  std::string out;
  for (const auto& row : profile.rows) {
    ordered_json line{{"n", row.n}, {"prism", row.prism}, {"star", row.star}};
    out += line.dump() + "\n";
  }
  return out;
}

std::string distortion_jsonl(const std::vector<DistortionRow>& rows) {
  std::string out;
  for (const auto& row : rows) {
    ordered_json line{{"word_length", row.word_length}, {"prism", row.prism}, {"star", row.star},
                      {"prism_bound", row.prism_bound}, {"star_bound", row.star_bound},
                      {"consistent", row.consistent}};
    out += line.dump() + "\n";
  }
  return out;
}

std::string report_json(const DefiningGraph& graph, const AnalysisReport& report,
                        const std::string& config_hash, const std::vector<std::string>& warnings) {
  ordered_json doc;
  doc["subgroup"] = report.subgroup;
  doc["config_hash"] = config_hash;
  doc["seed"] = report.sampling.seed;
  doc["horizon"] = report.horizon;
  doc["budgets"] = {{"ball", report.sampling.budget}, {"random_per_length", report.sampling.random_per_length}};
  doc["sampling"] = {{"samples", report.samples},
                     {"exhaustive_length", report.exhaustive_length},
                     {"geodesic_filter", report.geodesic_filter}};
  doc["join_busting"] = {{"observed_n", report.join_busting.n},
                         {"argmax", format_word(graph, report.join_busting.argmax)}};
  const ObservedConstants& c = report.constants;
  doc["constants"] = {{"observed_d", c.d},
                      {"observed_k", c.k},
                      {"observed_c", c.c},
                      {"max_spread_d", c.d_spread},
                      {"max_window_k", c.k_window},
                      {"max_spread_c", c.c_spread},
                      {"diagrams", c.diagrams},
                      {"concatenations", c.concatenations},
                      {"redcon_checks", c.redcon_checks},
                      {"redcon_failures", c.redcon_failures},
                      {"redcon_bound_failures", c.redcon_bound_failures}};
  ordered_json rows = ordered_json::array();
  bool all_prism = true, all_star = true, all_consistent = true;
  for (const auto& row : report.distortion) {
    rows.push_back({row.word_length, row.prism, row.star});
    all_prism &= row.prism_bound;
    all_star &= row.star_bound;
    all_consistent &= row.consistent;
  }
  doc["distortion"] = {{"columns", {"word_length", "prism", "star"}},
                       {"rows", rows},
                       {"prism_bound_holds", all_prism},
                       {"star_bound_holds", all_star},
                       {"consistent", all_consistent}};
  ordered_json certs = ordered_json::array();
  for (const auto& cert : report.certificates) {
    certs.push_back({{"element", format_word(graph, cert.element)},
                     {"join", vertex_set_json(graph, cert.join)},
                     {"conjugator", format_word(graph, cert.conjugator)}});
  }
  doc["certificates"] = certs;
  doc["hypotheses"] = {{"finite_vertex_groups", report.hypotheses.finite_vertex_groups},
                       {"isolated_vertices", report.hypotheses.isolated_vertices}};
  doc["warnings"] = warnings;
  return doc.dump(2) + "\n";
}

}  // namespace graphprod
