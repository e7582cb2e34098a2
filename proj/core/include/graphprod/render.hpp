#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "graphprod/contact.hpp"
#include "graphprod/disk_diagram.hpp"
#include "graphprod/subgroup.hpp"

namespace graphprod {

/// {"boundary": ["a:1", ...], "blocks": [{"vertex": "a", "roots": [0, 2]}, ...]}
std::string diagram_to_json(const DefiningGraph& graph, const DiskDiagram& d);
/// Throws InputError on malformed documents; the result is not validated.
DiskDiagram diagram_from_json(const DefiningGraph& graph, std::string_view text);

/// Boundary letters on a circle, every block drawn as a bundle of chords
/// meeting at the block's centre; colours are keyed by vertex. No timestamps.
std::string diagram_to_svg(const DefiningGraph& graph, const DiskDiagram& d);

/// Contact subgraph on the given hyperplanes: an edge wherever carriers intersect.
std::string contact_dot(const DefiningGraph& graph, const std::vector<Hyperplane>& hyperplanes);

std::string format_hyperplane(const DefiningGraph& graph, const Hyperplane& h);

/// One {"n", "prism", "star"} object per line.
std::string orbit_jsonl(const OrbitProfile& profile);

/// One object per distortion row.
std::string distortion_jsonl(const std::vector<DistortionRow>& rows);

std::string report_json(const DefiningGraph& graph, const AnalysisReport& report,
                        const std::string& config_hash, const std::vector<std::string>& warnings);

}  // namespace graphprod
