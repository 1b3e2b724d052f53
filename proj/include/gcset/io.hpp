#pragma once

#include "gcset/harness.hpp"
#include "gcset/nodeset.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gcset {

// On-disk form of a node set: degree plus coordinates as exact strings
// ("p/q" or an integer string). Rationals never cross the file boundary as
// floats.
struct NodeSetDocument {
    int degree = 0;
    std::vector<std::pair<std::string, std::string>> nodes;
    std::optional<std::vector<std::string>> labels;
    std::optional<size_t> distinguished;  // index of the node B, when present
};

struct ParsedNodeSet {
    NodeSet set;
    std::optional<size_t> distinguished;
    std::vector<std::string> labels;    // empty when absent
    std::vector<std::string> warnings;  // e.g. degree/N mismatch
};

NodeSetDocument to_document(const NodeSet& x, std::optional<size_t> distinguished = std::nullopt,
                            std::vector<std::string> labels = {});

// Canonical JSON text (keys sorted, coordinates reduced); parse-serialize
// round-trips field for field.
std::string write_document(const NodeSetDocument& doc);

// Strict parse; throws std::invalid_argument with "malformed rational",
// "duplicate node", etc. A degree/N mismatch is only a warning: non-correct
// sets stay loadable for analysis.
ParsedNodeSet parse_nodeset(const std::string& text);

// One-line JSON for report witnesses.
std::string nodeset_document_json(const NodeSet& x,
                                  std::optional<size_t> distinguished = std::nullopt);

// Line-oriented, byte-stable report format: one "CLAIM <id> <status> <detail>"
// line per check, fails followed by an indented witness block.
std::string serialize_report(const std::vector<VerificationReport>& reports);

struct RenderOptions {
    int min_k = 3;                      // draw census lines with k >= min_k
    std::optional<size_t> highlight;    // node index: mark B and its used 2-node lines
};

// Deterministic SVG: circles per node, clipped segments per census line,
// maximal lines styled distinctly; viewBox is the node bounding box padded
// by 10% per side. Identical inputs give byte-identical output.
std::string render_svg(const NodeSet& x, const RenderOptions& options = {});

}  // namespace gcset
