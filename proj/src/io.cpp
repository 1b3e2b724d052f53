#include "gcset/io.hpp"

#include "gcset/batch.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace gcset {

using nlohmann::json;

NodeSetDocument to_document(const NodeSet& x, std::optional<size_t> distinguished,
                            std::vector<std::string> labels) {
    NodeSetDocument doc;
    doc.degree = x.degree();
    for (const Point& p : x.nodes()) doc.nodes.emplace_back(to_string(p.x), to_string(p.y));
    if (!labels.empty()) doc.labels = std::move(labels);
    doc.distinguished = distinguished;
    return doc;
}

namespace {

json document_to_json(const NodeSetDocument& doc) {
    json j;
    j["degree"] = doc.degree;
    json nodes = json::array();
    for (const auto& [x, y] : doc.nodes) nodes.push_back(json::array({x, y}));
    j["nodes"] = std::move(nodes);
    if (doc.labels) j["labels"] = *doc.labels;
    if (doc.distinguished) j["distinguished"] = *doc.distinguished;
    return j;
}

}  // namespace

std::string write_document(const NodeSetDocument& doc) {
    return document_to_json(doc).dump(2) + "\n";
}

std::string nodeset_document_json(const NodeSet& x, std::optional<size_t> distinguished) {
    return document_to_json(to_document(x, distinguished)).dump();
}

ParsedNodeSet parse_nodeset(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("malformed document: not an object");
    if (!j.contains("degree") || !j["degree"].is_number_integer())
        throw std::invalid_argument("malformed document: missing integer degree");
    int degree = j["degree"].get<int>();
    if (degree < 0) throw std::invalid_argument("malformed document: negative degree");
    if (!j.contains("nodes") || !j["nodes"].is_array())
        throw std::invalid_argument("malformed document: missing nodes array");

    std::vector<Point> nodes;
    for (const auto& entry : j["nodes"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() || !entry[1].is_string())
            throw std::invalid_argument("malformed node: expected a pair of coordinate strings");
        auto x = parse_rational(entry[0].get<std::string>());
        auto y = parse_rational(entry[1].get<std::string>());
        if (!x || !y) throw std::invalid_argument("malformed rational");
        nodes.push_back(Point{*x, *y});
    }

    std::vector<std::string> labels;
    if (j.contains("labels")) {
        if (!j["labels"].is_array()) throw std::invalid_argument("malformed labels");
        for (const auto& l : j["labels"]) {
            if (!l.is_string()) throw std::invalid_argument("malformed labels");
            labels.push_back(l.get<std::string>());
        }
        if (labels.size() != nodes.size())
            throw std::invalid_argument("labels length does not match nodes");
    }

    std::optional<size_t> distinguished;
    if (j.contains("distinguished")) {
        if (!j["distinguished"].is_number_unsigned() ||
            j["distinguished"].get<size_t>() >= nodes.size())
            throw std::invalid_argument("distinguished index out of range");
        distinguished = j["distinguished"].get<size_t>();
    }

    ParsedNodeSet out{NodeSet(degree, std::move(nodes)), distinguished, std::move(labels), {}};
    if (static_cast<long>(out.set.size()) != out.set.correct_size())
        out.warnings.push_back("degree/N mismatch: " + std::to_string(out.set.size()) +
                               " nodes, dim Pi_" + std::to_string(degree) + " = " +
                               std::to_string(out.set.correct_size()));
    return out;
}

std::string serialize_report(const std::vector<VerificationReport>& reports) {
    std::string out;
    for (const auto& r : reports) {
        std::string detail = r.subject;
        if (!r.details.empty()) detail += " :: " + r.details;
        std::replace(detail.begin(), detail.end(), '\n', ' ');
        out += "CLAIM " + r.claim_id + " " + to_string(r.status) + " " + detail + "\n";
        if (r.witness) {
            std::string line;
            for (char ch : *r.witness) {
                if (ch == '\n') {
                    out += "    " + line + "\n";
                    line.clear();
                } else {
                    line += ch;
                }
            }
            if (!line.empty()) out += "    " + line + "\n";
        }
    }
    return out;
}

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

double to_double(const Rat& r) { return r.get_d(); }

}  // namespace

std::string render_svg(const NodeSet& x, const RenderOptions& options) {
    // bounding box over the nodes, padded 10% per side (1 unit if degenerate)
    Rat minx = x.node(0).x, maxx = minx, miny = x.node(0).y, maxy = miny;
    for (const Point& p : x.nodes()) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }
    Rat padx = (maxx - minx) / 10, pady = (maxy - miny) / 10;
    if (sign(padx) == 0) padx = 1;
    if (sign(pady) == 0) pady = 1;
    Rat x0 = minx - padx, x1 = maxx + padx;
    Rat y0 = miny - pady, y1 = maxy + pady;

    const double w = to_double(x1 - x0), h = to_double(y1 - y0);
    const double unit = std::max(w, h);

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    // world y is flipped into SVG's downward axis
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + fmt(to_double(x0)) + " " +
           fmt(-to_double(y1)) + " " + fmt(w) + " " + fmt(h) + "\">\n";

    // clip a line to the padded box along its canonical parametrization
    auto clip = [&](const LinearForm& l) -> std::optional<std::pair<Point, Point>> {
        Point p0 = l.param_origin(), dir = l.param_direction();
        bool have = false;
        Rat lo(0), hi(0);
        auto narrow = [&](const Rat& origin, const Rat& step, const Rat& lo_bound,
                          const Rat& hi_bound) -> bool {
            if (sign(step) == 0) return origin >= lo_bound && origin <= hi_bound;
            Rat a = (lo_bound - origin) / step, b = (hi_bound - origin) / step;
            if (a > b) std::swap(a, b);
            if (!have) {
                lo = a;
                hi = b;
                have = true;
            } else {
                lo = std::max(lo, a);
                hi = std::min(hi, b);
            }
            return true;
        };
        if (!narrow(p0.x, dir.x, x0, x1)) return std::nullopt;
        if (!narrow(p0.y, dir.y, y0, y1)) return std::nullopt;
        if (!have || lo > hi) return std::nullopt;
        return std::make_pair(l.at(lo), l.at(hi));
    };

    auto segment = [&](const LinearForm& l, const std::string& style) {
        auto seg = clip(l);
        if (!seg) return;
        svg += "  <line x1=\"" + fmt(to_double(seg->first.x)) + "\" y1=\"" +
               fmt(-to_double(seg->first.y)) + "\" x2=\"" + fmt(to_double(seg->second.x)) +
               "\" y2=\"" + fmt(-to_double(seg->second.y)) + "\" " + style + "/>\n";
    };

    std::vector<LineCensusEntry> census;
    if (x.size() >= 2) census = line_census(x);
    const size_t maximal_k = static_cast<size_t>(x.degree()) + 1;

    for (const auto& e : census) {
        if (e.k() < static_cast<size_t>(options.min_k)) continue;
        if (e.k() == maximal_k)
            segment(e.line, "stroke=\"#b03030\" stroke-width=\"" + fmt(unit / 120) + "\"");
        else
            segment(e.line, "stroke=\"#888888\" stroke-width=\"" + fmt(unit / 250) + "\"");
    }

    std::optional<size_t> highlight;
    if (options.highlight && *options.highlight < x.size()) highlight = *options.highlight;
    if (highlight && is_n_correct(x)) {
        const Point& b = x.node(*highlight);
        auto funds = all_fundamentals(x);
        for (const auto& u : used_two_node_lines_through(x, b, funds, census))
            segment(u.line, "stroke=\"#2060c0\" stroke-width=\"" + fmt(unit / 150) +
                                "\" stroke-dasharray=\"" + fmt(unit / 60) + " " + fmt(unit / 120) +
                                "\"");
    }

    for (size_t i = 0; i < x.size(); ++i) {
        const Point& p = x.node(i);
        bool hl = highlight && *highlight == i;
        svg += "  <circle cx=\"" + fmt(to_double(p.x)) + "\" cy=\"" + fmt(-to_double(p.y)) +
               "\" r=\"" + fmt(unit / (hl ? 60 : 80)) + "\" fill=\"" +
               (hl ? "#2060c0" : "#202020") + "\"/>\n";
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace gcset
