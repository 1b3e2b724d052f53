// Command-line surface over the node-set library: generate the classical
// families, analyze censuses and usage, print fundamental polynomials,
// search special triplets, run the theorem suites, render SVG diagrams.
//
// Exit codes: 0 = success / no failed claim, 1 = some claim failed,
// 2 = input error. Diagnostics go to stderr, data to stdout.

#include "gcset/batch.hpp"
#include "gcset/curves.hpp"
#include "gcset/generators.hpp"
#include "gcset/harness.hpp"
#include "gcset/io.hpp"
#include "gcset/lines.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace gcset;

constexpr int kExitOk = 0;
constexpr int kExitFailedClaims = 1;
constexpr int kExitInputError = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << text;
}

ParsedNodeSet load(const std::string& path) {
    ParsedNodeSet p = parse_nodeset(read_file(path));
    for (const std::string& w : p.warnings) std::cerr << "warning: " << w << "\n";
    return p;
}

std::string node_ref(const NodeSet& x, size_t i) {
    return "[" + std::to_string(i) + "] " + to_string(x.node(i));
}

int cmd_generate(const std::string& kind, int degree, std::uint64_t seed, const std::string& out) {
    if (degree < 1) throw std::invalid_argument("degree must be at least 1");
    std::optional<size_t> distinguished;
    std::optional<NodeSet> x;
    if (kind == "principal") {
        x = principal_lattice(degree);
    } else if (kind == "chung-yao") {
        x = chung_yao(random_general_position_lines(degree + 2, seed).lines);
    } else if (kind == "carnicer-gasca") {
        auto arr = random_general_position_lines(degree + 1, seed);
        x = carnicer_gasca(arr.lines, swept_free_points(arr.lines));
    } else if (kind == "cg-prescribed") {
        auto [set, b] = cg_with_prescribed_2node_lines(degree, seed);
        distinguished = set.index_of(b);
        x = std::move(set);
    } else {
        throw std::invalid_argument("unknown kind: " + kind);
    }
    write_file(out, write_document(to_document(*x, distinguished)));
    std::cerr << "wrote " << x->size() << " nodes to " << out << "\n";
    return kExitOk;
}

int cmd_analyze(const std::string& path) {
    ParsedNodeSet p = load(path);
    const NodeSet& x = p.set;
    SetAnalysis sa = analyze_set(x);

    std::cout << "degree: " << x.degree() << "\n";
    std::cout << "nodes: " << x.size() << " (dim Pi_" << x.degree() << " = " << x.correct_size()
              << ")\n";
    for (size_t i = 0; i < x.size(); ++i) std::cout << "  " << node_ref(x, i) << "\n";
    std::cout << "classification: " << to_string(sa.cls) << "\n";

    std::cout << "census (" << sa.census.size() << " lines through >= 2 nodes):\n";
    for (const auto& e : sa.census) {
        std::cout << "  k=" << e.k() << "  " << to_string(e.line) << "  nodes";
        for (const Point& q : e.nodes_on) std::cout << " " << *x.index_of(q);
        std::cout << "\n";
    }

    if (!sa.correct) {
        std::cout << "maximal lines: n/a (set is not correct)\n";
        return kExitOk;
    }
    std::cout << "maximal lines (" << sa.maximal.size() << "):\n";
    for (const auto& l : sa.maximal) std::cout << "  " << to_string(l) << "\n";

    std::cout << "usage per node (used census lines):\n";
    for (size_t i = 0; i < x.size(); ++i) {
        std::vector<size_t> used;
        for (size_t l = 0; l < sa.census.size(); ++l)
            for (size_t u : sa.usage[l])
                if (u == i) used.push_back(l);
        std::cout << "  " << node_ref(x, i) << " uses " << used.size() << ":";
        for (size_t l : used)
            std::cout << " {k=" << sa.census[l].k() << " " << to_string(sa.census[l].line) << "}";
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_fundpoly(const std::string& path, size_t index, bool factor) {
    ParsedNodeSet p = load(path);
    const NodeSet& x = p.set;
    if (index >= x.size()) throw std::invalid_argument("node index out of range");
    BivariatePoly f = fundamental_polynomial(x, x.node(index));

    std::cout << "node: " << node_ref(x, index) << "\n";
    std::cout << "coefficients (graded-lex):";
    for (const Rat& c : f.coeffs()) std::cout << " " << to_string(c);
    std::cout << "\n";
    std::cout << "polynomial: " << to_string(f) << "\n";

    if (factor) {
        auto lines = gc_factorization(x, x.node(index), f, line_census(x));
        if (!lines) {
            std::cout << "factorization: no census factorization\n";
        } else {
            std::cout << "factorization (" << lines->size() << " lines):\n";
            for (const auto& l : *lines) std::cout << "  " << to_string(l) << "\n";
        }
    }
    return kExitOk;
}

int cmd_triplets(const std::string& path, std::optional<size_t> node) {
    ParsedNodeSet p = load(path);
    const NodeSet& x = p.set;
    if (x.degree() < 2) throw std::invalid_argument("special triplets need degree >= 2");
    if (x.size() > kExhaustiveTripletLimit)
        throw std::invalid_argument("set exceeds the exhaustive-scan limit of " +
                                    std::to_string(kExhaustiveTripletLimit) + " nodes");
    if (node && *node >= x.size()) throw std::invalid_argument("node index out of range");

    std::vector<SpecialTriplet> found = scan_special_triplets(x);
    size_t shown = 0;
    for (const auto& t : found) {
        if (node && !t.has_vertex(x.node(*node))) continue;
        ++shown;
        std::cout << "triplet {" << *x.index_of(t.a) << ", " << *x.index_of(t.b) << ", "
                  << *x.index_of(t.c) << "} = {" << to_string(t.a) << ", " << to_string(t.b)
                  << ", " << to_string(t.c) << "}\n";
        std::cout << "  f = " << to_string(t.f) << "\n";
    }
    std::cout << (node ? "triplets through node " + std::to_string(*node) + ": "
                       : "special triplets: ")
              << shown << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& path, const std::string& suite, std::uint64_t seed) {
    ParsedNodeSet p = load(path);
    SuiteTarget target{path, p.set, std::nullopt};
    if (p.distinguished) target.distinguished = p.set.node(*p.distinguished);
    auto reports = run_suite({target}, {suite}, seed);
    std::cout << serialize_report(reports);
    size_t fails = 0;
    for (const auto& r : reports)
        if (r.status == CheckStatus::fail) ++fails;
    std::cerr << reports.size() << " checks, " << fails << " failed\n";
    return fails == 0 ? kExitOk : kExitFailedClaims;
}

int cmd_render(const std::string& path, const std::string& out, int min_k,
               std::optional<size_t> highlight) {
    ParsedNodeSet p = load(path);
    RenderOptions options;
    options.min_k = min_k;
    options.highlight = highlight ? highlight : p.distinguished;
    if (options.highlight && *options.highlight >= p.set.size())
        throw std::invalid_argument("highlight index out of range");
    write_file(out, render_svg(p.set, options));
    std::cerr << "wrote " << out << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact bivariate interpolation node-set toolkit"};
    app.require_subcommand(1);

    std::string kind, file, out;
    int degree = 2;
    std::uint64_t seed = 1;
    long node_flag = -1;
    bool factor = false, all = false;
    int min_k = 3;
    long highlight_flag = -1;
    std::string suite = "all";

    auto* gen = app.add_subcommand("generate", "construct a canonical family");
    gen->add_option("--kind", kind, "chung-yao|carnicer-gasca|principal|cg-prescribed")->required();
    gen->add_option("--degree", degree, "interpolation degree n")->required();
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("-o,--output", out, "output file")->required();

    auto* ana = app.add_subcommand("analyze", "census, maximal lines, classification, usage");
    ana->add_option("file", file, "node-set document")->required();

    auto* fp = app.add_subcommand("fundpoly", "fundamental polynomial of a node");
    fp->add_option("file", file, "node-set document")->required();
    fp->add_option("--node", node_flag, "node index (document order)")->required();
    fp->add_flag("--factor", factor, "factor over census lines");

    auto* tr = app.add_subcommand("triplets", "special triplets of the set");
    tr->add_option("file", file, "node-set document")->required();
    auto* tr_node = tr->add_option("--node", node_flag, "only triplets through this node");
    auto* tr_all = tr->add_flag("--all", all, "all triplets (default)");
    tr_node->excludes(tr_all);

    auto* ver = app.add_subcommand("verify", "run theorem checkers, print claim reports");
    ver->add_option("file", file, "node-set document")->required();
    ver->add_option("--suite", suite, "all|usage-bound|collinearity|peel|gc6");
    ver->add_option("--seed", seed, "suite seed");

    auto* ren = app.add_subcommand("render", "deterministic SVG diagram");
    ren->add_option("file", file, "node-set document")->required();
    ren->add_option("-o,--output", out, "output SVG file")->required();
    ren->add_option("--min-k", min_k, "draw census lines with at least this many nodes");
    ren->add_option("--highlight", highlight_flag,
                    "node index to highlight with its used 2-node lines");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (gen->parsed()) return cmd_generate(kind, degree, seed, out);
        if (ana->parsed()) return cmd_analyze(file);
        if (fp->parsed()) {
            if (node_flag < 0) throw std::invalid_argument("node index must be nonnegative");
            return cmd_fundpoly(file, static_cast<size_t>(node_flag), factor);
        }
        if (tr->parsed()) {
            std::optional<size_t> node;
            if (tr_node->count()) {
                if (node_flag < 0) throw std::invalid_argument("node index must be nonnegative");
                node = static_cast<size_t>(node_flag);
            }
            return cmd_triplets(file, node);
        }
        if (ver->parsed()) return cmd_verify(file, suite, seed);
        if (ren->parsed()) {
            std::optional<size_t> highlight;
            if (highlight_flag >= 0) highlight = static_cast<size_t>(highlight_flag);
            return cmd_render(file, out, min_k, highlight);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
