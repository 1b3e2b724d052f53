#include "gcset/generators.hpp"

#include "gcset/lines.hpp"

#include <algorithm>
#include <stdexcept>

namespace gcset {

bool check_general_position(const std::vector<LinearForm>& lines) {
    const size_t m = lines.size();
    if (m < 2) throw std::invalid_argument("need at least two lines");
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            if (parallel(lines[i], lines[j])) return false;
    // pairwise nonparallel, so three lines are concurrent iff the 3x3
    // coefficient determinant vanishes
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = i + 1; j < m; ++j) {
            for (size_t k = j + 1; k < m; ++k) {
                const LinearForm &p = lines[i], &q = lines[j], &r = lines[k];
                Rat det = p.a() * (q.b() * r.c() - r.b() * q.c()) -
                          p.b() * (q.a() * r.c() - r.a() * q.c()) +
                          p.c() * (q.a() * r.b() - r.a() * q.b());
                if (sign(det) == 0) return false;
            }
        }
    }
    return true;
}

NodeSet chung_yao(const std::vector<LinearForm>& lines) {
    if (lines.size() < 3) throw std::invalid_argument("need at least three lines");
    if (!check_general_position(lines)) throw std::invalid_argument("not in general position");
    const int n = static_cast<int>(lines.size()) - 2;
    std::vector<Point> nodes;
    for (size_t i = 0; i < lines.size(); ++i)
        for (size_t j = i + 1; j < lines.size(); ++j) nodes.push_back(*intersect(lines[i], lines[j]));
    return NodeSet(n, std::move(nodes));
}

NodeSet carnicer_gasca(const std::vector<LinearForm>& lines, const std::vector<Point>& free_points) {
    if (lines.size() < 2) throw std::invalid_argument("need at least two lines");
    if (free_points.size() != lines.size())
        throw std::invalid_argument("one free point per line required");
    if (!check_general_position(lines)) throw std::invalid_argument("not in general position");
    const int n = static_cast<int>(lines.size()) - 1;

    std::vector<Point> intersections;
    for (size_t i = 0; i < lines.size(); ++i)
        for (size_t j = i + 1; j < lines.size(); ++j)
            intersections.push_back(*intersect(lines[i], lines[j]));

    for (size_t i = 0; i < free_points.size(); ++i) {
        if (!lines[i].contains(free_points[i])) throw std::invalid_argument("free point off its line");
        for (const Point& q : intersections)
            if (q == free_points[i]) throw std::invalid_argument("free point collides with intersection");
    }
    if (n == 1) {
        // three nodes total; 1-correctness is exactly noncollinearity
        LinearForm l = line_through(free_points[0], free_points[1]);
        if (l.contains(intersections[0])) throw std::invalid_argument("nodes are collinear");
    } else {
        // n+1 collinear free points would put them all on one extra maximal
        // line, turning the set into a Chung-Yao set; no other configuration
        // can create an extra maximal line, so this is the only rejection
        LinearForm l = line_through(free_points[0], free_points[1]);
        bool all_on = true;
        for (size_t i = 2; i < free_points.size(); ++i)
            if (!l.contains(free_points[i])) all_on = false;
        if (all_on) throw std::invalid_argument("free points are collinear");
    }

    std::vector<Point> nodes = intersections;
    nodes.insert(nodes.end(), free_points.begin(), free_points.end());
    NodeSet x(n, std::move(nodes));
    if (!is_n_correct(x)) throw std::logic_error("assembled set failed the correctness check");
    return x;
}

NodeSet principal_lattice(int n) {
    if (n < 1) throw std::invalid_argument("degree must be at least 1");
    std::vector<Point> nodes;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n - i; ++j) nodes.push_back(Point{Rat(i), Rat(j)});
    return NodeSet(n, std::move(nodes));
}

Rat sweep_parameter(int index) {
    // 1, 1/2, 2, 1/3, 3, 1/4, 4, ...
    if (index == 0) return Rat(1);
    int q = index / 2 + 1;
    return index % 2 == 1 ? rat(1, q) : Rat(q);
}

namespace {

// xorshift64: deterministic across platforms, unlike the distributions in <random>
struct SplitRng {
    std::uint64_t state;

    explicit SplitRng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }

    long bounded(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

}  // namespace

LineArrangement random_general_position_lines(int m, std::uint64_t seed) {
    if (m < 2) throw std::invalid_argument("need at least two lines");
    SplitRng rng(seed * 0x2545f4914f6cdd1dull + 0x9e3779b97f4a7c15ull);
    std::vector<LinearForm> accepted;
    long range = 9;
    int failures = 0;
    while (static_cast<int>(accepted.size()) < m) {
        long a = rng.bounded(-range, range);
        long b = rng.bounded(-range, range);
        long c = rng.bounded(-range, range);
        if (a == 0 && b == 0) continue;
        LinearForm cand{Rat(a), Rat(b), Rat(c)};
        bool ok = true;
        for (const LinearForm& l : accepted)
            if (parallel(cand, l)) { ok = false; break; }
        if (ok && accepted.size() >= 2) {
            std::vector<LinearForm> trial = accepted;
            trial.push_back(cand);
            ok = check_general_position(trial);
        }
        if (ok) {
            accepted.push_back(cand);
        } else if (++failures % 1024 == 0) {
            range += 10;  // widen the grid if degeneracies pile up
        }
    }
    return LineArrangement{std::move(accepted), true};
}

namespace {

bool on_any(const Point& p, const std::vector<LinearForm>& lines) {
    for (const LinearForm& l : lines)
        if (l.contains(p)) return true;
    return false;
}

}  // namespace

std::vector<Point> swept_free_points(const std::vector<LinearForm>& lines) {
    std::vector<Point> inters;
    for (size_t i = 0; i < lines.size(); ++i)
        for (size_t j = i + 1; j < lines.size(); ++j) inters.push_back(*intersect(lines[i], lines[j]));
    std::vector<Point> frees;
    for (size_t i = 0; i < lines.size(); ++i) {
        for (int s = 0;; ++s) {
            Point cand = lines[i].at(sweep_parameter(s));
            bool clash = false;
            for (const Point& q : inters)
                if (q == cand) clash = true;
            for (const Point& q : frees)
                if (q == cand) clash = true;
            // keeping the third and later points off the line through the
            // first two rules out a collinear free-point set
            if (!clash && frees.size() >= 2 && lines.size() > 2)
                clash = line_through(frees[0], frees[1]).contains(cand);
            if (!clash) {
                frees.push_back(cand);
                break;
            }
        }
    }
    return frees;
}

std::pair<NodeSet, Point> cg_with_prescribed_2node_lines(int n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("degree must be at least 2");
    const int sweep_limit = 256;

    LineArrangement arr = random_general_position_lines(n + 1, seed);
    const std::vector<LinearForm>& lines = arr.lines;

    std::vector<Point> intersections;
    for (size_t i = 0; i < lines.size(); ++i)
        for (size_t j = i + 1; j < lines.size(); ++j)
            intersections.push_back(*intersect(lines[i], lines[j]));

    auto is_intersection = [&](const Point& p) {
        return std::find(intersections.begin(), intersections.end(), p) != intersections.end();
    };

    // B = A_0 on l_0, off every other line (i.e. not an intersection point)
    Point b{Rat(0), Rat(0)};
    bool found = false;
    for (int s = 0; s < sweep_limit && !found; ++s) {
        Point cand = lines[0].at(sweep_parameter(s));
        if (!is_intersection(cand)) {
            b = cand;
            found = true;
        }
    }
    if (!found) throw std::runtime_error("seed exhausted");

    // A_i on l_i so that the line through A_i and B meets no other node:
    // no intersection point, no earlier free point; and A_i itself stays off
    // every earlier prescribed line.
    std::vector<Point> free_points{b};
    std::vector<LinearForm> prescribed;
    for (int i = 1; i <= n; ++i) {
        found = false;
        for (int s = 0; s < sweep_limit && !found; ++s) {
            Point cand = lines[i].at(sweep_parameter(s));
            if (is_intersection(cand) || cand == b) continue;
            if (on_any(cand, prescribed)) continue;
            LinearForm join = line_through(cand, b);
            bool clean = true;
            for (const Point& q : intersections)
                if (join.contains(q)) { clean = false; break; }
            for (size_t j = 1; clean && j < free_points.size(); ++j)
                if (join.contains(free_points[j])) clean = false;
            if (!clean) continue;
            free_points.push_back(cand);
            prescribed.push_back(join);
            found = true;
        }
        if (!found) throw std::runtime_error("seed exhausted");
    }

    NodeSet x = carnicer_gasca(lines, free_points);
    return {std::move(x), b};
}

}  // namespace gcset
