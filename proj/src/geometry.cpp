#include "gcset/geometry.hpp"

#include <stdexcept>

namespace gcset {

bool operator<(const Point& l, const Point& r) {
    int c = cmp(l.x, r.x);
    if (c != 0) return c < 0;
    return cmp(l.y, r.y) < 0;
}

std::string to_string(const Point& p) {
    return "(" + to_string(p.x) + ", " + to_string(p.y) + ")";
}

LinearForm::LinearForm(const Rat& a, const Rat& b, const Rat& c) : a_(a), b_(b), c_(c) {
    if (sign(a_) == 0 && sign(b_) == 0)
        throw std::invalid_argument("degenerate linear form: a = b = 0");
    const Rat& lead = sign(a_) != 0 ? a_ : b_;
    if (lead != 1) {
        Rat inv = 1 / lead;
        a_ *= inv;
        b_ *= inv;
        c_ *= inv;
    }
}

Point LinearForm::param_origin() const {
    if (sign(b_) != 0) return Point{Rat(0), -c_ / b_};
    return Point{-c_ / a_, Rat(0)};
}

Point LinearForm::param_direction() const {
    if (sign(b_) != 0) return Point{Rat(1), -a_ / b_};
    return Point{Rat(0), Rat(1)};
}

Point LinearForm::at(const Rat& t) const {
    Point p0 = param_origin();
    Point d = param_direction();
    return Point{p0.x + t * d.x, p0.y + t * d.y};
}

bool operator<(const LinearForm& l, const LinearForm& r) {
    int c = cmp(l.a(), r.a());
    if (c != 0) return c < 0;
    c = cmp(l.b(), r.b());
    if (c != 0) return c < 0;
    return cmp(l.c(), r.c()) < 0;
}

LinearForm line_through(const Point& A, const Point& B) {
    if (A == B) throw std::invalid_argument("identical points");
    Rat a = A.y - B.y;
    Rat b = B.x - A.x;
    Rat c = A.x * B.y - B.x * A.y;
    return LinearForm(a, b, c);
}

bool parallel(const LinearForm& l, const LinearForm& r) {
    return sign(l.a() * r.b() - r.a() * l.b()) == 0;
}

std::optional<Point> intersect(const LinearForm& l, const LinearForm& r) {
    Rat det = l.a() * r.b() - r.a() * l.b();
    if (sign(det) == 0) return std::nullopt;
    Rat x = (l.b() * r.c() - r.b() * l.c()) / det;
    Rat y = (r.a() * l.c() - l.a() * r.c()) / det;
    return Point{x, y};
}

namespace {

void append_term(std::string& out, const Rat& coeff, const char* var) {
    if (sign(coeff) == 0) return;
    Rat abs_coeff = abs(coeff);
    if (out.empty()) {
        if (sign(coeff) < 0) out += "-";
    } else {
        out += sign(coeff) < 0 ? " - " : " + ";
    }
    if (var[0] == '\0') {
        out += to_string(abs_coeff);
    } else {
        if (abs_coeff != 1) out += to_string(abs_coeff) + "*";
        out += var;
    }
}

}  // namespace

std::string to_string(const LinearForm& l) {
    std::string out;
    append_term(out, l.a(), "x");
    append_term(out, l.b(), "y");
    append_term(out, l.c(), "");
    if (out.empty()) out = "0";
    return out + " = 0";
}

}  // namespace gcset
