#include "gcset/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace gcset {

Rat rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t i = from; i < to; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

std::optional<Rat> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    size_t pos = 0;
    if (text[0] == '-') pos = 1;
    size_t slash = text.find('/');
    if (slash == std::string::npos) {
        if (!all_digits(text, pos, text.size())) return std::nullopt;
    } else {
        if (!all_digits(text, pos, slash)) return std::nullopt;
        if (!all_digits(text, slash + 1, text.size())) return std::nullopt;
        // positive denominator, and not zero
        bool all_zero = true;
        for (size_t i = slash + 1; i < text.size(); ++i)
            if (text[i] != '0') { all_zero = false; break; }
        if (all_zero) return std::nullopt;
    }
    Rat q;
    if (q.set_str(text, 10) != 0) return std::nullopt;
    q.canonicalize();
    return q;
}

std::string to_string(const Rat& value) {
    return value.get_str();
}

}  // namespace gcset
