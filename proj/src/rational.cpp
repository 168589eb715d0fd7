#include "hameig/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace hameig {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view num = text;
    std::string_view den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    std::string_view num_digits = num;
    if (!num_digits.empty() && num_digits.front() == '-') num_digits.remove_prefix(1);
    bool ok = all_digits(num_digits);
    if (ok && !den.empty()) {
        ok = all_digits(den) && den.find_first_not_of('0') != std::string_view::npos;
    } else if (ok && text.find('/') != std::string_view::npos) {
        ok = false;  // trailing '/'
    }
    if (!ok) {
        throw std::invalid_argument("parse_rational: malformed rational '" + std::string(text) + "'");
    }
    Rational value(std::string(text), 10);
    value.canonicalize();
    return value;
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

}  // namespace hameig
