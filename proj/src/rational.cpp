#include "virial/rational.hpp"

#include <algorithm>
#include <cctype>

#include "virial/errors.hpp"

namespace virial {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

std::string to_string(const Rational& q) {
    const Integer num = boost::multiprecision::numerator(q);
    const Integer den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    const auto slash = s.find('/');
    const std::string_view num = s.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw ArgumentError("not a rational number: '" + std::string(text) + "'");
    const Integer d{std::string(den)};
    if (d == 0) throw ArgumentError("zero denominator in '" + std::string(text) + "'");
    const Integer n{std::string(num)};
    const Rational q(n, d);
    return negative ? Rational(-q) : q;
}

std::size_t bit_size(const Rational& q) {
    const Integer num = abs(boost::multiprecision::numerator(q));
    const Integer den = boost::multiprecision::denominator(q);
    const std::size_t nb = num == 0 ? 0 : boost::multiprecision::msb(num) + 1;
    const std::size_t db = boost::multiprecision::msb(den) + 1;
    return std::max(nb, db);
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace virial
