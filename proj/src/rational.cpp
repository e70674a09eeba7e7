#include "l0t/rational.hpp"

#include "l0t/error.hpp"

#include <cctype>
#include <cmath>

namespace l0t {

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t i = from; i < to; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
    size_t slash = text.find('/');
    std::string num = slash == std::string::npos ? text : text.substr(0, slash);
    size_t start = 0;
    if (!num.empty() && (num[0] == '+' || num[0] == '-')) start = 1;
    if (!all_digits(num, start, num.size()))
        fail(ErrorKind::Parse, "malformed rational '" + text + "'");
    if (slash == std::string::npos) return Rational(BigInt(num));

    std::string den = text.substr(slash + 1);
    if (!all_digits(den, 0, den.size()))
        fail(ErrorKind::Parse, "malformed rational '" + text + "'");
    BigInt q(den);
    if (q == 0)
        fail(ErrorKind::Parse, "zero denominator in '" + text + "'");
    return Rational(BigInt(num), q);
}

std::string format_rational(const Rational& x) {
    return numerator(x).str() + "/" + denominator(x).str();
}

double to_double(const Rational& x) {
    return x.convert_to<double>();
}

Rational rational_from_double(double x) {
    if (!std::isfinite(x))
        fail(ErrorKind::Precondition, "non-finite double has no rational form");
    return Rational(x); // mpq_set_d is exact on binary doubles
}

std::optional<Rational> exact_sqrt(const Rational& x) {
    if (x < 0) return std::nullopt;
    if (x == 0) return Rational(0);
    const BigInt num = numerator(x), den = denominator(x);
    BigInt sn = sqrt(num), sd = sqrt(den);
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    return Rational(sn, sd);
}

} // namespace l0t
