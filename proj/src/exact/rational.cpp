#include "moduli/exact/rational.hpp"

#include "moduli/errors.hpp"

#include <cctype>
#include <random>

namespace moduli::exact {

namespace {

bool is_integer_text(const std::string& s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start >= s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+')
        throw DomainError("malformed rational: '" + text + "'");
    if (num[0] == '+') num.erase(0, 1);
    Integer d(den);
    if (d == 0) throw DomainError("zero denominator in '" + text + "'");
    Rational q(Integer(num), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

int sign(const Rational& q) { return sgn(q); }

Rational power(const Rational& base, int exponent) {
    if (exponent < 0) {
        if (base == 0) throw DomainError("zero to a negative power");
        return power(Rational(1) / base, -exponent);
    }
    Rational result = 1;
    Rational b = base;
    while (exponent > 0) {
        if (exponent & 1) result *= b;
        b *= b;
        exponent >>= 1;
    }
    return result;
}

Integer factorial(int k) {
    if (k < 0) throw DomainError("factorial of a negative integer");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

Integer odd_double_factorial(int k) {
    if (k < 0) throw DomainError("double factorial index must be non-negative");
    Integer r = 1;
    for (int j = 1; j <= 2 * k - 1; j += 2) r *= j;
    return r;
}

std::vector<std::vector<Rational>> random_positive_points(std::size_t dimension, std::size_t count,
                                                          std::uint64_t seed, unsigned bound) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<Rational>> points(count, std::vector<Rational>(dimension));
    for (auto& p : points) {
        for (auto& x : p) {
            unsigned long num = rng() % bound + 1;
            unsigned long den = rng() % bound + 1;
            x = Rational(num, den);
            x.canonicalize();
        }
    }
    return points;
}

}  // namespace moduli::exact
