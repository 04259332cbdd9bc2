#pragma once

#include "moduli/exact/rational.hpp"

#include <string>

namespace moduli::exact {

// a + b*sqrt(D) with D square-free and > 1. Elements with b = 0 carry no D and
// combine with any D; mixing two different radicands is an error.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(int a) : a_(a) {}
    QuadExt(long a) : a_(a) {}
    QuadExt(const Rational& a) : a_(a) {}
    QuadExt(const Rational& a, const Rational& b, long radicand);

    static QuadExt sqrt(long radicand) { return QuadExt(0, 1, radicand); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    long radicand() const { return d_; }
    bool is_rational() const { return b_ == 0; }

    QuadExt conjugate() const;
    Rational norm() const;
    QuadExt inverse() const;
    int sign() const;
    double to_double() const;

    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o);

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
    friend QuadExt operator-(const QuadExt& x);
    friend bool operator==(const QuadExt& x, const QuadExt& y) { return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_; }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

private:
    Rational a_ = 0;
    Rational b_ = 0;
    long d_ = 0;

    long joint_radicand(const QuadExt& o) const;
    void normalize();
};

QuadExt abs(const QuadExt& x);
std::string to_string(const QuadExt& x);

}  // namespace moduli::exact
