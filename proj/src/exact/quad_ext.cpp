#include "moduli/exact/quad_ext.hpp"

#include "moduli/errors.hpp"

#include <cmath>

namespace moduli::exact {

namespace {

bool square_free(long d) {
    for (long p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0) return false;
    return true;
}

}  // namespace

QuadExt::QuadExt(const Rational& a, const Rational& b, long radicand) : a_(a), b_(b), d_(radicand) {
    if (radicand <= 1 || !square_free(radicand))
        throw DomainError("radicand must be a square-free integer > 1, got " + std::to_string(radicand));
    a_.canonicalize();
    b_.canonicalize();
    normalize();
}

void QuadExt::normalize() {
    if (b_ == 0) d_ = 0;
}

long QuadExt::joint_radicand(const QuadExt& o) const {
    if (d_ != 0 && o.d_ != 0 && d_ != o.d_)
        throw DomainError("mixed radicands sqrt(" + std::to_string(d_) + ") and sqrt(" + std::to_string(o.d_) + ")");
    return d_ != 0 ? d_ : o.d_;
}

QuadExt QuadExt::conjugate() const {
    QuadExt r = *this;
    r.b_ = -r.b_;
    return r;
}

Rational QuadExt::norm() const { return a_ * a_ - b_ * b_ * d_; }

QuadExt QuadExt::inverse() const {
    Rational n = norm();
    if (n == 0) throw DomainError("division by zero in Q(sqrt D)");
    QuadExt r = conjugate();
    r.a_ /= n;
    r.b_ /= n;
    r.normalize();
    return r;
}

int QuadExt::sign() const {
    int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // opposite signs: compare a^2 with b^2 D
    int c = cmp(Rational(a_ * a_), Rational(b_ * b_ * d_));
    return c > 0 ? sa : sb;
}

double QuadExt::to_double() const {
    return a_.get_d() + b_.get_d() * (d_ == 0 ? 0.0 : std::sqrt(static_cast<double>(d_)));
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    d_ = joint_radicand(o);
    a_ += o.a_;
    b_ += o.b_;
    normalize();
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
    d_ = joint_radicand(o);
    a_ -= o.a_;
    b_ -= o.b_;
    normalize();
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    long d = joint_radicand(o);
    Rational a = a_ * o.a_ + b_ * o.b_ * d;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    d_ = d;
    normalize();
    return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) { return *this *= o.inverse(); }

QuadExt operator-(const QuadExt& x) {
    QuadExt r = x;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

QuadExt abs(const QuadExt& x) { return x.sign() < 0 ? -x : x; }

std::string to_string(const QuadExt& x) {
    if (x.is_rational()) return to_string(x.a());
    std::string root = "sqrt(" + std::to_string(x.radicand()) + ")";
    std::string surd;
    Rational mag = ::abs(x.b());
    surd = mag == 1 ? root : to_string(mag) + "*" + root;
    if (x.a() == 0) return (sgn(x.b()) < 0 ? "-" : "") + surd;
    return to_string(x.a()) + (sgn(x.b()) < 0 ? " - " : " + ") + surd;
}

}  // namespace moduli::exact
