#include "moduli/hypgeom/hypgeom.hpp"

#include "moduli/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

namespace moduli::hypgeom {

using exact::QuadExt;
using exact::Rational;

namespace {

constexpr double kPi = std::numbers::pi;

void require_degree(int d) {
    if (d < 3) throw DomainError("polygon degree must be at least 3, got " + std::to_string(d));
}

int mod(int a, int d) { return ((a % d) + d) % d; }

bool strictly_between(int x, int a, int b, int d) {
    int dx = mod(x - a, d), db = mod(b - a, d);
    return dx > 0 && dx < db;
}

// sin(pi k / d) / sin(pi / d) where this lies in a quadratic field.
std::optional<QuadExt> sine_ratio(int d, int k) {
    k = mod(k, d);
    if (k > d / 2) k = d - k;
    switch (d) {
        case 4: return k == 1 ? QuadExt(1) : QuadExt::sqrt(2);
        case 5: return k == 1 ? QuadExt(1) : QuadExt(Rational(1, 2), Rational(1, 2), 5);
        case 6:
            if (k == 1) return QuadExt(1);
            if (k == 2) return QuadExt::sqrt(3);
            return QuadExt(2);
        default: return std::nullopt;
    }
}

// (C, D) orders the endpoints of c2 so that C lies anticlockwise between a and b of c1.
std::pair<int, int> ordered_second(const IdealPolygonChord& c1, const IdealPolygonChord& c2) {
    if (strictly_between(c2.a, c1.a, c1.b, c1.d)) return {c2.a, c2.b};
    return {c2.b, c2.a};
}

void require_crossing(const IdealPolygonChord& c1, const IdealPolygonChord& c2) {
    if (c1.d != c2.d) throw DomainError("chords belong to polygons of different degree");
    if (!chords_cross(c1, c2))
        throw DomainError("chords (" + std::to_string(c1.a) + "," + std::to_string(c1.b) + ") and (" +
                          std::to_string(c2.a) + "," + std::to_string(c2.b) + ") do not cross");
}

}  // namespace

double trirectangle_intercostal(double a, double theta) {
    if (!(a > 0)) throw DomainError("trirectangle side must be positive");
    if (!(theta > 0) || theta > kPi / 2) throw DomainError("trirectangle angle must lie in (0, pi/2]");
    return 2 * std::asinh(std::cos(theta) / std::sinh(a));
}

double intercostal_bound(double ell, double N) {
    if (!(ell > 0) || !(N > 0)) throw DomainError("intercostal bound needs positive length and scale");
    return 2 * std::asinh(1 / std::sinh(N * ell / 2));
}

double hexagon_angle(double a, double b, double c) {
    if (!(a > 0) || !(b > 0) || c < 0) throw DomainError("triangle sides must be positive");
    double cos_theta = std::cosh(a) / std::sinh(a) * std::cosh(b) / std::sinh(b) - std::cosh(c) / (std::sinh(a) * std::sinh(b));
    if (cos_theta > 1 + 1e-12 || cos_theta < -1 - 1e-12) throw DomainError("infeasible triangle sides");
    return std::acos(std::clamp(cos_theta, -1.0, 1.0));
}

double cosine_rule_side(double a, double b, double theta) {
    if (!(a > 0) || !(b > 0)) throw DomainError("triangle sides must be positive");
    return std::acosh(std::cosh(a) * std::cosh(b) - std::sinh(a) * std::sinh(b) * std::cos(theta));
}

double rib_length_limit(int d) {
    require_degree(d);
    return std::acosh(1 / std::sin(kPi / d));
}

double ideal_vertex_direction(int d, int k) {
    require_degree(d);
    return 2 * kPi * mod(k, d) / d;
}

IdealPolygonChord::IdealPolygonChord(int d_, int a_, int b_) : d(d_), a(a_), b(b_) {
    require_degree(d);
    if (a < 0 || a >= d || b < 0 || b >= d) throw DomainError("chord endpoint outside 0..d-1");
    if (a == b) throw DomainError("chord endpoints must be distinct");
}

bool chords_cross(const IdealPolygonChord& c1, const IdealPolygonChord& c2) {
    if (c1.d != c2.d) return false;
    if (c2.a == c1.a || c2.a == c1.b || c2.b == c1.a || c2.b == c1.b) return false;
    return strictly_between(c2.a, c1.a, c1.b, c1.d) != strictly_between(c2.b, c1.a, c1.b, c1.d);
}

CrossingCosine directed_crossing_cosine(const IdealPolygonChord& c1, const IdealPolygonChord& c2) {
    require_crossing(c1, c2);
    const int d = c1.d, A = c1.a, B = c1.b;
    auto [C, D] = ordered_second(c1, c2);
    auto chord = [d](int p, int q) { return std::sin(kPi * mod(p - q, d) / d); };
    double t = chord(D, A) * chord(C, B) / (chord(C, A) * chord(D, B));
    CrossingCosine r;
    r.value = (t - 1) / (t + 1);
    auto da = sine_ratio(d, D - A), cb = sine_ratio(d, C - B), ca = sine_ratio(d, C - A), db = sine_ratio(d, D - B);
    if (da && cb && ca && db) {
        QuadExt te = *da * *cb / (*ca * *db);
        r.exact = (te - QuadExt(1)) / (te + QuadExt(1));
    }
    return r;
}

CrossingCosine ideal_crossing_angle(const IdealPolygonChord& c1, const IdealPolygonChord& c2) {
    CrossingCosine r = directed_crossing_cosine(c1, c2);
    r.value = std::abs(r.value);
    if (r.exact) r.exact = exact::abs(*r.exact);
    return r;
}

double directed_crossing_cosine_numeric(const IdealPolygonChord& c1, const IdealPolygonChord& c2) {
    require_crossing(c1, c2);
    using C = std::complex<double>;
    const int d = c1.d;
    auto point = [d](int k) { return std::polar(1.0, 2 * kPi * k / d); };
    struct Geodesic {
        bool diameter;
        C centre;
        double radius;
        C direction;
    };
    auto geodesic = [&](const IdealPolygonChord& c) {
        C za = point(c.a), zb = point(c.b);
        if (std::abs(za + zb) < 1e-12) return Geodesic{true, 0, 0, za};
        C centre = 2.0 * za * zb / (za + zb);
        return Geodesic{false, centre, std::abs(centre - za), 0};
    };
    Geodesic g1 = geodesic(c1), g2 = geodesic(c2);

    C p;
    if (g1.diameter && g2.diameter) {
        p = 0;
    } else if (g1.diameter || g2.diameter) {
        const Geodesic& line = g1.diameter ? g1 : g2;
        const Geodesic& circle = g1.diameter ? g2 : g1;
        // |t u - c|^2 = r^2 along the diameter t u
        double bq = -2 * std::real(std::conj(line.direction) * circle.centre);
        double cq = std::norm(circle.centre) - circle.radius * circle.radius;
        double disc = std::sqrt(std::max(bq * bq - 4 * cq, 0.0));
        double t = (-bq + disc) / 2;
        if (std::abs(t) >= 1) t = (-bq - disc) / 2;
        p = t * line.direction;
    } else {
        C delta = g2.centre - g1.centre;
        double dist = std::abs(delta);
        double along = (g1.radius * g1.radius - g2.radius * g2.radius + dist * dist) / (2 * dist);
        double h = std::sqrt(std::max(g1.radius * g1.radius - along * along, 0.0));
        C base = g1.centre + along * delta / dist;
        p = base + h * C(0, 1) * delta / dist;
        if (std::abs(p) >= 1) p = base - h * C(0, 1) * delta / dist;
    }
    auto tangent = [&](const Geodesic& g) { return g.diameter ? g.direction : C(0, 1) * (p - g.centre); };
    double theta = std::fmod(std::arg(tangent(g2)) - std::arg(tangent(g1)), kPi);
    if (theta < 0) theta += kPi;
    return std::cos(theta);
}

}  // namespace moduli::hypgeom
