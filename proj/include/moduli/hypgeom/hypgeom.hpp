#pragma once

#include "moduli/exact/quad_ext.hpp"

#include <optional>

namespace moduli::hypgeom {

// Length of the common perpendicular delta in a trirectangle with side a and acute
// angle theta: cos(theta) = sinh(a) sinh(delta/2).
double trirectangle_intercostal(double a, double theta);

// 2 asinh(1 / sinh(N ell / 2)): the intercostal of an edge whose adjacent boundary
// lengths are scaled by N.
double intercostal_bound(double ell, double N);

// Angle opposite c in a hyperbolic triangle with sides a, b, c.
double hexagon_angle(double a, double b, double c);
// Side opposite theta; inverse of hexagon_angle in c.
double cosine_rule_side(double a, double b, double theta);

// acosh(1 / sin(pi/d)), the limit of the rib length at a degree-d vertex.
double rib_length_limit(int d);

// Direction 2 pi k / d of the k-th ideal vertex of the regular ideal d-gon.
double ideal_vertex_direction(int d, int k);

// Geodesic between the ideal vertices a and b of the regular ideal d-gon,
// vertices placed at the d-th roots of unity in the disk.
struct IdealPolygonChord {
    int d = 0;
    int a = 0;
    int b = 0;

    IdealPolygonChord(int d, int a, int b);
};

// True when the endpoints interleave around the circle.
bool chords_cross(const IdealPolygonChord& c1, const IdealPolygonChord& c2);

struct CrossingCosine {
    double value = 0;
    std::optional<exact::QuadExt> exact;  // for d = 4, 5, 6
};

// Cosine of the acute intersection angle; symmetric in the two chords.
CrossingCosine ideal_crossing_angle(const IdealPolygonChord& c1, const IdealPolygonChord& c2);

// Cosine of the anticlockwise angle from the line of c1 to the line of c2, taken mod pi.
// Swapping the chords negates it.
CrossingCosine directed_crossing_cosine(const IdealPolygonChord& c1, const IdealPolygonChord& c2);

// The same quantity from circle geometry in the disk (tangent lines at the
// intersection point), for cross-checking the closed form.
double directed_crossing_cosine_numeric(const IdealPolygonChord& c1, const IdealPolygonChord& c2);

}  // namespace moduli::hypgeom
