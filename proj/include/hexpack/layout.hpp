#pragma once

#include "hexpack/exact.hpp"
#include "hexpack/sequences.hpp"

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

namespace hexpack {

/// A point in units of r. Arrangement centers live on the hexagonal lattice
/// with basis (2, 0) and (1, sqrt(3)), anchored at the first center.
struct Point {
    Root3Scalar x;
    Root3Scalar y;

    friend bool operator==(const Point& p, const Point& q) { return p.x == q.x && p.y == q.y; }
    friend bool operator!=(const Point& p, const Point& q) { return !(p == q); }
};

/// Half-plane {p : normal . p <= offset}. Every polygon side used here has a
/// normal of exact length 1 or 2, so normal_length stays inside Q[sqrt(3)]
/// and the distance predicate needs no division.
struct HalfPlane {
    Root3Scalar nx;
    Root3Scalar ny;
    Root3Scalar offset;
    Root3Scalar normal_length;
};

struct CircleShape {
    Root3Scalar radius;  // centered at the origin
};

struct PolygonShape {
    std::vector<HalfPlane> halfplanes;
    std::vector<Point> vertices;  // counterclockwise
    Root3Scalar side_length;
};

using BoundingShape = std::variant<CircleShape, PolygonShape>;

/// Exact center coordinates in deterministic order: row-major top-down for
/// the triangular cases, hub then rings walked counterclockwise from the
/// positive x axis for the hexagonal cases.
std::vector<Point> generate_centers(PackingCase c, long i);

/// The bounding shape, concentric with the arrangement. Circles for a/c;
/// an apex-up equilateral triangle for b (side per mode, slack split equally
/// across the sides in paper mode); a corners-on-x-axis regular hexagon of
/// apothem i*sqrt(3) + 1 for d.
BoundingShape boundary(PackingCase c, long i, SideMode mode = SideMode::paper);

/// Closed containment of the unit circle at `center` (tangency counts as
/// fitting): |center|^2 <= (radius - 1)^2 for circles, and
/// normal . center + |normal| <= offset for every polygon side.
bool circle_fits(const BoundingShape& shape, const Point& center);

/// True when the unit circle at `center` fits and touches the boundary
/// exactly (distance equality on the circle or on at least one side).
bool circle_tangent_to_boundary(const BoundingShape& shape, const Point& center);

/// Exact squared distance.
Root3Scalar squared_distance(const Point& p, const Point& q);

/// True iff every pair of centers is at squared distance >= 4, exactly.
bool separation_ok(std::span<const Point> centers);

/// Number of unordered pairs at squared distance exactly 4.
std::size_t mutual_tangent_pair_count(std::span<const Point> centers);

/// Lattice membership: p - anchor must be an integer combination of (2, 0)
/// and (1, sqrt(3)).
bool on_center_lattice(const Point& anchor, const Point& p);

struct Layout {
    PackingCase case_tag;
    long i = 0;
    SideMode mode = SideMode::paper;
    std::vector<Point> centers;
    BoundingShape bounds;
};

Layout make_layout(PackingCase c, long i, SideMode mode = SideMode::paper);

struct TangencyCertificate {
    std::size_t boundary_tangent_count = 0;
    std::size_t mutual_tangent_pairs = 0;
};

/// Counts of centers at exact boundary tangency and of center pairs at exact
/// distance 2; evidence that the container dimensions are tight.
TangencyCertificate tangency_certificate(const Layout& layout);

/// Floating-point upper bound on the distance from the origin to the shape
/// (used only to size candidate regions, never in exact predicates).
double circumradius_hint(const BoundingShape& shape);

/// Floating-point boundary area (pi R^2 or shoelace over the vertices).
double area_fp(const BoundingShape& shape);

}  // namespace hexpack
