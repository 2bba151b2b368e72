#pragma once

#include "hexpack/exact.hpp"

#include <optional>
#include <string>

namespace hexpack {

/// The four packing configurations:
///   a - circles forming a triangle inside a bounding circle
///   b - circles forming a triangle inside a bounding equilateral triangle
///   c - circles forming a hexagon inside a bounding circle
///   d - circles forming a hexagon inside a bounding equilateral hexagon
enum class PackingCase {
    triangle_in_circle,
    triangle_in_triangle,
    hexagon_in_circle,
    hexagon_in_hexagon,
};

inline constexpr PackingCase kAllCases[] = {
    PackingCase::triangle_in_circle,
    PackingCase::triangle_in_triangle,
    PackingCase::hexagon_in_circle,
    PackingCase::hexagon_in_hexagon,
};

/// Outer-triangle side convention for case b. `paper` uses the tabulated
/// side (2i - 1 + 2*sqrt(3)) r; `tangent` uses (2i - 2 + 2*sqrt(3)) r, the
/// triangle whose sides are tangent to their nearest row of circles. The two
/// differ by r because the offset expression 2(i-1)r + 2*sqrt(3)r expands to
/// the latter, while the tables use the former.
enum class SideMode { paper, tangent };

/// Index domains. `tables` matches the published tables (case b starts at
/// i = 2 and case d at i = 1, where those columns carry "/" entries below);
/// `extended` also admits b at i = 1 and d at i = 0, where the closed forms
/// still evaluate.
enum class DomainPolicy { tables, extended };

char case_letter(PackingCase c);
const char* case_name(PackingCase c);
std::optional<PackingCase> case_from_letter(char letter);

/// True for the circle-bounded configurations (a and c).
bool is_circle_bounded(PackingCase c);
/// True for the triangular-arrangement configurations (a and b).
bool is_triangular(PackingCase c);

long min_index(PackingCase c, DomainPolicy policy = DomainPolicy::tables);
bool index_in_domain(PackingCase c, long i, DomainPolicy policy = DomainPolicy::tables);
void require_index(PackingCase c, long i, DomainPolicy policy = DomainPolicy::tables);

/// Number of packed circles N_i: triangular numbers i(i+1)/2 for a/b,
/// centered hexagonal numbers 3i^2 + 3i + 1 for c/d.
BigInt count(PackingCase c, long i, DomainPolicy policy = DomainPolicy::tables);

/// Side of the polygon of circle centers, in units of r: 2(i-1) for a/b, 2i for c/d.
Root3Scalar inner_side(PackingCase c, long i, DomainPolicy policy = DomainPolicy::tables);

/// Bounding-circle radius over r; cases a and c only.
/// a: (2i - 2 + sqrt(3)) / sqrt(3); c: 2i + 1.
Root3Scalar radius_ratio(PackingCase c, long i, DomainPolicy policy = DomainPolicy::tables);

/// Bounding-polygon side over r; cases b and d only (mode applies to b).
Root3Scalar outer_side(PackingCase c, long i, SideMode mode = SideMode::paper,
                       DomainPolicy policy = DomainPolicy::tables);

/// Bounding-polygon area over r^2; cases b and d only.
/// b: (sqrt(3)/4) s^2; d: (3 sqrt(3)/2) s^2.
Root3Scalar boundary_area(PackingCase c, long i, SideMode mode = SideMode::paper,
                          DomainPolicy policy = DomainPolicy::tables);

/// The case's characteristic dimension: radius_ratio for a/c, outer_side for b/d.
Root3Scalar dimension_ratio(PackingCase c, long i, SideMode mode = SideMode::paper,
                            DomainPolicy policy = DomainPolicy::tables);

/// Packing density. Carries pi^0 for a/c (the pi factors cancel) and pi^1
/// for b/d (pi * N_i / A_i).
PiScaled density(PackingCase c, long i, SideMode mode = SideMode::paper,
                 DomainPolicy policy = DomainPolicy::tables);

/// Density through the partial-fraction decomposition (limit plus a decaying
/// rational term). Equals density(c, i, SideMode::paper) exactly.
PiScaled density_decomposed(PackingCase c, long i, DomainPolicy policy = DomainPolicy::tables);

/// Limit of the density as i grows: 3/8 (a), 3/4 (c), pi*sqrt(3)/6 (b and d).
PiScaled density_limit(PackingCase c);

/// Signed residual density - limit: positive for a/c, negative for b/d.
PiScaled residual(PackingCase c, long i, SideMode mode = SideMode::paper,
                  DomainPolicy policy = DomainPolicy::tables);

/// Smallest in-domain i with count(c, i) >= n, for n >= 1. Closed-form
/// quadratic inverse via integer square root.
long index_for_count(PackingCase c, const BigInt& n);

/// One table row of the sequence family.
struct SequenceRow {
    PackingCase case_tag;
    long i = 0;
    BigInt n;
    Root3Scalar dimension_ratio;
    std::optional<Root3Scalar> area;  // b/d only
    PiScaled density;
    PiScaled residual;
};

SequenceRow sequence_row(PackingCase c, long i, SideMode mode = SideMode::paper);

}  // namespace hexpack
