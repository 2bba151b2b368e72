#pragma once

#include "hexpack/layout.hpp"

#include <cstddef>
#include <vector>

namespace hexpack {

/// Result of the brute-force lattice enumeration: how many lattice circles
/// fit the boundary, and which fitting circles are not part of the canonical
/// arrangement. Extras are reported, never treated as failures: the closed
/// forms count the prescribed arrangement, not the best lattice subset.
struct LatticeFit {
    std::size_t fit_count = 0;
    std::vector<Point> extras;  // deterministic order: by row, then by x
};

/// Enumerates every point of the hexagonal lattice (anchored at the layout's
/// first center, basis (2,0) and (1,sqrt3)) within the boundary circumradius
/// plus 2, and tests circle_fits exactly for each. Candidate generation is
/// independent of generate_centers; the canonical set is used only for the
/// final comparison.
LatticeFit lattice_fit_count(const Layout& layout);

struct VerificationReport {
    PackingCase case_tag;
    long i = 0;
    SideMode mode = SideMode::paper;
    bool count_ok = false;
    bool containment_ok = false;
    bool separation_ok = false;
    std::size_t boundary_tangent_count = 0;
    std::size_t mutual_tangent_pairs = 0;
    std::size_t lattice_fit_count = 0;
    std::vector<Point> extra_points;

    bool all_canonical_ok() const { return count_ok && containment_ok && separation_ok; }
};

/// Runs the count/containment/separation/tangency checks plus the lattice
/// enumeration. Check failures are report fields, not errors.
VerificationReport verify(PackingCase c, long i, SideMode mode = SideMode::paper);

/// Compares a floating-point density count*pi/area (area from the boundary
/// geometry) against the 12-digit decimal rendering of the exact density;
/// passes iff the absolute difference is below 1e-9.
bool numeric_density_crosscheck(PackingCase c, long i, SideMode mode = SideMode::paper);

/// Smallest index <= i_max at which extra lattice circles fit the boundary,
/// or -1 if none do.
long first_extra_index(PackingCase c, long i_max, SideMode mode = SideMode::paper);

}  // namespace hexpack
