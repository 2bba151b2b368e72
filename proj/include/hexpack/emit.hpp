#pragma once

#include "hexpack/layout.hpp"
#include "hexpack/oracle.hpp"
#include "hexpack/sequences.hpp"

#include <string>
#include <vector>

namespace hexpack {

enum class DocFormat { csv, markdown, json };

/// Columns i, N, R_over_r (6 fractional digits), rho_a (6), rho_b in paper
/// mode (9, "/" at i = 1), for i = 1..i_to. CSV header is exactly
/// `i,N,R_over_r,rho_a,rho_b`; rounding is half-up; lines end with LF.
std::string emit_table1(long i_to, DocFormat format);

/// Columns i, N, R_over_r (integer), rho_c (6), rho_d (6, "/" at i = 0),
/// for i = 0..i_to. CSV header is exactly `i,N,R_over_r,rho_c,rho_d`.
std::string emit_table2(long i_to, DocFormat format);

/// Layout document. JSON carries the boundary kind, the exact radius/side as
/// numerator-denominator fields, 12-digit decimals, and every center in
/// generation order; CSV carries the center rows only. Parsing the exact
/// fields reconstructs the original values.
std::string emit_layout(const Layout& layout, DocFormat format);

/// Deterministic SVG 1.1: the boundary outline followed by one circle per
/// center at radius scale, viewBox = boundary bounding box plus a 5% margin,
/// coordinates printed at 6 decimals.
std::string render_figure(const Layout& layout, double scale = 20.0);

/// Columns i plus one signed 12-digit residual column per requested case,
/// and |residual(d)| / |residual(b, paper)| when both are requested; ends
/// with a matched-count summary line for N in {10, 100, 1000}.
std::string emit_convergence(const std::vector<PackingCase>& cases, long i_to, DocFormat format);

/// Verification report as JSON.
std::string emit_verification(const VerificationReport& report);

}  // namespace hexpack
