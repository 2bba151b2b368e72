#include "hexpack/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

namespace hexpack {
namespace {

// Strict ordering by (y, x) with exact comparisons.
bool point_less(const Point& p, const Point& q) {
    const int dy = (p.y - q.y).sign();
    if (dy != 0) return dy < 0;
    return (p.x - q.x).sign() < 0;
}

}  // namespace

LatticeFit lattice_fit_count(const Layout& layout) {
    const Point& anchor = layout.centers.front();
    const double reach = circumradius_hint(layout.bounds) + 2.0;
    const double sqrt3 = 1.7320508075688772;
    const double ax = anchor.x.to_double();
    const double aq = anchor.y.sqrt3_coeff().convert_to<double>();

    std::vector<Point> fitting;
    const long t_lo = static_cast<long>(std::floor(-reach / sqrt3 - aq)) - 1;
    const long t_hi = static_cast<long>(std::ceil(reach / sqrt3 - aq)) + 1;
    for (long t = t_lo; t <= t_hi; ++t) {
        const Root3Scalar y = anchor.y + Root3Scalar::sqrt3(Rational(t));
        const long s_lo = static_cast<long>(std::floor((-reach - ax - t) / 2)) - 1;
        const long s_hi = static_cast<long>(std::ceil((reach - ax - t) / 2)) + 1;
        for (long s = s_lo; s <= s_hi; ++s) {
            const Point p{anchor.x + Root3Scalar(t + 2 * s), y};
            if (circle_fits(layout.bounds, p)) fitting.push_back(p);
        }
    }

    std::vector<Point> canonical(layout.centers.begin(), layout.centers.end());
    std::sort(canonical.begin(), canonical.end(), point_less);

    LatticeFit result;
    result.fit_count = fitting.size();
    for (const Point& p : fitting) {
        const auto it = std::lower_bound(canonical.begin(), canonical.end(), p, point_less);
        if (it == canonical.end() || !(*it == p)) result.extras.push_back(p);
    }
    return result;
}

VerificationReport verify(PackingCase c, long i, SideMode mode) {
    const Layout layout = make_layout(c, i, mode);

    VerificationReport report;
    report.case_tag = c;
    report.i = i;
    report.mode = mode;
    report.count_ok = BigInt(layout.centers.size()) == count(c, i);
    report.containment_ok = std::all_of(layout.centers.begin(), layout.centers.end(),
                                        [&](const Point& p) { return circle_fits(layout.bounds, p); });
    report.separation_ok = hexpack::separation_ok(layout.centers);

    const TangencyCertificate cert = tangency_certificate(layout);
    report.boundary_tangent_count = cert.boundary_tangent_count;
    report.mutual_tangent_pairs = cert.mutual_tangent_pairs;

    LatticeFit fit = lattice_fit_count(layout);
    report.lattice_fit_count = fit.fit_count;
    report.extra_points = std::move(fit.extras);
    return report;
}

bool numeric_density_crosscheck(PackingCase c, long i, SideMode mode) {
    const double circles = count(c, i).convert_to<double>();
    const double area = area_fp(boundary(c, i, mode));
    const double fp = circles * 3.141592653589793 / area;
    const double exact = std::strtod(decimal_string(density(c, i, mode), 12).c_str(), nullptr);
    return std::abs(fp - exact) < 1e-9;
}

long first_extra_index(PackingCase c, long i_max, SideMode mode) {
    for (long i = min_index(c); i <= i_max; ++i)
        if (!lattice_fit_count(make_layout(c, i, mode)).extras.empty()) return i;
    return -1;
}

}  // namespace hexpack
