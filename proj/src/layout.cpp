#include "hexpack/layout.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <utility>

namespace hexpack {
namespace {

// Triangle with horizontal bottom side and apex up, centered at the origin
// with the given apothem. Outward normals: (0,-1), (sqrt3,1)/2, (-sqrt3,1)/2.
PolygonShape make_triangle(const Root3Scalar& apothem, Root3Scalar side) {
    const Root3Scalar s3 = Root3Scalar::sqrt3();
    const Root3Scalar two_ap = apothem * 2;
    PolygonShape poly;
    poly.halfplanes = {
        {Root3Scalar(0), Root3Scalar(-1), apothem, Root3Scalar(1)},
        {s3, Root3Scalar(1), two_ap, Root3Scalar(2)},
        {-s3, Root3Scalar(1), two_ap, Root3Scalar(2)},
    };
    poly.vertices = {
        {Root3Scalar(0), two_ap},
        {-(s3 * apothem), -apothem},
        {s3 * apothem, -apothem},
    };
    poly.side_length = std::move(side);
    return poly;
}

// Regular hexagon with corners on the x axis, centered at the origin with
// the given apothem; circumradius = 2*apothem/sqrt(3) = side.
PolygonShape make_hexagon(const Root3Scalar& apothem, Root3Scalar side) {
    const Root3Scalar s3 = Root3Scalar::sqrt3();
    const Root3Scalar two_ap = apothem * 2;
    const Root3Scalar rc = side;      // circumradius equals the side length
    const Root3Scalar half_rc = rc / 2;
    PolygonShape poly;
    poly.halfplanes = {
        {s3, Root3Scalar(1), two_ap, Root3Scalar(2)},
        {Root3Scalar(0), Root3Scalar(1), apothem, Root3Scalar(1)},
        {-s3, Root3Scalar(1), two_ap, Root3Scalar(2)},
        {-s3, Root3Scalar(-1), two_ap, Root3Scalar(2)},
        {Root3Scalar(0), Root3Scalar(-1), apothem, Root3Scalar(1)},
        {s3, Root3Scalar(-1), two_ap, Root3Scalar(2)},
    };
    poly.vertices = {
        {rc, Root3Scalar(0)},  {half_rc, apothem},   {-half_rc, apothem},
        {-rc, Root3Scalar(0)}, {-half_rc, -apothem}, {half_rc, -apothem},
    };
    poly.side_length = std::move(side);
    return poly;
}

// Integer projection of points whose x is rational and whose y is a rational
// multiple of sqrt(3): x = X/scale, y = (Q/scale) * sqrt(3). Exact while the
// scaled coordinates stay inside the guarded range.
struct ScaledPoints {
    std::vector<std::pair<std::int64_t, std::int64_t>> xy;
    std::int64_t scale = 1;
};

std::optional<ScaledPoints> scaled_points(std::span<const Point> pts) {
    constexpr std::int64_t kMaxScale = 1 << 16;
    constexpr std::int64_t kMaxCoord = 1 << 30;
    BigInt l(1);
    for (const Point& p : pts) {
        if (!p.x.is_rational() || !p.y.rational_part().is_zero()) return std::nullopt;
        l = boost::multiprecision::lcm(l, denominator_of(p.x.rational_part()));
        l = boost::multiprecision::lcm(l, denominator_of(p.y.sqrt3_coeff()));
        if (l > kMaxScale) return std::nullopt;
    }
    ScaledPoints out;
    out.scale = l.convert_to<std::int64_t>();
    out.xy.reserve(pts.size());
    for (const Point& p : pts) {
        const BigInt x = BigInt(numerator_of(p.x.rational_part()) *
                                (l / denominator_of(p.x.rational_part())));
        const BigInt q = BigInt(numerator_of(p.y.sqrt3_coeff()) *
                                (l / denominator_of(p.y.sqrt3_coeff())));
        if (boost::multiprecision::abs(x) > kMaxCoord || boost::multiprecision::abs(q) > kMaxCoord)
            return std::nullopt;
        out.xy.emplace_back(x.convert_to<std::int64_t>(), q.convert_to<std::int64_t>());
    }
    return out;
}

}  // namespace

std::vector<Point> generate_centers(PackingCase c, long i) {
    require_index(c, i);
    std::vector<Point> pts;
    if (is_triangular(c)) {
        pts.reserve(static_cast<std::size_t>(i) * (i + 1) / 2);
        // Rows top-down from the apex; the centroid of the three corner
        // centers sits at the origin, so the apex row is at 2(i-1)/3 * sqrt3.
        const Rational apex_row(2 * (i - 1), 3);
        for (long k = 0; k < i; ++k) {
            const Rational row = apex_row - k;
            for (long m = 0; m <= k; ++m)
                pts.push_back({Root3Scalar(2 * m - k), Root3Scalar::sqrt3(row)});
        }
    } else {
        pts.reserve(static_cast<std::size_t>(3 * i * i + 3 * i + 1));
        pts.push_back({Root3Scalar(0), Root3Scalar(0)});
        for (long ring = 1; ring <= i; ++ring) {
            // (x, q) pairs with y = q * sqrt3; corners counterclockwise from
            // the positive x axis, then each edge walked corner-exclusive.
            const std::array<std::pair<long, long>, 6> corners = {{{2 * ring, 0},
                                                                   {ring, ring},
                                                                   {-ring, ring},
                                                                   {-2 * ring, 0},
                                                                   {-ring, -ring},
                                                                   {ring, -ring}}};
            for (std::size_t e = 0; e < corners.size(); ++e) {
                const auto [cx, cq] = corners[e];
                const auto [nx, nq] = corners[(e + 1) % corners.size()];
                const long dx = (nx - cx) / ring;
                const long dq = (nq - cq) / ring;
                for (long s = 0; s < ring; ++s)
                    pts.push_back({Root3Scalar(cx + s * dx), Root3Scalar::sqrt3(Rational(cq + s * dq))});
            }
        }
    }
    return pts;
}

BoundingShape boundary(PackingCase c, long i, SideMode mode) {
    require_index(c, i);
    switch (c) {
        case PackingCase::triangle_in_circle:
        case PackingCase::hexagon_in_circle:
            return CircleShape{radius_ratio(c, i)};
        case PackingCase::triangle_in_triangle: {
            // tangent: sides at distance 1 from their nearest row,
            //          apothem (i-1) sqrt3/3 + 1;
            // paper:   same center and orientation with the tabulated side,
            //          apothem (2i-1) sqrt3/6 + 1.
            const Root3Scalar apothem =
                mode == SideMode::paper
                    ? Root3Scalar(Rational(1), Rational(2 * i - 1, 6))
                    : Root3Scalar(Rational(1), Rational(i - 1, 3));
            return make_triangle(apothem, outer_side(c, i, mode));
        }
        case PackingCase::hexagon_in_hexagon:
            return make_hexagon(Root3Scalar(Rational(1), Rational(i)),
                                outer_side(c, i, mode));
    }
    throw std::invalid_argument("unknown packing case");
}

bool circle_fits(const BoundingShape& shape, const Point& center) {
    if (const auto* circle = std::get_if<CircleShape>(&shape)) {
        const Root3Scalar margin = circle->radius - 1;
        if (margin.sign() < 0) return false;
        const Root3Scalar d2 = center.x * center.x + center.y * center.y;
        return (d2 - margin * margin).sign() <= 0;
    }
    const auto& poly = std::get<PolygonShape>(shape);
    for (const HalfPlane& hp : poly.halfplanes) {
        const Root3Scalar reach = hp.nx * center.x + hp.ny * center.y + hp.normal_length;
        if ((reach - hp.offset).sign() > 0) return false;
    }
    return true;
}

bool circle_tangent_to_boundary(const BoundingShape& shape, const Point& center) {
    if (const auto* circle = std::get_if<CircleShape>(&shape)) {
        const Root3Scalar margin = circle->radius - 1;
        if (margin.sign() < 0) return false;
        const Root3Scalar d2 = center.x * center.x + center.y * center.y;
        return d2 == margin * margin;
    }
    const auto& poly = std::get<PolygonShape>(shape);
    bool touches = false;
    for (const HalfPlane& hp : poly.halfplanes) {
        const int s = (hp.nx * center.x + hp.ny * center.y + hp.normal_length - hp.offset).sign();
        if (s > 0) return false;
        if (s == 0) touches = true;
    }
    return touches;
}

Root3Scalar squared_distance(const Point& p, const Point& q) {
    const Root3Scalar dx = p.x - q.x;
    const Root3Scalar dy = p.y - q.y;
    return dx * dx + dy * dy;
}

bool separation_ok(std::span<const Point> centers) {
    if (const auto view = scaled_points(centers)) {
        const std::int64_t threshold = 4 * view->scale * view->scale;
        const auto& xy = view->xy;
        for (std::size_t i = 0; i < xy.size(); ++i)
            for (std::size_t j = i + 1; j < xy.size(); ++j) {
                const std::int64_t dx = xy[i].first - xy[j].first;
                const std::int64_t dq = xy[i].second - xy[j].second;
                if (dx * dx + 3 * dq * dq < threshold) return false;
            }
        return true;
    }
    const Root3Scalar four(4);
    for (std::size_t i = 0; i < centers.size(); ++i)
        for (std::size_t j = i + 1; j < centers.size(); ++j)
            if ((squared_distance(centers[i], centers[j]) - four).sign() < 0) return false;
    return true;
}

std::size_t mutual_tangent_pair_count(std::span<const Point> centers) {
    std::size_t pairs = 0;
    if (const auto view = scaled_points(centers)) {
        const std::int64_t threshold = 4 * view->scale * view->scale;
        const auto& xy = view->xy;
        for (std::size_t i = 0; i < xy.size(); ++i)
            for (std::size_t j = i + 1; j < xy.size(); ++j) {
                const std::int64_t dx = xy[i].first - xy[j].first;
                const std::int64_t dq = xy[i].second - xy[j].second;
                if (dx * dx + 3 * dq * dq == threshold) ++pairs;
            }
        return pairs;
    }
    const Root3Scalar four(4);
    for (std::size_t i = 0; i < centers.size(); ++i)
        for (std::size_t j = i + 1; j < centers.size(); ++j)
            if (squared_distance(centers[i], centers[j]) == four) ++pairs;
    return pairs;
}

bool on_center_lattice(const Point& anchor, const Point& p) {
    const Root3Scalar dx = p.x - anchor.x;
    const Root3Scalar dy = p.y - anchor.y;
    if (!dx.is_rational() || !dy.rational_part().is_zero()) return false;
    const Rational& rx = dx.rational_part();
    const Rational& rq = dy.sqrt3_coeff();
    if (denominator_of(rx) != 1 || denominator_of(rq) != 1) return false;
    const BigInt parity = BigInt(numerator_of(rx) + numerator_of(rq));
    return BigInt(parity % 2).is_zero();
}

Layout make_layout(PackingCase c, long i, SideMode mode) {
    return Layout{c, i, mode, generate_centers(c, i), boundary(c, i, mode)};
}

TangencyCertificate tangency_certificate(const Layout& layout) {
    TangencyCertificate cert;
    for (const Point& p : layout.centers)
        if (circle_tangent_to_boundary(layout.bounds, p)) ++cert.boundary_tangent_count;
    cert.mutual_tangent_pairs = mutual_tangent_pair_count(layout.centers);
    return cert;
}

double circumradius_hint(const BoundingShape& shape) {
    if (const auto* circle = std::get_if<CircleShape>(&shape))
        return circle->radius.to_double();
    const auto& poly = std::get<PolygonShape>(shape);
    double best = 0.0;
    for (const Point& v : poly.vertices)
        best = std::max(best, std::hypot(v.x.to_double(), v.y.to_double()));
    return best;
}

double area_fp(const BoundingShape& shape) {
    if (const auto* circle = std::get_if<CircleShape>(&shape)) {
        const double r = circle->radius.to_double();
        return 3.141592653589793 * r * r;
    }
    const auto& poly = std::get<PolygonShape>(shape);
    double twice_area = 0.0;
    for (std::size_t k = 0; k < poly.vertices.size(); ++k) {
        const Point& p = poly.vertices[k];
        const Point& q = poly.vertices[(k + 1) % poly.vertices.size()];
        twice_area += p.x.to_double() * q.y.to_double() - q.x.to_double() * p.y.to_double();
    }
    return std::abs(twice_area) / 2.0;
}

}  // namespace hexpack
