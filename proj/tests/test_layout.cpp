#include "hexpack/layout.hpp"

#include <doctest.h>

#include <algorithm>

using namespace hexpack;

namespace {
constexpr PackingCase A = PackingCase::triangle_in_circle;
constexpr PackingCase B = PackingCase::triangle_in_triangle;
constexpr PackingCase C = PackingCase::hexagon_in_circle;
constexpr PackingCase D = PackingCase::hexagon_in_hexagon;

Point pt(Rational x, Rational y_sqrt3) { return {Root3Scalar(x), Root3Scalar::sqrt3(y_sqrt3)}; }

// Centers at exact distance 1 from the given polygon side.
std::size_t side_tangent_count(const PolygonShape& poly, std::size_t side,
                               std::span<const Point> centers) {
    const HalfPlane& hp = poly.halfplanes[side];
    std::size_t n = 0;
    for (const Point& p : centers)
        if (hp.nx * p.x + hp.ny * p.y + hp.normal_length == hp.offset) ++n;
    return n;
}
}  // namespace

TEST_CASE("triangular centers, row-major from the apex") {
    const auto pts = generate_centers(A, 2);
    REQUIRE(pts.size() == 3);
    CHECK(pts[0] == pt(0, Rational(2, 3)));
    CHECK(pts[1] == pt(-1, Rational(-1, 3)));
    CHECK(pts[2] == pt(1, Rational(-1, 3)));
}

TEST_CASE("hexagonal centers, hub plus counterclockwise rings") {
    const auto pts = generate_centers(C, 1);
    REQUIRE(pts.size() == 7);
    CHECK(pts[0] == pt(0, 0));
    CHECK(pts[1] == pt(2, 0));
    CHECK(pts[2] == pt(1, 1));
    CHECK(pts[3] == pt(-1, 1));
    CHECK(pts[4] == pt(-2, 0));
    CHECK(pts[5] == pt(-1, -1));
    CHECK(pts[6] == pt(1, -1));

    CHECK(generate_centers(C, 24).size() == 1801);
}

TEST_CASE("center counts match the closed forms") {
    for (PackingCase c : kAllCases)
        for (long i = min_index(c); i <= 100; ++i)
            CHECK(BigInt(generate_centers(c, i).size()) == count(c, i));
}

TEST_CASE("centers lie on the lattice anchored at the first center") {
    for (PackingCase c : kAllCases)
        for (long i = min_index(c); i <= 50; i += (i < 8 ? 1 : 7)) {
            const auto pts = generate_centers(c, i);
            for (const Point& p : pts) CHECK(on_center_lattice(pts.front(), p));
        }
    CHECK(!on_center_lattice(pt(0, 0), pt(1, 0)));        // odd parity
    CHECK(!on_center_lattice(pt(0, 0), pt(0, Rational(1, 3))));  // off-row
}

TEST_CASE("boundaries") {
    SUBCASE("circles") {
        CHECK(std::get<CircleShape>(boundary(C, 2)).radius == Root3Scalar(5));
        CHECK(std::get<CircleShape>(boundary(A, 1)).radius == Root3Scalar(1));
    }
    SUBCASE("tangent-mode triangle touches the bottom row") {
        const auto shape = boundary(B, 2, SideMode::tangent);
        const auto& poly = std::get<PolygonShape>(shape);
        CHECK(poly.side_length == Root3Scalar(Rational(2), Rational(2)));
        const auto centers = generate_centers(B, 2);
        CHECK(side_tangent_count(poly, 0, centers) == 2);  // both bottom-row circles
    }
    SUBCASE("hexagon apothem") {
        const auto shape = boundary(D, 1);
        const auto& poly = std::get<PolygonShape>(shape);
        // unit-normal sides carry the apothem as offset
        CHECK(poly.halfplanes[1].offset == Root3Scalar(Rational(1), Rational(1)));
        CHECK(poly.side_length == outer_side(D, 1));
    }
    SUBCASE("half-plane normals have exact stored lengths") {
        for (const auto shape : {boundary(B, 3, SideMode::paper), boundary(B, 3, SideMode::tangent),
                                 boundary(D, 2)}) {
            const auto& poly = std::get<PolygonShape>(shape);
            for (const HalfPlane& hp : poly.halfplanes)
                CHECK(hp.nx * hp.nx + hp.ny * hp.ny == hp.normal_length * hp.normal_length);
        }
    }
    SUBCASE("polygon vertices satisfy every half-plane, two with equality") {
        for (const auto shape : {boundary(B, 4, SideMode::paper), boundary(D, 3)}) {
            const auto& poly = std::get<PolygonShape>(shape);
            for (const Point& v : poly.vertices) {
                std::size_t tight = 0;
                for (const HalfPlane& hp : poly.halfplanes) {
                    const int s = (hp.nx * v.x + hp.ny * v.y - hp.offset).sign();
                    CHECK(s <= 0);
                    if (s == 0) ++tight;
                }
                CHECK(tight == 2);
            }
        }
    }
}

TEST_CASE("circle_fits") {
    CHECK(circle_fits(CircleShape{Root3Scalar(1)}, pt(0, 0)));  // exact tangency at the center
    const CircleShape a2{Root3Scalar(Rational(1), Rational(2, 3))};
    CHECK(circle_fits(a2, pt(0, Rational(2, 3))));
    CHECK(circle_tangent_to_boundary(a2, pt(0, Rational(2, 3))));
    CHECK(!circle_fits(CircleShape{Root3Scalar(1)}, pt(2, 0)));
    CHECK(!circle_fits(CircleShape{Root3Scalar(Rational(1, 2))}, pt(0, 0)));  // radius < 1
}

TEST_CASE("separation") {
    const auto a2 = generate_centers(A, 2);
    CHECK(separation_ok(a2));
    CHECK(mutual_tangent_pair_count(a2) == 3);

    const Point overlapping[] = {pt(0, 0), {Root3Scalar(1), Root3Scalar(0)}};
    CHECK(!separation_ok(overlapping));
    const Point single[] = {pt(0, 0)};
    CHECK(separation_ok(single));

    SUBCASE("exact fallback for coordinates outside the integer projection") {
        const Point odd[] = {{Root3Scalar::sqrt3(), Root3Scalar(Rational(1, 7))},
                             {Root3Scalar::sqrt3() + 2, Root3Scalar(Rational(1, 7))}};
        CHECK(separation_ok(odd));
        CHECK(mutual_tangent_pair_count(odd) == 1);
    }
}

TEST_CASE("tangency certificates") {
    const auto certA2 = tangency_certificate(make_layout(A, 2));
    CHECK(certA2.boundary_tangent_count == 3);
    CHECK(certA2.mutual_tangent_pairs == 3);

    const auto certC1 = tangency_certificate(make_layout(C, 1));
    CHECK(certC1.boundary_tangent_count == 6);
    CHECK(certC1.mutual_tangent_pairs == 12);

    CHECK(tangency_certificate(make_layout(B, 3, SideMode::paper)).boundary_tangent_count == 0);
}

TEST_CASE("every layout fits and separates") {
    auto run = [](PackingCase c, SideMode mode) {
        for (long i = min_index(c); i <= 50; ++i) {
            const Layout layout = make_layout(c, i, mode);
            CHECK(BigInt(layout.centers.size()) == count(c, i));
            for (const Point& p : layout.centers) CHECK(circle_fits(layout.bounds, p));
            CHECK(separation_ok(layout.centers));
        }
    };
    run(A, SideMode::paper);
    run(B, SideMode::paper);
    run(B, SideMode::tangent);
    run(C, SideMode::paper);
    run(D, SideMode::paper);
}

TEST_CASE("circle-bounded tangency counts") {
    for (long i = 2; i <= 40; ++i)
        CHECK(tangency_certificate(make_layout(A, i)).boundary_tangent_count == 3);
    for (long i = 1; i <= 40; ++i)
        CHECK(tangency_certificate(make_layout(C, i)).boundary_tangent_count == 6);
}

TEST_CASE("polygon-side tangency counts") {
    SUBCASE("tangent-mode triangle: every side touches at least one circle") {
        for (long i = 2; i <= 20; ++i) {
            const Layout layout = make_layout(B, i, SideMode::tangent);
            const auto& poly = std::get<PolygonShape>(layout.bounds);
            for (std::size_t side = 0; side < poly.halfplanes.size(); ++side)
                CHECK(side_tangent_count(poly, side, layout.centers) >= 1);
        }
    }
    SUBCASE("hexagon: every side touches exactly i + 1 circles") {
        for (long i = 1; i <= 20; ++i) {
            const Layout layout = make_layout(D, i);
            const auto& poly = std::get<PolygonShape>(layout.bounds);
            for (std::size_t side = 0; side < poly.halfplanes.size(); ++side)
                CHECK(side_tangent_count(poly, side, layout.centers) ==
                      static_cast<std::size_t>(i) + 1);
        }
    }
    SUBCASE("hexagon corner circle touches both adjacent sides") {
        for (long i = 1; i <= 20; ++i) {
            const auto shape = boundary(D, i);
            const auto& poly = std::get<PolygonShape>(shape);
            const Point corner{Root3Scalar(2 * i), Root3Scalar(0)};
            std::size_t touching = 0;
            for (const HalfPlane& hp : poly.halfplanes)
                if (hp.nx * corner.x + hp.ny * corner.y + hp.normal_length == hp.offset) ++touching;
            CHECK(touching == 2);
        }
    }
}

TEST_CASE("case a: the three corner circles realize the radius exactly") {
    for (long i = 2; i <= 40; ++i) {
        const Layout layout = make_layout(A, i);
        const Root3Scalar margin2 =
            (std::get<CircleShape>(layout.bounds).radius - 1) *
            (std::get<CircleShape>(layout.bounds).radius - 1);
        std::size_t on_rim = 0;
        for (const Point& p : layout.centers) {
            const Root3Scalar d2 = p.x * p.x + p.y * p.y;
            CHECK((d2 - margin2).sign() <= 0);
            if (d2 == margin2) ++on_rim;
        }
        CHECK(on_rim == 3);
    }
}
