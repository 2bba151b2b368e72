#include "hexpack/sequences.hpp"

#include <stdexcept>

namespace hexpack {
namespace {

// Counts without the domain gate, for internal inverse/fixup queries.
BigInt count_raw(PackingCase c, long i) {
    const BigInt n(i);
    if (is_triangular(c)) return n * (n + 1) / 2;
    return 3 * n * n + 3 * n + 1;
}

}  // namespace

char case_letter(PackingCase c) {
    switch (c) {
        case PackingCase::triangle_in_circle: return 'a';
        case PackingCase::triangle_in_triangle: return 'b';
        case PackingCase::hexagon_in_circle: return 'c';
        case PackingCase::hexagon_in_hexagon: return 'd';
    }
    throw std::invalid_argument("unknown packing case");
}

const char* case_name(PackingCase c) {
    switch (c) {
        case PackingCase::triangle_in_circle: return "triangle-in-circle";
        case PackingCase::triangle_in_triangle: return "triangle-in-triangle";
        case PackingCase::hexagon_in_circle: return "hexagon-in-circle";
        case PackingCase::hexagon_in_hexagon: return "hexagon-in-hexagon";
    }
    throw std::invalid_argument("unknown packing case");
}

std::optional<PackingCase> case_from_letter(char letter) {
    switch (letter) {
        case 'a': return PackingCase::triangle_in_circle;
        case 'b': return PackingCase::triangle_in_triangle;
        case 'c': return PackingCase::hexagon_in_circle;
        case 'd': return PackingCase::hexagon_in_hexagon;
        default: return std::nullopt;
    }
}

bool is_circle_bounded(PackingCase c) {
    return c == PackingCase::triangle_in_circle || c == PackingCase::hexagon_in_circle;
}

bool is_triangular(PackingCase c) {
    return c == PackingCase::triangle_in_circle || c == PackingCase::triangle_in_triangle;
}

long min_index(PackingCase c, DomainPolicy policy) {
    switch (c) {
        case PackingCase::triangle_in_circle: return 1;
        case PackingCase::triangle_in_triangle: return policy == DomainPolicy::tables ? 2 : 1;
        case PackingCase::hexagon_in_circle: return 0;
        case PackingCase::hexagon_in_hexagon: return policy == DomainPolicy::tables ? 1 : 0;
    }
    throw std::invalid_argument("unknown packing case");
}

bool index_in_domain(PackingCase c, long i, DomainPolicy policy) {
    return i >= min_index(c, policy);
}

void require_index(PackingCase c, long i, DomainPolicy policy) {
    if (!index_in_domain(c, i, policy))
        throw std::out_of_range(std::string("case ") + case_letter(c) + ": index " +
                                std::to_string(i) + " below domain minimum " +
                                std::to_string(min_index(c, policy)));
}

BigInt count(PackingCase c, long i, DomainPolicy policy) {
    require_index(c, i, policy);
    return count_raw(c, i);
}

Root3Scalar inner_side(PackingCase c, long i, DomainPolicy policy) {
    require_index(c, i, policy);
    return Root3Scalar(is_triangular(c) ? 2 * (i - 1) : 2 * i);
}

Root3Scalar radius_ratio(PackingCase c, long i, DomainPolicy policy) {
    if (!is_circle_bounded(c))
        throw std::invalid_argument("radius_ratio: defined for circle-bounded cases only");
    require_index(c, i, policy);
    if (c == PackingCase::triangle_in_circle)
        return Root3Scalar(Rational(1), Rational(2 * i - 2, 3));  // 1 + (2i-2)/sqrt(3)
    return Root3Scalar(2 * i + 1);
}

Root3Scalar outer_side(PackingCase c, long i, SideMode mode, DomainPolicy policy) {
    if (is_circle_bounded(c))
        throw std::invalid_argument("outer_side: defined for polygon-bounded cases only");
    require_index(c, i, policy);
    if (c == PackingCase::triangle_in_triangle) {
        const long base = mode == SideMode::paper ? 2 * i - 1 : 2 * i - 2;
        return Root3Scalar(Rational(base), Rational(2));
    }
    return Root3Scalar(Rational(2 * i), Rational(2, 3));  // 2i + 2/sqrt(3)
}

Root3Scalar boundary_area(PackingCase c, long i, SideMode mode, DomainPolicy policy) {
    const Root3Scalar side = outer_side(c, i, mode, policy);
    const Root3Scalar factor = c == PackingCase::triangle_in_triangle
                                   ? Root3Scalar::sqrt3(Rational(1, 4))
                                   : Root3Scalar::sqrt3(Rational(3, 2));
    return factor * side * side;
}

Root3Scalar dimension_ratio(PackingCase c, long i, SideMode mode, DomainPolicy policy) {
    return is_circle_bounded(c) ? radius_ratio(c, i, policy) : outer_side(c, i, mode, policy);
}

PiScaled density(PackingCase c, long i, SideMode mode, DomainPolicy policy) {
    const Root3Scalar circles{Rational(count(c, i, policy))};
    if (is_circle_bounded(c)) {
        const Root3Scalar rr = radius_ratio(c, i, policy);
        return PiScaled(circles / (rr * rr), 0);
    }
    return PiScaled(circles / boundary_area(c, i, mode, policy), 1);
}

PiScaled density_decomposed(PackingCase c, long i, DomainPolicy policy) {
    require_index(c, i, policy);
    const Rational idx(i);
    switch (c) {
        case PackingCase::triangle_in_circle: {
            // 3/8 + ((9 - 3 sqrt3) i - (21/4 - 3 sqrt3)) /
            //       (8 i^2 + (8 sqrt3 - 16) i + (14 - 8 sqrt3))
            const Root3Scalar num(9 * idx - Rational(21, 4), -3 * idx + 3);
            const Root3Scalar den(8 * idx * idx - 16 * idx + 14, 8 * idx - 8);
            return PiScaled(Root3Scalar(Rational(3, 8)) + num / den, 0);
        }
        case PackingCase::triangle_in_triangle: {
            // pi/(2 sqrt3) + pi ((2/sqrt3 - 2) i - 13/(4 sqrt3) + 1) /
            //                (2 i^2 - (2 - 4 sqrt3) i + (13/2 - 2 sqrt3))
            const Root3Scalar num(-2 * idx + 1, Rational(2, 3) * idx - Rational(13, 12));
            const Root3Scalar den(2 * idx * idx - 2 * idx + Rational(13, 2), 4 * idx - 2);
            return PiScaled(Root3Scalar::sqrt3(Rational(1, 6)) + num / den, 1);
        }
        case PackingCase::hexagon_in_circle: {
            // 3/4 + 1/(16 i^2 + 16 i + 4)
            const Rational tail = Rational(1) / (16 * idx * idx + 16 * idx + 4);
            return PiScaled(Root3Scalar(Rational(3, 4) + tail), 0);
        }
        case PackingCase::hexagon_in_hexagon: {
            // pi/(2 sqrt3) + pi (1 - 2/sqrt3) i / (2 sqrt3 i^2 + 4 i + 2/sqrt3)
            const Root3Scalar num(idx, Rational(-2, 3) * idx);
            const Root3Scalar den(4 * idx, 2 * idx * idx + Rational(2, 3));
            return PiScaled(Root3Scalar::sqrt3(Rational(1, 6)) + num / den, 1);
        }
    }
    throw std::invalid_argument("unknown packing case");
}

PiScaled density_limit(PackingCase c) {
    switch (c) {
        case PackingCase::triangle_in_circle: return PiScaled(Root3Scalar(Rational(3, 8)));
        case PackingCase::hexagon_in_circle: return PiScaled(Root3Scalar(Rational(3, 4)));
        case PackingCase::triangle_in_triangle:
        case PackingCase::hexagon_in_hexagon:
            return PiScaled(Root3Scalar::sqrt3(Rational(1, 6)), 1);  // pi/(2 sqrt3)
    }
    throw std::invalid_argument("unknown packing case");
}

PiScaled residual(PackingCase c, long i, SideMode mode, DomainPolicy policy) {
    return density(c, i, mode, policy) - density_limit(c);
}

long index_for_count(PackingCase c, const BigInt& n) {
    if (n < 1) throw std::invalid_argument("index_for_count: n must be >= 1");
    BigInt floor_root;
    if (is_triangular(c))
        floor_root = (boost::multiprecision::sqrt(BigInt(8 * n + 1)) - 1) / 2;
    else
        floor_root = (boost::multiprecision::sqrt(BigInt(12 * n - 3)) - 3) / 6;
    long i = floor_root.convert_to<long>();
    if (count_raw(c, i) < n) ++i;
    while (i > 0 && count_raw(c, i - 1) >= n) --i;
    const long lo = min_index(c, DomainPolicy::tables);
    return i < lo ? lo : i;
}

SequenceRow sequence_row(PackingCase c, long i, SideMode mode) {
    SequenceRow row;
    row.case_tag = c;
    row.i = i;
    row.n = count(c, i);
    row.dimension_ratio = dimension_ratio(c, i, mode);
    if (!is_circle_bounded(c)) row.area = boundary_area(c, i, mode);
    row.density = density(c, i, mode);
    row.residual = residual(c, i, mode);
    return row;
}

}  // namespace hexpack
