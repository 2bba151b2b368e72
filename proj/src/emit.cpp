#include "hexpack/emit.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace hexpack {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    std::string s = buf;
    if (s == "-0.000000") s.erase(0, 1);
    return s;
}

std::int64_t to_int64(const BigInt& n) {
    if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("value too large for document emission");
    return n.convert_to<std::int64_t>();
}

ordered_json exact_fields(const Root3Scalar& v) {
    return ordered_json{{"a_num", to_int64(numerator_of(v.rational_part()))},
                        {"a_den", to_int64(denominator_of(v.rational_part()))},
                        {"b_num", to_int64(numerator_of(v.sqrt3_coeff()))},
                        {"b_den", to_int64(denominator_of(v.sqrt3_coeff()))}};
}

ordered_json point_fields(const Point& p) {
    return ordered_json{{"x", exact_fields(p.x)},
                        {"y", exact_fields(p.y)},
                        {"x_decimal", decimal_string(p.x, 12)},
                        {"y_decimal", decimal_string(p.y, 12)}};
}

struct TableCell {
    std::string text;
};

struct TableDoc {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    int table_id = 0;
};

std::string render_table(const TableDoc& doc, DocFormat format) {
    std::ostringstream out;
    switch (format) {
        case DocFormat::csv: {
            for (std::size_t c = 0; c < doc.columns.size(); ++c)
                out << (c ? "," : "") << doc.columns[c];
            out << '\n';
            for (const auto& row : doc.rows) {
                for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
                out << '\n';
            }
            break;
        }
        case DocFormat::markdown: {
            out << '|';
            for (const auto& col : doc.columns) out << ' ' << col << " |";
            out << "\n|";
            for (std::size_t c = 0; c < doc.columns.size(); ++c) out << " --- |";
            out << '\n';
            for (const auto& row : doc.rows) {
                out << '|';
                for (const auto& cell : row) out << ' ' << cell << " |";
                out << '\n';
            }
            break;
        }
        case DocFormat::json: {
            ordered_json j;
            if (doc.table_id != 0) j["table"] = doc.table_id;
            j["columns"] = doc.columns;
            auto rows = ordered_json::array();
            for (const auto& row : doc.rows) {
                ordered_json r;
                for (std::size_t c = 0; c < row.size(); ++c) r[doc.columns[c]] = row[c];
                rows.push_back(std::move(r));
            }
            j["rows"] = std::move(rows);
            out << j.dump(2) << '\n';
            break;
        }
    }
    return out.str();
}

}  // namespace

std::string emit_table1(long i_to, DocFormat format) {
    if (i_to < 1) throw std::invalid_argument("emit_table1: i_to must be >= 1");
    TableDoc doc;
    doc.table_id = 1;
    doc.columns = {"i", "N", "R_over_r", "rho_a", "rho_b"};
    for (long i = 1; i <= i_to; ++i) {
        const PackingCase a = PackingCase::triangle_in_circle;
        const PackingCase b = PackingCase::triangle_in_triangle;
        doc.rows.push_back({std::to_string(i), count(a, i).str(),
                            decimal_string(radius_ratio(a, i), 6),
                            decimal_string(density(a, i), 6),
                            i >= min_index(b) ? decimal_string(density(b, i), 9) : "/"});
    }
    return render_table(doc, format);
}

std::string emit_table2(long i_to, DocFormat format) {
    if (i_to < 0) throw std::invalid_argument("emit_table2: i_to must be >= 0");
    TableDoc doc;
    doc.table_id = 2;
    doc.columns = {"i", "N", "R_over_r", "rho_c", "rho_d"};
    for (long i = 0; i <= i_to; ++i) {
        const PackingCase c = PackingCase::hexagon_in_circle;
        const PackingCase d = PackingCase::hexagon_in_hexagon;
        doc.rows.push_back({std::to_string(i), count(c, i).str(),
                            numerator_of(radius_ratio(c, i).rational_part()).str(),
                            decimal_string(density(c, i), 6),
                            i >= min_index(d) ? decimal_string(density(d, i), 6) : "/"});
    }
    return render_table(doc, format);
}

std::string emit_layout(const Layout& layout, DocFormat format) {
    if (format == DocFormat::csv) {
        std::ostringstream out;
        out << "index,x_a_num,x_a_den,x_b_num,x_b_den,x_decimal,"
               "y_a_num,y_a_den,y_b_num,y_b_den,y_decimal\n";
        for (std::size_t k = 0; k < layout.centers.size(); ++k) {
            const Point& p = layout.centers[k];
            out << k << ',' << numerator_of(p.x.rational_part()) << ','
                << denominator_of(p.x.rational_part()) << ',' << numerator_of(p.x.sqrt3_coeff())
                << ',' << denominator_of(p.x.sqrt3_coeff()) << ',' << decimal_string(p.x, 12)
                << ',' << numerator_of(p.y.rational_part()) << ','
                << denominator_of(p.y.rational_part()) << ',' << numerator_of(p.y.sqrt3_coeff())
                << ',' << denominator_of(p.y.sqrt3_coeff()) << ',' << decimal_string(p.y, 12)
                << '\n';
        }
        return out.str();
    }
    if (format != DocFormat::json)
        throw std::invalid_argument("emit_layout: format must be json or csv");

    ordered_json j;
    j["case"] = std::string(1, case_letter(layout.case_tag));
    j["i"] = layout.i;
    j["mode"] = layout.mode == SideMode::paper ? "paper" : "tangent";
    j["count"] = layout.centers.size();
    const Root3Scalar dimension = std::holds_alternative<CircleShape>(layout.bounds)
                                      ? std::get<CircleShape>(layout.bounds).radius
                                      : std::get<PolygonShape>(layout.bounds).side_length;
    j["boundary"] = ordered_json{
        {"kind", std::holds_alternative<CircleShape>(layout.bounds) ? "circle" : "polygon"},
        {"radius_or_side", exact_fields(dimension)},
        {"decimal", decimal_string(dimension, 12)}};
    auto centers = ordered_json::array();
    for (const Point& p : layout.centers) centers.push_back(point_fields(p));
    j["centers"] = std::move(centers);
    return j.dump(2) + "\n";
}

std::string render_figure(const Layout& layout, double scale) {
    if (!(scale > 0)) throw std::invalid_argument("render_figure: scale must be positive");

    // Bounding box in SVG coordinates (y axis flipped).
    double min_x, min_y, max_x, max_y;
    if (const auto* circle = std::get_if<CircleShape>(&layout.bounds)) {
        const double r = circle->radius.to_double() * scale;
        min_x = min_y = -r;
        max_x = max_y = r;
    } else {
        const auto& poly = std::get<PolygonShape>(layout.bounds);
        min_x = min_y = std::numeric_limits<double>::max();
        max_x = max_y = std::numeric_limits<double>::lowest();
        for (const Point& v : poly.vertices) {
            const double x = v.x.to_double() * scale;
            const double y = -v.y.to_double() * scale;
            min_x = std::min(min_x, x);
            max_x = std::max(max_x, x);
            min_y = std::min(min_y, y);
            max_y = std::max(max_y, y);
        }
    }
    const double margin_x = 0.05 * (max_x - min_x);
    const double margin_y = 0.05 * (max_y - min_y);
    const double width = (max_x - min_x) + 2 * margin_x;
    const double height = (max_y - min_y) + 2 * margin_y;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fixed6(width)
        << "\" height=\"" << fixed6(height) << "\" viewBox=\"" << fixed6(min_x - margin_x) << ' '
        << fixed6(min_y - margin_y) << ' ' << fixed6(width) << ' ' << fixed6(height) << "\">\n";

    const char* style = "fill=\"none\" stroke=\"black\" stroke-width=\"1\"";
    if (const auto* circle = std::get_if<CircleShape>(&layout.bounds)) {
        out << "<circle cx=\"0.000000\" cy=\"0.000000\" r=\""
            << fixed6(circle->radius.to_double() * scale) << "\" " << style << "/>\n";
    } else {
        const auto& poly = std::get<PolygonShape>(layout.bounds);
        out << "<path d=\"";
        for (std::size_t k = 0; k < poly.vertices.size(); ++k) {
            const Point& v = poly.vertices[k];
            out << (k == 0 ? "M " : " L ") << fixed6(v.x.to_double() * scale) << ' '
                << fixed6(-v.y.to_double() * scale);
        }
        out << " Z\" " << style << "/>\n";
    }
    for (const Point& p : layout.centers) {
        out << "<circle cx=\"" << fixed6(p.x.to_double() * scale) << "\" cy=\""
            << fixed6(-p.y.to_double() * scale) << "\" r=\"" << fixed6(scale) << "\" " << style
            << "/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string emit_convergence(const std::vector<PackingCase>& cases, long i_to, DocFormat format) {
    bool has_b = false, has_d = false;
    long start = i_to;
    for (PackingCase c : cases) {
        has_b |= c == PackingCase::triangle_in_triangle;
        has_d |= c == PackingCase::hexagon_in_hexagon;
        start = std::min(start, min_index(c));
    }
    const bool with_ratio = has_b && has_d;

    TableDoc doc;
    doc.columns = {"i"};
    for (PackingCase c : cases) doc.columns.push_back(std::string("res_") + case_letter(c));
    if (with_ratio) doc.columns.push_back("ratio_d_over_b");

    for (long i = start; i <= i_to; ++i) {
        std::vector<std::string> row{std::to_string(i)};
        for (PackingCase c : cases)
            row.push_back(index_in_domain(c, i) ? decimal_string(residual(c, i), 12) : "/");
        if (with_ratio) {
            const bool both = index_in_domain(PackingCase::triangle_in_triangle, i) &&
                              index_in_domain(PackingCase::hexagon_in_hexagon, i);
            row.push_back(both
                              ? decimal_string(
                                    ratio(residual(PackingCase::hexagon_in_hexagon, i).abs(),
                                          residual(PackingCase::triangle_in_triangle, i).abs()),
                                    12)
                              : "/");
        }
        doc.rows.push_back(std::move(row));
    }

    ordered_json matched = ordered_json::array();
    std::string summary;
    if (with_ratio) {
        for (long n : {10L, 100L, 1000L}) {
            const long ib = index_for_count(PackingCase::triangle_in_triangle, n);
            const long id = index_for_count(PackingCase::hexagon_in_hexagon, n);
            const PiScaled rb = residual(PackingCase::triangle_in_triangle, ib).abs();
            const PiScaled rd = residual(PackingCase::hexagon_in_hexagon, id).abs();
            const bool faster = rd < rb;
            if (!summary.empty()) summary += "; ";
            summary += "N=" + std::to_string(n) + " i_b=" + std::to_string(ib) +
                       " i_d=" + std::to_string(id) + " abs_res_b=" + decimal_string(rb, 12) +
                       " abs_res_d=" + decimal_string(rd, 12) +
                       " d_faster=" + (faster ? "true" : "false");
            matched.push_back(ordered_json{{"n", n},
                                           {"i_b", ib},
                                           {"i_d", id},
                                           {"abs_residual_b", decimal_string(rb, 12)},
                                           {"abs_residual_d", decimal_string(rd, 12)},
                                           {"d_faster", faster}});
        }
    }

    if (format == DocFormat::json) {
        ordered_json j;
        j["columns"] = doc.columns;
        auto rows = ordered_json::array();
        for (const auto& row : doc.rows) {
            ordered_json r;
            for (std::size_t c = 0; c < row.size(); ++c) r[doc.columns[c]] = row[c];
            rows.push_back(std::move(r));
        }
        j["rows"] = std::move(rows);
        if (with_ratio) j["matched_counts"] = std::move(matched);
        return j.dump(2) + "\n";
    }
    std::string body = render_table(doc, format);
    if (!summary.empty())
        body += (format == DocFormat::csv ? "# matched " : "\nMatched-count comparison: ") +
                summary + "\n";
    return body;
}

std::string emit_verification(const VerificationReport& report) {
    ordered_json j;
    j["case"] = std::string(1, case_letter(report.case_tag));
    j["i"] = report.i;
    j["mode"] = report.mode == SideMode::paper ? "paper" : "tangent";
    j["count_ok"] = report.count_ok;
    j["containment_ok"] = report.containment_ok;
    j["separation_ok"] = report.separation_ok;
    j["boundary_tangent_count"] = report.boundary_tangent_count;
    j["mutual_tangent_pairs"] = report.mutual_tangent_pairs;
    j["lattice_fit_count"] = report.lattice_fit_count;
    auto extras = ordered_json::array();
    for (const Point& p : report.extra_points) extras.push_back(point_fields(p));
    j["extra_points"] = std::move(extras);
    return j.dump(2) + "\n";
}

}  // namespace hexpack
