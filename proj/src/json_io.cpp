#include "cheegerlab/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

namespace cheegerlab {

namespace {

nlohmann::json vertices_to_json(const std::vector<Vec2>& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Vec2& p : v) arr.push_back({p.x, p.y});
    return arr;
}

std::vector<Vec2> vertices_from_json(const nlohmann::json& arr) {
    if (!arr.is_array()) throw GeometryError("expected an array of [x, y] pairs");
    std::vector<Vec2> v;
    v.reserve(arr.size());
    for (const auto& e : arr) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
            throw GeometryError("vertex must be a pair of numbers");
        v.push_back({e[0].get<double>(), e[1].get<double>()});
    }
    return v;
}

nlohmann::json opt_to_json(const std::optional<double>& o) {
    return o ? nlohmann::json(*o) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json polygon_to_json(const Polygon& p) {
    return {{"vertices", vertices_to_json(p.vertices())}};
}

Polygon polygon_from_json(const nlohmann::json& j) {
    if (!j.contains("vertices")) throw GeometryError("polygon JSON needs a \"vertices\" field");
    return make_polygon(vertices_from_json(j.at("vertices")));
}

nlohmann::json arc_polygon_to_json(const ArcPolygon& a) {
    return {{"radius", a.radius}, {"inner_vertices", vertices_to_json(a.core.vertices())}};
}

ArcPolygon arc_polygon_from_json(const nlohmann::json& j) {
    if (!j.contains("radius") || !j.contains("inner_vertices"))
        throw GeometryError("arc polygon JSON needs \"radius\" and \"inner_vertices\"");
    return make_arc_polygon(make_polygon(vertices_from_json(j.at("inner_vertices"))),
                            j.at("radius").get<double>());
}

nlohmann::json cheeger_report_to_json(const CheegerReport& r) {
    return {{"h", r.h},
            {"radius", r.radius},
            {"cheeger_regular", r.cheeger_regular},
            {"method", r.method},
            {"residual", opt_to_json(r.residual)},
            {"cross_error", opt_to_json(r.cross_error)}};
}

nlohmann::json stability_record_to_json(const StabilityRecord& r) {
    return {{"id", r.id},
            {"n", r.n},
            {"deficit", r.deficit},
            {"hd_aligned", r.hd_aligned},
            {"l1_aligned", r.l1_aligned},
            {"diameter", r.diameter},
            {"ratio_hd", opt_to_json(r.ratio_hd)},
            {"ratio_l1", opt_to_json(r.ratio_l1)},
            {"cheeger_regular", r.cheeger_regular}};
}

nlohmann::json ensemble_report_to_json(const EnsembleReport& r) {
    return {{"n", r.n},
            {"samples", r.samples},
            {"seed", r.seed},
            {"with_alignment", r.with_alignment},
            {"deficit", {{"min", r.deficit_min}, {"max", r.deficit_max}, {"mean", r.deficit_mean}}},
            {"cheeger_regular_count", r.cheeger_regular_count},
            {"degenerate_count", r.degenerate_count},
            {"violations",
             {{"cheeger_inequality", r.violations_cheeger_inequality},
              {"bucur_fragala", r.violations_bucur_fragala},
              {"isoperimetric", r.violations_isoperimetric},
              {"bound_chain_1", r.violations_bound_chain_1},
              {"bound_chain_2", r.violations_bound_chain_2},
              {"cross_check", r.violations_cross_check}}},
            {"max_ratio_hd_deficit", opt_to_json(r.max_ratio_hd_deficit)},
            {"max_ratio_hd_isoper", opt_to_json(r.max_ratio_hd_isoper)}};
}

nlohmann::json align_result_to_json(const AlignResult& r) {
    return {{"angle", r.motion.angle},
            {"translation", {r.motion.translation.x, r.motion.translation.y}},
            {"reflect", r.motion.reflect},
            {"distance", r.distance}};
}

nlohmann::json certified_distance_to_json(const CertifiedDistance& d) {
    return {{"estimate", d.estimate}, {"error_bound", d.error_bound}};
}

Polygon load_polygon(const std::string& path) {
    return polygon_from_json(load_json(path));
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GeometryError("cannot open " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

void save_json(const nlohmann::json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw GeometryError("cannot write " + path);
    out << j.dump(2) << '\n';
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {
std::string cell(const std::optional<double>& o) { return o ? format_double(*o) : "degenerate"; }
}  // namespace

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& os) {
    os << "eps,deficit,hd,l1,ratio_hd,ratio_l1,order_estimate\n";
    for (const SweepRow& r : rows) {
        os << format_double(r.eps) << ',' << format_double(r.record.deficit) << ','
           << format_double(r.record.hd_aligned) << ',' << format_double(r.record.l1_aligned)
           << ',' << cell(r.record.ratio_hd) << ',' << cell(r.record.ratio_l1) << ','
           << cell(r.order_estimate) << '\n';
    }
}

void write_tentacle_csv(const std::vector<TentacleRow>& rows, std::ostream& os) {
    os << "k,raw_area,scaled_bound,hd\n";
    for (const TentacleRow& r : rows) {
        os << format_double(r.k) << ',' << format_double(r.raw_area) << ','
           << format_double(r.scaled_bound) << ',' << format_double(r.hd_aligned) << '\n';
    }
}

}  // namespace cheegerlab
