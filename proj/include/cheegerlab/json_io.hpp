#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "cheegerlab/alignment.hpp"
#include "cheegerlab/cheeger.hpp"
#include "cheegerlab/lab.hpp"
#include "cheegerlab/metrics.hpp"
#include "cheegerlab/offsetting.hpp"

namespace cheegerlab {

// Wire formats.  Polygons: {"vertices": [[x, y], ...]}.  Arc polygons:
// {"radius": R, "inner_vertices": [[x, y], ...]}.  Parsing re-validates.

nlohmann::json polygon_to_json(const Polygon& p);
Polygon polygon_from_json(const nlohmann::json& j);

nlohmann::json arc_polygon_to_json(const ArcPolygon& a);
ArcPolygon arc_polygon_from_json(const nlohmann::json& j);

nlohmann::json cheeger_report_to_json(const CheegerReport& r);
nlohmann::json stability_record_to_json(const StabilityRecord& r);
nlohmann::json ensemble_report_to_json(const EnsembleReport& r);
nlohmann::json align_result_to_json(const AlignResult& r);
nlohmann::json certified_distance_to_json(const CertifiedDistance& d);

Polygon load_polygon(const std::string& path);
void save_json(const nlohmann::json& j, const std::string& path);
nlohmann::json load_json(const std::string& path);

/// 17 significant digits, enough to reproduce any double exactly.
std::string format_double(double x);

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& os);
void write_tentacle_csv(const std::vector<TentacleRow>& rows, std::ostream& os);

}  // namespace cheegerlab
