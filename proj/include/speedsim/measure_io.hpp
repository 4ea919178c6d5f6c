// measure_io.hpp - JSON (measures, reports, statistics) and CSV (paths,
// curves) serialization.  Field names follow the wire schemas exactly.
#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "speedsim/converge.hpp"
#include "speedsim/measures.hpp"
#include "speedsim/paths.hpp"
#include "speedsim/simulate.hpp"

namespace speedsim {

// {"interval": {"left": number|"-inf", ...}, "pieces": [{"from","to","coeffs"[,min_degree]}],
//  "atoms": [{"at","weight"}], "left_boundary_weight": number|"inf", ...}
nlohmann::json measure_to_json(const SpeedMeasure& m);
SpeedMeasure measure_from_json(const nlohmann::json& j);

SpeedMeasure load_measure(const std::string& path);
void save_measure(const SpeedMeasure& m, const std::string& path);

nlohmann::json violations_to_json(const std::vector<Violation>& v);
nlohmann::json exit_stats_to_json(const ExitStats& s);
nlohmann::json report_to_json(const ConvergenceReport& r);

// paths.csv with header exactly "path_id,t,x"; t monotone within blocks.
void write_paths_csv(const PathEnsemble& ens, std::ostream& out);
void write_paths_csv(const PathEnsemble& ens, const std::string& path);
PathEnsemble read_paths_csv(std::istream& in);
PathEnsemble read_paths_csv_file(const std::string& path);

// curves.csv with header "n,distance,family".
void write_curves_csv(const ConvergenceReport& r, const std::string& path);

}  // namespace speedsim
