#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ctxfer/contextuality.hpp"
#include "ctxfer/hilbert.hpp"
#include "ctxfer/interferometer.hpp"
#include "ctxfer/measurement.hpp"
#include "ctxfer/states.hpp"
#include "ctxfer/weak.hpp"

namespace ctxfer::io {

using json = nlohmann::json;

inline constexpr const char* kSchema = "ctxfer/1";

// Complex numbers serialize as {"re":..., "im":...} in JSON and as paired
// _re/_im columns in CSV; doubles in CSV use 12 significant digits.
json complex_json(Cx z);
Cx complex_from_json(const json& j);
std::string fmt12(double x);

json config_json(const InterferometerConfig& config);

json network_document(const PathVectorTable& table);
std::string network_csv(const PathVectorTable& table);

json probability_document(const PathVectorTable& table,
                          const ProbabilityTable& probs,
                          const std::string& state_label);
std::string probability_csv(const ProbabilityTable& probs);

json weak_document(const PathVectorTable& table, const WeakReport& report,
                   const std::string& state_label);
std::string weak_csv(const WeakReport& report);

json kd_document(const PathVectorTable& table, const DensityMatrix& rho,
                 const std::string& state_label);
std::string kd_csv(const PathVectorTable& table, const DensityMatrix& rho);

json coherence_document(const PathVectorTable& table, PathId n, PathId o);
std::string coherence_csv(const PathVectorTable& table, PathId n, PathId o);

json check_document(const PathVectorTable& table,
                    const ContextualityReport& report,
                    const std::string& state_label);
std::string check_csv(const ContextualityReport& report);

json scan_document(const ScanResult& result);
std::string scan_csv(const ScanResult& result);

json count_document(const PathVectorTable& table, const CountRecord& record,
                    const std::string& state_label);
std::string count_csv(const CountRecord& record);

json probe_document(const PathVectorTable& table,
                    const std::vector<ProbeResult>& samples, Cx extrapolated,
                    const std::string& state_label);
std::string probe_csv(const std::vector<ProbeResult>& samples, Cx extrapolated);

// Density matrices persist as {"schema":"ctxfer/1","kind":"density",
// "matrix":[[{"re":..,"im":..} x3] x3]}.
json density_to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const json& j);

// Dispatches a state spec: "nf", a comma-separated amplitude list, or
// "@file.json" holding a density document.
DensityMatrix load_state(const std::string& spec, const PathVectorTable& table);

}  // namespace ctxfer::io
