#include "ctxfer/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ctxfer/errors.hpp"

namespace ctxfer::io {

json complex_json(Cx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

Cx complex_from_json(const json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    throw ParseError("complex value must be an object with re/im fields");
  return {j.at("re").get<double>(), j.at("im").get<double>()};
}

std::string fmt12(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

json config_json(const InterferometerConfig& c) {
  return json{{"r1", c.r1}, {"r2", c.r2}, {"rf", c.rf}, {"rs1", c.rs1},
              {"rs2", c.rs2}};
}

namespace {

json vector_json(const CVec3& v) {
  return json::array({complex_json(v[0]), complex_json(v[1]), complex_json(v[2])});
}

json context_json(const Context& ctx) {
  return json::array({path_name(ctx.members[0]), path_name(ctx.members[1]),
                      path_name(ctx.members[2])});
}

}  // namespace

json network_document(const PathVectorTable& table) {
  json paths = json::array();
  for (int k = 0; k < kPathCount; ++k) {
    const PathId id = static_cast<PathId>(k);
    paths.push_back({{"path", path_name(id)},
                     {"outer", is_outer(id)},
                     {"vector", vector_json(table.path(id))}});
  }
  json splitters = json::array();
  for (std::size_t k = 0; k < 5; ++k) {
    const BeamSplitter& bs = table.splitters[k];
    splitters.push_back({{"index", k},
                         {"input_outer", path_name(bs.in_outer)},
                         {"input_inner", path_name(bs.in_inner)},
                         {"output_u", path_name(bs.out_u)},
                         {"output_v", path_name(bs.out_v)},
                         {"reflectivity", bs.reflectivity}});
  }
  json ctxs = json::array();
  for (const Context& c : contexts()) ctxs.push_back(context_json(c));
  return json{{"schema", kSchema},
              {"kind", "network"},
              {"config", config_json(table.config)},
              {"closure_residual", closure_residual(table)},
              {"contexts", ctxs},
              {"paths", paths},
              {"splitters", splitters}};
}

std::string network_csv(const PathVectorTable& table) {
  std::ostringstream out;
  out << "path,outer,v1_re,v1_im,v2_re,v2_im,v3_re,v3_im\n";
  for (int k = 0; k < kPathCount; ++k) {
    const PathId id = static_cast<PathId>(k);
    const CVec3& v = table.path(id);
    out << path_name(id) << ',' << (is_outer(id) ? 1 : 0);
    for (int c = 0; c < 3; ++c)
      out << ',' << fmt12(v[c].real()) << ',' << fmt12(v[c].imag());
    out << '\n';
  }
  return out.str();
}

json probability_document(const PathVectorTable& table,
                          const ProbabilityTable& probs,
                          const std::string& state_label) {
  json paths = json::array();
  for (int k = 0; k < kPathCount; ++k) {
    const PathId id = static_cast<PathId>(k);
    paths.push_back({{"path", path_name(id)}, {"probability", probs.at(id)}});
  }
  return json{{"schema", kSchema},
              {"kind", "probabilities"},
              {"config", config_json(table.config)},
              {"state", state_label},
              {"paths", paths}};
}

std::string probability_csv(const ProbabilityTable& probs) {
  std::ostringstream out;
  out << "path,probability\n";
  for (int k = 0; k < kPathCount; ++k)
    out << path_name(static_cast<PathId>(k)) << ','
        << fmt12(probs.p[static_cast<std::size_t>(k)]) << '\n';
  return out.str();
}

json weak_document(const PathVectorTable& table, const WeakReport& report,
                   const std::string& state_label) {
  json outcomes = json::array();
  for (std::size_t oi = 0; oi < 3; ++oi)
    outcomes.push_back({{"outcome", path_name(kOutcomes[oi])},
                        {"probability", report.outcome_probability[oi]},
                        {"defined", report.outcome_defined[oi]}});
  json rows = json::array();
  for (int k = 0; k < kPathCount; ++k)
    for (std::size_t oi = 0; oi < 3; ++oi) {
      const WeakReport::Entry& e = report.entries[static_cast<std::size_t>(k)][oi];
      json row{{"path", path_name(static_cast<PathId>(k))},
               {"outcome", path_name(kOutcomes[oi])},
               {"kd", complex_json(e.kd)},
               {"defined", e.defined}};
      row["weak"] = e.defined ? complex_json(e.weak) : json(nullptr);
      rows.push_back(row);
    }
  json continuity = json::array();
  for (std::size_t s = 0; s < 5; ++s)
    for (std::size_t oi = 0; oi < 3; ++oi)
      if (report.outcome_defined[oi])
        continuity.push_back({{"splitter", s},
                              {"outcome", path_name(kOutcomes[oi])},
                              {"residual", complex_json(report.continuity[s][oi])}});
  return json{{"schema", kSchema},
              {"kind", "weak_report"},
              {"config", config_json(table.config)},
              {"state", state_label},
              {"outcomes", outcomes},
              {"rows", rows},
              {"continuity", continuity}};
}

std::string weak_csv(const WeakReport& report) {
  std::ostringstream out;
  out << "path,outcome,weak_re,weak_im,kd_re,kd_im,defined\n";
  for (int k = 0; k < kPathCount; ++k)
    for (std::size_t oi = 0; oi < 3; ++oi) {
      const WeakReport::Entry& e = report.entries[static_cast<std::size_t>(k)][oi];
      out << path_name(static_cast<PathId>(k)) << ','
          << path_name(kOutcomes[oi]) << ',';
      if (e.defined)
        out << fmt12(e.weak.real()) << ',' << fmt12(e.weak.imag());
      else
        out << "undefined,undefined";
      out << ',' << fmt12(e.kd.real()) << ',' << fmt12(e.kd.imag()) << ','
          << (e.defined ? 1 : 0) << '\n';
    }
  return out.str();
}

json kd_document(const PathVectorTable& table, const DensityMatrix& rho,
                 const std::string& state_label) {
  json rows = json::array();
  for (int k = 0; k < kPathCount; ++k)
    for (PathId o : kOutcomes) {
      const PathId i = static_cast<PathId>(k);
      rows.push_back({{"path", path_name(i)},
                      {"outcome", path_name(o)},
                      {"value", complex_json(kd_element(rho, table, i, o).value)}});
    }
  return json{{"schema", kSchema},
              {"kind", "kd_table"},
              {"config", config_json(table.config)},
              {"state", state_label},
              {"rows", rows}};
}

std::string kd_csv(const PathVectorTable& table, const DensityMatrix& rho) {
  std::ostringstream out;
  out << "path,outcome,value_re,value_im\n";
  for (int k = 0; k < kPathCount; ++k)
    for (PathId o : kOutcomes) {
      const Cx v = kd_element(rho, table, static_cast<PathId>(k), o).value;
      out << path_name(static_cast<PathId>(k)) << ',' << path_name(o) << ','
          << fmt12(v.real()) << ',' << fmt12(v.imag()) << '\n';
    }
  return out.str();
}

json coherence_document(const PathVectorTable& table, PathId n, PathId o) {
  json rows = json::array();
  for (int k = 0; k < kPathCount; ++k) {
    const PathId i = static_cast<PathId>(k);
    rows.push_back({{"path", path_name(i)},
                    {"value",
                     complex_json(coherence_coefficient(table, i, n, o).value)}});
  }
  return json{{"schema", kSchema},
              {"kind", "coherence"},
              {"config", config_json(table.config)},
              {"n", path_name(n)},
              {"o", path_name(o)},
              {"rows", rows}};
}

std::string coherence_csv(const PathVectorTable& table, PathId n, PathId o) {
  std::ostringstream out;
  out << "path,value_re,value_im\n";
  for (int k = 0; k < kPathCount; ++k) {
    const Cx v =
        coherence_coefficient(table, static_cast<PathId>(k), n, o).value;
    out << path_name(static_cast<PathId>(k)) << ',' << fmt12(v.real()) << ','
        << fmt12(v.imag()) << '\n';
  }
  return out.str();
}

json check_document(const PathVectorTable& table,
                    const ContextualityReport& report,
                    const std::string& state_label) {
  json decomposition;
  if (report.decomposition_defined) {
    decomposition = json{{"defined", true},
                         {"terms", report.decomposition_terms},
                         {"identity_residual", report.identity_residual}};
  } else {
    decomposition = json{{"defined", false}};
  }
  return json{{"schema", kSchema},
              {"kind", "contextuality_report"},
              {"config", config_json(table.config)},
              {"state", state_label},
              {"margin", report.margin},
              {"violated", report.violated},
              {"decomposition", decomposition}};
}

std::string check_csv(const ContextualityReport& report) {
  std::ostringstream out;
  out << "margin,violated,term_1,term_2,term_3,identity_residual\n";
  out << fmt12(report.margin) << ',' << (report.violated ? 1 : 0);
  if (report.decomposition_defined) {
    for (double t : report.decomposition_terms) out << ',' << fmt12(t);
    out << ',' << fmt12(report.identity_residual);
  } else {
    out << ",undefined,undefined,undefined,undefined";
  }
  out << '\n';
  return out.str();
}

json scan_document(const ScanResult& result) {
  json cells = json::array();
  for (const ScanResult::Cell& c : result.cells)
    cells.push_back({{"r1", c.r1},
                     {"r2", c.r2},
                     {"pf_closed", c.pf_closed},
                     {"pf_propagated", c.pf_propagated},
                     {"delta", std::abs(c.pf_closed - c.pf_propagated)}});
  const ScanResult::Cell& best = result.cells[result.argmax_index];
  return json{{"schema", kSchema},
              {"kind", "scan"},
              {"cells", cells},
              {"argmax", {{"r1", best.r1}, {"r2", best.r2}}},
              {"max_pf", result.max_pf}};
}

std::string scan_csv(const ScanResult& result) {
  std::ostringstream out;
  out << "r1,r2,pf_closed,pf_propagated,delta\n";
  for (const ScanResult::Cell& c : result.cells)
    out << fmt12(c.r1) << ',' << fmt12(c.r2) << ',' << fmt12(c.pf_closed) << ','
        << fmt12(c.pf_propagated) << ','
        << fmt12(std::abs(c.pf_closed - c.pf_propagated)) << '\n';
  return out.str();
}

json count_document(const PathVectorTable& table, const CountRecord& record,
                    const std::string& state_label) {
  json counts = json::object();
  for (std::size_t k = 0; k < 3; ++k)
    counts[path_name(record.context.members[k])] = record.counts[k];
  return json{{"schema", kSchema},
              {"kind", "count_record"},
              {"config", config_json(table.config)},
              {"state", state_label},
              {"context", context_json(record.context)},
              {"shots", record.shots},
              {"seed", record.seed},
              {"counts", counts}};
}

std::string count_csv(const CountRecord& record) {
  std::ostringstream out;
  out << "path,count\n";
  for (std::size_t k = 0; k < 3; ++k)
    out << path_name(record.context.members[k]) << ',' << record.counts[k]
        << '\n';
  return out.str();
}

json probe_document(const PathVectorTable& table,
                    const std::vector<ProbeResult>& samples, Cx extrapolated,
                    const std::string& state_label) {
  json rows = json::array();
  for (const ProbeResult& r : samples)
    rows.push_back({{"epsilon", r.epsilon},
                    {"estimate", complex_json(r.estimate)},
                    {"postselection_probability", r.postselection_probability}});
  json doc{{"schema", kSchema},
           {"kind", "probe"},
           {"config", config_json(table.config)},
           {"state", state_label},
           {"samples", rows},
           {"extrapolated", complex_json(extrapolated)}};
  if (!samples.empty()) {
    doc["path"] = path_name(samples.front().path);
    doc["outcome"] = path_name(samples.front().outcome);
    doc["mode"] = samples.front().mode.sampled ? "sampled" : "exact";
    if (samples.front().mode.sampled) {
      doc["shots"] = samples.front().mode.shots;
      doc["seed"] = samples.front().mode.seed;
    }
  }
  return doc;
}

std::string probe_csv(const std::vector<ProbeResult>& samples, Cx extrapolated) {
  std::ostringstream out;
  out << "epsilon,estimate_re,estimate_im\n";
  for (const ProbeResult& r : samples)
    out << fmt12(r.epsilon) << ',' << fmt12(r.estimate.real()) << ','
        << fmt12(r.estimate.imag()) << '\n';
  out << "0," << fmt12(extrapolated.real()) << ',' << fmt12(extrapolated.imag())
      << '\n';
  return out.str();
}

json density_to_json(const DensityMatrix& rho) {
  json rows = json::array();
  for (int r = 0; r < 3; ++r) {
    json row = json::array();
    for (int c = 0; c < 3; ++c) row.push_back(complex_json(rho.rho(r, c)));
    rows.push_back(row);
  }
  return json{{"schema", kSchema}, {"kind", "density"}, {"matrix", rows}};
}

DensityMatrix density_from_json(const json& j) {
  if (!j.is_object() || !j.contains("matrix"))
    throw ParseError("density document needs a 'matrix' field");
  const json& rows = j.at("matrix");
  if (!rows.is_array() || rows.size() != 3)
    throw ParseError("density matrix must have 3 rows");
  CMat3 m;
  for (int r = 0; r < 3; ++r) {
    const json& row = rows.at(static_cast<std::size_t>(r));
    if (!row.is_array() || row.size() != 3)
      throw ParseError("density matrix row must have 3 entries");
    for (int c = 0; c < 3; ++c)
      m(r, c) = complex_from_json(row.at(static_cast<std::size_t>(c)));
  }
  return DensityMatrix::checked(m);
}

DensityMatrix load_state(const std::string& spec, const PathVectorTable& table) {
  if (spec == "nf") return pure_density(make_nf(table));
  if (!spec.empty() && spec.front() == '@') {
    const std::string filename = spec.substr(1);
    std::ifstream in(filename);
    if (!in) throw ParseError("cannot open state file '" + filename + "'");
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw ParseError("bad JSON in '" + filename + "': " + e.what());
    }
    return density_from_json(j);
  }
  return parse_state_amplitudes(spec);
}

}  // namespace ctxfer::io
