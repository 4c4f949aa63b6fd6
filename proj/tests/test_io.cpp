#include <cmath>
#include <cstdio>
#include <fstream>
#include <doctest.h>

#include "ctxfer/errors.hpp"
#include "ctxfer/io.hpp"

using namespace ctxfer;
namespace io = ctxfer::io;

namespace {

PathVectorTable canonical_table() {
  return build_network(derive_reflectivities(0.5, 0.5));
}

}  // namespace

TEST_CASE("JSON round-trips doubles bit-exactly") {
  const PathVectorTable t = canonical_table();
  const io::json doc = io::network_document(t);
  const io::json back = io::json::parse(doc.dump());

  CHECK(back.at("schema").get<std::string>() == "ctxfer/1");
  CHECK(back.at("config").at("rf").get<double>() == t.config.rf);
  CHECK(back.at("config").at("rs1").get<double>() == t.config.rs1);

  for (std::size_t k = 0; k < 10; ++k) {
    const io::json& row = back.at("paths").at(k);
    const PathId id = *parse_path(row.at("path").get<std::string>());
    for (int c = 0; c < 3; ++c) {
      const Cx z = io::complex_from_json(row.at("vector").at(static_cast<std::size_t>(c)));
      CHECK(z.real() == t.path(id)[c].real());
      CHECK(z.imag() == t.path(id)[c].imag());
    }
  }
}

TEST_CASE("csv numbers carry 12 significant digits") {
  CHECK(io::fmt12(1.0 / 3.0) == "0.333333333333");
  CHECK(io::fmt12(0.25) == "0.25");
  CHECK(io::fmt12(-1.0 / 9.0) == "-0.111111111111");
  CHECK(io::fmt12(1234567.891234567) == "1234567.89123");
}

TEST_CASE("density documents round trip and validate") {
  const DensityMatrix rho = random_density(31337);
  const io::json doc = io::density_to_json(rho);
  const DensityMatrix back = io::density_from_json(doc);
  for (std::size_t k = 0; k < 9; ++k) CHECK(back.rho.m[k] == rho.rho.m[k]);

  io::json bad = doc;
  bad["matrix"][0][0]["re"] = 0.0;  // breaks the trace
  CHECK_THROWS_AS(io::density_from_json(bad), BadTrace);

  io::json skew = doc;
  skew["matrix"][0][1]["re"] = skew["matrix"][0][1]["re"].get<double>() + 0.1;
  CHECK_THROWS_AS(io::density_from_json(skew), NotHermitian);

  CHECK_THROWS_AS(io::density_from_json(io::json{{"kind", "density"}}),
                  ParseError);
}

TEST_CASE("state loading dispatches on the spec form") {
  const PathVectorTable t = canonical_table();

  const DensityMatrix nf = io::load_state("nf", t);
  CHECK(path_probability(nf, t, PathId::D1) < 1e-12);

  const DensityMatrix one = io::load_state("1,0,0", t);
  CHECK(std::abs(one.rho(0, 0) - Cx(1.0, 0.0)) < 1e-15);

  const std::string filename = "ctxfer_test_density.json";
  {
    std::ofstream out(filename);
    out << io::density_to_json(maximally_mixed()).dump();
  }
  const DensityMatrix mixed = io::load_state("@" + filename, t);
  CHECK(std::abs(mixed.rho(1, 1) - Cx(1.0 / 3.0, 0.0)) < 1e-15);
  std::remove(filename.c_str());

  CHECK_THROWS_AS(io::load_state("@missing_file.json", t), ParseError);
  CHECK_THROWS_AS(io::load_state("1,badnumber,0", t), ParseError);
}

TEST_CASE("weak csv marks undefined postselections") {
  const PathVectorTable t = canonical_table();
  const WeakReport report = weak_report(pure_density(CVec3::basis(0)), t);
  const std::string csv = io::weak_csv(report);
  CHECK(csv.find("undefined") != std::string::npos);
  CHECK(csv.rfind("path,outcome,weak_re", 0) == 0);

  const io::json doc = io::weak_document(t, report, "1,0,0");
  bool saw_null = false;
  for (const io::json& row : doc.at("rows"))
    if (row.at("weak").is_null()) saw_null = true;
  CHECK(saw_null);
}

TEST_CASE("scan and count serializations keep their shapes") {
  const ScanResult scan = scan_violation({0.3, 0.5}, {0.4, 0.5});
  const std::string csv = io::scan_csv(scan);
  CHECK(csv.rfind("r1,r2,pf_closed,pf_propagated,delta", 0) == 0);
  std::size_t lines = 0;
  for (char c : csv) lines += c == '\n' ? 1 : 0;
  CHECK(lines == 5);  // header + 4 cells

  const io::json doc = io::scan_document(scan);
  CHECK(doc.at("cells").size() == 4);
  CHECK(doc.at("max_pf").get<double>() ==
        doctest::Approx(1.0 / 9.0).epsilon(1e-12));

  const PathVectorTable t = canonical_table();
  const CountRecord record = sample_context(
      pure_density(make_nf(t)), t, contexts()[2], 1000, 42);
  const io::json count_doc = io::count_document(t, record, "nf");
  CHECK(count_doc.at("counts").size() == 3);
  std::uint64_t total = 0;
  for (const auto& kv : count_doc.at("counts").items())
    total += kv.value().get<std::uint64_t>();
  CHECK(total == 1000);
}
