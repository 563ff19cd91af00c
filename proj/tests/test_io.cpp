#include <doctest.h>

#include <sstream>

#include "tra/errors.hpp"
#include "tra/io.hpp"
#include "tra/wavefunction.hpp"

TEST_CASE("format_double round-trips") {
  for (double v : {0.1, 1.0 / 3.0, -1.8371173070873836, 1e-300, 6.02214076e23}) {
    CHECK(std::stod(tra::io::format_double(v)) == v);
  }
}

TEST_CASE("matrix document round-trips") {
  const auto h = tra::assemble(tra::BasisSpec(1.0, 4), tra::PotentialSpec(1.1));
  const auto doc = tra::io::matrix_to_json(h);
  const auto back = tra::io::matrix_from_json(nlohmann::ordered_json::parse(tra::io::dump(doc)));
  CHECK(back.entries == h.entries);
  CHECK(back.potential.N() == 1.1);
  CHECK(doc["mode"] == "corrected");
}

TEST_CASE("matrix document validation") {
  auto doc = tra::io::matrix_to_json(tra::assemble(tra::BasisSpec(1.0, 3), tra::PotentialSpec(1.0)));
  auto broken = doc;
  broken["entries"][1][0] = 99.0;
  CHECK_THROWS_AS(tra::io::matrix_from_json(broken), tra::ParameterError);
  auto short_doc = doc;
  short_doc["entries"].erase(0);
  CHECK_THROWS_AS(tra::io::matrix_from_json(short_doc), tra::ParameterError);
  auto missing = doc;
  missing.erase("lambda");
  CHECK_THROWS_AS(tra::io::matrix_from_json(missing), tra::ParameterError);
}

TEST_CASE("spectrum serializations") {
  const auto s = tra::solve_spectrum(tra::assemble(tra::BasisSpec(2.5, 3), tra::PotentialSpec(0.5)));
  const auto doc = tra::io::spectrum_to_json(s);
  CHECK(doc["values"].size() == 3);
  CHECK(doc["n_complex"] == 3);
  CHECK(doc["tol_real"] == 1e-8);
  std::ostringstream csv;
  tra::io::write_spectrum_csv(csv, s, {"note"});
  CHECK(csv.str().rfind("# note\nindex,re,im,class\n0,", 0) == 0);
}
