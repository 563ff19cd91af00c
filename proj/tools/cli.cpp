#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "tra/errors.hpp"
#include "tra/io.hpp"
#include "tra/reference.hpp"
#include "tra/selftest.hpp"
#include "tra/wavefunction.hpp"

namespace tra::cli {
namespace {

using json = nlohmann::ordered_json;

const std::vector<double> kDefaultSweep = {0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0};

bool near_integer(double x) { return std::abs(x - std::round(x)) < 1e-9; }

/// Writes `content` to --output, to $TRA_OUTPUT_DIR/<stem>.<ext>, or to `out`.
void emit(const RunConfig& cfg, const std::string& stem, const std::string& ext,
          const std::string& content, std::ostream& out, std::ostream& err) {
  std::filesystem::path target;
  if (!cfg.output.empty() && cfg.output != "-") {
    target = cfg.output;
  } else if (cfg.output.empty()) {
    if (const char* dir = std::getenv("TRA_OUTPUT_DIR"); dir && *dir) {
      target = std::filesystem::path(dir) / (stem + "." + ext);
    }
  }
  if (target.empty()) {
    out << content;
    return;
  }
  std::ofstream file(target, std::ios::binary | std::ios::trunc);
  if (!file) throw ParameterError("cannot open output file '" + target.string() + "'");
  file << content;
  if (!file) throw ParameterError("failed writing '" + target.string() + "'");
  err << "wrote " << target.string() << '\n';
}

OutputFormat format_or(const RunConfig& cfg, OutputFormat fallback) {
  return cfg.format.value_or(fallback);
}

void require_json(const RunConfig& cfg, const char* command) {
  if (cfg.format && *cfg.format != OutputFormat::json) {
    throw ParameterError(std::string(command) + " only writes structured text (--format json)");
  }
}

json parameters_json(const RunConfig& cfg) {
  json p;
  p["N"] = cfg.N;
  p["lambda"] = cfg.lambda;
  p["size"] = cfg.size;
  p["mode"] = to_string(cfg.mode);
  return p;
}

ComplexSymmetricMatrix build_matrix(const RunConfig& cfg) {
  AssemblyOptions options;
  options.quad_nodes = cfg.quad_nodes;
  return assemble(BasisSpec(cfg.lambda, cfg.size), PotentialSpec(cfg.N, cfg.mode), options);
}

void report_warnings(const ComplexSymmetricMatrix& h, std::ostream& err) {
  for (const auto& w : h.warnings) err << "warning: " << w << '\n';
}

int cmd_assemble(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_json(cfg, "assemble");
  const auto h = build_matrix(cfg);
  report_warnings(h, err);
  emit(cfg, "matrix", "json", io::dump(io::matrix_to_json(h)), out, err);
  return kExitOk;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto h = build_matrix(cfg);
  report_warnings(h, err);
  const auto spectrum = solve_spectrum(h, true, cfg.tol_real);

  const auto& ref = reference_dataset();
  const bool table_params = std::abs(cfg.lambda - ref.table1_lambda) < 1e-12 &&
                            cfg.size == ref.table1_size && cfg.N == ref.table1_N;
  std::string compare_note;
  if (cfg.compare && !table_params) {
    compare_note = "published eigenvalue table uses lambda=2.9, N=2, size 5; parameters differ";
    err << "warning: " << compare_note << '\n';
  }

  if (format_or(cfg, OutputFormat::csv) == OutputFormat::json) {
    json doc;
    doc["parameters"] = parameters_json(cfg);
    doc["warnings"] = h.warnings;
    doc["spectrum"] = io::spectrum_to_json(spectrum);
    if (cfg.compare) {
      json table = json::array();
      for (const auto& row : ref.table1) {
        table.push_back({{"n", row.n}, {"our_case", row.our_case}, {"reference1", row.reference1}});
      }
      doc["published_table"] = std::move(table);
      if (!compare_note.empty()) doc["compare_note"] = compare_note;
    }
    emit(cfg, "spectrum", "json", io::dump(doc), out, err);
    return kExitOk;
  }

  std::ostringstream csv;
  std::vector<std::string> comments = h.warnings;
  if (!compare_note.empty()) comments.push_back(compare_note);
  if (!cfg.compare) {
    io::write_spectrum_csv(csv, spectrum, comments);
  } else {
    for (const auto& c : comments) csv << "# " << c << '\n';
    csv << "index,re,im,class,published_our_case,published_reference1\n";
    const auto tags = tag_eigenvalues<double>(spectrum.values, spectrum.tol_real);
    for (Eigen::Index i = 0; i < spectrum.size(); ++i) {
      csv << i << ',' << io::format_double(spectrum.values(i).real()) << ','
          << io::format_double(spectrum.values(i).imag()) << ','
          << (tags[i] == EigenTag::real ? "real" : "complex") << ',';
      if (i < static_cast<Eigen::Index>(ref.table1.size())) {
        csv << io::format_double(ref.table1[i].our_case) << ','
            << io::format_double(ref.table1[i].reference1);
      } else {
        csv << ',';
      }
      csv << '\n';
    }
  }
  emit(cfg, "spectrum", "csv", csv.str(), out, err);
  return kExitOk;
}

int cmd_wavefunction(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto h = build_matrix(cfg);
  report_warnings(h, err);
  const auto spectrum = solve_spectrum(h, true, cfg.tol_real);
  WavefunctionMeta meta;
  meta.N = cfg.N;
  meta.level = cfg.level;
  meta.energy = spectrum.values(cfg.level);
  const auto samples = reconstruct(expansion_coefficients(spectrum, cfg.level), h.basis,
                                   default_grid(cfg.lambda, cfg.points, cfg.x_max), meta);

  if (format_or(cfg, OutputFormat::csv) == OutputFormat::json) {
    json doc;
    doc["parameters"] = parameters_json(cfg);
    doc["level"] = cfg.level;
    doc["energy"] = json::array({meta.energy.real(), meta.energy.imag()});
    doc["normalization"] = samples.meta.normalization;
    doc["warnings"] = h.warnings;
    json x = json::array();
    json psi = json::array();
    for (std::size_t j = 0; j < samples.x.size(); ++j) {
      x.push_back(samples.x[j]);
      psi.push_back(json::array({samples.psi[j].real(), samples.psi[j].imag()}));
    }
    doc["x"] = std::move(x);
    doc["psi"] = std::move(psi);
    emit(cfg, "wavefunction", "json", io::dump(doc), out, err);
    return kExitOk;
  }
  std::ostringstream csv;
  for (const auto& w : h.warnings) csv << "# warning: " << w << '\n';
  io::write_wavefunction_csv(csv, samples);
  emit(cfg, "wavefunction", "csv", csv.str(), out, err);
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto& exponents = cfg.exponents.empty() ? kDefaultSweep : cfg.exponents;
  const auto rows = sweep_reality(exponents, BasisSpec(cfg.lambda, cfg.size), cfg.mode, cfg.tol_real);
  for (const auto& r : rows) {
    if (r.note.rfind("failed", 0) == 0) err << "warning: N=" << r.N << ": " << r.note << '\n';
  }
  if (format_or(cfg, OutputFormat::csv) == OutputFormat::json) {
    json doc;
    json params;
    params["lambda"] = cfg.lambda;
    params["size"] = cfg.size;
    params["mode"] = to_string(cfg.mode);
    params["tol_real"] = cfg.tol_real;
    doc["parameters"] = std::move(params);
    doc["rows"] = io::sweep_to_json(rows);
    emit(cfg, "sweep", "json", io::dump(doc), out, err);
    return kExitOk;
  }
  std::ostringstream csv;
  io::write_sweep_csv(csv, rows);
  emit(cfg, "sweep", "csv", csv.str(), out, err);
  return kExitOk;
}

int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_json(cfg, "compare");
  emit(cfg, "compare", "json", io::dump(io::bundle_to_json(compare_all())), out, err);
  return kExitOk;
}

int cmd_selftest(std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const auto suites = selftest::run_all();
  bool ok = true;
  for (const auto& s : suites) {
    char line[160];
    std::snprintf(line, sizeof line, "%-22s %s  %5d checks  %.3f s\n", s.name.c_str(),
                  s.passed() ? "PASS" : "FAIL", s.checks, s.seconds);
    out << line;
    for (const auto& f : s.failures) out << "    failed: " << f << '\n';
    ok = ok && s.passed();
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out << (ok ? "selftest passed" : "selftest FAILED") << " in " << total << " s\n";
  return ok ? kExitOk : kExitSelftestFailed;
}

}  // namespace

void RunConfig::validate() const {
  if (!(N > 0.0) || !std::isfinite(N)) throw ParameterError("--bigN must be a positive number");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw ParameterError("--lambda must be positive");
  if (size < 1 || size > 128) throw ParameterError("--size must lie in [1, 128]");
  if (mode == ExpansionMode::paper_faithful && !near_integer(N)) {
    throw ModeError("--mode paper requires an integer --bigN");
  }
  if (quad_nodes && *quad_nodes < 1) throw ParameterError("--quad-nodes must be positive");
  if (!(tol_real > 0.0)) throw ParameterError("--tol-real must be positive");
  if (!(x_max >= 0.0) || !std::isfinite(x_max)) throw ParameterError("--x-max must be non-negative");
  if (points < 2) throw ParameterError("--points must be at least 2");
  if (level < 0 || level >= size) {
    throw ParameterError("--level " + std::to_string(level) + " is outside [0, " +
                         std::to_string(size - 1) + "]");
  }
  for (double e : exponents) {
    if (!(e > 0.0) || !std::isfinite(e)) throw ParameterError("sweep exponents must be positive");
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Oscillator-basis spectra of H = p^2 + x^2 - (ix)^{2N}"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string mode_text = "corrected";
  std::string format_text;

  auto add_model = [&](CLI::App* sub) {
    sub->add_option("--bigN", cfg.N, "potential exponent N (> 0)");
    sub->add_option("--lambda", cfg.lambda, "basis scale lambda (> 0)");
    sub->add_option("--size", cfg.size, "basis truncation M");
    sub->add_option("--mode", mode_text, "expansion mode: corrected | paper");
    sub->add_option("--quad-nodes", cfg.quad_nodes, "quadrature node override");
    sub->add_option("--tol-real", cfg.tol_real, "relative tolerance for tagging an eigenvalue real");
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", cfg.output, "output file ('-' for stdout)");
    sub->add_option("--format", format_text, "csv | json");
  };

  auto* assemble_cmd = app.add_subcommand("assemble", "write the Hamiltonian matrix");
  add_model(assemble_cmd);
  add_output(assemble_cmd);

  auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues with real/complex tags");
  add_model(spectrum_cmd);
  add_output(spectrum_cmd);
  spectrum_cmd->add_flag("--compare", cfg.compare, "print the published eigenvalue table alongside");

  auto* wave_cmd = app.add_subcommand("wavefunction", "sample one eigenstate on a grid");
  add_model(wave_cmd);
  add_output(wave_cmd);
  wave_cmd->add_option("--level", cfg.level, "eigenvalue index in spectral order");
  wave_cmd->add_option("--x-max", cfg.x_max, "grid half-width (default max(4, 6/lambda))");
  wave_cmd->add_option("--points", cfg.points, "grid points");

  auto* sweep_cmd = app.add_subcommand("sweep", "reality of the spectrum across exponents");
  add_model(sweep_cmd);
  add_output(sweep_cmd);
  sweep_cmd->add_option("--Ns", cfg.exponents, "comma-separated exponents")->delimiter(',');

  auto* compare_cmd = app.add_subcommand("compare", "delta reports against the published values");
  add_output(compare_cmd);

  auto* selftest_cmd = app.add_subcommand("selftest", "run every module invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitConfig;
  }

  try {
    cfg.mode = parse_mode(mode_text);
    if (format_text == "csv") {
      cfg.format = OutputFormat::csv;
    } else if (format_text == "json") {
      cfg.format = OutputFormat::json;
    } else if (!format_text.empty()) {
      throw ParameterError("--format must be csv or json");
    }
    cfg.validate();

    if (selftest_cmd->parsed()) return cmd_selftest(out);
    if (assemble_cmd->parsed()) return cmd_assemble(cfg, out, err);
    if (spectrum_cmd->parsed()) return cmd_spectrum(cfg, out, err);
    if (wave_cmd->parsed()) return cmd_wavefunction(cfg, out, err);
    if (sweep_cmd->parsed()) return cmd_sweep(cfg, out, err);
    if (compare_cmd->parsed()) return cmd_compare(cfg, out, err);
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ModeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const NumericError& e) {
    err << "error: " << e.what() << " after " << e.iterations() << " iterations\n";
    return kExitNumeric;
  } catch (const DegenerateRecursionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitConfig;
}

}  // namespace tra::cli
