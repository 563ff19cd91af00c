#include "tra/io.hpp"

#include <cstdio>
#include <ostream>

#include "tra/errors.hpp"

namespace tra::io {
namespace {

using json = nlohmann::ordered_json;

json complex_pair(const std::complex<double>& z) { return json::array({z.real(), z.imag()}); }

json matrix_entries(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_pair(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json real_matrix(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string hex_digest(std::uint64_t h) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

const char* tag_name(EigenTag t) { return t == EigenTag::real ? "real" : "complex"; }

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json matrix_to_json(const ComplexSymmetricMatrix& m) {
  json doc;
  doc["size"] = m.size();
  doc["lambda"] = m.basis.lambda();
  doc["N"] = m.potential.N();
  doc["mode"] = to_string(m.potential.mode());
  doc["d"] = m.d;
  doc["quad_nodes"] = m.quad_nodes;
  doc["warnings"] = m.warnings;
  // row-major [re, im] pairs
  json entries = json::array();
  for (Eigen::Index i = 0; i < m.entries.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.entries.cols(); ++j) {
      entries.push_back(complex_pair(m.entries(i, j)));
    }
  }
  doc["entries"] = std::move(entries);
  return doc;
}

ComplexSymmetricMatrix matrix_from_json(const json& doc) {
  try {
    const int size = doc.at("size").get<int>();
    const BasisSpec basis(doc.at("lambda").get<double>(), size);
    const PotentialSpec pot(doc.at("N").get<double>(), parse_mode(doc.at("mode").get<std::string>()));
    const auto& entries = doc.at("entries");
    if (entries.size() != static_cast<std::size_t>(size) * size) {
      throw ParameterError("matrix document: expected size*size entries");
    }
    ComplexSymmetricMatrix m{Eigen::MatrixXcd(size, size), basis, pot, basis.d(),
                             doc.value("quad_nodes", 0),
                             doc.value("warnings", std::vector<std::string>{})};
    for (int i = 0; i < size; ++i) {
      for (int j = 0; j < size; ++j) {
        const auto& z = entries.at(static_cast<std::size_t>(i) * size + j);
        m.entries(i, j) = {z.at(0).get<double>(), z.at(1).get<double>()};
      }
    }
    if (!(m.entries - m.entries.transpose()).isZero(0.0)) {
      throw ParameterError("matrix document: entries are not symmetric");
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("matrix document: ") + e.what());
  }
}

json spectrum_to_json(const Spectrum<double>& s) {
  json doc;
  json values = json::array();
  for (Eigen::Index i = 0; i < s.values.size(); ++i) values.push_back(complex_pair(s.values(i)));
  doc["values"] = std::move(values);
  doc["residual"] = s.residual;
  const auto summary = classify(s, s.tol_real);
  doc["n_real"] = summary.n_real;
  doc["n_complex"] = summary.n_complex;
  doc["tol_real"] = s.tol_real;
  json tags = json::array();
  for (auto t : tag_eigenvalues<double>(s.values, s.tol_real)) tags.push_back(tag_name(t));
  doc["classification"] = std::move(tags);
  return doc;
}

void write_spectrum_csv(std::ostream& out, const Spectrum<double>& s,
                        const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << "index,re,im,class\n";
  const auto tags = tag_eigenvalues<double>(s.values, s.tol_real);
  for (Eigen::Index i = 0; i < s.values.size(); ++i) {
    out << i << ',' << format_double(s.values(i).real()) << ','
        << format_double(s.values(i).imag()) << ',' << tag_name(tags[i]) << '\n';
  }
}

void write_wavefunction_csv(std::ostream& out, const WavefunctionSamples& samples) {
  const auto& m = samples.meta;
  out << "# N=" << format_double(m.N) << " lambda=" << format_double(m.lambda) << " M=" << m.size
      << " level=" << m.level << " E=" << format_double(m.energy.real()) << ','
      << format_double(m.energy.imag()) << '\n';
  out << "# normalization: " << m.normalization << '\n';
  out << "x,re,im,abs\n";
  for (std::size_t j = 0; j < samples.x.size(); ++j) {
    const auto& p = samples.psi[j];
    out << format_double(samples.x[j]) << ',' << format_double(p.real()) << ','
        << format_double(p.imag()) << ',' << format_double(std::abs(p)) << '\n';
  }
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  for (const auto& r : rows) {
    if (!r.note.empty()) out << "# N=" << format_double(r.N) << ": " << r.note << '\n';
  }
  out << "N,n_real,n_complex,ground_re,ground_im\n";
  for (const auto& r : rows) {
    out << format_double(r.N) << ',';
    if (r.ok) {
      out << r.n_real << ',' << r.n_complex << ',' << format_double(r.ground_re) << ','
          << format_double(r.ground_im);
    } else {
      out << ",,,";
    }
    out << '\n';
  }
}

json sweep_to_json(const std::vector<SweepRow>& rows) {
  json doc = json::array();
  for (const auto& r : rows) {
    json row;
    row["N"] = r.N;
    row["ok"] = r.ok;
    if (r.ok) {
      row["n_real"] = r.n_real;
      row["n_complex"] = r.n_complex;
      row["ground"] = json::array({r.ground_re, r.ground_im});
    }
    row["note"] = r.note;
    doc.push_back(std::move(row));
  }
  return doc;
}

json report_to_json(const DeltaReport& r) {
  json doc;
  doc["label"] = r.label;
  json params;
  for (const auto& [k, v] : r.parameters) params[k] = v;
  doc["parameters"] = std::move(params);
  doc["max_abs_delta"] = r.max_abs_delta;
  doc["frobenius_delta"] = r.frobenius_delta;
  doc["ours"] = matrix_entries(r.ours);
  doc["reference"] = matrix_entries(r.reference);
  doc["abs_delta"] = real_matrix(r.abs_delta);
  doc["rel_delta"] = real_matrix(r.rel_delta);
  doc["notes"] = r.notes;
  return doc;
}

json table1_to_json(const Table1Comparison& t) {
  json doc;
  doc["mode"] = to_string(t.mode);
  json lowest = json::array();
  for (Eigen::Index i = 0; i < t.lowest.size(); ++i) lowest.push_back(complex_pair(t.lowest(i)));
  doc["lowest"] = std::move(lowest);
  doc["vs_our_case"] = report_to_json(t.vs_our_case);
  doc["vs_reference1"] = report_to_json(t.vs_reference1);
  return doc;
}

json bundle_to_json(const ComparisonBundle& b) {
  json doc;
  doc["dataset_digest"] = hex_digest(b.dataset_digest);
  json matrices = json::array();
  for (const auto& m : b.matrices) matrices.push_back(report_to_json(m));
  doc["matrices"] = std::move(matrices);
  json tables = json::array();
  for (const auto& t : b.tables) tables.push_back(table1_to_json(t));
  doc["eigenvalue_table"] = std::move(tables);
  doc["notes"] = b.notes;
  return doc;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace tra::io
