#pragma once

// Serialization of matrices, spectra, wavefunction samples, sweeps and delta
// reports. Structured documents are JSON; tables are comma-separated with a
// 17-significant-digit rendering of every double so outputs are bit-stable.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "tra/eigensolver.hpp"
#include "tra/hamiltonian.hpp"
#include "tra/reference.hpp"
#include "tra/wavefunction.hpp"

namespace tra::io {

/// "%.17g"
std::string format_double(double v);

nlohmann::ordered_json matrix_to_json(const ComplexSymmetricMatrix& m);

/// Inverse of matrix_to_json. Entries are restored bit-exactly; the
/// symmetric layout is checked.
ComplexSymmetricMatrix matrix_from_json(const nlohmann::ordered_json& doc);

nlohmann::ordered_json spectrum_to_json(const Spectrum<double>& s);

/// index,re,im,class
void write_spectrum_csv(std::ostream& out, const Spectrum<double>& s,
                        const std::vector<std::string>& comments = {});

/// x,re,im,abs preceded by a '#' header naming N, lambda, M, level and E.
void write_wavefunction_csv(std::ostream& out, const WavefunctionSamples& samples);

/// N,n_real,n_complex,ground_re,ground_im; row notes become '#' lines.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

nlohmann::ordered_json sweep_to_json(const std::vector<SweepRow>& rows);

nlohmann::ordered_json report_to_json(const DeltaReport& r);
nlohmann::ordered_json table1_to_json(const Table1Comparison& t);
nlohmann::ordered_json bundle_to_json(const ComparisonBundle& b);

/// Stable rendering: two-space indent, trailing newline.
std::string dump(const nlohmann::ordered_json& doc);

}  // namespace tra::io
