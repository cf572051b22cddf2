#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "fdstab/operator.hpp"
#include "fdstab/simulate.hpp"
#include "fdstab/spectral.hpp"
#include "fdstab/stencil.hpp"

namespace fdstab::io {

using nlohmann::json;

/// {"name", "r", "p", "lambda", "a", "coefficients": ["num/den", ...]};
/// lambda/a/coefficients accept "num/den" strings or JSON numbers.
Scheme scheme_from_json(const json& j);
json scheme_to_json(const Scheme& s);
Scheme load_scheme(const std::filesystem::path& path);

/// Writes via a temporary sibling and renames it into place.
void write_text_atomic(const std::filesystem::path& path, const std::string& text);
void write_binary_atomic(const std::filesystem::path& path, const void* data, std::size_t bytes);

/// Column-major float64 payload at `path`, JSON sidecar at path + ".json".
void export_matrix_binary(const IterationMatrix& A, const std::filesystem::path& path);
IterationMatrix import_matrix_binary(const std::filesystem::path& path);
/// Plain CSV, one row per matrix row; n <= 64 only.
std::string matrix_csv(const IterationMatrix& A);

/// "re,im" per eigenvalue.
std::string spectrum_csv(const std::vector<std::complex<double>>& eigenvalues);
json spectral_report_json(const SpectralReport& rep);

/// Header n,t,l2norm,ln_l2norm; ln column empty when the norm is zero.
std::string record_csv(const SimulationRecord& rec);
/// Long format n,j,u.
std::string snapshots_csv(const SimulationRecord& rec);

std::string format_double(double v);

}  // namespace fdstab::io
