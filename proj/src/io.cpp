#include "fdstab/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

namespace fdstab::io {

namespace {

Rational rational_field(const json& j, const char* what) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number()) return Rational::from_double(j.get<double>());
  throw std::invalid_argument(std::string("scheme JSON: '") + what +
                              "' must be a number or a \"num/den\" string");
}

}  // namespace

Scheme scheme_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("scheme JSON: expected an object");
  for (const char* key : {"r", "p", "coefficients"})
    if (!j.contains(key)) throw std::invalid_argument(std::string("scheme JSON: missing '") + key + "'");
  const int r = j.at("r").get<int>();
  const int p = j.at("p").get<int>();
  const auto& cj = j.at("coefficients");
  if (!cj.is_array()) throw std::invalid_argument("scheme JSON: 'coefficients' must be an array");
  std::vector<Rational> coeffs;
  for (const auto& c : cj) coeffs.push_back(rational_field(c, "coefficients"));
  const Rational lambda = j.contains("lambda") ? rational_field(j.at("lambda"), "lambda") : Rational(1);
  const Rational a = j.contains("a") ? rational_field(j.at("a"), "a") : Rational(1);
  const std::string name = j.value("name", std::string("custom"));
  return Scheme(name, r, p, std::move(coeffs), lambda, a);
}

json scheme_to_json(const Scheme& s) {
  json coeffs = json::array();
  for (const auto& c : s.exact_coefficients()) coeffs.push_back(c.str());
  return json{{"name", s.name()},
              {"r", s.r()},
              {"p", s.p()},
              {"lambda", s.exact_lambda().str()},
              {"a", s.exact_velocity().str()},
              {"coefficients", coeffs}};
}

Scheme load_scheme(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open scheme file " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("scheme file " + path.string() + ": " + e.what());
  }
  return scheme_from_json(j);
}

void write_binary_atomic(const std::filesystem::path& path, const void* data, std::size_t bytes) {
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(static_cast<const char*>(data), static_cast<std::streamsize>(bytes));
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

void write_text_atomic(const std::filesystem::path& path, const std::string& text) {
  write_binary_atomic(path, text.data(), text.size());
}

void export_matrix_binary(const IterationMatrix& A, const std::filesystem::path& path) {
  const auto n = static_cast<std::size_t>(A.n());
  write_binary_atomic(path, A.entries.data(), n * n * sizeof(double));
  json side{{"n", n}, {"scheme", A.scheme_name}, {"k", A.k}, {"J", A.J},
            {"layout", "column-major"}, {"dtype", "float64"}};
  auto sidecar = path;
  sidecar += ".json";
  write_text_atomic(sidecar, side.dump(2) + "\n");
}

IterationMatrix import_matrix_binary(const std::filesystem::path& path) {
  auto sidecar = path;
  sidecar += ".json";
  std::ifstream sj(sidecar);
  if (!sj) throw std::invalid_argument("missing sidecar " + sidecar.string());
  json side;
  sj >> side;
  IterationMatrix A;
  const auto n = side.at("n").get<Eigen::Index>();
  A.scheme_name = side.at("scheme").get<std::string>();
  A.k = side.at("k").get<int>();
  A.J = side.at("J").get<int>();
  A.entries.resize(n, n);
  std::ifstream in(path, std::ios::binary);
  in.read(reinterpret_cast<char*>(A.entries.data()),
          static_cast<std::streamsize>(n * n * static_cast<Eigen::Index>(sizeof(double))));
  if (!in) throw std::invalid_argument("truncated matrix file " + path.string());
  return A;
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string matrix_csv(const IterationMatrix& A) {
  if (A.n() > 64) throw std::invalid_argument("matrix_csv: only for n <= 64");
  std::string out;
  for (Eigen::Index i = 0; i < A.n(); ++i) {
    for (Eigen::Index j = 0; j < A.n(); ++j) {
      if (j) out += ',';
      out += format_double(A.entries(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string spectrum_csv(const std::vector<std::complex<double>>& eigenvalues) {
  std::string out = "re,im\n";
  for (const auto& z : eigenvalues) out += format_double(z.real()) + "," + format_double(z.imag()) + "\n";
  return out;
}

json spectral_report_json(const SpectralReport& rep) {
  json lead = json::array();
  for (const auto& z : rep.leading_eigenvalues) lead.push_back({{"re", z.real()}, {"im", z.imag()}});
  return json{{"rho", rep.rho},
              {"method", to_string(rep.method)},
              {"residual", rep.residual},
              {"iterations", rep.iterations},
              {"leading_eigenvalues", lead}};
}

std::string record_csv(const SimulationRecord& rec) {
  std::string out = "n,t,l2norm,ln_l2norm\n";
  out.reserve(rec.l2_norms.size() * 64);
  for (std::size_t n = 0; n < rec.l2_norms.size(); ++n) {
    out += std::to_string(n);
    out += ',';
    out += format_double(rec.time(n));
    out += ',';
    out += format_double(rec.l2_norms[n]);
    out += ',';
    if (auto ln = rec.ln_l2_norm(n)) out += format_double(*ln);
    out += '\n';
  }
  return out;
}

std::string snapshots_csv(const SimulationRecord& rec) {
  std::string out = "n,j,u\n";
  for (const auto& [n, state] : rec.snapshots) {
    for (std::size_t j = 0; j < state.size(); ++j) {
      out += std::to_string(n) + "," + std::to_string(j) + "," + format_double(state[j]) + "\n";
    }
  }
  return out;
}

}  // namespace fdstab::io
