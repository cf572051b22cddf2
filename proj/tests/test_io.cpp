#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "fdstab/builtins.hpp"
#include "fdstab/io.hpp"
#include "fdstab/reproduce.hpp"

using namespace fdstab;
namespace fs = std::filesystem;

namespace {
fs::path temp_dir() {
  const auto p = fs::temp_directory_path() / ("fdstab_io_" + std::to_string(::getpid()));
  fs::create_directories(p);
  return p;
}
}  // namespace

TEST_CASE("scheme json round trip keeps exact coefficients") {
  for (const char* name : {"coeff1", "coeff2", "lax-wendroff", "identity"}) {
    const Scheme s = builtin(name);
    const Scheme t = io::scheme_from_json(io::scheme_to_json(s));
    CHECK(t.name() == s.name());
    CHECK(t.r() == s.r());
    CHECK(t.p() == s.p());
    for (int l = -s.r(); l <= s.p(); ++l) CHECK(t.exact_coeff(l) == s.exact_coeff(l));
    CHECK(t.exact_lambda() == s.exact_lambda());
  }
}

TEST_CASE("scheme json parsing") {
  const auto j = io::json::parse(R"({"r": 1, "p": 0, "coefficients": ["1/2", "0.5"]})");
  const Scheme s = io::scheme_from_json(j);
  CHECK(s.name() == "custom");
  CHECK(s.lambda() == 1.0);
  CHECK(s.exact_coeff(0) == Rational(1, 2));
  CHECK_THROWS(io::scheme_from_json(io::json::parse(R"({"r": 1, "p": 1, "coefficients": ["1"]})")));
  CHECK_THROWS(io::scheme_from_json(io::json::parse(R"({"r": 0, "p": 0, "coefficients": ["x"]})")));

  const auto dir = temp_dir();
  {
    std::ofstream(dir / "bad.json") << "{ not json";
  }
  CHECK_THROWS(io::load_scheme(dir / "bad.json"));
  CHECK_THROWS(io::load_scheme(dir / "missing.json"));
  io::write_text_atomic(dir / "good.json", io::scheme_to_json(coeff2()).dump());
  CHECK(io::load_scheme(dir / "good.json").exact_coeff(7) == Rational(8820, 964529));
  fs::remove_all(dir);
}

TEST_CASE("matrix binary round trip") {
  const auto dir = temp_dir();
  const auto A = assemble_matrix(coeff1(), 1, 30);
  io::export_matrix_binary(A, dir / "a.bin");
  CHECK(fs::file_size(dir / "a.bin") == 31 * 31 * sizeof(double));
  const auto B = io::import_matrix_binary(dir / "a.bin");
  CHECK(B.entries == A.entries);
  CHECK(B.k == 1);
  CHECK(B.J == 30);
  fs::remove_all(dir);
}

TEST_CASE("csv layouts") {
  const std::string spec = io::spectrum_csv({{1.0, 0.5}});
  CHECK(spec.rfind("re,im\n", 0) == 0);

  SimulationRecord rec;
  rec.dt = 0.5;
  rec.l2_norms = {1.0, 0.0};
  rec.snapshots = {{0, {1.0, 2.0}}};
  const std::string csv = io::record_csv(rec);
  CHECK(csv.rfind("n,t,l2norm,ln_l2norm\n", 0) == 0);
  CHECK(io::snapshots_csv(rec).rfind("n,j,u\n", 0) == 0);
  CHECK(io::format_double(0.1) == "0.1");

  const auto m = io::matrix_csv(assemble_matrix(identity_scheme(), 1, 1));
  CHECK(m == "1,0\n0,1\n");
}

TEST_CASE("reference manifest is embedded") {
  const auto& m = reference_manifest();
  CHECK(m.contains("example1"));
  CHECK(m.at("example2").at("J") == 1000);
}
