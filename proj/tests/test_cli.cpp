// End-to-end checks of the command-line surface: exit codes, file outputs,
// and determinism. The binary path arrives through CATSIM_BIN.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "catsim/fock.hpp"
#include "catsim/io.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;

std::string cli_binary() {
  const char* bin = std::getenv("CATSIM_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "CATSIM_BIN must point at the catsim binary");
  return bin;
}

int run_cli(const std::string& args) {
  const std::string cmd = cli_binary() + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

fs::path temp_dir() {
  const fs::path dir = fs::temp_directory_path() / "catsim_cli_tests";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("herald writes a report and a manifest") {
  const fs::path out = temp_dir() / "herald.json";
  const int code = run_cli(
      "herald --xi 0.43 --transmission 0.99 --alpha 1.2 --out " + out.string());
  CHECK(code == 0);

  const auto report = nlohmann::json::parse(slurp(out));
  CHECK(report["fidelity"].get<double>() == doctest::Approx(0.99).epsilon(0.005));
  CHECK(report["herald_probability"].get<double>() > 0.0);
  CHECK(report["state"]["format"] == "catsim-state-v1");
  CHECK(fs::exists(out.string() + ".manifest.json"));
  const auto manifest =
      nlohmann::json::parse(slurp(out.string() + ".manifest.json"));
  CHECK(manifest["command"] == "herald");
  CHECK(manifest["parameters"]["xi"].get<double>() == 0.43);
}

TEST_CASE("exit codes") {
  const fs::path out = temp_dir() / "codes.json";
  SUBCASE("nothing to subtract is a numeric failure") {
    CHECK(run_cli("herald --xi 0 --transmission 0.99 --alpha 1.2 --out " +
                  out.string()) == 3);
  }
  SUBCASE("invalid flag values are usage errors") {
    CHECK(run_cli("herald --xi 0.43 --transmission 1.2 --alpha 1.2 --out " +
                  out.string()) == 2);
    CHECK(run_cli("herald --xi 0.43 --transmission 0.9 --alpha 1.2") == 2);
    CHECK(run_cli("logical --xi 0.5 --transmission 0.9 --herald-a 3 --out " +
                  out.string()) == 2);
    CHECK(run_cli("nonsense") == 2);
  }
  SUBCASE("overly deep squeezing cannot be represented") {
    CHECK(run_cli("herald --xi 1.4 --transmission 0.99 --alpha 1.2 --out " +
                  out.string()) == 3);
  }
  SUBCASE("vanishing herald probability is an impossible outcome") {
    CHECK(run_cli("logical --xi 0.01 --transmission 0.1 --herald-a 4 --cutoff 30 --out " +
                  out.string()) == 4);
  }
  SUBCASE("malformed sweep ranges are usage errors") {
    CHECK(run_cli("fig2 --xi-min 0.8 --xi-max 0.2 --out " + out.string()) == 2);
    CHECK(run_cli("fig3 --xi-t-max 1.5 --out " + out.string()) == 2);
  }
}

TEST_CASE("logical extraction writes the even-photon slice") {
  const fs::path out = temp_dir() / "logical.json";
  REQUIRE(run_cli("logical --xi 0.5 --transmission 0.8 --herald-a 2 "
                  "--cutoff 40 --out " +
                  out.string()) == 0);
  const auto report = nlohmann::json::parse(slurp(out));
  CHECK(report["probability"].get<double>() > 0.0);
  const auto& amps = report["state"]["amplitudes"];
  for (size_t n = 0; n < amps.size(); ++n) {
    const double mag = std::hypot(amps[n][0].get<double>(),
                                  amps[n][1].get<double>());
    if (n != 0 && n != 4) {
      CHECK(mag <= 1e-6);
    }
  }
}

TEST_CASE("figure commands are deterministic") {
  const fs::path a = temp_dir() / "fig2_a.csv";
  const fs::path b = temp_dir() / "fig2_b.csv";
  const std::string flags =
      "fig2 --alphas 1.2 --xi-min 0.2 --xi-max 0.8 --xi-steps 25 --out ";
  REQUIRE(run_cli(flags + a.string()) == 0);
  REQUIRE(run_cli(flags + b.string()) == 0);
  const std::string contents = slurp(a);
  CHECK(contents == slurp(b));
  CHECK(contents.rfind("alpha,xi,fidelity\n", 0) == 0);
}

TEST_CASE("the default sweep reproduces the headline operating point") {
  const fs::path out = temp_dir() / "fig2_default.csv";
  REQUIRE(run_cli("fig2 --out " + out.string()) == 0);
  std::istringstream csv(slurp(out));
  std::string line;
  std::getline(csv, line);
  bool found = false;
  while (std::getline(csv, line)) {
    std::istringstream row(line);
    std::string alpha, xi, fidelity;
    std::getline(row, alpha, ',');
    std::getline(row, xi, ',');
    std::getline(row, fidelity, ',');
    if (std::abs(std::stod(alpha) - 1.2) < 1e-12 &&
        std::abs(std::stod(xi) - 0.43) < 0.005 &&
        std::abs(std::stod(fidelity) - 0.99) < 0.005) {
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("fig3 boundary column follows the closed form") {
  const fs::path out = temp_dir() / "fig3.csv";
  REQUIRE(run_cli("fig3 --xi-t-min 0 --xi-t-max 0.5 --xi-t-steps 3 "
                  "--alpha-min 1 --alpha-max 2 --alpha-steps 3 --out " +
                  out.string()) == 0);
  std::istringstream csv(slurp(out));
  std::string line;
  std::getline(csv, line);
  CHECK(line == "xi_T,alpha,fidelity");
  while (std::getline(csv, line)) {
    std::istringstream row(line);
    std::string xi_t, alpha, fidelity;
    std::getline(row, xi_t, ',');
    std::getline(row, alpha, ',');
    std::getline(row, fidelity, ',');
    if (std::stod(xi_t) == 0.0) {
      const double a2 = std::stod(alpha) * std::stod(alpha);
      CHECK(std::stod(fidelity) ==
            doctest::Approx(a2 / std::sinh(a2)).epsilon(1e-12));
    }
  }
}

TEST_CASE("wigner of a stored odd cat is negative at the origin") {
  const fs::path state = temp_dir() / "cat.json";
  catsim::io::write_text_file(
      state.string(),
      catsim::io::state_to_json(
          catsim::make_cat(catsim::Complex(0.0, 1.2), catsim::CatSign::Minus, 60)));
  const fs::path out = temp_dir() / "wigner.csv";
  REQUIRE(run_cli("wigner --state " + state.string() +
                  " --range 2 --points 21 --out " + out.string()) == 0);

  std::istringstream csv(slurp(out));
  std::string line;
  std::getline(csv, line);
  CHECK(line == "x,p,w");
  double origin_value = 1.0;
  double minimum = 1.0;
  while (std::getline(csv, line)) {
    std::istringstream row(line);
    std::string x, p, w;
    std::getline(row, x, ',');
    std::getline(row, p, ',');
    std::getline(row, w, ',');
    minimum = std::min(minimum, std::stod(w));
    if (std::stod(x) == 0.0 && std::stod(p) == 0.0) {
      origin_value = std::stod(w);
    }
  }
  CHECK(origin_value < 0.0);
  CHECK(minimum == origin_value);
}

TEST_CASE("quadrature of the stored vacuum integrates to one") {
  const fs::path state = temp_dir() / "vacuum.json";
  catsim::io::write_text_file(
      state.string(), catsim::io::state_to_json(catsim::make_vacuum(12)));
  const fs::path out = temp_dir() / "quad.csv";
  REQUIRE(run_cli("quadrature --state " + state.string() +
                  " --phi 0 --out " + out.string()) == 0);

  std::istringstream csv(slurp(out));
  std::string line;
  std::getline(csv, line);
  CHECK(line == "x,pdf");
  double integral = 0.0;
  double previous_x = 0.0;
  double dx = 0.0;
  bool first = true;
  while (std::getline(csv, line)) {
    std::istringstream row(line);
    std::string x, pdf;
    std::getline(row, x, ',');
    std::getline(row, pdf, ',');
    if (!first) dx = std::stod(x) - previous_x;
    previous_x = std::stod(x);
    integral += std::stod(pdf);
    first = false;
  }
  CHECK(integral * dx == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("noon table covers both states") {
  const fs::path out = temp_dir() / "noon.csv";
  REQUIRE(run_cli("noon --photons 2 --eta 1.0 --eta 0.8 --theta-steps 3 "
                  "--cutoff 10 --out " +
                  out.string()) == 0);
  const std::string contents = slurp(out);
  CHECK(contents.rfind("state,theta,eta,trace_distance\n", 0) == 0);
  CHECK(contents.find("noon,") != std::string::npos);
  CHECK(contents.find("ecs,") != std::string::npos);
}

TEST_CASE("selftest passes and reports each oracle") {
  const fs::path out = temp_dir() / "selftest.txt";
  CHECK(run_cli("selftest --out " + out.string()) == 0);
  const std::string contents = slurp(out);
  CHECK(contents.find("PASS herald-identity") != std::string::npos);
  CHECK(contents.find("PASS closed-form-fidelity") != std::string::npos);
  CHECK(contents.find("PASS entangled-coefficients") != std::string::npos);
  CHECK(contents.find("FAIL") == std::string::npos);
}
