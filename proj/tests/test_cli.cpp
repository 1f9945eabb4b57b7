#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(OPERLAB_BIN) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int st = pclose(p);
  return {WEXITSTATUS(st), out};
}

std::string last_line(const std::string& s) {
  auto end = s.find_last_not_of('\n');
  if (end == std::string::npos) return "";
  auto start = s.find_last_of('\n', end);
  return s.substr(start == std::string::npos ? 0 : start + 1, end - start);
}

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = std::string("/tmp/operlab_test_") + name;
  std::ofstream f(path);
  f << text;
  return path;
}

}  // namespace

TEST_CASE("constants: E8 row and A1 kappa") {
  auto r = run("constants --type E8");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["orbits"][0]["norm_sq"] == "1/30");
  CHECK(j["dual_coxeter"] == 30);
  auto r1 = run("constants --type A1");
  auto j1 = nlohmann::json::parse(r1.out);
  CHECK(j1["kappa_ef"] == "2");
  CHECK(j1["chern_pairings"][0]["omega_h"] == "1/2");
}

TEST_CASE("constants: --all --verify reports the five reference-table mismatches") {
  auto r = run("constants --all --verify");
  CHECK(r.exit_code == 3);  // TableMismatch: the five exceptional sin entries
  int mismatches = 0;
  size_t pos = 0;
  while ((pos = r.out.find("MISMATCH", pos)) != std::string::npos) {
    ++mismatches;
    pos += 8;
  }
  CHECK(mismatches == 5);
  CHECK(r.out.find("MISMATCH G2") != std::string::npos);
  CHECK(r.out.find("MISMATCH E8") != std::string::npos);
  CHECK(r.out.find("MISMATCH F4") == std::string::npos);
}

TEST_CASE("constants: markdown table") {
  auto r = run("constants --type G2 --markdown");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("| G2 | long | 1/4 |") != std::string::npos);
}

TEST_CASE("certify: zero differential certifies, norm-1 cyclic is inconclusive,"
          " malformed input exits 4") {
  auto zero = write_temp("zero.json", R"({"degree": 3, "coefficients": [[0,0]]})");
  auto r0 = run("certify --type A2 --cyclic --alpha-file " + zero + " --grid 3");
  CHECK(r0.exit_code == 0);

  // ||alpha||(0) = 1: coefficient 2^{3/2}
  auto one = write_temp("one.json", R"({"degree": 3, "coefficients": [[2.8284271247461903,0]]})");
  auto r1 = run("certify --type A2 --cyclic --alpha-file " + one + " --grid 5");
  CHECK(r1.exit_code == 2);

  auto bad = write_temp("bad.json", "{nope");
  auto r2 = run("certify --type A2 --cyclic --alpha-file " + bad);
  CHECK(r2.exit_code == 4);
  auto missing = run("certify --type A2 --cyclic --alpha-file /nonexistent.json");
  CHECK(missing.exit_code == 4);
}

TEST_CASE("develop: Fuchsian A1 reports planarity below 1e-6") {
  auto r = run("develop --type A1 --alpha zero --grid 4 --out /tmp/operlab_surface.csv");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(last_line(r.out));
  CHECK(j["planarity_residual"].get<double>() < 1e-6);
  CHECK(j["max_involution_residual"].get<double>() < 1e-8);
  std::ifstream csv("/tmp/operlab_surface.csv");
  std::string header;
  std::getline(csv, header);
  CHECK(header == "z_re,z_im,w_re,w_im,t,residual");
}

TEST_CASE("develop: A2 emits involution residuals") {
  auto r = run("develop --type A2 --alpha 0.2+0.1i --grid 3");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(last_line(r.out));
  CHECK(j["max_involution_residual"].get<double>() < 1e-8);
}

TEST_CASE("transversality: SL3 defaults give orders 1,2") {
  auto r = run("transversality --n 3 --alpha 0.1 --basepoint 0.1+0.2i");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(last_line(r.out));
  CHECK(j["rounded"] == "1,2");
}

TEST_CASE("epcheck: A2 cyclic norm 1 gives ||II||^2 = 156 at z = 0") {
  auto r = run("epcheck --type A2 --cyclic --norm 1");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(last_line(r.out));
  CHECK(j["second_form_cyclic_sq"].get<double>() == doctest::Approx(156.0).epsilon(1e-9));
}

TEST_CASE("epcheck grid mode emits the CSV columns and a summary") {
  auto f = write_temp("grid.json", R"({"degree": 3, "coefficients": [[0.3,0.1]]})");
  auto r = run("epcheck --type A2 --alpha-file " + f + " --grid 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("z_re,z_im,regularity_margin,II_general_bound_sq,rg_bound,rlc") !=
        std::string::npos);
  auto j = nlohmann::json::parse(last_line(r.out));
  CHECK(j.contains("min_regularity_margin"));
}

TEST_CASE("develop accepts an alpha file") {
  auto f = write_temp("dev.json", R"({"degree": 2, "coefficients": [[0.1,0.0]]})");
  auto r = run("develop --type A1 --alpha-file " + f + " --grid 3");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(last_line(r.out));
  CHECK(j["max_involution_residual"].get<double>() < 1e-8);
}

TEST_CASE("constants --principal dumps exponents, r_alpha, c-tensor entries") {
  auto r = run("constants --type A2 --principal");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"c_tensor_nonzero\"") != std::string::npos);
  CHECK(r.out.find("\"r_alpha\"") != std::string::npos);
  CHECK(r.out.find("\"exact\": \"48\"") != std::string::npos);  // c_llll for A2
}

TEST_CASE("constants --algebra dumps the root system and structure constants") {
  auto r = run("constants --type B2 --algebra");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"cartan\":[[2,-1],[-2,2]]") != std::string::npos);
  CHECK(r.out.find("\"structure\":") != std::string::npos);
}

TEST_CASE("config file supplies default flags") {
  auto cfg = write_temp("cfg.ini", "threads=1\n");
  auto r = run("--config " + cfg + " constants --type A1");
  CHECK(r.exit_code == 0);
}

TEST_CASE("certify --general and --simplified run end to end") {
  auto small = write_temp("small.json", R"({"degree": 3, "coefficients": [[0.1,0.05]]})");
  auto g = run("certify --type A2 --general --alpha-file " + small + " --grid 3");
  CHECK(g.exit_code == 0);
  auto s = run("certify --type A2 --simplified --alpha-file " + small + " --grid 3");
  CHECK((s.exit_code == 0 || s.exit_code == 2));
  auto wrong = write_temp("wrong.json", R"({"degree": 7, "coefficients": [[0.1,0]]})");
  CHECK(run("certify --type A2 --alpha-file " + wrong).exit_code == 4);
}

TEST_CASE("thread cap does not change the bytes") {
  auto zero = write_temp("zero2.json", R"({"degree": 3, "coefficients": [[0.2,0.1]]})");
  auto one = run("--threads 1 certify --type A2 --cyclic --alpha-file " + zero + " --grid 4");
  auto four = run("--threads 4 certify --type A2 --cyclic --alpha-file " + zero + " --grid 4");
  CHECK(one.out == four.out);
  CHECK(one.exit_code == four.exit_code);
}

TEST_CASE("deterministic rerun: identical bytes") {
  auto a = run("constants --type F4");
  auto b = run("constants --type F4");
  CHECK(a.out == b.out);
}
