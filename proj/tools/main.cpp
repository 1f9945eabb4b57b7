#include <cstdlib>
#include <fstream>
#include <iostream>

#include <Eigen/Dense>

#include "CLI11.hpp"
#include "json.hpp"
#include "operlab/develop.hpp"
#include "operlab/json_io.hpp"

using namespace operlab;
using nlohmann::json;

namespace {

constexpr int kExitCertified = 0;
constexpr int kExitInconclusive = 2;
constexpr int kExitTableMismatch = 3;
constexpr int kExitInput = 4;
constexpr int kExitNumeric = 5;

Cx parse_complex(std::string s) {
  // accepts "0.3", "0.3+0.1i", "0.3-0.1i", "0.1i"
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  if (s.empty()) throw InputError("empty complex literal");
  try {
    if (s.back() == 'i' || s.back() == 'I') {
      s.pop_back();
      size_t split = s.find_last_of("+-");
      if (split == std::string::npos || split == 0) {
        if (s.empty() || s == "+" || s == "-") s += "1";
        return Cx(0.0, std::stod(s));
      }
      std::string re = s.substr(0, split), im = s.substr(split);
      if (im == "+" || im == "-") im += "1";
      return Cx(std::stod(re), std::stod(im));
    }
    return Cx(std::stod(s), 0.0);
  } catch (const InputError&) {
    throw;
  } catch (const std::exception&) {
    throw InputError("bad complex literal: " + s);
  }
}

std::vector<LieType> every_type() {
  std::vector<LieType> out;
  for (int n = 1; n <= 8; ++n) out.push_back({'A', n});
  for (int n = 2; n <= 8; ++n) out.push_back({'B', n});
  for (int n = 2; n <= 8; ++n) out.push_back({'C', n});
  for (int n = 3; n <= 8; ++n) out.push_back({'D', n});
  for (int n = 6; n <= 8; ++n) out.push_back({'E', n});
  out.push_back({'F', 4});
  out.push_back({'G', 2});
  return out;
}

int cmd_constants(const std::string& type_name, bool all, bool markdown, bool verify,
                  bool principal, bool algebra) {
  std::vector<LieType> types;
  if (all) {
    types = every_type();
  } else {
    types.push_back(LieType::parse(type_name));
  }
  bool mismatch = false;
  for (auto t : types) {
    auto a = build_chevalley(build_root_system(t));
    auto p = principal_triple(a);
    auto rep = constants_report(a, p);
    if (markdown) {
      std::cout << constants_markdown(rep);
    } else {
      std::cout << constants_json(rep) << "\n";
    }
    if (principal) {
      auto ctx = AlgebraContext::build(t);
      std::cout << principal_json(*ctx) << "\n";
    }
    if (algebra) std::cout << a.to_json() << "\n";
    if (verify) {
      for (const auto& rc : verify_against_table(a, p)) {
        if (rc.norm_ok && rc.sin_ok) continue;
        mismatch = true;
        std::cout << "MISMATCH " << t.name() << " [" << rc.golden.label << "]:"
                  << " norm_sq computed " << rat_str(rc.computed_norm_sq) << " vs table "
                  << rat_str(rc.golden.norm_sq) << "; sin_phi_sq computed "
                  << rat_str(rc.computed_sin_sq) << " vs table "
                  << rat_str(rc.golden.sin_phi_sq) << "\n";
      }
    }
  }
  return verify && mismatch ? kExitTableMismatch : kExitCertified;
}

int cmd_certify(const std::string& type_name, const std::string& alpha_file, bool cyclic,
                bool simplified, int grid, int levels, const std::string& out) {
  auto ctx = AlgebraContext::build(LieType::parse(type_name));
  auto alphas = align_to_levels(*ctx, load_differentials(alpha_file));
  auto rep = certify_grid(ctx, alphas, grid, cyclic, simplified, levels);
  std::string text = grid_report_json(rep);
  if (out.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream f(out);
    f << text << "\n";
  }
  return rep.aggregate_certified ? kExitCertified : kExitInconclusive;
}

int cmd_develop(const std::string& type_name, const std::string& alpha_file,
                const std::string& alpha_const, int grid, double tol,
                const std::string& out) {
  auto ctx = AlgebraContext::build(LieType::parse(type_name));
  std::vector<DiskDifferential> alphas;
  if (!alpha_file.empty()) {
    alphas = align_to_levels(*ctx, load_differentials(alpha_file));
  } else {
    for (int d : ctx->degrees) {
      DiskDifferential a;
      a.degree = d;
      a.coeff = {Cx(0, 0)};
      alphas.push_back(a);
    }
    if (alpha_const != "zero") alphas.back().coeff = {parse_complex(alpha_const)};
  }
  std::vector<Cx> pts;
  double r = 0.6;
  int n = std::max(grid, 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Cx z(-r + 2 * r * i / (n - 1), -r + 2 * r * j / (n - 1));
      if (std::abs(z) <= r) pts.push_back(z);
    }

  std::ofstream f;
  std::ostream* os = &std::cout;
  if (!out.empty()) {
    f.open(out);
    os = &f;
  }
  json summary;
  if (ctx->is_sl2()) {
    auto cf = make_connection(ctx, alphas, RepKind::fundamental);
    auto samples = ep_surface_pgl2(cf, pts, tol);
    *os << "z_re,z_im,w_re,w_im,t,residual\n";
    double max_res = 0;
    Eigen::MatrixXd M(samples.size(), 4);
    for (size_t i = 0; i < samples.size(); ++i) {
      const auto& s = samples[i];
      *os << s.z.real() << "," << s.z.imag() << "," << s.w.real() << "," << s.w.imag()
          << "," << s.t << "," << s.residual << "\n";
      max_res = std::max(max_res, s.residual);
      M(i, 0) = std::norm(s.w) + s.t * s.t;
      M(i, 1) = s.w.real();
      M(i, 2) = s.w.imag();
      M(i, 3) = 1.0;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
    summary["planarity_residual"] = svd.singularValues()(3) / svd.singularValues()(0);
    summary["max_involution_residual"] = max_res;
  } else {
    auto cf = make_connection(ctx, alphas, RepKind::adjoint);
    *os << "z_re,z_im,residual\n";
    double max_res = 0;
    for (Cx z : pts) {
      auto s = developed_involution(cf, z, tol);
      *os << z.real() << "," << z.imag() << "," << s.residual << "\n";
      max_res = std::max(max_res, s.residual);
    }
    summary["max_involution_residual"] = max_res;
  }
  summary["points"] = pts.size();
  summary["type"] = type_name;
  std::cout << summary.dump() << "\n";
  return kExitCertified;
}

int cmd_transversality(int n, const std::string& alpha_const, const std::string& basept) {
  if (n < 2 || n > 9) throw InputError("--n must be in 2..9 (SL_n)");
  auto ctx = AlgebraContext::build({'A', n - 1});
  std::vector<DiskDifferential> alphas;
  for (int d : ctx->degrees) {
    DiskDifferential a;
    a.degree = d;
    a.coeff = {Cx(0, 0)};
    alphas.push_back(a);
  }
  if (alpha_const != "zero") alphas.back().coeff = {parse_complex(alpha_const)};
  auto cf = make_connection(ctx, alphas, RepKind::fundamental);
  Cx z0 = parse_complex(basept);
  auto orders = transversality_orders(cf, z0, Cx(0.6, 0.8));
  json j;
  j["orders"] = orders;
  std::string plain;
  for (size_t i = 0; i < orders.size(); ++i)
    plain += (i ? "," : "") + std::to_string(static_cast<int>(std::lround(orders[i])));
  j["rounded"] = plain;
  std::cout << j.dump() << "\n";
  return kExitCertified;
}

int cmd_epcheck(const std::string& type_name, bool cyclic, double norm_val, double grad_val,
                const std::string& zstr, const std::string& alpha_file, int grid) {
  auto ctx = AlgebraContext::build(LieType::parse(type_name));
  Cx z = parse_complex(zstr);
  json j;
  if (!alpha_file.empty() && grid > 0) {
    auto alphas = align_to_levels(*ctx, load_differentials(alpha_file));
    double rmax = 1.0;
    for (const auto& a : alphas) rmax = std::min(rmax, a.r_max);
    double r = 0.8 * rmax;
    std::cout << "z_re,z_im,regularity_margin,II_general_bound_sq,rg_bound,rlc\n";
    double mn = 1e300, mx = -1e300;
    for (int i = 0; i < grid; ++i)
      for (int k = 0; k < grid; ++k) {
        Cx w(-r + 2 * r * i / std::max(1, grid - 1), -r + 2 * r * k / std::max(1, grid - 1));
        if (std::abs(w) > r) continue;
        auto op = OperPoint::at(ctx, alphas, w);
        double margin = immersion_check(op) ? regularity_margin(op) : -1.0;
        std::cout << w.real() << "," << w.imag() << "," << margin << ","
                  << second_form_general_bound_sq(op) << "," << rg_bound(op) << ","
                  << rlc_term(op) << "\n";
        mn = std::min(mn, margin);
        mx = std::max(mx, margin);
      }
    j["min_regularity_margin"] = mn;
    j["max_regularity_margin"] = mx;
    std::cout << j.dump() << "\n";
    return kExitCertified;
  }
  if (!cyclic) throw InputError("epcheck without --alpha-file requires --cyclic");
  std::vector<Cx> A(ctx->n_levels, Cx(0, 0)), B(ctx->n_levels, Cx(0, 0));
  A.back() = norm_val;
  B.back() = grad_val;
  auto op = OperPoint::from_normalized(ctx, z, A, B);
  j["type"] = type_name;
  j["z"] = {z.real(), z.imag()};
  j["H"] = op.H;
  j["norm"] = norm_val;
  j["second_form_cyclic_sq"] = second_form_cyclic_sq(op);
  j["second_form_general_bound_sq"] = second_form_general_bound_sq(op);
  j["rlc"] = rlc_term(op);
  j["rg_bound"] = rg_bound(op);
  j["regularity_margin"] = regularity_margin(op);
  std::cout << j.dump() << "\n";
  return kExitCertified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"operlab: Lie-theoretic constants and Anosov criteria for G-opers"};
  app.require_subcommand(1);
  int seed = 0;
  int threads = 0;
  app.add_option("--seed", seed, "seed for randomized suites (recorded in output)");
  app.add_option("--threads", threads, "cap worker threads (overrides OPERLAB_THREADS)");
  app.set_config("--config", "", "read defaults from a config file (flag = value lines)");

  auto* c_const = app.add_subcommand("constants", "emit the constants table rows");
  std::string type_name = "A2";
  bool all = false, markdown = false, verify = false;
  c_const->add_option("--type", type_name, "Lie type, e.g. A2, E8");
  c_const->add_flag("--all", all, "every classified type of rank <= 8");
  c_const->add_flag("--markdown", markdown, "markdown output (default json)");
  bool json_flag = false;
  c_const->add_flag("--json", json_flag, "json output (default)");
  c_const->add_flag("--verify", verify, "compare against the embedded reference table");
  bool principal = false;
  c_const->add_flag("--principal", principal,
                    "also dump exponents, r_alpha and the c-tensor entries");
  bool algebra = false;
  c_const->add_flag("--algebra", algebra,
                    "also dump the root system and structure-constant tables");

  auto* c_cert = app.add_subcommand("certify", "evaluate the Anosov criteria on a grid");
  std::string alpha_file, out;
  bool cyclic = false, general = false, simplified = false;
  int grid = 16, levels = 16;
  c_cert->add_option("--type", type_name)->required();
  c_cert->add_option("--alpha-file", alpha_file)->required();
  c_cert->add_flag("--cyclic", cyclic, "use the sharper cyclic criterion");
  c_cert->add_flag("--general", general, "use the general criterion (default)");
  c_cert->add_flag("--simplified", simplified, "norm-only simplified form of the general criterion");
  c_cert->add_option("--grid", grid);
  c_cert->add_option("--levels", levels, "homotopy witness levels");
  c_cert->add_option("--out", out, "write the JSON report here instead of stdout");

  auto* c_dev = app.add_subcommand("develop", "develop the EP surface / involutions");
  std::string alpha_const = "zero";
  double tol = 1e-10;
  c_dev->add_option("--type", type_name)->required();
  c_dev->add_option("--alpha-file", alpha_file);
  c_dev->add_option("--alpha", alpha_const, "constant top coefficient, or 'zero'");
  c_dev->add_option("--grid", grid);
  c_dev->add_option("--tol", tol);
  c_dev->add_option("--out", out, "CSV output path (default stdout)");

  auto* c_tr = app.add_subcommand("transversality", "vanishing orders of the minors");
  int nsl = 3;
  std::string basept = "0.1+0.2i";
  c_tr->add_option("--n", nsl, "SL_n");
  c_tr->add_option("--alpha", alpha_const, "constant top coefficient, or 'zero'");
  c_tr->add_option("--basepoint", basept);

  auto* c_ep = app.add_subcommand("epcheck", "pointwise EP-surface geometry");
  double norm_val = 1.0, grad_val = 0.0;
  std::string zstr = "0";
  c_ep->add_option("--type", type_name)->required();
  c_ep->add_flag("--cyclic", cyclic);
  c_ep->add_option("--norm", norm_val, "||alpha_top|| at z");
  c_ep->add_option("--gradnorm", grad_val, "||nabla alpha_top|| at z");
  c_ep->add_option("--z", zstr);
  c_ep->add_option("--alpha-file", alpha_file);
  c_ep->add_option("--grid", grid);

  CLI11_PARSE(app, argc, argv);
  if (threads > 0) setenv("OPERLAB_THREADS", std::to_string(threads).c_str(), 1);
  (void)seed;

  try {
    if (*c_const) return cmd_constants(type_name, all, markdown, verify, principal, algebra);
    if (*c_cert) {
      if (cyclic && general) throw InputError("--cyclic and --general are exclusive");
      return cmd_certify(type_name, alpha_file, cyclic, simplified, grid, levels, out);
    }
    if (*c_dev) return cmd_develop(type_name, alpha_file, alpha_const, grid, tol, out);
    if (*c_tr) return cmd_transversality(nsl, alpha_const, basept);
    if (*c_ep)
      return cmd_epcheck(type_name, cyclic, norm_val, grad_val, zstr, alpha_file,
                         alpha_file.empty() ? 0 : grid);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InvalidRank& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const StepUnderflow& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitCertified;
}
