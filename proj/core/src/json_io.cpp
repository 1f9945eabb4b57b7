#include "operlab/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "operlab/context.hpp"

namespace operlab {

using nlohmann::json;

namespace {

DiskDifferential diff_from_json(const json& j) {
  DiskDifferential d;
  if (!j.contains("degree") || !j.contains("coefficients"))
    throw InputError("differential needs 'degree' and 'coefficients'");
  d.degree = j["degree"].get<int>();
  if (d.degree < 1) throw InputError("degree must be >= 1");
  d.coeff.clear();
  for (const auto& c : j["coefficients"]) {
    if (c.is_array()) {
      if (c.size() != 2) throw InputError("coefficient entries are [re, im]");
      d.coeff.emplace_back(c[0].get<double>(), c[1].get<double>());
    } else {
      d.coeff.emplace_back(c.get<double>(), 0.0);
    }
  }
  if (d.coeff.empty()) d.coeff.push_back(0.0);
  d.r_max = j.value("r_max", 0.95);
  if (d.r_max <= 0 || d.r_max >= 1) throw InputError("r_max must lie in (0,1)");
  return d;
}

}  // namespace

std::vector<DiskDifferential> parse_differentials(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw InputError(std::string("bad JSON: ") + e.what());
  }
  std::vector<DiskDifferential> out;
  if (j.is_object() && j.contains("differentials")) {
    for (const auto& item : j["differentials"]) out.push_back(diff_from_json(item));
  } else if (j.is_array()) {
    for (const auto& item : j) out.push_back(diff_from_json(item));
  } else {
    out.push_back(diff_from_json(j));
  }
  return out;
}

std::vector<DiskDifferential> load_differentials(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_differentials(ss.str());
}

std::vector<DiskDifferential> align_to_levels(const AlgebraContext& ctx,
                                              std::vector<DiskDifferential> in) {
  std::vector<DiskDifferential> out;
  std::vector<bool> used(in.size(), false);
  for (int i = 0; i < ctx.n_levels; ++i) {
    int want = ctx.degrees[i];
    int found = -1;
    for (size_t k = 0; k < in.size(); ++k)
      if (!used[k] && in[k].degree == want) {
        found = static_cast<int>(k);
        break;
      }
    if (found >= 0) {
      used[found] = true;
      out.push_back(in[found]);
    } else {
      DiskDifferential zero;
      zero.degree = want;
      zero.coeff = {0.0};
      out.push_back(zero);
    }
  }
  for (size_t k = 0; k < in.size(); ++k)
    if (!used[k])
      throw InputError("differential of degree " + std::to_string(in[k].degree) +
                       " does not match any exponent level");
  return out;
}

std::string criterion_json(const CriterionReport& r) {
  json j;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["margin"] = r.margin;
  j["status"] = status_name(r.status);
  j["which"] = r.which == Which::general ? "general" : r.which == Which::cyclic ? "cyclic" : "cauchy";
  j["angle_condition_ok"] = r.angle_condition_ok;
  return j.dump();
}

std::string grid_report_json(const GridReport& g) {
  json j;
  j["aggregate_certified"] = g.aggregate_certified;
  j["pointwise_certified"] = g.pointwise_certified;
  j["min_margin"] = g.min_margin;
  j["max_margin"] = g.max_margin;
  j["homotopy_levels"] = g.homotopy_levels;
  j["points"] = json::array();
  for (const auto& p : g.points) {
    json q = json::parse(criterion_json(p.rep));
    q["z"] = {p.z.real(), p.z.imag()};
    j["points"].push_back(q);
  }
  return j.dump(2);
}

namespace {
json orbit_json(const OrbitConstants& oc) {
  json j;
  j["orbit"] = oc.is_long ? "long" : "short";
  j["norm_sq"] = rat_str(oc.norm_sq);
  j["sin_phi_sq"] = rat_str(oc.sin_phi_sq);
  j["davalo_multiplier"] = rat_str(oc.davalo_mult);
  j["davalo_c_sq"] = rat_str(oc.davalo_c_sq);
  j["davalo_c"] = std::sqrt(to_double(oc.davalo_c_sq));
  j["min_pairing"] = oc.min_pairing;
  return j;
}
}  // namespace

std::string constants_json(const ConstantsReport& rep) {
  json j;
  j["type"] = rep.type.name();
  j["orbits"] = json::array();
  for (const auto& oc : rep.orbits) j["orbits"].push_back(orbit_json(oc));
  j["phi_min_sin_sq"] = rat_str(rep.phi_min_sin_sq);
  j["sin_phi_theta_sq"] = rat_str(rep.sin_phi_theta_sq);
  if (!(rep.type.family == 'A' && rep.type.rank == 1)) j["c_l"] = rat_str(rep.c_l);
  j["kappa_ef"] = rat_str(rep.kappa_ef);
  j["kappa_hh"] = rat_str(rep.kappa_hh);
  j["dual_coxeter"] = rep.dual_coxeter;
  j["exponents"] = rep.exps;
  j["chern_pairings"] = json::array();
  for (const auto& c : rep.chern) {
    json e;
    e["omega_h"] = rat_str(c);
    e["two_omega_h"] = rat_str(Rat(2 * c));
    e["is_integer"] = denominator(c) == 1;
    e["two_is_integer"] = denominator(Rat(2 * c)) == 1;
    j["chern_pairings"].push_back(e);
  }
  return j.dump(2);
}

std::string principal_json(const AlgebraContext& ctx) {
  json j;
  j["type"] = ctx.type.name();
  j["exponents"] = ctx.prin.exponents;
  j["r_alpha"] = json::array();
  for (const auto& r : ctx.prin.r) j["r_alpha"].push_back(rat_str(r));
  j["kappa_ef"] = rat_str(ctx.prin.kappa_ef);
  j["levels"] = ctx.basis.level;
  j["normalization_sigma"] = json::array();
  for (const auto& s : ctx.basis.sigma) j["normalization_sigma"].push_back(rat_str(s));
  // repeated exponent levels use a Gram-Schmidt choice of the level plane
  bool repeated = false;
  for (size_t i = 1; i < ctx.basis.level.size(); ++i)
    repeated |= ctx.basis.level[i] == ctx.basis.level[i - 1];
  j["repeated_levels_orthogonalized"] = repeated;
  j["c_tensor_nonzero"] = json::array();
  int L = ctx.n_levels;
  for (int i = 1; i <= L; ++i)
    for (int k = 1; k <= L; ++k)
      for (int jj = 1; jj <= L; ++jj)
        for (int l = 1; l <= L; ++l) {
          if (ctx.ct->pair_kernel(i, jj, k, l) == 0) continue;
          json e;
          e["ijkl"] = {i, jj, k, l};
          e["value"] = ctx.ct->value(i, jj, k, l);
          if (auto ex = ctx.ct->exact(i, jj, k, l)) e["exact"] = rat_str(*ex);
          j["c_tensor_nonzero"].push_back(e);
        }
  return j.dump(2);
}

std::string constants_markdown(const ConstantsReport& rep) {
  std::ostringstream os;
  os << "| type | orbit | norm_sq | sin_phi_sq | davalo_c |\n";
  os << "|------|-------|---------|------------|----------|\n";
  for (const auto& oc : rep.orbits) {
    os << "| " << rep.type.name() << " | " << (oc.is_long ? "long" : "short") << " | "
       << rat_str(oc.norm_sq) << " | " << rat_str(oc.sin_phi_sq) << " | "
       << rat_str(oc.davalo_mult) << "/|Theta| |\n";
  }
  os << "\nkappa(e,f) = " << rat_str(rep.kappa_ef) << ", kappa(h,h) = " << rat_str(rep.kappa_hh)
     << ", sin^2(phi_theta) = " << rat_str(rep.sin_phi_theta_sq);
  if (!(rep.type.family == 'A' && rep.type.rank == 1)) os << ", c_l = " << rat_str(rep.c_l);
  os << "\n";
  return os.str();
}

}  // namespace operlab
