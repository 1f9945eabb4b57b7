#include "operlab/constants.hpp"

#include <algorithm>
#include <cmath>

namespace operlab {

Rat theta_norm_sq(const RootSystem& rs, const WeylOrbits& w, int orbit) {
  const auto& members = orbit == 0 ? w.long_roots : w.short_roots;
  return Rat(4) / rs.killing_coroot_sq[members.front()];
}

namespace {

// sin^2 of the angle between h and ker(alpha) for a simple root:
// sin phi_alpha = (1/2) sqrt(kappa(h_alpha,h_alpha)/kappa(h,h)).
Rat sin_sq_simple(const RootSystem& rs, const PrincipalData& p, int i) {
  RootCoord alpha(rs.rank, 0);
  alpha[i] = 1;
  int r = rs.root_index(alpha);
  return rs.killing_coroot_sq[r] / (4 * p.kappa_hh);
}

}  // namespace

Rat sin_phi_orbit(const RootSystem& rs, const PrincipalData& p, const WeylOrbits& w, int orbit) {
  Rat best(-1);
  for (int i = 0; i < rs.rank; ++i) {
    RootCoord alpha(rs.rank, 0);
    alpha[i] = 1;
    int r = rs.root_index(alpha);
    if (w.orbit_of[r] != orbit) continue;
    Rat s = sin_sq_simple(rs, p, i);
    if (best < 0 || s < best) best = s;
  }
  if (best < 0) throw std::logic_error("orbit contains no simple root");
  return best;
}

Rat phi_min(const RootSystem& rs, const PrincipalData& p) {
  Rat best = sin_sq_simple(rs, p, 0);
  for (int i = 1; i < rs.rank; ++i) best = std::min(best, sin_sq_simple(rs, p, i));
  return best;
}

Rat sin_phi_theta(const RootSystem& rs, const PrincipalData& p) {
  // kappa(h, h_theta) = ht(theta) kappa(h_theta,h_theta)/2
  int ht = rs.heights[rs.highest];
  Rat q = rs.killing_coroot_sq[rs.highest];
  Rat num = Rat(ht) * q / 2;
  return num * num / (q * p.kappa_hh);
}

OrbitConstants davalo_c(const RootSystem& rs, const PrincipalData& p, const WeylOrbits& w,
                        int orbit) {
  OrbitConstants oc;
  oc.is_long = orbit == 0;
  oc.norm_sq = theta_norm_sq(rs, w, orbit);
  oc.sin_phi_sq = sin_phi_orbit(rs, p, w, orbit);
  const auto& members = orbit == 0 ? w.long_roots : w.short_roots;
  // dominant coroot of the orbit: alpha_i(h_beta) >= 0 for all i
  int dom = -1;
  for (int r : members) {
    bool ok = true;
    for (int i = 0; i < rs.rank; ++i) {
      long long v = 0;
      for (int j = 0; j < rs.rank; ++j) v += rs.coroot[r][j] * rs.cartan[j][i];
      if (v < 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      dom = r;
      break;
    }
  }
  if (dom < 0) throw std::logic_error("no dominant coroot in orbit");
  long long mn = 0;
  for (size_t g = 0; g < rs.roots.size(); ++g) {
    long long v = 0;
    for (int j = 0; j < rs.rank; ++j) v += rs.coroot[dom][j] * rs.pairing(rs.roots[g], j);
    v = std::llabs(v);
    if (v != 0 && (mn == 0 || v < mn)) mn = v;
  }
  oc.min_pairing = mn;
  oc.davalo_mult = Rat(mn, 2);
  oc.davalo_c_sq = oc.davalo_mult * oc.davalo_mult / oc.norm_sq;
  return oc;
}

Rat c_l_value(const RootSystem& rs, const PrincipalData& p) {
  if (rs.type.family == 'A' && rs.type.rank == 1)
    throw Sl2Error("c_l is defined for g != sl2");
  int ml = p.exponents.back();
  return Rat(ml) * ml * p.kappa_hh / sin_phi_theta(rs, p);
}

std::vector<Rat> chern_pairings(const PrincipalData& p) { return p.r; }

ConstantsReport constants_report(const ChevAlgebra& a, const PrincipalData& p) {
  const RootSystem& rs = a.rs;
  ConstantsReport rep;
  rep.type = rs.type;
  WeylOrbits w = weyl_orbits(rs);
  for (int o = 0; o < w.count; ++o) rep.orbits.push_back(davalo_c(rs, p, w, o));
  rep.phi_min_sin_sq = phi_min(rs, p);
  rep.sin_phi_theta_sq = sin_phi_theta(rs, p);
  if (!(rs.type.family == 'A' && rs.type.rank == 1)) rep.c_l = c_l_value(rs, p);
  rep.kappa_ef = p.kappa_ef;
  rep.kappa_hh = p.kappa_hh;
  rep.exps = p.exponents;
  rep.chern = chern_pairings(p);
  // dual Coxeter number: 1 + height of the highest coroot
  long long s = 1;
  for (int j = 0; j < rs.rank; ++j) s += rs.coroot[rs.highest][j];
  rep.dual_coxeter = s;
  return rep;
}

std::vector<TableRow> golden_rows(LieType t) {
  // The reference table, verbatim (sin column squared).
  long long n = t.rank;
  std::vector<TableRow> rows;
  auto row = [&](const std::string& lab, bool lng, Rat ns, Rat ss) {
    rows.push_back({lab, lng, ns, ss});
  };
  switch (t.family) {
    case 'A':
      row("A_n", true, Rat(1, n + 1), Rat(6, n * (n + 1) * (n + 2)));
      break;
    case 'B':
      row("B_n (Long)", true, Rat(1, 2 * n - 1), Rat(3, n * (n + 1) * (2 * n + 1)));
      row("B_n (Short)", false, Rat(1, 4 * n - 2), Rat(6, n * (n + 1) * (2 * n + 1)));
      break;
    case 'C':
      row("C_n (Long)", true, Rat(1, n + 1), Rat(3, n * (2 * n - 1) * (2 * n + 1)));
      row("C_n (Short)", false, Rat(1, 2 * n + 2), Rat(6, n * (2 * n - 1) * (2 * n + 1)));
      break;
    case 'D':
      row("D_n", true, Rat(1, 2 * n - 2), Rat(3, n * (n - 1) * (2 * n - 1)));
      break;
    case 'E':
      if (n == 6) row("E_6", true, Rat(1, 12), Rat(1, 312));
      if (n == 7) row("E_7", true, Rat(1, 18), Rat(1, 798));
      if (n == 8) row("E_8", true, Rat(1, 30), Rat(1, 2480));
      break;
    case 'F':
      row("F_4 (Long)", true, Rat(1, 9), Rat(1, 156));
      row("F_4 (Short)", false, Rat(1, 18), Rat(1, 78));
      break;
    case 'G':
      row("G_2 (Long)", true, Rat(1, 4), Rat(1, 56));
      row("G_2 (Short)", false, Rat(1, 12), Rat(3, 56));
      break;
  }
  return rows;
}

std::vector<RowCheck> verify_against_table(const ChevAlgebra& a, const PrincipalData& p) {
  const RootSystem& rs = a.rs;
  WeylOrbits w = weyl_orbits(rs);
  auto rows = golden_rows(rs.type);
  std::vector<RowCheck> out;
  for (const auto& row : rows) {
    RowCheck rc;
    rc.golden = row;
    int orbit = row.is_long ? 0 : 1;
    rc.computed_norm_sq = theta_norm_sq(rs, w, orbit);
    rc.computed_sin_sq = sin_phi_orbit(rs, p, w, orbit);
    rc.norm_ok = rc.computed_norm_sq == row.norm_sq;
    rc.sin_ok = rc.computed_sin_sq == row.sin_phi_sq;
    out.push_back(rc);
  }
  return out;
}

}  // namespace operlab
