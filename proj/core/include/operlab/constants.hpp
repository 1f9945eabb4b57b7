#pragma once

#include "operlab/principal.hpp"

namespace operlab {

struct TableMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct Sl2Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Scalars attached to a single Weyl orbit of roots.
struct OrbitConstants {
  bool is_long = true;
  Rat norm_sq;           // |Theta|^2, Killing-dual
  Rat sin_phi_sq;        // sin^2 of the angle between h and the orbit's simple-root walls
  Rat davalo_mult;       // c_Theta = davalo_mult / |Theta|  (exact rational multiplier)
  Rat davalo_c_sq;       // c_Theta^2, exact
  long long min_pairing = 0;  // min |beta(h_Theta)| over beta(h_Theta) != 0
};

struct ConstantsReport {
  LieType type;
  std::vector<OrbitConstants> orbits;  // long first; one entry when simply laced
  Rat phi_min_sin_sq;
  Rat sin_phi_theta_sq;
  Rat c_l;                             // m_l^2 kappa(h,h) / sin^2(phi_theta)
  Rat kappa_ef, kappa_hh;
  std::vector<int> exps;
  std::vector<Rat> chern;              // omega_i(h) = r_i
  long long dual_coxeter = 0;
};

Rat theta_norm_sq(const RootSystem& rs, const WeylOrbits& w, int orbit);
Rat sin_phi_orbit(const RootSystem& rs, const PrincipalData& p, const WeylOrbits& w, int orbit);
Rat phi_min(const RootSystem& rs, const PrincipalData& p);
Rat sin_phi_theta(const RootSystem& rs, const PrincipalData& p);

// Davalo constant for the orbit: min_{beta(h_Theta) != 0} |beta(h_Theta)| / (2 |Theta|).
// Returned exactly as (multiplier, c^2); h_Theta is the dominant coroot of the orbit.
OrbitConstants davalo_c(const RootSystem& rs, const PrincipalData& p, const WeylOrbits& w,
                        int orbit);

Rat c_l_value(const RootSystem& rs, const PrincipalData& p);  // requires g != sl2
std::vector<Rat> chern_pairings(const PrincipalData& p);

ConstantsReport constants_report(const ChevAlgebra& a, const PrincipalData& p);

// Reference table row: the tabulated (|Theta|^2, sin^2 phi_Theta) values that the
// verification mode compares against.
struct TableRow {
  std::string label;    // e.g. "G2 (Long)"
  bool is_long = true;
  Rat norm_sq;
  Rat sin_phi_sq;
};
std::vector<TableRow> golden_rows(LieType t);

struct RowCheck {
  TableRow golden;
  Rat computed_norm_sq;
  Rat computed_sin_sq;
  bool norm_ok = false;
  bool sin_ok = false;
};
// Compare the computed constants against the reference table; one entry per orbit row.
std::vector<RowCheck> verify_against_table(const ChevAlgebra& a, const PrincipalData& p);

}  // namespace operlab
