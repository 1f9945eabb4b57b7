#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "operlab/rational.hpp"

namespace operlab {

struct InvalidRank : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One of the simple families A..G with a rank inside the classification bounds.
struct LieType {
  char family = 'A';
  int rank = 1;

  bool valid() const;
  std::string name() const { return std::string(1, family) + std::to_string(rank); }
  static LieType parse(const std::string& s);  // "A2", "E8", ...
};

using RootCoord = std::vector<int>;  // coordinates in the simple-root basis

// Root system data, all exact. Roots are stored positives first (ordered by
// height then lexicographically), then the negatives in the mirrored order,
// so negative_of(r) is r +- n_positive.
struct RootSystem {
  LieType type;
  int rank = 0;
  std::vector<std::vector<int>> cartan;         // cartan[i][j] = alpha_j(h_i)
  std::vector<Rat> simple_norm_sq;              // (alpha_i, alpha_i), scale with short = 2
  std::vector<RootCoord> roots;
  int n_positive = 0;
  std::vector<int> heights;                     // per root (negative for negative roots)
  int highest = -1;                             // index of the highest root
  std::vector<std::vector<long long>> coroot;   // coroot[r] = h_{beta_r} in the h_i basis
  std::vector<Rat> killing_gram;                // rank x rank, row-major: kappa(h_i, h_j)
  std::vector<Rat> root_norm_sq;                // (beta, beta) per root, normalized scale
  std::vector<Rat> killing_coroot_sq;           // kappa(h_beta, h_beta) per root

  long long pairing(const RootCoord& b, int i) const {  // b(h_i)
    long long s = 0;
    for (int j = 0; j < rank; ++j) s += static_cast<long long>(b[j]) * cartan[i][j];
    return s;
  }
  Rat inner(const RootCoord& a, const RootCoord& b) const;  // (a, b)
  int root_index(const RootCoord& c) const;                 // -1 if not a root
  int negative_of(int r) const { return r < n_positive ? r + n_positive : r - n_positive; }
  const Rat& gram(int i, int j) const { return killing_gram[i * rank + j]; }
  Rat killing_h(const std::vector<Rat>& a, const std::vector<Rat>& b) const;  // on coroot coords

 private:
  std::unordered_map<uint64_t, int> index_;
  uint64_t key(const RootCoord& c) const;
  friend RootSystem build_root_system(LieType);
};

RootSystem build_root_system(LieType t);

// Partition of the roots into Weyl orbits (at most two, labeled by length).
struct WeylOrbits {
  int count = 1;
  std::vector<int> orbit_of;      // per root: 0 = long, 1 = short (0 for all if single orbit)
  std::vector<int> long_roots;    // indices
  std::vector<int> short_roots;   // empty when simply laced
};
WeylOrbits weyl_orbits(const RootSystem& rs);

// Sparse algebra element used for basis brackets (integer coefficients).
struct SparseVec {
  std::array<std::pair<int, long long>, 9> ent{};  // enough for rank <= 8 plus one root term
  int n = 0;
  void add(int idx, long long c) {
    if (c == 0) return;
    ent[n++] = {idx, c};
  }
};

// Chevalley-basis realization: basis = {h_1..h_l} + {e_beta : beta root};
// all structure constants integers, Killing table exact.
struct ChevAlgebra {
  RootSystem rs;
  int dim = 0;  // rank + #roots

  // N(a, b) for pairs of root indices with root(a)+root(b) a root; 0 otherwise.
  long long n_constant(int ra, int rb) const;
  int string_p(int ra, int rb) const;  // p in the alpha-string through beta

  SparseVec bracket_basis(int i, int j) const;  // basis indices
  std::vector<Rat> bracket(const std::vector<Rat>& x, const std::vector<Rat>& y) const;

  Rat killing_basis(int i, int j) const;  // exact kappa on basis pairs
  Rat killing(const std::vector<Rat>& x, const std::vector<Rat>& y) const;
  std::complex<double> killing(const std::vector<std::complex<double>>& x,
                               const std::vector<std::complex<double>>& y) const;

  // Standard Cartan involution: theta(e_beta) = -e_{-beta}, theta(h)= -h on the
  // real coroot span, extended conjugate-linearly.
  std::vector<std::complex<double>> cartan_involution(
      const std::vector<std::complex<double>>& x) const;
  std::vector<Rat> cartan_involution_real(const std::vector<Rat>& x) const;

  int e_index(int root) const { return rs.rank + root; }
  bool is_root_basis(int i) const { return i >= rs.rank; }

  std::vector<Rat> killing_ee;  // kappa(e_beta, e_{-beta}) per root index

  std::string to_json() const;  // basis order, structure constants, killing table

 private:
  std::vector<long long> n_table_;  // packed pair table
  std::vector<int> p_table_;
  friend ChevAlgebra build_chevalley(const RootSystem&);
};

ChevAlgebra build_chevalley(const RootSystem& rs);

}  // namespace operlab
