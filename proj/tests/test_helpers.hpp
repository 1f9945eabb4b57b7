#pragma once

#include <random>
#include <vector>

#include "operlab/liealg.hpp"

namespace operlab::testing {

// Exhaustive Jacobi check over basis triples, integer arithmetic throughout.
// Returns the number of failing triples (0 expected).
inline long long jacobi_failures(const ChevAlgebra& a) {
  const int d = a.dim;
  std::vector<long long> acc(d, 0);
  long long bad = 0;
  auto add_nested = [&](int x, int y, int z, long long sgn) {
    SparseVec in = a.bracket_basis(x, y);
    for (int k = 0; k < in.n; ++k) {
      SparseVec out = a.bracket_basis(in.ent[k].first, z);
      for (int m = 0; m < out.n; ++m)
        acc[out.ent[m].first] += sgn * in.ent[k].second * out.ent[m].second;
    }
  };
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = j + 1; k < d; ++k) {
        add_nested(i, j, k, 1);
        add_nested(j, k, i, 1);
        add_nested(k, i, j, 1);
        for (int t = 0; t < d; ++t) {
          if (acc[t] != 0) {
            ++bad;
            break;
          }
        }
        for (int t = 0; t < d; ++t) acc[t] = 0;
      }
  return bad;
}

// Exhaustive Killing-invariance check kappa([x,y],z) == kappa(x,[y,z]), integers.
inline long long invariance_failures(const ChevAlgebra& a) {
  const int d = a.dim;
  const int l = a.rs.rank;
  auto kb = [&](int i, int j) -> long long {
    Rat v = a.killing_basis(i, j);
    return v.convert_to<long long>();
  };
  long long bad = 0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        long long lhs = 0, rhs = 0;
        SparseVec xy = a.bracket_basis(i, j);
        for (int t = 0; t < xy.n; ++t) lhs += xy.ent[t].second * kb(xy.ent[t].first, k);
        SparseVec yz = a.bracket_basis(j, k);
        for (int t = 0; t < yz.n; ++t) rhs += yz.ent[t].second * kb(i, yz.ent[t].first);
        if (lhs != rhs) ++bad;
      }
  (void)l;
  return bad;
}

inline std::vector<std::complex<double>> random_element(const ChevAlgebra& a,
                                                        std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::vector<std::complex<double>> x(a.dim);
  bool nonzero = false;
  for (auto& c : x) {
    c = std::complex<double>(coef(rng), coef(rng));
    nonzero |= c != std::complex<double>(0, 0);
  }
  if (!nonzero) x[0] = 1.0;
  return x;
}

}  // namespace operlab::testing
