#include "operlab/principal.hpp"

#include <algorithm>
#include <cmath>

namespace operlab {

std::vector<std::vector<Rat>> rat_rref(std::vector<std::vector<Rat>> m, int ncols, int* rank_out) {
  int rows = static_cast<int>(m.size());
  int rank = 0;
  for (int col = 0; col < ncols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    Rat pv = m[rank][col];
    for (int c = 0; c < ncols; ++c) m[rank][c] /= pv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (int c = 0; c < ncols; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  if (rank_out) *rank_out = rank;
  m.resize(rank);
  return m;
}

int rat_rank(std::vector<std::vector<Rat>> mat, int ncols) {
  int r = 0;
  rat_rref(std::move(mat), ncols, &r);
  return r;
}

std::vector<std::vector<Rat>> rat_kernel(std::vector<std::vector<Rat>> mat, int ncols) {
  int rank = 0;
  auto R = rat_rref(std::move(mat), ncols, &rank);
  std::vector<int> pivot_col(rank, -1);
  std::vector<bool> is_pivot(ncols, false);
  for (int r = 0; r < rank; ++r)
    for (int c = 0; c < ncols; ++c)
      if (R[r][c] != 0) {
        pivot_col[r] = c;
        is_pivot[c] = true;
        break;
      }
  std::vector<std::vector<Rat>> kern;
  for (int c = 0; c < ncols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rat> v(ncols, Rat(0));
    v[c] = 1;
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -R[r][c];
    kern.push_back(std::move(v));
  }
  return kern;
}

PrincipalData principal_triple(const ChevAlgebra& a) {
  const RootSystem& rs = a.rs;
  const int l = rs.rank;
  PrincipalData p;

  // Solve alpha_i(h) = 1 with h = sum_j r_j h_j; alpha_i(h_j) = cartan[j][i].
  std::vector<std::vector<Rat>> m(l, std::vector<Rat>(l + 1, Rat(0)));
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) m[i][j] = Rat(rs.cartan[j][i]);
    m[i][l] = 1;
  }
  int rank = 0;
  auto R = rat_rref(std::move(m), l + 1, &rank);
  if (rank != l) throw SingularCartan("Cartan matrix is singular");
  p.r.assign(l, Rat(0));
  for (int r = 0; r < l; ++r) {
    int c = 0;
    while (R[r][c] == 0) ++c;
    p.r[c] = R[r][l];
  }

  p.e.assign(a.dim, Rat(0));
  p.f.assign(a.dim, Rat(0));
  p.h.assign(a.dim, Rat(0));
  for (int i = 0; i < l; ++i) {
    RootCoord alpha(l, 0);
    alpha[i] = 1;
    int r = rs.root_index(alpha);
    p.e[a.e_index(r)] = 1;
    p.f[a.e_index(rs.negative_of(r))] = p.r[i];
    p.h[i] = p.r[i];
  }

  // Relations [h,e] = e, [e,f] = h, [h,f] = -f, verified exactly.
  auto he = a.bracket(p.h, p.e);
  auto ef = a.bracket(p.e, p.f);
  auto hf = a.bracket(p.h, p.f);
  for (int i = 0; i < a.dim; ++i) {
    if (he[i] != p.e[i] || ef[i] != p.h[i] || hf[i] != -p.f[i])
      throw SingularCartan("principal triple relations failed");
  }

  p.kappa_ef = a.killing(p.e, p.f);
  p.kappa_hh = a.killing(p.h, p.h);

  p.m_max = rs.heights[rs.highest];
  p.grade_dim.assign(p.m_max + 2, 0);
  p.grade_dim[0] = l;
  for (int r = 0; r < rs.n_positive; ++r) p.grade_dim[rs.heights[r]]++;
  for (int m_lvl = 1; m_lvl <= p.m_max; ++m_lvl) {
    int mult = p.grade_dim[m_lvl] - p.grade_dim[m_lvl + 1];
    for (int k = 0; k < mult; ++k) p.exponents.push_back(m_lvl);
  }
  std::sort(p.exponents.begin(), p.exponents.end());

  // chi(beta) = prod r_i^{beta_i}, the torus character absorbing sqrt(r).
  p.chi.resize(rs.roots.size());
  for (size_t r = 0; r < rs.roots.size(); ++r) {
    Rat c(1);
    for (int i = 0; i < l; ++i) {
      int e = rs.roots[r][i];
      for (int k = 0; k < std::abs(e); ++k) c = e > 0 ? Rat(c * p.r[i]) : Rat(c / p.r[i]);
    }
    p.chi[r] = c;
  }
  return p;
}

std::vector<int> exponents(const PrincipalData& p) { return p.exponents; }

std::vector<Rat> adapted_theta(const ChevAlgebra& a, const PrincipalData& p,
                               const std::vector<Rat>& x) {
  const int l = a.rs.rank;
  std::vector<Rat> out(a.dim, Rat(0));
  for (int i = 0; i < l; ++i) out[i] = -x[i];
  for (size_t r = 0; r < a.rs.roots.size(); ++r)
    if (x[l + r] != 0)
      out[l + a.rs.negative_of(static_cast<int>(r))] = -p.chi[r] * x[l + r];
  return out;
}

std::vector<std::complex<double>> adapted_theta(const ChevAlgebra& a, const PrincipalData& p,
                                                const std::vector<std::complex<double>>& x) {
  const int l = a.rs.rank;
  std::vector<std::complex<double>> out(a.dim, 0.0);
  for (int i = 0; i < l; ++i) out[i] = -std::conj(x[i]);
  for (size_t r = 0; r < a.rs.roots.size(); ++r)
    out[l + a.rs.negative_of(static_cast<int>(r))] = -to_double(p.chi[r]) * std::conj(x[l + r]);
  return out;
}

NormalizedBasis highest_weight_basis(const ChevAlgebra& a, const PrincipalData& p) {
  const RootSystem& rs = a.rs;
  const int l = rs.rank;
  NormalizedBasis nb;

  // multiplicity per level
  std::vector<int> mult(p.m_max + 1, 0);
  for (int m : p.exponents) mult[m]++;

  for (int lvl = 1; lvl <= p.m_max; ++lvl) {
    if (mult[lvl] == 0) continue;
    // basis indices of g_lvl and g_{lvl+1}
    std::vector<int> src, dst;
    for (int r = 0; r < rs.n_positive; ++r) {
      if (rs.heights[r] == lvl) src.push_back(r);
      if (rs.heights[r] == lvl + 1) dst.push_back(r);
    }
    // matrix of ad(e): g_lvl -> g_{lvl+1}
    std::vector<std::vector<Rat>> m(dst.size(), std::vector<Rat>(src.size(), Rat(0)));
    for (size_t s = 0; s < src.size(); ++s) {
      for (int i = 0; i < l; ++i) {
        RootCoord alpha(l, 0);
        alpha[i] = 1;
        int ra = rs.root_index(alpha);
        long long n = a.n_constant(ra, src[s]);
        if (n == 0) continue;
        RootCoord sum = rs.roots[src[s]];
        sum[i] += 1;
        int d = rs.root_index(sum);
        auto it = std::find(dst.begin(), dst.end(), d);
        m[it - dst.begin()][s] += Rat(n);
      }
    }
    auto kern = rat_kernel(std::move(m), static_cast<int>(src.size()));
    if (static_cast<int>(kern.size()) != mult[lvl])
      throw DegenerateKernel("kernel dimension mismatch at level " + std::to_string(lvl));

    // Embed into full coordinates; level 1 vector is e itself.
    std::vector<std::vector<Rat>> vecs;
    if (lvl == 1) {
      vecs.push_back(p.e);
    } else {
      for (auto& kv : kern) {
        std::vector<Rat> v(a.dim, Rat(0));
        for (size_t s = 0; s < src.size(); ++s) v[a.e_index(src[s])] = kv[s];
        vecs.push_back(std::move(v));
      }
    }

    // Gram-Schmidt against <x,y> = -kappa(x, theta' y) when the level repeats.
    auto ip = [&](const std::vector<Rat>& x, const std::vector<Rat>& y) {
      return -a.killing(x, adapted_theta(a, p, y));
    };
    for (size_t i = 0; i < vecs.size(); ++i) {
      for (size_t j = 0; j < i; ++j) {
        Rat c = ip(vecs[i], vecs[j]) / ip(vecs[j], vecs[j]);
        for (int k = 0; k < a.dim; ++k) vecs[i][k] -= c * vecs[j][k];
      }
      // deterministic sign: leading coefficient positive in the basis order
      for (int k = 0; k < a.dim; ++k) {
        if (vecs[i][k] == 0) continue;
        if (vecs[i][k] < 0)
          for (int q = 0; q < a.dim; ++q) vecs[i][q] = -vecs[i][q];
        break;
      }
      Rat n = ip(vecs[i], vecs[i]);
      if (n <= 0) throw DegenerateKernel("non-positive norm in V_e");
      nb.v.push_back(vecs[i]);
      nb.n.push_back(n);
      nb.sigma.push_back(p.kappa_ef / n);
      nb.scale.push_back(std::sqrt(to_double(p.kappa_ef / n)));
      nb.level.push_back(lvl);
    }
  }
  return nb;
}

CTensor::CTensor(const ChevAlgebra& a, const PrincipalData& p, const NormalizedBasis& nb)
    : n_(nb.size()), nb_(&nb), levels_(nb.level) {
  pair_.resize(static_cast<size_t>(n_) * n_);
  pair_dbl_.resize(static_cast<size_t>(n_) * n_);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) {
      auto br = a.bracket(nb.v[i - 1], adapted_theta(a, p, nb.v[j - 1]));
      double s = nb.scale[i - 1] * nb.scale[j - 1];
      std::vector<double> d(br.size());
      for (size_t k = 0; k < br.size(); ++k) d[k] = s * to_double(br[k]);
      pair_[idx(i, j)] = std::move(br);
      pair_dbl_[idx(i, j)] = std::move(d);
    }
  kernel_.resize(static_cast<size_t>(n_) * n_ * n_ * n_);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      for (int k = 1; k <= n_; ++k)
        for (int l = 1; l <= n_; ++l)
          kernel_[((idx(i, j) * n_) + (k - 1)) * n_ + (l - 1)] =
              a.killing(pair_[idx(i, j)], pair_[idx(k, l)]);
}

Rat CTensor::pair_kernel(int i, int j, int k, int l) const {
  check(i);
  check(j);
  check(k);
  check(l);
  return kernel_[((idx(i, j) * n_) + (k - 1)) * n_ + (l - 1)];
}

std::optional<Rat> CTensor::exact(int i, int j, int k, int l) const {
  Rat kk = pair_kernel(i, j, k, l);
  Rat prod = nb_->sigma[i - 1] * nb_->sigma[j - 1] * nb_->sigma[k - 1] * nb_->sigma[l - 1];
  auto root = rat_sqrt_exact(prod);
  if (!root) return std::nullopt;
  return kk * (*root);
}

double CTensor::value(int i, int j, int k, int l) const {
  Rat kk = pair_kernel(i, j, k, l);
  double s = nb_->scale[i - 1] * nb_->scale[j - 1] * nb_->scale[k - 1] * nb_->scale[l - 1];
  return to_double(kk) * s;
}

double CTensor::max_sqrt_abs() const {
  double mx = 0;
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      for (int k = 1; k <= n_; ++k)
        for (int l = 1; l <= n_; ++l)
          mx = std::max(mx, std::sqrt(std::abs(value(i, j, k, l))));
  return mx;
}

}  // namespace operlab
