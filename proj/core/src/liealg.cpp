#include "operlab/liealg.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace operlab {

bool LieType::valid() const {
  switch (family) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 2;
    case 'C': return rank >= 2;
    case 'D': return rank >= 3;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

LieType LieType::parse(const std::string& s) {
  if (s.size() < 2) throw InvalidRank("bad Lie type: " + s);
  LieType t;
  t.family = static_cast<char>(std::toupper(s[0]));
  try {
    t.rank = std::stoi(s.substr(1));
  } catch (...) {
    throw InvalidRank("bad Lie type: " + s);
  }
  if (!t.valid()) throw InvalidRank("rank out of range for family: " + s);
  return t;
}

namespace {

// cartan[i][j] = alpha_j(h_i); simple norms with short roots of square length 2.
void cartan_and_norms(const LieType& t, std::vector<std::vector<int>>& C,
                      std::vector<Rat>& norm) {
  int n = t.rank;
  C.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) C[i][i] = 2;
  auto chain = [&](int a, int b) { C[a][b] = C[b][a] = -1; };
  norm.assign(n, Rat(2));
  switch (t.family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      break;
    case 'B':  // alpha_n short, the rest long
      for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
      C[n - 2][n - 1] = -1;  // alpha_n(h_{n-1})
      C[n - 1][n - 2] = -2;  // alpha_{n-1}(h_n)
      for (int i = 0; i + 1 < n; ++i) norm[i] = Rat(4);
      break;
    case 'C':  // alpha_n long
      for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
      C[n - 2][n - 1] = -2;
      C[n - 1][n - 2] = -1;
      norm[n - 1] = Rat(4);
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
      chain(n - 3, n - 1);
      break;
    case 'E': {
      // Bourbaki numbering: chain 1-3-4-5-6(-7)(-8), node 2 attached to 4.
      std::vector<std::pair<int, int>> edges = {{1, 3}, {3, 4}, {2, 4}, {4, 5}, {5, 6}};
      if (n >= 7) edges.push_back({6, 7});
      if (n == 8) edges.push_back({7, 8});
      for (auto [a, b] : edges) chain(a - 1, b - 1);
      break;
    }
    case 'F':  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      chain(0, 1);
      C[1][2] = -1;
      C[2][1] = -2;
      chain(2, 3);
      norm[0] = norm[1] = Rat(4);
      break;
    case 'G':  // alpha_1 short, alpha_2 long
      C[0][1] = -3;
      C[1][0] = -1;
      norm[1] = Rat(6);
      break;
    default:
      throw InvalidRank("unknown family");
  }
}

}  // namespace

uint64_t RootSystem::key(const RootCoord& c) const {
  uint64_t k = 0;
  for (int v : c) k = k * 64 + static_cast<uint64_t>(v + 16);
  return k;
}

int RootSystem::root_index(const RootCoord& c) const {
  auto it = index_.find(key(c));
  return it == index_.end() ? -1 : it->second;
}

Rat RootSystem::inner(const RootCoord& a, const RootCoord& b) const {
  // (alpha_i, alpha_j) = C[j][i] * norm_j / 2
  Rat s = 0;
  for (int i = 0; i < rank; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank; ++j) {
      if (b[j] == 0) continue;
      Rat ip = (i == j) ? simple_norm_sq[i] : Rat(cartan[j][i]) * simple_norm_sq[j] / 2;
      s += Rat(a[i]) * b[j] * ip;
    }
  }
  return s;
}

Rat RootSystem::killing_h(const std::vector<Rat>& a, const std::vector<Rat>& b) const {
  Rat s = 0;
  for (int i = 0; i < rank; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank; ++j) {
      if (b[j] == 0) continue;
      s += a[i] * b[j] * gram(i, j);
    }
  }
  return s;
}

RootSystem build_root_system(LieType t) {
  if (!t.valid()) throw InvalidRank("invalid type " + t.name());
  RootSystem rs;
  rs.type = t;
  rs.rank = t.rank;
  cartan_and_norms(t, rs.cartan, rs.simple_norm_sq);
  const int n = rs.rank;

  // Reflection closure from the simple roots.
  std::set<RootCoord> all;
  std::vector<RootCoord> frontier;
  for (int i = 0; i < n; ++i) {
    RootCoord e(n, 0);
    e[i] = 1;
    all.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<RootCoord> next;
    for (const auto& b : frontier) {
      for (int i = 0; i < n; ++i) {
        long long p = rs.pairing(b, i);
        RootCoord r = b;
        r[i] -= static_cast<int>(p);
        bool zero = std::all_of(r.begin(), r.end(), [](int v) { return v == 0; });
        if (!zero && all.insert(r).second) next.push_back(r);
      }
    }
    frontier = std::move(next);
  }

  std::vector<RootCoord> pos;
  for (const auto& r : all) {
    int h = 0;
    for (int v : r) h += v;
    if (h > 0) pos.push_back(r);
  }
  std::sort(pos.begin(), pos.end(), [](const RootCoord& a, const RootCoord& b) {
    int ha = 0, hb = 0;
    for (int v : a) ha += v;
    for (int v : b) hb += v;
    if (ha != hb) return ha < hb;
    return a < b;
  });
  rs.n_positive = static_cast<int>(pos.size());
  rs.roots = pos;
  for (const auto& r : pos) {
    RootCoord m(r);
    for (int& v : m) v = -v;
    rs.roots.push_back(m);
  }
  for (int r = 0; r < static_cast<int>(rs.roots.size()); ++r)
    rs.index_[rs.key(rs.roots[r])] = r;

  rs.heights.resize(rs.roots.size());
  for (size_t r = 0; r < rs.roots.size(); ++r) {
    int h = 0;
    for (int v : rs.roots[r]) h += v;
    rs.heights[r] = h;
  }
  rs.highest = rs.n_positive - 1;  // maximal height, unique

  // Coroot coordinates: h_beta = sum_j b_j (alpha_j,alpha_j)/(beta,beta) h_j.
  rs.root_norm_sq.resize(rs.roots.size());
  rs.coroot.resize(rs.roots.size());
  for (size_t r = 0; r < rs.roots.size(); ++r) {
    const auto& b = rs.roots[r];
    Rat bb = rs.inner(b, b);
    rs.root_norm_sq[r] = bb;
    std::vector<long long> c(n);
    for (int j = 0; j < n; ++j) {
      Rat cj = Rat(b[j]) * rs.simple_norm_sq[j] / bb;
      if (denominator(cj) != 1) throw std::logic_error("non-integral coroot coordinate");
      c[j] = cj.convert_to<long long>();
    }
    rs.coroot[r] = std::move(c);
  }

  // Killing form on the Cartan: kappa(h_i,h_j) = sum_beta beta(h_i) beta(h_j).
  rs.killing_gram.assign(static_cast<size_t>(n) * n, Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long long s = 0;
      for (const auto& b : rs.roots) s += rs.pairing(b, i) * rs.pairing(b, j);
      rs.killing_gram[i * n + j] = Rat(s);
    }

  rs.killing_coroot_sq.resize(rs.roots.size());
  for (size_t r = 0; r < rs.roots.size(); ++r) {
    long long s = 0;
    for (const auto& g : rs.roots) {
      long long p = 0;
      for (int i = 0; i < n; ++i) p += rs.coroot[r][i] * rs.pairing(g, i);
      s += p * p;
    }
    rs.killing_coroot_sq[r] = Rat(s);
  }
  return rs;
}

WeylOrbits weyl_orbits(const RootSystem& rs) {
  WeylOrbits w;
  std::set<Rat> lengths(rs.root_norm_sq.begin(), rs.root_norm_sq.end());
  w.count = static_cast<int>(lengths.size());
  Rat longest = *lengths.rbegin();
  w.orbit_of.resize(rs.roots.size());
  for (size_t r = 0; r < rs.roots.size(); ++r) {
    bool is_long = rs.root_norm_sq[r] == longest;
    w.orbit_of[r] = is_long ? 0 : 1;
    (is_long ? w.long_roots : w.short_roots).push_back(static_cast<int>(r));
  }
  return w;
}

// ---------------------------------------------------------------------------
// Chevalley structure constants
// ---------------------------------------------------------------------------

namespace {

struct NBuilder {
  const RootSystem& rs;
  int np;
  std::vector<long long> memo;
  std::vector<char> have;
  std::vector<int> xs_a, xs_b;  // extraspecial pair per positive root (-1 for simple)

  explicit NBuilder(const RootSystem& r) : rs(r), np(r.n_positive) {
    size_t nn = rs.roots.size() * rs.roots.size();
    memo.assign(nn, 0);
    have.assign(nn, 0);
    xs_a.assign(np, -1);
    xs_b.assign(np, -1);
    for (int g = 0; g < np; ++g) {
      if (rs.heights[g] == 1) continue;
      for (int a = 0; a < np; ++a) {
        RootCoord d = rs.roots[g];
        for (int i = 0; i < rs.rank; ++i) d[i] -= rs.roots[a][i];
        int b = rs.root_index(d);
        if (b >= 0 && b < np) {
          xs_a[g] = a;
          xs_b[g] = b;
          break;  // roots are ordered, first hit is minimal
        }
      }
      assert(xs_a[g] >= 0);
    }
  }

  int string_p(int ra, int rb) const {  // max k with beta - k alpha a root
    int p = 0;
    RootCoord c = rs.roots[rb];
    while (true) {
      for (int i = 0; i < rs.rank; ++i) c[i] -= rs.roots[ra][i];
      bool zero = std::all_of(c.begin(), c.end(), [](int v) { return v == 0; });
      if (zero || rs.root_index(c) < 0) break;
      ++p;
    }
    return p;
  }

  int sum_index(int ra, int rb) const {
    RootCoord c = rs.roots[ra];
    for (int i = 0; i < rs.rank; ++i) c[i] += rs.roots[rb][i];
    bool zero = std::all_of(c.begin(), c.end(), [](int v) { return v == 0; });
    return zero ? -2 : rs.root_index(c);
  }

  long long N(int ra, int rb) {
    size_t k = static_cast<size_t>(ra) * rs.roots.size() + rb;
    if (have[k]) return memo[k];
    long long v = compute(ra, rb);
    have[k] = 1;
    memo[k] = v;
    return v;
  }

  long long compute(int ra, int rb) {
    int g = sum_index(ra, rb);
    if (g < 0) return 0;  // sum not a root (or zero: handled by the bracket)
    if (rb < ra) return -N(rb, ra);
    bool pa = ra < np, pb = rb < np;
    if (!pa && !pb) return -N(rs.negative_of(ra), rs.negative_of(rb));
    if (pa && pb) {
      int a = xs_a[g], b = xs_b[g];
      if (ra == a && rb == b) return string_p(a, b) + 1;
      // Jacobi identity on (e_x, e_y, e_{-a}) with x + y = g = a + b:
      //   N(x,y) N(g,-a) + [y-a] N(y,-a) N(y-a,x) + [x-a] N(-a,x) N(x-a,y) = 0
      Rat ngma = -Rat(N(a, b)) * rs.root_norm_sq[b] / rs.root_norm_sq[g];
      Rat rhs = 0;
      int na = rs.negative_of(a);
      int d1 = sum_index(rb, na);
      if (d1 >= 0) rhs -= Rat(N(rb, na)) * N(d1, ra);
      int d2 = sum_index(ra, na);
      if (d2 >= 0) rhs -= Rat(N(na, ra)) * N(d2, rb);
      Rat val = rhs / ngma;
      if (denominator(val) != 1) throw std::logic_error("non-integral structure constant");
      return val.convert_to<long long>();
    }
    // Mixed signs. Reduce to a pair of positive roots.
    if (pa && !pb) {
      if (g < np) {
        // x > 0, y < 0, x + y = s > 0: N(x,y) = -(s,s)/(x,x) N(-y, s)
        Rat val = -rs.root_norm_sq[g] / rs.root_norm_sq[ra] * N(rs.negative_of(rb), g);
        if (denominator(val) != 1) throw std::logic_error("non-integral structure constant");
        return val.convert_to<long long>();
      }
      return -N(rs.negative_of(ra), rs.negative_of(rb));
    }
    // !pa && pb
    return -N(rb, ra);
  }
};

}  // namespace

long long ChevAlgebra::n_constant(int ra, int rb) const {
  return n_table_[static_cast<size_t>(ra) * rs.roots.size() + rb];
}

int ChevAlgebra::string_p(int ra, int rb) const {
  return p_table_[static_cast<size_t>(ra) * rs.roots.size() + rb];
}

SparseVec ChevAlgebra::bracket_basis(int i, int j) const {
  SparseVec out;
  const int l = rs.rank;
  if (i < l && j < l) return out;  // Cartan abelian
  if (i < l) {  // [h_i, e_beta]
    out.add(j, rs.pairing(rs.roots[j - l], i));
    return out;
  }
  if (j < l) {
    out.add(i, -rs.pairing(rs.roots[i - l], j));
    return out;
  }
  int ra = i - l, rb = j - l;
  if (rs.negative_of(ra) == rb) {
    // [e_beta, e_{-beta}] = h_beta (sign: for beta negative this is -h_{-beta})
    const auto& c = rs.coroot[ra];
    for (int k = 0; k < l; ++k) out.add(k, c[k]);
    return out;
  }
  long long nv = n_constant(ra, rb);
  if (nv != 0) {
    RootCoord s = rs.roots[ra];
    for (int k = 0; k < l; ++k) s[k] += rs.roots[rb][k];
    out.add(l + rs.root_index(s), nv);
  }
  return out;
}

std::vector<Rat> ChevAlgebra::bracket(const std::vector<Rat>& x,
                                      const std::vector<Rat>& y) const {
  std::vector<Rat> out(dim, Rat(0));
  for (int i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j] == 0) continue;
      SparseVec s = bracket_basis(i, j);
      for (int k = 0; k < s.n; ++k) out[s.ent[k].first] += x[i] * y[j] * s.ent[k].second;
    }
  }
  return out;
}

Rat ChevAlgebra::killing_basis(int i, int j) const {
  const int l = rs.rank;
  if (i < l && j < l) return rs.gram(i, j);
  if (i < l || j < l) return Rat(0);
  int ra = i - l, rb = j - l;
  if (rs.negative_of(ra) != rb) return Rat(0);
  return killing_ee[ra];
}

Rat ChevAlgebra::killing(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
  Rat s = 0;
  const int l = rs.rank;
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      if (x[i] != 0 && y[j] != 0) s += x[i] * y[j] * rs.gram(i, j);
  for (size_t r = 0; r < rs.roots.size(); ++r) {
    int nr = rs.negative_of(static_cast<int>(r));
    if (x[l + r] != 0 && y[l + nr] != 0) s += x[l + r] * y[l + nr] * killing_ee[r];
  }
  return s;
}

std::complex<double> ChevAlgebra::killing(const std::vector<std::complex<double>>& x,
                                          const std::vector<std::complex<double>>& y) const {
  std::complex<double> s = 0;
  const int l = rs.rank;
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) s += x[i] * y[j] * to_double(rs.gram(i, j));
  for (size_t r = 0; r < rs.roots.size(); ++r) {
    int nr = rs.negative_of(static_cast<int>(r));
    s += x[l + r] * y[l + nr] * to_double(killing_ee[r]);
  }
  return s;
}

std::vector<std::complex<double>> ChevAlgebra::cartan_involution(
    const std::vector<std::complex<double>>& x) const {
  std::vector<std::complex<double>> out(dim, 0.0);
  const int l = rs.rank;
  for (int i = 0; i < l; ++i) out[i] = -std::conj(x[i]);
  for (size_t r = 0; r < rs.roots.size(); ++r)
    out[l + rs.negative_of(static_cast<int>(r))] = -std::conj(x[l + r]);
  return out;
}

std::vector<Rat> ChevAlgebra::cartan_involution_real(const std::vector<Rat>& x) const {
  std::vector<Rat> out(dim, Rat(0));
  const int l = rs.rank;
  for (int i = 0; i < l; ++i) out[i] = -x[i];
  for (size_t r = 0; r < rs.roots.size(); ++r)
    out[l + rs.negative_of(static_cast<int>(r))] = -x[l + r];
  return out;
}

ChevAlgebra build_chevalley(const RootSystem& rs) {
  ChevAlgebra a;
  a.rs = rs;
  a.dim = rs.rank + static_cast<int>(rs.roots.size());
  NBuilder nb(rs);
  size_t nr = rs.roots.size();
  a.n_table_.assign(nr * nr, 0);
  a.p_table_.assign(nr * nr, 0);
  for (size_t i = 0; i < nr; ++i)
    for (size_t j = 0; j < nr; ++j) {
      if (nb.sum_index(static_cast<int>(i), static_cast<int>(j)) >= 0) {
        a.n_table_[i * nr + j] = nb.N(static_cast<int>(i), static_cast<int>(j));
        a.p_table_[i * nr + j] = nb.string_p(static_cast<int>(i), static_cast<int>(j));
      }
    }

  // kappa(e_beta, e_{-beta}) by tracing ad(e_beta) ad(e_{-beta}) over the basis.
  a.killing_ee.resize(nr);
  for (size_t r = 0; r < nr; ++r) {
    int er = rs.rank + static_cast<int>(r);
    int enr = rs.rank + rs.negative_of(static_cast<int>(r));
    long long tr = 0;
    for (int x = 0; x < a.dim; ++x) {
      SparseVec y = a.bracket_basis(enr, x);
      for (int k = 0; k < y.n; ++k) {
        SparseVec z = a.bracket_basis(er, y.ent[k].first);
        for (int m = 0; m < z.n; ++m)
          if (z.ent[m].first == x) tr += y.ent[k].second * z.ent[m].second;
      }
    }
    a.killing_ee[r] = Rat(tr);
  }
  return a;
}

std::string ChevAlgebra::to_json() const {
  std::ostringstream os;
  const int l = rs.rank;
  os << "{\"type\":\"" << rs.type.name() << "\",\"rank\":" << l << ",\"dim\":" << dim
     << ",\"cartan\":[";
  for (int i = 0; i < l; ++i) {
    os << (i ? "," : "") << "[";
    for (int j = 0; j < l; ++j) os << (j ? "," : "") << rs.cartan[i][j];
    os << "]";
  }
  os << "],\"n_positive\":" << rs.n_positive << ",\"roots\":[";
  for (size_t r = 0; r < rs.roots.size(); ++r) {
    os << (r ? "," : "") << "[";
    for (int i = 0; i < l; ++i) os << (i ? "," : "") << rs.roots[r][i];
    os << "]";
  }
  os << "],\"basis\":[";
  for (int i = 0; i < l; ++i) os << (i ? "," : "") << "\"h" << i + 1 << "\"";
  for (size_t r = 0; r < rs.roots.size(); ++r) {
    os << ",\"e[";
    for (int i = 0; i < l; ++i) os << (i ? "," : "") << rs.roots[r][i];
    os << "]\"";
  }
  os << "],\"killing_gram\":[";
  for (int i = 0; i < l; ++i) {
    os << (i ? "," : "") << "[";
    for (int j = 0; j < l; ++j) os << (j ? "," : "") << "\"" << rat_str(rs.gram(i, j)) << "\"";
    os << "]";
  }
  os << "],\"killing_ee\":[";
  for (size_t r = 0; r < rs.roots.size(); ++r)
    os << (r ? "," : "") << "\"" << rat_str(killing_ee[r]) << "\"";
  os << "],\"structure\":[";
  bool first = true;
  for (size_t i = 0; i < rs.roots.size(); ++i)
    for (size_t j = 0; j < rs.roots.size(); ++j) {
      long long n = n_constant(static_cast<int>(i), static_cast<int>(j));
      if (n == 0) continue;
      os << (first ? "" : ",") << "[" << i << "," << j << "," << n << "]";
      first = false;
    }
  os << "]}";
  return os.str();
}

}  // namespace operlab
