#include "vknot/homology.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <boost/integer/common_factor_rt.hpp>

#include "vknot/bareiss.hpp"
#include "vknot/bigint.hpp"
#include "vknot/error.hpp"

namespace vknot {

bool CubeWord::degenerate() const {
  for (std::size_t i = 0; i + 1 < labels.size(); ++i)
    if (labels[i] == labels[i + 1]) return true;
  return false;
}

CubeOperations::CubeOperations(const FiniteBirack& b) : m(b.order()) {
  const auto n = static_cast<std::size_t>(m * m);
  sup.assign(n, -1);
  sub.assign(n, -1);
  for (int a = 0; a < m; ++a)
    for (int c = 0; c < m; ++c) {
      const int bb = b.down(c, a);
      auto& slot = sub[static_cast<std::size_t>(bb * m + a)];
      if (slot >= 0) throw Error(ErrorCode::InvalidInput, "lower operation is not right invertible");
      slot = c;
      sup[static_cast<std::size_t>(a * m + bb)] = b.up(a, c);
    }
}

bool CubeOperations::biquandle() const {
  for (int a = 0; a < m; ++a)
    if (up(a, a) != down(a, a)) return false;
  return true;
}

FiniteBirack birack_from_cube_operations(int m, const std::vector<int>& sup, const std::vector<int>& sub) {
  const auto n = static_cast<std::size_t>(m * m);
  std::vector<int> up(n, -1), down(n, -1), upbar(n, -1), downbar(n, -1);
  for (int a = 0; a < m; ++a)
    for (int bb = 0; bb < m; ++bb) {
      const int c = sub[static_cast<std::size_t>(bb * m + a)];
      auto& slot = down[static_cast<std::size_t>(c * m + a)];
      if (slot >= 0) throw Error(ErrorCode::InvalidInput, "lower operation is not right invertible");
      slot = bb;
      up[static_cast<std::size_t>(a * m + c)] = sup[static_cast<std::size_t>(a * m + bb)];
    }
  // Barred tables invert S(x, y) = (y_x, x^y) as (upbar(v, u), downbar(u, v)).
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      const int u = down[static_cast<std::size_t>(y * m + x)], v = up[static_cast<std::size_t>(x * m + y)];
      auto& ub = upbar[static_cast<std::size_t>(v * m + u)];
      if (ub >= 0) throw Error(ErrorCode::InvalidInput, "switch is not a bijection");
      ub = x;
      downbar[static_cast<std::size_t>(u * m + v)] = y;
    }
  return FiniteBirack(m, std::move(up), std::move(down), std::move(upbar), std::move(downbar));
}

namespace {

CubeWord face_with(const CubeOperations& ops, const CubeWord& w, std::size_t i, FaceSign sign) {
  if (i < 1 || i > w.dimension()) throw Error(ErrorCode::IndexOutOfRange, "face index " + std::to_string(i));
  const int ai = w.labels[i - 1];
  CubeWord out;
  for (std::size_t j = 1; j <= w.dimension(); ++j) {
    if (j == i) continue;
    const int aj = w.labels[j - 1];
    if (sign == FaceSign::Minus) out.labels.push_back(aj);
    else out.labels.push_back(j < i ? ops.up(aj, ai) : ops.down(aj, ai));
  }
  return out;
}

}  // namespace

CubeWord face(const FiniteBirack& b, const CubeWord& w, std::size_t i, FaceSign sign) {
  for (int a : w.labels)
    if (a < 0 || a >= b.order()) throw Error(ErrorCode::InvalidInput, "label out of range");
  return face_with(CubeOperations(b), w, i, sign);
}

namespace {

std::size_t power(std::size_t m, std::size_t n) {
  std::size_t r = 1;
  for (std::size_t k = 0; k < n; ++k) r *= m;
  return r;
}

CubeWord cube_at(std::size_t index, std::size_t m, std::size_t n) {
  CubeWord w;
  w.labels.assign(n, 0);
  for (std::size_t k = n; k-- > 0; index /= m) w.labels[k] = static_cast<int>(index % m);
  return w;
}

std::size_t index_of(const CubeWord& w, std::size_t m) {
  std::size_t idx = 0;
  for (int a : w.labels) idx = idx * m + static_cast<std::size_t>(a);
  return idx;
}

bool composes_to_zero(const IntMatrix& lower, const IntMatrix& upper) {
  // lower: C_{n-1} -> C_{n-2}, upper: C_n -> C_{n-1}
  if (lower.empty() || upper.empty()) return true;
  const std::size_t mid = upper.size(), cols = upper[0].size();
  for (std::size_t r = 0; r < lower.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      std::int64_t sum = 0;
      for (std::size_t k = 0; k < mid; ++k) sum += lower[r][k] * upper[k][c];
      if (sum != 0) return false;
    }
  return true;
}

}  // namespace

ChainComplex boundary_matrices(const FiniteBirack& b, std::size_t max_dim, std::size_t cube_cap) {
  const auto m = static_cast<std::size_t>(b.order());
  if (m == 0) throw Error(ErrorCode::InvalidInput, "empty birack");
  for (std::size_t n = 1; n <= max_dim; ++n)
    if (power(m, n) > cube_cap)
      throw Error(ErrorCode::SizeCap, std::to_string(m) + "^" + std::to_string(n) + " cubes exceed the cap");
  const CubeOperations ops(b);
  ChainComplex c;
  c.birack = b;
  c.max_dim = max_dim;
  c.ranks.assign(max_dim + 1, 0);
  c.boundary.resize(max_dim + 1);
  for (std::size_t n = 1; n <= max_dim; ++n) {
    c.ranks[n] = power(m, n);
    if (n == 1) {
      c.boundary[1] = IntMatrix(0, std::vector<std::int64_t>(m, 0));
      continue;
    }
    IntMatrix d(power(m, n - 1), std::vector<std::int64_t>(c.ranks[n], 0));
    // Each column is written by one task only.
    parallel_for(c.ranks[n], [&](std::size_t col) {
      const CubeWord w = cube_at(col, m, n);
      for (std::size_t i = 1; i <= n; ++i) {
        const std::int64_t s = i % 2 ? -1 : 1;
        d[index_of(face_with(ops, w, i, FaceSign::Minus), m)][col] += s;
        d[index_of(face_with(ops, w, i, FaceSign::Plus), m)][col] -= s;
      }
    });
    c.boundary[n] = std::move(d);
  }
  for (std::size_t n = 3; n <= max_dim; ++n)
    if (!composes_to_zero(c.boundary[n - 1], c.boundary[n]))
      throw Error(ErrorCode::InvalidInput, "boundary does not square to zero in degree " + std::to_string(n));
  return c;
}

IntMatrix quotient_boundary(const ChainComplex& c, std::size_t n) {
  const auto m = static_cast<std::size_t>(c.birack.order());
  auto keep = [&](std::size_t dim) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < c.ranks[dim]; ++k)
      if (!cube_at(k, m, dim).degenerate()) idx.push_back(k);
    return idx;
  };
  const auto cols = keep(n);
  if (n == 1) return IntMatrix(0, std::vector<std::int64_t>(cols.size(), 0));
  const auto rows = keep(n - 1);
  IntMatrix q(rows.size(), std::vector<std::int64_t>(cols.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t k = 0; k < cols.size(); ++k) q[r][k] = c.boundary[n][rows[r]][cols[k]];
  return q;
}

std::vector<std::int64_t> smith_invariants(const IntMatrix& input) {
  const std::size_t rows = input.size(), cols = rows ? input[0].size() : 0;
  std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = input[r][c];
  std::vector<BigInt> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero magnitude in the remaining block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (a[r][c] != 0 && (pr == rows || abs(a[r][c]) < abs(a[pr][pc]))) {
            pr = r;
            pc = c;
          }
      if (pr == rows) break;
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a[r][t] == 0) continue;
        const BigInt q = a[r][t] / a[t][t];
        for (std::size_t c = t; c < cols; ++c) a[r][c] -= q * a[t][c];
        clean = clean && a[r][t] == 0;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a[t][c] == 0) continue;
        const BigInt q = a[t][c] / a[t][t];
        for (std::size_t r = t; r < rows; ++r) a[r][c] -= q * a[r][t];
        clean = clean && a[t][c] == 0;
      }
      if (clean) break;
    }
    if (a[t][t] == 0) break;
    diag.push_back(abs(a[t][t]));
  }
  // Diagonal to Smith form: replace pairs by (gcd, lcm) until each divides the next.
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      const BigInt g = boost::integer::gcd(diag[i], diag[j]);
      const BigInt l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  std::vector<std::int64_t> out;
  for (const auto& d : diag) out.push_back(static_cast<std::int64_t>(d));
  return out;
}

std::string HomologyGroup::to_string() const {
  std::string out;
  if (free_rank) out = "Z" + (free_rank > 1 ? "^" + std::to_string(free_rank) : std::string());
  for (auto t : torsion) out += (out.empty() ? "" : " + ") + ("Z" + std::to_string(t));
  return out.empty() ? "0" : out;
}

namespace {

HomologyGroup homology_from(std::size_t dim, const IntMatrix& d_k, const IntMatrix& d_k1) {
  const auto inv_k = smith_invariants(d_k);
  const auto inv_k1 = smith_invariants(d_k1);
  HomologyGroup h;
  h.free_rank = dim - inv_k.size() - inv_k1.size();
  for (auto f : inv_k1)
    if (f > 1) h.torsion.push_back(f);
  return h;
}

}  // namespace

HomologyGroup homology(const ChainComplex& c, std::size_t k, HomologyVariant variant) {
  if (k < 1 || k + 1 > c.max_dim)
    throw Error(ErrorCode::IndexOutOfRange, "homology degree needs boundaries through degree k+1");
  if (variant == HomologyVariant::Full) return homology_from(c.ranks[k], c.boundary[k], c.boundary[k + 1]);
  if (!CubeOperations(c.birack).biquandle()) throw Error(ErrorCode::NotBiquandle, "quotient needs a^a = a_a");
  const auto dk = quotient_boundary(c, k), dk1 = quotient_boundary(c, k + 1);
  std::size_t dim = 0;
  const auto m = static_cast<std::size_t>(c.birack.order());
  for (std::size_t idx = 0; idx < c.ranks[k]; ++idx) dim += !cube_at(idx, m, k).degenerate();
  return homology_from(dim, dk, dk1);
}

std::vector<std::array<int, 3>> double_pair_set(const FiniteBirack& b) {
  const CubeOperations ops(b);
  std::vector<std::array<int, 3>> w;
  for (int a = 0; a < b.order(); ++a)
    for (int bb = 0; bb < b.order(); ++bb)
      for (int c = 0; c < b.order(); ++c)
        if (ops.up(c, a) == ops.up(c, bb)) w.push_back({a, bb, c});
  return w;
}

FiniteBirack double_birack(const FiniteBirack& b) {
  const CubeOperations ops(b);
  const int m = b.order(), mm = m * m;
  std::vector<int> sup(static_cast<std::size_t>(mm * mm)), sub(sup.size());
  for (int p = 0; p < mm; ++p)
    for (int q = 0; q < mm; ++q) {
      const int a = p / m, c = p % m, bb = q / m, d = q % m;
      sup[static_cast<std::size_t>(p * mm + q)] = ops.up(a, bb) * m + ops.up(c, bb);
      sub[static_cast<std::size_t>(q * mm + p)] = ops.down(bb, a) * m + ops.up(d, a);
    }
  return birack_from_cube_operations(mm, sup, sub);
}

std::string GroupPresentation::to_string() const {
  std::string out = "< ";
  for (std::size_t g = 0; g < generators; ++g) out += (g ? ", x" : "x") + std::to_string(g);
  out += " | ";
  for (std::size_t r = 0; r < relators.size(); ++r) {
    if (r) out += ", ";
    for (std::size_t k = 0; k < relators[r].size(); ++k) {
      if (k) out += '*';
      out += "x" + std::to_string(relators[r][k].first);
      if (relators[r][k].second < 0) out += "^-1";
    }
  }
  return out + " >";
}

GroupPresentation pi1_presentation(const FiniteBirack& b) {
  const CubeOperations ops(b);
  GroupPresentation p;
  p.generators = static_cast<std::size_t>(b.order());
  for (int x = 0; x < b.order(); ++x)
    for (int y = 0; y < b.order(); ++y)
      p.relators.push_back({{x, 1}, {ops.down(y, x), 1}, {ops.up(x, y), -1}, {y, -1}});
  return p;
}

HomologyGroup abelianization(const GroupPresentation& p) {
  IntMatrix m;
  for (const auto& rel : p.relators) {
    std::vector<std::int64_t> row(p.generators, 0);
    for (const auto& [g, e] : rel) row[static_cast<std::size_t>(g)] += e;
    m.push_back(std::move(row));
  }
  const auto inv = smith_invariants(m);
  HomologyGroup h;
  h.free_rank = p.generators - inv.size();
  for (auto f : inv)
    if (f > 1) h.torsion.push_back(f);
  return h;
}

}  // namespace vknot
