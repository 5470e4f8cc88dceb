#include "vknot/finite_algebra.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "vknot/error.hpp"

namespace vknot {

FiniteBirack::FiniteBirack(int order, std::vector<int> up, std::vector<int> down, std::vector<int> upbar,
                           std::vector<int> downbar)
    : m_(order), up_(std::move(up)), down_(std::move(down)), upbar_(std::move(upbar)), downbar_(std::move(downbar)) {
  if (m_ < 1) throw Error(ErrorCode::InvalidInput, "order must be positive");
  const auto sz = static_cast<std::size_t>(m_ * m_);
  for (const auto* t : {&up_, &down_, &upbar_, &downbar_}) {
    if (t->size() != sz) throw Error(ErrorCode::InvalidInput, "operation table has wrong size");
    for (int v : *t)
      if (v < 0 || v >= m_) throw Error(ErrorCode::InvalidInput, "table entry out of range");
  }
}

FiniteBirack FiniteBirack::relabel(const std::vector<int>& perm) const {
  const auto sz = static_cast<std::size_t>(m_ * m_);
  std::vector<int> u(sz), d(sz), ub(sz), db(sz);
  for (int a = 0; a < m_; ++a)
    for (int b = 0; b < m_; ++b) {
      const auto k = static_cast<std::size_t>(perm[static_cast<std::size_t>(a)] * m_ + perm[static_cast<std::size_t>(b)]);
      const auto p = [&](int v) { return perm[static_cast<std::size_t>(v)]; };
      u[k] = p(up(a, b));
      d[k] = p(down(a, b));
      ub[k] = p(upbar(a, b));
      db[k] = p(downbar(a, b));
    }
  return {m_, u, d, ub, db};
}

std::vector<int> FiniteBirack::flat() const {
  std::vector<int> out;
  for (const auto* t : {&up_, &down_, &upbar_, &downbar_}) out.insert(out.end(), t->begin(), t->end());
  return out;
}

namespace {

std::string triple(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

std::string pair_str(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

}  // namespace

AxiomReport check_axioms(const FiniteBirack& B) {
  AxiomReport r;
  const int m = B.order();
  const auto fail = [&](const std::string& s) { r.failures.push_back(s); };

  // Right invertibility: every column of every table is a permutation.
  bool invertible = true;
  const std::pair<const char*, int (FiniteBirack::*)(int, int) const> ops[] = {
      {"up", &FiniteBirack::up}, {"down", &FiniteBirack::down},
      {"upbar", &FiniteBirack::upbar}, {"downbar", &FiniteBirack::downbar}};
  for (const auto& [name, op] : ops) {
    for (int b = 0; b < m && invertible; ++b) {
      std::vector<bool> hit(static_cast<std::size_t>(m), false);
      for (int a = 0; a < m; ++a) hit[static_cast<std::size_t>((B.*op)(a, b))] = true;
      if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
        invertible = false;
        fail(std::string("right invertibility: ") + name + "(-, " + std::to_string(b) + ") is not a bijection");
      }
    }
  }

  // Inverse crossings cancel (directly oriented bigon).
  bool inverse = true;
  for (int a = 0; a < m && inverse; ++a)
    for (int b = 0; b < m && inverse; ++b) {
      const int u = B.up(a, b), o = B.down(b, a);
      const int ub = B.upbar(a, b), ob = B.downbar(b, a);
      if (B.upbar(u, o) != a || B.downbar(o, u) != b || B.up(ub, ob) != a || B.down(ob, ub) != b) {
        inverse = false;
        fail("inverse crossings: witness " + pair_str(a, b));
      }
    }

  // Reverse-oriented bigon: solutions x, y and z, t for every pair.
  bool exists = true, unique = true;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int xy = 0, zt = 0;
      for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
          xy += B.down(x, b) == a && B.upbar(y, a) == b && B.up(b, x) == y && B.downbar(a, y) == x;
          zt += B.up(y, a) == b && B.down(a, y) == x && B.downbar(x, b) == a && B.upbar(b, x) == y;
        }
      if (xy == 0 || zt == 0) {
        if (exists) fail("reverse bigon: no solution at " + pair_str(a, b));
        exists = false;
      }
      if (xy > 1 || zt > 1) unique = false;
    }

  // Yang-Baxter equations, plain then barred.
  bool yb = true;
  const auto yang_baxter = [&](auto up, auto down, const char* tag) {
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        for (int c = 0; c < m; ++c) {
          const bool e1 = up(up(a, b), c) == up(up(a, down(c, b)), up(b, c));
          const bool e2 = down(down(c, b), a) == down(down(c, up(a, b)), down(b, a));
          const bool e3 = up(down(b, a), down(c, up(a, b))) == down(up(b, c), up(a, down(c, b)));
          if (!(e1 && e2 && e3)) {
            fail(std::string("Yang-Baxter (") + tag + "): witness " + triple(a, b, c));
            yb = false;
            return;
          }
        }
  };
  yang_baxter([&](int x, int y) { return B.up(x, y); }, [&](int x, int y) { return B.down(x, y); }, "plain");
  yang_baxter([&](int x, int y) { return B.upbar(x, y); }, [&](int x, int y) { return B.downbar(x, y); }, "barred");

  // Curls of both orientations and signs: exactly one completion per label.
  bool curls = true;
  for (int a = 0; a < m && curls; ++a) {
    int c1 = 0, c2 = 0, c3 = 0, c4 = 0;
    for (int x = 0; x < m; ++x) {
      c1 += B.down(a, x) == x && B.up(x, a) == a;
      c2 += B.up(a, x) == x && B.down(x, a) == a;
      c3 += B.downbar(a, x) == x && B.upbar(x, a) == a;
      c4 += B.upbar(a, x) == x && B.downbar(x, a) == a;
    }
    if (c1 != 1 || c2 != 1 || c3 != 1 || c4 != 1) {
      curls = false;
      fail("curl: label " + std::to_string(a) + " does not extend uniquely");
    }
  }

  r.birack = invertible && inverse && exists && yb;
  r.biquandle = r.birack && curls;
  r.strong = r.birack && unique;
  return r;
}

AxiomReport check_switch_axioms(const FiniteBirack& B) {
  AxiomReport r;
  const int m = B.order();
  using P = std::pair<int, int>;
  const auto S = [&](int a, int b) { return P{B.down(b, a), B.up(a, b)}; };
  const auto Sbar = [&](int a, int b) { return P{B.upbar(b, a), B.downbar(a, b)}; };

  bool inverse = true;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const auto [p, q] = Sbar(a, b);
      const auto [s, t] = S(a, b);
      if (S(p, q) != P{a, b} || Sbar(s, t) != P{a, b}) inverse = false;
    }
  if (!inverse) r.failures.push_back("switch and barred switch are not inverse");

  bool yb = true;
  for (int a = 0; a < m && yb; ++a)
    for (int b = 0; b < m && yb; ++b)
      for (int c = 0; c < m && yb; ++c) {
        // Left side acts on positions (1,2), (2,3), (1,2) in turn; right
        // side on (2,3), (1,2), (2,3).
        auto [x1, x2] = S(a, b);
        auto [y2, y3] = S(x2, c);
        auto [z1, z2] = S(x1, y2);
        const std::array<int, 3> lhs{z1, z2, y3};
        auto [p2, p3] = S(b, c);
        auto [q1, q2] = S(a, p2);
        auto [w2, w3] = S(q2, p3);
        const std::array<int, 3> rhs{q1, w2, w3};
        if (lhs != rhs) {
          yb = false;
          r.failures.push_back("switch Yang-Baxter: witness " + triple(a, b, c));
        }
      }

  // Sideways maps (under in, over out) -> (over in, under out).
  bool sideways = true, diagonal = true;
  for (const auto& sw : {std::function<P(int, int)>(S), std::function<P(int, int)>(Sbar)}) {
    std::vector<int> hits(static_cast<std::size_t>(m * m), 0), image(static_cast<std::size_t>(m * m), -1);
    for (int u = 0; u < m; ++u)
      for (int o = 0; o < m; ++o) {
        const auto [o_out, u_out] = sw(u, o);
        const auto key = static_cast<std::size_t>(u * m + o_out);
        ++hits[key];
        image[key] = o * m + u_out;
      }
    for (int h : hits) sideways &= h == 1;
    if (sideways)
      for (int a = 0; a < m; ++a) {
        const int img = image[static_cast<std::size_t>(a * m + a)];
        diagonal &= img / m == img % m;
      }
  }
  if (!sideways) r.failures.push_back("sideways map is not a bijection");
  else if (!diagonal) r.failures.push_back("sideways map moves the diagonal");

  bool invertible = true;
  for (int b = 0; b < m; ++b) {
    std::set<int> up_col, down_col, upbar_col, downbar_col;
    for (int a = 0; a < m; ++a) {
      up_col.insert(S(a, b).second);
      down_col.insert(S(b, a).first);
      upbar_col.insert(Sbar(b, a).first);
      downbar_col.insert(Sbar(a, b).second);
    }
    for (const auto* col : {&up_col, &down_col, &upbar_col, &downbar_col})
      invertible &= static_cast<int>(col->size()) == m;
  }
  if (!invertible) r.failures.push_back("switch coordinates are not right invertible");

  r.birack = inverse && yb && sideways && invertible;
  r.biquandle = r.birack && diagonal;
  // Bijective sideways maps give unique bigon solutions.
  r.strong = r.birack;
  return r;
}

FiniteBirack canonical_form(const FiniteBirack& b) {
  std::vector<int> perm(static_cast<std::size_t>(b.order()));
  std::iota(perm.begin(), perm.end(), 0);
  FiniteBirack best = b;
  auto best_flat = b.flat();
  do {
    auto cand = b.relabel(perm);
    auto f = cand.flat();
    if (f < best_flat) {
      best_flat = std::move(f);
      best = std::move(cand);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

namespace {

// Column-permutation tables: column b of the result is perms[choice[b]].
std::vector<std::vector<int>> all_permutations(int m) {
  std::vector<int> p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<std::vector<int>> column_tables(int m) {
  const auto perms = all_permutations(m);
  std::vector<std::vector<int>> tables;
  std::vector<std::size_t> choice(static_cast<std::size_t>(m), 0);
  for (;;) {
    std::vector<int> t(static_cast<std::size_t>(m * m));
    for (int b = 0; b < m; ++b)
      for (int a = 0; a < m; ++a) t[static_cast<std::size_t>(a * m + b)] = perms[choice[static_cast<std::size_t>(b)]][static_cast<std::size_t>(a)];
    tables.push_back(std::move(t));
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == perms.size()) choice[k++] = 0;
    if (k == choice.size()) return tables;
  }
}

// Barred tables from the inverse of the positive crossing map.
std::optional<FiniteBirack> with_inverse(int m, const std::vector<int>& up, const std::vector<int>& down) {
  const auto sz = static_cast<std::size_t>(m * m);
  std::vector<int> upbar(sz, -1), downbar(sz, -1);
  for (int u = 0; u < m; ++u)
    for (int o = 0; o < m; ++o) {
      const int uo = up[static_cast<std::size_t>(u * m + o)], oo = down[static_cast<std::size_t>(o * m + u)];
      auto& slot = upbar[static_cast<std::size_t>(uo * m + oo)];
      if (slot >= 0) return std::nullopt;
      slot = u;
      downbar[static_cast<std::size_t>(oo * m + uo)] = o;
    }
  return FiniteBirack(m, up, down, upbar, downbar);
}

}  // namespace

std::vector<FiniteBirack> enumerate_biracks(int m, BirackFamily family,
                                            const std::function<bool(const FiniteBirack&)>& keep) {
  if (m < 1) throw Error(ErrorCode::InvalidInput, "order must be positive");
  const bool racks = family == BirackFamily::Racks || family == BirackFamily::Quandles;
  if (m > (racks ? 4 : 3)) throw Error(ErrorCode::SizeCap, "enumeration limited to order 3 (order 4 for racks)");
  const bool need_biquandle = family == BirackFamily::Biquandles || family == BirackFamily::Quandles;
  const auto tables = column_tables(m);
  std::vector<int> identity(static_cast<std::size_t>(m * m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) identity[static_cast<std::size_t>(a * m + b)] = a;

  std::set<std::vector<int>> seen;
  std::vector<FiniteBirack> out;
  const auto consider = [&](const std::vector<int>& up, const std::vector<int>& down) {
    auto cand = with_inverse(m, up, down);
    if (!cand) return;
    const auto rep = check_axioms(*cand);
    if (!rep.birack || (need_biquandle && !rep.biquandle)) return;
    auto canon = canonical_form(*cand);
    if (!seen.insert(canon.flat()).second) return;
    if (keep && !keep(canon)) return;
    out.push_back(std::move(canon));
  };
  for (const auto& up : tables) {
    if (racks) consider(up, identity);
    else
      for (const auto& down : tables) consider(up, down);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.flat() < b.flat(); });
  return out;
}

FiniteBirack trivial_birack(int m) {
  std::vector<int> t(static_cast<std::size_t>(m * m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) t[static_cast<std::size_t>(a * m + b)] = a;
  return {m, t, t, t, t};
}

FiniteBirack rack_from_table(int m, const std::vector<int>& table) {
  const auto triv = trivial_birack(m);
  auto r = with_inverse(m, table, triv.down_table());
  if (!r) throw Error(ErrorCode::InvalidInput, "rack table columns must be permutations");
  return *r;
}

FiniteBirack dihedral_quandle(int m) {
  std::vector<int> t(static_cast<std::size_t>(m * m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) t[static_cast<std::size_t>(a * m + b)] = ((2 * b - a) % m + m) % m;
  return rack_from_table(m, t);
}

namespace {

class ColoringSearch {
 public:
  ColoringSearch(const GaussCode& code, const FiniteBirack& b) : lay_(code), b_(b) {
    const auto e = lay_.size();
    label_.assign(e, -1);
    touching_.resize(e);
    for (int id = 1; id <= static_cast<int>(lay_.chord_count()); ++id) {
      const auto& ch = lay_.chord(id);
      Crossing x{lay_.prev(ch.under), lay_.prev(ch.over), ch.under, ch.over, ch.sign > 0};
      const auto k = crossings_.size();
      crossings_.push_back(x);
      for (auto edge : {x.ui, x.oi, x.uo, x.oo}) touching_[edge].push_back(k);
    }
  }

  std::uint64_t count() {
    std::uint64_t total = search(0);
    for (std::size_t i = 0; i < lay_.free_loops(); ++i) total *= static_cast<std::uint64_t>(b_.order());
    return total;
  }

 private:
  struct Crossing {
    std::size_t ui, oi, uo, oo;
    bool positive;
  };

  bool assign(std::size_t edge, int value) {
    if (label_[edge] >= 0) return label_[edge] == value;
    label_[edge] = value;
    trail_.push_back(edge);
    for (auto k : touching_[edge]) {
      const auto& x = crossings_[k];
      const int u = label_[x.ui], o = label_[x.oi];
      if (u < 0 || o < 0) continue;
      const int uo = x.positive ? b_.up(u, o) : b_.upbar(u, o);
      const int oo = x.positive ? b_.down(o, u) : b_.downbar(o, u);
      if (!assign(x.uo, uo) || !assign(x.oo, oo)) return false;
    }
    return true;
  }

  std::uint64_t search(std::size_t from) {
    while (from < label_.size() && label_[from] >= 0) ++from;
    if (from == label_.size()) return 1;
    std::uint64_t total = 0;
    for (int v = 0; v < b_.order(); ++v) {
      const auto mark = trail_.size();
      if (assign(from, v)) total += search(from + 1);
      while (trail_.size() > mark) {
        label_[trail_.back()] = -1;
        trail_.pop_back();
      }
    }
    return total;
  }

  CodeLayout lay_;
  const FiniteBirack& b_;
  std::vector<int> label_;
  std::vector<std::vector<std::size_t>> touching_;
  std::vector<Crossing> crossings_;
  std::vector<std::size_t> trail_;
};

}  // namespace

std::uint64_t colorings(const GaussCode& code, const FiniteBirack& b) {
  if (code.kind() != CodeKind::Classical) throw Error(ErrorCode::InvalidInput, "colorings need a classical code");
  return ColoringSearch(code, b).count();
}

bool InvolutoryQuandle::valid() const {
  for (int a = 0; a < m; ++a) {
    if (op(a, a) != a) return false;
    for (int b = 0; b < m; ++b) {
      if (op(op(a, b), b) != a) return false;
      for (int c = 0; c < m; ++c)
        if (op(op(a, b), c) != op(op(a, c), op(b, c))) return false;
    }
  }
  return true;
}

std::vector<InvolutoryQuandle> enumerate_involutory_quandles(int m) {
  if (m < 1 || m > 5) throw Error(ErrorCode::SizeCap, "involutory quandles enumerated up to order 5");
  // Column b is an involution fixing b.
  std::vector<std::vector<int>> involutions;
  for (const auto& p : all_permutations(m)) {
    bool inv = true;
    for (int a = 0; a < m; ++a) inv &= p[static_cast<std::size_t>(p[static_cast<std::size_t>(a)])] == a;
    if (inv) involutions.push_back(p);
  }
  std::vector<std::vector<std::size_t>> per_col(static_cast<std::size_t>(m));
  for (int b = 0; b < m; ++b)
    for (std::size_t k = 0; k < involutions.size(); ++k)
      if (involutions[k][static_cast<std::size_t>(b)] == b) per_col[static_cast<std::size_t>(b)].push_back(k);

  std::set<std::vector<int>> seen;
  std::vector<InvolutoryQuandle> out;
  const auto perms = all_permutations(m);
  std::vector<std::size_t> choice(static_cast<std::size_t>(m), 0);
  for (;;) {
    InvolutoryQuandle q{m, std::vector<int>(static_cast<std::size_t>(m * m))};
    for (int b = 0; b < m; ++b)
      for (int a = 0; a < m; ++a)
        q.table[static_cast<std::size_t>(a * m + b)] =
            involutions[per_col[static_cast<std::size_t>(b)][choice[static_cast<std::size_t>(b)]]][static_cast<std::size_t>(a)];
    if (q.valid()) {
      std::vector<int> best = q.table;
      for (const auto& p : perms) {
        std::vector<int> t(q.table.size());
        for (int a = 0; a < m; ++a)
          for (int b = 0; b < m; ++b)
            t[static_cast<std::size_t>(p[static_cast<std::size_t>(a)] * m + p[static_cast<std::size_t>(b)])] =
                p[static_cast<std::size_t>(q.op(a, b))];
        best = std::min(best, t);
      }
      if (seen.insert(best).second) out.push_back({m, best});
    }
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == per_col[k].size()) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.table < b.table; });
  return out;
}

InvolutoryQuandle dihedral_iq(int m) {
  InvolutoryQuandle q{m, std::vector<int>(static_cast<std::size_t>(m * m))};
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) q.table[static_cast<std::size_t>(a * m + b)] = ((2 * b - a) % m + m) % m;
  return q;
}

std::uint64_t iq_colorings(const GaussCode& code, const InvolutoryQuandle& q) {
  const auto triv = trivial_birack(q.m);
  return colorings(code, FiniteBirack(q.m, q.table, triv.down_table(), q.table, triv.down_table()));
}

FiniteBirack parse_birack(std::string_view text) {
  std::istringstream in{std::string(text)};
  int m = 0;
  if (!(in >> m) || m < 1) throw Error(ErrorCode::SyntaxError, "birack text must start with a positive order");
  std::vector<std::vector<int>> t(4, std::vector<int>(static_cast<std::size_t>(m * m)));
  for (auto& table : t)
    for (auto& v : table)
      if (!(in >> v)) throw Error(ErrorCode::SyntaxError, "birack text needs four m x m tables");
  std::string extra;
  if (in >> extra) throw Error(ErrorCode::SyntaxError, "trailing input after birack tables");
  return {m, t[0], t[1], t[2], t[3]};
}

std::string format_birack(const FiniteBirack& b) {
  std::ostringstream out;
  const int m = b.order();
  out << m << '\n';
  for (const auto* t : {&b.up_table(), &b.down_table(), &b.upbar_table(), &b.downbar_table()}) {
    for (int a = 0; a < m; ++a) {
      for (int c = 0; c < m; ++c) out << (c ? " " : "") << (*t)[static_cast<std::size_t>(a * m + c)];
      out << '\n';
    }
    out << '\n';
  }
  return out.str();
}

FiniteBirack named_birack(std::string_view name) {
  if (name.size() >= 2 && (name[0] == 'R' || name[0] == 'T')) {
    int m = 0;
    bool digits = true;
    for (char c : name.substr(1)) {
      if (c < '0' || c > '9') digits = false;
      else m = m * 10 + (c - '0');
    }
    if (digits && m >= 1 && m <= 64) return name[0] == 'R' ? dihedral_quandle(m) : trivial_birack(m);
  }
  return parse_birack(name);
}

}  // namespace vknot
