#include "ck/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace ck {

namespace {

std::vector<int> compose_perm(const std::vector<int>& f, const std::vector<int>& g) {
  // (f*g)(i) = f(g(i)); matches left-to-right table products acting on points
  std::vector<int> h(f.size());
  for (size_t i = 0; i < f.size(); ++i) h[i] = f[g[i]];
  return h;
}

std::string perm_name(const std::vector<int>& p) {
  // cycle notation, fixed points omitted; identity prints "e"
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      out += std::to_string(j);
      j = static_cast<size_t>(p[j]);
      if (!seen[j]) out += " ";
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

}  // namespace

void FiniteGroup::finish() {
  int n = order();
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table_[a][b] == 0) inverse_[a] = b;
  if (names_.empty()) {
    names_.resize(n);
    for (int a = 0; a < n; ++a) names_[a] = std::to_string(a);
  }
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                    std::vector<std::string> names) {
  int n = static_cast<int>(table.size());
  if (n == 0) fail("BadParameters", "empty multiplication table");
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != n)
      fail("BadParameters", "multiplication table is not square");
  for (const auto& row : table)
    for (int v : row)
      if (v < 0 || v >= n) fail("BadParameters", "table entry out of range");
  if (!names.empty() && static_cast<int>(names.size()) != n)
    fail("BadParameters", "name list length mismatch");
  FiniteGroup g;
  g.table_ = std::move(table);
  g.names_ = std::move(names);
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) fail("BadParameters", "cyclic group order must be positive");
  FiniteGroup g;
  g.table_.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.table_[a][b] = (a + b) % n;
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::from_permutations(int degree,
                                           const std::vector<std::vector<int>>& gens) {
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> elems = {id};
  std::map<std::vector<int>, int> index = {{id, 0}};
  for (size_t head = 0; head < elems.size(); ++head) {
    for (const auto& gen : gens) {
      if (static_cast<int>(gen.size()) != degree)
        fail("BadParameters", "generator degree mismatch");
      auto next = compose_perm(elems[head], gen);
      if (index.emplace(next, static_cast<int>(elems.size())).second)
        elems.push_back(next);
      if (elems.size() > 20000) fail("BadParameters", "permutation closure too large");
    }
  }
  int n = static_cast<int>(elems.size());
  FiniteGroup g;
  g.table_.assign(n, std::vector<int>(n));
  g.names_.resize(n);
  for (int a = 0; a < n; ++a) {
    g.names_[a] = perm_name(elems[a]);
    for (int b = 0; b < n; ++b) g.table_[a][b] = index.at(compose_perm(elems[a], elems[b]));
  }
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 5) fail("BadParameters", "symmetric group degree out of range");
  if (n == 1) return trivial();
  std::vector<int> swap01(n), cycle(n);
  std::iota(swap01.begin(), swap01.end(), 0);
  std::swap(swap01[0], swap01[1]);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  return from_permutations(n, {swap01, cycle});
}

FiniteGroup FiniteGroup::alternating(int n) {
  if (n < 3 || n > 5) fail("BadParameters", "alternating group degree out of range");
  std::vector<int> c3(n), other(n);
  std::iota(c3.begin(), c3.end(), 0);
  c3[0] = 1; c3[1] = 2; c3[2] = 0;
  std::iota(other.begin(), other.end(), 0);
  if (n == 4) {
    other[0] = 1; other[1] = 0; other[2] = 3; other[3] = 2;
  } else if (n == 5) {
    for (int i = 0; i < 5; ++i) other[i] = (i + 1) % 5;
  } else {
    other = c3;
  }
  return from_permutations(n, {c3, other});
}

FiniteGroup FiniteGroup::dihedral(int n) {
  if (n < 1) fail("BadParameters", "dihedral parameter must be positive");
  std::vector<int> rot(n + 1), refl(n + 1);
  // act on an (n+1)-point set: vertices 0..n-1 of the n-gon plus a fixed point,
  // so n = 1, 2 still produce faithful permutation models of order 2n
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  rot[n] = n;
  refl[n] = n;
  if (n <= 2) {
    // the reflection must be distinguished from rotations by an extra swap
    refl.push_back(n + 1);
    refl[n] = n + 1;
    refl[n + 1] = n;
    rot.push_back(n + 1);
    return from_permutations(n + 2, {rot, refl});
  }
  return from_permutations(n + 1, {rot, refl});
}

FiniteGroup FiniteGroup::quaternion8() {
  // i, j as signed-basis permutations of {1,-1,i,-i,j,-j,k,-k} -> indices 0..7
  // order: 1,-1,i,-i,j,-j,k,-k
  std::vector<int> mi = {2, 3, 1, 0, 6, 7, 5, 4};  // left mult by i
  std::vector<int> mj = {4, 5, 7, 6, 1, 0, 2, 3};  // left mult by j
  return from_permutations(8, {mi, mj});
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  int n = a.order() * b.order();
  FiniteGroup g;
  g.table_.assign(n, std::vector<int>(n));
  g.names_.resize(n);
  auto enc = [&](int x, int y) { return x * b.order() + y; };
  for (int x1 = 0; x1 < a.order(); ++x1)
    for (int y1 = 0; y1 < b.order(); ++y1) {
      g.names_[enc(x1, y1)] = "(" + a.name(x1) + "," + b.name(y1) + ")";
      for (int x2 = 0; x2 < a.order(); ++x2)
        for (int y2 = 0; y2 < b.order(); ++y2)
          g.table_[enc(x1, y1)][enc(x2, y2)] = enc(a.mul(x1, x2), b.mul(y1, y2));
    }
  g.finish();
  return g;
}

int FiniteGroup::pow(int a, long e) const {
  int base = e < 0 ? inv(a) : a;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  int acc = 0;
  while (k) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

bool FiniteGroup::is_abelian() const {
  int n = order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<std::string> FiniteGroup::check() const {
  std::vector<std::string> report;
  int n = order();
  for (int a = 0; a < n; ++a)
    if (table_[0][a] != a || table_[a][0] != a) {
      report.push_back("identity: element 0 is not a two-sided identity");
      break;
    }
  for (int a = 0; a < n; ++a)
    if (inverse_[a] < 0 || table_[a][inverse_[a]] != 0 || table_[inverse_[a]][a] != 0) {
      report.push_back("inverses: some element has no two-sided inverse");
      break;
    }
  bool assoc = true;
  for (int a = 0; a < n && assoc; ++a)
    for (int b = 0; b < n && assoc; ++b)
      for (int c = 0; c < n && assoc; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          report.push_back("associativity: (" + std::to_string(a) + "," + std::to_string(b) +
                           "," + std::to_string(c) + ") fails");
          assoc = false;
        }
  return report;
}

std::vector<int> FiniteGroup::subgroup_closure(std::vector<int> seed) const {
  std::set<int> members = {0};
  std::vector<int> frontier = {0};
  for (int s : seed)
    if (members.insert(s).second) frontier.push_back(s);
  for (size_t head = 0; head < frontier.size(); ++head)
    for (int s : seed) {
      int next = mul(frontier[head], s);
      if (members.insert(next).second) frontier.push_back(next);
      next = mul(frontier[head], inv(s));
      if (members.insert(next).second) frontier.push_back(next);
    }
  return {members.begin(), members.end()};
}

}  // namespace ck
