#include "ck/invariant.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace ck {

namespace {

size_t total_size(const std::vector<int>& dims) {
  size_t n = 1;
  for (int d : dims) n *= static_cast<size_t>(d);
  return n;
}

// grading of the letter crossing at point p, as seen from its lower circle
int point_grading(const HeegaardDiagram& d, const ChiLabeling& lab,
                  const CrossedModule& cm, PointId p) {
  auto [u, pt] = d.locate_point(p);
  int x = lab.alpha.at(u->id);
  return pt->sign > 0 ? x : cm.H.inv(x);
}

// replaces slot k by the matrix image, adjusting its dimension
void apply_to_slot(GradedTensor& t, size_t k, const Mat& m, int new_dim, const Field& f) {
  size_t before = 1;
  for (size_t i = 0; i < k; ++i) before *= static_cast<size_t>(t.dims[i]);
  size_t after = 1;
  for (size_t i = k + 1; i < t.dims.size(); ++i) after *= static_cast<size_t>(t.dims[i]);
  size_t old_dim = static_cast<size_t>(t.dims[k]);
  size_t nd = static_cast<size_t>(new_dim);
  Vec out = zero_vec(f, static_cast<int>(before * nd * after));
  for (size_t b = 0; b < before; ++b)
    for (size_t j = 0; j < old_dim; ++j)
      for (size_t a = 0; a < after; ++a) {
        const Scalar& c = t.coeffs[(b * old_dim + j) * after + a];
        if (c.is_zero()) continue;
        for (size_t i = 0; i < nd; ++i)
          if (!m[i][j].is_zero()) out[(b * nd + i) * after + a] += m[i][j] * c;
      }
  t.coeffs = std::move(out);
  t.dims[k] = new_dim;
}

std::vector<CircleId> sorted_lower_ids(const HeegaardDiagram& d) {
  std::vector<CircleId> ids;
  for (const auto& l : d.lowers) ids.push_back(l.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<CircleId> sorted_upper_ids(const HeegaardDiagram& d) {
  std::vector<CircleId> ids;
  for (const auto& u : d.uppers) ids.push_back(u.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

// lambda_{alpha(u)} of the ordered product of the chosen basis elements
GradedTensor upper_covector(const ChiLabeling& lab, const HopfChiCoalgebra& A,
                            const Integrals& I, const UpperCircle& u) {
  const Field& f = A.field;
  int x = lab.alpha.at(u.id);
  int dx = A.dim(x);
  GradedTensor t;
  size_t k = u.points.size();
  if (k == 0) {
    t.coeffs = {I.pair(x, A.comps[static_cast<size_t>(x)].unit)};
    return t;
  }
  for (const auto& p : u.points) {
    t.slots.push_back({p.id, x});
    t.dims.push_back(dx);
  }
  size_t n = total_size(t.dims);
  t.coeffs = zero_vec(f, static_cast<int>(n));
  std::vector<size_t> digit(k, 0);
  for (size_t flat = 0; flat < n; ++flat) {
    size_t rem = flat;
    for (size_t i = k; i-- > 0;) {
      digit[i] = rem % static_cast<size_t>(dx);
      rem /= static_cast<size_t>(dx);
    }
    Vec prod = zero_vec(f, dx);
    prod[digit[0]] = Scalar::from_int(f, 1);
    for (size_t i = 1; i < k; ++i) {
      Vec b = zero_vec(f, dx);
      b[digit[i]] = Scalar::from_int(f, 1);
      prod = A.mul(x, prod, b);
    }
    t.coeffs[flat] = I.pair(x, prod);
  }
  return t;
}

// sparse mirror of GradedTensor: nonzero coefficients only, sorted by flat
// index in the same row-major layout
struct SpTensor {
  std::vector<GradedTensor::Slot> slots;
  std::vector<int> dims;
  std::vector<std::pair<size_t, Scalar>> nz;
};

size_t cap_mul(size_t a, size_t b) {
  if (a == 0 || b == 0) return 0;
  const size_t cap = std::numeric_limits<size_t>::max();
  return a > cap / b ? cap : a * b;
}

std::vector<size_t> strides_of(const std::vector<int>& dims) {
  std::vector<size_t> s(dims.size());
  size_t acc = 1;
  for (size_t i = dims.size(); i-- > 0;) {
    s[i] = acc;
    acc *= static_cast<size_t>(dims[i]);
  }
  return s;
}

void add_into(std::map<size_t, Scalar>& m, size_t key, Scalar v) {
  auto it = m.find(key);
  if (it == m.end())
    m.emplace(key, std::move(v));
  else
    it->second += v;
}

std::vector<std::pair<size_t, Scalar>> compact(std::map<size_t, Scalar>& m) {
  std::vector<std::pair<size_t, Scalar>> out;
  for (auto& [k, v] : m)
    if (!v.is_zero()) out.emplace_back(k, std::move(v));
  return out;
}

// nonzero entries of each column
std::vector<std::vector<std::pair<size_t, Scalar>>> columns_of(const Mat& m, size_t cols) {
  std::vector<std::vector<std::pair<size_t, Scalar>>> out(cols);
  for (size_t r = 0; r < m.size(); ++r)
    for (size_t c = 0; c < cols && c < m[r].size(); ++c)
      if (!m[r][c].is_zero()) out[c].emplace_back(r, m[r][c]);
  return out;
}

// transported integral and the slot gradings along l, shared by both builders
struct LowerFrame {
  Vec w;
  int gw = 0;
  std::vector<int> gradings;
  std::vector<int> prefix;
};

LowerFrame lower_frame(const HeegaardDiagram& d, const ChiLabeling& lab,
                       const HopfChiCoalgebra& A, const Integrals& I,
                       const CircleId& lid) {
  const CrossedModule& cm = A.cm;
  const LowerCircle& l = d.lower(lid);
  auto bit = lab.beta.find(lid);
  if (bit == lab.beta.end()) fail("InvalidLabeling", "beta misses lower " + lid);
  int e = bit->second;
  LowerFrame fr;
  fr.w = apply(A.field, A.action[0][static_cast<size_t>(e)], I.Lambda);
  fr.gw = cm.chi_of(e);
  size_t n = l.points.size();
  if (n == 0) {
    if (fr.gw != 0)
      fail("InvalidLabeling", "lower " + lid + " has no points but a noncentral color");
    return fr;
  }
  for (PointId p : l.points) fr.gradings.push_back(point_grading(d, lab, cm, p));
  fr.prefix.resize(n);
  int acc = 0;
  for (size_t i = 0; i < n; ++i) {
    acc = cm.H.mul(acc, fr.gradings[i]);
    fr.prefix[i] = acc;
  }
  if (fr.prefix[n - 1] != fr.gw)
    fail("InvalidLabeling", "gradings along lower " + lid + " do not match its color");
  return fr;
}

// same recurrence as lower_tensor on the nonzero entries
SpTensor sparse_lower_tensor(const HeegaardDiagram& d, const ChiLabeling& lab,
                             const HopfChiCoalgebra& A, const Integrals& I,
                             const CircleId& lid) {
  const LowerCircle& l = d.lower(lid);
  LowerFrame fr = lower_frame(d, lab, A, I, lid);
  SpTensor t;
  size_t n = l.points.size();
  if (n == 0) {
    Scalar c = A.eps(fr.w);
    if (!c.is_zero()) t.nz.emplace_back(0, c);
    return t;
  }
  t.slots.push_back({l.points[0], fr.prefix[n - 1]});
  t.dims.push_back(A.dim(fr.prefix[n - 1]));
  for (size_t i = 0; i < fr.w.size(); ++i)
    if (!fr.w[i].is_zero()) t.nz.emplace_back(i, fr.w[i]);
  for (size_t k = n; k >= 2; --k) {
    int head = fr.prefix[k - 2];
    int leg = fr.gradings[k - 1];
    const Mat& m = A.coproduct[static_cast<size_t>(head)][static_cast<size_t>(leg)];
    size_t rest = 1;
    for (size_t i = 1; i < t.dims.size(); ++i) rest *= static_cast<size_t>(t.dims[i]);
    auto cols = columns_of(m, static_cast<size_t>(t.dims[0]));
    std::map<size_t, Scalar> out;
    for (const auto& [flat, c] : t.nz) {
      size_t a = flat / rest;
      size_t r = flat % rest;
      for (const auto& [row, mv] : cols[a]) add_into(out, row * rest + r, mv * c);
    }
    t.nz = compact(out);
    t.dims[0] = A.dim(leg);
    t.dims.insert(t.dims.begin(), A.dim(head));
    t.slots[0] = {l.points[k - 1], leg};
    t.slots.insert(t.slots.begin(), {l.points[0], head});
  }
  for (size_t i = 0; i < n; ++i) t.slots[i] = {l.points[i], fr.gradings[i]};
  return t;
}

// antipode on every negative slot; gradings become alpha(s)
SpTensor sp_apply_antipodes(SpTensor t, const HeegaardDiagram& d,
                            const ChiLabeling& lab, const HopfChiCoalgebra& A) {
  const CrossedModule& cm = A.cm;
  for (size_t k = 0; k < t.slots.size(); ++k) {
    auto [u, pt] = d.locate_point(t.slots[k].point);
    int x = lab.alpha.at(u->id);
    if (pt->sign > 0) {
      if (t.slots[k].grading != x)
        fail("GradingMismatch", "positive slot does not carry its upper label");
      continue;
    }
    if (t.slots[k].grading != cm.H.inv(x))
      fail("GradingMismatch", "negative slot does not carry the inverse label");
    const Mat& m = A.antipode[static_cast<size_t>(x)];
    size_t old_dim = static_cast<size_t>(t.dims[k]);
    size_t nd = static_cast<size_t>(A.dim(x));
    size_t after = 1;
    for (size_t i = k + 1; i < t.dims.size(); ++i) after *= static_cast<size_t>(t.dims[i]);
    auto cols = columns_of(m, old_dim);
    std::map<size_t, Scalar> out;
    for (const auto& [flat, c] : t.nz) {
      size_t a = flat % after;
      size_t j = (flat / after) % old_dim;
      size_t b = flat / (after * old_dim);
      for (const auto& [i, mv] : cols[j]) add_into(out, (b * nd + i) * after + a, mv * c);
    }
    t.nz = compact(out);
    t.dims[k] = static_cast<int>(nd);
    t.slots[k].grading = x;
  }
  return t;
}

SpTensor sp_outer(const SpTensor& a, const SpTensor& b) {
  SpTensor out;
  out.slots = a.slots;
  out.slots.insert(out.slots.end(), b.slots.begin(), b.slots.end());
  out.dims = a.dims;
  out.dims.insert(out.dims.end(), b.dims.begin(), b.dims.end());
  size_t nb = total_size(b.dims);
  for (const auto& [fa, ca] : a.nz)
    for (const auto& [fb, cb] : b.nz) out.nz.emplace_back(fa * nb + fb, ca * cb);
  return out;
}

// contraction over the shared point ids; remaining slots keep their order,
// first tensor's before the second's
SpTensor sp_contract_pair(const SpTensor& ta, const SpTensor& tb) {
  std::vector<int> a_pos, b_pos;  // aligned shared positions
  std::vector<bool> b_used(tb.slots.size(), false);
  for (size_t i = 0; i < ta.slots.size(); ++i)
    for (size_t j = 0; j < tb.slots.size(); ++j)
      if (!b_used[j] && ta.slots[i].point == tb.slots[j].point) {
        if (ta.slots[i].grading != tb.slots[j].grading || ta.dims[i] != tb.dims[j])
          fail("GradingMismatch",
               "point " + std::to_string(ta.slots[i].point) + " carries two gradings");
        a_pos.push_back(static_cast<int>(i));
        b_pos.push_back(static_cast<int>(j));
        b_used[j] = true;
        break;
      }

  std::vector<bool> a_shared(ta.slots.size(), false);
  for (int i : a_pos) a_shared[static_cast<size_t>(i)] = true;

  SpTensor out;
  std::vector<int> a_rest, b_rest;
  for (size_t i = 0; i < ta.slots.size(); ++i)
    if (!a_shared[i]) {
      a_rest.push_back(static_cast<int>(i));
      out.slots.push_back(ta.slots[i]);
      out.dims.push_back(ta.dims[i]);
    }
  for (size_t j = 0; j < tb.slots.size(); ++j)
    if (!b_used[j]) {
      b_rest.push_back(static_cast<int>(j));
      out.slots.push_back(tb.slots[j]);
      out.dims.push_back(tb.dims[j]);
    }
  size_t rb = 1;
  for (int j : b_rest) rb *= static_cast<size_t>(tb.dims[static_cast<size_t>(j)]);

  auto split = [](const SpTensor& t, const std::vector<int>& shared_pos,
                  const std::vector<int>& rest_pos) {
    std::vector<size_t> strides = strides_of(t.dims);
    std::map<size_t, std::vector<std::pair<size_t, Scalar>>> buckets;
    for (const auto& [flat, c] : t.nz) {
      size_t si = 0, ri = 0;
      for (int p : shared_pos) {
        size_t dp = static_cast<size_t>(t.dims[static_cast<size_t>(p)]);
        si = si * dp + (flat / strides[static_cast<size_t>(p)]) % dp;
      }
      for (int p : rest_pos) {
        size_t dp = static_cast<size_t>(t.dims[static_cast<size_t>(p)]);
        ri = ri * dp + (flat / strides[static_cast<size_t>(p)]) % dp;
      }
      buckets[si].emplace_back(ri, c);
    }
    return buckets;
  };
  auto am = split(ta, a_pos, a_rest);
  auto bm = split(tb, b_pos, b_rest);
  std::map<size_t, Scalar> acc;
  for (const auto& [s, av] : am) {
    auto it = bm.find(s);
    if (it == bm.end()) continue;
    for (const auto& [ri, va] : av)
      for (const auto& [rj, vb] : it->second) add_into(acc, ri * rb + rj, va * vb);
  }
  out.nz = compact(acc);
  return out;
}

// lambda_{alpha(u)} of the ordered product, via prefix products in basis
// coordinates; total flat count stays under the dense route gate
SpTensor sp_upper_covector(const ChiLabeling& lab, const HopfChiCoalgebra& A,
                           const Integrals& I, const UpperCircle& u) {
  const Field& f = A.field;
  int x = lab.alpha.at(u.id);
  int dx = A.dim(x);
  const GradedComponent& comp = A.comps[static_cast<size_t>(x)];
  SpTensor t;
  for (const auto& p : u.points) {
    t.slots.push_back({p.id, x});
    t.dims.push_back(dx);
  }
  size_t k = u.points.size();
  using SVec = std::vector<std::pair<int, Scalar>>;
  std::vector<SVec> cur(static_cast<size_t>(dx));
  for (int i = 0; i < dx; ++i)
    cur[static_cast<size_t>(i)] = {{i, Scalar::from_int(f, 1)}};
  for (size_t step = 1; step < k; ++step) {
    std::vector<SVec> next(cur.size() * static_cast<size_t>(dx));
    for (size_t fl = 0; fl < cur.size(); ++fl)
      for (int b = 0; b < dx; ++b) {
        Vec tmp = zero_vec(f, dx);
        for (const auto& [i, ci] : cur[fl]) {
          const Vec& pr = comp.mu[static_cast<size_t>(i)][static_cast<size_t>(b)];
          for (int c = 0; c < dx; ++c)
            if (!pr[static_cast<size_t>(c)].is_zero())
              tmp[static_cast<size_t>(c)] += ci * pr[static_cast<size_t>(c)];
        }
        SVec sv;
        for (int c = 0; c < dx; ++c)
          if (!tmp[static_cast<size_t>(c)].is_zero())
            sv.emplace_back(c, tmp[static_cast<size_t>(c)]);
        next[fl * static_cast<size_t>(dx) + static_cast<size_t>(b)] = std::move(sv);
      }
    cur = std::move(next);
  }
  const Vec& lam = I.lambda[static_cast<size_t>(x)];
  for (size_t fl = 0; fl < cur.size(); ++fl) {
    Scalar val(f);
    for (const auto& [i, ci] : cur[fl]) val += lam[static_cast<size_t>(i)] * ci;
    if (!val.is_zero()) t.nz.emplace_back(fl, val);
  }
  return t;
}

// product of slot pb into slot pa through the component table, dropping pb
void sp_mu_merge(SpTensor& t, size_t pa, size_t pb, const GradedComponent& comp) {
  std::vector<size_t> strides = strides_of(t.dims);
  std::vector<int> odims;
  std::vector<GradedTensor::Slot> oslots;
  std::vector<size_t> opos(t.dims.size(), 0);
  size_t oi = 0;
  for (size_t i = 0; i < t.dims.size(); ++i)
    if (i != pb) {
      opos[i] = oi++;
      odims.push_back(t.dims[i]);
      oslots.push_back(t.slots[i]);
    }
  std::vector<size_t> ostr = strides_of(odims);
  std::map<size_t, Scalar> acc;
  for (const auto& [flat, cv] : t.nz) {
    size_t base = 0;
    size_t ia = 0, ib = 0;
    for (size_t i = 0; i < t.dims.size(); ++i) {
      size_t digit = (flat / strides[i]) % static_cast<size_t>(t.dims[i]);
      if (i == pa) {
        ia = digit;
        continue;
      }
      if (i == pb) {
        ib = digit;
        continue;
      }
      base += digit * ostr[opos[i]];
    }
    const Vec& prod = comp.mu[ia][ib];
    for (size_t c = 0; c < prod.size(); ++c)
      if (!prod[c].is_zero()) add_into(acc, base + c * ostr[opos[pa]], cv * prod[c]);
  }
  t.slots = std::move(oslots);
  t.dims = std::move(odims);
  t.nz = compact(acc);
}

// pairs slot pos with the covector lam, dropping it
void sp_lambda_contract(SpTensor& t, size_t pos, const Vec& lam) {
  std::vector<size_t> strides = strides_of(t.dims);
  std::vector<int> odims;
  std::vector<GradedTensor::Slot> oslots;
  for (size_t i = 0; i < t.dims.size(); ++i)
    if (i != pos) {
      odims.push_back(t.dims[i]);
      oslots.push_back(t.slots[i]);
    }
  std::vector<size_t> ostr = strides_of(odims);
  std::map<size_t, Scalar> acc;
  for (const auto& [flat, cv] : t.nz) {
    size_t a = (flat / strides[pos]) % static_cast<size_t>(t.dims[pos]);
    if (lam[a].is_zero()) continue;
    size_t base = 0;
    size_t oi2 = 0;
    for (size_t i = 0; i < t.dims.size(); ++i) {
      if (i == pos) continue;
      base += ((flat / strides[i]) % static_cast<size_t>(t.dims[i])) * ostr[oi2++];
    }
    add_into(acc, base, cv * lam[a]);
  }
  t.slots = std::move(oslots);
  t.dims = std::move(odims);
  t.nz = compact(acc);
}

size_t find_slot(const SpTensor& t, PointId p) {
  for (size_t i = 0; i < t.slots.size(); ++i)
    if (t.slots[i].point == p) return i;
  return t.slots.size();
}

// one node per lower circle; each upper is absorbed either as a materialized
// covector when its flat count is small, or slot by slot through the
// component multiplication, which keeps group-like tensors thin
Scalar contract_sparse(const HeegaardDiagram& d, const ChiLabeling& lab,
                       const HopfChiCoalgebra& A, const Integrals& I) {
  const Field& f = A.field;
  std::vector<SpTensor> nodes;
  std::vector<char> alive;
  for (const CircleId& lid : sorted_lower_ids(d)) {
    nodes.push_back(sp_apply_antipodes(sparse_lower_tensor(d, lab, A, I, lid), d, lab, A));
    alive.push_back(1);
  }
  auto node_of = [&](PointId p) {
    for (size_t i = 0; i < nodes.size(); ++i)
      if (alive[i] && find_slot(nodes[i], p) < nodes[i].slots.size()) return i;
    fail("InternalError", "point " + std::to_string(p) + " has no slot");
    return nodes.size();
  };

  Scalar out = Scalar::from_int(f, 1);
  std::vector<CircleId> pending = sorted_upper_ids(d);
  const size_t covector_gate = size_t{1} << 17;
  while (!pending.empty()) {
    size_t best = 0;
    size_t best_cost = std::numeric_limits<size_t>::max();
    bool best_covector = false;
    for (size_t pi = 0; pi < pending.size(); ++pi) {
      const UpperCircle& u = d.upper(pending[pi]);
      int x = lab.alpha.at(u.id);
      size_t cov = 1;
      for (size_t i = 0; i < u.points.size(); ++i)
        cov = cap_mul(cov, static_cast<size_t>(A.dim(x)));
      std::set<size_t> touched;
      for (const auto& p : u.points) touched.insert(node_of(p.id));
      size_t walk = 1;
      for (size_t ni : touched) walk = cap_mul(walk, std::max<size_t>(nodes[ni].nz.size(), 1));
      bool covector_route = cov <= covector_gate && cov <= walk;
      size_t cost = covector_route ? cov : walk;
      if (cost < best_cost) {
        best_cost = cost;
        best = pi;
        best_covector = covector_route;
      }
    }
    const UpperCircle& u = d.upper(pending[best]);
    pending.erase(pending.begin() + static_cast<long>(best));
    int x = lab.alpha.at(u.id);
    if (u.points.empty()) {
      out *= I.pair(x, A.comps[static_cast<size_t>(x)].unit);
      continue;
    }
    for (const auto& p : u.points) {
      const SpTensor& t = nodes[node_of(p.id)];
      if (t.slots[find_slot(t, p.id)].grading != x)
        fail("GradingMismatch", "slot grading differs from the upper label");
    }
    if (best_covector) {
      SpTensor cov = sp_upper_covector(lab, A, I, u);
      while (true) {
        size_t share = nodes.size();
        for (const auto& s : cov.slots) {
          for (size_t i = 0; i < nodes.size() && share == nodes.size(); ++i)
            if (alive[i] && find_slot(nodes[i], s.point) < nodes[i].slots.size()) share = i;
          if (share < nodes.size()) break;
        }
        if (share == nodes.size()) break;
        SpTensor merged = sp_contract_pair(nodes[share], cov);
        alive[share] = 0;
        cov = std::move(merged);
      }
      nodes.push_back(std::move(cov));
      alive.push_back(1);
    } else {
      const GradedComponent& comp = A.comps[static_cast<size_t>(x)];
      size_t cur = node_of(u.points[0].id);
      for (size_t i = 1; i < u.points.size(); ++i) {
        size_t ni = node_of(u.points[i].id);
        if (ni != cur) {
          nodes[cur] = sp_outer(nodes[cur], nodes[ni]);
          alive[ni] = 0;
        }
        size_t acc_pos = find_slot(nodes[cur], u.points[0].id);
        size_t pp = find_slot(nodes[cur], u.points[i].id);
        sp_mu_merge(nodes[cur], acc_pos, pp, comp);
      }
      size_t acc_pos = find_slot(nodes[cur], u.points[0].id);
      sp_lambda_contract(nodes[cur], acc_pos, I.lambda[static_cast<size_t>(x)]);
    }
  }
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (!alive[i]) continue;
    if (!nodes[i].slots.empty()) fail("InternalError", "contraction left dangling slots");
    out *= nodes[i].nz.empty() ? Scalar(f) : nodes[i].nz[0].second;
  }
  return out;
}

Scalar prefactor(const Field& f, const HeegaardDiagram& d, const HopfChiCoalgebra& A) {
  long e = static_cast<long>(d.genus) - static_cast<long>(d.uppers.size()) -
           static_cast<long>(d.lowers.size());
  return Scalar::from_int(f, A.dim(0)).pow(e);
}

void require_valid(const HeegaardDiagram& d, const ChiLabeling& lab,
                   const CrossedModule& cm) {
  auto rep = validate(d);
  if (!rep.empty()) fail("InvalidInput", rep.front());
  auto lrep = check_labeling(d, cm, lab);
  if (!lrep.empty()) fail("InvalidLabeling", lrep.front());
}

}  // namespace

GradedTensor lower_tensor(const HeegaardDiagram& d, const ChiLabeling& lab,
                          const HopfChiCoalgebra& A, const Integrals& I,
                          const CircleId& lid) {
  const Field& f = A.field;
  const LowerCircle& l = d.lower(lid);
  LowerFrame fr = lower_frame(d, lab, A, I, lid);

  GradedTensor t;
  size_t n = l.points.size();
  if (n == 0) {
    t.coeffs = {A.eps(fr.w)};
    return t;
  }
  t.slots.push_back({l.points[0], fr.prefix[n - 1]});
  t.dims.push_back(A.dim(fr.prefix[n - 1]));
  t.coeffs = fr.w;
  for (size_t k = n; k >= 2; --k) {
    int head = fr.prefix[k - 2];
    int leg = fr.gradings[k - 1];
    const Mat& m = A.coproduct[static_cast<size_t>(head)][static_cast<size_t>(leg)];
    size_t rest = 1;
    for (size_t i = 1; i < t.dims.size(); ++i) rest *= static_cast<size_t>(t.dims[i]);
    size_t dh = static_cast<size_t>(A.dim(head));
    size_t dl = static_cast<size_t>(A.dim(leg));
    size_t old_dim = static_cast<size_t>(t.dims[0]);
    Vec out = zero_vec(f, static_cast<int>(dh * dl * rest));
    for (size_t a = 0; a < old_dim; ++a)
      for (size_t r = 0; r < rest; ++r) {
        const Scalar& c = t.coeffs[a * rest + r];
        if (c.is_zero()) continue;
        for (size_t row = 0; row < dh * dl; ++row)
          if (!m[row][a].is_zero()) out[row * rest + r] += m[row][a] * c;
      }
    t.coeffs = std::move(out);
    t.dims[0] = static_cast<int>(dl);
    t.dims.insert(t.dims.begin(), static_cast<int>(dh));
    t.slots[0] = {l.points[k - 1], leg};
    t.slots.insert(t.slots.begin(), {l.points[0], head});
  }
  for (size_t i = 0; i < n; ++i) t.slots[i] = {l.points[i], fr.gradings[i]};
  return t;
}

GradedTensor apply_antipodes(GradedTensor t, const HeegaardDiagram& d,
                             const ChiLabeling& lab, const HopfChiCoalgebra& A) {
  const CrossedModule& cm = A.cm;
  for (size_t k = 0; k < t.slots.size(); ++k) {
    auto [u, pt] = d.locate_point(t.slots[k].point);
    int x = lab.alpha.at(u->id);
    if (pt->sign > 0) {
      if (t.slots[k].grading != x)
        fail("GradingMismatch", "positive slot does not carry its upper label");
      continue;
    }
    if (t.slots[k].grading != cm.H.inv(x))
      fail("GradingMismatch", "negative slot does not carry the inverse label");
    apply_to_slot(t, k, A.antipode[static_cast<size_t>(x)], A.dim(x), A.field);
    t.slots[k].grading = x;
  }
  return t;
}

GradedTensor permute_to_upper(const std::vector<GradedTensor>& parts,
                              const HeegaardDiagram& d) {
  GradedTensor big;
  size_t n = 1;
  for (const auto& p : parts) n *= p.coeffs.size();
  for (const auto& p : parts) {
    big.slots.insert(big.slots.end(), p.slots.begin(), p.slots.end());
    big.dims.insert(big.dims.end(), p.dims.begin(), p.dims.end());
  }
  Field f = Field::rationals();
  for (const auto& p : parts)
    if (!p.coeffs.empty()) {
      f = p.coeffs[0].field();
      break;
    }
  big.coeffs = zero_vec(f, static_cast<int>(n));
  for (size_t flat = 0; flat < n; ++flat) {
    size_t rem = flat;
    Scalar prod = Scalar::from_int(f, 1);
    for (size_t pi = parts.size(); pi-- > 0;) {
      size_t sz = parts[pi].coeffs.size();
      prod *= parts[pi].coeffs[rem % sz];
      rem /= sz;
    }
    big.coeffs[flat] = prod;
  }

  std::vector<std::pair<PointId, int>> target;  // point, grading via source
  std::map<PointId, size_t> source_pos;
  for (size_t i = 0; i < big.slots.size(); ++i) {
    if (!source_pos.emplace(big.slots[i].point, i).second)
      fail("InconsistentSlotSets",
           "point " + std::to_string(big.slots[i].point) + " appears twice");
  }
  std::vector<size_t> src_of;  // target position -> source position
  GradedTensor out;
  for (const CircleId& uid : sorted_upper_ids(d))
    for (const auto& p : d.upper(uid).points) {
      auto it = source_pos.find(p.id);
      if (it == source_pos.end())
        fail("InconsistentSlotSets", "point " + std::to_string(p.id) + " has no slot");
      src_of.push_back(it->second);
      out.slots.push_back(big.slots[it->second]);
      out.dims.push_back(big.dims[it->second]);
    }
  if (src_of.size() != big.slots.size())
    fail("InconsistentSlotSets", "slots do not match the diagram's points");

  std::vector<size_t> src_strides(big.dims.size());
  {
    size_t acc = 1;
    for (size_t i = big.dims.size(); i-- > 0;) {
      src_strides[i] = acc;
      acc *= static_cast<size_t>(big.dims[i]);
    }
  }
  out.coeffs = zero_vec(f, static_cast<int>(n));
  std::vector<size_t> digit(big.dims.size(), 0);
  for (size_t flat = 0; flat < n; ++flat) {
    if (big.coeffs[flat].is_zero()) continue;
    size_t rem = flat;
    for (size_t i = 0; i < big.dims.size(); ++i) {
      digit[i] = rem / src_strides[i];
      rem %= src_strides[i];
    }
    size_t tflat = 0;
    for (size_t tpos = 0; tpos < src_of.size(); ++tpos)
      tflat = tflat * static_cast<size_t>(out.dims[tpos]) + digit[src_of[tpos]];
    out.coeffs[tflat] = big.coeffs[flat];
  }
  return out;
}

Scalar upper_contract(const GradedTensor& t, const HeegaardDiagram& d,
                      const ChiLabeling& lab, const HopfChiCoalgebra& A,
                      const Integrals& I) {
  const Field& f = A.field;
  GradedTensor cur = t;
  Scalar factor = Scalar::from_int(f, 1);
  for (const CircleId& uid : sorted_upper_ids(d)) {
    const UpperCircle& u = d.upper(uid);
    int x = lab.alpha.at(uid);
    size_t k = u.points.size();
    if (k == 0) {
      factor *= I.pair(x, A.comps[static_cast<size_t>(x)].unit);
      continue;
    }
    for (size_t i = 0; i < k; ++i) {
      if (i >= cur.slots.size() || cur.slots[i].point != u.points[i].id)
        fail("GradingMismatch", "slots are not in upper-induced order");
      if (cur.slots[i].grading != x)
        fail("GradingMismatch", "slot grading differs from the upper label");
    }
    GradedTensor cov = upper_covector(lab, A, I, u);
    size_t rest = 1;
    for (size_t i = k; i < cur.dims.size(); ++i) rest *= static_cast<size_t>(cur.dims[i]);
    size_t sh = cov.coeffs.size();
    Vec out = zero_vec(f, static_cast<int>(rest));
    for (size_t s = 0; s < sh; ++s) {
      if (cov.coeffs[s].is_zero()) continue;
      for (size_t r = 0; r < rest; ++r) {
        const Scalar& c = cur.coeffs[s * rest + r];
        if (!c.is_zero()) out[r] += cov.coeffs[s] * c;
      }
    }
    cur.coeffs = std::move(out);
    cur.slots.erase(cur.slots.begin(), cur.slots.begin() + static_cast<long>(k));
    cur.dims.erase(cur.dims.begin(), cur.dims.begin() + static_cast<long>(k));
  }
  if (!cur.slots.empty()) fail("GradingMismatch", "leftover slots after all uppers");
  return factor * cur.coeffs[0];
}

Scalar compute_invariant(const HeegaardDiagram& d, const ChiLabeling& lab,
                         const HopfChiCoalgebra& A, const Integrals& I) {
  require_valid(d, lab, A.cm);
  return prefactor(A.field, d, A) * contract_sparse(d, lab, A, I);
}

Scalar compute_invariant(const HeegaardDiagram& d, const ChiLabeling& lab,
                         const HopfChiCoalgebra& A) {
  Integrals I = compute_integrals(A);
  return compute_invariant(d, lab, A, I);
}

Scalar compute_invariant_naive(const HeegaardDiagram& d, const ChiLabeling& lab,
                               const HopfChiCoalgebra& A, const Integrals& I) {
  require_valid(d, lab, A.cm);
  std::vector<GradedTensor> parts;
  for (const CircleId& lid : sorted_lower_ids(d))
    parts.push_back(apply_antipodes(lower_tensor(d, lab, A, I, lid), d, lab, A));
  GradedTensor big = permute_to_upper(parts, d);
  return prefactor(A.field, d, A) * upper_contract(big, d, lab, A, I);
}

Scalar kuperberg(const HeegaardDiagram& d, const HopfChiCoalgebra& A) {
  if (A.cm.H.order() != 1 || A.cm.E.order() != 1)
    fail("BadParameters", "the specialization needs the trivial crossed module");
  ChiLabeling lab;
  for (const auto& u : d.uppers) lab.alpha[u.id] = 0;
  for (const auto& l : d.lowers) lab.beta[l.id] = 0;
  return compute_invariant(d, lab, A);
}

}  // namespace ck
