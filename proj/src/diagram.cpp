#include "ck/diagram.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace ck {

namespace {

int euclid_gcd(int a, int b) { return b == 0 ? a : euclid_gcd(b, a % b); }

// letter (u,+1) goes cminus -> cplus, (u,-1) the other way
const ComponentId& letter_source(const UpperCircle& u, int sign) {
  return sign > 0 ? u.cminus : u.cplus;
}
const ComponentId& letter_target(const UpperCircle& u, int sign) {
  return sign > 0 ? u.cplus : u.cminus;
}

}  // namespace

const UpperCircle& HeegaardDiagram::upper(const CircleId& id) const {
  for (const auto& u : uppers)
    if (u.id == id) return u;
  fail("UnknownCircle", "no upper circle " + id);
}

const LowerCircle& HeegaardDiagram::lower(const CircleId& id) const {
  for (const auto& l : lowers)
    if (l.id == id) return l;
  fail("UnknownCircle", "no lower circle " + id);
}

const TautIdentity& HeegaardDiagram::taut(const RegionId& id) const {
  for (const auto& t : tauts)
    if (t.region == id) return t;
  fail("UnknownRegion", "no taut region " + id);
}

UpperCircle* HeegaardDiagram::find_upper(const CircleId& id) {
  for (auto& u : uppers)
    if (u.id == id) return &u;
  return nullptr;
}

LowerCircle* HeegaardDiagram::find_lower(const CircleId& id) {
  for (auto& l : lowers)
    if (l.id == id) return &l;
  return nullptr;
}

TautIdentity* HeegaardDiagram::find_taut(const RegionId& id) {
  for (auto& t : tauts)
    if (t.region == id) return &t;
  return nullptr;
}

bool HeegaardDiagram::has_component(const ComponentId& id) const {
  return std::find(components.begin(), components.end(), id) != components.end();
}

std::pair<const UpperCircle*, const UpperPoint*> HeegaardDiagram::locate_point(
    PointId id) const {
  for (const auto& u : uppers)
    for (const auto& p : u.points)
      if (p.id == id) return {&u, &p};
  fail("UnknownPoint", "no intersection point " + std::to_string(id));
}

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->upper, -it->sign});
  return out;
}

Word reduce(Word w) {
  Word out;
  for (const auto& x : w) {
    if (!out.empty() && out.back().upper == x.upper && out.back().sign == -x.sign)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word omega(const HeegaardDiagram& d, const CircleId& l) {
  const LowerCircle& lc = d.lower(l);
  Word w;
  w.reserve(lc.points.size());
  for (PointId p : lc.points) {
    auto [u, pt] = d.locate_point(p);
    w.push_back({u->id, pt->sign});
  }
  return w;
}

ComponentId walk(const HeegaardDiagram& d, const ComponentId& from, const Word& w) {
  ComponentId at = from;
  for (const auto& x : w) {
    if (x.sign != 1 && x.sign != -1) fail("IllTypedWord", "letter sign must be +1 or -1");
    const UpperCircle* u = nullptr;
    for (const auto& cand : d.uppers)
      if (cand.id == x.upper) u = &cand;
    if (!u) fail("IllTypedWord", "letter references unknown upper " + x.upper);
    if (letter_source(*u, x.sign) != at)
      fail("IllTypedWord", "letter " + x.upper + " does not start at " + at);
    at = letter_target(*u, x.sign);
  }
  return at;
}

std::vector<std::string> validate(const HeegaardDiagram& d) {
  std::vector<std::string> rep;
  auto note = [&rep](std::string s) { rep.push_back(std::move(s)); };

  if (d.genus < 0) note("genus is negative");

  {
    std::set<ComponentId> seen;
    for (const auto& c : d.components)
      if (!seen.insert(c).second) note("duplicate component id " + c);
  }
  {
    std::set<CircleId> seen;
    for (const auto& u : d.uppers)
      if (!seen.insert(u.id).second) note("duplicate upper circle id " + u.id);
  }
  {
    std::set<CircleId> seen;
    for (const auto& l : d.lowers)
      if (!seen.insert(l.id).second) note("duplicate lower circle id " + l.id);
  }
  {
    std::set<RegionId> seen;
    for (const auto& t : d.tauts)
      if (!seen.insert(t.region).second) note("duplicate taut region id " + t.region);
  }
  if (!rep.empty()) return rep;

  std::set<CircleId> lower_ids;
  for (const auto& l : d.lowers) lower_ids.insert(l.id);

  // point table from the upper lists
  std::map<PointId, std::pair<CircleId, int>> point_of;  // id -> (lower, sign)
  for (const auto& u : d.uppers) {
    if (!d.has_component(u.cminus)) note("upper " + u.id + " has unknown cminus");
    if (!d.has_component(u.cplus)) note("upper " + u.id + " has unknown cplus");
    for (const auto& p : u.points) {
      if (p.sign != 1 && p.sign != -1)
        note("point " + std::to_string(p.id) + " has sign outside {+1,-1}");
      if (!lower_ids.count(p.lower))
        note("point " + std::to_string(p.id) + " references unknown lower " + p.lower);
      if (!point_of.emplace(p.id, std::make_pair(p.lower, p.sign)).second)
        note("point id " + std::to_string(p.id) + " appears twice in upper lists");
    }
  }
  for (const auto& l : d.lowers) {
    if (!d.has_component(l.base_component))
      note("lower " + l.id + " has unknown base component");
    std::set<PointId> seen;
    for (PointId p : l.points) {
      if (!seen.insert(p).second)
        note("point " + std::to_string(p) + " appears twice on lower " + l.id);
      auto it = point_of.find(p);
      if (it == point_of.end())
        note("lower " + l.id + " lists point " + std::to_string(p) +
             " missing from the upper lists");
      else if (it->second.first != l.id)
        note("point " + std::to_string(p) + " sits on lower " + it->second.first +
             " but is listed by " + l.id);
    }
  }
  {
    size_t listed = 0;
    std::set<PointId> listed_ids;
    for (const auto& l : d.lowers)
      for (PointId p : l.points) {
        ++listed;
        listed_ids.insert(p);
      }
    bool all_listed = true;
    for (const auto& kv : point_of)
      if (!listed_ids.count(kv.first)) all_listed = false;
    if (listed != point_of.size() || !all_listed)
      note("upper and lower lists carry different point multisets");
  }
  if (!rep.empty()) return rep;

  long expected_components = 1 + static_cast<long>(d.uppers.size()) - d.genus;
  if (static_cast<long>(d.components.size()) != expected_components)
    note("component count " + std::to_string(d.components.size()) + " differs from 1+|uppers|-genus");
  long expected_tauts = 1 + static_cast<long>(d.lowers.size()) - d.genus;
  if (static_cast<long>(d.tauts.size()) != expected_tauts)
    note("taut count " + std::to_string(d.tauts.size()) + " differs from 1+|lowers|-genus");

  // connectivity of the component graph with uppers as edges
  if (!d.components.empty()) {
    std::map<ComponentId, int> idx;
    for (const auto& c : d.components) idx[c] = static_cast<int>(idx.size());
    std::vector<int> parent(d.components.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&parent](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto& u : d.uppers) parent[root(idx[u.cminus])] = root(idx[u.cplus]);
    for (const auto& c : d.components)
      if (root(idx[c]) != root(0)) {
        note("component graph is disconnected");
        break;
      }
  }

  for (const auto& l : d.lowers) {
    try {
      ComponentId end = walk(d, l.base_component, omega(d, l.id));
      if (end != l.base_component)
        note("round trip along " + l.id + " ends at " + end + " instead of its base");
    } catch (const CkError& e) {
      note("round trip along " + l.id + " is ill-typed: " + e.what());
    }
  }

  for (const auto& t : d.tauts) {
    if (!d.has_component(t.base_component)) {
      note("taut region " + t.region + " has unknown base component");
      continue;
    }
    bool typed = true;
    for (const auto& f : t.factors) {
      if (f.eps != 1 && f.eps != -1) {
        note("taut region " + t.region + " has a factor exponent outside {+1,-1}");
        typed = false;
        continue;
      }
      if (!lower_ids.count(f.lower)) {
        note("taut region " + t.region + " references unknown lower " + f.lower);
        typed = false;
        continue;
      }
      try {
        ComponentId end = walk(d, t.base_component, f.r);
        if (end != d.lower(f.lower).base_component) {
          note("taut region " + t.region + ": path to " + f.lower +
               " ends at the wrong component");
          typed = false;
        }
      } catch (const CkError& e) {
        note("taut region " + t.region + " has an ill-typed path: " + e.what());
        typed = false;
      }
    }
    if (!typed) continue;
    Word total;
    for (const auto& f : t.factors) {
      Word om = omega(d, f.lower);
      if (f.eps < 0) om = inverse_word(om);
      total.insert(total.end(), f.r.begin(), f.r.end());
      total.insert(total.end(), om.begin(), om.end());
      Word rinv = inverse_word(f.r);
      total.insert(total.end(), rinv.begin(), rinv.end());
    }
    if (!reduce(std::move(total)).empty())
      note("taut region " + t.region + " fails boundary triviality");
  }

  return rep;
}

HeegaardDiagram build_lens(int p, int q) {
  bool degenerate = (p == 1 && q == 1);
  if (!degenerate && (p < 1 || q < 1 || q >= p || euclid_gcd(p, q) != 1))
    fail("BadParameters", "lens parameters need 1 <= q < p coprime, or p = q = 1");

  HeegaardDiagram d;
  d.genus = 1;
  d.components = {"c"};

  UpperCircle u{"u", "c", "c", {}};
  // basepoint chosen so the crossings read p-q+1, ..., p, 1, ..., p-q along u
  for (int i = 0; i < p; ++i) u.points.push_back({(p - q + i) % p + 1, "l", 1});
  d.uppers.push_back(u);

  LowerCircle l{"l", "c", {}};
  for (int i = 1; i <= p; ++i) l.points.push_back(i);
  d.lowers.push_back(l);

  Word uq(static_cast<size_t>(q), Letter{"u", 1});
  d.tauts.push_back({"s", "c", {{{}, "l", -1}, {uq, "l", 1}}});
  return d;
}

HeegaardDiagram build_poincare() {
  HeegaardDiagram d;
  d.genus = 2;
  d.components = {"c"};

  // points 1..7 on l1 and 8..12 (the letters a..e) on l2
  UpperCircle u1{"u1", "c", "c", {{1, "l1", 1},
                                  {2, "l1", 1},
                                  {3, "l1", 1},
                                  {4, "l1", 1},
                                  {6, "l1", -1},
                                  {8, "l2", -1},
                                  {10, "l2", -1}}};
  UpperCircle u2{"u2", "c", "c", {{5, "l1", -1},
                                  {7, "l1", -1},
                                  {9, "l2", -1},
                                  {11, "l2", 1},
                                  {12, "l2", 1}}};
  d.uppers = {u1, u2};

  d.lowers = {{"l1", "c", {1, 2, 3, 4, 5, 6, 7}}, {"l2", "c", {8, 9, 10, 11, 12}}};

  Word w2{{"u1", -1}};
  Word w3{{"u1", -1}, {"u2", 1}, {"u2", 1}, {"u2", 1}};
  Word w4{{"u2", 1}, {"u1", 1}};
  d.tauts.push_back({"s", "c", {{{}, "l1", -1}, {w2, "l1", 1}, {w3, "l2", -1}, {w4, "l2", 1}}});
  return d;
}

HeegaardDiagram build_s3() { return build_lens(1, 1); }

namespace {

template <typename Map>
std::string fresh_suffixed(const std::string& base, const Map& taken) {
  std::string cand = base;
  while (taken.count(cand)) cand += "_2";
  return cand;
}

}  // namespace

ConnectedSum connected_sum(const HeegaardDiagram& d1, const HeegaardDiagram& d2,
                           const ComponentId& c1, const ComponentId& c2,
                           const RegionId& r1, const RegionId& r2) {
  if (!d1.has_component(c1) || !d2.has_component(c2))
    fail("IncompatibleMergeSites", "merge component missing");
  const TautIdentity* t1 = nullptr;
  const TautIdentity* t2 = nullptr;
  for (const auto& t : d1.tauts)
    if (t.region == r1) t1 = &t;
  for (const auto& t : d2.tauts)
    if (t.region == r2) t2 = &t;
  if (!t1 || !t2) fail("IncompatibleMergeSites", "merge region missing");
  if (t1->base_component != c1 || t2->base_component != c2)
    fail("IncompatibleMergeSites", "merge region is not based at the merge component");

  ConnectedSum out;
  out.diagram = d1;
  HeegaardDiagram& r = out.diagram;
  r.genus = d1.genus + d2.genus;

  std::set<ComponentId> comp_taken(d1.components.begin(), d1.components.end());
  std::set<CircleId> upper_taken, lower_taken;
  std::set<RegionId> region_taken;
  for (const auto& u : d1.uppers) upper_taken.insert(u.id);
  for (const auto& l : d1.lowers) lower_taken.insert(l.id);
  for (const auto& t : d1.tauts) region_taken.insert(t.region);

  for (const auto& c : d2.components) {
    if (c == c2) {
      out.components[c] = c1;
      continue;
    }
    auto name = fresh_suffixed(c, comp_taken);
    comp_taken.insert(name);
    out.components[c] = name;
    r.components.push_back(name);
  }
  for (const auto& u : d2.uppers) {
    auto name = fresh_suffixed(u.id, upper_taken);
    upper_taken.insert(name);
    out.uppers[u.id] = name;
  }
  for (const auto& l : d2.lowers) {
    auto name = fresh_suffixed(l.id, lower_taken);
    lower_taken.insert(name);
    out.lowers[l.id] = name;
  }
  for (const auto& t : d2.tauts) {
    auto name = fresh_suffixed(t.region, region_taken);
    region_taken.insert(name);
    out.regions[t.region] = name;
  }

  PointId max1 = 0, min2 = 0;
  bool any1 = false, any2 = false;
  std::set<PointId> ids1;
  for (const auto& u : d1.uppers)
    for (const auto& p : u.points) {
      ids1.insert(p.id);
      max1 = any1 ? std::max(max1, p.id) : p.id;
      any1 = true;
    }
  bool collide = false;
  for (const auto& u : d2.uppers)
    for (const auto& p : u.points) {
      if (ids1.count(p.id)) collide = true;
      min2 = any2 ? std::min(min2, p.id) : p.id;
      any2 = true;
    }
  PointId offset = collide ? max1 + 1 - min2 : 0;
  for (const auto& u : d2.uppers)
    for (const auto& p : u.points) out.points[p.id] = p.id + offset;

  auto map_word = [&out](const Word& w) {
    Word m;
    m.reserve(w.size());
    for (const auto& x : w) m.push_back({out.uppers.at(x.upper), x.sign});
    return m;
  };

  for (const auto& u : d2.uppers) {
    UpperCircle nu{out.uppers.at(u.id), out.components.at(u.cminus),
                   out.components.at(u.cplus), {}};
    for (const auto& p : u.points)
      nu.points.push_back({out.points.at(p.id), out.lowers.at(p.lower), p.sign});
    r.uppers.push_back(nu);
  }
  for (const auto& l : d2.lowers) {
    LowerCircle nl{out.lowers.at(l.id), out.components.at(l.base_component), {}};
    for (PointId p : l.points) nl.points.push_back(out.points.at(p));
    r.lowers.push_back(nl);
  }
  for (const auto& t : d2.tauts) {
    if (t.region == r2) continue;
    TautIdentity nt{out.regions.at(t.region), out.components.at(t.base_component), {}};
    for (const auto& f : t.factors)
      nt.factors.push_back({map_word(f.r), out.lowers.at(f.lower), f.eps});
    r.tauts.push_back(nt);
  }
  TautIdentity* host = r.find_taut(r1);
  for (const auto& f : t2->factors)
    host->factors.push_back({map_word(f.r), out.lowers.at(f.lower), f.eps});

  return out;
}

HeegaardDiagram reverse_orientation(const HeegaardDiagram& d) {
  HeegaardDiagram r = d;
  for (auto& u : r.uppers) {
    std::swap(u.cminus, u.cplus);
    for (auto& p : u.points) p.sign = -p.sign;
  }
  for (auto& t : r.tauts) {
    std::reverse(t.factors.begin(), t.factors.end());
    for (auto& f : t.factors) {
      f.eps = -f.eps;
      for (auto& x : f.r) x.sign = -x.sign;
    }
  }
  return r;
}

namespace {

// r1 == r2 * omega^k up to free reduction, any integer k
bool equal_mod_omega(const Word& r1, const Word& r2, const Word& om) {
  Word diff = inverse_word(r2);
  diff.insert(diff.end(), r1.begin(), r1.end());
  diff = reduce(std::move(diff));
  Word w = reduce(om);
  if (w.empty()) return diff.empty();
  size_t bound = diff.size() / w.size() + 1;
  Word acc;
  for (size_t k = 0; k <= bound; ++k) {
    if (reduce(acc) == diff) return true;
    Word neg = reduce(inverse_word(acc));
    if (neg == diff) return true;
    acc.insert(acc.end(), w.begin(), w.end());
    acc = reduce(std::move(acc));
  }
  return false;
}

struct IsoState {
  std::map<ComponentId, ComponentId> comp;
  std::map<CircleId, CircleId> up;
  std::map<CircleId, CircleId> low;
};

bool match_components(const IsoState& s, const ComponentId& a, const ComponentId& b) {
  auto it = s.comp.find(a);
  return it != s.comp.end() && it->second == b;
}

bool try_tauts(const HeegaardDiagram& da, const HeegaardDiagram& db, const IsoState& s) {
  // region matching: factor lists must map elementwise, r-words modulo omega powers
  std::vector<bool> used(db.tauts.size(), false);
  size_t n = da.tauts.size();
  if (n != db.tauts.size()) return false;

  std::map<CircleId, Word> omegas_b;
  for (const auto& l : db.lowers) omegas_b[l.id] = omega(db, l.id);

  std::function<bool(size_t)> rec = [&](size_t i) -> bool {
    if (i == n) return true;
    const TautIdentity& ta = da.tauts[i];
    for (size_t j = 0; j < db.tauts.size(); ++j) {
      if (used[j]) continue;
      const TautIdentity& tb = db.tauts[j];
      if (!match_components(s, ta.base_component, tb.base_component)) continue;
      if (ta.factors.size() != tb.factors.size()) continue;
      bool ok = true;
      for (size_t k = 0; k < ta.factors.size() && ok; ++k) {
        const TautFactor& fa = ta.factors[k];
        const TautFactor& fb = tb.factors[k];
        if (fa.eps != fb.eps) ok = false;
        auto it = s.low.find(fa.lower);
        if (it == s.low.end() || it->second != fb.lower) ok = false;
        if (ok) {
          Word mapped;
          mapped.reserve(fa.r.size());
          for (const auto& x : fa.r) {
            auto uit = s.up.find(x.upper);
            if (uit == s.up.end()) {
              ok = false;
              break;
            }
            mapped.push_back({uit->second, x.sign});
          }
          if (ok && !equal_mod_omega(mapped, fb.r, omegas_b.at(fb.lower))) ok = false;
        }
      }
      if (!ok) continue;
      used[j] = true;
      if (rec(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return rec(0);
}

}  // namespace

bool isomorphic(const HeegaardDiagram& da, const HeegaardDiagram& db) {
  if (da.genus != db.genus || da.components.size() != db.components.size() ||
      da.uppers.size() != db.uppers.size() || da.lowers.size() != db.lowers.size() ||
      da.tauts.size() != db.tauts.size())
    return false;

  // enumerate lower bijections; the point bijection follows from list positions
  std::vector<size_t> lperm(db.lowers.size());
  std::iota(lperm.begin(), lperm.end(), 0);
  std::vector<size_t> uperm(db.uppers.size());

  do {
    bool lens_ok = true;
    for (size_t i = 0; i < da.lowers.size() && lens_ok; ++i)
      if (da.lowers[i].points.size() != db.lowers[lperm[i]].points.size()) lens_ok = false;
    if (!lens_ok) continue;

    std::iota(uperm.begin(), uperm.end(), 0);
    do {
      IsoState s;
      bool ok = true;
      for (size_t i = 0; i < da.lowers.size(); ++i)
        s.low[da.lowers[i].id] = db.lowers[lperm[i]].id;
      for (size_t i = 0; i < da.uppers.size() && ok; ++i) {
        if (da.uppers[i].points.size() != db.uppers[uperm[i]].points.size()) ok = false;
        s.up[da.uppers[i].id] = db.uppers[uperm[i]].id;
      }
      if (!ok) continue;

      // point bijection from lower lists; components forced by circle data
      std::map<PointId, PointId> pmap;
      for (size_t i = 0; i < da.lowers.size() && ok; ++i)
        for (size_t k = 0; k < da.lowers[i].points.size(); ++k)
          pmap[da.lowers[i].points[k]] = db.lowers[lperm[i]].points[k];

      for (size_t i = 0; i < da.uppers.size() && ok; ++i) {
        const UpperCircle& ua = da.uppers[i];
        const UpperCircle& ub = db.uppers[uperm[i]];
        for (size_t k = 0; k < ua.points.size() && ok; ++k) {
          const UpperPoint& pa = ua.points[k];
          const UpperPoint& pb = ub.points[k];
          if (pmap.count(pa.id) == 0 || pmap.at(pa.id) != pb.id) ok = false;
          if (pa.sign != pb.sign) ok = false;
          if (s.low.at(pa.lower) != pb.lower) ok = false;
        }
        if (!ok) break;
        auto claim = [&s, &ok](const ComponentId& a, const ComponentId& b) {
          auto it = s.comp.find(a);
          if (it == s.comp.end())
            s.comp[a] = b;
          else if (it->second != b)
            ok = false;
        };
        claim(ua.cminus, ub.cminus);
        claim(ua.cplus, ub.cplus);
      }
      for (size_t i = 0; i < da.lowers.size() && ok; ++i) {
        auto it = s.comp.find(da.lowers[i].base_component);
        if (it == s.comp.end())
          s.comp[da.lowers[i].base_component] = db.lowers[lperm[i]].base_component;
        else if (it->second != db.lowers[lperm[i]].base_component)
          ok = false;
      }
      if (!ok) continue;

      // components untouched by circles: extend injectively over the rest
      {
        std::set<ComponentId> taken;
        for (const auto& [a, b] : s.comp) {
          (void)a;
          if (!taken.insert(b).second) ok = false;
        }
        if (!ok) continue;
        std::vector<ComponentId> restb;
        for (const auto& c : db.components)
          if (!taken.count(c)) restb.push_back(c);
        size_t next = 0;
        for (const auto& c : da.components)
          if (!s.comp.count(c)) s.comp[c] = restb[next++];
      }

      if (try_tauts(da, db, s)) return true;
    } while (std::next_permutation(uperm.begin(), uperm.end()));
  } while (std::next_permutation(lperm.begin(), lperm.end()));
  return false;
}

void rename_component(HeegaardDiagram& d, const ComponentId& from, const ComponentId& to) {
  if (d.has_component(to)) fail("BadParameters", "component id " + to + " already taken");
  bool found = false;
  for (auto& c : d.components)
    if (c == from) {
      c = to;
      found = true;
    }
  if (!found) fail("BadParameters", "no component " + from);
  for (auto& u : d.uppers) {
    if (u.cminus == from) u.cminus = to;
    if (u.cplus == from) u.cplus = to;
  }
  for (auto& l : d.lowers)
    if (l.base_component == from) l.base_component = to;
  for (auto& t : d.tauts)
    if (t.base_component == from) t.base_component = to;
}

void rename_upper(HeegaardDiagram& d, const CircleId& from, const CircleId& to) {
  if (d.find_upper(to) || d.find_lower(to))
    fail("BadParameters", "circle id " + to + " already taken");
  UpperCircle* u = d.find_upper(from);
  if (!u) fail("BadParameters", "no upper " + from);
  u->id = to;
  for (auto& t : d.tauts)
    for (auto& f : t.factors)
      for (auto& x : f.r)
        if (x.upper == from) x.upper = to;
}

void rename_lower(HeegaardDiagram& d, const CircleId& from, const CircleId& to) {
  if (d.find_upper(to) || d.find_lower(to))
    fail("BadParameters", "circle id " + to + " already taken");
  LowerCircle* l = d.find_lower(from);
  if (!l) fail("BadParameters", "no lower " + from);
  l->id = to;
  for (auto& u : d.uppers)
    for (auto& p : u.points)
      if (p.lower == from) p.lower = to;
  for (auto& t : d.tauts)
    for (auto& f : t.factors)
      if (f.lower == from) f.lower = to;
}

void rename_point(HeegaardDiagram& d, PointId from, PointId to) {
  for (const auto& u : d.uppers)
    for (const auto& p : u.points)
      if (p.id == to) fail("BadParameters", "point id " + std::to_string(to) + " already taken");
  bool found = false;
  for (auto& u : d.uppers)
    for (auto& p : u.points)
      if (p.id == from) {
        p.id = to;
        found = true;
      }
  for (auto& l : d.lowers)
    for (auto& p : l.points)
      if (p == from) p = to;
  if (!found) fail("BadParameters", "no point " + std::to_string(from));
}

void rename_region(HeegaardDiagram& d, const RegionId& from, const RegionId& to) {
  if (d.find_taut(to)) fail("BadParameters", "region id " + to + " already taken");
  TautIdentity* t = d.find_taut(from);
  if (!t) fail("BadParameters", "no taut region " + from);
  t->region = to;
}

}  // namespace ck
