// Acceptance gate. Runs ten scripted checks against the library and prints
// one line per criterion: "criterion N: PASS" or "criterion N: FAIL (why)".
// An integer argument restricts the run to that criterion.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ck/diagram.hpp"
#include "ck/error.hpp"
#include "ck/hopfxc.hpp"
#include "ck/invariant.hpp"
#include "ck/labeling.hpp"
#include "ck/moves.hpp"
#include "ck/xmod.hpp"
#include "test_util.hpp"

namespace {

using namespace ck;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome ok() { return {true, ""}; }
Outcome bad(std::string why) { return {false, std::move(why)}; }

Scalar qs(long n, long d = 1) {
  return Scalar::from_fraction(Field::rationals(), n, d);
}

Vec basis_vec(const Field& f, int n, int i) {
  Vec v = zero_vec(f, n);
  v[static_cast<size_t>(i)] = Scalar::from_int(f, 1);
  return v;
}

Vec scale_vec(const Scalar& s, Vec v) {
  for (auto& x : v) x *= s;
  return v;
}

// (p, q) with q invertible mod p; the degenerate (1, 1) stands in for S^3
std::vector<std::pair<int, int>> lens_pairs(int pmax) {
  std::vector<std::pair<int, int>> out{{1, 1}};
  for (int p = 2; p <= pmax; ++p)
    for (int q = 1; q < p; ++q)
      if (std::gcd(p, q) == 1) out.push_back({p, q});
  return out;
}

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ", ";
    s += parts[i];
  }
  return s;
}

// ---------------------------------------------------------------- criterion 1

Outcome criterion1() {
  auto t0 = Clock::now();
  HeegaardDiagram d = build_lens(2, 1);
  CrossedModule cm = xmod_z4_z2();
  HopfChiCoalgebra A = builtin_kp4();
  Integrals I = compute_integrals(A);
  auto labs = enumerate_labelings(d, cm);
  OrbitClasses oc = orbit_classes(labs, d, cm);
  if (oc.representatives.size() != 4)
    return bad("expected 4 labeling classes, found " +
               std::to_string(oc.representatives.size()));
  std::vector<std::string> got;
  for (int r : oc.representatives)
    got.push_back(compute_invariant(d, labs[static_cast<size_t>(r)], A, I).str());
  std::sort(got.begin(), got.end());
  std::vector<std::string> want{"0", "1", "3/4", "3/4"};
  std::sort(want.begin(), want.end());
  if (seconds_since(t0) >= 1.0) return bad("runtime exceeded 1 s");
  if (got != want)
    return bad("class values {" + join(got) + "} instead of {" + join(want) + "}");
  return ok();
}

// ---------------------------------------------------------------- criterion 2

Outcome criterion2() {
  auto t0 = Clock::now();
  CrossedModule cm = xmod_z4_z2();
  for (auto [p, q] : lens_pairs(12)) {
    HeegaardDiagram d = build_lens(p, q);
    auto labs = enumerate_labelings(d, cm);
    OrbitClasses oc = orbit_classes(labs, d, cm);
    int want = (p % 4 == 0) ? 5 : (p % 2 == 0) ? 4 : 1;
    if (static_cast<int>(oc.representatives.size()) != want)
      return bad("L(" + std::to_string(p) + "," + std::to_string(q) + ") has " +
                 std::to_string(oc.representatives.size()) + " classes, expected " +
                 std::to_string(want));
  }
  if (seconds_since(t0) >= 5.0) return bad("runtime exceeded 5 s");
  return ok();
}

// ---------------------------------------------------------------- criterion 3

// cosets of the subgroup of p-th powers, counted without any group theory
int power_coset_count(const FiniteGroup& E, int p) {
  std::set<int> powers;
  for (int e = 0; e < E.order(); ++e) powers.insert(E.pow(e, p));
  std::set<int> seen;
  int count = 0;
  for (int e = 0; e < E.order(); ++e) {
    if (seen.count(e)) continue;
    ++count;
    for (int s : powers) seen.insert(E.mul(e, s));
  }
  return count;
}

Outcome criterion3() {
  for (int n : {2, 4, 6}) {
    FiniteGroup E = FiniteGroup::cyclic(n);
    CrossedModule cm = xmod_to_1(E);
    for (auto [p, q] : lens_pairs(8)) {
      HeegaardDiagram d = build_lens(p, q);
      auto labs = enumerate_labelings(d, cm);
      OrbitClasses oc = orbit_classes(labs, d, cm);
      int want = power_coset_count(E, p);
      if (static_cast<int>(oc.representatives.size()) != want)
        return bad("Z/" + std::to_string(n) + " on L(" + std::to_string(p) + "," +
                   std::to_string(q) + "): " +
                   std::to_string(oc.representatives.size()) + " classes, oracle says " +
                   std::to_string(want));
    }
  }
  return ok();
}

// ---------------------------------------------------------------- criterion 4

// every defining and derived identity of the integral pair, checked exactly
std::string integral_defects(const HopfChiCoalgebra& A, const Integrals& I) {
  const Field& f = A.field;
  const FiniteGroup& H = A.cm.H;
  const FiniteGroup& E = A.cm.E;
  const Scalar dim1 = Scalar::from_int(f, A.dim(0));

  for (int i = 0; i < A.dim(0); ++i) {
    Vec ei = basis_vec(f, A.dim(0), i);
    Vec want = scale_vec(A.eps(ei), I.Lambda);
    if (A.mul(0, ei, I.Lambda) != want || A.mul(0, I.Lambda, ei) != want)
      return "integral element is not two-sided at basis " + std::to_string(i);
  }
  if (A.eps(I.Lambda) != dim1) return "counit of the integral misses dim";
  if (I.pair(0, I.Lambda) != dim1) return "lambda(Lambda) misses dim";
  for (int x = 0; x < H.order(); ++x)
    if (I.pair(x, A.comps[static_cast<size_t>(x)].unit) != dim1)
      return "lambda(1) misses dim in grading " + H.name(x);

  if (apply(f, A.antipode[0], I.Lambda) != I.Lambda)
    return "antipode moves the integral element";
  for (int x = 0; x < H.order(); ++x) {
    int xi = H.inv(x);
    for (int b = 0; b < A.dim(xi); ++b) {
      Vec eb = basis_vec(f, A.dim(xi), b);
      if (I.pair(x, apply(f, A.antipode[static_cast<size_t>(x)], eb)) != I.pair(xi, eb))
        return "lambda is not antipode-invariant in grading " + H.name(x);
    }
  }

  for (int x = 0; x < H.order(); ++x)
    for (int a = 0; a < A.dim(x); ++a)
      for (int b = 0; b < A.dim(x); ++b) {
        Vec ea = basis_vec(f, A.dim(x), a), eb = basis_vec(f, A.dim(x), b);
        if (I.pair(x, A.mul(x, ea, eb)) != I.pair(x, A.mul(x, eb, ea)))
          return "lambda is not symmetric in grading " + H.name(x);
      }

  for (int x = 0; x < H.order(); ++x) {
    int xi = H.inv(x);
    int dx = A.dim(x), dxi = A.dim(xi);
    Vec t1 = apply(f, A.coproduct[static_cast<size_t>(xi)][static_cast<size_t>(x)],
                   I.Lambda);
    Vec t2 = apply(f, A.coproduct[static_cast<size_t>(x)][static_cast<size_t>(xi)],
                   I.Lambda);
    for (int i = 0; i < dxi; ++i)
      for (int j = 0; j < dx; ++j)
        if (t1[static_cast<size_t>(i * dx + j)] != t2[static_cast<size_t>(j * dxi + i)])
          return "integral element is not cosymmetric in grading " + H.name(x);
  }

  for (int x = 0; x < H.order(); ++x)
    for (int y = 0; y < H.order(); ++y) {
      int xy = H.mul(x, y);
      int dx = A.dim(x), dy = A.dim(y), dxy = A.dim(xy);
      const Mat& m = A.coproduct[static_cast<size_t>(x)][static_cast<size_t>(y)];
      const Vec& ux = A.comps[static_cast<size_t>(x)].unit;
      const Vec& uy = A.comps[static_cast<size_t>(y)].unit;
      for (int a = 0; a < dxy; ++a) {
        Scalar la = I.lambda[static_cast<size_t>(xy)][static_cast<size_t>(a)];
        for (int i = 0; i < dx; ++i) {
          Scalar s{f};
          for (int j = 0; j < dy; ++j)
            s += I.lambda[static_cast<size_t>(y)][static_cast<size_t>(j)] *
                 m[static_cast<size_t>(i * dy + j)][static_cast<size_t>(a)];
          if (s != ux[static_cast<size_t>(i)] * la)
            return "(id (x) lambda) misses eta lambda at (" + H.name(x) + "," +
                   H.name(y) + ")";
        }
        for (int j = 0; j < dy; ++j) {
          Scalar s{f};
          for (int i = 0; i < dx; ++i)
            s += I.lambda[static_cast<size_t>(x)][static_cast<size_t>(i)] *
                 m[static_cast<size_t>(i * dy + j)][static_cast<size_t>(a)];
          if (s != uy[static_cast<size_t>(j)] * la)
            return "(lambda (x) id) misses eta lambda at (" + H.name(x) + "," +
                   H.name(y) + ")";
        }
      }
    }

  for (int x = 0; x < H.order(); ++x)
    for (int e = 0; e < E.order(); ++e) {
      int xe = H.mul(A.cm.chi_of(e), x);
      for (int b = 0; b < A.dim(x); ++b) {
        Vec eb = basis_vec(f, A.dim(x), b);
        Vec moved =
            apply(f, A.action[static_cast<size_t>(x)][static_cast<size_t>(e)], eb);
        if (I.pair(xe, moved) != I.pair(x, eb))
          return "lambda is not action-invariant at (" + H.name(x) + "," + E.name(e) +
                 ")";
      }
    }
  return "";
}

Outcome criterion4() {
  Field f = Field::rationals();
  {
    HopfChiCoalgebra A = builtin_kp4();
    Integrals I = compute_integrals(A);
    Vec ones(4, qs(1));
    Vec delta = zero_vec(f, 4);
    delta[0] = qs(4);
    if (I.Lambda != ones) return bad("kp4 integral element is not 1+a+a^2+a^3");
    if (I.lambda.size() != 2 || I.lambda[0] != delta || I.lambda[1] != delta)
      return bad("kp4 lambda table is not 4*delta_1 in both gradings");
    std::string defect = integral_defects(A, I);
    if (!defect.empty()) return bad("kp4: " + defect);
  }
  std::vector<FiniteGroup> groups;
  for (int n = 1; n <= 6; ++n) groups.push_back(FiniteGroup::cyclic(n));
  groups.push_back(FiniteGroup::symmetric(3));
  for (const FiniteGroup& G : groups) {
    HopfChiCoalgebra A = builtin_group_algebra(f, G);
    Integrals I = compute_integrals(A);
    int n = G.order();
    Vec ones(static_cast<size_t>(n), qs(1));
    Vec delta = zero_vec(f, n);
    delta[0] = qs(n);
    if (I.Lambda != ones)
      return bad("group algebra of order " + std::to_string(n) +
                 ": integral element is not the sum of the group");
    if (I.lambda[0] != delta)
      return bad("group algebra of order " + std::to_string(n) +
                 ": lambda is not |G| delta_1");
    std::string defect = integral_defects(A, I);
    if (!defect.empty())
      return bad("group algebra of order " + std::to_string(n) + ": " + defect);
  }
  return ok();
}

// ---------------------------------------------------------------- criterion 5

struct MoveSuite {
  CrossedModule cm = xmod_z4_z2();
  HopfChiCoalgebra A = builtin_kp4();
  Integrals I = compute_integrals(A);

  struct Base {
    HeegaardDiagram d;
    std::vector<ChiLabeling> labs;
  };
  std::vector<Base> bases;
  std::vector<std::vector<Scalar>> memo;
  std::vector<std::vector<char>> have;
  std::mt19937 rng{20260822};
  int fresh_names = 0;
  std::string fail_msg;

  MoveSuite() {
    auto add = [&](HeegaardDiagram d) {
      Base b;
      b.labs = enumerate_labelings(d, cm);
      b.d = std::move(d);
      memo.emplace_back(b.labs.size());
      have.emplace_back(b.labs.size(), 0);
      bases.push_back(std::move(b));
    };
    add(build_lens(2, 1));
    add(build_lens(3, 1));
    add(build_lens(4, 1));
    add(connected_sum(build_lens(2, 1), build_lens(3, 1), "c", "c", "s", "s").diagram);
    add(connected_sum(build_lens(2, 1), build_lens(2, 1), "c", "c", "s", "s").diagram);
    add(build_poincare());
  }

  std::string fresh(const char* stem) {
    return std::string("zz") + stem + std::to_string(fresh_names++);
  }

  // the genus-2 diagram is expensive, so it joins one draw in eight
  size_t pick_base(bool heavy_ok) {
    if (heavy_ok && rng() % 8 == 0) return bases.size() - 1;
    return rng() % (bases.size() - 1);
  }

  const Scalar& before(size_t bi, size_t li) {
    if (!have[bi][li]) {
      memo[bi][li] = compute_invariant(bases[bi].d, bases[bi].labs[li], A, I);
      have[bi][li] = 1;
    }
    return memo[bi][li];
  }

  bool step(HeegaardDiagram& d, ChiLabeling& lab, const Scalar& expect,
            const MoveDescriptor& mv) {
    auto next = apply_move(d, lab, cm, mv);
    d = std::move(next.first);
    lab = std::move(next.second);
    Scalar after = compute_invariant(d, lab, A, I);
    if (after == expect) return true;
    fail_msg = move_name(mv) + " changed the value from " + expect.str() + " to " +
               after.str();
    return false;
  }

  const CircleId& any_upper(const HeegaardDiagram& d) {
    return d.uppers[rng() % d.uppers.size()].id;
  }
  const CircleId& any_lower(const HeegaardDiagram& d) {
    return d.lowers[rng() % d.lowers.size()].id;
  }
  const TautIdentity& any_taut(const HeegaardDiagram& d) {
    return d.tauts[rng() % d.tauts.size()];
  }
  PointId any_point(const HeegaardDiagram& d) {
    std::vector<PointId> all;
    for (const auto& u : d.uppers)
      for (const auto& p : u.points) all.push_back(p.id);
    return all[rng() % all.size()];
  }

  // each family driver performs `want` checked applications, true on success

  bool family_diffeomorphism(int want) {
    for (int done = 0; done < want; ++done) {
      size_t bi = pick_base(true), li = rng() % bases[bi].labs.size();
      HeegaardDiagram d = bases[bi].d;
      ChiLabeling lab = bases[bi].labs[li];
      Scalar expect = before(bi, li);
      MoveDescriptor mv;
      switch (rng() % 8) {
        case 0: mv = MvRename{"upper", any_upper(d), fresh("u")}; break;
        case 1: mv = MvRename{"lower", any_lower(d), fresh("l")}; break;
        case 2: mv = MvRename{"region", any_taut(d).region, fresh("r")}; break;
        case 3: mv = MvRename{"component", d.components[rng() % d.components.size()],
                              fresh("c")};
                break;
        case 4: mv = MvRenamePoint{any_point(d), ckt::fresh_point(d)}; break;
        case 5: mv = MvRotateUpper{any_upper(d), static_cast<int>(rng() % 7)}; break;
        case 6: mv = MvRotateTaut{any_taut(d).region, static_cast<int>(rng() % 5)}; break;
        default: {
          const TautIdentity& t = any_taut(d);
          Word w = ckt::random_word(d, t.base_component,
                                    static_cast<int>(rng() % 4), rng);
          mv = MvRebaseTaut{t.region, t.base_component, std::move(w)};
          break;
        }
      }
      if (!step(d, lab, expect, mv)) return false;
    }
    return true;
  }

  bool family_basepoint(int want) {
    for (int done = 0; done < want; ++done) {
      size_t bi = pick_base(true), li = rng() % bases[bi].labs.size();
      HeegaardDiagram d = bases[bi].d;
      ChiLabeling lab = bases[bi].labs[li];
      Scalar expect = before(bi, li);
      MoveDescriptor mv = MvBasepoint{any_lower(d), static_cast<int>(1 + rng() % 4)};
      if (!step(d, lab, expect, mv)) return false;
    }
    return true;
  }

  bool family_reversal(int want) {
    for (int done = 0; done < want; ++done) {
      size_t bi = pick_base(true), li = rng() % bases[bi].labs.size();
      HeegaardDiagram d = bases[bi].d;
      ChiLabeling lab = bases[bi].labs[li];
      Scalar expect = before(bi, li);
      MoveDescriptor mv;
      if (rng() % 2)
        mv = MvReverseUpper{any_upper(d)};
      else
        mv = MvReverseLower{any_lower(d)};
      if (!step(d, lab, expect, mv)) return false;
    }
    return true;
  }

  bool family_two_point(int want) {
    for (int done = 0; done < want; ++done) {
      size_t bi = pick_base(true), li = rng() % bases[bi].labs.size();
      HeegaardDiagram d = bases[bi].d;
      ChiLabeling lab = bases[bi].labs[li];
      Scalar expect = before(bi, li);
      const UpperCircle& u = d.uppers[rng() % d.uppers.size()];
      const LowerCircle& l = d.lowers[rng() % d.lowers.size()];
      PointId np = ckt::fresh_point(d);
      MoveDescriptor mv = MvTwoPoint{u.id,
                                     l.id,
                                     static_cast<int>(rng() % (l.points.size() + 1)),
                                     static_cast<int>(rng() % (u.points.size() + 1)),
                                     rng() % 2 ? 1 : -1,
                                     np,
                                     np + 1};
      if (!step(d, lab, expect, mv)) return false;
    }
    return true;
  }

  bool family_stabilization(int want) {
    for (int done = 0; done < want;) {
      size_t bi = pick_base(true), li = rng() % bases[bi].labs.size();
      HeegaardDiagram d = bases[bi].d;
      ChiLabeling lab = bases[bi].labs[li];
      Scalar expect = before(bi, li);
      const TautIdentity& t = any_taut(d);
      std::string nu = fresh("u"), nl = fresh("l");
      MvStabilize up{t.region,
                     static_cast<int>(rng() % (t.factors.size() + 1)),
                     ckt::random_word(d, t.base_component,
                                      static_cast<int>(rng() % 3), rng),
                     static_cast<int>(rng() % cm.E.order()),
                     nu,
                     nl,
                     ckt::fresh_point(d)};
      if (!step(d, lab, expect, up)) return false;
      ++done;
      if (done >= want) break;
      if (!step(d, lab, expect, MvDestabilize{nu, nl})) return false;
      ++done;
    }
    return true;
  }

  bool family_slide_upper(int want) {
    for (int done = 0; done < want; ++done) {
      size_t bi = 3 + rng() % 2;
      size_t li = rng() % bases[bi].labs.size();
      HeegaardDiagram d = bases[bi].d;
      ChiLabeling lab = bases[bi].labs[li];
      Scalar expect = before(bi, li);
      size_t i = rng() % d.uppers.size();
      size_t j = rng() % (d.uppers.size() - 1);
      if (j >= i) ++j;
      const UpperCircle& u2 = d.uppers[j];
      std::vector<PointId> pts;
      PointId base_id = ckt::fresh_point(d);
      for (size_t k = 0; k < u2.points.size(); ++k)
        pts.push_back(base_id + static_cast<PointId>(k));
      int band = u2.points.empty() ? 0 : static_cast<int>(rng() % u2.points.size());
      MoveDescriptor mv = MvSlideUpper{d.uppers[i].id, u2.id, band, std::move(pts)};
      if (!step(d, lab, expect, mv)) return false;
    }
    return true;
  }

  bool family_slide_lower(int want) {
    for (int done = 0; done < want; ++done) {
      size_t bi = 3 + rng() % 2;
      size_t li = rng() % bases[bi].labs.size();
      HeegaardDiagram d = bases[bi].d;
      ChiLabeling lab = bases[bi].labs[li];
      Scalar expect = before(bi, li);
      size_t i = rng() % d.lowers.size();
      size_t j = rng() % (d.lowers.size() - 1);
      if (j >= i) ++j;
      const LowerCircle& l2 = d.lowers[j];
      std::vector<PointId> pts;
      PointId base_id = ckt::fresh_point(d);
      for (size_t k = 0; k < l2.points.size(); ++k)
        pts.push_back(base_id + static_cast<PointId>(k));
      MoveDescriptor mv = MvSlideLower{d.lowers[i].id, l2.id, std::move(pts)};
      if (!step(d, lab, expect, mv)) return false;
    }
    return true;
  }

  bool family_trivial_circles(int want) {
    for (int done = 0; done < want;) {
      size_t bi = pick_base(true), li = rng() % bases[bi].labs.size();
      HeegaardDiagram d = bases[bi].d;
      ChiLabeling lab = bases[bi].labs[li];
      Scalar expect = before(bi, li);
      if (rng() % 2) {
        std::string nu = fresh("u");
        MvTrivialUpper add{d.components[rng() % d.components.size()], rng() % 2 == 0,
                           static_cast<int>(rng() % cm.H.order()), nu, fresh("c")};
        if (!step(d, lab, expect, add)) return false;
        ++done;
        if (done >= want) break;
        if (!step(d, lab, expect, MvRemoveTrivialUpper{nu})) return false;
        ++done;
      } else {
        const TautIdentity& t = any_taut(d);
        std::string nl = fresh("l");
        MvTrivialLower add{t.region,
                           static_cast<int>(rng() % (t.factors.size() + 1)),
                           ckt::random_word(d, t.base_component,
                                            static_cast<int>(rng() % 3), rng),
                           rng() % 2 ? 1 : -1,
                           nl,
                           fresh("r")};
        if (!step(d, lab, expect, add)) return false;
        ++done;
        if (done >= want) break;
        if (!step(d, lab, expect, MvRemoveTrivialLower{nl})) return false;
        ++done;
      }
    }
    return true;
  }
};

Outcome criterion5() {
  auto t0 = Clock::now();
  MoveSuite suite;
  struct Family {
    const char* name;
    bool (MoveSuite::*run)(int);
  };
  const Family families[] = {
      {"diffeomorphism", &MoveSuite::family_diffeomorphism},
      {"basepoint", &MoveSuite::family_basepoint},
      {"orientation reversal", &MoveSuite::family_reversal},
      {"two-point", &MoveSuite::family_two_point},
      {"stabilization", &MoveSuite::family_stabilization},
      {"upper handle slide", &MoveSuite::family_slide_upper},
      {"lower handle slide", &MoveSuite::family_slide_lower},
      {"trivial circles", &MoveSuite::family_trivial_circles},
  };
  for (const Family& fam : families)
    if (!(suite.*fam.run)(50))
      return bad(std::string(fam.name) + ": " + suite.fail_msg);
  if (seconds_since(t0) >= 60.0) return bad("runtime exceeded 60 s");
  return ok();
}

// ---------------------------------------------------------------- criterion 6

Outcome criterion6() {
  CrossedModule cm = xmod_z4_z2();
  HopfChiCoalgebra A = builtin_kp4();
  Integrals I = compute_integrals(A);
  for (auto [p, q] : lens_pairs(6)) {
    HeegaardDiagram d = build_lens(p, q);
    auto labs = enumerate_labelings(d, cm);
    OrbitClasses oc = orbit_classes(labs, d, cm);
    std::vector<Scalar> class_value(oc.representatives.size());
    std::vector<char> seen(oc.representatives.size(), 0);
    for (size_t i = 0; i < labs.size(); ++i) {
      Scalar v = compute_invariant(d, labs[i], A, I);
      size_t c = static_cast<size_t>(oc.class_of[i]);
      if (!seen[c]) {
        class_value[c] = v;
        seen[c] = 1;
      } else if (!(class_value[c] == v)) {
        return bad("L(" + std::to_string(p) + "," + std::to_string(q) +
                   ") labeling " + std::to_string(i) + " gives " + v.str() +
                   " but its class has " + class_value[c].str());
      }
    }
  }
  return ok();
}

// ---------------------------------------------------------------- criterion 7

Outcome criterion7() {
  Field f = Field::rationals();
  std::vector<FiniteGroup> groups;
  for (int n : {1, 2, 3, 4, 5, 6, 8, 12}) groups.push_back(FiniteGroup::cyclic(n));
  groups.push_back(FiniteGroup::symmetric(3));
  groups.push_back(FiniteGroup::dihedral(4));
  groups.push_back(FiniteGroup::dihedral(5));
  groups.push_back(FiniteGroup::dihedral(6));
  groups.push_back(FiniteGroup::quaternion8());
  groups.push_back(FiniteGroup::alternating(4));
  for (const FiniteGroup& G : groups) {
    HopfChiCoalgebra A = builtin_group_algebra(f, G);
    for (auto [p, q] : lens_pairs(8)) {
      long count = 0;
      for (int g = 0; g < G.order(); ++g)
        if (G.pow(g, p) == 0) ++count;
      Scalar got = kuperberg(build_lens(p, q), A);
      if (got != Scalar::from_int(f, count))
        return bad("L(" + std::to_string(p) + "," + std::to_string(q) +
                   ") with a group of order " + std::to_string(G.order()) + ": got " +
                   got.str() + ", the element count is " + std::to_string(count));
    }
  }
  HeegaardDiagram poincare = build_poincare();
  for (int n : {2, 3}) {
    Scalar got = kuperberg(poincare, builtin_group_algebra(f, FiniteGroup::cyclic(n)));
    if (got != qs(1))
      return bad("the genus-2 homology sphere with Z/" + std::to_string(n) +
                 " gives " + got.str() + ", expected 1");
  }
  return ok();
}

// ---------------------------------------------------------------- criterion 8

Outcome criterion8() {
  HeegaardDiagram a = build_lens(2, 1);
  HeegaardDiagram b = build_lens(3, 1);
  ConnectedSum cs = connected_sum(a, b, "c", "c", "s", "s");
  {
    CrossedModule cm = xmod_z4_z2();
    HopfChiCoalgebra A = builtin_kp4();
    Integrals I = compute_integrals(A);
    auto labs_a = enumerate_labelings(a, cm);
    auto labs_b = enumerate_labelings(b, cm);
    for (const auto& la : labs_a)
      for (const auto& lb : labs_b) {
        ChiLabeling merged = merge_labeling(cs, la, lb);
        Scalar whole = compute_invariant(cs.diagram, merged, A, I);
        Scalar parts =
            compute_invariant(a, la, A, I) * compute_invariant(b, lb, A, I);
        if (!(whole == parts))
          return bad("kp4: sum gives " + whole.str() + ", parts give " + parts.str());
      }
  }
  {
    HopfChiCoalgebra A =
        builtin_group_algebra(Field::rationals(), FiniteGroup::cyclic(6));
    Integrals I = compute_integrals(A);
    auto labs_a = enumerate_labelings(a, A.cm);
    auto labs_b = enumerate_labelings(b, A.cm);
    for (const auto& la : labs_a)
      for (const auto& lb : labs_b) {
        ChiLabeling merged = merge_labeling(cs, la, lb);
        Scalar whole = compute_invariant(cs.diagram, merged, A, I);
        Scalar parts =
            compute_invariant(a, la, A, I) * compute_invariant(b, lb, A, I);
        if (!(whole == parts))
          return bad("k[Z/6]: sum gives " + whole.str() + ", parts give " +
                     parts.str());
      }
  }
  return ok();
}

// ---------------------------------------------------------------- criterion 9

Outcome criterion9() {
  CrossedModule cm = xmod_z4_z2();
  HopfChiCoalgebra A = builtin_kp4();
  HopfChiCoalgebra Aop = opposite(A);
  HopfChiCoalgebra Acop = coopposite(A);
  HeegaardDiagram d = build_lens(3, 1);
  HeegaardDiagram rd = reverse_orientation(d);
  for (const auto& lab : enumerate_labelings(d, cm)) {
    Scalar reversed = compute_invariant(rd, reverse_labeling(cm, lab), A);
    Scalar via_op = compute_invariant(d, lab, Aop);
    Scalar via_cop = compute_invariant(d, lab, Acop);
    if (!(reversed == via_op))
      return bad("mirror gives " + reversed.str() + ", opposite product gives " +
                 via_op.str());
    if (!(reversed == via_cop))
      return bad("mirror gives " + reversed.str() + ", opposite coproduct gives " +
                 via_cop.str());
  }
  return ok();
}

// --------------------------------------------------------------- criterion 10

bool names_axiom(const std::string& line, const std::vector<std::string>& phrases) {
  for (const auto& p : phrases)
    if (line.find(p) != std::string::npos) return true;
  return false;
}

Outcome criterion10() {
  const std::vector<std::string> xmod_phrases{
      "identity",       "inverses",      "associativity", "shape",
      "homomorphism",   "equivariance",  "Peiffer",       "action identity",
      "action automorphism"};
  const std::vector<std::string> hopf_phrases{"associativity fails",
                                              "unit fails",
                                              "coproduct not multiplicative",
                                              "coproduct misses the unit",
                                              "counit not multiplicative",
                                              "counit misses the unit",
                                              "counitality fails",
                                              "coassociativity fails",
                                              "antipode identity fails",
                                              "involutivity fails",
                                              "action of the identity color",
                                              "action not multiplicative",
                                              "action misses the unit",
                                              "action composition fails",
                                              "action-coproduct compatibility fails"};

  std::vector<CrossedModule> good_xmods{xmod_z4_z2(), xmod_trivial(),
                                        xmod_to_1(FiniteGroup::cyclic(6)),
                                        xmod_one_to(FiniteGroup::symmetric(3))};
  for (const auto& cm : good_xmods)
    if (!check_crossed_module(cm).empty())
      return bad("a builtin crossed module is rejected");

  Field f = Field::rationals();
  std::vector<HopfChiCoalgebra> good_hopfs{
      builtin_kp4(), builtin_kp4(Field::prime(5)),
      builtin_group_algebra(f, FiniteGroup::cyclic(6)),
      builtin_group_algebra(f, FiniteGroup::symmetric(3))};
  for (const auto& A : good_hopfs)
    if (!check_axioms(A).empty()) return bad("a builtin Hopf structure is rejected");

  std::mt19937 rng(77);
  int rejected = 0;
  for (int draws = 0; rejected < 20 && draws < 400; ++draws) {
    CrossedModule cm = good_xmods[rng() % good_xmods.size()];
    std::vector<std::pair<int, int>> sites;  // (-1, e) mutates chi, (x, e) action
    if (cm.H.order() > 1)
      for (int e = 0; e < cm.E.order(); ++e) sites.push_back({-1, e});
    if (cm.E.order() > 1)
      for (int x = 0; x < cm.H.order(); ++x)
        for (int e = 0; e < cm.E.order(); ++e) sites.push_back({x, e});
    if (sites.empty()) continue;
    auto [x, e] = sites[rng() % sites.size()];
    if (x < 0) {
      int& slot = cm.chi[static_cast<size_t>(e)];
      slot = (slot + 1 + static_cast<int>(rng()) % (cm.H.order() - 1) +
              cm.H.order()) % cm.H.order();
    } else {
      int& slot = cm.action[static_cast<size_t>(x)][static_cast<size_t>(e)];
      slot = (slot + 1 + static_cast<int>(rng()) % (cm.E.order() - 1) +
              cm.E.order()) % cm.E.order();
    }
    auto rep = check_crossed_module(cm);
    if (rep.empty()) continue;
    if (!names_axiom(rep.front(), xmod_phrases))
      return bad("crossed module rejection does not name an axiom: " + rep.front());
    ++rejected;
  }
  if (rejected < 20)
    return bad("only " + std::to_string(rejected) +
               " crossed module mutations were rejected");

  std::vector<HopfChiCoalgebra> hopf_bases{
      builtin_kp4(), builtin_group_algebra(f, FiniteGroup::symmetric(3))};
  rejected = 0;
  for (int draws = 0; rejected < 20 && draws < 400; ++draws) {
    HopfChiCoalgebra A = hopf_bases[rng() % hopf_bases.size()];
    int nx = static_cast<int>(A.comps.size());
    Scalar bump = Scalar::from_int(A.field, 1 + static_cast<int>(rng() % 3));
    switch (rng() % 5) {
      case 0: {
        GradedComponent& c = A.comps[rng() % A.comps.size()];
        int n = c.dim;
        c.mu[rng() % n][rng() % n][rng() % n] += bump;
        break;
      }
      case 1: {
        int x = static_cast<int>(rng()) % nx, y = static_cast<int>(rng()) % nx;
        if (x < 0) x = -x;
        if (y < 0) y = -y;
        Mat& m = A.coproduct[static_cast<size_t>(x)][static_cast<size_t>(y)];
        m[rng() % m.size()][rng() % m[0].size()] += bump;
        break;
      }
      case 2:
        A.counit[rng() % A.counit.size()] += bump;
        break;
      case 3: {
        Mat& m = A.antipode[rng() % A.antipode.size()];
        m[rng() % m.size()][rng() % m[0].size()] += bump;
        break;
      }
      default: {
        auto& row = A.action[rng() % A.action.size()];
        Mat& m = row[rng() % row.size()];
        m[rng() % m.size()][rng() % m[0].size()] += bump;
        break;
      }
    }
    std::vector<std::string> rep;
    try {
      rep = check_axioms(A);
    } catch (const CkError&) {
      continue;  // a shape complaint is not an axiom rejection
    }
    if (rep.empty()) continue;
    if (!names_axiom(rep.front(), hopf_phrases))
      return bad("Hopf rejection does not name an axiom: " + rep.front());
    ++rejected;
  }
  if (rejected < 20)
    return bad("only " + std::to_string(rejected) + " Hopf mutations were rejected");
  return ok();
}

// --------------------------------------------------------------------- driver

Outcome run_criterion(int n) {
  switch (n) {
    case 1: return criterion1();
    case 2: return criterion2();
    case 3: return criterion3();
    case 4: return criterion4();
    case 5: return criterion5();
    case 6: return criterion6();
    case 7: return criterion7();
    case 8: return criterion8();
    case 9: return criterion9();
    case 10: return criterion10();
    default: return bad("no such criterion");
  }
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > 10) {
      std::cerr << "usage: " << argv[0] << " [1..10]\n";
      return 2;
    }
  }
  int failures = 0;
  for (int n = 1; n <= 10; ++n) {
    if (only && n != only) continue;
    Outcome o;
    auto t0 = Clock::now();
    try {
      o = run_criterion(n);
    } catch (const std::exception& e) {
      o = bad(std::string("unexpected error: ") + e.what());
    }
    double secs = seconds_since(t0);
    std::ostringstream line;
    line << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL");
    if (!o.detail.empty()) line << " (" << o.detail << ")";
    line << " [" << static_cast<int>(secs * 1000) << " ms]";
    std::cout << line.str() << std::endl;
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
