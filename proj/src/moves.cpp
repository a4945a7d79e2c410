#include "ck/moves.hpp"

#include <algorithm>
#include <set>

namespace ck {

namespace {

[[noreturn]] void refuse(const std::string& move, const std::string& reason) {
  fail("PreconditionViolated", move + ": " + reason);
}

void require_fresh_circle(const HeegaardDiagram& d, const CircleId& id,
                          const std::string& move) {
  for (const auto& u : d.uppers)
    if (u.id == id) refuse(move, "circle id " + id + " already taken");
  for (const auto& l : d.lowers)
    if (l.id == id) refuse(move, "circle id " + id + " already taken");
}

void require_fresh_point(const HeegaardDiagram& d, PointId id, const std::string& move) {
  for (const auto& u : d.uppers)
    for (const auto& p : u.points)
      if (p.id == id) refuse(move, "point id " + std::to_string(id) + " already taken");
}

int positive_mod(int a, int n) { return ((a % n) + n) % n; }

// component reached after the first `steps` letters of the round trip
ComponentId walk_prefix(const HeegaardDiagram& d, const LowerCircle& l, int steps) {
  Word w = omega(d, l.id);
  w.resize(static_cast<size_t>(steps));
  return walk(d, l.base_component, w);
}

void do_basepoint_step(HeegaardDiagram& d, ChiLabeling& lab, const CrossedModule& cm,
                       const CircleId& lower) {
  LowerCircle* l = d.find_lower(lower);
  if (l->points.empty()) return;
  PointId first = l->points.front();
  auto [u, pt] = d.locate_point(first);
  int nu = pt->sign;
  CircleId uid = u->id;

  std::rotate(l->points.begin(), l->points.begin() + 1, l->points.end());
  l->base_component = nu > 0 ? d.upper(uid).cplus : d.upper(uid).cminus;
  for (auto& t : d.tauts)
    for (auto& f : t.factors)
      if (f.lower == lower) {
        f.r.push_back({uid, nu});
        f.r = reduce(std::move(f.r));
      }

  int h = nu > 0 ? cm.H.inv(lab.alpha.at(uid)) : lab.alpha.at(uid);
  lab.beta[lower] = cm.act(h, lab.beta.at(lower));
}

struct Applier {
  const CrossedModule& cm;
  HeegaardDiagram d;
  ChiLabeling lab;

  Applier(const HeegaardDiagram& d0, const ChiLabeling& l0, const CrossedModule& c0)
      : cm(c0), d(d0), lab(l0) {}

  void operator()(const MvRename& mv) {
    try {
      if (mv.what == "component") {
        rename_component(d, mv.from, mv.to);
      } else if (mv.what == "upper") {
        rename_upper(d, mv.from, mv.to);
        auto node = lab.alpha.extract(mv.from);
        if (!node.empty()) {
          node.key() = mv.to;
          lab.alpha.insert(std::move(node));
        }
      } else if (mv.what == "lower") {
        rename_lower(d, mv.from, mv.to);
        auto node = lab.beta.extract(mv.from);
        if (!node.empty()) {
          node.key() = mv.to;
          lab.beta.insert(std::move(node));
        }
      } else if (mv.what == "region") {
        rename_region(d, mv.from, mv.to);
      } else {
        refuse("rename", "unknown id namespace " + mv.what);
      }
    } catch (const CkError& e) {
      if (e.kind() == "PreconditionViolated") throw;
      refuse("rename", e.what());
    }
  }

  void operator()(const MvRenamePoint& mv) {
    try {
      rename_point(d, mv.from, mv.to);
    } catch (const CkError& e) {
      refuse("rename_point", e.what());
    }
  }

  void operator()(const MvRotateUpper& mv) {
    UpperCircle* u = d.find_upper(mv.upper);
    if (!u) refuse("rotate_upper", "no upper " + mv.upper);
    if (u->points.empty()) return;
    int n = static_cast<int>(u->points.size());
    int k = positive_mod(mv.steps, n);
    std::rotate(u->points.begin(), u->points.begin() + k, u->points.end());
  }

  void operator()(const MvRotateTaut& mv) {
    TautIdentity* t = d.find_taut(mv.region);
    if (!t) refuse("rotate_taut", "no taut region " + mv.region);
    if (t->factors.empty()) return;
    int n = static_cast<int>(t->factors.size());
    int k = positive_mod(mv.steps, n);
    std::rotate(t->factors.begin(), t->factors.begin() + k, t->factors.end());
  }

  void operator()(const MvRebaseTaut& mv) {
    TautIdentity* t = d.find_taut(mv.region);
    if (!t) refuse("rebase_taut", "no taut region " + mv.region);
    if (!d.has_component(mv.new_base)) refuse("rebase_taut", "unknown component");
    try {
      if (walk(d, mv.new_base, mv.w) != t->base_component)
        refuse("rebase_taut", "conjugating path does not reach the old base");
    } catch (const CkError& e) {
      refuse("rebase_taut", e.what());
    }
    for (auto& f : t->factors) {
      Word nr = mv.w;
      nr.insert(nr.end(), f.r.begin(), f.r.end());
      f.r = reduce(std::move(nr));
    }
    t->base_component = mv.new_base;
  }

  void operator()(const MvBasepoint& mv) {
    LowerCircle* l = d.find_lower(mv.lower);
    if (!l) refuse("basepoint", "no lower " + mv.lower);
    if (mv.steps < 0) refuse("basepoint", "steps must be nonnegative");
    for (int i = 0; i < mv.steps; ++i) do_basepoint_step(d, lab, cm, mv.lower);
  }

  void operator()(const MvReverseUpper& mv) {
    UpperCircle* u = d.find_upper(mv.upper);
    if (!u) refuse("reverse_upper", "no upper " + mv.upper);
    std::reverse(u->points.begin(), u->points.end());
    for (auto& p : u->points) p.sign = -p.sign;
    std::swap(u->cminus, u->cplus);
    for (auto& t : d.tauts)
      for (auto& f : t.factors)
        for (auto& x : f.r)
          if (x.upper == mv.upper) x.sign = -x.sign;
    lab.alpha[mv.upper] = cm.H.inv(lab.alpha.at(mv.upper));
  }

  void operator()(const MvReverseLower& mv) {
    LowerCircle* l = d.find_lower(mv.lower);
    if (!l) refuse("reverse_lower", "no lower " + mv.lower);
    std::reverse(l->points.begin(), l->points.end());
    for (auto& u : d.uppers)
      for (auto& p : u.points)
        if (p.lower == mv.lower) p.sign = -p.sign;
    for (auto& t : d.tauts)
      for (auto& f : t.factors)
        if (f.lower == mv.lower) f.eps = -f.eps;
    lab.beta[mv.lower] = cm.E.inv(lab.beta.at(mv.lower));
  }

  void operator()(const MvTwoPoint& mv) {
    UpperCircle* u = d.find_upper(mv.upper);
    LowerCircle* l = d.find_lower(mv.lower);
    if (!u || !l) refuse("two_point", "unknown circle");
    if (mv.first_sign != 1 && mv.first_sign != -1)
      refuse("two_point", "sign must be +1 or -1");
    if (mv.pos_l < 0 || mv.pos_l > static_cast<int>(l->points.size()))
      refuse("two_point", "lower position out of range");
    if (mv.pos_u < 0 || mv.pos_u > static_cast<int>(u->points.size()))
      refuse("two_point", "upper position out of range");
    if (mv.id_first == mv.id_second) refuse("two_point", "point ids must differ");
    require_fresh_point(d, mv.id_first, "two_point");
    require_fresh_point(d, mv.id_second, "two_point");
    ComponentId at = walk_prefix(d, *l, mv.pos_l);
    const ComponentId& need = mv.first_sign > 0 ? u->cminus : u->cplus;
    if (at != need)
      refuse("two_point", "finger starts in " + at + " but the crossing needs " + need);

    l->points.insert(l->points.begin() + mv.pos_l, {mv.id_first, mv.id_second});
    u->points.insert(u->points.begin() + mv.pos_u,
                     {UpperPoint{mv.id_first, mv.lower, mv.first_sign},
                      UpperPoint{mv.id_second, mv.lower, -mv.first_sign}});
  }

  void operator()(const MvStabilize& mv) {
    TautIdentity* t = d.find_taut(mv.region);
    if (!t) refuse("stabilize", "no taut region " + mv.region);
    if (mv.insert_pos < 0 || mv.insert_pos > static_cast<int>(t->factors.size()))
      refuse("stabilize", "insertion position out of range");
    if (mv.e < 0 || mv.e >= cm.E.order()) refuse("stabilize", "color out of range");
    require_fresh_circle(d, mv.new_upper, "stabilize");
    require_fresh_circle(d, mv.new_lower, "stabilize");
    if (mv.new_upper == mv.new_lower) refuse("stabilize", "circle ids must differ");
    require_fresh_point(d, mv.new_point, "stabilize");
    ComponentId c;
    try {
      c = walk(d, t->base_component, mv.r);
    } catch (const CkError& e) {
      refuse("stabilize", e.what());
    }

    d.uppers.push_back({mv.new_upper, c, c, {{mv.new_point, mv.new_lower, 1}}});
    d.lowers.push_back({mv.new_lower, c, {mv.new_point}});
    d.genus += 1;
    t = d.find_taut(mv.region);
    t->factors.insert(t->factors.begin() + mv.insert_pos,
                      {TautFactor{mv.r, mv.new_lower, 1}, TautFactor{mv.r, mv.new_lower, -1}});
    lab.alpha[mv.new_upper] = cm.chi_of(mv.e);
    lab.beta[mv.new_lower] = mv.e;
  }

  void operator()(const MvDestabilize& mv) {
    UpperCircle* u = d.find_upper(mv.upper);
    LowerCircle* l = d.find_lower(mv.lower);
    if (!u || !l) refuse("destabilize", "unknown circle");
    if (l->points.size() != 1 || u->points.size() != 1 ||
        u->points[0].id != l->points[0] || u->points[0].lower != mv.lower)
      refuse("destabilize", "circles do not form a stabilization pair");
    if (u->cminus != u->cplus) refuse("destabilize", "upper circle is not a loop");

    for (auto& t : d.tauts)
      for (auto& f : t.factors) f.r = reduce(std::move(f.r));
    for (const auto& t : d.tauts)
      for (const auto& f : t.factors)
        for (const auto& x : f.r)
          if (x.upper == mv.upper)
            refuse("destabilize", "a taut path still crosses " + mv.upper);

    // the two factors naming the lower must cancel as a cyclically adjacent pair
    TautIdentity* home = nullptr;
    std::vector<int> where;
    int count = 0;
    for (auto& t : d.tauts)
      for (size_t i = 0; i < t.factors.size(); ++i)
        if (t.factors[i].lower == mv.lower) {
          ++count;
          if (home == nullptr || home == &t) {
            home = &t;
            where.push_back(static_cast<int>(i));
          }
        }
    if (count != 2 || where.size() != 2)
      refuse("destabilize", "lower circle is not referenced by one adjacent factor pair");
    int n = static_cast<int>(home->factors.size());
    int at = -1;
    if (where[1] == where[0] + 1) {
      at = where[0];
    } else if (where[0] == 0 && where[1] == n - 1 && n > 2) {
      std::rotate(home->factors.begin(), home->factors.begin() + where[1],
                  home->factors.end());
      at = 0;
    } else {
      refuse("destabilize", "lower circle is not referenced by one adjacent factor pair");
    }
    const TautFactor& f1 = home->factors[at];
    const TautFactor& f2 = home->factors[at + 1];
    if (f1.eps + f2.eps != 0 || f1.r != f2.r)
      refuse("destabilize", "factor pair does not cancel");

    home->factors.erase(home->factors.begin() + at, home->factors.begin() + at + 2);
    d.uppers.erase(std::remove_if(d.uppers.begin(), d.uppers.end(),
                                  [&](const UpperCircle& c) { return c.id == mv.upper; }),
                   d.uppers.end());
    d.lowers.erase(std::remove_if(d.lowers.begin(), d.lowers.end(),
                                  [&](const LowerCircle& c) { return c.id == mv.lower; }),
                   d.lowers.end());
    d.genus -= 1;
    lab.alpha.erase(mv.upper);
    lab.beta.erase(mv.lower);
  }

  void operator()(const MvSlideUpper& mv) {
    UpperCircle* u1 = d.find_upper(mv.u1);
    UpperCircle* u2 = d.find_upper(mv.u2);
    if (!u1 || !u2) refuse("slide_upper", "unknown upper circle");
    if (mv.u1 == mv.u2) refuse("slide_upper", "cannot slide a circle over itself");
    if (u1->cminus != u2->cminus)
      refuse("slide_upper", "circles do not share their cminus component");
    size_t n2 = u2->points.size();
    if (mv.new_points.size() != n2)
      refuse("slide_upper", "need one fresh id per copied point");
    {
      std::set<PointId> distinct(mv.new_points.begin(), mv.new_points.end());
      if (distinct.size() != n2) refuse("slide_upper", "copy ids must be distinct");
    }
    for (PointId p : mv.new_points) require_fresh_point(d, p, "slide_upper");
    if (n2 == 0 ? mv.band_pos != 0
                : (mv.band_pos < 0 || mv.band_pos >= static_cast<int>(n2)))
      refuse("slide_upper", "band position out of range");

    // copy block in band order, appended to u1 (band foot just before u1's basepoint)
    std::vector<UpperPoint> block;
    for (size_t i = 0; i < n2; ++i) {
      const UpperPoint& orig = u2->points[(static_cast<size_t>(mv.band_pos) + i) % n2];
      block.push_back({mv.new_points[i], orig.lower, orig.sign});

      LowerCircle* l = d.find_lower(orig.lower);
      auto it = std::find(l->points.begin(), l->points.end(), orig.id);
      // positive crossings meet the parallel copy first, negative ones last
      if (orig.sign > 0)
        l->points.insert(it, block.back().id);
      else
        l->points.insert(it + 1, block.back().id);
    }
    u1->points.insert(u1->points.end(), block.begin(), block.end());

    for (auto& t : d.tauts)
      for (auto& f : t.factors) {
        Word nr;
        for (const auto& x : f.r) {
          if (x.upper != mv.u2) {
            nr.push_back(x);
          } else if (x.sign > 0) {
            nr.push_back({mv.u1, 1});
            nr.push_back(x);
          } else {
            nr.push_back(x);
            nr.push_back({mv.u1, -1});
          }
        }
        f.r = std::move(nr);
      }

    u2->cminus = u1->cplus;
    lab.alpha[mv.u2] = cm.H.mul(cm.H.inv(lab.alpha.at(mv.u1)), lab.alpha.at(mv.u2));
  }

  void operator()(const MvSlideLower& mv) {
    LowerCircle* l1 = d.find_lower(mv.l1);
    LowerCircle* l2 = d.find_lower(mv.l2);
    if (!l1 || !l2) refuse("slide_lower", "unknown lower circle");
    if (mv.l1 == mv.l2) refuse("slide_lower", "cannot slide a circle over itself");
    if (l1->base_component != l2->base_component)
      refuse("slide_lower", "circles do not share their base component");
    if (mv.new_points.size() != l2->points.size())
      refuse("slide_lower", "need one fresh id per copied point");
    {
      std::set<PointId> distinct(mv.new_points.begin(), mv.new_points.end());
      if (distinct.size() != mv.new_points.size())
        refuse("slide_lower", "copy ids must be distinct");
    }
    for (PointId p : mv.new_points) require_fresh_point(d, p, "slide_lower");

    for (size_t i = 0; i < l2->points.size(); ++i) {
      PointId orig = l2->points[i];
      auto [uc, pt] = d.locate_point(orig);
      int sign = pt->sign;
      UpperCircle* u = d.find_upper(uc->id);
      auto it = std::find_if(u->points.begin(), u->points.end(),
                             [orig](const UpperPoint& p) { return p.id == orig; });
      // mirror of the upper slide: the parallel copy trails positive crossings
      UpperPoint copy{mv.new_points[i], mv.l1, sign};
      if (sign > 0)
        u->points.insert(it + 1, copy);
      else
        u->points.insert(it, copy);
    }
    l1 = d.find_lower(mv.l1);
    l1->points.insert(l1->points.end(), mv.new_points.begin(), mv.new_points.end());

    for (auto& t : d.tauts) {
      std::vector<TautFactor> nf;
      for (const auto& f : t.factors) {
        if (f.lower != mv.l1) {
          nf.push_back(f);
        } else if (f.eps > 0) {
          nf.push_back(f);
          nf.push_back({f.r, mv.l2, -1});
        } else {
          nf.push_back({f.r, mv.l2, 1});
          nf.push_back(f);
        }
      }
      t.factors = std::move(nf);
    }

    lab.beta[mv.l1] = cm.E.mul(lab.beta.at(mv.l1), lab.beta.at(mv.l2));
  }

  void operator()(const MvTrivialUpper& mv) {
    if (!d.has_component(mv.host)) refuse("trivial_upper", "unknown host component");
    if (mv.x < 0 || mv.x >= cm.H.order()) refuse("trivial_upper", "label out of range");
    require_fresh_circle(d, mv.new_upper, "trivial_upper");
    if (d.has_component(mv.new_component))
      refuse("trivial_upper", "component id already taken");
    d.components.push_back(mv.new_component);
    if (mv.host_is_cminus)
      d.uppers.push_back({mv.new_upper, mv.host, mv.new_component, {}});
    else
      d.uppers.push_back({mv.new_upper, mv.new_component, mv.host, {}});
    lab.alpha[mv.new_upper] = mv.x;
  }

  void operator()(const MvRemoveTrivialUpper& mv) {
    UpperCircle* u = d.find_upper(mv.upper);
    if (!u) refuse("remove_trivial_upper", "no upper " + mv.upper);
    if (!u->points.empty()) refuse("remove_trivial_upper", "circle still has crossings");
    if (u->cminus == u->cplus)
      refuse("remove_trivial_upper", "circle does not bound a disk");

    auto disk_free = [&](const ComponentId& c) {
      for (const auto& other : d.uppers) {
        if (other.id == mv.upper) continue;
        if (other.cminus == c || other.cplus == c) return false;
      }
      for (const auto& l : d.lowers)
        if (l.base_component == c) return false;
      for (const auto& t : d.tauts)
        if (t.base_component == c) return false;
      return true;
    };
    ComponentId disk;
    if (disk_free(u->cplus))
      disk = u->cplus;
    else if (disk_free(u->cminus))
      disk = u->cminus;
    else
      refuse("remove_trivial_upper", "neither side is an unreferenced disk");

    for (auto& t : d.tauts)
      for (auto& f : t.factors) f.r = reduce(std::move(f.r));
    for (const auto& t : d.tauts)
      for (const auto& f : t.factors)
        for (const auto& x : f.r)
          if (x.upper == mv.upper)
            refuse("remove_trivial_upper", "a taut path still crosses " + mv.upper);

    d.uppers.erase(std::remove_if(d.uppers.begin(), d.uppers.end(),
                                  [&](const UpperCircle& c) { return c.id == mv.upper; }),
                   d.uppers.end());
    d.components.erase(std::remove(d.components.begin(), d.components.end(), disk),
                       d.components.end());
    lab.alpha.erase(mv.upper);
  }

  void operator()(const MvTrivialLower& mv) {
    TautIdentity* host = d.find_taut(mv.host_region);
    if (!host) refuse("trivial_lower", "no taut region " + mv.host_region);
    if (mv.insert_pos < 0 || mv.insert_pos > static_cast<int>(host->factors.size()))
      refuse("trivial_lower", "insertion position out of range");
    if (mv.eps != 1 && mv.eps != -1) refuse("trivial_lower", "eps must be +1 or -1");
    require_fresh_circle(d, mv.new_lower, "trivial_lower");
    if (d.find_taut(mv.new_region)) refuse("trivial_lower", "region id already taken");
    ComponentId c;
    try {
      c = walk(d, host->base_component, mv.r);
    } catch (const CkError& e) {
      refuse("trivial_lower", e.what());
    }

    d.lowers.push_back({mv.new_lower, c, {}});
    host->factors.insert(host->factors.begin() + mv.insert_pos,
                         TautFactor{mv.r, mv.new_lower, -mv.eps});
    d.tauts.push_back({mv.new_region, c, {TautFactor{{}, mv.new_lower, mv.eps}}});
    lab.beta[mv.new_lower] = 0;
  }

  void operator()(const MvRemoveTrivialLower& mv) {
    LowerCircle* l = d.find_lower(mv.lower);
    if (!l) refuse("remove_trivial_lower", "no lower " + mv.lower);
    if (!l->points.empty()) refuse("remove_trivial_lower", "circle still has crossings");

    int disk_taut = -1;
    for (size_t i = 0; i < d.tauts.size(); ++i) {
      const TautIdentity& t = d.tauts[i];
      if (t.factors.size() == 1 && t.factors[0].lower == mv.lower &&
          reduce(t.factors[0].r).empty()) {
        disk_taut = static_cast<int>(i);
        break;
      }
    }
    if (disk_taut < 0) refuse("remove_trivial_lower", "no disk region for " + mv.lower);
    int eps = d.tauts[static_cast<size_t>(disk_taut)].factors[0].eps;

    int refs = 0;
    TautIdentity* other_taut = nullptr;
    int other_at = -1;
    for (size_t i = 0; i < d.tauts.size(); ++i)
      for (size_t j = 0; j < d.tauts[i].factors.size(); ++j)
        if (d.tauts[i].factors[j].lower == mv.lower) {
          ++refs;
          if (static_cast<int>(i) != disk_taut) {
            other_taut = &d.tauts[i];
            other_at = static_cast<int>(j);
          }
        }
    if (refs != 2 || other_taut == nullptr)
      refuse("remove_trivial_lower", "circle is not referenced exactly twice");
    if (other_taut->factors[static_cast<size_t>(other_at)].eps != -eps)
      refuse("remove_trivial_lower", "reference exponents do not cancel");

    other_taut->factors.erase(other_taut->factors.begin() + other_at);
    d.tauts.erase(d.tauts.begin() + disk_taut);
    d.lowers.erase(std::remove_if(d.lowers.begin(), d.lowers.end(),
                                  [&](const LowerCircle& c) { return c.id == mv.lower; }),
                   d.lowers.end());
    lab.beta.erase(mv.lower);
  }
};

}  // namespace

std::string move_name(const MoveDescriptor& mv) {
  struct Namer {
    std::string operator()(const MvRename&) { return "rename"; }
    std::string operator()(const MvRenamePoint&) { return "rename_point"; }
    std::string operator()(const MvRotateUpper&) { return "rotate_upper"; }
    std::string operator()(const MvRotateTaut&) { return "rotate_taut"; }
    std::string operator()(const MvRebaseTaut&) { return "rebase_taut"; }
    std::string operator()(const MvBasepoint&) { return "basepoint"; }
    std::string operator()(const MvReverseUpper&) { return "reverse_upper"; }
    std::string operator()(const MvReverseLower&) { return "reverse_lower"; }
    std::string operator()(const MvTwoPoint&) { return "two_point"; }
    std::string operator()(const MvStabilize&) { return "stabilize"; }
    std::string operator()(const MvDestabilize&) { return "destabilize"; }
    std::string operator()(const MvSlideUpper&) { return "slide_upper"; }
    std::string operator()(const MvSlideLower&) { return "slide_lower"; }
    std::string operator()(const MvTrivialUpper&) { return "trivial_upper"; }
    std::string operator()(const MvRemoveTrivialUpper&) { return "remove_trivial_upper"; }
    std::string operator()(const MvTrivialLower&) { return "trivial_lower"; }
    std::string operator()(const MvRemoveTrivialLower&) { return "remove_trivial_lower"; }
  };
  return std::visit(Namer{}, mv);
}

std::pair<HeegaardDiagram, ChiLabeling> apply_move(const HeegaardDiagram& dia,
                                                   const ChiLabeling& lab,
                                                   const CrossedModule& cm,
                                                   const MoveDescriptor& mv) {
  Applier ap(dia, lab, cm);
  std::visit(ap, mv);
  auto rep = validate(ap.d);
  if (!rep.empty())
    fail("InternalError", move_name(mv) + " broke the diagram: " + rep.front());
  auto lrep = check_labeling(ap.d, cm, ap.lab);
  if (!lrep.empty())
    fail("InternalError", move_name(mv) + " broke the labeling: " + lrep.front());
  return {std::move(ap.d), std::move(ap.lab)};
}

}  // namespace ck
