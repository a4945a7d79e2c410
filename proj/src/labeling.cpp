#include "ck/labeling.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

namespace ck {

int eval_word(const CrossedModule& cm, const std::map<CircleId, int>& alpha, const Word& w) {
  int acc = 0;
  for (const auto& x : w) {
    auto it = alpha.find(x.upper);
    if (it == alpha.end()) fail("IllTypedWord", "no alpha value for upper " + x.upper);
    acc = cm.H.mul(acc, x.sign > 0 ? it->second : cm.H.inv(it->second));
  }
  return acc;
}

int derivation(const CrossedModule& cm, const std::map<CircleId, int>& alpha,
               const std::map<CircleId, int>& d, const Word& w) {
  int acc_e = 0;  // derivation of the prefix
  int acc_h = 0;  // alpha-tilde of the prefix
  for (const auto& x : w) {
    auto ai = alpha.find(x.upper);
    auto di = d.find(x.upper);
    if (ai == alpha.end() || di == d.end())
      fail("IllTypedWord", "no value for upper " + x.upper);
    int step = x.sign > 0 ? di->second
                          : cm.act(cm.H.inv(ai->second), cm.E.inv(di->second));
    acc_e = cm.E.mul(acc_e, cm.act(acc_h, step));
    acc_h = cm.H.mul(acc_h, x.sign > 0 ? ai->second : cm.H.inv(ai->second));
  }
  return acc_e;
}

std::vector<std::string> check_labeling(const HeegaardDiagram& dia, const CrossedModule& cm,
                                        const ChiLabeling& lab) {
  std::vector<std::string> rep;
  int nh = cm.H.order(), ne = cm.E.order();

  for (const auto& u : dia.uppers) {
    auto it = lab.alpha.find(u.id);
    if (it == lab.alpha.end())
      rep.push_back("alpha misses upper " + u.id);
    else if (it->second < 0 || it->second >= nh)
      rep.push_back("alpha value out of range on " + u.id);
  }
  for (const auto& [u, v] : lab.alpha) {
    (void)v;
    bool known = false;
    for (const auto& uc : dia.uppers) known = known || uc.id == u;
    if (!known) rep.push_back("alpha names unknown upper " + u);
  }
  for (const auto& l : dia.lowers) {
    auto it = lab.beta.find(l.id);
    if (it == lab.beta.end())
      rep.push_back("beta misses lower " + l.id);
    else if (it->second < 0 || it->second >= ne)
      rep.push_back("beta value out of range on " + l.id);
  }
  for (const auto& [l, v] : lab.beta) {
    (void)v;
    bool known = false;
    for (const auto& lc : dia.lowers) known = known || lc.id == l;
    if (!known) rep.push_back("beta names unknown lower " + l);
  }
  if (!rep.empty()) return rep;

  for (const auto& l : dia.lowers) {
    int lhs = cm.chi_of(lab.beta.at(l.id));
    int rhs = eval_word(cm, lab.alpha, omega(dia, l.id));
    if (lhs != rhs)
      rep.push_back("condition (i) fails on lower " + l.id);
  }
  for (const auto& t : dia.tauts) {
    int prod = 0;
    for (const auto& f : t.factors) {
      int r = eval_word(cm, lab.alpha, f.r);
      int v = cm.act(r, lab.beta.at(f.lower));
      prod = cm.E.mul(prod, f.eps > 0 ? v : cm.E.inv(v));
    }
    if (prod != 0)
      rep.push_back("condition (ii) fails on taut region " + t.region);
  }
  return rep;
}

GaugeElement gauge_mul(const HeegaardDiagram& dia, const CrossedModule& cm,
                       const GaugeElement& g, const GaugeElement& h) {
  GaugeElement out;
  for (const auto& c : dia.components)
    out.a[c] = cm.H.mul(g.a.at(c), h.a.at(c));
  for (const auto& u : dia.uppers) {
    int twisted = cm.act(cm.H.inv(h.a.at(u.cminus)), g.d.at(u.id));
    out.d[u.id] = cm.E.mul(twisted, h.d.at(u.id));
  }
  return out;
}

ChiLabeling gauge_act(const HeegaardDiagram& dia, const CrossedModule& cm,
                      const GaugeElement& g, const ChiLabeling& lab) {
  ChiLabeling out;
  for (const auto& u : dia.uppers) {
    int v = cm.H.mul(g.a.at(u.cminus), cm.chi_of(g.d.at(u.id)));
    v = cm.H.mul(v, lab.alpha.at(u.id));
    v = cm.H.mul(v, cm.H.inv(g.a.at(u.cplus)));
    out.alpha[u.id] = v;
  }
  for (const auto& l : dia.lowers) {
    int dw = derivation(cm, lab.alpha, g.d, omega(dia, l.id));
    out.beta[l.id] = cm.act(g.a.at(l.base_component), cm.E.mul(dw, lab.beta.at(l.id)));
  }
  return out;
}

unsigned long long labeling_budget() {
  if (const char* env = std::getenv("CK_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 10000000ULL;
}

std::vector<ChiLabeling> enumerate_labelings(const HeegaardDiagram& dia,
                                             const CrossedModule& cm) {
  unsigned long long budget = labeling_budget();
  unsigned long long cost = 1;
  auto bump = [&cost, budget](int factor) {
    if (factor > 0 && cost > budget / static_cast<unsigned long long>(factor) + 1)
      cost = budget + 1;
    else
      cost *= static_cast<unsigned long long>(factor);
  };
  for (size_t i = 0; i < dia.uppers.size(); ++i) bump(cm.H.order());
  for (size_t i = 0; i < dia.lowers.size(); ++i) bump(cm.E.order());
  if (cost > budget)
    fail("BudgetExceeded",
         "labeling search space exceeds budget " + std::to_string(budget));

  std::vector<Word> omegas;
  omegas.reserve(dia.lowers.size());
  for (const auto& l : dia.lowers) omegas.push_back(omega(dia, l.id));

  std::vector<std::vector<int>> chi_preimage(static_cast<size_t>(cm.H.order()));
  for (int e = 0; e < cm.E.order(); ++e)
    chi_preimage[static_cast<size_t>(cm.chi_of(e))].push_back(e);

  std::vector<ChiLabeling> out;
  size_t nu = dia.uppers.size(), nl = dia.lowers.size();
  std::vector<int> avals(nu, 0);

  auto try_betas = [&](const std::map<CircleId, int>& alpha) {
    std::vector<const std::vector<int>*> cand(nl);
    for (size_t i = 0; i < nl; ++i) {
      int target = eval_word(cm, alpha, omegas[i]);
      cand[i] = &chi_preimage[static_cast<size_t>(target)];
      if (cand[i]->empty()) return;
    }
    std::vector<size_t> pick(nl, 0);
    while (true) {
      ChiLabeling lab;
      lab.alpha = alpha;
      for (size_t i = 0; i < nl; ++i)
        lab.beta[dia.lowers[i].id] = (*cand[i])[pick[i]];
      bool ok = true;
      for (const auto& t : dia.tauts) {
        int prod = 0;
        for (const auto& f : t.factors) {
          int r = eval_word(cm, alpha, f.r);
          int v = cm.act(r, lab.beta.at(f.lower));
          prod = cm.E.mul(prod, f.eps > 0 ? v : cm.E.inv(v));
        }
        if (prod != 0) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(std::move(lab));
      size_t i = nl;
      while (i > 0) {
        --i;
        if (++pick[i] < cand[i]->size()) break;
        pick[i] = 0;
        if (i == 0) return;
      }
      if (nl == 0) return;
    }
  };

  while (true) {
    std::map<CircleId, int> alpha;
    for (size_t i = 0; i < nu; ++i) alpha[dia.uppers[i].id] = avals[i];
    try_betas(alpha);
    size_t i = nu;
    bool done = true;
    while (i > 0) {
      --i;
      if (++avals[i] < cm.H.order()) {
        done = false;
        break;
      }
      avals[i] = 0;
    }
    if (done) break;
  }
  return out;
}

OrbitClasses orbit_classes(const std::vector<ChiLabeling>& labs, const HeegaardDiagram& dia,
                           const CrossedModule& cm) {
  auto key_of = [&dia](const ChiLabeling& lab) {
    std::vector<int> key;
    for (const auto& u : dia.uppers) key.push_back(lab.alpha.at(u.id));
    for (const auto& l : dia.lowers) key.push_back(lab.beta.at(l.id));
    return key;
  };
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < labs.size(); ++i) index[key_of(labs[i])] = static_cast<int>(i);

  std::vector<int> parent(labs.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> root = [&parent](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto unite = [&parent, &root](int x, int y) {
    x = root(x);
    y = root(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  };

  GaugeElement id_gauge;
  for (const auto& c : dia.components) id_gauge.a[c] = 0;
  for (const auto& u : dia.uppers) id_gauge.d[u.id] = 0;

  for (size_t i = 0; i < labs.size(); ++i) {
    for (const auto& c : dia.components)
      for (int x = 1; x < cm.H.order(); ++x) {
        GaugeElement g = id_gauge;
        g.a[c] = x;
        auto moved = gauge_act(dia, cm, g, labs[i]);
        auto it = index.find(key_of(moved));
        if (it == index.end())
          fail("InternalError", "gauge action left the labeling set");
        unite(static_cast<int>(i), it->second);
      }
    for (const auto& u : dia.uppers)
      for (int e = 1; e < cm.E.order(); ++e) {
        GaugeElement g = id_gauge;
        g.d[u.id] = e;
        auto moved = gauge_act(dia, cm, g, labs[i]);
        auto it = index.find(key_of(moved));
        if (it == index.end())
          fail("InternalError", "gauge action left the labeling set");
        unite(static_cast<int>(i), it->second);
      }
  }

  OrbitClasses out;
  out.class_of.assign(labs.size(), -1);
  std::map<int, int> class_index;
  for (size_t i = 0; i < labs.size(); ++i) {
    int r = root(static_cast<int>(i));
    auto it = class_index.find(r);
    if (it == class_index.end()) {
      it = class_index.emplace(r, static_cast<int>(out.representatives.size())).first;
      out.representatives.push_back(r);
    }
    out.class_of[i] = it->second;
  }
  return out;
}

ChiLabeling reverse_labeling(const CrossedModule& cm, const ChiLabeling& lab) {
  ChiLabeling out = lab;
  for (auto& [u, x] : out.alpha) {
    (void)u;
    x = cm.H.inv(x);
  }
  return out;
}

ChiLabeling merge_labeling(const ConnectedSum& cs, const ChiLabeling& lab1,
                           const ChiLabeling& lab2) {
  ChiLabeling out = lab1;
  for (const auto& [u, x] : lab2.alpha) out.alpha[cs.uppers.at(u)] = x;
  for (const auto& [l, e] : lab2.beta) out.beta[cs.lowers.at(l)] = e;
  return out;
}

}  // namespace ck
