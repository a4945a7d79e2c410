#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ck/group.hpp"

namespace ck {

// chi : E -> H with H acting on E; indices follow the groups' own numbering
struct CrossedModule {
  FiniteGroup E;
  FiniteGroup H;
  std::vector<int> chi;                  // chi[e] in H
  std::vector<std::vector<int>> action;  // action[x][e] = x acting on e

  int chi_of(int e) const { return chi[static_cast<size_t>(e)]; }
  int act(int x, int e) const {
    return action[static_cast<size_t>(x)][static_cast<size_t>(e)];
  }
};

// every failed axiom contributes one line naming the axiom and a witness
std::vector<std::string> check_crossed_module(const CrossedModule& cm);

// morphism x --(x,e)--> chi(e)x in the associated strict 2-group
struct TwoGroup {
  using Morphism = std::pair<int, int>;  // (x, e)

  explicit TwoGroup(CrossedModule cm) : cm_(std::move(cm)) {}

  const CrossedModule& crossed_module() const { return cm_; }

  int source(Morphism m) const { return m.first; }
  int target(Morphism m) const { return cm_.H.mul(cm_.chi_of(m.second), m.first); }
  Morphism identity(int x) const { return {x, 0}; }

  // defined when target(m1) == source(m2)
  Morphism vertical(Morphism m1, Morphism m2) const;
  Morphism vertical_inverse(Morphism m) const;

  // semidirect product (x,e)(y,f) = (xy, e * (x acting on f))
  Morphism horizontal(Morphism m1, Morphism m2) const;
  Morphism horizontal_inverse(Morphism m) const;

 private:
  CrossedModule cm_;
};

// reconstructs E as Ker(source), H as objects, the action by conjugation
CrossedModule recover_crossed_module(const TwoGroup& tg);

struct Pi1Pi2 {
  FiniteGroup pi1;                          // Coker(chi)
  std::vector<int> quotient_map;            // H index -> pi1 index
  FiniteGroup pi2;                          // Ker(chi), abelian
  std::vector<int> kernel_elems;            // pi2 index -> E index
  std::vector<std::vector<int>> pi1_action; // pi1_action[q][k] in pi2
};

Pi1Pi2 homotopy_groups(const CrossedModule& cm);

// Z/4 -> Z/2 with zero map and negation action
CrossedModule xmod_z4_z2();

// abelian E -> 1
CrossedModule xmod_to_1(const FiniteGroup& E);

// 1 -> H
CrossedModule xmod_one_to(const FiniteGroup& H);

CrossedModule xmod_trivial();

}  // namespace ck
