#pragma once

#include <map>
#include <string>
#include <vector>

#include "ck/diagram.hpp"
#include "ck/xmod.hpp"

namespace ck {

struct ChiLabeling {
  std::map<CircleId, int> alpha;  // upper circle -> H element
  std::map<CircleId, int> beta;   // lower circle -> E element
  bool operator==(const ChiLabeling&) const = default;
};

struct GaugeElement {
  std::map<ComponentId, int> a;  // component -> H
  std::map<CircleId, int> d;     // upper circle -> E
};

// alpha-tilde: multiply alpha(u)^sign along the word
int eval_word(const CrossedModule& cm, const std::map<CircleId, int>& alpha, const Word& w);

// the derivation d_alpha determined by d on generators
int derivation(const CrossedModule& cm, const std::map<CircleId, int>& alpha,
               const std::map<CircleId, int>& d, const Word& w);

std::vector<std::string> check_labeling(const HeegaardDiagram& dia, const CrossedModule& cm,
                                        const ChiLabeling& lab);

GaugeElement gauge_mul(const HeegaardDiagram& dia, const CrossedModule& cm,
                       const GaugeElement& g, const GaugeElement& h);

ChiLabeling gauge_act(const HeegaardDiagram& dia, const CrossedModule& cm,
                      const GaugeElement& g, const ChiLabeling& lab);

// all labelings passing check_labeling, odometer order over uppers then lowers;
// fails with BudgetExceeded when |H|^|uppers| * |E|^|lowers| exceeds the budget
std::vector<ChiLabeling> enumerate_labelings(const HeegaardDiagram& dia,
                                             const CrossedModule& cm);

unsigned long long labeling_budget();  // CK_BUDGET env or the default 10^7

struct OrbitClasses {
  std::vector<int> class_of;         // labeling index -> class
  std::vector<int> representatives;  // class -> smallest member index
};

OrbitClasses orbit_classes(const std::vector<ChiLabeling>& labs, const HeegaardDiagram& dia,
                           const CrossedModule& cm);

// labeling for the orientation-reversed diagram
ChiLabeling reverse_labeling(const CrossedModule& cm, const ChiLabeling& lab);

// transplant labelings of both summands onto the connected sum
ChiLabeling merge_labeling(const ConnectedSum& cs, const ChiLabeling& lab1,
                           const ChiLabeling& lab2);

}  // namespace ck
