#pragma once

#include <vector>

#include "ck/diagram.hpp"
#include "ck/hopfxc.hpp"
#include "ck/labeling.hpp"

namespace ck {

// dense tensor with one slot per intersection point, later slots fastest
struct GradedTensor {
  struct Slot {
    PointId point;
    int grading;  // H element index
  };
  std::vector<Slot> slots;
  std::vector<int> dims;  // parallel to slots
  Vec coeffs;             // length = product of dims; a rank-0 tensor is a scalar
};

// iterated coproduct of phi_{1,beta(l)}(Lambda), slots in basepoint order with
// gradings alpha(s)^{nu_s}
GradedTensor lower_tensor(const HeegaardDiagram& d, const ChiLabeling& lab,
                          const HopfChiCoalgebra& A, const Integrals& I, const CircleId& l);

// antipode on every negative slot; gradings become alpha(s)
GradedTensor apply_antipodes(GradedTensor t, const HeegaardDiagram& d,
                             const ChiLabeling& lab, const HopfChiCoalgebra& A);

// full product of the per-lower tensors reordered to upper-induced slot order
// (upper circles sorted by id, positions from each basepoint)
GradedTensor permute_to_upper(const std::vector<GradedTensor>& parts,
                              const HeegaardDiagram& d);

// multiply each upper circle's slots and pair with its lambda
Scalar upper_contract(const GradedTensor& t, const HeegaardDiagram& d,
                      const ChiLabeling& lab, const HopfChiCoalgebra& A,
                      const Integrals& I);

// dim(A_1)^(genus - #uppers - #lowers) times the full contraction; the second
// overload reuses precomputed integrals, the third stages the operations
// without the greedy contraction order
Scalar compute_invariant(const HeegaardDiagram& d, const ChiLabeling& lab,
                         const HopfChiCoalgebra& A);
Scalar compute_invariant(const HeegaardDiagram& d, const ChiLabeling& lab,
                         const HopfChiCoalgebra& A, const Integrals& I);
Scalar compute_invariant_naive(const HeegaardDiagram& d, const ChiLabeling& lab,
                               const HopfChiCoalgebra& A, const Integrals& I);

// the invariant of the constant labeling over the trivial crossed module
Scalar kuperberg(const HeegaardDiagram& d, const HopfChiCoalgebra& A);

}  // namespace ck
