#pragma once

#include <string>
#include <vector>

#include "ck/scalar.hpp"
#include "ck/xmod.hpp"

namespace ck {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;  // Mat[row][col]

Vec zero_vec(const Field& f, int n);
Mat zero_mat(const Field& f, int rows, int cols);
Mat identity_mat(const Field& f, int n);
Vec apply(const Field& f, const Mat& m, const Vec& v);
Mat mat_mul(const Field& f, const Mat& a, const Mat& b);
// fails with SingularMatrix
Mat inverse_mat(const Mat& m, const Field& f);
// basis of {v : m v = 0}; rows of m have length cols
std::vector<Vec> nullspace(Mat m, int cols, const Field& f);

// one algebra A_x: basis products as coordinate vectors, two-sided unit
struct GradedComponent {
  int dim = 0;
  std::vector<std::vector<Vec>> mu;  // mu[i][j] = coordinates of b_i b_j
  Vec unit;
};

// finite-type Hopf chi-coalgebra by structure constants; gradings indexed by
// the H element order of cm.H, basis of A_x (x) A_y ordered with the A_y
// index fastest
struct HopfChiCoalgebra {
  Field field = Field::rationals();
  CrossedModule cm;
  std::vector<GradedComponent> comps;
  std::vector<std::vector<Mat>> coproduct;  // [x][y]: (d_x d_y) x d_{xy}
  Vec counit;                               // covector on the neutral component
  std::vector<Mat> antipode;                // [x]: d_x x d_{x^{-1}}
  std::vector<std::vector<Mat>> action;     // [x][e]: d_{chi(e)x} x d_x

  int dim(int x) const { return comps[static_cast<size_t>(x)].dim; }
  Vec mul(int x, const Vec& a, const Vec& b) const;
  Scalar eps(const Vec& a) const;  // counit as a linear functional
};

// empty iff every axiom holds; shape problems fail with DimensionMismatch
std::vector<std::string> check_axioms(const HopfChiCoalgebra& A);

struct Integrals {
  Vec Lambda;                  // in the neutral component
  std::vector<Vec> lambda;     // [x]: covector on A_x

  Scalar pair(int x, const Vec& a) const;
};

// solves the defining linear systems, normalizes, verifies every integral
// identity; fails with CharacteristicDividesDimension, NonUniqueIntegral or
// PostconditionViolated
Integrals compute_integrals(const HopfChiCoalgebra& A);

// the eight-dimensional example over Z/4 -> Z/2; characteristic 2 rejected
HopfChiCoalgebra builtin_kp4(const Field& f = Field::rationals());

// group algebra k[G] twisted by a bicharacter omega: G x E -> k*, over E -> 1
HopfChiCoalgebra builtin_group_algebra(const Field& f, const FiniteGroup& G,
                                       const FiniteGroup& E, const Mat& omega);
// untwisted, E trivial
HopfChiCoalgebra builtin_group_algebra(const Field& f, const FiniteGroup& G);

HopfChiCoalgebra opposite(const HopfChiCoalgebra& A);
HopfChiCoalgebra coopposite(const HopfChiCoalgebra& A);

}  // namespace ck
