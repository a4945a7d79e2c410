#pragma once

#include <string>
#include <vector>

#include "ck/error.hpp"

namespace ck {

// Finite group given by its multiplication table. Element 0 is the identity;
// elements are indices 0..n-1 with optional display names.
class FiniteGroup {
public:
  // empty placeholder with no elements; every named constructor yields a group
  FiniteGroup() = default;

  static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                std::vector<std::string> names = {});
  static FiniteGroup trivial();
  static FiniteGroup cyclic(int n);
  static FiniteGroup symmetric(int n);    // n <= 5
  static FiniteGroup alternating(int n);  // n <= 5
  static FiniteGroup dihedral(int n);     // order 2n
  static FiniteGroup quaternion8();
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
  // Closure of permutation generators on {0,..,degree-1}; identity gets index 0.
  static FiniteGroup from_permutations(int degree,
                                       const std::vector<std::vector<int>>& gens);

  int order() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  int pow(int a, long e) const;
  const std::string& name(int a) const { return names_[a]; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  bool is_abelian() const;

  // Group-axiom violations ("identity", "inverses", "associativity", ...);
  // empty iff the table is a genuine group with identity 0.
  std::vector<std::string> check() const;

  // Smallest subgroup containing the seed elements, as a sorted element list.
  std::vector<int> subgroup_closure(std::vector<int> seed) const;

private:
  void finish();  // derive inverses, default names

  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::vector<std::string> names_;
};

}  // namespace ck
