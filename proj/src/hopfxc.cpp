#include "ck/hopfxc.hpp"

#include <utility>

namespace ck {

Vec zero_vec(const Field& f, int n) { return Vec(static_cast<size_t>(n), Scalar(f)); }

Mat zero_mat(const Field& f, int rows, int cols) {
  return Mat(static_cast<size_t>(rows), zero_vec(f, cols));
}

Mat identity_mat(const Field& f, int n) {
  Mat m = zero_mat(f, n, n);
  for (int i = 0; i < n; ++i) m[i][i] = Scalar::from_int(f, 1);
  return m;
}

Vec apply(const Field& f, const Mat& m, const Vec& v) {
  Vec out = zero_vec(f, static_cast<int>(m.size()));
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != v.size())
      fail("DimensionMismatch", "matrix row length does not match vector");
    for (size_t j = 0; j < v.size(); ++j)
      if (!m[i][j].is_zero() && !v[j].is_zero()) out[i] += m[i][j] * v[j];
  }
  return out;
}

Mat mat_mul(const Field& f, const Mat& a, const Mat& b) {
  size_t inner = b.size();
  size_t cols = inner ? b[0].size() : 0;
  Mat out = zero_mat(f, static_cast<int>(a.size()), static_cast<int>(cols));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner)
      fail("DimensionMismatch", "matrix product shapes do not match");
    for (size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < cols; ++j)
        if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

namespace {

// row-reduce in place, selecting pivots among the first lead columns
std::vector<int> rref(Mat& m, int lead) {
  std::vector<int> pivots;
  int r = 0;
  int rows = static_cast<int>(m.size());
  for (int c = 0; c < lead && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (!m[i][c].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    Scalar inv = m[r][c].inverse();
    for (auto& entry : m[r]) entry *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Scalar factor = m[i][c];
      for (size_t j = 0; j < m[i].size(); ++j) m[i][j] -= factor * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Mat inverse_mat(const Mat& m, const Field& f) {
  int n = static_cast<int>(m.size());
  Mat aug = zero_mat(f, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[i].size()) != n)
      fail("SingularMatrix", "only square matrices are invertible");
    for (int j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = Scalar::from_int(f, 1);
  }
  auto pivots = rref(aug, n);
  if (static_cast<int>(pivots.size()) != n)
    fail("SingularMatrix", "matrix has nontrivial kernel");
  Mat out = zero_mat(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
  return out;
}

std::vector<Vec> nullspace(Mat m, int cols, const Field& f) {
  auto pivots = rref(m, cols);
  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<Vec> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[static_cast<size_t>(c)]) continue;
    Vec v = zero_vec(f, cols);
    v[static_cast<size_t>(c)] = Scalar::from_int(f, 1);
    for (size_t r = 0; r < pivots.size(); ++r)
      v[static_cast<size_t>(pivots[r])] = -m[r][static_cast<size_t>(c)];
    basis.push_back(std::move(v));
  }
  return basis;
}

Vec HopfChiCoalgebra::mul(int x, const Vec& a, const Vec& b) const {
  const GradedComponent& c = comps[static_cast<size_t>(x)];
  Vec out = zero_vec(field, c.dim);
  for (int i = 0; i < c.dim; ++i) {
    if (a[static_cast<size_t>(i)].is_zero()) continue;
    for (int j = 0; j < c.dim; ++j) {
      if (b[static_cast<size_t>(j)].is_zero()) continue;
      Scalar ab = a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
      const Vec& prod = c.mu[static_cast<size_t>(i)][static_cast<size_t>(j)];
      for (int k = 0; k < c.dim; ++k)
        if (!prod[static_cast<size_t>(k)].is_zero())
          out[static_cast<size_t>(k)] += ab * prod[static_cast<size_t>(k)];
    }
  }
  return out;
}

Scalar HopfChiCoalgebra::eps(const Vec& a) const {
  Scalar out(field);
  for (size_t k = 0; k < counit.size(); ++k) out += counit[k] * a[k];
  return out;
}

Scalar Integrals::pair(int x, const Vec& a) const {
  const Vec& l = lambda[static_cast<size_t>(x)];
  Scalar out = l.empty() ? (a.empty() ? Scalar() : Scalar(a[0].field())) : Scalar(l[0].field());
  for (size_t k = 0; k < l.size(); ++k) out += l[k] * a[k];
  return out;
}

namespace {

Vec basis_vec(const Field& f, int n, int i) {
  Vec v = zero_vec(f, n);
  v[static_cast<size_t>(i)] = Scalar::from_int(f, 1);
  return v;
}

Vec outer(const Field& f, const Vec& a, const Vec& b) {
  Vec out = zero_vec(f, static_cast<int>(a.size() * b.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  return out;
}

// product in A_x (x) A_y on flat coordinates, A_y index fastest
Vec tensor_alg_mul(const HopfChiCoalgebra& A, int x, int y, const Vec& X, const Vec& Y) {
  size_t dx = static_cast<size_t>(A.dim(x));
  size_t dy = static_cast<size_t>(A.dim(y));
  Vec out = zero_vec(A.field, static_cast<int>(dx * dy));
  for (size_t i1 = 0; i1 < dx; ++i1)
    for (size_t i2 = 0; i2 < dy; ++i2) {
      const Scalar& a = X[i1 * dy + i2];
      if (a.is_zero()) continue;
      for (size_t j1 = 0; j1 < dx; ++j1)
        for (size_t j2 = 0; j2 < dy; ++j2) {
          const Scalar& b = Y[j1 * dy + j2];
          if (b.is_zero()) continue;
          Scalar ab = a * b;
          const Vec& p1 = A.comps[static_cast<size_t>(x)].mu[i1][j1];
          const Vec& p2 = A.comps[static_cast<size_t>(y)].mu[i2][j2];
          for (size_t k1 = 0; k1 < dx; ++k1) {
            if (p1[k1].is_zero()) continue;
            for (size_t k2 = 0; k2 < dy; ++k2)
              if (!p2[k2].is_zero()) out[k1 * dy + k2] += ab * p1[k1] * p2[k2];
          }
        }
    }
  return out;
}

Vec apply_delta(const HopfChiCoalgebra& A, int x, int y, const Vec& v) {
  return apply(A.field, A.coproduct[static_cast<size_t>(x)][static_cast<size_t>(y)], v);
}

// Kronecker product with the second factor's indices fastest
Mat kron(const Field& f, const Mat& m1, int r1, int c1, const Mat& m2, int r2, int c2) {
  Mat out = zero_mat(f, r1 * r2, c1 * c2);
  for (int a = 0; a < r1; ++a)
    for (int b = 0; b < c1; ++b) {
      if (m1[static_cast<size_t>(a)][static_cast<size_t>(b)].is_zero()) continue;
      for (int c = 0; c < r2; ++c)
        for (int d = 0; d < c2; ++d)
          out[static_cast<size_t>(a * r2 + c)][static_cast<size_t>(b * c2 + d)] =
              m1[static_cast<size_t>(a)][static_cast<size_t>(b)] *
              m2[static_cast<size_t>(c)][static_cast<size_t>(d)];
    }
  return out;
}

void shape_check(const HopfChiCoalgebra& A) {
  int H = A.cm.H.order();
  int E = A.cm.E.order();
  auto bad = [](const std::string& what) { fail("DimensionMismatch", what); };
  if (static_cast<int>(A.comps.size()) != H) bad("need one graded component per H element");
  for (int x = 0; x < H; ++x) {
    const GradedComponent& c = A.comps[static_cast<size_t>(x)];
    size_t d = static_cast<size_t>(c.dim);
    if (c.mu.size() != d) bad("mu table rows in grading " + A.cm.H.name(x));
    for (const auto& row : c.mu) {
      if (row.size() != d) bad("mu table columns in grading " + A.cm.H.name(x));
      for (const auto& v : row)
        if (v.size() != d) bad("mu value length in grading " + A.cm.H.name(x));
    }
    if (c.unit.size() != d) bad("unit length in grading " + A.cm.H.name(x));
  }
  if (static_cast<int>(A.coproduct.size()) != H) bad("coproduct needs H rows");
  for (int x = 0; x < H; ++x) {
    if (static_cast<int>(A.coproduct[static_cast<size_t>(x)].size()) != H)
      bad("coproduct needs H columns");
    for (int y = 0; y < H; ++y) {
      const Mat& m = A.coproduct[static_cast<size_t>(x)][static_cast<size_t>(y)];
      int rows = A.dim(x) * A.dim(y);
      int cols = A.dim(A.cm.H.mul(x, y));
      if (static_cast<int>(m.size()) != rows)
        bad("coproduct (" + A.cm.H.name(x) + "," + A.cm.H.name(y) + ") row count");
      for (const auto& row : m)
        if (static_cast<int>(row.size()) != cols)
          bad("coproduct (" + A.cm.H.name(x) + "," + A.cm.H.name(y) + ") column count");
    }
  }
  if (static_cast<int>(A.counit.size()) != A.dim(0)) bad("counit length");
  if (static_cast<int>(A.antipode.size()) != H) bad("antipode needs one matrix per grading");
  for (int x = 0; x < H; ++x) {
    const Mat& m = A.antipode[static_cast<size_t>(x)];
    if (static_cast<int>(m.size()) != A.dim(x)) bad("antipode row count in " + A.cm.H.name(x));
    for (const auto& row : m)
      if (static_cast<int>(row.size()) != A.dim(A.cm.H.inv(x)))
        bad("antipode column count in " + A.cm.H.name(x));
  }
  if (static_cast<int>(A.action.size()) != H) bad("action needs H rows");
  for (int x = 0; x < H; ++x) {
    if (static_cast<int>(A.action[static_cast<size_t>(x)].size()) != E)
      bad("action needs E columns");
    for (int e = 0; e < E; ++e) {
      const Mat& m = A.action[static_cast<size_t>(x)][static_cast<size_t>(e)];
      int rows = A.dim(A.cm.H.mul(A.cm.chi_of(e), x));
      if (static_cast<int>(m.size()) != rows)
        bad("action (" + A.cm.H.name(x) + "," + A.cm.E.name(e) + ") row count");
      for (const auto& row : m)
        if (static_cast<int>(row.size()) != A.dim(x))
          bad("action (" + A.cm.H.name(x) + "," + A.cm.E.name(e) + ") column count");
    }
  }
}

}  // namespace

std::vector<std::string> check_axioms(const HopfChiCoalgebra& A) {
  shape_check(A);
  std::vector<std::string> rep;
  auto note = [&rep](const std::string& line) { rep.push_back(line); };
  const Field& f = A.field;
  const FiniteGroup& H = A.cm.H;
  const FiniteGroup& E = A.cm.E;
  int nh = H.order();
  int ne = E.order();
  Scalar one = Scalar::from_int(f, 1);

  for (int x = 0; x < nh; ++x) {
    const GradedComponent& c = A.comps[static_cast<size_t>(x)];
    for (int i = 0; i < c.dim; ++i) {
      for (int j = 0; j < c.dim; ++j)
        for (int k = 0; k < c.dim; ++k) {
          Vec lhs = A.mul(x, c.mu[static_cast<size_t>(i)][static_cast<size_t>(j)],
                          basis_vec(f, c.dim, k));
          Vec rhs = A.mul(x, basis_vec(f, c.dim, i),
                          c.mu[static_cast<size_t>(j)][static_cast<size_t>(k)]);
          if (lhs != rhs)
            note("associativity fails in grading " + H.name(x) + " at (" +
                 std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")");
        }
      Vec b = basis_vec(f, c.dim, i);
      if (A.mul(x, c.unit, b) != b || A.mul(x, b, c.unit) != b)
        note("unit fails in grading " + H.name(x) + " at " + std::to_string(i));
    }
  }

  for (int x = 0; x < nh; ++x)
    for (int y = 0; y < nh; ++y) {
      int xy = H.mul(x, y);
      const GradedComponent& cxy = A.comps[static_cast<size_t>(xy)];
      std::string where = " (" + H.name(x) + "," + H.name(y) + ")";
      for (int i = 0; i < cxy.dim; ++i)
        for (int j = 0; j < cxy.dim; ++j) {
          Vec lhs = apply_delta(A, x, y, cxy.mu[static_cast<size_t>(i)][static_cast<size_t>(j)]);
          Vec rhs = tensor_alg_mul(A, x, y, apply_delta(A, x, y, basis_vec(f, cxy.dim, i)),
                                   apply_delta(A, x, y, basis_vec(f, cxy.dim, j)));
          if (lhs != rhs)
            note("coproduct not multiplicative" + where + " at (" + std::to_string(i) + "," +
                 std::to_string(j) + ")");
        }
      Vec units = outer(f, A.comps[static_cast<size_t>(x)].unit,
                        A.comps[static_cast<size_t>(y)].unit);
      if (apply_delta(A, x, y, cxy.unit) != units)
        note("coproduct misses the unit" + where);
    }

  {
    const GradedComponent& c1 = A.comps[0];
    for (int i = 0; i < c1.dim; ++i)
      for (int j = 0; j < c1.dim; ++j)
        if (A.eps(c1.mu[static_cast<size_t>(i)][static_cast<size_t>(j)]) !=
            A.eps(basis_vec(f, c1.dim, i)) * A.eps(basis_vec(f, c1.dim, j)))
          note("counit not multiplicative at (" + std::to_string(i) + "," +
               std::to_string(j) + ")");
    if (A.eps(c1.unit) != one) note("counit misses the unit");
  }

  for (int x = 0; x < nh; ++x) {
    int dx = A.dim(x);
    int d1 = A.dim(0);
    for (int i = 0; i < dx; ++i) {
      Vec dd = apply_delta(A, 0, x, basis_vec(f, dx, i));
      Vec out = zero_vec(f, dx);
      for (int i1 = 0; i1 < d1; ++i1)
        for (int i2 = 0; i2 < dx; ++i2)
          out[static_cast<size_t>(i2)] +=
              dd[static_cast<size_t>(i1 * dx + i2)] * A.counit[static_cast<size_t>(i1)];
      if (out != basis_vec(f, dx, i))
        note("left counitality fails in grading " + H.name(x) + " at " + std::to_string(i));
      dd = apply_delta(A, x, 0, basis_vec(f, dx, i));
      out = zero_vec(f, dx);
      for (int i1 = 0; i1 < dx; ++i1)
        for (int i2 = 0; i2 < d1; ++i2)
          out[static_cast<size_t>(i1)] +=
              dd[static_cast<size_t>(i1 * d1 + i2)] * A.counit[static_cast<size_t>(i2)];
      if (out != basis_vec(f, dx, i))
        note("right counitality fails in grading " + H.name(x) + " at " + std::to_string(i));
    }
  }

  for (int x = 0; x < nh; ++x)
    for (int y = 0; y < nh; ++y)
      for (int z = 0; z < nh; ++z) {
        int xy = H.mul(x, y);
        int yz = H.mul(y, z);
        int xyz = H.mul(xy, z);
        size_t dx = static_cast<size_t>(A.dim(x));
        size_t dy = static_cast<size_t>(A.dim(y));
        size_t dz = static_cast<size_t>(A.dim(z));
        size_t dxy = static_cast<size_t>(A.dim(xy));
        size_t dyz = static_cast<size_t>(A.dim(yz));
        for (int i = 0; i < A.dim(xyz); ++i) {
          Vec d1 = apply_delta(A, xy, z, basis_vec(f, A.dim(xyz), i));
          Vec lhs = zero_vec(f, static_cast<int>(dx * dy * dz));
          const Mat& dxym = A.coproduct[static_cast<size_t>(x)][static_cast<size_t>(y)];
          for (size_t m = 0; m < dxy; ++m)
            for (size_t c = 0; c < dz; ++c) {
              const Scalar& coeff = d1[m * dz + c];
              if (coeff.is_zero()) continue;
              for (size_t jj = 0; jj < dx * dy; ++jj)
                if (!dxym[jj][m].is_zero()) lhs[jj * dz + c] += coeff * dxym[jj][m];
            }
          Vec d2 = apply_delta(A, x, yz, basis_vec(f, A.dim(xyz), i));
          Vec rhs = zero_vec(f, static_cast<int>(dx * dy * dz));
          const Mat& dyzm = A.coproduct[static_cast<size_t>(y)][static_cast<size_t>(z)];
          for (size_t i1 = 0; i1 < dx; ++i1)
            for (size_t m = 0; m < dyz; ++m) {
              const Scalar& coeff = d2[i1 * dyz + m];
              if (coeff.is_zero()) continue;
              for (size_t jj = 0; jj < dy * dz; ++jj)
                if (!dyzm[jj][m].is_zero()) rhs[i1 * dy * dz + jj] += coeff * dyzm[jj][m];
            }
          if (lhs != rhs)
            note("coassociativity fails at (" + H.name(x) + "," + H.name(y) + "," +
                 H.name(z) + ") basis " + std::to_string(i));
        }
      }

  for (int x = 0; x < nh; ++x) {
    int xi = H.inv(x);
    size_t dxi = static_cast<size_t>(A.dim(xi));
    size_t dx = static_cast<size_t>(A.dim(x));
    const Mat& S = A.antipode[static_cast<size_t>(x)];
    for (int i = 0; i < A.dim(0); ++i) {
      Vec dd = apply_delta(A, xi, x, basis_vec(f, A.dim(0), i));
      Vec acc = zero_vec(f, static_cast<int>(dx));
      for (size_t m = 0; m < dxi; ++m)
        for (size_t c = 0; c < dx; ++c) {
          const Scalar& coeff = dd[m * dx + c];
          if (coeff.is_zero()) continue;
          Vec sb = apply(f, S, basis_vec(f, static_cast<int>(dxi), static_cast<int>(m)));
          Vec term = A.mul(x, sb, basis_vec(f, static_cast<int>(dx), static_cast<int>(c)));
          for (size_t k = 0; k < dx; ++k) acc[k] += coeff * term[k];
        }
      Scalar ei = A.eps(basis_vec(f, A.dim(0), i));
      Vec target = A.comps[static_cast<size_t>(x)].unit;
      for (auto& t : target) t *= ei;
      if (acc != target)
        note("left antipode identity fails in grading " + H.name(x) + " at " +
             std::to_string(i));
      dd = apply_delta(A, x, xi, basis_vec(f, A.dim(0), i));
      acc = zero_vec(f, static_cast<int>(dx));
      for (size_t m = 0; m < dx; ++m)
        for (size_t c = 0; c < dxi; ++c) {
          const Scalar& coeff = dd[m * dxi + c];
          if (coeff.is_zero()) continue;
          Vec sb = apply(f, S, basis_vec(f, static_cast<int>(dxi), static_cast<int>(c)));
          Vec term = A.mul(x, basis_vec(f, static_cast<int>(dx), static_cast<int>(m)), sb);
          for (size_t k = 0; k < dx; ++k) acc[k] += coeff * term[k];
        }
      if (acc != target)
        note("right antipode identity fails in grading " + H.name(x) + " at " +
             std::to_string(i));
    }
    if (dx > 0 || dxi > 0) {
      Mat comp = mat_mul(f, A.antipode[static_cast<size_t>(x)],
                         A.antipode[static_cast<size_t>(xi)]);
      if (comp != identity_mat(f, static_cast<int>(dx)))
        note("involutivity fails in grading " + H.name(x));
    }
  }

  for (int x = 0; x < nh; ++x) {
    int dx = A.dim(x);
    if (A.action[static_cast<size_t>(x)][0] != identity_mat(f, dx))
      note("action of the identity color is not the identity in grading " + H.name(x));
    for (int e = 0; e < ne; ++e) {
      int xe = H.mul(A.cm.chi_of(e), x);
      const Mat& phi = A.action[static_cast<size_t>(x)][static_cast<size_t>(e)];
      const GradedComponent& cx = A.comps[static_cast<size_t>(x)];
      const GradedComponent& cxe = A.comps[static_cast<size_t>(xe)];
      std::string where = " (" + H.name(x) + "," + E.name(e) + ")";
      for (int i = 0; i < dx; ++i)
        for (int j = 0; j < dx; ++j) {
          Vec lhs = apply(f, phi, cx.mu[static_cast<size_t>(i)][static_cast<size_t>(j)]);
          Vec rhs = A.mul(xe, apply(f, phi, basis_vec(f, dx, i)),
                          apply(f, phi, basis_vec(f, dx, j)));
          if (lhs != rhs)
            note("action not multiplicative" + where + " at (" + std::to_string(i) + "," +
                 std::to_string(j) + ")");
        }
      if (apply(f, phi, cx.unit) != cxe.unit) note("action misses the unit" + where);
      for (int g = 0; g < ne; ++g) {
        Mat lhs = mat_mul(f, A.action[static_cast<size_t>(xe)][static_cast<size_t>(g)], phi);
        const Mat& rhs = A.action[static_cast<size_t>(x)][static_cast<size_t>(E.mul(g, e))];
        if (lhs != rhs)
          note("action composition fails at (" + H.name(x) + "," + E.name(e) + "," +
               E.name(g) + ")");
      }
    }
  }

  for (int x = 0; x < nh; ++x)
    for (int y = 0; y < nh; ++y)
      for (int e = 0; e < ne; ++e)
        for (int g = 0; g < ne; ++g) {
          int xy = H.mul(x, y);
          int xe = H.mul(A.cm.chi_of(e), x);
          int yg = H.mul(A.cm.chi_of(g), y);
          int ef = E.mul(e, A.cm.act(x, g));
          Mat lhs = mat_mul(
              f,
              kron(f, A.action[static_cast<size_t>(x)][static_cast<size_t>(e)], A.dim(xe),
                   A.dim(x), A.action[static_cast<size_t>(y)][static_cast<size_t>(g)],
                   A.dim(yg), A.dim(y)),
              A.coproduct[static_cast<size_t>(x)][static_cast<size_t>(y)]);
          Mat rhs = mat_mul(f, A.coproduct[static_cast<size_t>(xe)][static_cast<size_t>(yg)],
                            A.action[static_cast<size_t>(xy)][static_cast<size_t>(ef)]);
          if (lhs != rhs)
            note("action-coproduct compatibility fails at (" + H.name(x) + "," + H.name(y) +
                 "," + E.name(e) + "," + E.name(g) + ")");
        }

  return rep;
}

Integrals compute_integrals(const HopfChiCoalgebra& A) {
  {
    auto rep = check_axioms(A);
    if (!rep.empty()) fail("InvalidInput", rep.front());
  }
  const Field& f = A.field;
  const FiniteGroup& H = A.cm.H;
  int nh = H.order();
  int ne = A.cm.E.order();
  int d1 = A.dim(0);
  if (d1 == 0) fail("InvalidInput", "the neutral component is zero");
  if (char_divides(f, static_cast<unsigned long>(d1)))
    fail("CharacteristicDividesDimension",
         "characteristic divides the neutral dimension " + std::to_string(d1));
  Scalar dim_scalar = Scalar::from_int(f, d1);
  const GradedComponent& c1 = A.comps[0];

  Mat sys;
  for (int i = 0; i < d1; ++i) {
    Scalar ei = A.eps(basis_vec(f, d1, i));
    for (int k = 0; k < d1; ++k) {
      Vec left = zero_vec(f, d1);
      Vec right = zero_vec(f, d1);
      for (int j = 0; j < d1; ++j) {
        left[static_cast<size_t>(j)] =
            c1.mu[static_cast<size_t>(j)][static_cast<size_t>(i)][static_cast<size_t>(k)];
        right[static_cast<size_t>(j)] =
            c1.mu[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)];
      }
      left[static_cast<size_t>(k)] -= ei;
      right[static_cast<size_t>(k)] -= ei;
      sys.push_back(std::move(left));
      sys.push_back(std::move(right));
    }
  }
  auto lam_basis = nullspace(std::move(sys), d1, f);
  if (lam_basis.size() != 1)
    fail("NonUniqueIntegral", "integral solution space has dimension " +
                                  std::to_string(lam_basis.size()));
  Vec Lambda = std::move(lam_basis[0]);
  Scalar norm = A.eps(Lambda);
  if (norm.is_zero())
    fail("PostconditionViolated", "integral normalization: counit vanishes on the kernel");
  Scalar scale = dim_scalar / norm;
  for (auto& c : Lambda) c *= scale;

  std::vector<int> offset(static_cast<size_t>(nh), -1);
  int total = 0;
  for (int x = 0; x < nh; ++x)
    if (A.dim(x) > 0) {
      offset[static_cast<size_t>(x)] = total;
      total += A.dim(x);
    }
  Mat lsys;
  auto fresh_row = [&]() { return zero_vec(f, total); };
  for (int x = 0; x < nh; ++x)
    for (int y = 0; y < nh; ++y) {
      int xy = H.mul(x, y);
      int dx = A.dim(x);
      int dy = A.dim(y);
      int dxy = A.dim(xy);
      if (dx == 0 || dy == 0 || dxy == 0) continue;
      const Mat& dm = A.coproduct[static_cast<size_t>(x)][static_cast<size_t>(y)];
      const Vec& ux = A.comps[static_cast<size_t>(x)].unit;
      const Vec& uy = A.comps[static_cast<size_t>(y)].unit;
      for (int k = 0; k < dxy; ++k) {
        for (int i = 0; i < dx; ++i) {
          Vec row = fresh_row();
          for (int j = 0; j < dy; ++j)
            row[static_cast<size_t>(offset[static_cast<size_t>(y)] + j)] +=
                dm[static_cast<size_t>(i * dy + j)][static_cast<size_t>(k)];
          row[static_cast<size_t>(offset[static_cast<size_t>(xy)] + k)] -=
              ux[static_cast<size_t>(i)];
          lsys.push_back(std::move(row));
        }
        for (int j = 0; j < dy; ++j) {
          Vec row = fresh_row();
          for (int i = 0; i < dx; ++i)
            row[static_cast<size_t>(offset[static_cast<size_t>(x)] + i)] +=
                dm[static_cast<size_t>(i * dy + j)][static_cast<size_t>(k)];
          row[static_cast<size_t>(offset[static_cast<size_t>(xy)] + k)] -=
              uy[static_cast<size_t>(j)];
          lsys.push_back(std::move(row));
        }
      }
    }
  for (int x = 0; x < nh; ++x) {
    int dx = A.dim(x);
    if (dx == 0) continue;
    for (int e = 0; e < ne; ++e) {
      int xe = H.mul(A.cm.chi_of(e), x);
      if (A.dim(xe) == 0) continue;
      const Mat& phi = A.action[static_cast<size_t>(x)][static_cast<size_t>(e)];
      for (int i = 0; i < dx; ++i) {
        Vec row = fresh_row();
        for (int j = 0; j < A.dim(xe); ++j)
          row[static_cast<size_t>(offset[static_cast<size_t>(xe)] + j)] +=
              phi[static_cast<size_t>(j)][static_cast<size_t>(i)];
        row[static_cast<size_t>(offset[static_cast<size_t>(x)] + i)] -= Scalar::from_int(f, 1);
        lsys.push_back(std::move(row));
      }
    }
  }
  auto lam_space = nullspace(std::move(lsys), total, f);
  if (lam_space.size() != 1)
    fail("NonUniqueIntegral", "chi-integral solution space has dimension " +
                                  std::to_string(lam_space.size()));
  Vec flat = std::move(lam_space[0]);
  Scalar lnorm(f);
  for (int k = 0; k < d1; ++k)
    lnorm += c1.unit[static_cast<size_t>(k)] * flat[static_cast<size_t>(offset[0] + k)];
  if (lnorm.is_zero())
    fail("PostconditionViolated", "lambda normalization: lambda_1(1) vanishes");
  Scalar lscale = dim_scalar / lnorm;
  for (auto& c : flat) c *= lscale;

  Integrals out;
  out.Lambda = Lambda;
  out.lambda.resize(static_cast<size_t>(nh));
  for (int x = 0; x < nh; ++x) {
    int dx = A.dim(x);
    out.lambda[static_cast<size_t>(x)] = zero_vec(f, dx);
    if (dx > 0)
      for (int i = 0; i < dx; ++i)
        out.lambda[static_cast<size_t>(x)][static_cast<size_t>(i)] =
            flat[static_cast<size_t>(offset[static_cast<size_t>(x)] + i)];
  }

  auto violated = [](const std::string& name) { fail("PostconditionViolated", name); };

  for (int i = 0; i < d1; ++i) {
    Vec b = basis_vec(f, d1, i);
    Scalar ei = A.eps(b);
    Vec want = Lambda;
    for (auto& c : want) c *= ei;
    if (A.mul(0, Lambda, b) != want || A.mul(0, b, Lambda) != want)
      violated("two-sided integral identity");
  }
  for (int x = 0; x < nh; ++x)
    for (int y = 0; y < nh; ++y) {
      int xy = H.mul(x, y);
      int dx = A.dim(x);
      int dy = A.dim(y);
      if (dx == 0 || dy == 0) continue;
      for (int k = 0; k < A.dim(xy); ++k) {
        Vec dd = apply_delta(A, x, y, basis_vec(f, A.dim(xy), k));
        Vec keep_first = zero_vec(f, dx);
        Vec keep_second = zero_vec(f, dy);
        for (int i = 0; i < dx; ++i)
          for (int j = 0; j < dy; ++j) {
            const Scalar& coeff = dd[static_cast<size_t>(i * dy + j)];
            if (coeff.is_zero()) continue;
            keep_first[static_cast<size_t>(i)] +=
                coeff * out.lambda[static_cast<size_t>(y)][static_cast<size_t>(j)];
            keep_second[static_cast<size_t>(j)] +=
                coeff * out.lambda[static_cast<size_t>(x)][static_cast<size_t>(i)];
          }
        Scalar lk = out.pair(xy, basis_vec(f, A.dim(xy), k));
        Vec want_first = A.comps[static_cast<size_t>(x)].unit;
        for (auto& c : want_first) c *= lk;
        Vec want_second = A.comps[static_cast<size_t>(y)].unit;
        for (auto& c : want_second) c *= lk;
        if (keep_first != want_first) violated("right chi-integral identity");
        if (keep_second != want_second) violated("left chi-integral identity");
      }
    }
  for (int x = 0; x < nh; ++x) {
    int dx = A.dim(x);
    if (dx == 0) continue;
    for (int e = 0; e < ne; ++e) {
      int xe = H.mul(A.cm.chi_of(e), x);
      const Mat& phi = A.action[static_cast<size_t>(x)][static_cast<size_t>(e)];
      for (int i = 0; i < dx; ++i)
        if (out.pair(xe, apply(f, phi, basis_vec(f, dx, i))) !=
            out.pair(x, basis_vec(f, dx, i)))
          violated("phi-invariance of lambda");
    }
    if (out.pair(x, A.comps[static_cast<size_t>(x)].unit) != dim_scalar)
      violated("lambda normalization lambda_x(1)");
    const GradedComponent& cx = A.comps[static_cast<size_t>(x)];
    for (int i = 0; i < dx; ++i)
      for (int j = 0; j < dx; ++j)
        if (out.pair(x, cx.mu[static_cast<size_t>(i)][static_cast<size_t>(j)]) !=
            out.pair(x, cx.mu[static_cast<size_t>(j)][static_cast<size_t>(i)]))
          violated("lambda symmetry");
    int xi = H.inv(x);
    const Mat& S = A.antipode[static_cast<size_t>(x)];
    for (int i = 0; i < A.dim(xi); ++i)
      if (out.pair(x, apply(f, S, basis_vec(f, A.dim(xi), i))) !=
          out.pair(xi, basis_vec(f, A.dim(xi), i)))
        violated("antipode invariance of lambda");
    Vec flip_delta = apply_delta(A, x, xi, Lambda);
    Vec other = apply_delta(A, xi, x, Lambda);
    size_t dxs = static_cast<size_t>(A.dim(x));
    size_t dxi = static_cast<size_t>(A.dim(xi));
    Vec flipped = zero_vec(f, static_cast<int>(dxs * dxi));
    for (size_t i = 0; i < dxs; ++i)
      for (size_t j = 0; j < dxi; ++j) flipped[j * dxs + i] = flip_delta[i * dxi + j];
    if (flipped != other) violated("cosymmetry of the integral");
  }
  if (out.pair(0, Lambda) != dim_scalar) violated("lambda_1(Lambda) normalization");
  if (A.eps(Lambda) != dim_scalar) violated("epsilon(Lambda) normalization");
  if (apply(f, A.antipode[0], Lambda) != Lambda) violated("antipode fixes the integral");

  return out;
}

HopfChiCoalgebra builtin_kp4(const Field& f) {
  if (f.characteristic() == 2)
    fail("BadCharacteristic", "the eight-dimensional example needs 1/2");
  HopfChiCoalgebra A;
  A.field = f;
  A.cm = xmod_z4_z2();
  const int D = 4;
  Scalar one = Scalar::from_int(f, 1);
  Scalar minus = Scalar::from_int(f, -1);
  Scalar half = Scalar::from_fraction(f, 1, 2);

  GradedComponent c0;
  c0.dim = D;
  c0.unit = basis_vec(f, D, 0);
  c0.mu.assign(D, std::vector<Vec>(D));
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) c0.mu[i][j] = basis_vec(f, D, (i + j) % 4);

  // basis 1, u, v, uv with u^2 = v^2 = 1 and vu = -uv
  GradedComponent c1;
  c1.dim = D;
  c1.unit = basis_vec(f, D, 0);
  c1.mu.assign(D, std::vector<Vec>(D));
  auto signed_basis = [&](int k, int s) {
    Vec v = basis_vec(f, D, k);
    if (s < 0) v[static_cast<size_t>(k)] = minus;
    return v;
  };
  int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  int sgn[4][4] = {{1, 1, 1, 1}, {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, 1, -1}};
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) c1.mu[i][j] = signed_basis(idx[i][j], sgn[i][j]);

  A.comps = {c0, c1};

  Vec a1 = basis_vec(f, D, 1);
  Vec a2 = basis_vec(f, D, 2);
  Vec u1 = basis_vec(f, D, 1);
  Vec v1 = basis_vec(f, D, 2);
  Vec mv = signed_basis(2, -1);

  auto omega_twist = [&](const Vec& s, const Vec& t) {
    Vec r = outer(f, c0.unit, c0.unit);
    Vec add1 = outer(f, s, c0.unit);
    Vec add2 = outer(f, c0.unit, t);
    Vec sub = outer(f, s, t);
    for (size_t k = 0; k < r.size(); ++k) r[k] = half * (r[k] + add1[k] + add2[k] - sub[k]);
    return r;
  };

  Vec d00_a = tensor_alg_mul(A, 0, 0, outer(f, a1, a1), omega_twist(a2, a2));
  Vec d01_u = tensor_alg_mul(A, 0, 1, outer(f, a1, u1), omega_twist(a2, v1));
  Vec d01_v = outer(f, a2, v1);
  Vec d11_a = tensor_alg_mul(A, 1, 1, outer(f, u1, u1), omega_twist(mv, v1));
  Vec d10_u = tensor_alg_mul(A, 1, 0, outer(f, u1, a1), omega_twist(mv, a2));
  Vec d10_v = outer(f, v1, a2);

  auto close_delta = [&](int gx, int gy, const Vec& img_a_or_u, const Vec* img_v) {
    std::vector<Vec> images(D);
    images[0] = outer(f, A.comps[static_cast<size_t>(gx)].unit,
                      A.comps[static_cast<size_t>(gy)].unit);
    if (img_v == nullptr) {
      images[1] = img_a_or_u;
      images[2] = tensor_alg_mul(A, gx, gy, img_a_or_u, img_a_or_u);
      images[3] = tensor_alg_mul(A, gx, gy, images[2], img_a_or_u);
    } else {
      images[1] = img_a_or_u;
      images[2] = *img_v;
      images[3] = tensor_alg_mul(A, gx, gy, img_a_or_u, *img_v);
    }
    Mat m = zero_mat(f, D * D, D);
    for (int col = 0; col < D; ++col)
      for (int row = 0; row < D * D; ++row)
        m[static_cast<size_t>(row)][static_cast<size_t>(col)] =
            images[static_cast<size_t>(col)][static_cast<size_t>(row)];
    return m;
  };

  A.coproduct.assign(2, std::vector<Mat>(2));
  A.coproduct[0][0] = close_delta(0, 0, d00_a, nullptr);
  A.coproduct[0][1] = close_delta(0, 1, d01_u, &d01_v);
  A.coproduct[1][0] = close_delta(1, 0, d10_u, &d10_v);
  A.coproduct[1][1] = close_delta(1, 1, d11_a, nullptr);

  A.counit = {one, one, one, one};

  Mat flip_last = identity_mat(f, D);
  flip_last[3][3] = minus;
  A.antipode = {identity_mat(f, D), flip_last};

  Mat alt = identity_mat(f, D);
  alt[1][1] = minus;
  alt[3][3] = minus;
  A.action.assign(2, std::vector<Mat>(4));
  for (int x = 0; x < 2; ++x)
    for (int e = 0; e < 4; ++e)
      A.action[static_cast<size_t>(x)][static_cast<size_t>(e)] =
          e % 2 == 0 ? identity_mat(f, D) : alt;

  return A;
}

HopfChiCoalgebra builtin_group_algebra(const Field& f, const FiniteGroup& G,
                                       const FiniteGroup& E, const Mat& omega) {
  int n = G.order();
  int ne = E.order();
  if (static_cast<int>(omega.size()) != n)
    fail("NotABicharacter", "omega needs one row per group element");
  for (const auto& row : omega)
    if (static_cast<int>(row.size()) != ne)
      fail("NotABicharacter", "omega needs one column per color");
  for (const auto& row : omega)
    for (const auto& entry : row)
      if (entry.is_zero()) fail("NotABicharacter", "omega takes the value zero");
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int e = 0; e < ne; ++e)
        if (omega[static_cast<size_t>(G.mul(g, h))][static_cast<size_t>(e)] !=
            omega[static_cast<size_t>(g)][static_cast<size_t>(e)] *
                omega[static_cast<size_t>(h)][static_cast<size_t>(e)])
          fail("NotABicharacter", "omega is not multiplicative at (" + G.name(g) + "*" +
                                      G.name(h) + ", " + E.name(e) + ")");
  for (int g = 0; g < n; ++g)
    for (int e = 0; e < ne; ++e)
      for (int e2 = 0; e2 < ne; ++e2)
        if (omega[static_cast<size_t>(g)][static_cast<size_t>(E.mul(e, e2))] !=
            omega[static_cast<size_t>(g)][static_cast<size_t>(e)] *
                omega[static_cast<size_t>(g)][static_cast<size_t>(e2)])
          fail("NotABicharacter", "omega is not multiplicative at (" + G.name(g) + ", " +
                                      E.name(e) + "*" + E.name(e2) + ")");
  if (char_divides(f, static_cast<unsigned long>(n)))
    fail("CharacteristicDividesDimension",
         "characteristic divides the group order " + std::to_string(n));

  HopfChiCoalgebra A;
  A.field = f;
  A.cm = xmod_to_1(E);
  GradedComponent c;
  c.dim = n;
  c.unit = basis_vec(f, n, 0);
  c.mu.assign(static_cast<size_t>(n), std::vector<Vec>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      c.mu[static_cast<size_t>(i)][static_cast<size_t>(j)] = basis_vec(f, n, G.mul(i, j));
  A.comps = {c};

  Mat delta = zero_mat(f, n * n, n);
  for (int g = 0; g < n; ++g)
    delta[static_cast<size_t>(g * n + g)][static_cast<size_t>(g)] = Scalar::from_int(f, 1);
  A.coproduct = {{delta}};

  A.counit = Vec(static_cast<size_t>(n), Scalar::from_int(f, 1));

  Mat s = zero_mat(f, n, n);
  for (int g = 0; g < n; ++g)
    s[static_cast<size_t>(G.inv(g))][static_cast<size_t>(g)] = Scalar::from_int(f, 1);
  A.antipode = {s};

  A.action.assign(1, std::vector<Mat>(static_cast<size_t>(ne)));
  for (int e = 0; e < ne; ++e) {
    Mat phi = zero_mat(f, n, n);
    for (int g = 0; g < n; ++g)
      phi[static_cast<size_t>(g)][static_cast<size_t>(g)] =
          omega[static_cast<size_t>(g)][static_cast<size_t>(e)];
    A.action[0][static_cast<size_t>(e)] = phi;
  }
  return A;
}

HopfChiCoalgebra builtin_group_algebra(const Field& f, const FiniteGroup& G) {
  FiniteGroup E = FiniteGroup::trivial();
  Mat omega(static_cast<size_t>(G.order()), Vec(1, Scalar::from_int(f, 1)));
  return builtin_group_algebra(f, G, E, omega);
}

HopfChiCoalgebra opposite(const HopfChiCoalgebra& A) {
  shape_check(A);
  HopfChiCoalgebra B = A;
  for (size_t x = 0; x < A.comps.size(); ++x) {
    int d = A.comps[x].dim;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        B.comps[x].mu[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            A.comps[x].mu[static_cast<size_t>(j)][static_cast<size_t>(i)];
  }
  try {
    for (int x = 0; x < A.cm.H.order(); ++x)
      B.antipode[static_cast<size_t>(x)] =
          inverse_mat(A.antipode[static_cast<size_t>(A.cm.H.inv(x))], A.field);
  } catch (const CkError& e) {
    fail("InvalidInput", std::string("antipode not invertible: ") + e.what());
  }
  return B;
}

HopfChiCoalgebra coopposite(const HopfChiCoalgebra& A) {
  shape_check(A);
  const FiniteGroup& H = A.cm.H;
  const FiniteGroup& E = A.cm.E;
  int nh = H.order();
  int ne = E.order();
  HopfChiCoalgebra B;
  B.field = A.field;
  B.cm = A.cm;
  B.comps.resize(static_cast<size_t>(nh));
  for (int x = 0; x < nh; ++x)
    B.comps[static_cast<size_t>(x)] = A.comps[static_cast<size_t>(H.inv(x))];
  B.counit = A.counit;
  B.coproduct.assign(static_cast<size_t>(nh), std::vector<Mat>(static_cast<size_t>(nh)));
  for (int x = 0; x < nh; ++x)
    for (int y = 0; y < nh; ++y) {
      int xi = H.inv(x);
      int yi = H.inv(y);
      const Mat& src = A.coproduct[static_cast<size_t>(yi)][static_cast<size_t>(xi)];
      int dxi = A.dim(xi);
      int dyi = A.dim(yi);
      int cols = A.dim(H.mul(yi, xi));
      Mat m = zero_mat(A.field, dxi * dyi, cols);
      for (int i = 0; i < dxi; ++i)
        for (int j = 0; j < dyi; ++j)
          for (int cidx = 0; cidx < cols; ++cidx)
            m[static_cast<size_t>(i * dyi + j)][static_cast<size_t>(cidx)] =
                src[static_cast<size_t>(j * dxi + i)][static_cast<size_t>(cidx)];
      B.coproduct[static_cast<size_t>(x)][static_cast<size_t>(y)] = std::move(m);
    }
  B.antipode.resize(static_cast<size_t>(nh));
  try {
    for (int x = 0; x < nh; ++x)
      B.antipode[static_cast<size_t>(x)] = inverse_mat(A.antipode[static_cast<size_t>(x)], A.field);
  } catch (const CkError& e) {
    fail("InvalidInput", std::string("antipode not invertible: ") + e.what());
  }
  B.action.assign(static_cast<size_t>(nh), std::vector<Mat>(static_cast<size_t>(ne)));
  for (int x = 0; x < nh; ++x)
    for (int e = 0; e < ne; ++e) {
      int xi = H.inv(x);
      int ee = A.cm.act(xi, E.inv(e));
      B.action[static_cast<size_t>(x)][static_cast<size_t>(e)] =
          A.action[static_cast<size_t>(xi)][static_cast<size_t>(ee)];
    }
  return B;
}

}  // namespace ck
