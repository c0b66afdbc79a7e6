#include "gradedproj/matrix.hpp"

#include <algorithm>
#include <utility>

namespace gradedproj {

Int IntMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant: matrix not square");
  std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

namespace {

struct SnfState {
  IntMatrix d, u, v;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < d.cols(); ++j) std::swap(d.at(a, j), d.at(b, j));
    for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < d.rows(); ++i) std::swap(d.at(i, a), d.at(i, b));
    for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
  }
  // row a -= q * row b
  void row_op(std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < d.cols(); ++j) d.at(a, j) -= q * d.at(b, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u.at(a, j) -= q * u.at(b, j);
  }
  // col a -= q * col b
  void col_op(std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < d.rows(); ++i) d.at(i, a) -= q * d.at(i, b);
    for (std::size_t i = 0; i < v.rows(); ++i) v.at(i, a) -= q * v.at(i, b);
  }
  void negate_row(std::size_t a) {
    for (std::size_t j = 0; j < d.cols(); ++j) d.at(a, j) = -d.at(a, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u.at(a, j) = -u.at(a, j);
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  SnfState st;
  st.d = a;
  st.u = IntMatrix::identity(a.rows());
  st.v = IntMatrix::identity(a.cols());
  const std::size_t r = a.rows(), c = a.cols();
  const std::size_t steps = std::min(r, c);

  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Minimal-absolute-value nonzero pivot in the trailing submatrix.
      bool found = false;
      std::size_t pi = t, pj = t;
      Int best = 0;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j) {
          const Int& e = st.d.at(i, j);
          if (e == 0) continue;
          Int ae = int_abs(e);
          if (!found || ae < best) {
            found = true;
            best = ae;
            pi = i;
            pj = j;
          }
        }
      if (!found) {
        // Trailing block is zero; SNF below t is done.
        return {st.u, st.d, st.v};
      }
      st.swap_rows(t, pi);
      st.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (st.d.at(i, t) == 0) continue;
        Int q = int_div_floor(st.d.at(i, t), st.d.at(t, t));
        st.row_op(i, t, q);
        if (st.d.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (st.d.at(t, j) == 0) continue;
        Int q = int_div_floor(st.d.at(t, j), st.d.at(t, t));
        st.col_op(j, t, q);
        if (st.d.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;  // smaller entries appeared, pick a new pivot

      // Divisibility repair: pivot must divide every remaining entry.
      bool repaired = false;
      for (std::size_t i = t + 1; i < r && !repaired; ++i)
        for (std::size_t j = t + 1; j < c && !repaired; ++j)
          if (st.d.at(i, j) % st.d.at(t, t) != 0) {
            st.row_op(t, i, Int(-1));  // add row i to row t
            repaired = true;
          }
      if (repaired) continue;

      if (st.d.at(t, t) < 0) st.negate_row(t);
      break;
    }
  }
  return {st.u, st.d, st.v};
}

std::vector<Int> solve_linear_diophantine(const IntMatrix& a, const std::vector<Int>& b,
                                          bool& solvable) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: rhs size mismatch");
  SmithDecomposition snf = smith_normal_form(a);
  // A x = b  <=>  D y = U b, x = V y.
  std::vector<Int> ub(a.rows(), Int(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.rows(); ++j) ub[i] += snf.u.at(i, j) * b[j];
  std::vector<Int> y(a.cols(), Int(0));
  const std::size_t steps = std::min(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Int di = (i < steps) ? snf.d.at(i, i) : Int(0);
    if (di == 0) {
      if (ub[i] != 0) {
        solvable = false;
        return {};
      }
    } else {
      if (ub[i] % di != 0) {
        solvable = false;
        return {};
      }
      if (i < a.cols()) y[i] = ub[i] / di;
    }
  }
  std::vector<Int> x(a.cols(), Int(0));
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) x[i] += snf.v.at(i, j) * y[j];
  solvable = true;
  return x;
}

}  // namespace gradedproj
