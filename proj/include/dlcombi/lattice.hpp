#pragma once

// Exact integer linear algebra: dense matrices over Z, Smith and Hermite
// normal forms, integer kernels, rational spans, finite abelian groups.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace dlcombi {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

inline Integer iabs(const Integer &a) { return a < 0 ? Integer(-a) : a; }

inline Integer igcd(Integer a, Integer b) {
  a = iabs(a);
  b = iabs(b);
  while (b != 0) {
    Integer r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline Integer ilcm(const Integer &a, const Integer &b) {
  if (a == 0 || b == 0)
    return 0;
  return iabs(a / igcd(a, b) * b);
}

/// Least non-negative residue; m must be positive.
inline Integer mod_floor(const Integer &a, const Integer &m) {
  Integer r = a % m;
  if (r < 0)
    r += m;
  return r;
}

inline Integer floor_div(const Integer &a, const Integer &b) {
  Integer q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0)))
    --q;
  return q;
}

/// Inverse of a modulo m, or nullopt when gcd(a, m) != 1.
inline std::optional<Integer> mod_inverse(const Integer &a, const Integer &m) {
  if (m == 1)
    return Integer(0);
  Integer r0 = mod_floor(a, m), r1 = m, s0 = 1, s1 = 0;
  while (r1 != 0) {
    Integer q = r0 / r1;
    Integer t = r0 - q * r1;
    r0 = std::move(r1);
    r1 = std::move(t);
    t = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(t);
  }
  if (r0 != 1)
    return std::nullopt;
  return mod_floor(s0, m);
}

inline Integer ipow(const Integer &b, unsigned e) {
  Integer r = 1;
  for (unsigned i = 0; i < e; ++i)
    r *= b;
  return r;
}

inline long long to_ll(const Integer &x) { return x.convert_to<long long>(); }

inline Integer dot(const IntVector &a, const IntVector &b) {
  require(a.size() == b.size(), ErrorCode::InconsistentInput,
          "dot: length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

inline IntVector operator+(const IntVector &a, const IntVector &b) {
  IntVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] += b[i];
  return r;
}

inline IntVector operator-(const IntVector &a, const IntVector &b) {
  IntVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] -= b[i];
  return r;
}

inline IntVector operator-(const IntVector &a) {
  IntVector r(a);
  for (auto &x : r)
    x = -x;
  return r;
}

inline IntVector operator*(const Integer &k, const IntVector &a) {
  IntVector r(a);
  for (auto &x : r)
    x *= k;
  return r;
}

inline bool is_zero(const IntVector &v) {
  return std::all_of(v.begin(), v.end(), [](const Integer &x) { return x == 0; });
}

inline std::string to_string(const IntVector &v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (auto &row : init) {
      require(row.size() == cols_, ErrorCode::InconsistentInput,
              "ragged matrix literal");
      for (auto x : row)
        a_.emplace_back(x);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = 1;
    return m;
  }
  static IntMatrix from_rows(const std::vector<IntVector> &rows,
                             std::size_t ncols = 0) {
    std::size_t c = rows.empty() ? ncols : rows.front().size();
    IntMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      require(rows[i].size() == c, ErrorCode::InconsistentInput, "ragged rows");
      for (std::size_t j = 0; j < c; ++j)
        m(i, j) = rows[i][j];
    }
    return m;
  }
  static IntMatrix from_columns(const std::vector<IntVector> &cols,
                                std::size_t nrows = 0) {
    return from_rows(cols, nrows).transpose();
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Integer &operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Integer &operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  IntVector row(std::size_t i) const {
    return IntVector(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }
  IntVector column(std::size_t j) const {
    IntVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      v[i] = (*this)(i, j);
    return v;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        t(j, i) = (*this)(i, j);
    return t;
  }

  IntVector operator*(const IntVector &v) const {
    require(v.size() == cols_, ErrorCode::InconsistentInput,
            "matrix-vector size mismatch");
    IntVector r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!(*this)(i, j).is_zero())
          r[i] += (*this)(i, j) * v[j];
    return r;
  }

  IntMatrix operator*(const IntMatrix &o) const {
    require(cols_ == o.rows_, ErrorCode::InconsistentInput,
            "matrix product size mismatch");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Integer &x = (*this)(i, k);
        if (x.is_zero())
          continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          r(i, j) += x * o(k, j);
      }
    return r;
  }

  IntMatrix operator+(const IntMatrix &o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, ErrorCode::InconsistentInput,
            "matrix sum size mismatch");
    IntMatrix r(*this);
    for (std::size_t k = 0; k < a_.size(); ++k)
      r.a_[k] += o.a_[k];
    return r;
  }
  IntMatrix operator-(const IntMatrix &o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, ErrorCode::InconsistentInput,
            "matrix difference size mismatch");
    IntMatrix r(*this);
    for (std::size_t k = 0; k < a_.size(); ++k)
      r.a_[k] -= o.a_[k];
    return r;
  }
  friend IntMatrix operator*(const Integer &k, IntMatrix m) {
    for (auto &x : m.a_)
      x *= k;
    return m;
  }

  bool operator==(const IntMatrix &o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const IntMatrix &o) const { return !(*this == o); }
  bool operator<(const IntMatrix &o) const {
    if (rows_ != o.rows_)
      return rows_ < o.rows_;
    if (cols_ != o.cols_)
      return cols_ < o.cols_;
    return a_ < o.a_;
  }

  bool is_identity() const { return *this == identity(rows_); }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j)
      return;
    for (std::size_t c = 0; c < cols_; ++c)
      std::swap((*this)(i, c), (*this)(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j)
      return;
    for (std::size_t r = 0; r < rows_; ++r)
      std::swap((*this)(r, i), (*this)(r, j));
  }
  /// row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer &k) {
    if (k.is_zero())
      return;
    for (std::size_t c = 0; c < cols_; ++c)
      (*this)(dst, c) += k * (*this)(src, c);
  }
  /// col[dst] += k * col[src]
  void add_col(std::size_t dst, std::size_t src, const Integer &k) {
    if (k.is_zero())
      return;
    for (std::size_t r = 0; r < rows_; ++r)
      (*this)(r, dst) += k * (*this)(r, src);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c)
      (*this)(i, c) = -(*this)(i, c);
  }

  std::string str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i)
      os << (i ? "," : "") << to_string(row(i));
    os << ']';
    return os.str();
  }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> a_;
};

inline std::ostream &operator<<(std::ostream &os, const IntMatrix &m) {
  return os << m.str();
}

inline IntMatrix matrix_power(const IntMatrix &m, unsigned e) {
  IntMatrix r = IntMatrix::identity(m.rows());
  for (unsigned i = 0; i < e; ++i)
    r = r * m;
  return r;
}

/// Fraction-free (Bareiss) determinant.
inline Integer determinant(IntMatrix m) {
  require(m.is_square(), ErrorCode::InconsistentInput,
          "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0)
    return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0)
        ++p;
      if (p == n)
        return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Leading principal minor of order k (k = 1..n).
inline Integer leading_minor(const IntMatrix &m, std::size_t k) {
  IntMatrix s(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      s(i, j) = m(i, j);
  return determinant(s);
}

/// Principal minor on an index subset.
inline Integer principal_minor(const IntMatrix &m,
                               const std::vector<std::size_t> &idx) {
  IntMatrix s(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j)
      s(i, j) = m(idx[i], idx[j]);
  return determinant(s);
}

// ---------------------------------------------------------------- rationals

using RatMatrix = std::vector<RatVector>;

inline RatVector to_rational(const IntVector &v) {
  return RatVector(v.begin(), v.end());
}

/// Row-reduced echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(RatMatrix &a, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0)
      ++p;
    if (p == a.size())
      continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (auto &x : a[r])
      x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0)
        continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < ncols; ++j)
        a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return pivots;
}

/// Q-span of a list of vectors with membership and coordinate queries.
class RationalSpan {
public:
  RationalSpan(const std::vector<IntVector> &gens, std::size_t dim) : dim_(dim) {
    for (auto &g : gens) {
      require(g.size() == dim, ErrorCode::InconsistentInput,
              "span generator of wrong length");
      basis_.push_back(to_rational(g));
    }
    pivots_ = rref(basis_, dim_);
  }
  std::size_t dimension() const { return basis_.size(); }
  bool contains(const RatVector &v) const {
    RatVector r(v);
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      Rational f = r[pivots_[k]];
      if (f == 0)
        continue;
      for (std::size_t j = 0; j < dim_; ++j)
        r[j] -= f * basis_[k][j];
    }
    return std::all_of(r.begin(), r.end(), [](const Rational &x) { return x == 0; });
  }
  bool contains(const IntVector &v) const { return contains(to_rational(v)); }

private:
  std::size_t dim_;
  RatMatrix basis_;
  std::vector<std::size_t> pivots_;
};

inline std::size_t rank(const std::vector<IntVector> &vs, std::size_t dim) {
  return RationalSpan(vs, dim).dimension();
}

/// Solve B x = v with B given by columns (full column rank); nullopt if v is
/// not in the column span.
inline std::optional<RatVector> solve_columns(const std::vector<IntVector> &cols,
                                              const RatVector &v) {
  const std::size_t n = v.size(), k = cols.size();
  RatMatrix aug(n, RatVector(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j)
      aug[i][j] = Rational(cols[j][i]);
    aug[i][k] = v[i];
  }
  auto piv = rref(aug, k + 1);
  if (!piv.empty() && piv.back() == k)
    return std::nullopt;
  require(piv.size() == k, ErrorCode::InconsistentInput,
          "solve_columns: columns are dependent");
  RatVector x(k);
  for (std::size_t r = 0; r < piv.size(); ++r)
    x[piv[r]] = aug[r][k];
  return x;
}

inline bool is_integral(const RatVector &v) {
  return std::all_of(v.begin(), v.end(), [](const Rational &x) {
    return boost::multiprecision::denominator(x) == 1;
  });
}

inline IntVector to_integer(const RatVector &v) {
  require(is_integral(v), ErrorCode::InconsistentInput,
          "vector is not integral");
  IntVector r;
  r.reserve(v.size());
  for (auto &x : v)
    r.push_back(boost::multiprecision::numerator(x));
  return r;
}

/// Inverse of a unimodular integer matrix.
inline IntMatrix inverse_unimodular(const IntMatrix &m) {
  require(m.is_square(), ErrorCode::InconsistentInput, "inverse of non-square");
  const std::size_t n = m.rows();
  RatMatrix aug(n, RatVector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug[i][j] = Rational(m(i, j));
    aug[i][n + i] = 1;
  }
  auto piv = rref(aug, 2 * n);
  require(piv.size() == n && piv.back() == n - 1, ErrorCode::SingularPresentation,
          "matrix is singular");
  IntMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      require(boost::multiprecision::denominator(aug[i][n + j]) == 1,
              ErrorCode::InconsistentInput, "matrix is not unimodular");
      r(i, j) = boost::multiprecision::numerator(aug[i][n + j]);
    }
  return r;
}

// ---------------------------------------------------------- normal forms

struct SmithForm {
  IntMatrix U, D, V; // U * M * V == D
  IntMatrix Uinv;
};

/// Smith normal form. Pivot: least nonzero |entry| in the active block,
/// ties broken by lowest row, then lowest column.
inline SmithForm smith_normal_form(const IntMatrix &m) {
  const std::size_t R = m.rows(), C = m.cols();
  SmithForm s{IntMatrix::identity(R), m, IntMatrix::identity(C),
              IntMatrix::identity(R)};
  IntMatrix &D = s.D;
  auto row_add = [&](std::size_t dst, std::size_t src, const Integer &k) {
    D.add_row(dst, src, k);
    s.U.add_row(dst, src, k);
    s.Uinv.add_col(src, dst, -k);
  };
  auto row_swap = [&](std::size_t i, std::size_t j) {
    D.swap_rows(i, j);
    s.U.swap_rows(i, j);
    s.Uinv.swap_cols(i, j);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const Integer &k) {
    D.add_col(dst, src, k);
    s.V.add_col(dst, src, k);
  };

  for (std::size_t t = 0; t < std::min(R, C); ++t) {
    for (;;) {
      std::size_t pi = R, pj = C;
      Integer best;
      for (std::size_t i = t; i < R; ++i)
        for (std::size_t j = t; j < C; ++j) {
          if (D(i, j) == 0)
            continue;
          Integer a = iabs(D(i, j));
          if (pi == R || a < best) {
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (pi == R)
        return s;
      row_swap(t, pi);
      D.swap_cols(t, pj);
      s.V.swap_cols(t, pj);

      bool clear = true;
      for (std::size_t i = t + 1; i < R; ++i)
        if (D(i, t) != 0) {
          row_add(i, t, -(D(i, t) / D(t, t)));
          if (D(i, t) != 0)
            clear = false;
        }
      for (std::size_t j = t + 1; j < C; ++j)
        if (D(t, j) != 0) {
          col_add(j, t, -(D(t, j) / D(t, t)));
          if (D(t, j) != 0)
            clear = false;
        }
      if (!clear)
        continue;

      std::size_t bad = R;
      for (std::size_t i = t + 1; i < R && bad == R; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (D(i, j) % D(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == R)
        break;
      row_add(t, bad, 1);
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      s.U.negate_row(t);
      for (std::size_t i = 0; i < R; ++i)
        s.Uinv(i, t) = -s.Uinv(i, t);
    }
  }
  return s;
}

/// Canonical (reduced echelon) basis of the row lattice; zero rows dropped.
inline std::vector<IntVector> hermite_rows(std::vector<IntVector> a) {
  if (a.empty())
    return a;
  const std::size_t n = a.front().size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < a.size(); ++c) {
    for (;;) {
      std::size_t p = a.size();
      for (std::size_t r = row; r < a.size(); ++r)
        if (a[r][c] != 0 && (p == a.size() || iabs(a[r][c]) < iabs(a[p][c])))
          p = r;
      if (p == a.size())
        break;
      std::swap(a[row], a[p]);
      bool done = true;
      for (std::size_t r = row + 1; r < a.size(); ++r)
        if (a[r][c] != 0) {
          Integer q = a[r][c] / a[row][c];
          for (std::size_t j = 0; j < n; ++j)
            a[r][j] -= q * a[row][j];
          if (a[r][c] != 0)
            done = false;
        }
      if (done)
        break;
    }
    if (a[row][c] == 0)
      continue;
    if (a[row][c] < 0)
      a[row] = -a[row];
    for (std::size_t r = 0; r < row; ++r) {
      Integer q = floor_div(a[r][c], a[row][c]);
      if (q != 0)
        for (std::size_t j = 0; j < n; ++j)
          a[r][j] -= q * a[row][j];
    }
    ++row;
  }
  a.resize(row);
  return a;
}

/// Canonical basis of { v in Z^n : m v = 0 }.
inline std::vector<IntVector> integer_kernel(const IntMatrix &m) {
  SmithForm s = smith_normal_form(m);
  std::size_t r = 0;
  while (r < std::min(s.D.rows(), s.D.cols()) && s.D(r, r) != 0)
    ++r;
  std::vector<IntVector> k;
  for (std::size_t j = r; j < m.cols(); ++j)
    k.push_back(s.V.column(j));
  return hermite_rows(std::move(k));
}

// ------------------------------------------------- finite abelian groups

/// Finite abelian group Z/d_1 x ... x Z/d_r with d_i | d_{i+1}, d_i > 1.
/// Optionally carries a presentation Z^n -> group (projection) together with
/// a section picking canonical lattice representatives.
class FiniteAbelianGroup {
public:
  using Element = IntVector;

  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<Integer> factors) {
    for (auto &d : factors) {
      require(d >= 1, ErrorCode::InconsistentInput,
              "invariant factors must be positive");
      if (d > 1)
        factors_.push_back(d);
    }
    for (std::size_t i = 1; i < factors_.size(); ++i)
      require(factors_[i] % factors_[i - 1] == 0, ErrorCode::InconsistentInput,
              "invariant factors must form a divisibility chain");
  }

  const std::vector<Integer> &invariant_factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  Integer order() const {
    Integer o = 1;
    for (auto &d : factors_)
      o *= d;
    return o;
  }
  Integer exponent() const { return factors_.empty() ? Integer(1) : factors_.back(); }

  Element zero() const { return Element(factors_.size()); }
  Element reduce(Element e) const {
    check(e);
    for (std::size_t i = 0; i < e.size(); ++i)
      e[i] = mod_floor(e[i], factors_[i]);
    return e;
  }
  Element add(const Element &a, const Element &b) const { return reduce(a + b); }
  Element neg(const Element &a) const { return reduce(-a); }
  Element scale(const Element &a, const Integer &k) const { return reduce(k * a); }
  bool is_zero(const Element &a) const { return dlcombi::is_zero(reduce(a)); }

  Integer element_order(const Element &a) const {
    Element r = reduce(a);
    Integer o = 1;
    for (std::size_t i = 0; i < r.size(); ++i)
      o = ilcm(o, factors_[i] / igcd(r[i], factors_[i]));
    return o;
  }

  bool has_presentation() const { return projection_.has_value(); }
  std::size_t ambient_rank() const { return projection_ ? projection_->cols() : 0; }

  Element project(const IntVector &v) const {
    require(has_presentation(), ErrorCode::InconsistentInput,
            "group has no presentation");
    return reduce((*projection_) * v);
  }
  /// Canonical lattice representative of an element.
  IntVector lift(const Element &e) const {
    require(has_presentation(), ErrorCode::InconsistentInput,
            "group has no presentation");
    return (*section_) * reduce(e);
  }
  IntVector canonical(const IntVector &v) const { return lift(project(v)); }

  /// Visit every element in mixed-radix order.
  template <class F> void for_each_element(F &&f, const Integer &cap = 1000000) const {
    if (order() > cap)
      fail(ErrorCode::ScaleExceeded, "group of order " + order().str() +
                                         " exceeds enumeration cap " + cap.str());
    Element e = zero();
    for (;;) {
      f(std::as_const(e));
      std::size_t i = 0;
      while (i < e.size()) {
        if (++e[i] < factors_[i])
          break;
        e[i] = 0;
        ++i;
      }
      if (i == e.size())
        return;
    }
  }

  std::vector<Element> elements(const Integer &cap = 1000000) const {
    std::vector<Element> out;
    for_each_element([&](const Element &e) { out.push_back(e); }, cap);
    return out;
  }

  static FiniteAbelianGroup with_presentation(std::vector<Integer> factors,
                                              IntMatrix projection,
                                              IntMatrix section) {
    FiniteAbelianGroup g(std::move(factors));
    require(projection.rows() == g.rank() && section.cols() == g.rank(),
            ErrorCode::InconsistentInput, "presentation shape mismatch");
    g.projection_ = std::move(projection);
    g.section_ = std::move(section);
    return g;
  }

private:
  void check(const Element &e) const {
    require(e.size() == factors_.size(), ErrorCode::InconsistentInput,
            "element has wrong number of coordinates");
  }

  std::vector<Integer> factors_;
  std::optional<IntMatrix> projection_;
  std::optional<IntMatrix> section_;
};

/// Z^n / M Z^n for square non-singular M.
inline FiniteAbelianGroup cokernel(const IntMatrix &m) {
  require(m.is_square(), ErrorCode::SingularPresentation,
          "cokernel needs a square presentation");
  SmithForm s = smith_normal_form(m);
  const std::size_t n = m.rows();
  std::vector<Integer> factors;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i) {
    if (s.D(i, i) == 0)
      fail(ErrorCode::SingularPresentation,
           "presentation matrix is singular: " + m.str());
    if (s.D(i, i) > 1) {
      factors.push_back(s.D(i, i));
      keep.push_back(i);
    }
  }
  IntMatrix proj(keep.size(), n), sec(n, keep.size());
  for (std::size_t k = 0; k < keep.size(); ++k)
    for (std::size_t j = 0; j < n; ++j) {
      proj(k, j) = s.U(keep[k], j);
      sec(j, k) = s.Uinv(j, keep[k]);
    }
  return FiniteAbelianGroup::with_presentation(std::move(factors), std::move(proj),
                                               std::move(sec));
}

} // namespace dlcombi
