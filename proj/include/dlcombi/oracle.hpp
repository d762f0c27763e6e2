#pragma once

// Brute-force ground truth from explicit 2x2 matrix groups over small
// finite fields. Self-contained: shares no code with the lattice machinery.

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace dlcombi::oracle {

/// Finite field with elements 0..size-1 given by full operation tables.
class Field {
public:
  int size() const { return n_; }
  int characteristic() const { return p_; }
  int add(int a, int b) const { return add_[a * n_ + b]; }
  int mul(int a, int b) const { return mul_[a * n_ + b]; }
  int neg(int a) const {
    for (int b = 0; b < n_; ++b)
      if (add(a, b) == 0)
        return b;
    throw std::logic_error("no additive inverse");
  }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int inv(int a) const {
    for (int b = 1; b < n_; ++b)
      if (mul(a, b) == 1)
        return b;
    throw std::logic_error("no multiplicative inverse");
  }
  int pow(int a, long e) const {
    int r = 1;
    for (long i = 0; i < e; ++i)
      r = mul(r, a);
    return r;
  }

  static Field prime(int p) {
    Field f;
    f.n_ = f.p_ = p;
    f.add_.resize(p * p);
    f.mul_.resize(p * p);
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) {
        f.add_[a * p + b] = (a + b) % p;
        f.mul_[a * p + b] = (a * b) % p;
      }
    return f;
  }

  /// Quadratic extension K[x]/(x^2 + c1 x + c0); element a + b x is
  /// encoded a + b * |K|.
  static Field quadratic(const Field &k, int c1, int c0) {
    const int m = k.size();
    Field f;
    f.n_ = m * m;
    f.p_ = k.p_;
    f.add_.resize(f.n_ * f.n_);
    f.mul_.resize(f.n_ * f.n_);
    for (int u = 0; u < f.n_; ++u)
      for (int v = 0; v < f.n_; ++v) {
        int a = u % m, b = u / m, c = v % m, d = v / m;
        f.add_[u * f.n_ + v] = k.add(a, c) + m * k.add(b, d);
        // (a + b x)(c + d x) = ac + (ad + bc) x + bd x^2, x^2 = -c1 x - c0
        int bd = k.mul(b, d);
        int lo = k.sub(k.mul(a, c), k.mul(bd, c0));
        int hi = k.sub(k.add(k.mul(a, d), k.mul(b, c)), k.mul(bd, c1));
        f.mul_[u * f.n_ + v] = lo + m * hi;
      }
    return f;
  }

  /// Some monic irreducible quadratic (c1, c0) over k.
  static std::pair<int, int> irreducible_quadratic(const Field &k) {
    for (int c1 = 0; c1 < k.size(); ++c1)
      for (int c0 = 1; c0 < k.size(); ++c0) {
        bool root = false;
        for (int x = 0; x < k.size(); ++x)
          if (k.add(k.add(k.mul(x, x), k.mul(c1, x)), c0) == 0)
            root = true;
        if (!root)
          return {c1, c0};
      }
    throw std::logic_error("no irreducible quadratic");
  }

  /// Exhaustive check of the field axioms.
  bool check_axioms() const {
    for (int a = 0; a < n_; ++a) {
      if (add(a, 0) != a || mul(a, 1) != a)
        return false;
      if (a != 0 && mul(a, inv(a)) != 1)
        return false;
      for (int b = 0; b < n_; ++b) {
        if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a))
          return false;
        for (int c = 0; c < n_; ++c) {
          if (add(add(a, b), c) != add(a, add(b, c)))
            return false;
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            return false;
          if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
            return false;
        }
      }
    }
    return true;
  }

private:
  int n_ = 0, p_ = 0;
  std::vector<int> add_, mul_;
};

/// F_q for q in {2, 3, 4, 5} (more generally p or p^2).
inline Field make_field(int q) {
  for (int p = 2; p <= q; ++p) {
    bool prime = true;
    for (int d = 2; d * d <= p; ++d)
      if (p % d == 0)
        prime = false;
    if (!prime)
      continue;
    if (p == q)
      return Field::prime(p);
    if (p * p == q) {
      Field base = Field::prime(p);
      auto [c1, c0] = Field::irreducible_quadratic(base);
      return Field::quadratic(base, c1, c0);
    }
  }
  throw std::invalid_argument("unsupported field size " + std::to_string(q));
}

using Mat = std::array<int, 4>; // row-major a b / c d

enum class Family { GL2, SL2, PGL2 };

inline Family parse_family(const std::string &s) {
  if (s == "GL2")
    return Family::GL2;
  if (s == "SL2")
    return Family::SL2;
  if (s == "PGL2")
    return Family::PGL2;
  throw std::invalid_argument("unknown family " + s);
}

class MatrixGroup {
public:
  MatrixGroup(Family fam, int q) : fam_(fam), f_(make_field(q)) {
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b)
        for (int c = 0; c < q; ++c)
          for (int d = 0; d < q; ++d) {
            Mat m{a, b, c, d};
            int det = determinant(m);
            if (det == 0)
              continue;
            if (fam == Family::SL2 && det != 1)
              continue;
            if (fam == Family::PGL2 && normalize(m) != m)
              continue;
            elems_.push_back(m);
          }
  }

  const Field &field() const { return f_; }
  const std::vector<Mat> &elements() const { return elems_; }
  std::size_t order() const { return elems_.size(); }

  int determinant(const Mat &m) const {
    return f_.sub(f_.mul(m[0], m[3]), f_.mul(m[1], m[2]));
  }
  Mat raw_mul(const Mat &x, const Mat &y) const {
    return {f_.add(f_.mul(x[0], y[0]), f_.mul(x[1], y[2])),
            f_.add(f_.mul(x[0], y[1]), f_.mul(x[1], y[3])),
            f_.add(f_.mul(x[2], y[0]), f_.mul(x[3], y[2])),
            f_.add(f_.mul(x[2], y[1]), f_.mul(x[3], y[3]))};
  }
  /// Scale so that the first nonzero entry is 1 (projective class).
  Mat normalize(const Mat &m) const {
    int lead = 0;
    for (int x : m)
      if (x != 0) {
        lead = x;
        break;
      }
    int s = f_.inv(lead);
    return {f_.mul(m[0], s), f_.mul(m[1], s), f_.mul(m[2], s), f_.mul(m[3], s)};
  }
  Mat mul(const Mat &x, const Mat &y) const {
    Mat r = raw_mul(x, y);
    return fam_ == Family::PGL2 ? normalize(r) : r;
  }
  Mat inverse(const Mat &m) const {
    int di = f_.inv(determinant(m));
    Mat r{f_.mul(m[3], di), f_.mul(f_.neg(m[1]), di), f_.mul(f_.neg(m[2]), di),
          f_.mul(m[0], di)};
    return fam_ == Family::PGL2 ? normalize(r) : r;
  }
  Mat identity() const { return {1, 0, 0, 1}; }

  long element_order(const Mat &m) const {
    Mat x = m;
    long k = 1;
    while (x != identity()) {
      x = mul(x, m);
      ++k;
    }
    return k;
  }

  std::vector<std::vector<Mat>> conjugacy_classes() const {
    std::set<Mat> seen;
    std::vector<std::vector<Mat>> out;
    for (auto &x : elems_) {
      if (seen.count(x))
        continue;
      std::set<Mat> cls;
      for (auto &g : elems_)
        cls.insert(mul(mul(g, x), inverse(g)));
      seen.insert(cls.begin(), cls.end());
      out.emplace_back(cls.begin(), cls.end());
    }
    return out;
  }

private:
  Family fam_;
  Field f_;
  std::vector<Mat> elems_;
};

enum class TorusKind { Split, Coxeter };

/// Rational points of the diagonal torus (split) or of the centraliser of
/// an elliptic regular element (Coxeter torus). GL2 and SL2 only.
inline long torus_point_count(Family fam, int q, TorusKind kind) {
  if (fam == Family::PGL2)
    throw std::invalid_argument("torus counts are provided for GL2 and SL2");
  MatrixGroup g(fam, q);
  const Field &f = g.field();
  long count = 0;
  if (kind == TorusKind::Split) {
    for (auto &m : g.elements())
      if (m[1] == 0 && m[2] == 0)
        ++count;
    return count;
  }
  auto [c1, c0] = Field::irreducible_quadratic(f);
  Mat comp{0, f.neg(c0), 1, f.neg(c1)}; // companion matrix, no eigenvalue in F_q
  for (auto &m : g.elements())
    if (g.raw_mul(m, comp) == g.raw_mul(comp, m))
      ++count;
  return count;
}

/// Conjugacy classes of elements of order prime to p.
inline long semisimple_class_count(Family fam, int q) {
  MatrixGroup g(fam, q);
  const int p = g.field().characteristic();
  long n = 0;
  for (auto &cls : g.conjugacy_classes())
    if (g.element_order(cls.front()) % p != 0)
      ++n;
  return n;
}

/// Classical order formulas, used to sanity check the enumeration.
inline long classical_order(Family fam, int q) {
  long gl = static_cast<long>(q * q - 1) * (q * q - q);
  return fam == Family::GL2 ? gl : gl / (q - 1);
}

} // namespace dlcombi::oracle
