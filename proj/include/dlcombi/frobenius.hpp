#pragma once

// Frobenius data, twisted tori T^{wF}, and their characters.

#include <memory>
#include <optional>
#include <vector>

#include "weyl.hpp"

namespace dlcombi {

/// Prime p with q = p^k (k >= 1), or nullopt.
inline std::optional<Integer> prime_of_power(const Integer &q) {
  if (q < 2)
    return std::nullopt;
  Integer p = 2;
  Integer n = q;
  while (p * p <= n && n % p != 0)
    ++p;
  if (n % p != 0)
    p = n;
  while (n % p == 0)
    n /= p;
  if (n != 1)
    return std::nullopt;
  return p;
}

struct FrobeniusSpec {
  Integer q = 2;
  std::vector<std::size_t> phi; // permutation of simple roots; empty = identity
  std::optional<IntMatrix> phi_y; // explicit action on Y, overrides search
};

/// Lattice automorphism of a root datum sending simple coroots by a
/// permutation. Returns its matrix on Y or nullopt if none exists.
inline std::optional<IntMatrix>
lattice_automorphism(const BasedRootDatum &d, const std::vector<std::size_t> &perm) {
  const std::size_t n = d.rank, s = d.semisimple_rank();
  auto ok = [&](const IntMatrix &py) {
    if (std::abs(to_ll(determinant(py))) != 1)
      return false;
    IntMatrix px = inverse_unimodular(py).transpose();
    for (std::size_t i = 0; i < s; ++i)
      if (py * d.simple_coroots[i] != d.simple_coroots[perm[i]] ||
          px * d.simple_roots[i] != d.simple_roots[perm[i]])
        return false;
    return true;
  };
  bool identity = true;
  for (std::size_t i = 0; i < s; ++i)
    identity = identity && perm[i] == i;
  if (identity)
    return IntMatrix::identity(n);
  if (s == n) {
    std::vector<IntVector> cols, img;
    for (std::size_t i = 0; i < s; ++i) {
      cols.push_back(d.simple_coroots[i]);
      img.push_back(d.simple_coroots[perm[i]]);
    }
    // P * C = C_perm  =>  P^T solves C^T P^T = C_perm^T column by column
    IntMatrix C = IntMatrix::from_columns(cols), Cp = IntMatrix::from_columns(img);
    IntMatrix CT = C.transpose();
    std::vector<IntVector> ct_cols;
    for (std::size_t j = 0; j < n; ++j)
      ct_cols.push_back(CT.column(j));
    IntMatrix P(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      auto x = solve_columns(ct_cols, to_rational(Cp.row(r)));
      if (!x || !is_integral(*x))
        return std::nullopt;
      auto xi = to_integer(*x);
      for (std::size_t c = 0; c < n; ++c)
        P(r, c) = xi[c];
    }
    if (!ok(P))
      return std::nullopt;
    return P;
  }
  // non-semisimple: search signed permutation matrices
  if (n > 6)
    return std::nullopt;
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    for (unsigned signs = 0; signs < (1u << n); ++signs) {
      IntMatrix P(n, n);
      for (std::size_t c = 0; c < n; ++c)
        P(sigma[c], c) = (signs >> c & 1) ? -1 : 1;
      if (ok(P))
        return P;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return std::nullopt;
}

/// Root datum together with its root system, Weyl group and a Frobenius
/// structure F = q * phi. Immutable once built; share via shared_ptr.
class GroupContext {
public:
  GroupContext(const GroupContext &) = delete;
  GroupContext &operator=(const GroupContext &) = delete;

  static std::shared_ptr<const GroupContext>
  create(BasedRootDatum d, FrobeniusSpec f = {},
         std::size_t weyl_cap = WeylGroup::kDefaultCap) {
    return std::shared_ptr<const GroupContext>(
        new GroupContext(std::move(d), std::move(f), weyl_cap));
  }

  const BasedRootDatum &datum() const { return datum_; }
  const RootSystem &roots() const { return roots_; }
  const WeylGroup &weyl() const { return weyl_; }
  std::size_t rank() const { return datum_.rank; }
  const Integer &q() const { return q_; }
  const Integer &p() const { return p_; }
  const std::vector<std::size_t> &phi_simple() const { return phi_; }
  const IntMatrix &phi_x() const { return phi_x_; }
  const IntMatrix &phi_y() const { return phi_y_; }
  RootIndex phi_root(RootIndex a) const { return phi_roots_[a]; }
  RootSet phi_roots(const RootSet &s) const {
    RootSet r;
    for (auto a : s)
      r.push_back(phi_roots_[a]);
    return normalized(std::move(r));
  }
  /// phi(w) = phi w phi^{-1}
  WeylElement phi(WeylElement w) const { return phi_w_[w.index]; }
  bool phi_is_identity() const { return phi_y_.is_identity(); }

private:
  GroupContext(BasedRootDatum d, FrobeniusSpec f, std::size_t cap)
      : datum_(std::move(d)), roots_(datum_), weyl_(datum_, roots_, cap),
        q_(f.q) {
    auto p = prime_of_power(q_);
    require(p.has_value(), ErrorCode::ValidationError,
            "q = " + q_.str() + " is not a prime power");
    p_ = *p;
    const std::size_t s = datum_.semisimple_rank();
    phi_ = f.phi;
    if (phi_.empty()) {
      phi_.resize(s);
      std::iota(phi_.begin(), phi_.end(), 0);
    }
    require(phi_.size() == s, ErrorCode::IncompatibleFrobenius,
            "phi must permute all simple roots");
    {
      auto sorted = phi_;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < s; ++i)
        require(sorted[i] == i, ErrorCode::IncompatibleFrobenius,
                "phi is not a permutation");
    }
    if (f.phi_y) {
      phi_y_ = *f.phi_y;
      require(phi_y_.rows() == datum_.rank && phi_y_.is_square(),
              ErrorCode::IncompatibleFrobenius, "phi matrix has wrong shape");
      for (std::size_t i = 0; i < s; ++i)
        require(phi_y_ * datum_.simple_coroots[i] == datum_.simple_coroots[phi_[i]],
                ErrorCode::IncompatibleFrobenius,
                "phi matrix does not permute the simple coroots as given");
    } else {
      auto m = lattice_automorphism(datum_, phi_);
      require(m.has_value(), ErrorCode::IncompatibleFrobenius,
              "no lattice automorphism realises the simple-root permutation");
      phi_y_ = *m;
    }
    {
      IntMatrix pw = phi_y_;
      for (unsigned k = 1; !pw.is_identity(); ++k) {
        require(k < 1000, ErrorCode::IncompatibleFrobenius, "phi has infinite order");
        pw = pw * phi_y_;
      }
    }
    phi_x_ = inverse_unimodular(phi_y_).transpose();
    for (std::size_t i = 0; i < s; ++i)
      require(phi_x_ * datum_.simple_roots[i] == datum_.simple_roots[phi_[i]],
              ErrorCode::IncompatibleFrobenius, "phi does not preserve the simple roots");
    for (RootIndex a = 0; a < roots_.size(); ++a) {
      auto b = roots_.find_root(phi_x_ * roots_.root(a));
      require(b.has_value(), ErrorCode::IncompatibleFrobenius,
              "phi does not preserve the roots");
      phi_roots_.push_back(static_cast<std::uint16_t>(*b));
    }
    RootPerm inv = WeylGroup::invert(phi_roots_);
    for (auto w : weyl_.elements()) {
      auto img = WeylGroup::compose(WeylGroup::compose(phi_roots_, weyl_.perm(w)), inv);
      phi_w_.push_back(*weyl_.from_perm(img));
    }
  }

  BasedRootDatum datum_;
  RootSystem roots_;
  WeylGroup weyl_;
  Integer q_, p_;
  std::vector<std::size_t> phi_;
  IntMatrix phi_x_, phi_y_;
  RootPerm phi_roots_;
  std::vector<WeylElement> phi_w_;
};

using ContextPtr = std::shared_ptr<const GroupContext>;

inline void require_same(const ContextPtr &a, const ContextPtr &b) {
  require(a.get() == b.get(), ErrorCode::MismatchedContext,
          "objects belong to different group contexts");
}

/// F-conjugacy classes w ~ v w phi(v)^{-1}; each class sorted, the first
/// element is the representative.
inline std::vector<std::vector<WeylElement>> f_conjugacy_classes(const GroupContext &g) {
  const auto &W = g.weyl();
  std::vector<int> cls(W.order(), -1);
  std::vector<std::vector<WeylElement>> out;
  for (auto w : W.elements()) {
    if (cls[w.index] >= 0)
      continue;
    std::vector<WeylElement> c;
    for (auto v : W.elements()) {
      auto x = W.multiply({v, w, W.inverse(g.phi(v))});
      if (cls[x.index] < 0) {
        cls[x.index] = static_cast<int>(out.size());
        c.push_back(x);
      }
    }
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

/// Point of (X tensor Q)/X stored as num/den with 0 <= num_i < den and den
/// minimal; equality is exact.
struct TorusPoint {
  Integer den = 1;
  IntVector num;

  static TorusPoint make(IntVector num, Integer den) {
    require(den > 0, ErrorCode::InconsistentInput, "denominator must be positive");
    Integer g = den;
    for (auto &x : num) {
      x = mod_floor(x, den);
      g = igcd(g, x);
    }
    TorusPoint t;
    t.den = den / g;
    for (auto &x : num)
      x /= g;
    t.num = std::move(num);
    return t;
  }
  TorusPoint act(const IntMatrix &x) const { return make(x * num, den); }
  bool is_zero() const { return den == 1; }
  bool operator==(const TorusPoint &o) const { return den == o.den && num == o.num; }
  bool operator<(const TorusPoint &o) const {
    if (den != o.den)
      return den < o.den;
    return num < o.num;
  }
};

class TwistedTorus {
public:
  static constexpr unsigned kMaxPeriod = 10000;

  TwistedTorus(ContextPtr ctx, WeylElement w) : ctx_(std::move(ctx)), w_(w) {
    const auto &W = ctx_->weyl();
    require(w.index < W.order(), ErrorCode::IndexOutOfRange, "Weyl element out of range");
    const std::size_t n = ctx_->rank();
    IntMatrix wphi = W.matrix_y(w) * ctx_->phi_y();
    IntMatrix p = wphi;
    e_ = 1;
    while (!p.is_identity()) {
      p = p * wphi;
      if (++e_ > kMaxPeriod)
        fail(ErrorCode::ScaleExceeded, "twist has excessive order");
    }
    frob_ = ctx_->q() * wphi;
    m_y_ = frob_ - IntMatrix::identity(n);
    modulus_ = ipow(ctx_->q(), e_) - 1;
    norm_ = IntMatrix(n, n);
    IntMatrix pw = IntMatrix::identity(n);
    for (unsigned i = 0; i < e_; ++i) {
      norm_ = norm_ + pw;
      pw = pw * frob_;
    }
    group_ = cokernel(m_y_);
    dual_ = cokernel(m_y_.transpose());
  }

  const ContextPtr &context() const { return ctx_; }
  WeylElement w() const { return w_; }
  unsigned period() const { return e_; }
  const Integer &modulus() const { return modulus_; } // q^e - 1
  const IntMatrix &frobenius_y() const { return frob_; }
  const IntMatrix &presentation_y() const { return m_y_; }
  const IntMatrix &norm_y() const { return norm_; }
  /// T^{wF} as Y / (wF - 1) Y.
  const FiniteAbelianGroup &group() const { return group_; }
  /// Character group as X / (wF - 1)^T X.
  const FiniteAbelianGroup &character_group() const { return dual_; }
  Integer order() const { return group_.order(); }

private:
  ContextPtr ctx_;
  WeylElement w_;
  unsigned e_ = 1;
  Integer modulus_;
  IntMatrix frob_, m_y_, norm_;
  FiniteAbelianGroup group_, dual_;
};

using TorusPtr = std::shared_ptr<const TwistedTorus>;

inline TorusPtr make_torus(const ContextPtr &ctx, WeylElement w) {
  return std::make_shared<const TwistedTorus>(ctx, w);
}

/// Character of T^{wF}, given by mu in X modulo (wF - 1)^T X.
class TorusCharacter {
public:
  TorusCharacter(TorusPtr t, const IntVector &mu) : t_(std::move(t)) {
    require(mu.size() == t_->context()->rank(), ErrorCode::InconsistentInput,
            "mu has wrong length");
    mu_ = t_->character_group().canonical(mu);
    IntVector s = t_->norm_y().transpose() * mu_;
    for (auto &x : s)
      x = mod_floor(x, t_->modulus());
    sigma_num_ = std::move(s);
  }

  const TorusPtr &torus() const { return t_; }
  const ContextPtr &context() const { return t_->context(); }
  WeylElement w() const { return t_->w(); }
  const IntVector &mu() const { return mu_; }

  /// theta(lambda) as a residue modulo q^e - 1.
  Integer value(const IntVector &lambda) const {
    return mod_floor(dot(sigma_num_, lambda), t_->modulus());
  }
  /// Fraction sigma with theta(lambda) = exp(2 pi i sigma . lambda).
  TorusPoint sigma() const { return TorusPoint::make(sigma_num_, t_->modulus()); }
  Integer order() const {
    return t_->character_group().element_order(t_->character_group().project(mu_));
  }
  bool is_trivial() const { return order() == 1; }

  bool operator==(const TorusCharacter &o) const {
    return t_->context() == o.t_->context() && t_->w() == o.t_->w() && mu_ == o.mu_;
  }

private:
  TorusPtr t_;
  IntVector mu_;
  IntVector sigma_num_;
};

inline Integer theta_value(const TorusCharacter &theta, const IntVector &lambda) {
  return theta.value(lambda);
}

/// Character of T^{wF} whose sigma is the given point; throws if the point
/// does not define a character of this torus.
inline TorusCharacter character_from_sigma(const TorusPtr &t, const TorusPoint &s) {
  IntVector v = t->presentation_y().transpose() * s.num;
  for (auto &x : v) {
    require(x % s.den == 0, ErrorCode::InconsistentInput,
            "point is not fixed by the twisted Frobenius");
    x /= s.den;
  }
  TorusCharacter c(t, v);
  require(c.sigma() == s, ErrorCode::InconsistentInput, "sigma round trip failed");
  return c;
}

/// All characters of T^{wF} in canonical element order.
inline std::vector<TorusCharacter> all_characters(const TorusPtr &t,
                                                  const Integer &cap = 1000000) {
  std::vector<TorusCharacter> out;
  const auto &g = t->character_group();
  g.for_each_element([&](const auto &e) { out.emplace_back(t, g.lift(e)); }, cap);
  return out;
}

/// theta transported along x: the character of T^{x^{-1} w phi(x) F}
/// corresponding to theta composed with conjugation by x.
inline TorusCharacter transport(const TorusCharacter &theta, WeylElement x) {
  const auto &ctx = theta.context();
  const auto &W = ctx->weyl();
  auto w2 = W.multiply({W.inverse(x), theta.w(), ctx->phi(x)});
  auto t2 = make_torus(ctx, w2);
  return character_from_sigma(t2, theta.sigma().act(W.matrix_x(W.inverse(x))));
}

} // namespace dlcombi
