#pragma once

// Folding a root datum along an automorphism g = t.pi (pi permuting the
// simple roots, t a torus element), the extension theta+ of characters of
// the fixed part, and the induced maps on series.

#include <set>

#include "series.hpp"

namespace dlcombi {

struct DatumAutomorphism {
  std::vector<std::size_t> perm;   // permutation of simple roots; empty = identity
  std::optional<IntMatrix> pi_y;   // explicit lattice action on Y
  RatVector torus_part;            // t = exp(2 pi i gamma), gamma in Y (x) Q; empty = 1
  std::vector<int> c_flags;        // per positive orbit: 1 = one, 0 = not one; empty = default
  Integer p = 2;
};

struct OrbitClassification {
  std::vector<RootSet> orbits; // sorted by least root index
  std::vector<bool> positive;
  std::vector<bool> type_a;
  std::vector<bool> c_one;
  std::vector<bool> kept;      // orbit contributes to Phi[g]
  std::vector<IntVector> coroot; // orbit coroot in Y (only meaningful when kept)
};

/// Name of a finite Cartan matrix such as "A1", "C2", "A1xA2"; "T" if empty.
inline std::string cartan_type_name(const IntMatrix &c) {
  const std::size_t n = c.rows();
  if (n == 0)
    return "T";
  auto linked = [&](std::size_t i, std::size_t j) { return i != j && c(i, j) != 0; };
  std::vector<std::size_t> deg(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      deg[i] += linked(i, j);
  std::vector<bool> done(n, false);
  std::vector<std::string> names;
  for (std::size_t s = 0; s < n; ++s) {
    if (done[s])
      continue;
    std::vector<std::size_t> v{s};
    done[s] = true;
    for (std::size_t h = 0; h < v.size(); ++h)
      for (std::size_t j = 0; j < n; ++j)
        if (!done[j] && linked(v[h], j)) {
          done[j] = true;
          v.push_back(j);
        }
    const std::string r = std::to_string(v.size());
    long long maxprod = 1;
    std::size_t di = 0, dj = 0, branch = n;
    for (auto i : v) {
      if (deg[i] >= 3)
        branch = i;
      for (auto j : v)
        if (linked(i, j) && to_ll(c(i, j) * c(j, i)) > maxprod) {
          maxprod = to_ll(c(i, j) * c(j, i));
          di = i;
          dj = j;
        }
    }
    std::string name;
    if (maxprod == 3) {
      name = "G2";
    } else if (maxprod == 2) {
      if (v.size() == 2) {
        name = "C2";
      } else if (deg[di] > 1 && deg[dj] > 1) {
        name = "F4";
      } else {
        // end node of the double bond is short for B, long for C
        std::size_t e = deg[di] == 1 ? di : dj, nb = e == di ? dj : di;
        name = (c(e, nb) == -2 ? "B" : "C") + r;
      }
    } else if (branch < n) {
      std::size_t leaves = 0;
      for (auto j : v)
        if (linked(branch, j) && deg[j] == 1)
          ++leaves;
      name = (leaves >= 2 ? "D" : "E") + r;
    } else {
      name = "A" + r;
    }
    names.push_back(name);
  }
  std::sort(names.begin(), names.end());
  std::string out;
  for (auto &x : names)
    out += (out.empty() ? "" : "x") + x;
  return out;
}

/// Automorphism resolved against a group context.
struct ResolvedAutomorphism {
  DatumAutomorphism spec;
  IntMatrix pi_y, pi_x;
  RootPerm pi_roots;
  unsigned pi_order = 1;
  unsigned order = 1; // m
};

inline ResolvedAutomorphism resolve(const GroupContext &ctx, const DatumAutomorphism &g) {
  const auto &d = ctx.datum();
  const std::size_t n = d.rank, s = d.semisimple_rank();
  ResolvedAutomorphism r{g, {}, {}, {}, 1, 1};
  auto &perm = r.spec.perm;
  if (perm.empty()) {
    perm.resize(s);
    std::iota(perm.begin(), perm.end(), 0);
  }
  require(perm.size() == s, ErrorCode::ValidationError,
          "automorphism must permute all " + std::to_string(s) + " simple roots");
  {
    auto sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < s; ++i)
      require(sorted[i] == i, ErrorCode::ValidationError,
              "automorphism is not a permutation");
  }
  require(prime_of_power(g.p) == g.p, ErrorCode::ValidationError,
          "p = " + g.p.str() + " is not prime");
  if (g.pi_y) {
    r.pi_y = *g.pi_y;
  } else {
    auto m = lattice_automorphism(d, perm);
    require(m.has_value(), ErrorCode::InconsistentInput,
            "no lattice automorphism realises the permutation");
    r.pi_y = *m;
  }
  r.pi_x = inverse_unimodular(r.pi_y).transpose();
  const auto &rs = ctx.roots();
  for (std::size_t i = 0; i < s; ++i)
    require(r.pi_y * d.simple_coroots[i] == d.simple_coroots[perm[i]] &&
                r.pi_x * d.simple_roots[i] == d.simple_roots[perm[i]],
            ErrorCode::InconsistentInput, "automorphism does not permute the base");
  for (RootIndex a = 0; a < rs.size(); ++a)
    r.pi_roots.push_back(static_cast<std::uint16_t>(*rs.find_root(r.pi_x * rs.root(a))));
  IntMatrix pw = r.pi_y;
  while (!pw.is_identity()) {
    pw = pw * r.pi_y;
    require(++r.pi_order < 1000, ErrorCode::InconsistentInput,
            "automorphism has no finite order");
  }
  if (r.spec.torus_part.empty())
    r.spec.torus_part.assign(n, Rational(0));
  require(r.spec.torus_part.size() == n, ErrorCode::ValidationError,
          "torus part has wrong length");
  // m: least multiple of |pi| with sum_{j<m} pi^j gamma in Y
  RatVector acc(n, Rational(0)), cur = r.spec.torus_part;
  auto apply = [&](const IntMatrix &m, const RatVector &v) {
    RatVector out(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        out[i] += Rational(m(i, j)) * v[j];
    return out;
  };
  for (unsigned k = 1;; ++k) {
    for (std::size_t i = 0; i < n; ++i)
      acc[i] += cur[i];
    cur = apply(r.pi_y, cur);
    if (k % r.pi_order == 0 && is_integral(acc)) {
      r.order = k;
      break;
    }
    require(k < 100000, ErrorCode::InconsistentInput, "automorphism order is unbounded");
  }
  return r;
}

inline OrbitClassification classify_orbits(const GroupContext &ctx,
                                           const ResolvedAutomorphism &g) {
  const auto &rs = ctx.roots();
  OrbitClassification oc;
  std::vector<int> seen(rs.size(), -1);
  for (RootIndex a = 0; a < rs.size(); ++a) {
    if (seen[a] >= 0)
      continue;
    RootSet o;
    for (RootIndex b = a; seen[b] < 0; b = g.pi_roots[b]) {
      seen[b] = static_cast<int>(oc.orbits.size());
      o.push_back(b);
    }
    oc.orbits.push_back(normalized(o));
  }
  const std::size_t no = oc.orbits.size();
  oc.positive.resize(no);
  oc.type_a.resize(no);
  for (std::size_t k = 0; k < no; ++k) {
    const auto &o = oc.orbits[k];
    oc.positive[k] = rs.is_positive(o.front());
    for (auto a : o)
      for (auto b : o)
        if (rs.sum(a, b))
          oc.type_a[k] = true;
  }
  // per-orbit scalar: user flags on positive orbits, else the pinned rule
  std::vector<std::size_t> pos_index(no, 0);
  std::size_t npos = 0;
  for (std::size_t k = 0; k < no; ++k)
    if (oc.positive[k])
      pos_index[k] = npos++;
  if (!g.spec.c_flags.empty())
    require(g.spec.c_flags.size() == npos, ErrorCode::ValidationError,
            "expected " + std::to_string(npos) + " orbit flags (one per positive orbit)");
  oc.c_one.resize(no);
  oc.kept.resize(no);
  oc.coroot.resize(no);
  const bool odd_p = g.spec.p != 2;
  for (std::size_t k = 0; k < no; ++k) {
    const auto &o = oc.orbits[k];
    if (!g.spec.c_flags.empty()) {
      std::size_t pk = oc.positive[k] ? k : static_cast<std::size_t>(seen[rs.negative(o.front())]);
      oc.c_one[k] = g.spec.c_flags[pos_index[pk]] != 0;
    } else {
      bool sign = false;
      if (odd_p && !oc.type_a[k])
        for (std::size_t t = 0; t < no && !sign; ++t) {
          if (!oc.type_a[t])
            continue;
          for (auto a : oc.orbits[t])
            for (auto b : oc.orbits[t])
              if (auto c = rs.sum(a, b); c && contains(o, *c))
                sign = true;
        }
      IntVector total(ctx.rank());
      for (auto a : o)
        total = total + rs.root(a);
      Rational phase = sign ? Rational(1, 2) : Rational(0);
      for (std::size_t i = 0; i < total.size(); ++i)
        phase += Rational(total[i]) * g.spec.torus_part[i];
      oc.c_one[k] = boost::multiprecision::denominator(phase) == 1;
    }
    oc.kept[k] = oc.c_one[k] && (!oc.type_a[k] || odd_p);
    IntVector cr(ctx.rank());
    for (auto a : o)
      cr = cr + rs.coroot(a);
    oc.coroot[k] = oc.type_a[k] ? Integer(2) * cr : cr;
  }
  return oc;
}

/// Coroots Phi^vee(g) in ambient Y coordinates, sorted.
inline std::vector<IntVector> fixed_coroot_system(const GroupContext &ctx,
                                                  const ResolvedAutomorphism &g) {
  auto oc = classify_orbits(ctx, g);
  std::vector<IntVector> out;
  for (std::size_t k = 0; k < oc.orbits.size(); ++k)
    if (oc.kept[k])
      out.push_back(oc.coroot[k]);
  std::sort(out.begin(), out.end());
  return out;
}

/// Result of folding a context along g.
struct FoldedDatum {
  ContextPtr parent;
  ContextPtr folded;
  ResolvedAutomorphism g;
  OrbitClassification orbits;
  IntMatrix basis;                         // n x k, columns span Y^pi
  std::vector<std::size_t> simple_orbits;  // orbit index of each folded simple root
  std::vector<WeylElement> embedding;      // folded Weyl element -> parent element
  std::string type;

  /// Coordinates in Y^pi of a pi-fixed vector of Y (or Y (x) Q).
  RatVector coords(const RatVector &v) const {
    std::vector<IntVector> cols;
    for (std::size_t j = 0; j < basis.cols(); ++j)
      cols.push_back(basis.column(j));
    auto c = solve_columns(cols, v);
    require(c.has_value(), ErrorCode::InconsistentInput, "vector not in the fixed sublattice");
    return *c;
  }
  IntVector coords(const IntVector &v) const { return to_integer(coords(to_rational(v))); }
  /// Restriction X -> Hom(Y^pi, Z).
  IntVector restrict_x(const IntVector &x) const { return basis.transpose() * x; }
  WeylElement iota(WeylElement x) const { return embedding.at(x.index); }
};

inline FoldedDatum folded_datum(const ContextPtr &ctx, const DatumAutomorphism &spec) {
  FoldedDatum f;
  f.parent = ctx;
  f.g = resolve(*ctx, spec);
  f.orbits = classify_orbits(*ctx, f.g);
  const auto &rs = ctx->roots();
  const std::size_t n = ctx->rank();

  // Frobenius compatibility: phi commutes with pi, F fixes t
  require(ctx->phi_y() * f.g.pi_y == f.g.pi_y * ctx->phi_y(),
          ErrorCode::IncompatibleFrobenius, "automorphism does not commute with phi");
  {
    RatVector d(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j)
        d[i] += Rational(ctx->q() * ctx->phi_y()(i, j)) * f.g.spec.torus_part[j];
      d[i] -= f.g.spec.torus_part[i];
    }
    require(is_integral(d), ErrorCode::IncompatibleFrobenius,
            "torus part is not fixed by the Frobenius");
  }

  auto ker = integer_kernel(f.g.pi_y - IntMatrix::identity(n));
  f.basis = IntMatrix::from_columns(ker, n);
  const std::size_t k = ker.size();

  struct Folded {
    std::size_t orbit;
    IntVector root, coroot;
  };
  std::vector<Folded> pos;
  for (std::size_t o = 0; o < f.orbits.orbits.size(); ++o) {
    if (!f.orbits.kept[o] || !f.orbits.positive[o])
      continue;
    const auto &cr = f.orbits.coroot[o];
    require(f.g.pi_y * cr == cr, ErrorCode::InconsistentInput, "orbit coroot not fixed");
    auto a = f.orbits.orbits[o].front();
    Integer pairing = dot(rs.root(a), cr);
    IntVector rho = f.restrict_x(rs.root(a));
    for (auto &x : rho) {
      require((2 * x) % pairing == 0, ErrorCode::InconsistentInput,
              "folded root is not integral");
      x = 2 * x / pairing;
    }
    pos.push_back({o, rho, f.coords(cr)});
  }
  std::vector<IntVector> sroots, scoroots;
  std::set<IntVector> posset;
  for (auto &p : pos)
    posset.insert(p.root);
  for (auto &p : pos) {
    bool decomposable = false;
    for (auto &q : pos)
      if (q.root != p.root && posset.count(p.root - q.root))
        decomposable = true;
    if (!decomposable) {
      f.simple_orbits.push_back(p.orbit);
      sroots.push_back(p.root);
      scoroots.push_back(p.coroot);
    }
  }
  BasedRootDatum fd = sroots.empty() ? torus_datum(k) : make_datum(sroots, scoroots);
  f.type = cartan_type_name(fd.cartan());
  fd.name = f.type;

  // induced Frobenius
  FrobeniusSpec fs;
  fs.q = ctx->q();
  IntMatrix phi_f(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    auto c = f.coords(ctx->phi_y() * f.basis.column(j));
    for (std::size_t i = 0; i < k; ++i)
      phi_f(i, j) = c[i];
  }
  fs.phi_y = phi_f;
  for (auto o : f.simple_orbits) {
    auto img = ctx->phi_roots(f.orbits.orbits[o]);
    auto it = std::find_if(f.simple_orbits.begin(), f.simple_orbits.end(),
                           [&](std::size_t t) { return f.orbits.orbits[t] == img; });
    require(it != f.simple_orbits.end(), ErrorCode::IncompatibleFrobenius,
            "Frobenius does not preserve the folded base");
    fs.phi.push_back(static_cast<std::size_t>(it - f.simple_orbits.begin()));
  }
  f.folded = GroupContext::create(fd, fs);

  // Weyl embedding: same action on Y^pi
  const auto &W = ctx->weyl();
  for (auto x : f.folded->weyl().elements()) {
    IntMatrix target = f.basis * f.folded->weyl().matrix_y(x);
    std::optional<WeylElement> hit;
    for (auto y : W.elements())
      if (W.matrix_y(y) * f.basis == target) {
        hit = y;
        break;
      }
    require(hit.has_value(), ErrorCode::InconsistentInput,
            "folded Weyl element has no ambient counterpart");
    f.embedding.push_back(*hit);
  }
  return f;
}

// ------------------------------------------------------------ theta plus

/// Character of a finite abelian group: chi(a) = sum_i chi_i a_i / d_i.
struct AbelianCharacter {
  IntVector chi;
  Rational value(const FiniteAbelianGroup &A, const IntVector &a) const {
    Rational v = 0;
    const auto &d = A.invariant_factors();
    for (std::size_t i = 0; i < d.size(); ++i)
      v += Rational(chi[i] * a[i], d[i]);
    Integer fl = floor_div(boost::multiprecision::numerator(v),
                           boost::multiprecision::denominator(v));
    return v - Rational(fl);
  }
};

inline Integer rational_order(const Rational &v) {
  return boost::multiprecision::denominator(v);
}

/// Split e = e_n * e_rest with e_n supported on the primes of n; returns
/// e_n and the idempotent k (k = 1 mod e_n, k = 0 mod e_rest).
inline std::pair<Integer, Integer> primary_idempotent(const Integer &e, const Integer &n) {
  Integer en = 1, rest = e;
  for (Integer g = igcd(rest, n); g > 1; g = igcd(rest, n)) {
    while (rest % g == 0) {
      rest /= g;
      en *= g;
    }
  }
  if (en == 1)
    return {en, Integer(0)};
  // k = rest * (rest^{-1} mod en)
  Integer k = rest * *mod_inverse(rest, en);
  return {en, mod_floor(k, e)};
}

inline IntVector apply_mod(const FiniteAbelianGroup &A, const IntMatrix &g, const IntVector &a) {
  return A.reduce(g * a);
}

/// theta+ on A from theta on A^g (theta supplied as any character of A;
/// only its restriction to A^g is used).
inline AbelianCharacter extend_theta_plus(const FiniteAbelianGroup &A, const IntMatrix &g,
                                          unsigned m, const AbelianCharacter &theta) {
  const std::size_t r = A.rank();
  require(g.rows() == r && g.cols() == r, ErrorCode::InconsistentInput,
          "automorphism matrix has wrong shape");
  // g must be well defined and of order dividing m
  {
    IntVector e(r);
    for (std::size_t i = 0; i < r; ++i) {
      IntVector v(r);
      v[i] = A.invariant_factors()[i];
      require(A.is_zero(g * v), ErrorCode::InconsistentInput,
              "matrix does not define an endomorphism of the group");
    }
    IntMatrix pw = IntMatrix::identity(r);
    for (unsigned k = 0; k < m; ++k)
      pw = pw * g;
    for (std::size_t i = 0; i < r; ++i) {
      IntVector v(r);
      v[i] = 1;
      require(A.is_zero(pw * v - v), ErrorCode::InconsistentInput,
              "automorphism order does not divide m");
    }
  }
  Integer n = 1;
  A.for_each_element([&](const IntVector &a) {
    if (apply_mod(A, g, a) == a)
      n = ilcm(n, rational_order(theta.value(A, a)));
  });
  if (igcd(n, Integer(m)) != 1)
    fail(ErrorCode::OrderClash, "character order " + n.str() + " is not prime to " +
                                    std::to_string(m));
  auto [en, k] = primary_idempotent(A.exponent(), n);
  AbelianCharacter out{IntVector(r)};
  if (en == 1)
    return out;
  Integer u = *mod_inverse(Integer(m), en);
  for (std::size_t i = 0; i < r; ++i) {
    IntVector a(r);
    a[i] = k * u;
    IntVector s(r);
    IntVector cur = A.reduce(a);
    for (unsigned j = 0; j < m; ++j) {
      s = s + cur;
      cur = apply_mod(A, g, cur);
    }
    Rational v = theta.value(A, A.reduce(s));
    out.chi[i] = boost::multiprecision::numerator(v * Rational(A.invariant_factors()[i]));
  }
  return out;
}

/// Lift a pair on the folded context to the parent: w -> iota(w) and
/// theta -> theta+.
inline SeriesPair lift_series_iQ(const FoldedDatum &f, const SeriesPair &p) {
  require_same(f.folded, p.context());
  const unsigned m = f.g.order;
  Integer n = p.order();
  if (igcd(n, Integer(m)) != 1)
    fail(ErrorCode::OrderClash, "character order " + n.str() + " is not prime to " +
                                    std::to_string(m));
  auto w = f.iota(p.w());
  auto t = make_torus(f.parent, w);
  const std::size_t dim = f.parent->rank();
  auto [en, k] = primary_idempotent(t->group().exponent(), n);
  IntVector num(dim);
  TorusPoint sp = p.sigma();
  if (en != 1) {
    Integer u = *mod_inverse(Integer(m), en);
    for (std::size_t i = 0; i < dim; ++i) {
      IntVector acc(dim), cur(dim);
      cur[i] = 1;
      for (unsigned j = 0; j < m; ++j) {
        acc = acc + cur;
        cur = f.g.pi_y * cur;
      }
      IntVector c = f.coords((k * u) * acc);
      num[i] = dot(sp.num, c);
    }
  }
  return character_from_sigma(t, TorusPoint::make(num, sp.den));
}

/// Composite of folding steps along a filtration, with the final folded
/// datum put into canonical coordinates so that different filtrations of
/// the same group can be compared.
class CompositeLift {
public:
  CompositeLift(const ContextPtr &ctx, const std::vector<DatumAutomorphism> &filtration) {
    ContextPtr cur = ctx;
    IntMatrix total = IntMatrix::identity(ctx->rank());
    for (std::size_t s = 0; s < filtration.size(); ++s) {
      DatumAutomorphism g = filtration[s];
      if (s > 0)
        g = restrict_to(steps_.back(), total, resolve(*ctx, g));
      steps_.push_back(folded_datum(cur, g));
      cur = steps_.back().folded;
      total = total * steps_.back().basis;
    }
    for (std::size_t a = 0; a < filtration.size(); ++a)
      for (std::size_t b = a + 1; b < filtration.size(); ++b)
        check_commute(*ctx, filtration[a], filtration[b]);
    build_canonical(cur, total);
  }

  const ContextPtr &final_context() const { return canonical_; }
  const std::vector<FoldedDatum> &steps() const { return steps_; }
  const IntMatrix &final_basis() const { return canon_basis_; }
  unsigned total_order() const {
    unsigned m = 1;
    for (auto &s : steps_)
      m *= s.g.order;
    return m;
  }

  /// Lift a pair given on the canonical final context to the ambient one.
  SeriesPair lift(WeylElement w, const IntVector &mu) const {
    const auto &cw = canonical_->weyl();
    auto p = TorusCharacter(make_torus(canonical_, w), mu);
    // to the last step's coordinates: c_route = T^{-1} c_canon
    const auto &route = steps_.back().folded;
    IntMatrix target = tinv_ * cw.matrix_y(w) * t_;
    std::optional<WeylElement> rw;
    for (auto x : route->weyl().elements())
      if (route->weyl().matrix_y(x) == target) {
        rw = x;
        break;
      }
    require(rw.has_value(), ErrorCode::InconsistentInput, "no matching folded element");
    auto sp = p.sigma();
    SeriesPair cur = character_from_sigma(make_torus(route, *rw),
                                          TorusPoint::make(t_.transpose() * sp.num, sp.den));
    for (std::size_t s = steps_.size(); s-- > 0;)
      cur = lift_series_iQ(steps_[s], cur);
    return cur;
  }

private:
  /// Express an automorphism of the ambient datum on the folded lattice.
  static DatumAutomorphism restrict_to(const FoldedDatum &f, const IntMatrix &total,
                                       const ResolvedAutomorphism &g) {
    const std::size_t k = f.basis.cols();
    DatumAutomorphism out;
    out.p = g.spec.p;
    const IntMatrix &pi = g.pi_y;
    IntMatrix loc(k, k);
    std::vector<IntVector> cols;
    for (std::size_t j = 0; j < total.cols(); ++j)
      cols.push_back(total.column(j));
    for (std::size_t j = 0; j < k; ++j) {
      auto c = solve_columns(cols, to_rational(pi * total.column(j)));
      require(c && is_integral(*c), ErrorCode::InconsistentInput,
              "automorphism does not preserve the fixed lattice");
      auto ci = to_integer(*c);
      for (std::size_t i = 0; i < k; ++i)
        loc(i, j) = ci[i];
    }
    out.pi_y = loc;
    const auto &fd = f.folded->datum();
    for (std::size_t i = 0; i < fd.semisimple_rank(); ++i) {
      auto img = loc * fd.simple_coroots[i];
      std::size_t j = 0;
      while (j < fd.semisimple_rank() && fd.simple_coroots[j] != img)
        ++j;
      require(j < fd.semisimple_rank(), ErrorCode::InconsistentInput,
              "automorphism does not preserve the folded base");
      out.perm.push_back(j);
    }
    if (!g.spec.torus_part.empty()) {
      auto c = solve_columns(cols, g.spec.torus_part);
      require(c.has_value(), ErrorCode::InconsistentInput,
              "torus part is not in the fixed subspace");
      out.torus_part = *c;
    }
    return out;
  }

  static void check_commute(const GroupContext &ctx, const DatumAutomorphism &a,
                            const DatumAutomorphism &b) {
    auto ra = resolve(ctx, a), rb = resolve(ctx, b);
    require(ra.pi_y * rb.pi_y == rb.pi_y * ra.pi_y, ErrorCode::InconsistentInput,
            "filtration steps do not commute");
    auto moved = [&](const ResolvedAutomorphism &x, const RatVector &gamma) {
      const std::size_t n = ctx.rank();
      RatVector d(n, Rational(0));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
          d[i] += Rational(x.pi_y(i, j)) * gamma[j];
        d[i] -= gamma[i];
      }
      return is_integral(d);
    };
    require(moved(ra, rb.spec.torus_part) && moved(rb, ra.spec.torus_part),
            ErrorCode::InconsistentInput, "filtration steps do not commute");
  }

  void build_canonical(const ContextPtr &route, const IntMatrix &total) {
    // canonical basis of the column span of `total`
    std::vector<IntVector> rows;
    for (std::size_t j = 0; j < total.cols(); ++j)
      rows.push_back(total.column(j));
    auto h = hermite_rows(rows);
    const std::size_t k = h.size();
    canon_basis_ = IntMatrix::from_columns(h, total.rows());
    // T with canon * T = total (c_canon = T c_route)
    t_ = IntMatrix(k, k);
    for (std::size_t j = 0; j < k; ++j) {
      auto c = solve_columns(h, to_rational(total.column(j)));
      auto ci = to_integer(*c);
      for (std::size_t i = 0; i < k; ++i)
        t_(i, j) = ci[i];
    }
    tinv_ = inverse_unimodular(t_);
    const auto &rd = route->datum();
    // simple coroots in canonical coordinates, sorted by ambient coordinates
    std::vector<std::pair<IntVector, std::size_t>> order;
    for (std::size_t i = 0; i < rd.semisimple_rank(); ++i)
      order.emplace_back(total * rd.simple_coroots[i], i);
    std::sort(order.begin(), order.end());
    std::vector<IntVector> r, cr;
    std::vector<std::size_t> pos(rd.semisimple_rank());
    for (std::size_t s = 0; s < order.size(); ++s) {
      auto i = order[s].second;
      pos[i] = s;
      cr.push_back(t_ * rd.simple_coroots[i]);
      r.push_back(tinv_.transpose() * rd.simple_roots[i]);
    }
    BasedRootDatum cd = r.empty() ? torus_datum(k) : make_datum(r, cr);
    cd.name = route->datum().name;
    FrobeniusSpec fs;
    fs.q = route->q();
    fs.phi_y = t_ * route->phi_y() * tinv_;
    fs.phi.resize(order.size());
    for (std::size_t s = 0; s < order.size(); ++s)
      fs.phi[s] = pos[route->phi_simple()[order[s].second]];
    canonical_ = GroupContext::create(cd, fs);
  }

  std::vector<FoldedDatum> steps_;
  ContextPtr canonical_;
  IntMatrix canon_basis_, t_, tinv_;
};

} // namespace dlcombi
