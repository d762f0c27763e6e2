#pragma once

// Length and dimension numerology for sequences of Weyl elements and of
// radical subsets, and the root-level conditions on characters.

#include <array>

#include "series.hpp"

namespace dlcombi {

struct WeylSequence {
  ContextPtr ctx;
  std::vector<WeylElement> w;

  std::size_t size() const { return w.size(); }
  WeylElement product() const {
    const auto &W = ctx->weyl();
    WeylElement r = W.identity();
    for (auto x : w)
      r = W.multiply(r, x);
    return r;
  }
  /// 1-based entry; indices past r wrap through phi.
  WeylElement at(std::size_t i) const {
    require(i >= 1, ErrorCode::IndexOutOfRange, "sequence index must be >= 1");
    const std::size_t r = w.size();
    WeylElement x = w.at((i - 1) % r);
    for (std::size_t k = 0; k < (i - 1) / r; ++k)
      x = ctx->phi(x);
    return x;
  }
  bool operator==(const WeylSequence &o) const { return ctx == o.ctx && w == o.w; }
};

inline WeylSequence make_sequence(const ContextPtr &ctx, const std::vector<Word> &words) {
  require(!words.empty(), ErrorCode::InconsistentInput, "sequence must be non-empty");
  WeylSequence s{ctx, {}};
  for (auto &wd : words)
    s.w.push_back(ctx->weyl().from_word(wd));
  return s;
}

inline void check_j(const WeylSequence &s, std::size_t j, std::size_t lo = 2) {
  if (j < lo || j > s.size())
    fail(ErrorCode::IndexOutOfRange, "j = " + std::to_string(j) + " outside [" +
                                         std::to_string(lo) + ", " +
                                         std::to_string(s.size()) + "]");
}

/// Merge entries j-1 and j (1-based).
inline WeylSequence contract(const WeylSequence &s, std::size_t j) {
  check_j(s, j);
  WeylSequence r{s.ctx, {}};
  for (std::size_t i = 1; i <= s.size(); ++i) {
    if (i == j - 1)
      r.w.push_back(s.ctx->weyl().multiply(s.w[i - 1], s.w[i]));
    else if (i != j)
      r.w.push_back(s.w[i - 1]);
  }
  return r;
}

/// (w_2, ..., w_r, phi(w_1))
inline WeylSequence shift(const WeylSequence &s) {
  WeylSequence r{s.ctx, {s.w.begin() + 1, s.w.end()}};
  r.w.push_back(s.ctx->phi(s.w.front()));
  return r;
}

/// d_j = (l(w_{j-1}) + l(w_j) - l(w_{j-1} w_j)) / 2
inline std::size_t defect(const WeylSequence &s, std::size_t j) {
  check_j(s, j);
  const auto &W = s.ctx->weyl();
  auto a = s.w[j - 2], b = s.w[j - 1];
  return (W.length(a) + W.length(b) - W.length(W.multiply(a, b))) / 2;
}

/// True iff theta((w_1 ... w_{j-2})(alpha^vee)) != 1 for every alpha in
/// Phi+(w_{j-1}, w_j); theta must live on the torus of the full product.
inline bool predicate_P(const WeylSequence &s, std::size_t j, const TorusCharacter &theta) {
  check_j(s, j);
  require_same(s.ctx, theta.context());
  if (theta.w() != s.product())
    fail(ErrorCode::MismatchedContext,
         "character does not live on the torus of the sequence product");
  const auto &W = s.ctx->weyl();
  const auto &rs = s.ctx->roots();
  WeylElement prefix = W.identity();
  for (std::size_t i = 1; i + 2 <= j; ++i)
    prefix = W.multiply(prefix, s.w[i - 1]);
  for (auto a : W.inversion_pair_set(s.w[j - 2], s.w[j - 1]))
    if (theta.value(W.matrix_y(prefix) * rs.coroot(a)) == 0)
      return false;
  return true;
}

/// Length conditions, in the usual order:
/// (1) l(w_{j-2} w_{j-1}) additive, (2) l(w_{j-1} w_j) additive,
/// (3) l(w_{j-2} w_{j-1}) = l(w_{j-2} w_{j-1} w_j) + l(w_j),
/// (4) l(w_{j-1} w_j) = l(w_{j-2}) + l(w_{j-2} w_{j-1} w_j).
inline std::array<bool, 4> transitivity_conditions(const WeylSequence &s, std::size_t j) {
  check_j(s, j, 3);
  const auto &W = s.ctx->weyl();
  auto a = s.w[j - 3], b = s.w[j - 2], c = s.w[j - 1];
  auto l = [&](WeylElement x) { return W.length(x); };
  auto ab = W.multiply(a, b), bc = W.multiply(b, c), abc = W.multiply(ab, c);
  return {l(ab) == l(a) + l(b), l(bc) == l(b) + l(c), l(ab) == l(abc) + l(c),
          l(bc) == l(a) + l(abc)};
}

// ------------------------------------------------------------ radicals

/// Sequence of radical subsets for one Levi subsystem. F acts on root sets
/// as Psi -> v phi(Psi), where v is the twist of the Levi's Frobenius
/// relative to the reference torus (identity for split Levis).
struct RadicalSequence {
  ContextPtr ctx;
  RootSet levi;
  std::vector<RootSet> psi;
  WeylElement twist{};

  RootSet frobenius(const RootSet &s) const {
    return ctx->weyl().act(twist, ctx->phi_roots(s));
  }
  std::size_t size() const { return psi.size(); }
  /// 1-based; Psi_{r+k} = F(Psi_k).
  RootSet at(std::size_t i) const {
    require(i >= 1, ErrorCode::IndexOutOfRange, "radical index must be >= 1");
    const std::size_t r = psi.size();
    RootSet x = psi.at((i - 1) % r);
    for (std::size_t k = 0; k < (i - 1) / r; ++k)
      x = frobenius(x);
    return x;
  }
};

inline RadicalSequence make_radical_sequence(const ContextPtr &ctx, RootSet levi,
                                             std::vector<RootSet> psi,
                                             WeylElement twist = {}) {
  const auto &W = ctx->weyl();
  RadicalSequence s{ctx, normalized(std::move(levi)), {}, twist};
  require(!psi.empty(), ErrorCode::InconsistentInput, "radical sequence is empty");
  require(is_levi_closed(ctx->roots(), s.levi), ErrorCode::InconsistentInput,
          "subsystem is not Levi-closed");
  require(s.frobenius(s.levi) == s.levi, ErrorCode::InconsistentInput,
          "Levi subsystem is not stable under the twisted Frobenius");
  for (auto &p : psi) {
    auto n = normalized(p);
    require(W.is_radical(s.levi, n), ErrorCode::InconsistentInput,
            "subset is not a radical of the Levi subsystem");
    s.psi.push_back(std::move(n));
  }
  return s;
}

/// Borel radicals Psi_i = w_1 ... w_{i-1} (Phi+) with twist w_1 ... w_r.
inline RadicalSequence borel_radical_sequence(const WeylSequence &s) {
  const auto &W = s.ctx->weyl();
  RadicalSequence r{s.ctx, {}, {}, s.product()};
  WeylElement prefix = W.identity();
  for (auto x : s.w) {
    r.psi.push_back(W.act(prefix, s.ctx->roots().positive_roots()));
    prefix = W.multiply(prefix, x);
  }
  return r;
}

struct RadicalDefect {
  long long c; // |P1 n P3| - |P1 n P2 n P3|
  long long b; // |P1| + |P1 n P3| - |P1 n P2| - |P2 n P3|
};

inline RadicalDefect radical_defect(const RootSet &p1, const RootSet &p2,
                                    const RootSet &p3) {
  if (p1.size() != p2.size() || p2.size() != p3.size())
    fail(ErrorCode::InconsistentInput, "radicals of different sizes");
  auto n = [](const RootSet &s) { return static_cast<long long>(s.size()); };
  auto i13 = set_intersection(p1, p3);
  RadicalDefect d;
  d.c = n(i13) - n(set_intersection(i13, p2));
  d.b = n(p1) + n(i13) - n(set_intersection(p1, p2)) - n(set_intersection(p2, p3));
  if (2 * d.c != d.b)
    fail(ErrorCode::InconsistentInput, "dimension formulas disagree");
  return d;
}

/// Product conditions on (V_1, V_2, V_3, V_4) = (Psi_{j-2}, ..., Psi_{j+1}):
/// (1) V_1 in V_4 V_2, (2) V_2 in V_1 V_3, (3) V_3 in V_2 V_4,
/// (4) V_4 in V_3 V_1; a product of radicals is modelled by the union of
/// their root sets.
inline std::array<bool, 4> product_conditions(const RootSet &v1, const RootSet &v2,
                                              const RootSet &v3, const RootSet &v4) {
  return {is_subset(v1, set_union(v4, v2)), is_subset(v2, set_union(v1, v3)),
          is_subset(v3, set_union(v2, v4)), is_subset(v4, set_union(v3, v1))};
}

inline std::array<bool, 4> transitivity_conditions(const RadicalSequence &s,
                                                   std::size_t j) {
  if (j < 3 || j > s.size())
    fail(ErrorCode::IndexOutOfRange, "j = " + std::to_string(j) + " outside [3, " +
                                         std::to_string(s.size()) + "]");
  return product_conditions(s.at(j - 2), s.at(j - 1), s.at(j), s.at(j + 1));
}

inline void require_in_levi_frame(const RadicalSequence &s, const TorusCharacter &theta) {
  require_same(s.ctx, theta.context());
  const auto &W = s.ctx->weyl();
  auto rel = W.multiply(W.inverse(s.twist), theta.w());
  if (!W.reflection_subgroup(s.levi)[rel.index])
    fail(ErrorCode::MismatchedContext,
         "character torus is not a maximal torus of the Levi's rational form");
}

/// Phi^vee(Psi_{j-1}) n Phi^vee(Psi_{j+1}) n Phi^vee(theta) in Phi^vee(Psi_j).
/// Coroot sets are indexed by their roots.
inline bool theod_condition(const RadicalSequence &s, std::size_t j,
                            const TorusCharacter &theta) {
  if (j < 2 || j > s.size())
    fail(ErrorCode::IndexOutOfRange, "j = " + std::to_string(j) + " outside [2, " +
                                         std::to_string(s.size()) + "]");
  require_in_levi_frame(s, theta);
  auto lhs = set_intersection(set_intersection(s.at(j - 1), s.at(j + 1)),
                              coroot_kernel(theta));
  return is_subset(lhs, s.at(j));
}

/// Both containments of the dual-centraliser condition for (Psi_1, Psi_2).
inline bool condition_C(const RadicalSequence &frame, const RootSet &psi1,
                        const RootSet &psi2, const TorusCharacter &theta) {
  require_in_levi_frame(frame, theta);
  const auto &W = frame.ctx->weyl();
  RootSet a = normalized(psi1), b = normalized(psi2);
  require(W.is_radical(frame.levi, a) && W.is_radical(frame.levi, b),
          ErrorCode::InconsistentInput, "subset is not a radical of the Levi subsystem");
  auto k = coroot_kernel(theta);
  auto fa = frame.frobenius(a), fb = frame.frobenius(b);
  bool first = is_subset(set_intersection(set_intersection(a, fa), k), b);
  bool second = is_subset(set_intersection(set_intersection(b, fb), k), fa);
  return first && second;
}

} // namespace dlcombi
