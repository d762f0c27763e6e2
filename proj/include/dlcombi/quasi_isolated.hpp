#pragma once

// Minimal Levi of a character, component group W(T,theta)/W°(T,theta) and
// the hypothesis checks attached to a Jordan decomposition.

#include "series.hpp"

namespace dlcombi {

/// Roots whose coroots lie in the Q-span of Phi^vee(theta).
inline RootSet minimal_levi(const TorusCharacter &theta) {
  return coroot_span_closure(theta.context()->roots(), coroot_kernel(theta));
}

struct ComponentGroup {
  std::vector<WeylElement> coset_reps; // least element of each coset x W°
  std::size_t order = 1;
  bool abelian = true;
  bool order_prime_to_ell = true;
  bool theta_order_prime_to_ell = true;
};

namespace detail {

/// Least element of x H for a subgroup mask H.
inline WeylElement coset_min(const WeylGroup &W, WeylElement x, const std::vector<bool> &h) {
  WeylElement best = x;
  for (std::size_t k = 0; k < h.size(); ++k)
    if (h[k]) {
      auto y = W.multiply(x, W.element(k));
      if (y < best)
        best = y;
    }
  return best;
}

} // namespace detail

inline ComponentGroup component_group(const TorusCharacter &theta, const Integer &ell) {
  const auto &W = theta.context()->weyl();
  auto g = weyl_groups_of_theta(theta);
  ComponentGroup c;
  for (auto x : W.elements())
    if (g.w_full[x.index] && detail::coset_min(W, x, g.w_circ) == x)
      c.coset_reps.push_back(x);
  c.order = c.coset_reps.size();
  for (auto a : c.coset_reps)
    for (auto b : c.coset_reps) {
      auto comm = W.multiply({a, b, W.inverse(a), W.inverse(b)});
      if (!g.w_circ[comm.index])
        c.abelian = false;
    }
  c.order_prime_to_ell = igcd(Integer(c.order), ell) == 1;
  c.theta_order_prime_to_ell = igcd(theta.order(), ell) == 1;
  return c;
}

/// Cosets x W° in W(T,theta)/W° fixed by x -> w phi(x) w^{-1}.
inline std::vector<WeylElement> relative_quotient(const TorusCharacter &theta) {
  const auto &ctx = *theta.context();
  const auto &W = ctx.weyl();
  auto g = weyl_groups_of_theta(theta);
  auto w = theta.w();
  std::vector<WeylElement> out;
  for (auto x : W.elements()) {
    if (!g.w_full[x.index] || detail::coset_min(W, x, g.w_circ) != x)
      continue;
    auto c = W.multiply({W.inverse(x), w, ctx.phi(x), W.inverse(w)});
    if (g.w_circ[c.index])
      out.push_back(x);
  }
  return out;
}

struct JordanReport {
  Integer ell;
  Integer theta_order;
  RootSet levi;
  bool levi_is_whole = false;
  ComponentGroup component;
  std::vector<WeylElement> relative;
  bool regular = false;
  bool super_regular = false;
  std::size_t w_circ_order = 0, w_full_order = 0;
  bool hypotheses_hold = false;
  bool weyl_level = true; // everything is computed inside W
};

inline JordanReport jordan_report(const TorusCharacter &theta, const Integer &ell) {
  JordanReport r;
  r.ell = ell;
  r.theta_order = theta.order();
  r.levi = minimal_levi(theta);
  r.levi_is_whole = r.levi.size() == theta.context()->roots().size();
  r.component = component_group(theta, ell);
  r.relative = relative_quotient(theta);
  r.regular = is_regular(theta, r.levi);
  r.super_regular = is_super_regular(theta, r.levi);
  auto g = weyl_groups_of_theta(theta);
  r.w_circ_order = g.order_circ();
  r.w_full_order = g.order_full();
  r.hypotheses_hold = r.component.theta_order_prime_to_ell && r.regular &&
                      r.component.abelian && r.component.order_prime_to_ell;
  return r;
}

} // namespace dlcombi
