#pragma once

// Geometric and rational series of pairs (w, theta).

#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "frobenius.hpp"

namespace dlcombi {

/// A pair (T_w, theta) is just a character on a twisted torus.
using SeriesPair = TorusCharacter;

/// Roots alpha (both signs) with theta(alpha^vee) = 0.
inline RootSet coroot_kernel(const TorusCharacter &theta) {
  const auto &rs = theta.context()->roots();
  RootSet out;
  for (RootIndex a = 0; a < rs.size(); ++a)
    if (theta.value(rs.coroot(a)) == 0)
      out.push_back(a);
  return out;
}

struct ThetaWeylGroups {
  std::vector<bool> w_circ; // W°(T, theta), membership by element index
  std::vector<bool> w_full; // W(T, theta)

  static std::size_t count(const std::vector<bool> &m) {
    return static_cast<std::size_t>(std::count(m.begin(), m.end(), true));
  }
  std::size_t order_circ() const { return count(w_circ); }
  std::size_t order_full() const { return count(w_full); }
};

/// Stabiliser of theta^Y in W.
inline std::vector<bool> theta_stabilizer(const TorusCharacter &theta) {
  const auto &W = theta.context()->weyl();
  const auto s = theta.sigma();
  std::vector<bool> in(W.order(), false);
  for (auto v : W.elements())
    in[v.index] = s.act(W.matrix_x(v)) == s;
  return in;
}

inline ThetaWeylGroups weyl_groups_of_theta(const TorusCharacter &theta) {
  const auto &W = theta.context()->weyl();
  return {W.reflection_subgroup(coroot_kernel(theta)), theta_stabilizer(theta)};
}

namespace detail {

inline std::optional<WeylElement>
series_witness(const SeriesPair &p1, const SeriesPair &p2,
               const std::vector<bool> &group_of_p1) {
  require_same(p1.context(), p2.context());
  const auto &ctx = *p1.context();
  const auto &W = ctx.weyl();
  const auto s1 = p1.sigma(), s2 = p2.sigma();
  if (s1.den != s2.den)
    return std::nullopt;
  auto w1i = W.inverse(p1.w());
  for (auto x : W.elements()) {
    if (s1.act(W.matrix_x(x)) != s2)
      continue;
    auto c = W.multiply({W.inverse(x), p2.w(), ctx.phi(x), w1i});
    if (group_of_p1[c.index])
      return x;
  }
  return std::nullopt;
}

} // namespace detail

/// Witness x in W with theta_2^Y = x . theta_1^Y and
/// x^{-1} w_2 phi(x) w_1^{-1} in W°(T_1, theta_1).
inline std::optional<WeylElement> rational_witness(const SeriesPair &p1,
                                                   const SeriesPair &p2) {
  require_same(p1.context(), p2.context());
  return detail::series_witness(
      p1, p2, p1.context()->weyl().reflection_subgroup(coroot_kernel(p1)));
}

inline bool same_rational_series(const SeriesPair &p1, const SeriesPair &p2) {
  return rational_witness(p1, p2).has_value();
}

inline bool same_geometric_series(const SeriesPair &p1, const SeriesPair &p2) {
  require_same(p1.context(), p2.context());
  return detail::series_witness(p1, p2, theta_stabilizer(p1)).has_value();
}

inline bool subgroup_within_levi(const WeylGroup &W, const std::vector<bool> &h,
                                 const RootSet &levi) {
  auto wl = W.reflection_subgroup(levi);
  for (std::size_t k = 0; k < h.size(); ++k)
    if (h[k] && !wl[k])
      return false;
  return true;
}

inline bool is_regular(const SeriesPair &p, const RootSet &levi) {
  const auto &W = p.context()->weyl();
  return subgroup_within_levi(W, W.reflection_subgroup(coroot_kernel(p)), levi);
}

inline bool is_super_regular(const SeriesPair &p, const RootSet &levi) {
  return subgroup_within_levi(p.context()->weyl(), theta_stabilizer(p), levi);
}

/// Total order used for canonical representatives.
inline bool pair_less(const SeriesPair &a, const SeriesPair &b) {
  if (a.w() != b.w())
    return a.w() < b.w();
  return a.mu() < b.mu();
}

struct SeriesLabel {
  SeriesPair representative;
  std::vector<SeriesPair> members;
};

struct SeriesEnumeration {
  std::vector<SeriesLabel> rational;
  /// Geometric classes as lists of indices into `rational`.
  std::vector<std::vector<std::size_t>> geometric;
};

struct EnumerationOptions {
  unsigned threads = 1;               // 0 = hardware concurrency
  std::size_t max_pairs = 200000;
};

/// Thread count after applying the DLCOMBI_THREADS cap.
inline unsigned effective_threads(unsigned requested) {
  unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char *env = std::getenv("DLCOMBI_THREADS")) {
    long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1)
      n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return std::max(1u, n);
}

template <class F> void parallel_for(std::size_t n, unsigned threads, F &&f) {
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i)
      f(i);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr err;
  std::mutex m;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < n; i += threads)
          f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lk(m);
        if (!err)
          err = std::current_exception();
      }
    });
  for (auto &th : pool)
    th.join();
  if (err)
    std::rethrow_exception(err);
}

/// All pairs (w, theta) with w over F-class representatives, partitioned
/// into rational series; labels sorted by representative.
inline SeriesEnumeration enumerate_series(const ContextPtr &ctx,
                                          EnumerationOptions opt = {}) {
  const auto &W = ctx->weyl();
  std::vector<SeriesPair> pairs;
  for (auto &cls : f_conjugacy_classes(*ctx)) {
    auto t = make_torus(ctx, cls.front());
    if (t->order() + pairs.size() > opt.max_pairs)
      fail(ErrorCode::ScaleExceeded, "more than " + std::to_string(opt.max_pairs) +
                                         " pairs to enumerate");
    for (auto &c : all_characters(t))
      pairs.push_back(c);
  }
  const std::size_t n = pairs.size();
  const unsigned threads = effective_threads(opt.threads);

  // geometric orbit key: least W-translate of sigma
  std::vector<TorusPoint> key(n);
  std::vector<std::vector<bool>> wcirc(n);
  parallel_for(n, threads, [&](std::size_t i) {
    auto s = pairs[i].sigma();
    TorusPoint best = s;
    for (auto x : W.elements()) {
      auto t = s.act(W.matrix_x(x));
      if (t < best)
        best = t;
    }
    key[i] = best;
    wcirc[i] = W.reflection_subgroup(coroot_kernel(pairs[i]));
  });

  std::map<TorusPoint, std::vector<std::size_t>> by_key;
  for (std::size_t i = 0; i < n; ++i)
    by_key[key[i]].push_back(i);

  std::vector<std::vector<std::size_t>> groups;
  for (auto &[k, v] : by_key)
    groups.push_back(v);
  std::vector<std::vector<std::vector<std::size_t>>> classes(groups.size());
  parallel_for(groups.size(), threads, [&](std::size_t g) {
    auto &out = classes[g];
    for (auto i : groups[g]) {
      bool placed = false;
      for (auto &c : out)
        if (detail::series_witness(pairs[c.front()], pairs[i], wcirc[c.front()])) {
          c.push_back(i);
          placed = true;
          break;
        }
      if (!placed)
        out.push_back({i});
    }
  });

  SeriesEnumeration res;
  struct Tmp {
    std::vector<std::size_t> idx;
    std::size_t geo;
  };
  std::vector<Tmp> all;
  for (std::size_t g = 0; g < classes.size(); ++g)
    for (auto &c : classes[g]) {
      auto idx = c;
      std::sort(idx.begin(), idx.end(),
                [&](auto a, auto b) { return pair_less(pairs[a], pairs[b]); });
      all.push_back({idx, g});
    }
  std::sort(all.begin(), all.end(), [&](const Tmp &a, const Tmp &b) {
    return pair_less(pairs[a.idx.front()], pairs[b.idx.front()]);
  });
  std::map<std::size_t, std::size_t> geo_slot;
  for (std::size_t k = 0; k < all.size(); ++k) {
    SeriesLabel lab{pairs[all[k].idx.front()], {}};
    for (auto i : all[k].idx)
      lab.members.push_back(pairs[i]);
    res.rational.push_back(std::move(lab));
    auto [it, fresh] = geo_slot.emplace(all[k].geo, res.geometric.size());
    if (fresh)
      res.geometric.emplace_back();
    res.geometric[it->second].push_back(k);
  }
  return res;
}

/// Index of the rational series containing p within an enumeration.
inline std::optional<std::size_t> find_series(const SeriesEnumeration &e,
                                              const SeriesPair &p) {
  for (std::size_t k = 0; k < e.rational.size(); ++k)
    if (same_rational_series(e.rational[k].representative, p))
      return k;
  return std::nullopt;
}

} // namespace dlcombi
