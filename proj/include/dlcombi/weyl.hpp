#pragma once

// Finite Weyl group of a based root datum, enumerated in full.

#include <compare>
#include <cstdint>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "root_datum.hpp"

namespace dlcombi {

/// Handle to an element of a WeylGroup. Indices follow the canonical order:
/// by length, then by lexicographically least reduced word.
struct WeylElement {
  std::uint32_t index = 0;
  auto operator<=>(const WeylElement &) const = default;
};

using Word = std::vector<std::size_t>; // 0-based simple reflection indices
using RootPerm = std::vector<std::uint16_t>;

struct RootPermHash {
  std::size_t operator()(const RootPerm &p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p)
      h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

class WeylGroup {
public:
  static constexpr std::size_t kDefaultCap = 10000;
  static constexpr std::size_t kTableLimit = 1200;

  WeylGroup(const BasedRootDatum &d, const RootSystem &rs,
            std::size_t cap = kDefaultCap)
      : rs_(&rs), rank_(d.rank) {
    const std::size_t s = rs.semisimple_rank(), N = rs.size();
    require(N < 65535, ErrorCode::ScaleExceeded, "too many roots");
    // simple reflections as root permutations and lattice matrices
    for (std::size_t i = 0; i < s; ++i) {
      RootPerm p(N);
      for (RootIndex a = 0; a < N; ++a) {
        auto c = rs.coords(a);
        long long k = 0;
        for (std::size_t j = 0; j < s; ++j)
          k += c[j] * to_ll(dot(d.simple_roots[j], d.simple_coroots[i]));
        c[i] -= k;
        auto b = rs.find_coords(c);
        require(b.has_value(), ErrorCode::NonFiniteType,
                "simple reflection does not permute the roots");
        p[a] = static_cast<std::uint16_t>(*b);
      }
      simple_perm_.push_back(std::move(p));
      IntMatrix sx = IntMatrix::identity(rank_), sy = IntMatrix::identity(rank_);
      for (std::size_t r = 0; r < rank_; ++r)
        for (std::size_t c = 0; c < rank_; ++c) {
          sx(r, c) -= d.simple_roots[i][r] * d.simple_coroots[i][c];
          sy(r, c) -= d.simple_coroots[i][r] * d.simple_roots[i][c];
        }
      simple_x_.push_back(std::move(sx));
      simple_y_.push_back(std::move(sy));
    }

    // breadth-first enumeration by right multiplication
    RootPerm id(N);
    std::iota(id.begin(), id.end(), 0);
    std::vector<RootPerm> perms{id};
    std::unordered_map<RootPerm, std::uint32_t, RootPermHash> seen{{id, 0}};
    for (std::size_t head = 0; head < perms.size(); ++head)
      for (std::size_t i = 0; i < s; ++i) {
        RootPerm q = compose(perms[head], simple_perm_[i]);
        if (seen.emplace(q, static_cast<std::uint32_t>(perms.size())).second) {
          perms.push_back(std::move(q));
          if (perms.size() > cap)
            fail(ErrorCode::ScaleExceeded, "Weyl group larger than cap " +
                                               std::to_string(cap));
        }
      }

    // lengths and lexicographically least reduced words
    const std::size_t n = perms.size();
    std::vector<std::size_t> len(n);
    for (std::size_t k = 0; k < n; ++k)
      for (RootIndex a = 0; a < rs.num_positive(); ++a)
        if (!rs.is_positive(perms[k][a]))
          ++len[k];
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](auto a, auto b) { return len[a] < len[b]; });
    std::vector<Word> words(n);
    std::vector<std::uint32_t> parent(n, 0);
    std::vector<std::size_t> first(n, 0);
    for (auto k : order) {
      if (len[k] == 0)
        continue;
      RootPerm inv = invert(perms[k]);
      for (std::size_t i = 0; i < s; ++i)
        if (!rs.is_positive(inv[rs.simple(i)])) { // left descent
          RootPerm rest = compose(simple_perm_[i], perms[k]);
          auto j = seen.at(rest);
          words[k] = Word{i};
          words[k].insert(words[k].end(), words[j].begin(), words[j].end());
          break;
        }
    }
    std::sort(order.begin(), order.end(), [&](auto a, auto b) {
      if (len[a] != len[b])
        return len[a] < len[b];
      return words[a] < words[b];
    });

    perm_.reserve(n);
    for (auto k : order) {
      perm_.push_back(perms[k]);
      length_.push_back(len[k]);
      word_.push_back(words[k]);
    }
    for (std::uint32_t k = 0; k < n; ++k)
      lookup_.emplace(perm_[k], k);
    for (std::uint32_t k = 0; k < n; ++k) {
      if (word_[k].empty()) {
        mx_.push_back(IntMatrix::identity(rank_));
        my_.push_back(IntMatrix::identity(rank_));
        continue;
      }
      auto i = word_[k].front();
      auto rest = lookup_.at(compose(simple_perm_[i], perm_[k]));
      mx_.push_back(simple_x_[i] * mx_[rest]);
      my_.push_back(simple_y_[i] * my_[rest]);
    }
    inverse_.resize(n);
    for (std::uint32_t k = 0; k < n; ++k)
      inverse_[k] = lookup_.at(invert(perm_[k]));
    if (n <= kTableLimit) {
      table_.resize(n * n);
      for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
          table_[a * n + b] = lookup_.at(compose(perm_[a], perm_[b]));
    }
  }

  std::size_t order() const { return perm_.size(); }
  std::size_t rank() const { return simple_perm_.size(); }
  const RootSystem &roots() const { return *rs_; }

  WeylElement identity() const { return {0}; }
  WeylElement element(std::size_t k) const {
    require(k < order(), ErrorCode::IndexOutOfRange,
            "Weyl element index " + std::to_string(k) + " out of range");
    return {static_cast<std::uint32_t>(k)};
  }
  std::vector<WeylElement> elements() const {
    std::vector<WeylElement> v(order());
    for (std::size_t k = 0; k < v.size(); ++k)
      v[k].index = static_cast<std::uint32_t>(k);
    return v;
  }
  WeylElement simple(std::size_t i) const {
    require(i < rank(), ErrorCode::IndexOutOfRange,
            "simple reflection " + std::to_string(i + 1) + " out of range");
    return WeylElement{lookup_.at(simple_perm_[i])};
  }

  WeylElement multiply(WeylElement a, WeylElement b) const {
    if (!table_.empty())
      return {table_[a.index * order() + b.index]};
    return {lookup_.at(compose(perm_[a.index], perm_[b.index]))};
  }
  WeylElement multiply(std::initializer_list<WeylElement> xs) const {
    WeylElement r = identity();
    for (auto x : xs)
      r = multiply(r, x);
    return r;
  }
  WeylElement inverse(WeylElement a) const { return {inverse_[a.index]}; }

  WeylElement from_word(const Word &w) const {
    WeylElement r = identity();
    for (auto i : w)
      r = multiply(r, simple(i));
    return r;
  }
  std::optional<WeylElement> from_perm(const RootPerm &p) const {
    auto it = lookup_.find(p);
    if (it == lookup_.end())
      return std::nullopt;
    return WeylElement{it->second};
  }

  std::size_t length(WeylElement a) const { return length_[a.index]; }
  const Word &word(WeylElement a) const { return word_[a.index]; }
  const RootPerm &perm(WeylElement a) const { return perm_[a.index]; }
  const IntMatrix &matrix_x(WeylElement a) const { return mx_[a.index]; }
  const IntMatrix &matrix_y(WeylElement a) const { return my_[a.index]; }

  RootIndex act(WeylElement w, RootIndex a) const { return perm_[w.index][a]; }
  RootSet act(WeylElement w, const RootSet &s) const {
    RootSet r;
    r.reserve(s.size());
    for (auto a : s)
      r.push_back(act(w, a));
    return normalized(std::move(r));
  }

  /// The reflection s_alpha.
  WeylElement reflection(RootIndex a) const {
    const auto &rs = *rs_;
    RootPerm p(rs.size());
    for (RootIndex b = 0; b < rs.size(); ++b) {
      Integer k = dot(rs.root(b), rs.coroot(a));
      IntVector v = rs.root(b) - k * rs.root(a);
      auto c = rs.find_root(v);
      require(c.has_value(), ErrorCode::InconsistentInput, "bad reflection");
      p[b] = static_cast<std::uint16_t>(*c);
    }
    return WeylElement{lookup_.at(p)};
  }

  /// Positive roots sent to negative roots by w^{-1}.
  RootSet inversion_set(WeylElement w) const {
    RootSet r;
    auto wi = inverse(w);
    for (RootIndex a = 0; a < rs_->num_positive(); ++a)
      if (!rs_->is_positive(act(wi, a)))
        r.push_back(a);
    return r;
  }

  /// { alpha > 0 : x^{-1} alpha < 0, (xy)^{-1} alpha > 0 }
  RootSet inversion_pair_set(WeylElement x, WeylElement y) const {
    auto xi = inverse(x), xyi = inverse(multiply(x, y));
    RootSet r;
    for (RootIndex a = 0; a < rs_->num_positive(); ++a)
      if (!rs_->is_positive(act(xi, a)) && rs_->is_positive(act(xyi, a)))
        r.push_back(a);
    return r;
  }

  /// Subgroup generated by the reflections in the given roots, as a
  /// membership mask indexed by element.
  std::vector<bool> reflection_subgroup(const RootSet &gens) const {
    std::vector<WeylElement> g;
    for (auto a : gens)
      g.push_back(reflection(a));
    return generated_subgroup(g);
  }

  std::vector<bool> generated_subgroup(const std::vector<WeylElement> &gens) const {
    std::vector<bool> in(order(), false);
    std::vector<WeylElement> queue{identity()};
    in[0] = true;
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (auto s : gens) {
        auto x = multiply(queue[h], s);
        if (!in[x.index]) {
          in[x.index] = true;
          queue.push_back(x);
        }
      }
    return in;
  }

  /// Radical subsets of a Levi subsystem: Psi = w(Phi+) minus Phi_L for w in
  /// W, kept when closed, Phi_L-stable and Psi u -Psi = Phi minus Phi_L.
  std::vector<RootSet> radical_subsets(const RootSet &levi) const {
    const auto &rs = *rs_;
    RootSet L = normalized(levi);
    require(is_levi_closed(rs, L), ErrorCode::InconsistentInput,
            "subsystem is not Levi-closed");
    RootSet rest = set_difference(rs.all_roots(), L);
    std::vector<RootSet> out;
    for (auto w : elements()) {
      RootSet psi = set_difference(act(w, rs.positive_roots()), L);
      if (std::find(out.begin(), out.end(), psi) != out.end())
        continue;
      if (is_radical(L, psi, rest))
        out.push_back(std::move(psi));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_radical(const RootSet &L, const RootSet &psi) const {
    return is_radical(L, psi, set_difference(rs_->all_roots(), L));
  }

  /// All Levi subsystems w(Phi_J).
  std::vector<RootSet> levi_subsystems() const {
    const auto &rs = *rs_;
    std::vector<RootSet> out;
    for (unsigned mask = 0; mask < (1u << rank()); ++mask) {
      RootSet J;
      for (std::size_t i = 0; i < rank(); ++i)
        if (mask >> i & 1)
          J.push_back(rs.simple(i));
      RootSet L = levi_closure(rs, J);
      for (auto w : elements()) {
        RootSet wl = act(w, L);
        if (std::find(out.begin(), out.end(), wl) == out.end())
          out.push_back(std::move(wl));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Standard Levi Phi_J for simple reflection indices J.
  RootSet standard_levi(const std::vector<std::size_t> &J) const {
    RootSet s;
    for (auto i : J) {
      require(i < rank(), ErrorCode::IndexOutOfRange,
              "simple root " + std::to_string(i + 1) + " out of range");
      s.push_back(rs_->simple(i));
    }
    return levi_closure(*rs_, s);
  }

  static RootPerm compose(const RootPerm &a, const RootPerm &b) {
    RootPerm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      r[i] = a[b[i]];
    return r;
  }
  static RootPerm invert(const RootPerm &a) {
    RootPerm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      r[a[i]] = static_cast<std::uint16_t>(i);
    return r;
  }

private:
  bool is_radical(const RootSet &L, const RootSet &psi, const RootSet &rest) const {
    const auto &rs = *rs_;
    if (set_union(psi, negate(rs, psi)) != rest || !set_intersection(psi, negate(rs, psi)).empty())
      return false;
    if (!is_closed(rs, psi))
      return false;
    for (auto a : L)
      for (auto b : psi)
        if (auto c = rs.sum(a, b); c && !contains(psi, *c))
          return false;
    return true;
  }

  const RootSystem *rs_;
  std::size_t rank_;
  std::vector<RootPerm> simple_perm_;
  std::vector<IntMatrix> simple_x_, simple_y_;
  std::vector<RootPerm> perm_;
  std::vector<std::size_t> length_;
  std::vector<Word> word_;
  std::vector<IntMatrix> mx_, my_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> table_;
  std::unordered_map<RootPerm, std::uint32_t, RootPermHash> lookup_;
};

} // namespace dlcombi
