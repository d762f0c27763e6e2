#pragma once

// Based root data, Cartan validation, presets and root system generation.

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "error.hpp"
#include "lattice.hpp"

namespace dlcombi {

constexpr std::size_t kMaxRank = 8;

/// Throws InvalidCartan unless c is a Cartan matrix of finite type.
inline void validate_cartan(const IntMatrix &c) {
  require(c.is_square(), ErrorCode::InvalidCartan, "Cartan matrix must be square");
  const std::size_t n = c.rows();
  auto at = [](std::size_t i, std::size_t j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (c(i, i) != 2)
      fail(ErrorCode::InvalidCartan, "diagonal entry " + at(i, i) + " is " +
                                         c(i, i).str() + ", expected 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j)
        continue;
      if (c(i, j) > 0)
        fail(ErrorCode::InvalidCartan,
             "off-diagonal entry " + at(i, j) + " is positive");
      if ((c(i, j) == 0) != (c(j, i) == 0))
        fail(ErrorCode::InvalidCartan, "entry " + at(i, j) + " is zero but " +
                                           at(j, i) + " is not");
    }
  }
  if (n > kMaxRank)
    fail(ErrorCode::ScaleExceeded, "semisimple rank " + std::to_string(n) +
                                       " exceeds cap " + std::to_string(kMaxRank));
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1)
        idx.push_back(i);
    if (principal_minor(c, idx) <= 0) {
      std::string s;
      for (auto i : idx)
        s += (s.empty() ? "" : ",") + std::to_string(i + 1);
      fail(ErrorCode::InvalidCartan,
           "principal minor on {" + s + "} is not positive (not of finite type)");
    }
  }
}

struct BasedRootDatum {
  std::string name;
  std::size_t rank = 0;                // rank of X (= rank of Y)
  std::vector<IntVector> simple_roots; // in X
  std::vector<IntVector> simple_coroots;

  std::size_t semisimple_rank() const { return simple_roots.size(); }

  /// cartan(i, j) = <alpha_j, alpha_i^vee>
  IntMatrix cartan() const {
    const std::size_t s = semisimple_rank();
    IntMatrix c(s, s);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j)
        c(i, j) = dot(simple_roots[j], simple_coroots[i]);
    return c;
  }

  bool operator==(const BasedRootDatum &o) const {
    return rank == o.rank && simple_roots == o.simple_roots &&
           simple_coroots == o.simple_coroots;
  }
};

inline BasedRootDatum make_datum(std::vector<IntVector> roots,
                                 std::vector<IntVector> coroots,
                                 std::string name = "custom") {
  require(roots.size() == coroots.size(), ErrorCode::InconsistentInput,
          "need as many simple coroots as simple roots");
  BasedRootDatum d;
  d.name = std::move(name);
  if (!roots.empty())
    d.rank = roots.front().size();
  else if (!coroots.empty())
    d.rank = coroots.front().size();
  for (auto &v : roots)
    require(v.size() == d.rank, ErrorCode::InconsistentInput,
            "simple roots have inconsistent length");
  for (auto &v : coroots)
    require(v.size() == d.rank, ErrorCode::InconsistentInput,
            "simple coroots have inconsistent length");
  d.simple_roots = std::move(roots);
  d.simple_coroots = std::move(coroots);
  validate_cartan(d.cartan());
  return d;
}

/// Torus of rank n, no roots.
inline BasedRootDatum torus_datum(std::size_t n, std::string name = "torus") {
  BasedRootDatum d;
  d.name = std::move(name);
  d.rank = n;
  return d;
}

/// Y spanned by simple coroots e_i; alpha_j is column j of the Cartan matrix.
inline BasedRootDatum simply_connected(const IntMatrix &c, std::string name) {
  validate_cartan(c);
  const std::size_t n = c.rows();
  std::vector<IntVector> r, cr;
  for (std::size_t j = 0; j < n; ++j) {
    r.push_back(c.column(j));
    IntVector e(n);
    e[j] = 1;
    cr.push_back(e);
  }
  return make_datum(r, cr, std::move(name));
}

/// X spanned by simple roots e_j; alpha_i^vee is row i of the Cartan matrix.
inline BasedRootDatum adjoint(const IntMatrix &c, std::string name) {
  validate_cartan(c);
  const std::size_t n = c.rows();
  std::vector<IntVector> r, cr;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n);
    e[i] = 1;
    r.push_back(e);
    cr.push_back(c.row(i));
  }
  return make_datum(r, cr, std::move(name));
}

inline BasedRootDatum general_linear(std::size_t n) {
  require(n >= 1, ErrorCode::InconsistentInput, "GL_n needs n >= 1");
  std::vector<IntVector> r;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    IntVector v(n);
    v[i] = 1;
    v[i + 1] = -1;
    r.push_back(v);
  }
  if (r.empty()) {
    auto d = torus_datum(1, "GL1");
    return d;
  }
  return make_datum(r, r, "GL" + std::to_string(n));
}

/// Cartan matrix of a simple type, Kac convention (row i holds the coroot).
inline IntMatrix cartan_of_type(char type, std::size_t n) {
  IntMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    c(i, i) = 2;
    if (i + 1 < n) {
      c(i, i + 1) = -1;
      c(i + 1, i) = -1;
    }
  }
  switch (type) {
  case 'A':
    break;
  case 'B':
    require(n >= 2, ErrorCode::InconsistentInput, "B_n needs n >= 2");
    c(n - 1, n - 2) = -2;
    break;
  case 'C':
    require(n >= 2, ErrorCode::InconsistentInput, "C_n needs n >= 2");
    c(n - 2, n - 1) = -2;
    break;
  case 'D':
    require(n >= 4, ErrorCode::InconsistentInput, "D_n needs n >= 4");
    c(n - 2, n - 1) = 0;
    c(n - 1, n - 2) = 0;
    c(n - 3, n - 1) = -1;
    c(n - 1, n - 3) = -1;
    break;
  case 'G':
    require(n == 2, ErrorCode::InconsistentInput, "G only in rank 2");
    c(1, 0) = -3;
    break;
  case 'F':
    require(n == 4, ErrorCode::InconsistentInput, "F only in rank 4");
    c(2, 1) = -2;
    break;
  default:
    fail(ErrorCode::InconsistentInput, std::string("unknown Cartan type ") + type);
  }
  return c;
}

/// Direct sum of root data.
inline BasedRootDatum direct_sum(const std::vector<BasedRootDatum> &parts,
                                 std::string name) {
  std::size_t n = 0;
  for (auto &p : parts)
    n += p.rank;
  std::vector<IntVector> r, cr;
  std::size_t off = 0;
  for (auto &p : parts) {
    for (std::size_t i = 0; i < p.semisimple_rank(); ++i) {
      IntVector a(n), b(n);
      for (std::size_t k = 0; k < p.rank; ++k) {
        a[off + k] = p.simple_roots[i][k];
        b[off + k] = p.simple_coroots[i][k];
      }
      r.push_back(a);
      cr.push_back(b);
    }
    off += p.rank;
  }
  if (r.empty())
    return torus_datum(n, std::move(name));
  return make_datum(r, cr, std::move(name));
}

/// Named presets: A1sc, A1ad, A<n>sc/ad, B<n>, C<n>, D<n>, G2, F4 (simply
/// connected unless suffixed "ad"), GL<n>, SL2, PGL2, and products joined
/// by 'x' such as "A1scxA1sc".
inline BasedRootDatum preset(const std::string &name) {
  if (name.find('x') != std::string::npos) {
    std::vector<BasedRootDatum> parts;
    std::size_t start = 0;
    for (;;) {
      auto pos = name.find('x', start);
      parts.push_back(preset(name.substr(start, pos - start)));
      if (pos == std::string::npos)
        break;
      start = pos + 1;
    }
    return direct_sum(parts, name);
  }
  if (name == "SL2")
    return preset("A1sc");
  if (name == "PGL2")
    return preset("A1ad");
  auto bad = [&]() -> BasedRootDatum {
    fail(ErrorCode::ValidationError, "unknown datum preset '" + name + "'");
  };
  if (name.rfind("GL", 0) == 0) {
    auto rest = name.substr(2);
    if (rest.empty() || !std::all_of(rest.begin(), rest.end(), ::isdigit))
      return bad();
    std::size_t n = std::stoul(rest);
    if (n == 0 || n > kMaxRank + 1)
      return bad();
    return general_linear(n);
  }
  if (name.size() < 2 || std::string("ABCDGF").find(name[0]) == std::string::npos)
    return bad();
  std::size_t i = 1;
  while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i])))
    ++i;
  if (i == 1)
    return bad();
  std::size_t n = std::stoul(name.substr(1, i - 1));
  std::string suffix = name.substr(i);
  if (suffix != "" && suffix != "sc" && suffix != "ad")
    return bad();
  if (n == 0 || n > kMaxRank)
    return bad();
  IntMatrix c;
  try {
    c = cartan_of_type(name[0], n);
  } catch (const Error &) {
    return bad();
  }
  return suffix == "ad" ? adjoint(c, name) : simply_connected(c, name);
}

// ------------------------------------------------------------ root system

using RootIndex = std::size_t;
using RootSet = std::vector<RootIndex>; // sorted

/// All roots of a based root datum. Positive roots come first, ordered by
/// height and then by simple-root coordinates (descending lex); root
/// num_positive + k is the negative of root k.
class RootSystem {
public:
  static constexpr std::size_t kMaxRoots = 512;

  explicit RootSystem(const BasedRootDatum &d) : rank_(d.rank) {
    const std::size_t s = d.semisimple_rank();
    const IntMatrix c = d.cartan();
    std::vector<std::vector<long long>> cc(s, std::vector<long long>(s));
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j)
        cc[i][j] = to_ll(c(i, j));

    using Coords = std::vector<long long>;
    std::map<Coords, Coords> found; // root coords -> coroot coords
    std::vector<std::pair<Coords, Coords>> queue;
    for (std::size_t i = 0; i < s; ++i) {
      Coords e(s);
      e[i] = 1;
      found.emplace(e, e);
      queue.emplace_back(e, e);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto [rc, dc] = queue[head];
      for (std::size_t i = 0; i < s; ++i) {
        long long a = 0, b = 0;
        for (std::size_t j = 0; j < s; ++j) {
          a += rc[j] * cc[i][j];
          b += dc[j] * cc[j][i];
        }
        Coords r2 = rc, d2 = dc;
        r2[i] -= a;
        d2[i] -= b;
        if (found.emplace(r2, d2).second) {
          queue.emplace_back(r2, d2);
          if (queue.size() > kMaxRoots)
            fail(ErrorCode::NonFiniteType,
                 "root closure exceeded " + std::to_string(kMaxRoots) + " roots");
        }
      }
    }

    std::vector<std::pair<Coords, Coords>> pos;
    for (auto &[rc, dc] : found) {
      bool p = std::all_of(rc.begin(), rc.end(), [](long long x) { return x >= 0; });
      bool n = std::all_of(rc.begin(), rc.end(), [](long long x) { return x <= 0; });
      if (!p && !n)
        fail(ErrorCode::NonFiniteType, "root with mixed-sign coordinates");
      if (p)
        pos.emplace_back(rc, dc);
    }
    auto height = [](const Coords &v) {
      long long h = 0;
      for (auto x : v)
        h += x;
      return h;
    };
    std::sort(pos.begin(), pos.end(), [&](const auto &a, const auto &b) {
      long long ha = height(a.first), hb = height(b.first);
      if (ha != hb)
        return ha < hb;
      return a.first > b.first;
    });
    npos_ = pos.size();
    auto push = [&](const Coords &rc, const Coords &dc) {
      IntVector r(rank_), cr(rank_);
      for (std::size_t j = 0; j < s; ++j) {
        if (rc[j])
          for (std::size_t k = 0; k < rank_; ++k)
            r[k] += rc[j] * d.simple_roots[j][k];
        if (dc[j])
          for (std::size_t k = 0; k < rank_; ++k)
            cr[k] += dc[j] * d.simple_coroots[j][k];
      }
      index_.emplace(rc, coords_.size());
      coords_.push_back(rc);
      roots_.push_back(std::move(r));
      coroots_.push_back(std::move(cr));
    };
    for (auto &[rc, dc] : pos)
      push(rc, dc);
    for (auto &[rc, dc] : pos) {
      Coords nr = rc, nd = dc;
      for (auto &x : nr)
        x = -x;
      for (auto &x : nd)
        x = -x;
      push(nr, nd);
    }
    simple_.resize(s);
    for (std::size_t i = 0; i < s; ++i)
      simple_[i] = i; // simple roots have height 1 and sort first in order
  }

  std::size_t lattice_rank() const { return rank_; }
  std::size_t size() const { return roots_.size(); }
  std::size_t num_positive() const { return npos_; }
  std::size_t semisimple_rank() const { return simple_.size(); }
  bool is_positive(RootIndex a) const { return a < npos_; }
  RootIndex negative(RootIndex a) const { return a < npos_ ? a + npos_ : a - npos_; }
  RootIndex simple(std::size_t i) const { return simple_.at(i); }
  bool is_simple(RootIndex a) const { return a < simple_.size(); }

  const IntVector &root(RootIndex a) const { return roots_.at(a); }
  const IntVector &coroot(RootIndex a) const { return coroots_.at(a); }
  const std::vector<long long> &coords(RootIndex a) const { return coords_.at(a); }
  const std::vector<IntVector> &roots() const { return roots_; }
  const std::vector<IntVector> &coroots() const { return coroots_; }

  long long height(RootIndex a) const {
    long long h = 0;
    for (auto x : coords_[a])
      h += x;
    return h;
  }

  std::optional<RootIndex> find_coords(const std::vector<long long> &c) const {
    auto it = index_.find(c);
    if (it == index_.end())
      return std::nullopt;
    return it->second;
  }
  /// Root index of alpha + beta, if that is a root.
  std::optional<RootIndex> sum(RootIndex a, RootIndex b) const {
    auto c = coords_[a];
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] += coords_[b][i];
    return find_coords(c);
  }
  std::optional<RootIndex> find_root(const IntVector &x) const {
    for (RootIndex a = 0; a < roots_.size(); ++a)
      if (roots_[a] == x)
        return a;
    return std::nullopt;
  }
  std::optional<RootIndex> find_coroot(const IntVector &y) const {
    for (RootIndex a = 0; a < coroots_.size(); ++a)
      if (coroots_[a] == y)
        return a;
    return std::nullopt;
  }

  RootSet positive_roots() const {
    RootSet r(npos_);
    for (std::size_t i = 0; i < npos_; ++i)
      r[i] = i;
    return r;
  }
  RootSet all_roots() const {
    RootSet r(size());
    for (std::size_t i = 0; i < size(); ++i)
      r[i] = i;
    return r;
  }

private:
  std::size_t rank_;
  std::size_t npos_ = 0;
  std::vector<RootIndex> simple_;
  std::vector<std::vector<long long>> coords_;
  std::map<std::vector<long long>, RootIndex> index_;
  std::vector<IntVector> roots_, coroots_;
};

// -------------------------------------------------------- root set algebra

inline RootSet set_union(const RootSet &a, const RootSet &b) {
  RootSet r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}
inline RootSet set_intersection(const RootSet &a, const RootSet &b) {
  RootSet r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(r));
  return r;
}
inline RootSet set_difference(const RootSet &a, const RootSet &b) {
  RootSet r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}
inline bool is_subset(const RootSet &a, const RootSet &b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}
inline bool contains(const RootSet &a, RootIndex x) {
  return std::binary_search(a.begin(), a.end(), x);
}
inline RootSet normalized(RootSet a) {
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

inline RootSet negate(const RootSystem &rs, const RootSet &a) {
  RootSet r;
  for (auto x : a)
    r.push_back(rs.negative(x));
  return normalized(std::move(r));
}

/// Closed: alpha, beta in S and alpha + beta a root imply alpha + beta in S.
inline bool is_closed(const RootSystem &rs, const RootSet &s) {
  for (auto a : s)
    for (auto b : s)
      if (auto c = rs.sum(a, b); c && !contains(s, *c))
        return false;
  return true;
}

/// Smallest closed subset containing s.
inline RootSet closure(const RootSystem &rs, RootSet s) {
  s = normalized(std::move(s));
  for (bool grew = true; grew;) {
    grew = false;
    RootSet add;
    for (auto a : s)
      for (auto b : s)
        if (auto c = rs.sum(a, b); c && !contains(s, *c))
          add.push_back(*c);
    if (!add.empty()) {
      s = set_union(s, normalized(add));
      grew = true;
    }
  }
  return s;
}

/// Roots in the Q-span of s.
inline RootSet levi_closure(const RootSystem &rs, const RootSet &s) {
  std::vector<IntVector> gens;
  const std::size_t dim = rs.semisimple_rank();
  auto as_int = [&](RootIndex a) {
    IntVector v(dim);
    for (std::size_t i = 0; i < dim; ++i)
      v[i] = rs.coords(a)[i];
    return v;
  };
  for (auto a : s) {
    require(a < rs.size(), ErrorCode::IndexOutOfRange,
            "root index " + std::to_string(a) + " out of range");
    gens.push_back(as_int(a));
  }
  RationalSpan span(gens, dim);
  RootSet out;
  for (RootIndex a = 0; a < rs.size(); ++a)
    if (span.contains(as_int(a)))
      out.push_back(a);
  return out;
}

inline bool is_levi_closed(const RootSystem &rs, const RootSet &s) {
  return levi_closure(rs, s) == normalized(s);
}

/// Coroots in the Q-span of the given coroots (indices of their roots).
inline RootSet coroot_span_closure(const RootSystem &rs, const RootSet &s) {
  std::vector<IntVector> gens;
  for (auto a : s)
    gens.push_back(rs.coroot(a));
  RationalSpan span(gens, rs.lattice_rank());
  RootSet out;
  for (RootIndex a = 0; a < rs.size(); ++a)
    if (span.contains(rs.coroot(a)))
      out.push_back(a);
  return out;
}

} // namespace dlcombi
