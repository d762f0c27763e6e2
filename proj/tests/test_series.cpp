#include <gtest/gtest.h>

#include <set>

#include "dlcombi/oracle.hpp"
#include "dlcombi/series.hpp"

using namespace dlcombi;

namespace {

ContextPtr ctx_of(const std::string &name, int q, std::vector<std::size_t> phi = {},
                  std::optional<IntMatrix> phi_y = {}) {
  return GroupContext::create(preset(name), FrobeniusSpec{q, std::move(phi), phi_y});
}

// GL2 with the unitary Frobenius: phi swaps e1 and -e2
ContextPtr unitary_gl2(int q) {
  return ctx_of("GL2", q, {}, IntMatrix{{0, -1}, {-1, 0}});
}

std::vector<SeriesPair> all_pairs(const ContextPtr &c) {
  std::vector<SeriesPair> out;
  for (auto w : c->weyl().elements())
    for (auto &x : all_characters(make_torus(c, w)))
      out.push_back(x);
  return out;
}

} // namespace

TEST(CorootKernel, Examples) {
  auto sl2 = ctx_of("SL2", 5);
  auto t = make_torus(sl2, sl2->weyl().identity());
  EXPECT_EQ(coroot_kernel(TorusCharacter(t, {0})), sl2->roots().all_roots());
  EXPECT_TRUE(coroot_kernel(TorusCharacter(t, {2})).empty());
  auto gl2 = ctx_of("GL2", 3);
  auto t2 = make_torus(gl2, gl2->weyl().identity());
  EXPECT_EQ(coroot_kernel(TorusCharacter(t2, {1, 1})).size(), 2u);
}

TEST(WeylGroupsOfTheta, Examples) {
  auto sl2 = ctx_of("SL2", 5);
  auto t = make_torus(sl2, sl2->weyl().identity());
  auto triv = weyl_groups_of_theta(TorusCharacter(t, {0}));
  EXPECT_EQ(triv.order_circ(), 2u);
  EXPECT_EQ(triv.order_full(), 2u);
  auto g = weyl_groups_of_theta(TorusCharacter(t, {2}));
  EXPECT_EQ(g.order_circ(), 1u);
  EXPECT_EQ(g.order_full(), 2u);
  auto gl2 = ctx_of("GL2", 3);
  auto g2 = weyl_groups_of_theta(
      TorusCharacter(make_torus(gl2, gl2->weyl().identity()), {1, 1}));
  EXPECT_EQ(g2.order_circ(), 2u);
  EXPECT_EQ(g2.order_full(), 2u);
}

TEST(WeylGroupsOfTheta, CircIsNormalInFull) {
  for (auto c : {ctx_of("A2sc", 2), ctx_of("A2ad", 4), ctx_of("B2", 3), ctx_of("SL2", 5)}) {
    const auto &W = c->weyl();
    for (auto &theta : all_pairs(c)) {
      auto g = weyl_groups_of_theta(theta);
      for (auto x : W.elements()) {
        if (!g.w_circ[x.index])
          continue;
        EXPECT_TRUE(g.w_full[x.index]);
        for (auto y : W.elements())
          if (g.w_full[y.index]) {
            EXPECT_TRUE(g.w_circ[W.multiply({y, x, W.inverse(y)}).index]);
          }
      }
    }
  }
}

TEST(Series, SameRationalReflexiveAndImpliesGeometric) {
  auto c = ctx_of("SL2", 5);
  auto pairs = all_pairs(c);
  for (auto &a : pairs) {
    EXPECT_TRUE(same_rational_series(a, a));
    for (auto &b : pairs)
      if (same_rational_series(a, b)) {
        EXPECT_TRUE(same_geometric_series(a, b));
      }
  }
}

TEST(Series, MismatchedContextRejected) {
  auto a = ctx_of("GL2", 3), b = ctx_of("GL2", 3);
  TorusCharacter x(make_torus(a, a->weyl().identity()), {0, 0});
  TorusCharacter y(make_torus(b, b->weyl().identity()), {0, 0});
  try {
    same_rational_series(x, y);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::MismatchedContext);
  }
}

TEST(Series, EquivalenceAxiomsExhaustive) {
  for (auto c : {ctx_of("GL2", 3), ctx_of("SL2", 3), ctx_of("A2sc", 2, {1, 0}),
                 unitary_gl2(2)}) {
    auto pairs = all_pairs(c);
    const std::size_t n = pairs.size();
    std::vector<std::vector<char>> r(n, std::vector<char>(n)), g(n, std::vector<char>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        r[i][j] = same_rational_series(pairs[i], pairs[j]);
        g[i][j] = same_geometric_series(pairs[i], pairs[j]);
      }
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_TRUE(r[i][i] && g[i][i]);
      for (std::size_t j = 0; j < n; ++j) {
        EXPECT_EQ(r[i][j], r[j][i]);
        EXPECT_EQ(g[i][j], g[j][i]);
        if (r[i][j]) {
          EXPECT_TRUE(g[i][j]);
        }
        for (std::size_t k = 0; k < n; ++k) {
          if (r[i][j] && r[j][k]) {
            EXPECT_TRUE(r[i][k]);
          }
          if (g[i][j] && g[j][k]) {
            EXPECT_TRUE(g[i][k]);
          }
        }
      }
    }
  }
}

TEST(Enumerate, CountsMatchOracle) {
  using oracle::Family;
  EXPECT_EQ(enumerate_series(ctx_of("GL2", 2)).rational.size(), 2u);
  EXPECT_EQ(enumerate_series(ctx_of("GL2", 3)).rational.size(), 6u);
  EXPECT_EQ(enumerate_series(ctx_of("SL2", 3)).rational.size(), 4u);
  for (int q : {2, 3, 4, 5}) {
    EXPECT_EQ(Integer(enumerate_series(ctx_of("GL2", q)).rational.size()),
              oracle::semisimple_class_count(Family::GL2, q))
        << q;
    EXPECT_EQ(Integer(enumerate_series(ctx_of("SL2", q)).rational.size()),
              oracle::semisimple_class_count(Family::PGL2, q))
        << q;
    EXPECT_EQ(Integer(enumerate_series(ctx_of("PGL2", q)).rational.size()),
              oracle::semisimple_class_count(Family::SL2, q))
        << q;
  }
}

TEST(Enumerate, UnitaryGL2CountsMatchClassNumber) {
  // semisimple classes of U2(q) number q^2 + q
  for (int q : {2, 3, 4}) {
    auto e = enumerate_series(unitary_gl2(q));
    EXPECT_EQ(e.rational.size(), static_cast<std::size_t>(q * q + q)) << q;
  }
}

TEST(Enumerate, PartitionIsCompleteAndConsistent) {
  for (auto c : {ctx_of("GL2", 3), ctx_of("SL2", 5), ctx_of("A2sc", 2, {1, 0}),
                 ctx_of("A2ad", 4)}) {
    auto e = enumerate_series(c);
    std::size_t members = 0;
    for (auto &lab : e.rational) {
      members += lab.members.size();
      EXPECT_TRUE(lab.representative == lab.members.front());
      for (auto &m : lab.members) {
        EXPECT_TRUE(same_rational_series(lab.representative, m));
        EXPECT_FALSE(pair_less(m, lab.representative));
      }
    }
    std::size_t expected = 0;
    for (auto &cls : f_conjugacy_classes(*c))
      expected += static_cast<std::size_t>(make_torus(c, cls.front())->order());
    EXPECT_EQ(members, expected);
    for (std::size_t a = 0; a < e.rational.size(); ++a)
      for (std::size_t b = a + 1; b < e.rational.size(); ++b)
        EXPECT_FALSE(same_rational_series(e.rational[a].representative,
                                          e.rational[b].representative));
    // geometric classes are unions of rational ones
    std::set<std::size_t> covered;
    for (auto &g : e.geometric) {
      for (auto i : g) {
        EXPECT_TRUE(covered.insert(i).second);
        EXPECT_TRUE(same_geometric_series(e.rational[g.front()].representative,
                                          e.rational[i].representative));
      }
    }
    EXPECT_EQ(covered.size(), e.rational.size());
    for (std::size_t a = 0; a < e.geometric.size(); ++a)
      for (std::size_t b = a + 1; b < e.geometric.size(); ++b)
        EXPECT_FALSE(same_geometric_series(e.rational[e.geometric[a].front()].representative,
                                           e.rational[e.geometric[b].front()].representative));
    for (std::size_t k = 1; k < e.rational.size(); ++k)
      EXPECT_TRUE(pair_less(e.rational[k - 1].representative, e.rational[k].representative));
  }
}

TEST(Enumerate, GeometricEqualsRationalForGL) {
  for (int q : {2, 3}) {
    auto e = enumerate_series(ctx_of("GL2", q));
    EXPECT_EQ(e.geometric.size(), e.rational.size());
  }
  // SL2 at q = 5: the characters of order 2 on the two tori form one
  // geometric class split into two rational ones
  auto e = enumerate_series(ctx_of("SL2", 5));
  EXPECT_LT(e.geometric.size(), e.rational.size());
}

TEST(Enumerate, DeterministicAcrossThreadCounts) {
  auto c = ctx_of("A2sc", 4);
  auto a = enumerate_series(c, {1, 200000});
  auto b = enumerate_series(c, {4, 200000});
  ASSERT_EQ(a.rational.size(), b.rational.size());
  for (std::size_t k = 0; k < a.rational.size(); ++k) {
    EXPECT_TRUE(a.rational[k].representative == b.rational[k].representative);
    EXPECT_EQ(a.rational[k].members.size(), b.rational[k].members.size());
  }
  EXPECT_EQ(a.geometric, b.geometric);
}

TEST(Enumerate, ScaleCap) {
  try {
    enumerate_series(ctx_of("GL2", 5), {1, 10});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::ScaleExceeded);
  }
}

TEST(Enumerate, FindSeries) {
  auto c = ctx_of("GL2", 3);
  auto e = enumerate_series(c);
  for (std::size_t k = 0; k < e.rational.size(); ++k)
    for (auto &m : e.rational[k].members)
      EXPECT_EQ(find_series(e, m), k);
}

TEST(Regularity, Examples) {
  auto sl2 = ctx_of("SL2", 5);
  auto t = make_torus(sl2, sl2->weyl().identity());
  TorusCharacter triv(t, {0}), th(t, {2});
  EXPECT_FALSE(is_regular(triv, {}));
  EXPECT_TRUE(is_regular(th, {}));
  EXPECT_FALSE(is_super_regular(th, {}));
  auto all = sl2->roots().all_roots();
  EXPECT_TRUE(is_regular(triv, all));
  EXPECT_TRUE(is_super_regular(triv, all));
  // super-regular implies regular everywhere on A2
  auto a2 = ctx_of("A2sc", 3);
  for (auto &L : a2->weyl().levi_subsystems())
    for (auto &p : all_pairs(a2))
      if (is_super_regular(p, L)) {
        EXPECT_TRUE(is_regular(p, L));
      }
}
