#include <gtest/gtest.h>

#include "dlcombi/frobenius.hpp"
#include "dlcombi/oracle.hpp"
#include "dlcombi/verify.hpp"

using namespace dlcombi::oracle;

namespace {

Field extension_of(int q) {
  Field k = make_field(q);
  auto [c1, c0] = Field::irreducible_quadratic(k);
  return Field::quadratic(k, c1, c0);
}

// classical class numbers of the full groups
long total_classes(Family fam, int q) {
  switch (fam) {
  case Family::GL2:
    return q * q - 1;
  case Family::SL2:
    return q % 2 ? q + 4 : q + 1;
  case Family::PGL2:
    return q % 2 ? q + 2 : q + 1;
  }
  return -1;
}

} // namespace

TEST(OracleField, AxiomsHold) {
  for (int q : {2, 3, 4, 5, 9, 25}) {
    Field f = make_field(q);
    EXPECT_EQ(f.size(), q);
    EXPECT_TRUE(f.check_axioms()) << q;
  }
  for (int q : {2, 3, 4, 5}) {
    Field e = extension_of(q);
    EXPECT_EQ(e.size(), q * q);
    EXPECT_TRUE(e.check_axioms()) << q;
  }
  EXPECT_THROW(make_field(6), std::invalid_argument);
}

TEST(OracleField, MultiplicativeGroupIsCyclic) {
  for (int q : {2, 3, 4, 5, 9, 25}) {
    Field f = make_field(q);
    bool found = false;
    for (int a = 1; a < q && !found; ++a) {
      int ord = 1;
      for (int x = a; x != 1; x = f.mul(x, a))
        ++ord;
      found = ord == q - 1;
    }
    EXPECT_TRUE(found) << q;
  }
}

TEST(OracleGroup, OrdersMatchClassicalFormulas) {
  for (auto fam : {Family::GL2, Family::SL2, Family::PGL2})
    for (int q : {2, 3, 4, 5}) {
      MatrixGroup g(fam, q);
      EXPECT_EQ(static_cast<long>(g.order()), classical_order(fam, q)) << q;
    }
  EXPECT_EQ(MatrixGroup(Family::GL2, 3).order(), 48u);
  EXPECT_EQ(MatrixGroup(Family::PGL2, 3).order(), 24u);
}

TEST(OracleGroup, ClassEquationAndClassNumbers) {
  for (auto fam : {Family::GL2, Family::SL2, Family::PGL2})
    for (int q : {2, 3, 4, 5}) {
      MatrixGroup g(fam, q);
      auto cls = g.conjugacy_classes();
      std::size_t total = 0;
      for (auto &c : cls) {
        total += c.size();
        EXPECT_EQ(g.order() % c.size(), 0u);
      }
      EXPECT_EQ(total, g.order());
      EXPECT_EQ(static_cast<long>(cls.size()), total_classes(fam, q)) << q;
    }
}

TEST(OracleGroup, InverseAndIdentity) {
  for (auto fam : {Family::GL2, Family::SL2, Family::PGL2}) {
    MatrixGroup g(fam, 5);
    for (auto &m : g.elements()) {
      EXPECT_EQ(g.mul(m, g.inverse(m)), g.identity());
      EXPECT_EQ(g.mul(g.identity(), m), m);
    }
  }
}

TEST(OracleTorus, Examples) {
  EXPECT_EQ(torus_point_count(Family::GL2, 3, TorusKind::Split), 4);
  EXPECT_EQ(torus_point_count(Family::GL2, 3, TorusKind::Coxeter), 8);
  EXPECT_EQ(torus_point_count(Family::SL2, 5, TorusKind::Coxeter), 6);
  EXPECT_THROW(torus_point_count(Family::PGL2, 3, TorusKind::Split), std::invalid_argument);
}

TEST(OracleTorus, CoxeterMatchesQuadraticExtension) {
  for (int q : {2, 3, 4, 5}) {
    Field e = extension_of(q);
    long units = e.size() - 1, norm_one = 0;
    for (int x = 1; x < e.size(); ++x)
      if (e.pow(x, q + 1) == 1)
        ++norm_one;
    EXPECT_EQ(torus_point_count(Family::GL2, q, TorusKind::Coxeter), units) << q;
    EXPECT_EQ(torus_point_count(Family::SL2, q, TorusKind::Coxeter), norm_one) << q;
    EXPECT_EQ(norm_one, q + 1);
  }
}

TEST(OracleTorus, MatchesTwistedDeterminant) {
  using namespace dlcombi;
  for (auto [name, fam] : {std::pair{"GL2", Family::GL2}, std::pair{"SL2", Family::SL2}})
    for (int q : {2, 3, 4, 5}) {
      auto c = GroupContext::create(preset(name), FrobeniusSpec{q, {}, {}});
      auto split = make_torus(c, c->weyl().identity());
      auto cox = make_torus(c, c->weyl().simple(0));
      EXPECT_EQ(iabs(determinant(split->presentation_y())),
                torus_point_count(fam, q, TorusKind::Split));
      EXPECT_EQ(iabs(determinant(cox->presentation_y())),
                torus_point_count(fam, q, TorusKind::Coxeter));
    }
}

TEST(OracleClasses, Examples) {
  EXPECT_EQ(semisimple_class_count(Family::GL2, 3), 6);
  EXPECT_EQ(semisimple_class_count(Family::GL2, 2), 2);
  EXPECT_EQ(semisimple_class_count(Family::PGL2, 3), 4);
}

TEST(OracleClasses, ClassicalFormulas) {
  // GL2: q^2 - q. SL2: 2 central, (q-3)/2 split, (q-1)/2 anisotropic
  // classes for odd q, so q in all cases. PGL2: q + 1 for odd q, q for even q.
  for (int q : {2, 3, 4, 5}) {
    EXPECT_EQ(semisimple_class_count(Family::GL2, q), q * q - q) << q;
    EXPECT_EQ(semisimple_class_count(Family::SL2, q), q) << q;
    EXPECT_EQ(semisimple_class_count(Family::PGL2, q), q % 2 ? q + 1 : q) << q;
  }
}

TEST(VerifyPartition, Examples) {
  auto a = dlcombi::verify_series_partition("GL2", 3);
  EXPECT_TRUE(a.pass);
  EXPECT_EQ(a.core, 6);
  EXPECT_EQ(a.oracle, 6);
  auto b = dlcombi::verify_series_partition("SL2", 3);
  EXPECT_TRUE(b.pass);
  EXPECT_EQ(b.core, 4);
  EXPECT_EQ(b.dual_family, "PGL2");
  auto c = dlcombi::verify_series_partition("GL2", 2);
  EXPECT_TRUE(c.pass);
  EXPECT_EQ(c.core, 2);
}

TEST(VerifyPartition, AllSupportedInstancesPass) {
  for (auto name : {"GL2", "SL2", "PGL2"})
    for (int q : {2, 3, 4, 5})
      EXPECT_TRUE(dlcombi::verify_series_partition(name, q).pass) << name << " " << q;
}

TEST(VerifyPartition, RejectsOutOfRange) {
  EXPECT_THROW(dlcombi::verify_series_partition("GL2", 7), dlcombi::Error);
  EXPECT_THROW(dlcombi::verify_series_partition("B2", 3), dlcombi::Error);
}
