#include <gtest/gtest.h>

#include "hom/families.hpp"

namespace hom {
namespace {

Matrix q(const std::vector<std::vector<std::string>>& rows, Ring r) {
  Matrix m(rows.size(), rows.front().size(), r);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Scalar::parse(rows[i][j], r);
  return m;
}

std::vector<size_t> dims(const Construction& c) {
  std::vector<size_t> out;
  for (const auto& p : c.dec.pieces) out.push_back(p.dim());
  return out;
}

void expect_decomposition(const Construction& c) {
  SCOPED_TRACE(c.name + " " + c.size_str());
  Subspace total = c.dec.pieces.front();
  size_t sum = 0;
  for (const auto& p : c.dec.pieces) {
    total = total.sum(p);
    sum += p.dim();
  }
  Ambient amb = c.dec.ambient();
  EXPECT_EQ(sum, Subspace::full(amb).dim());
  EXPECT_EQ(total.dim(), sum);
  EXPECT_EQ(dims(c), c.closed_form);
  for (size_t i = 0; i < c.dec.pieces.size(); ++i) EXPECT_TRUE(model_is_bijection(c, i)) << c.models[i].model;
}

TEST(Constructions, CertifiedDims) {
  EXPECT_EQ(dims(instantiate("proj", 1, 1)), (std::vector<size_t>{2, 1, 1, 0}));
  EXPECT_EQ(dims(instantiate("siegel", 1)), (std::vector<size_t>{2, 1, 1, 0}));
  EXPECT_EQ(dims(instantiate("quat1", 1)), (std::vector<size_t>{1, 2, 0, 1}));
  EXPECT_EQ(dims(instantiate("quat2", 1)), (std::vector<size_t>{3, 1, 3, 1}));
}

TEST(Constructions, DirectSumsAndModels) {
  for (size_t p = 1; p <= 3; ++p)
    for (size_t qq = 1; p + qq <= 4; ++qq) expect_decomposition(instantiate("proj", p, qq));
  for (const char* name : {"siegel", "quat1", "quat2"})
    for (size_t n = 1; n <= 2; ++n) expect_decomposition(instantiate(name, n));
}

TEST(Constructions, RejectsBadInput) {
  EXPECT_THROW(instantiate("quat2", 0), std::invalid_argument);
  EXPECT_THROW(instantiate("proj", 1, 0), std::invalid_argument);
  EXPECT_THROW(instantiate("bogus", 1), std::invalid_argument);
}

TEST(Quaternionic, EmbeddingsAndHermQuat) {
  for (size_t n = 1; n <= 2; ++n) {
    EXPECT_TRUE(check_quat_embedding(n, 5, 11));
    EXPECT_TRUE(quat1_fixed_algebra(n));
  }
  for (size_t n = 1; n <= 3; ++n) EXPECT_TRUE(hermquat_check(n));
  EXPECT_EQ(split_herm_space(2).dim(), 10u);
  EXPECT_EQ(split_aherm_space(2).dim(), 6u);
}

TEST(Tables, SiegelAndProjVerify) {
  TableArtifact s = verify_table(instantiate("siegel", 1), 5, 1);
  EXPECT_TRUE(s.all_verified());
  EXPECT_EQ(s.cells.size(), 16u);

  TableArtifact p = verify_table(instantiate("proj", 2, 1), 5, 1);
  EXPECT_TRUE(p.all_verified());
  size_t doubles = 0;
  for (const auto& c : p.cells) {
    if (c.double_group) {
      ++doubles;
      EXPECT_EQ(c.space, c.param);
    }
    EXPECT_EQ(c.group_type, c.space == negate(c.param) || c.double_group);
  }
  EXPECT_EQ(doubles, 2u);
}

TEST(Tables, ZeroSamplesGiveEmptyVerdicts) {
  TableArtifact t = verify_table(instantiate("quat2", 1), 0, 1);
  EXPECT_TRUE(t.all_verified());
  for (const auto& c : t.cells) EXPECT_EQ(c.samples, 0u);
  std::string md = table_markdown(t);
  EXPECT_NE(md.find("not sampled"), std::string::npos);
  EXPECT_EQ(md.find("verified |"), std::string::npos);
}

TEST(Catalog, TwoAPrimeWithUnitParameterIsMinusConjugation) {
  FamilyDescriptor f = family("2.A'", 1);
  AlphaMap a = f.make_alpha({Matrix::identity(1, Ring::QI)});
  EXPECT_EQ(a.apply(q({{"1+2i"}}, Ring::QI)), q({{"-1+2i"}}, Ring::QI));
  EXPECT_TRUE(check_lts(TripleSystem::from_alpha(f.space, a)).all_pass());
}

TEST(Catalog, OneAWithIdentityIsNestedCommutator) {
  FamilyDescriptor f = family("1.a", 2, 2);
  Matrix one = Matrix::identity(2, Ring::Q);
  AlphaMap a = f.make_alpha({one});
  Rng rng(3);
  for (int k = 0; k < 5; ++k) {
    Matrix x = rng.matrix(2, 2, Ring::Q), y = rng.matrix(2, 2, Ring::Q), z = rng.matrix(2, 2, Ring::Q);
    Matrix xy = x * y - y * x;
    EXPECT_EQ(triple_alpha(x, y, z, a), xy * z - z * xy);
    EXPECT_EQ(triple_alpha(x, y, z, a), triple_A(x, y, z, one));
  }
}

TEST(Catalog, PolarizedSymWithUnitParameter) {
  FamilyDescriptor f = family("pol-2", 1);
  AlphaMap a = f.make_alpha({Matrix::identity(1, Ring::Q)});
  TripleSystem t = TripleSystem::from_alpha(f.space, a);
  EXPECT_TRUE(check_lts(t).all_pass());
  auto s = [](const char* v) { return q({{v}}, Ring::Q); };
  Matrix x = s("2"), x2 = s("3"), y = s("-1"), y2 = s("1/2"), z = s("5"), z2 = s("-2");
  auto T = [](const Matrix& u, const Matrix& v, const Matrix& w) { return u * v * w + w * v * u; };
  Matrix got = t.product(a.embed(x, x2), a.embed(y, y2), a.embed(z, z2));
  Matrix want = a.embed(T(x, y2, z) - T(y, x2, z), T(x2, y, z2) - T(y2, x, z2));
  EXPECT_EQ(got, want);
}

TEST(Catalog, PrimedFamiliesAreCDuals) {
  const std::vector<std::pair<std::string, size_t>> labels{{"1.A", 2}, {"2.A", 2}, {"1.1.a", 2}, {"1.1.b", 2},
                                                           {"1.1.c", 2}, {"3.1.a", 1}, {"2.2.b", 1}, {"1.3.a", 1}};
  Rng rng(5);
  for (const auto& [label, n] : labels) {
    SCOPED_TRACE(label);
    bool square = label.rfind("1.A", 0) != 0 && label.rfind("1.3", 0) != 0;
    FamilyDescriptor f = square ? family(label, n) : family(label, n, n);
    FamilyDescriptor g = square ? family(label + "'", n) : family(label + "'", n, n);
    for (size_t k = 0; k < 4; ++k) {
      auto prm = f.sample(rng, k);
      TripleSystem a = TripleSystem::from_alpha(f.space, f.make_alpha(prm));
      TripleSystem b = TripleSystem::from_alpha(g.space, g.make_alpha(prm));
      EXPECT_EQ(a.cdual().structure_constants(), b.structure_constants());
    }
  }
}

TEST(Catalog, ShippedFamiliesPassSmall) {
  for (const auto& info : family_catalog()) {
    SCOPED_TRACE(info.label);
    for (Ring r : info.rings) {
      FamilyDescriptor f = info.sizes == "n" ? family(info.label, 2, 0, r) : family(info.label, 2, 1, r);
      for (const auto& run : run_family(f, 3, 17)) {
        EXPECT_TRUE(run.params_valid);
        EXPECT_TRUE(run.report.all_pass());
      }
    }
  }
}

TEST(Catalog, RunIsDeterministic) {
  FamilyDescriptor f = family("1.b", 2, 2);
  auto a = run_family(f, 4, 9), b = run_family(f, 4, 9);
  ASSERT_EQ(a.size(), 4u);
  for (size_t k = 0; k < 4; ++k) EXPECT_EQ(a[k].params, b[k].params);
  EXPECT_TRUE(run_family(f, 0, 9).empty());
}

TEST(Catalog, Errors) {
  EXPECT_THROW(family("bogus", 1, 1), std::invalid_argument);
  EXPECT_THROW(family("1.a", 0, 1), std::invalid_argument);
  EXPECT_THROW(family("1.a", 1, 0), std::invalid_argument);
  EXPECT_THROW(family("1.a", 1, 1, Ring::HQ), std::invalid_argument);
  EXPECT_THROW(family("2.A", 1, 0, Ring::Q), std::invalid_argument);
}

TEST(Catalog, PrintedFormsThatFail) {
  for (const auto& v : verbatim_checks(2, 5)) {
    SCOPED_TRACE(v.label + ": " + v.printed);
    EXPECT_FALSE(v.closed && v.lts);
  }
}

}  // namespace
}  // namespace hom
