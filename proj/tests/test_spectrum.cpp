#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

#include "alphaspec/enumerate.hpp"
#include "alphaspec/error.hpp"
#include "alphaspec/spectrum.hpp"

using namespace alphaspec;

namespace {

// Independent oracle: Eigen's two-sided Jacobi SVD.
std::vector<double> eigen_singular_values(const DenseMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.order());
  Eigen::MatrixXd e(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) e(i, j) = m(i, j);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(e);
  const Eigen::VectorXd s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

Digraph random_digraph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Digraph::Arc> arcs;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && coin(rng)) arcs.emplace_back(u, v);
  return Digraph::from_arcs(n, arcs);
}

const simd::KernelTable& table(simd::Isa isa) {
  const auto* t = simd::kernels_if_supported(isa);
  return t ? *t : simd::scalar_kernels();
}

}  // namespace

TEST(BuildAlphaMatrix, Entries) {
  const auto k2 = build_alpha_matrix(make_family(SymmetricComplete{2}), AlphaParam::ratio(1, 2));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) EXPECT_DOUBLE_EQ(k2(i, j), 0.5);

  const double a = 0.3;
  const auto m = build_alpha_matrix(make_family(OrientedCompleteBipartite{2, 3}), AlphaParam(a));
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      double expected = 0.0;
      if (i < 2 && i == j) expected = a * 3;
      if (i < 2 && j >= 2) expected = 1 - a;
      EXPECT_DOUBLE_EQ(m(i, j), expected) << i << "," << j;
    }

  const auto z = build_alpha_matrix(make_family(Discrete{4}), AlphaParam(0.6));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(z(i, j), 0.0);
}

TEST(SingularValues, Examples) {
  for (std::size_t n : {2u, 5u, 17u}) {
    const auto s = singular_values(build_alpha_matrix(make_family(DirectedCycle{n}), AlphaParam(0.0)));
    for (double v : s.values()) EXPECT_NEAR(v, 1.0, 1e-12);
    EXPECT_NEAR(s.trace_norm(), static_cast<double>(n), 1e-12);
  }
  const auto c3 = singular_values(build_alpha_matrix(make_family(DirectedCycle{3}), AlphaParam::ratio(1, 2)));
  ASSERT_EQ(c3.size(), 3u);
  EXPECT_NEAR(c3[0], 1.0, 1e-12);
  EXPECT_NEAR(c3[1], 0.5, 1e-12);
  EXPECT_NEAR(c3[2], 0.5, 1e-12);

  const auto k2 = singular_values(build_alpha_matrix(make_family(SymmetricComplete{2}), AlphaParam::ratio(1, 2)));
  EXPECT_NEAR(k2[0], 1.0, 1e-12);
  EXPECT_NEAR(k2[1], 0.0, 1e-12);
}

TEST(SingularValues, SortedNonnegative) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto s = singular_values(build_alpha_matrix(random_digraph(rng, 1 + t % 9, 0.4), AlphaParam(0.35)));
    EXPECT_TRUE(std::is_sorted(s.values().rbegin(), s.values().rend()));
    for (double v : s.values()) EXPECT_GE(v, 0.0);
  }
}

TEST(SingularValues, MatchEigenOracle) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 24;
    const auto d = random_digraph(rng, n, 0.1 + 0.8 * (t % 5) / 4.0);
    const AlphaParam a(static_cast<double>(t % 10) / 10.0);
    const auto m = build_alpha_matrix(d, a);
    const auto got = singular_values(m);
    const auto want = eigen_singular_values(m);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(got[i], want[i], 1e-10) << encode(d) << " i=" << i;
  }
}

TEST(SingularValues, ScalarAndWideKernelsAgree) {
  std::mt19937_64 rng(9);
  const auto& scalar = simd::scalar_kernels();
  const auto& wide = table(simd::Isa::avx2);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + rng() % 40;
    const auto m = build_alpha_matrix(random_digraph(rng, n, 0.3), AlphaParam(0.45));
    const auto a = singular_values(m, scalar);
    const auto b = singular_values(m, wide);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(a[i], b[i], 1e-11);
    EXPECT_NEAR(abs_determinant(m, scalar), abs_determinant(m, wide), 1e-9 * std::max(1.0, abs_determinant(m, scalar)));
    const auto g1 = gram(m, scalar), g2 = gram(m, wide);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) EXPECT_NEAR(g1(i, j), g2(i, j), 1e-12);
  }
}

TEST(SingularValues, ExactZerosOnLargeRankDeficientMatrices) {
  // symmetric K10 at alpha = 1/10 has rank one; the zero singular values
  // must come out below the 1e-9 comparison tolerance
  const auto s = singular_values(build_alpha_matrix(make_family(SymmetricComplete{10}), AlphaParam(0.1)));
  EXPECT_NEAR(s[0], 9.0, 1e-9);
  for (std::size_t i = 1; i < 10; ++i) EXPECT_LT(s[i], 1e-9);
}

TEST(Gram, SymmetricAndRowSums) {
  // every k-regular digraph has A A^T row sums k^2
  const std::vector<std::pair<Digraph, double>> regular = {
      {make_family(DirectedCycle{7}), 1.0},
      {make_family(SymmetricComplete{5}), 4.0},
      {make_family(Shrikhande{}), 6.0},
  };
  for (const auto& [d, k] : regular)
    for (const auto& a : quarter_alpha_grid()) {
      const auto g = gram(build_alpha_matrix(d, a));
      for (std::size_t i = 0; i < d.order(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < d.order(); ++j) {
          row += g(i, j);
          EXPECT_NEAR(g(i, j), g(j, i), 1e-14);
        }
        EXPECT_NEAR(row, k * k, 1e-9);
      }
    }
}

TEST(SymmetricEigenvalues, MatchesEigen) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng() % 20;
    const auto g = gram(build_alpha_matrix(random_digraph(rng, n, 0.5), AlphaParam(0.2)));
    Eigen::MatrixXd e(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) e(i, j) = g(i, j);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(e);
    std::vector<double> want(es.eigenvalues().data(), es.eigenvalues().data() + n);
    std::sort(want.rbegin(), want.rend());
    const auto got = symmetric_eigenvalues(g);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(got[i], want[i], 1e-10);
  }
}

TEST(SymmetricEigenvalues, ShrikhandeAdjacency) {
  const auto d = make_family(Shrikhande{});
  DenseMatrix a(16);
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = 0; j < 16; ++j) a(i, j) = d.has_arc(i, j) ? 1.0 : 0.0;
  const auto ev = symmetric_eigenvalues(a);
  EXPECT_NEAR(ev[0], 6.0, 1e-10);
  for (std::size_t i = 1; i <= 6; ++i) EXPECT_NEAR(ev[i], 2.0, 1e-10);
  for (std::size_t i = 7; i < 16; ++i) EXPECT_NEAR(ev[i], -2.0, 1e-10);
}

TEST(AbsDeterminant, Examples) {
  EXPECT_NEAR(abs_determinant(build_alpha_matrix(make_family(DirectedCycle{6}), AlphaParam(0.0))), 1.0, 1e-14);
  EXPECT_EQ(abs_determinant(build_alpha_matrix(make_family(Discrete{3}), AlphaParam(0.4))), 0.0);
  EXPECT_EQ(abs_determinant(build_alpha_matrix(make_family(DirectedPath{4}), AlphaParam(0.0))), 0.0);
}

TEST(AbsDeterminant, AgreesWithSingularValueProduct) {
  for (const auto& d : AllDigraphs(4))
    for (const auto& a : quarter_alpha_grid()) {
      const auto m = build_alpha_matrix(d, a);
      const double prod = singular_values(m).abs_det();
      if (prod > 1e-12) EXPECT_NEAR(abs_determinant(m), prod, 1e-8 * prod) << encode(d);
    }
}

TEST(Rank, Examples) {
  const auto half = AlphaParam::ratio(1, 2);
  for (auto mode : {RankMode::numeric, RankMode::exact_rational}) {
    EXPECT_EQ(numerical_rank(make_family(SymmetricComplete{2}), half, mode), 1u);
    EXPECT_EQ(numerical_rank(make_family(OrientedCompleteBipartite{2, 3}), AlphaParam(0.0), mode), 1u);
    EXPECT_EQ(numerical_rank(make_family(DirectedPath{3}), AlphaParam(0.0), mode), 2u);
    EXPECT_EQ(numerical_rank(make_family(Discrete{3}), half, mode), 0u);
  }
  EXPECT_THROW(numerical_rank(make_family(DirectedPath{3}), AlphaParam(0.123456789), RankMode::exact_rational),
               InvalidArgument);
  EXPECT_THROW(numerical_rank(make_family(DirectedPath{3}), AlphaParam::ratio(1, 65), RankMode::exact_rational),
               InvalidArgument);
}

TEST(Rank, ExactAgreesWithNumericOnAllFourVertexDigraphs) {
  for (const auto& d : AllDigraphs(4))
    for (const auto& a : quarter_alpha_grid())
      EXPECT_EQ(numerical_rank(d, a, RankMode::exact_rational), numerical_rank(d, a, RankMode::numeric))
          << encode(d) << " " << a.to_string();
}

TEST(Rank, IntegerRankHandlesLargeEntries) {
  // entries near 2^40 overflow int64 products and force the bignum path
  const long long big = 1LL << 40;
  EXPECT_EQ(integer_rank(3, {big, big + 1, 7, big - 3, big, 11, 2 * big - 3, 2 * big + 1, 18}), 2u);
  EXPECT_EQ(integer_rank(2, {1, 2, 2, 4}), 1u);
  EXPECT_EQ(integer_rank(3, {0, 0, 0, 0, 0, 0, 0, 0, 0}), 0u);
  EXPECT_EQ(integer_rank(2, {0, 1, 1, 0}), 2u);
}

TEST(SingularSpectrum, DerivedQuantities) {
  const SingularSpectrum s({1.0, 3.0, 2.0, 2.0 + 1e-12});
  EXPECT_EQ(s.values().front(), 3.0);
  EXPECT_DOUBLE_EQ(s.trace_norm(), 8.0 + 1e-12);
  EXPECT_DOUBLE_EQ(s.spectral_norm(), 3.0);
  EXPECT_NEAR(s.abs_det(), 12.0, 1e-10);
  EXPECT_NEAR(s.sum_of_squares(), 18.0, 1e-10);
  const auto g = s.grouped();
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g[1].second, 2u);
  const SingularSpectrum clamped({-1e-17, 1.0});
  EXPECT_EQ(clamped[1], 0.0);
}
