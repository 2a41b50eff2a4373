#include "sheetlab/centralizer.hpp"
#include "sheetlab/errors.hpp"
#include "sheetlab/sampling.hpp"
#include "sheetlab/sheets.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace sheetlab;
using namespace sheetlab::testing;

namespace {

/// ad x as an n^2 x n^2 matrix on row-major coordinates.
std::vector<std::vector<Rational>> ad_matrix(const RationalMatrix& x) {
    const std::size_t n = x.size();
    std::vector<std::vector<Rational>> ad(n * n, std::vector<Rational>(n * n));
    for (std::size_t k = 0; k < n * n; ++k) {
        const auto image = bracket(x, RationalMatrix::unit(n, k / n, k % n)).flat();
        for (std::size_t r = 0; r < n * n; ++r) {
            ad[r][k] = image[r];
        }
    }
    return ad;
}

/// trace(ad y ad z) from explicit ad matrices.
Rational ad_trace_form(const RationalMatrix& y, const RationalMatrix& z) {
    const auto a = ad_matrix(y);
    const auto b = ad_matrix(z);
    Rational tr;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t k = 0; k < a.size(); ++k) {
            tr += a[i][k] * b[k][i];
        }
    }
    return tr;
}

int sum_of_squares(const Partition& p) {
    int s = 0;
    for (int c : p.parts()) {
        s += c * c;
    }
    return s;
}

}  // namespace

TEST(Centralizer, Examples) {
    const auto c = centralizer(J(3), Ambient::sl);
    EXPECT_EQ(c.dimension(), 2U);
    EXPECT_TRUE(c.contains(J(3)));
    EXPECT_TRUE(c.contains((J(3) * J(3)).with_ambient(Ambient::sl)));
    EXPECT_TRUE(same_subspace(c, MatrixSubspace::span(3, Ambient::sl, {J(3), (J(3) * J(3)).with_ambient(Ambient::sl)})));
    for (std::size_t n = 1; n <= 4; ++n) {
        EXPECT_EQ(centralizer(RationalMatrix(n), Ambient::gl).dimension(), n * n);
    }
    EXPECT_EQ(centralizer(E(3, 0, 1), Ambient::gl).dimension(), 5U);
}

TEST(Centralizer, MatchesAdKernelOracle) {
    Rng rng(71);
    for (std::size_t n = 1; n <= 4; ++n) {
        for (int s = 0; s < 5; ++s) {
            const auto x = random_sheet_sample(partitions_of(static_cast<int>(n))[static_cast<std::size_t>(s) % partitions_of(static_cast<int>(n)).size()], rng);
            const std::size_t expected = n * n - rank(ad_matrix(x));
            const auto c = centralizer(x, Ambient::gl);
            ASSERT_EQ(c.dimension(), expected);
            for (const auto& y : c.basis()) {
                ASSERT_TRUE(bracket(x, y).is_zero());
            }
            ASSERT_EQ(centralizer(x, Ambient::sl).dimension(), expected - 1);
        }
    }
}

TEST(Derived, Examples) {
    EXPECT_EQ(derived_subalgebra(centralizer(J(3), Ambient::sl)).dimension(), 0U);
    for (std::size_t n = 2; n <= 3; ++n) {
        const auto d = derived_subalgebra(MatrixSubspace::whole(n, Ambient::gl));
        EXPECT_EQ(d.dimension(), n * n - 1);
        EXPECT_TRUE(same_subspace(d, MatrixSubspace::whole(n, Ambient::sl)));
    }
    EXPECT_EQ(derived_subalgebra(centralizer(E(3, 0, 1), Ambient::gl)).dimension(), 3U);
}

TEST(Derived, CoadjointExamples) {
    EXPECT_EQ(coadjoint_invariant_dim(nilpotent_representative(Partition({2, 1})), Ambient::gl), 2U);
    for (std::size_t n = 2; n <= 5; ++n) {
        EXPECT_EQ(coadjoint_invariant_dim(nilpotent_representative(Partition({static_cast<int>(n)})), Ambient::sl),
                  n - 1);
    }
    EXPECT_EQ(coadjoint_invariant_dim(RationalMatrix(2), Ambient::sl), 0U);
    const auto r = centralizer_report(RationalMatrix(2), Ambient::sl);
    EXPECT_EQ(r.centralizer_dim, 3U);
    EXPECT_EQ(r.derived_dim, 3U);
    EXPECT_EQ(r.codim, 0U);
    EXPECT_FALSE(r.abelian);
}

TEST(Abelian, Examples) {
    EXPECT_TRUE(is_abelian(centralizer(J(4), Ambient::sl)));
    EXPECT_FALSE(is_abelian(MatrixSubspace::whole(2, Ambient::gl)));
    EXPECT_TRUE(is_abelian(MatrixSubspace::span(3, Ambient::gl, {M({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}, Ambient::gl)})));
}

TEST(Subspace, SpanRejectsTraceInSl) {
    EXPECT_THROW(MatrixSubspace::span(2, Ambient::sl, {RationalMatrix::identity(2)}), TraceError);
    MatrixSubspace s(2, Ambient::gl);
    EXPECT_TRUE(s.add(RationalMatrix::identity(2)));
    EXPECT_FALSE(s.add(R(3) * RationalMatrix::identity(2)));
    EXPECT_EQ(s.dimension(), 1U);
}

TEST(Killing, FormMatchesAdTraceOracle) {
    Rng rng(72);
    for (std::size_t n = 2; n <= 3; ++n) {
        for (int s = 0; s < 10; ++s) {
            const auto y = random_sheet_sample(Partition({static_cast<int>(n)}), rng);
            const auto z = random_sheet_sample(partitions_of(static_cast<int>(n)).back(), rng);
            const auto w = random_sheet_sample(Partition({static_cast<int>(n)}), rng);
            ASSERT_EQ(killing_form(y, w), ad_trace_form(y, w));
            ASSERT_EQ(killing_form(y, z), ad_trace_form(y, z));
        }
    }
}

TEST(Killing, Examples) {
    const auto j = killing_report(J(3));
    EXPECT_EQ(j.tangent_dim, 6U);
    EXPECT_EQ(j.centralizer_dim, 2U);
    EXPECT_TRUE(j.complement_equals_centralizer);
    EXPECT_TRUE(killing_orthogonality_check(RationalMatrix(3)));
    const auto d = killing_report(M({{1, 0}, {0, -1}}));
    EXPECT_EQ(d.tangent_dim, 2U);
    EXPECT_EQ(d.centralizer_dim, 1U);
    EXPECT_TRUE(killing_orthogonality_check(M({{1, 0}, {0, -1}})));
}

TEST(Lemma, BasisExamples) {
    EXPECT_EQ(lemma_basis(Partition({2, 1})).size(), 2U);
    EXPECT_TRUE(lemma_basis_check(Partition({2, 1})));
    EXPECT_EQ(lemma_basis(Partition({4})).size(), 4U);
    EXPECT_EQ(lemma_basis(Partition({1, 1, 1})).size(), 1U);
    EXPECT_EQ(lemma_basis(Partition({1, 1, 1}))[0], RationalMatrix::diagonal({R(0), R(0), R(1)}));
    const auto p0 = block_projection(Partition({2, 1}), 0);
    EXPECT_EQ(p0, RationalMatrix::diagonal({R(1), R(1), R(0)}));
    EXPECT_EQ(p0 * p0, p0);
}

TEST(CentralizerProperty, NilpotentCountsUpToSix) {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& sigma : partitions_of(n)) {
            const auto x = nilpotent_representative(sigma).with_ambient(Ambient::gl);
            const auto b1 = static_cast<std::size_t>(sigma.part(1));
            ASSERT_EQ(centralizer(x, Ambient::gl).dimension(), static_cast<std::size_t>(sum_of_squares(conjugate(sigma))));
            ASSERT_EQ(coadjoint_invariant_dim(x, Ambient::gl), b1);
            ASSERT_EQ(coadjoint_invariant_dim(x.with_ambient(Ambient::sl), Ambient::sl), b1 - 1);
            ASSERT_TRUE(lemma_basis_check(sigma)) << sigma.to_string();
            if (sigma.length() > 1 && n <= 5) {
                ASSERT_TRUE(offdiagonal_absorbed(sigma)) << sigma.to_string();
            }
        }
    }
}

TEST(CentralizerProperty, RegularAbelian) {
    Rng rng(73);
    for (int n = 1; n <= 5; ++n) {
        for (int s = 0; s < 5; ++s) {
            const auto x = random_sheet_sample(Partition({n}), rng);
            const auto c = centralizer(x, Ambient::sl);
            ASSERT_EQ(c.dimension(), static_cast<std::size_t>(n - 1));
            ASSERT_TRUE(is_abelian(c));
        }
    }
}

TEST(CentralizerProperty, KillingOrthogonalityOnSheets) {
    Rng rng(74);
    for (int n = 1; n <= 4; ++n) {
        for (const auto& sigma : partitions_of(n)) {
            const auto x = random_sheet_sample(sigma, rng);
            const auto r = killing_report(x);
            ASSERT_TRUE(r.complement_equals_centralizer);
            ASSERT_EQ(r.tangent_dim + r.centralizer_dim, static_cast<std::size_t>(n * n - 1));
            ASSERT_EQ(static_cast<int>(r.tangent_dim), describe_sheet(sigma).orbit_dim);
        }
    }
}
