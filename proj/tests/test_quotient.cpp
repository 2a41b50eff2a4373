#include "sheetlab/errors.hpp"
#include "sheetlab/minor_gcd.hpp"
#include "sheetlab/quotient.hpp"
#include "sheetlab/sampling.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace sheetlab;
using namespace sheetlab::testing;

TEST(QuotientPoint, Validation) {
    const Partition s({2, 1});
    EXPECT_NO_THROW(QuotientPoint(s, {P({2, 1}), P({-1, 1}), P({1})}));
    EXPECT_THROW(QuotientPoint(s, {P({2, 1}), P({-1, 1})}), InputError);
    EXPECT_THROW(QuotientPoint(s, {P({2, 2}), P({-1, 1}), P({1})}), InputError);
    EXPECT_THROW(QuotientPoint(s, {P({2, 0, 1}), P({-1, 1}), P({1})}), InputError);
    EXPECT_THROW(QuotientPoint(s, {P({1, 1}), P({1, 1}), P({1})}), TraceError);
}

TEST(QuotientPoint, DegreesAndEliminatedIndex) {
    const Partition s({3, 1});
    EXPECT_EQ(quotient_degree(s, 1), 2U);
    EXPECT_EQ(quotient_degree(s, 2), 1U);
    EXPECT_EQ(quotient_degree(s, 3), 0U);
    EXPECT_EQ(eliminated_index(s), 2U);
    EXPECT_EQ(eliminated_index(Partition({2, 2})), 2U);
    EXPECT_EQ(eliminated_index(Partition({3})), 1U);
}

TEST(QuotientPoint, ChartRoundTripAndSize) {
    Rng rng(51);
    for (int n = 1; n <= 5; ++n) {
        for (const auto& sigma : partitions_of(n)) {
            for (int s = 0; s < 5; ++s) {
                const auto z = random_quotient_point(sigma, rng);
                ASSERT_EQ(z.chart().size(), static_cast<std::size_t>(sigma.part(1) - 1));
                ASSERT_EQ(QuotientPoint::from_chart(sigma, z.chart()), z);
                ASSERT_EQ(trace_relation(z.polys()), R(0));
            }
        }
    }
    EXPECT_THROW(QuotientPoint::from_chart(Partition({3}), {R(1)}), InputError);
}

TEST(QuotientPoint, QuotientPointExamples) {
    const auto d = quotient_point(M({{1, 0}, {0, -1}}));
    EXPECT_EQ(d.sigma(), Partition({2}));
    EXPECT_EQ(d.polys(), (std::vector<UniPoly>{P({-1, 0, 1}), P({1})}));
    const auto z = quotient_point(M({{-2, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    EXPECT_EQ(z.sigma(), Partition({2, 1}));
    EXPECT_EQ(z.polys(), (std::vector<UniPoly>{P({2, 1}), P({-1, 1}), P({1})}));
    EXPECT_EQ(root_sum(z.p(1)) + R(2) * root_sum(z.p(2)), R(0));
    for (int n = 1; n <= 5; ++n) {
        for (const auto& sigma : partitions_of(n)) {
            const auto w = quotient_point(nilpotent_representative(sigma));
            ASSERT_TRUE(w.is_nilpotent());
            for (std::size_t i = 1; i <= static_cast<std::size_t>(n); ++i) {
                ASSERT_EQ(w.p(i), t_pow(quotient_degree(sigma, i)));
            }
        }
    }
}

TEST(QuotientPoint, ReconstructExamples) {
    const QuotientPoint z(Partition({2, 1}), {t(), t(), P({1})});
    EXPECT_EQ(reconstruct_Q(z, 1), t_pow(3));
    EXPECT_EQ(reconstruct_Q(z, 2), t());
    EXPECT_EQ(reconstruct_Q(z, 3), P({1}));
    EXPECT_THROW(reconstruct_Q(z, 0), std::out_of_range);
    EXPECT_THROW(reconstruct_Q(z, 4), std::out_of_range);
}

TEST(QuotientPoint, SectionExamples) {
    EXPECT_EQ(section(QuotientPoint(Partition({2}), {t_pow(2), P({1})})), M({{0, 0}, {1, 0}}));
    const auto s = section(QuotientPoint(Partition({2}), {P({-1, 0, 1}), P({1})}));
    EXPECT_EQ(s, M({{0, 1}, {1, 0}}));
    EXPECT_EQ(gcd_minor_profile(s), gcd_minor_profile(M({{1, 0}, {0, -1}})));
    const auto b = section(QuotientPoint(Partition({2, 1}), {P({2, 1}), P({-1, 1}), P({1})}));
    EXPECT_EQ(b, M({{0, 2, 0}, {1, -1, 0}, {0, 0, 1}}));
    EXPECT_EQ(b.trace(), R(0));
    EXPECT_EQ(companion(P({5, 3, 1})), M({{0, -5}, {1, -3}}, Ambient::gl));
}

TEST(QuotientPoint, FiberContainsExamples) {
    EXPECT_TRUE(fiber_contains(QuotientPoint::nilpotent(Partition({3})), E(3, 0, 1)));
    EXPECT_FALSE(fiber_contains(QuotientPoint::nilpotent(Partition({1, 1, 1})), E(3, 0, 1)));
    Rng rng(52);
    const auto z = random_quotient_point(Partition({2, 1}), rng);
    EXPECT_TRUE(fiber_contains(z, section(z)));
    EXPECT_THROW(fiber_contains(z, RationalMatrix(2)), ShapeError);
}

TEST(QuotientPoint, ScaleExamples) {
    const Rational b(7, 2);
    const QuotientPoint z(Partition({2}), {UniPoly({b, R(0), R(1)}), P({1})});
    EXPECT_EQ(scale_quotient_point(z, R(1)), z);
    const Rational eps(-3, 5);
    EXPECT_EQ(scale_quotient_point(z, eps).p(1), UniPoly({eps * eps * b, R(0), R(1)}));
    const auto nil = QuotientPoint::nilpotent(Partition({3, 1}));
    EXPECT_EQ(scale_quotient_point(nil, R(1, 9)), nil);
    EXPECT_THROW(scale_quotient_point(z, R(0)), std::domain_error);
}

TEST(QuotientProperty, SectionRoundTripAndReconstruct) {
    Rng rng(53);
    for (int n = 1; n <= 4; ++n) {
        for (const auto& sigma : partitions_of(n)) {
            for (int s = 0; s < 10; ++s) {
                const auto z = random_quotient_point(sigma, rng);
                const auto x = random_conjugate(section(z), rng);
                ASSERT_EQ(quotient_point(section(z)), z);
                ASSERT_EQ(quotient_point(x), z);
                const auto prof = gcd_minor_profile(x);
                for (std::size_t i = 1; i <= static_cast<std::size_t>(n); ++i) {
                    ASSERT_EQ(reconstruct_Q(z, i), prof.Q(i));
                }
            }
        }
    }
}

TEST(QuotientProperty, SplitPointsCarryConsistentJordanData) {
    Rng rng(54);
    for (int n = 1; n <= 5; ++n) {
        for (const auto& sigma : partitions_of(n)) {
            for (int s = 0; s < 5; ++s) {
                const auto sp = random_split_point(sigma, rng);
                const auto j = jordan_matrix(sp.jordan);
                ASSERT_EQ(j.trace(), R(0));
                ASSERT_EQ(quotient_point(j.with_ambient(Ambient::sl)), sp.z);
            }
        }
    }
}

TEST(QuotientProperty, EquivarianceAndCone) {
    Rng rng(55);
    const std::vector<Rational> eps{R(2), R(1, 2), R(-1), R(1, 3)};
    for (int n = 1; n <= 4; ++n) {
        for (const auto& sigma : partitions_of(n)) {
            const auto x = random_sheet_sample(sigma, rng);
            const auto z = quotient_point(x);
            for (const auto& e : eps) {
                ASSERT_EQ(quotient_point(e * x), scale_quotient_point(z, e));
            }
            Rational bound;
            for (const auto& p : z.polys()) {
                for (const auto& c : p.coefficients()) {
                    bound = std::max(bound, c.abs());
                }
            }
            const auto nil = QuotientPoint::nilpotent(sigma);
            for (unsigned k = 1; k <= 30; ++k) {
                const auto zk = scale_quotient_point(z, R(1) / R(2).pow(k));
                for (std::size_t i = 1; i <= static_cast<std::size_t>(n); ++i) {
                    const UniPoly diff = zk.p(i) - nil.p(i);
                    for (const auto& c : diff.coefficients()) {
                        ASSERT_LE(c.abs(), bound / R(2).pow(k));
                    }
                }
            }
        }
    }
}
