#include "sheetlab/centralizer.hpp"
#include "sheetlab/errors.hpp"
#include "sheetlab/minor_gcd.hpp"
#include "sheetlab/sampling.hpp"
#include "sheetlab/sheets.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace sheetlab;
using namespace sheetlab::testing;

namespace {

/// Partition counts p(n), n = 0..12.
constexpr int kPartitionCounts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};

/// Column lengths of the Young diagram, counted cell by cell.
Partition diagram_conjugate(const Partition& sigma) {
    std::vector<int> cols;
    for (int b : sigma.parts()) {
        for (int j = 0; j < b; ++j) {
            if (static_cast<std::size_t>(j) >= cols.size()) {
                cols.push_back(0);
            }
            ++cols[static_cast<std::size_t>(j)];
        }
    }
    return Partition(cols);
}

}  // namespace

TEST(Partition, Validation) {
    EXPECT_THROW(Partition(std::vector<int>{}), InputError);
    EXPECT_THROW(Partition({1, 2}), InputError);
    EXPECT_THROW(Partition({2, 0}), InputError);
    EXPECT_THROW(Partition({-1}), InputError);
    const Partition p({3, 1, 1});
    EXPECT_EQ(p.total(), 5);
    EXPECT_EQ(p.length(), 3U);
    EXPECT_EQ(p.part(1), 3);
    EXPECT_EQ(p.part(4), 0);
    EXPECT_EQ(p.to_string(), "(3,1,1)");
}

TEST(Partition, ConjugateExamples) {
    EXPECT_EQ(conjugate(Partition({3})), Partition({1, 1, 1}));
    EXPECT_EQ(conjugate(Partition({2, 1})), Partition({2, 1}));
    EXPECT_EQ(conjugate(Partition({1, 1, 1})), Partition({3}));
    EXPECT_EQ(conjugate(Partition({4, 2, 1})), Partition({3, 2, 1, 1}));
}

TEST(Partition, EnumerationCountsAndOrder) {
    for (int n = 1; n <= 12; ++n) {
        const auto all = partitions_of(n);
        ASSERT_EQ(all.size(), static_cast<std::size_t>(kPartitionCounts[n]));
        for (std::size_t i = 0; i + 1 < all.size(); ++i) {
            ASSERT_GT(all[i].parts(), all[i + 1].parts());
        }
    }
    EXPECT_EQ(partitions_of(3), (std::vector<Partition>{Partition({3}), Partition({2, 1}), Partition({1, 1, 1})}));
}

TEST(Partition, ConjugateMatchesDiagramOracleAndIsInvolutive) {
    for (int n = 1; n <= 12; ++n) {
        for (const auto& sigma : partitions_of(n)) {
            ASSERT_EQ(conjugate(sigma), diagram_conjugate(sigma));
            ASSERT_EQ(conjugate(conjugate(sigma)), sigma);
        }
    }
}

TEST(Partition, Dominance) {
    EXPECT_TRUE(dominates(Partition({3}), Partition({2, 1})));
    EXPECT_TRUE(dominates(Partition({2, 1}), Partition({1, 1, 1})));
    EXPECT_FALSE(dominates(Partition({2, 1}), Partition({3})));
    EXPECT_FALSE(dominates(Partition({3, 1, 1, 1}), Partition({2, 2, 2})));
    EXPECT_FALSE(dominates(Partition({2, 2, 2}), Partition({3, 1, 1, 1})));
    EXPECT_THROW(dominates(Partition({2}), Partition({2, 1})), InputError);
}

TEST(Sheets, ClassifyExamples) {
    const auto zero = classify_sheet(RationalMatrix(3));
    EXPECT_EQ(zero.sigma, Partition({1, 1, 1}));
    EXPECT_EQ(zero.orbit_dim, 0);
    EXPECT_EQ(zero.quotient_dim, 0);
    const auto reg = classify_sheet(J(3));
    EXPECT_EQ(reg.sigma, Partition({3}));
    EXPECT_EQ(reg.orbit_dim, 6);
    EXPECT_EQ(reg.quotient_dim, 2);
    const auto sub = classify_sheet(E(3, 0, 1));
    EXPECT_EQ(sub.sigma, Partition({2, 1}));
    EXPECT_EQ(sub.conjugate, Partition({2, 1}));
    EXPECT_EQ(sub.orbit_dim, 4);
    EXPECT_EQ(sub.quotient_dim, 1);
    EXPECT_EQ(classify_sheet(M({{-2, 0, 0}, {0, 1, 0}, {0, 0, 1}})).sigma, Partition({2, 1}));
    EXPECT_THROW(classify_sheet(M({{1, 0}, {0, 0}}, Ambient::gl)), TraceError);
}

TEST(Sheets, NilpotentRepresentativeExamples) {
    EXPECT_EQ(nilpotent_representative(Partition({2})), M({{0, 1}, {0, 0}}));
    EXPECT_EQ(nilpotent_representative(Partition({1, 1})), RationalMatrix(2));
    EXPECT_EQ(nilpotent_representative(Partition({2, 1})), E(3, 0, 1));
    EXPECT_EQ(nilpotent_representative(Partition({3})), J(3));
}

TEST(Sheets, EnumerateExamples) {
    const auto two = enumerate_sheets(2);
    ASSERT_EQ(two.size(), 2U);
    EXPECT_EQ(two[0].sigma, Partition({2}));
    EXPECT_EQ(two[1].sigma, Partition({1, 1}));
    EXPECT_EQ(enumerate_sheets(3).size(), 3U);
    EXPECT_EQ(enumerate_sheets(4).size(), 5U);
}

TEST(Sheets, NilpotentClassificationUpToSix) {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& sigma : partitions_of(n)) {
            const auto x = nilpotent_representative(sigma);
            const auto prof = gcd_minor_profile(x);
            for (std::size_t i = 1; i <= static_cast<std::size_t>(n); ++i) {
                ASSERT_EQ(prof.q(i), t_pow(static_cast<std::size_t>(sigma.part(i))));
            }
            ASSERT_EQ(classify_sheet(x).sigma, sigma);
        }
    }
}

TEST(SheetsProperty, DescriptorInvariants) {
    for (int n = 1; n <= 10; ++n) {
        for (const auto& sigma : partitions_of(n)) {
            const auto d = describe_sheet(sigma);
            ASSERT_EQ(d.orbit_dim % 2, 0);
            ASSERT_EQ(d.quotient_dim, sigma.part(1) - 1);
            ASSERT_GE(d.quotient_dim, 0);
            ASSERT_EQ(d.conjugate, conjugate(sigma));
        }
    }
}

TEST(SheetsProperty, OrbitDimMatchesKernelOfAd) {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& sigma : partitions_of(n)) {
            const auto x = nilpotent_representative(sigma);
            const int brute = n * n - static_cast<int>(centralizer(x, Ambient::gl).dimension());
            ASSERT_EQ(describe_sheet(sigma).orbit_dim, brute) << sigma.to_string();
        }
    }
}

TEST(SheetsProperty, SheetSamplesClassifyToTheirSheet) {
    Rng rng(41);
    for (int n = 1; n <= 4; ++n) {
        for (const auto& sigma : partitions_of(n)) {
            for (int s = 0; s < 10; ++s) {
                const auto x = random_sheet_sample(sigma, rng);
                const auto d = classify_sheet(x);
                ASSERT_EQ(d, describe_sheet(sigma));
                ASSERT_EQ(static_cast<int>(centralizer(x, Ambient::gl).dimension()), n * n - d.orbit_dim);
            }
        }
    }
}
