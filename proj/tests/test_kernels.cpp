#include "valpred/errors.hpp"
#include "valpred/kernels.hpp"
#include "valpred/nonresponse.hpp"
#include "valpred/rng.hpp"

#include <gtest/gtest.h>
#include <omp.h>


using namespace valpred;

TEST(Philox, KnownAnswerVectors)
{
    // Random123 philox4x32_10 known-answer tests; the seed packs the two key words.
    EXPECT_EQ(Philox4x32(0).block({0, 0, 0, 0}),
              (Philox4x32::Block{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u}));
    EXPECT_EQ(Philox4x32(0xffffffffffffffffull).block({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu}),
              (Philox4x32::Block{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu}));
    EXPECT_EQ(Philox4x32(0x299f31d0a4093822ull).block({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u}),
              (Philox4x32::Block{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u}));
    EXPECT_EQ(Philox4x32(0)(0), Philox4x32(0).block({0, 0, 0, 0}));
}

TEST(Philox, DeterministicAndUnitInterval)
{
    const Philox4x32 a(123), b(123), c(124);
    for (std::uint64_t i = 0; i < 1000; ++i) {
        EXPECT_EQ(a(i), b(i));
        EXPECT_NE(a(i), c(i));
        for (double u : a.uniform2(i)) {
            EXPECT_GE(u, 0.0);
            EXPECT_LT(u, 1.0);
        }
    }
    EXPECT_EQ(Philox4x32::to_unit(0xffffffffu, 0xffffffffu), 1.0 - 0x1.0p-53);
}

class KernelAgreement : public ::testing::TestWithParam<int> {};

TEST_P(KernelAgreement, OmpMatchesReferenceBitwise)
{
    omp_set_num_threads(GetParam());
    for (int n : {1, 10, 1000}) {
        for (double lambda : {1.0, 10.0}) {
            const auto m = binomial_flat_joint({lambda, n});
            for (double alpha : {0.001, 0.05, 0.3, 0.5, 0.7, 0.999}) {
                EXPECT_EQ(omp::miscoverage_at(m, alpha), reference::miscoverage_at(m, alpha));
                EXPECT_EQ(omp::set_miscoverage(m, alpha), reference::set_miscoverage(m, alpha));
            }
            const auto a = omp::attained_values(m);
            const auto b = reference::attained_values(m);
            ASSERT_EQ(a.size(), b.size());
            for (std::size_t i = 0; i < a.size(); ++i) {
                EXPECT_EQ(a[i].value, b[i].value);
                EXPECT_EQ(a[i].mass, b[i].mass);
                EXPECT_EQ(a[i].x_index, b[i].x_index);
            }
            EXPECT_EQ(omp::monte_carlo_misses(m, 0.05, 20000, 99), reference::monte_carlo_misses(m, 0.05, 20000, 99));
        }
    }
    PollData poll{1000, {{"C", 475}, {"T", 425}}, 100};
    const auto ens = imputation_ensemble(poll, {10.0, 1000}, 3);
    const auto upper = ens.upper_table();
    for (const auto& m : ens.members()) {
        EXPECT_EQ(omp::plausibility_set_miscoverage(m, upper, 0.05),
                  reference::plausibility_set_miscoverage(m, upper, 0.05));
    }
    omp_set_num_threads(omp_get_num_procs());
}

INSTANTIATE_TEST_SUITE_P(Threads, KernelAgreement, ::testing::Values(1, 2, 3, 8));

TEST(Kernels, AttainedValuesSortedWithMassSummingToOne)
{
    const auto m = binomial_flat_joint({10.0, 100});
    const auto v = omp::attained_values(m);
    double total = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        total += v[i].mass;
        if (i > 0) {
            EXPECT_LE(v[i - 1].value, v[i].value);
        }
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(Kernels, EnumerationLimit)
{
    EXPECT_NO_THROW(check_enumerable(kMaxEnumerationPairs));
    EXPECT_THROW(check_enumerable(kMaxEnumerationPairs + 1), EnumerationSizeError);
}

TEST(Kernels, UpperTableShapeChecked)
{
    const auto m = binomial_flat_joint({10.0, 10});
    UpperTable wrong{2, std::vector<double>(4, 1.0)};
    EXPECT_THROW(omp::plausibility_set_miscoverage(m, wrong, 0.05), InputError);
    EXPECT_THROW(reference::plausibility_set_miscoverage(m, wrong, 0.05), InputError);
}

TEST(Kernels, MonteCarloTrialIndependentOfBatching)
{
    // Splitting the trial range must not change which trials miss.
    const auto m = binomial_flat_joint({10.0, 100});
    const auto tables = detail::build_sampling_tables(m);
    std::uint64_t first_half = 0, second_half = 0;
    for (std::uint64_t t = 0; t < 5000; ++t) first_half += detail::trial_misses(m, tables, 0.2, 5, t);
    for (std::uint64_t t = 5000; t < 10000; ++t) second_half += detail::trial_misses(m, tables, 0.2, 5, t);
    EXPECT_EQ(first_half + second_half, reference::monte_carlo_misses(m, 0.2, 10000, 5));
}
