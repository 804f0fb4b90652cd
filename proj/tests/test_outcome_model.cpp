#include "valpred/errors.hpp"
#include "valpred/outcome_model.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace valpred;

namespace {

double round3(double v)
{
    return std::nearbyint(v * 1000.0) / 1000.0;
}

} // namespace

TEST(OutcomeSpace, SortsLabelsAndRejectsBadInput)
{
    OutcomeSpace s({"T", "C", "Z"});
    EXPECT_EQ(s.labels(), (std::vector<Label>{"C", "T", "Z"}));
    EXPECT_EQ(s.index_of("T"), 1u);
    EXPECT_FALSE(s.contains("Q"));
    EXPECT_THROW(s.index_of("Q"), InputError);
    EXPECT_THROW(OutcomeSpace({"C"}), InputError);
    EXPECT_THROW(OutcomeSpace({"C", "C"}), InputError);
    EXPECT_THROW(OutcomeSpace({"C", ""}), InputError);
}

TEST(OutcomeSpace, MaskRoundTrip)
{
    OutcomeSpace s({"a", "b", "c", "d"});
    for (std::uint64_t m = 0; m <= s.full_mask(); ++m) {
        EXPECT_EQ(s.mask_of(s.labels_of(m)), m);
    }
}

TEST(PollData, CountsIdentity)
{
    PollData ok{1000, {{"C", 475}, {"T", 425}}, 100};
    EXPECT_NO_THROW(ok.validate());
    PollData bad{1000, {{"C", 475}, {"T", 425}}, 0};
    EXPECT_THROW(bad.validate(), InputError);
    PollData negative{0, {{"C", -1}, {"T", 1}}, 0};
    EXPECT_THROW(negative.validate(), InputError);
}

TEST(PredictiveDistribution, RequiresFullNormalisedCoverage)
{
    auto s = binary_space();
    EXPECT_NO_THROW(PredictiveDistribution(s, std::vector<double>{0.3, 0.7}));
    EXPECT_THROW(PredictiveDistribution(s, std::vector<double>{0.3, 0.6}), InputError);
    EXPECT_THROW(PredictiveDistribution(s, std::vector<double>{1.0}), InputError);
    EXPECT_THROW(PredictiveDistribution(s, std::map<Label, double>{{"C", 1.0}}), InputError);
    EXPECT_THROW(PredictiveDistribution(s, std::vector<double>{-0.1, 1.1}), InputError);
    PredictiveDistribution d(s, std::map<Label, double>{{"T", 0.25}, {"C", 0.75}});
    EXPECT_DOUBLE_EQ(d.prob("T"), 0.25);
}

TEST(JointModel, ValidatesShape)
{
    auto s = binary_space();
    PredictiveDistribution half(s, std::vector<double>{0.5, 0.5});
    EXPECT_THROW(JointModel(s, {0, 1}, {0.5, 0.4}, {half, half}), InputError);
    EXPECT_THROW(JointModel(s, {1, 0}, {0.5, 0.5}, {half, half}), InputError);
    EXPECT_THROW(JointModel(s, {0, 1}, {0.5, 0.5}, {half}), InputError);
    JointModel m(s, {3, 7}, {0.5, 0.5}, {half, half});
    EXPECT_EQ(m.index_of(7), 1u);
    EXPECT_THROW(m.index_of(5), InputError);
}

TEST(LogisticRule, WorkedExampleAt470)
{
    auto pi = logistic_rule(0.47, {10.0, 1000});
    EXPECT_DOUBLE_EQ(round3(pi.prob("T")), 0.426);
    EXPECT_DOUBLE_EQ(round3(pi.prob("C")), 0.574);
}

TEST(LogisticRule, HalfIsSymmetricForAnyLambda)
{
    for (double lambda : {0.1, 1.0, 10.0, 250.0}) {
        auto pi = logistic_rule(0.5, {lambda, 10});
        EXPECT_EQ(pi.prob("T"), 0.5);
        EXPECT_EQ(pi.prob("C"), 0.5);
    }
}

TEST(LogisticRule, UpperImputationExtreme)
{
    EXPECT_DOUBLE_EQ(round3(logistic_rule(0.525, {10.0, 1000}).prob("T")), 0.562);
}

TEST(LogisticRule, SixtyPercentMatchesHighPrecisionValue)
{
    // e / (1 + e), 30 significant digits from an arbitrary-precision evaluation.
    EXPECT_NEAR(logistic_rule(0.6, {10.0, 1000}).prob("T"), 0.731058578630004879251159241822, 2e-16);
}

TEST(LogisticRule, DomainErrors)
{
    EXPECT_THROW(logistic_rule(-0.01, {10.0, 10}), DomainError);
    EXPECT_THROW(logistic_rule(1.01, {10.0, 10}), DomainError);
    EXPECT_THROW(logistic_rule(0.5, {0.0, 10}), DomainError);
    EXPECT_THROW(logistic_rule(0.5, {-1.0, 10}), DomainError);
    EXPECT_THROW(logistic_rule(0.5, {10.0, 0}), DomainError);
}

TEST(LogisticRule, ComplementMonotoneAndSymmetricProperties)
{
    std::mt19937_64 gen(20161108);
    std::uniform_real_distribution<double> theta(0.0, 1.0);
    std::uniform_real_distribution<double> lam(0.1, 40.0);
    for (int i = 0; i < 2000; ++i) {
        const double l = lam(gen);
        double a = theta(gen);
        double b = theta(gen);
        if (a > b) std::swap(a, b);
        const auto pa = logistic_rule(a, {l, 100});
        const auto pb = logistic_rule(b, {l, 100});
        EXPECT_EQ(pa.prob("C"), 1.0 - pa.prob("T"));
        if (b - a > 1e-9) {
            EXPECT_LT(pa.prob("T"), pb.prob("T")) << a << " " << b << " lambda=" << l;
        }
        const auto mirror = logistic_rule(1.0 - a, {l, 100});
        EXPECT_NEAR(pa.prob("T"), mirror.prob("C"), 1e-15);
    }
}

TEST(LogisticRule, CustomLabels)
{
    auto pi = logistic_rule(0.6, {10.0, 10}, {"yes", "no"});
    EXPECT_EQ(pi.space().labels(), (std::vector<Label>{"no", "yes"}));
    EXPECT_GT(pi.prob("yes"), 0.5);
}

TEST(BinomialFlatJoint, UniformMarginal)
{
    auto m = binomial_flat_joint({10.0, 4});
    ASSERT_EQ(m.data_size(), 5u);
    for (double w : m.marginal()) {
        EXPECT_DOUBLE_EQ(w, 0.2);
    }
    auto big = binomial_flat_joint({10.0, 1000});
    double sum = 0.0;
    for (double w : big.marginal()) sum += w;
    EXPECT_NEAR(sum, 1.0, 1e-12);
    EXPECT_DOUBLE_EQ(round3(big.conditional(470).prob("T")), 0.426);
}

TEST(BinomialFlatJoint, TwoVoterTable)
{
    // Logistic rule hand-evaluated at theta in {0, 1/2, 1} to 20 digits.
    const double low = 0.0066928509242848555594;
    const double high = 0.99330714907571514444;
    auto m = binomial_flat_joint({10.0, 2});
    EXPECT_NEAR(m.conditional(0).prob("T"), low, 1e-17);
    EXPECT_NEAR(m.conditional(0).prob("C"), high, 2.3e-16);
    EXPECT_EQ(m.conditional(1).prob("T"), 0.5);
    EXPECT_EQ(m.conditional(1).prob("C"), 0.5);
    EXPECT_NEAR(m.conditional(2).prob("T"), high, 2.3e-16);
    // Complements carry the rounding of 1 - p.
    EXPECT_NEAR(m.conditional(2).prob("C"), low, 2.3e-16);
}

TEST(ThetaHat, ImputationAndErrors)
{
    PollData poll{1000, {{"C", 475}, {"T", 425}}, 100};
    EXPECT_DOUBLE_EQ(theta_hat(poll, "T", 0), 0.425);
    EXPECT_DOUBLE_EQ(theta_hat(poll, "T", 100), 0.525);
    PollData full{1000, {{"C", 530}, {"T", 470}}, 0};
    EXPECT_DOUBLE_EQ(theta_hat(full, "T", 0), 0.47);
    EXPECT_THROW(theta_hat(poll, "Z", 0), InputError);
    EXPECT_THROW(theta_hat(poll, "T", 101), DomainError);
    EXPECT_THROW(theta_hat(poll, "T", -1), DomainError);
}
