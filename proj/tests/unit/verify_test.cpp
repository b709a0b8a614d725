#include <gtest/gtest.h>

#include "maxnorm/verify.hpp"

namespace maxnorm {
namespace {

TEST(Verification, RandomSuitePasses) {
    const VerifyReport report = run_verification({200, 10, 17});
    EXPECT_EQ(report.trials, 200U);
    EXPECT_TRUE(report.ok());
    EXPECT_GT(report.steps, 0U);
    for (const auto& f : report.failures) {
        ADD_FAILURE() << f;
    }
}

TEST(Verification, SingleInstanceCountsSteps) {
    LabelingProblem p;
    p.num_vars = 2;
    p.unary = {{{0.9, 0.1}}, {{0.2, 0.8}}};
    p.pairwise = {{1, 2, {0.3, 0.4, 0.95, 0.5}}};
    std::vector<std::string> failures;
    std::size_t steps = 0;
    EXPECT_TRUE(verify_instance(p, failures, &steps));
    EXPECT_TRUE(failures.empty());
    EXPECT_EQ(steps, 8U);
}

}  // namespace
}  // namespace maxnorm
