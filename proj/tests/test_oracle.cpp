#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "sjslab/errors.hpp"
#include "sjslab/oracle.hpp"

using namespace sjslab;

TEST_CASE("discretized_aj: hermitian, rank 2, quarter-period eigenvalue") {
    const DiscretizedOperator op = discretized_aj(M_PI / 2.0, 1.0, 301);
    CHECK((op.matrix - op.matrix.adjoint()).cwiseAbs().maxCoeff() <= 1e-13);

    const AjOracleResult result = analyze_discretized_aj(M_PI / 2.0, 1.0, 1001);
    CHECK(result.eigenvalue_top == doctest::Approx(2.0 / M_PI).epsilon(1e-8));
    CHECK(result.third_singular_ratio <= 1e-8);
    CHECK(result.eigvec_overlap >= 1.0 - 1e-8);

    CHECK_THROWS_AS(discretized_aj(1.0, 1.0, 8), invalid_parameter);
    CHECK_THROWS_AS(discretized_aj(-1.0, 1.0, 32), invalid_parameter);
}

TEST_CASE("discretized_aj: positive part reproduces the closed-form kernel") {
    // delta = 0 case: the positive part must match the ground-state kernel
    const AjOracleResult flat = analyze_discretized_aj(M_PI / 2.0, 1.0, 501);
    CHECK(flat.positive_kernel_max_dev <= 1e-7);

    // generic case
    const AjOracleResult generic = analyze_discretized_aj(1.0, 1.0, 501);
    CHECK(generic.positive_kernel_max_dev <= 1e-7);
    CHECK(generic.projector_defect <= 1e-10);
    CHECK(generic.min_projected_eigenvalue >= -1e-10);
}

TEST_CASE("discretized_aj: quadrature convergence of the eigenvalues") {
    // grid chosen at the resolution threshold: doubling must gain >= 10x
    const double omega = 60.0, tau = 10.0;
    const AjOracleResult coarse = analyze_discretized_aj(omega, tau, 520);
    const AjOracleResult fine = analyze_discretized_aj(omega, tau, 1040);
    CHECK(coarse.eigenvalue_rel_dev >=
          10.0 * std::max(fine.eigenvalue_rel_dev, 1e-14));

    // positive-part deviation also shrinks under doubling while unconverged
    const AjOracleResult k1 = analyze_discretized_aj(40.0, 2.0, 63);
    const AjOracleResult k2 = analyze_discretized_aj(40.0, 2.0, 127);
    CHECK(k2.positive_kernel_max_dev < k1.positive_kernel_max_dev);
}

TEST_CASE("discretized_aj: randomized closed-form agreement") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> log_wt(std::log(0.5), std::log(50.0));
    std::uniform_real_distribution<double> tau_pick(0.5, 4.0);
    for (int trial = 0; trial < 20; ++trial) {
        const double tau = tau_pick(rng);
        const double omega = std::exp(log_wt(rng)) / tau;
        const AjOracleResult result = analyze_discretized_aj(omega, tau, 501);
        CHECK(result.eigenvalue_rel_dev <= 1e-8);
        CHECK(result.third_singular_ratio <= 1e-8);
    }
}

TEST_CASE("discretized_tj: extreme eigenvalues match the closed form") {
    const ModeConstants mc = mode_constants(1.0, 1.0);
    const TjEigenvalues tj = tj_eigenvalues(mc, 0.5);
    const auto [lo, hi] = discretized_tj_extremes(mc, 0.5, 801);
    const double scale = std::max(std::abs(tj.on_c), std::abs(tj.on_s));
    // delta < 0 here, so the C-branch is the positive extreme
    CHECK(std::abs(lo - std::min(tj.on_c, tj.on_s)) <= 1e-8 * scale);
    CHECK(std::abs(hi - std::max(tj.on_c, tj.on_s)) <= 1e-8 * scale);
}

TEST_CASE("saturation: distinguished directions, homogeneity, random modes") {
    const ModeConstants mc = mode_constants(1.0, 1.0);
    // f = C: the supremum is attained along S (and vice versa)
    CHECK(saturation_defect(mc, 1.0, 0.0) <= 1e-10);
    CHECK(saturation_defect(mc, 0.0, 1.0) <= 1e-10);

    // f -> 2f scales ratio and mu by exactly 4: identical defect
    CHECK(saturation_defect(mc, 0.6, -0.3) == saturation_defect(mc, 1.2, -0.6));

    CHECK(saturation_purity_check(mc, 8) <= 1e-10);

    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> tau_pick(0.5, 5.0);
    std::uniform_real_distribution<double> log_wt(std::log(0.5), std::log(50.0));
    for (int trial = 0; trial < 5; ++trial) {
        const double tau = tau_pick(rng);
        const double omega = std::exp(log_wt(rng)) / tau;
        CHECK(saturation_purity_check(mode_constants(omega, tau), 4) <= 1e-10);
    }
}

TEST_CASE("limit_tau_check: kernel decay and sign of the transform expression") {
    const std::vector<double> schedule{2.0, 5.0, 10.0, 20.0, 50.0, 100.0};
    const TemporalTestFunction f = TemporalTestFunction::bump(1.0);
    const LimitTauResult result = limit_tau_check(1.0, f, schedule);
    REQUIRE(result.points.size() == schedule.size());
    for (std::size_t i = 1; i < result.points.size(); ++i)
        CHECK(std::abs(result.points[i].kernel_value) <
              std::abs(result.points[i - 1].kernel_value));
    CHECK(std::abs(result.points.back().kernel_value) <=
          0.05 * std::abs(result.points.front().kernel_value));
    // symmetric f: the sine term vanishes and the conventions tie
    CHECK(result.matched_sign == 0);
    for (const LimitTauPoint& point : result.points) {
        CHECK(point.transform_minus == point.transform_plus);
        CHECK(std::abs(point.kernel_value - point.transform_minus) <= 1e-10);
    }

    // an off-centre bump has a nonzero sine transform and resolves the sign
    const TemporalTestFunction skew = TemporalTestFunction::bump(0.6).shifted(0.9);
    const LimitTauResult resolved = limit_tau_check(1.3, skew, schedule);
    CHECK(resolved.matched_sign == -1);

    CHECK_THROWS_AS(limit_tau_check(1.0, f, std::vector<double>{0.5, 2.0}),
                    sjslab::domain_error);
}

TEST_CASE("dominated_convergence_bound: interior peak and decayed tail") {
    const TemporalTestFunction f = TemporalTestFunction::bump(1.0);
    std::vector<double> grid;
    for (double w = 1.0; w <= 200.0; w += 1.0) grid.push_back(w);
    const DominatedConvergenceBound bound = dominated_convergence_bound(f, 1.0, grid, 2);
    CHECK(bound.peak_interior);
    CHECK(bound.tail_decayed);
    CHECK(bound.peak_omega == doctest::Approx(39.0).epsilon(0.1));
    CHECK(bound.fitted_const > 0.0);
    CHECK_THROWS_AS(dominated_convergence_bound(f, 1.0, std::vector<double>{}, 2),
                    invalid_parameter);
}
