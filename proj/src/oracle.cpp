#include "sjslab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "sjslab/quadrature.hpp"

namespace sjslab {

namespace {

void fill_grid(double tau, int n, Eigen::VectorXd& nodes, Eigen::VectorXd& weights) {
    const GaussLegendreRule& rule = gauss_legendre(n);
    nodes.resize(n);
    weights.resize(n);
    for (int i = 0; i < n; ++i) {
        nodes[i] = tau * rule.nodes[i];
        weights[i] = tau * rule.weights[i];
    }
}

} // namespace

DiscretizedOperator discretized_aj(double omega, double tau, int n) {
    if (n < 16) throw invalid_parameter("discretized_aj: need at least 16 nodes");
    if (!(omega > 0.0) || !(tau > 0.0))
        throw invalid_parameter("discretized_aj: omega and tau must be > 0");
    DiscretizedOperator op;
    fill_grid(tau, n, op.nodes, op.weights);
    op.matrix.resize(n, n);
    Eigen::VectorXd sqw = op.weights.cwiseSqrt();
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const double s = std::sin(omega * (op.nodes[k] - op.nodes[i])) / omega;
            op.matrix(i, k) = std::complex<double>(0.0, s) * (sqw[i] * sqw[k]);
        }
    return op;
}

DiscretizedOperator discretized_tj(const ModeConstants& mc_tau, double tau_inner, int n) {
    if (n < 16) throw invalid_parameter("discretized_tj: need at least 16 nodes");
    if (!(tau_inner > 0.0) || !(tau_inner < mc_tau.tau))
        throw invalid_parameter("discretized_tj: need 0 < tau_inner < tau");
    DiscretizedOperator op;
    fill_grid(tau_inner, n, op.nodes, op.weights);
    op.matrix.resize(n, n);
    const double d = mc_tau.delta;
    const double w = mc_tau.omega;
    Eigen::VectorXd sqw = op.weights.cwiseSqrt();
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const double value =
                0.5 * w * d *
                (std::sin(w * op.nodes[i]) * std::sin(w * op.nodes[k]) / (1.0 - d) -
                 std::cos(w * op.nodes[i]) * std::cos(w * op.nodes[k]));
            op.matrix(i, k) = std::complex<double>(value, 0.0) * (sqw[i] * sqw[k]);
        }
    return op;
}

AjOracleResult analyze_discretized_aj(double omega, double tau, int n) {
    const DiscretizedOperator op = discretized_aj(omega, tau, n);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(op.matrix);
    const Eigen::VectorXd& eig = solver.eigenvalues(); // ascending

    AjOracleResult result;
    result.eigenvalue_top = eig[n - 1];
    result.eigenvalue_bottom = eig[0];

    const ModeConstants mc = mode_constants(omega, tau);
    result.eigenvalue_rel_dev =
        std::max(std::abs(result.eigenvalue_top - mc.lambda_plus),
                 std::abs(result.eigenvalue_bottom + mc.lambda_plus)) /
        mc.lambda_plus;

    Eigen::VectorXd abs_sorted = eig.cwiseAbs();
    std::sort(abs_sorted.data(), abs_sorted.data() + n, std::greater<double>());
    result.third_singular_ratio = abs_sorted[2] / abs_sorted[0];

    // overlap of the discrete top eigenvector with the sampled phi+
    Eigen::VectorXcd sampled(n);
    for (int i = 0; i < n; ++i)
        sampled[i] = std::sqrt(op.weights[i]) *
                     (std::complex<double>(std::cos(omega * op.nodes[i]),
                                           -std::sin(omega * op.nodes[i])) +
                      std::complex<double>(0.0, mc.delta * std::sin(omega * op.nodes[i])));
    const Eigen::VectorXcd top = solver.eigenvectors().col(n - 1);
    result.eigvec_overlap = std::abs(top.dot(sampled)) / (top.norm() * sampled.norm());

    // spectral projection onto the positive part above the numerical-rank floor
    const double rank_tol = static_cast<double>(n) *
                            std::numeric_limits<double>::epsilon() * abs_sorted[0];
    Eigen::MatrixXcd positive = Eigen::MatrixXcd::Zero(n, n);
    Eigen::MatrixXcd projector = Eigen::MatrixXcd::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        if (eig[k] > rank_tol) {
            const Eigen::VectorXcd v = solver.eigenvectors().col(k);
            positive.noalias() += eig[k] * v * v.adjoint();
            projector.noalias() += v * v.adjoint();
        }
    }
    result.projector_defect = (projector * projector - projector).cwiseAbs().maxCoeff();

    double max_dev = 0.0;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const std::complex<double> reconstructed =
                positive(i, k) / std::sqrt(op.weights[i] * op.weights[k]);
            max_dev = std::max(max_dev,
                               std::abs(reconstructed - aj_plus_kernel(mc, op.nodes[i],
                                                                       op.nodes[k])));
        }
    result.positive_kernel_max_dev = max_dev;

    // positivity probe: Rayleigh quotients of the projected operator
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double min_rayleigh = 0.0;
    for (int probe = 0; probe < 16; ++probe) {
        Eigen::VectorXcd x(n);
        for (int i = 0; i < n; ++i) x[i] = std::complex<double>(gauss(rng), gauss(rng));
        x.normalize();
        min_rayleigh = std::min(min_rayleigh, std::real(x.dot(positive * x)));
    }
    result.min_projected_eigenvalue = min_rayleigh;
    return result;
}

std::pair<double, double> discretized_tj_extremes(const ModeConstants& mc_tau,
                                                  double tau_inner, int n) {
    const DiscretizedOperator op = discretized_tj(mc_tau, tau_inner, n);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(op.matrix,
                                                           Eigen::EigenvaluesOnly);
    return {solver.eigenvalues()[0], solver.eigenvalues()[n - 1]};
}

double saturation_defect(const ModeConstants& mc, double f_on_c, double f_on_s) {
    const double a = f_on_c, b = f_on_s;
    if (a == 0.0 && b == 0.0)
        throw invalid_parameter("saturation_defect: f must be nonzero");
    const double nc2 = mc.norm_c2;
    const double ns2 = mc.norm_s2;
    const double lambda = mc.lambda_plus;
    const double sig_scale = nc2 * ns2 / mc.omega;

    const auto mu = [&](double pa, double pb, double qa, double qb) {
        return 0.5 * lambda * (pa * qa * nc2 + pb * qb * ns2);
    };
    const auto ratio = [&](double theta) {
        const double c = std::cos(theta), d = std::sin(theta);
        const double sigma = sig_scale * (a * d - b * c);
        return sigma * sigma / (4.0 * mu(c, d, c, d));
    };

    // coarse scan over half a period (the ratio has period pi), then
    // golden-section refinement around the best grid point
    constexpr int kGrid = 256;
    double best_theta = 0.0, best = -1.0;
    for (int i = 0; i < kGrid; ++i) {
        const double theta = M_PI * i / kGrid;
        const double r = ratio(theta);
        if (r > best) {
            best = r;
            best_theta = theta;
        }
    }
    const double step = M_PI / kGrid;
    double lo = best_theta - step, hi = best_theta + step;
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = ratio(x1), f2 = ratio(x2);
    for (int iter = 0; iter < 80; ++iter) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = ratio(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = ratio(x1);
        }
    }
    const double sup = std::max(f1, f2);
    const double target = mu(a, b, a, b);
    return std::abs(sup - target) / target;
}

double saturation_purity_check(const ModeConstants& mc, int trials, std::uint64_t seed) {
    if (trials < 1) throw invalid_parameter("saturation_purity_check: trials must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    double worst = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
        const double phi = angle(rng);
        worst = std::max(worst, saturation_defect(mc, std::cos(phi), std::sin(phi)));
    }
    return worst;
}

namespace {

// tensor-product quadrature of f(t) f(t') K(t,t') over the support square,
// checked by doubling the per-axis order
double double_quadrature_normord(const ModeConstants& mc, const TemporalTestFunction& f) {
    const double lo = f.support_lo(), hi = f.support_hi();
    double prev = 0.0;
    for (int n = 64; n <= 1024; n *= 2) {
        const GaussLegendreRule& rule = gauss_legendre(n);
        std::vector<double> t(n), wf(n);
        for (int i = 0; i < n; ++i) {
            t[i] = 0.5 * (lo + hi) + 0.5 * (hi - lo) * rule.nodes[i];
            wf[i] = 0.5 * (hi - lo) * rule.weights[i] * f(t[i]);
        }
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            double inner = 0.0;
            for (int k = 0; k < n; ++k)
                inner += wf[k] * normord_kernel(mc, t[i], t[k]).real();
            sum += wf[i] * inner;
        }
        if (n > 64 && std::abs(sum - prev) <= 1e-11 * std::max(1.0, std::abs(sum)))
            return sum;
        prev = sum;
    }
    return prev;
}

} // namespace

LimitTauResult limit_tau_check(double omega, const TemporalTestFunction& f,
                               std::span<const double> tau_schedule) {
    if (!(omega > 0.0)) throw invalid_parameter("limit_tau_check: omega must be > 0");
    LimitTauResult result;
    double err_minus = 0.0, err_plus = 0.0;
    for (double tau : tau_schedule) {
        if (f.support_lo() <= -tau || f.support_hi() >= tau)
            throw domain_error("limit_tau_check: support must fit inside every slab");
        const ModeConstants mc = mode_constants(omega, tau);
        LimitTauPoint point;
        point.tau = tau;
        point.kernel_value = double_quadrature_normord(mc, f);
        const double cf = cosine_transform(f, omega);
        const double sf = sine_transform(f, omega);
        const double base = mc.delta / (2.0 * omega);
        point.transform_minus = base * (cf * cf / (1.0 - mc.delta) - sf * sf);
        point.transform_plus = base * (cf * cf / (1.0 - mc.delta) + sf * sf);
        err_minus += std::abs(point.kernel_value - point.transform_minus);
        err_plus += std::abs(point.kernel_value - point.transform_plus);
        result.points.push_back(point);
    }
    if (err_minus < 0.1 * err_plus)
        result.matched_sign = -1;
    else if (err_plus < 0.1 * err_minus)
        result.matched_sign = +1;
    return result;
}

DominatedConvergenceBound dominated_convergence_bound(const TemporalTestFunction& f,
                                                      double mass,
                                                      std::span<const double> omega_grid,
                                                      int order) {
    if (omega_grid.empty())
        throw invalid_parameter("dominated_convergence_bound: empty omega grid");
    DominatedConvergenceBound bound;
    std::vector<double> product(omega_grid.size());
    for (std::size_t i = 0; i < omega_grid.size(); ++i) {
        const double w = omega_grid[i];
        product[i] = std::pow(w * w + mass * mass, order) *
                     std::abs(cosine_transform(f, w));
    }
    const auto peak = std::max_element(product.begin(), product.end());
    const std::size_t peak_idx = static_cast<std::size_t>(peak - product.begin());
    bound.fitted_const = *peak;
    bound.peak_omega = omega_grid[peak_idx];
    bound.peak_interior = peak_idx > 0 && peak_idx + 1 < product.size();
    const std::size_t tail_start = product.size() - std::max<std::size_t>(1, product.size() / 5);
    bound.tail_max = *std::max_element(product.begin() + tail_start, product.end());
    bound.tail_decayed = bound.tail_max <= 0.5 * bound.fitted_const;
    return bound;
}

} // namespace sjslab
