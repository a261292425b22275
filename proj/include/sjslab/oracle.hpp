/*
 * oracle.hpp — independent brute-force validation of the closed forms.
 *
 * Mode kernels are discretised in symmetrised Nystrom form on Gauss-Legendre
 * grids, M_ik = sqrt(w_i) K(t_i, t_k) sqrt(w_k), and diagonalised with Eigen.
 * None of the checks here reuse the closed-form eigen data they verify; the
 * only shared inputs are the kernels themselves.
 */

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <vector>

#include "sjslab/slab_modes.hpp"
#include "sjslab/smearing.hpp"

namespace sjslab {

struct DiscretizedOperator {
    Eigen::VectorXd nodes;   // Gauss-Legendre nodes on (-tau, tau)
    Eigen::VectorXd weights;
    Eigen::MatrixXcd matrix; // sqrt(w_i) K(t_i, t_k) sqrt(w_k)
};

// Commutator-mode kernel i sin(omega (t'-t)) / omega on (-tau, tau).
DiscretizedOperator discretized_aj(double omega, double tau, int n);

// Normal-ordered curvature kernel on the inner slab: delta from tau,
// (omega delta / 2) ( sin sin' / (1-delta) - cos cos' ).
DiscretizedOperator discretized_tj(const ModeConstants& mc_tau, double tau_inner, int n);

struct AjOracleResult {
    double eigenvalue_top = 0.0;       // largest eigenvalue of the discretisation
    double eigenvalue_bottom = 0.0;    // smallest (mirror) eigenvalue
    double eigenvalue_rel_dev = 0.0;   // worst relative deviation from +-||S||||C||/omega
    double third_singular_ratio = 0.0; // 3rd largest |eigenvalue| / largest
    double eigvec_overlap = 0.0;       // |<v_top, phi+>| with discrete L^2 weights
    double positive_kernel_max_dev = 0.0; // max |projected kernel - closed form|
    double projector_defect = 0.0;        // max |P^2 - P| of the positive projector
    double min_projected_eigenvalue = 0.0;
};

// One dense eigensolve serving the rank, eigenvalue, eigenvector and
// positive-part kernel checks.
AjOracleResult analyze_discretized_aj(double omega, double tau, int n);

// Extreme eigenvalues of the discretised T kernel, ascending.
std::pair<double, double> discretized_tj_extremes(const ModeConstants& mc_tau,
                                                  double tau_inner, int n);

// Pure-state saturation on the real (C,S) plane: maximise
// |sigma(f,h)|^2 / (4 mu(h,h)) over a circle of h and compare with mu(f,f)
// for f = a C + b S. Relative defect of the saturation identity.
double saturation_defect(const ModeConstants& mc, double f_on_c, double f_on_s);

// Worst defect over `trials` random directions f.
double saturation_purity_check(const ModeConstants& mc, int trials,
                               std::uint64_t seed = 0x5eed5ab5u);

struct LimitTauPoint {
    double tau = 0.0;
    double kernel_value = 0.0;      // double quadrature of the normal-ordered kernel
    double transform_minus = 0.0;   // (delta/2w)(Cf Ch/(1-delta) - Sf Sh)
    double transform_plus = 0.0;    // same with + on the sine term
};

struct LimitTauResult {
    std::vector<LimitTauPoint> points;
    int matched_sign = 0; // -1 or +1 when one convention matches the kernel, 0 if tied
};

// Diagonal normal-ordered values along a tau schedule, kernel smearing as
// ground truth, with both sign conventions of the transform expression.
LimitTauResult limit_tau_check(double omega, const TemporalTestFunction& f,
                               std::span<const double> tau_schedule);

struct DominatedConvergenceBound {
    double fitted_const = 0.0;   // max over the grid of (omega^2+m^2)^N |Cf|
    double peak_omega = 0.0;
    bool peak_interior = false;  // the max is attained away from both grid ends
    double tail_max = 0.0;       // max of the product over the last fifth
    bool tail_decayed = false;   // tail_max <= 0.5 * fitted_const
};

// Fits const in |Cf(omega)| <= const / (omega^2 + m^2)^N over the grid and
// checks the product has passed its peak and decayed.
DominatedConvergenceBound dominated_convergence_bound(const TemporalTestFunction& f,
                                                      double mass,
                                                      std::span<const double> omega_grid,
                                                      int order = 2);

} // namespace sjslab
