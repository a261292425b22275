/*
 * slab_modes.hpp — closed-form per-mode data on the time slab L^2(-tau,tau).
 *
 * For a single spatial frequency omega, the commutator operator restricted to
 * the mode acts on span{C, S} with C(t) = cos(omega t), S(t) = sin(omega t):
 *
 *   A f = (i/omega) ( <S,f> C - <C,f> S )
 *
 * Everything downstream is built from a handful of scalars:
 *
 *   s        = sinc(2 omega tau)
 *   ||C||^2  = tau (1 + s)
 *   ||S||^2  = tau (1 - s)
 *   delta    = 1 - ||C||/||S||
 *   lambda+  = ||S|| ||C|| / omega      (largest eigenvalue of A)
 *
 * delta is evaluated in the rationalised form
 *   delta = (-2 s / (1 - s)) / (1 + sqrt((1+s)/(1-s)))
 * which is cancellation-safe for the small-|s| regime the diagnostics live in
 * (delta ~ -s for large omega tau).
 *
 * Templated on the scalar so tests can instantiate long double references.
 */

#pragma once

#include <cmath>
#include <complex>

#include "sjslab/errors.hpp"

namespace sjslab {

// sin(x)/x with a series fallback near 0; sinc(0) = 1.
template <class Scalar>
Scalar stable_sinc(Scalar x) {
    const Scalar ax = std::abs(x);
    if (ax < Scalar(1e-4)) {
        const Scalar x2 = x * x;
        return Scalar(1) - x2 / Scalar(6) + x2 * x2 / Scalar(120);
    }
    return std::sin(x) / x;
}

template <class Scalar>
struct ModeConstantsT {
    Scalar omega = 0;
    Scalar tau = 0;
    Scalar sinc2wt = 0;     // sinc(2 omega tau)
    Scalar norm_c2 = 0;     // ||C||^2 on (-tau, tau)
    Scalar norm_s2 = 0;     // ||S||^2 on (-tau, tau)
    Scalar delta = 0;       // 1 - ||C||/||S||
    Scalar lambda_plus = 0; // ||S|| ||C|| / omega
};

using ModeConstants = ModeConstantsT<double>;

template <class Scalar>
ModeConstantsT<Scalar> mode_constants(Scalar omega, Scalar tau) {
    if (!(omega > Scalar(0))) throw invalid_parameter("mode_constants: omega must be > 0");
    if (!(tau > Scalar(0))) throw invalid_parameter("mode_constants: tau must be > 0");
    ModeConstantsT<Scalar> mc;
    mc.omega = omega;
    mc.tau = tau;
    const Scalar s = stable_sinc(Scalar(2) * omega * tau);
    mc.sinc2wt = s;
    mc.norm_c2 = tau * (Scalar(1) + s);
    mc.norm_s2 = tau * (Scalar(1) - s);
    mc.delta = (Scalar(-2) * s / (Scalar(1) - s)) /
               (Scalar(1) + std::sqrt((Scalar(1) + s) / (Scalar(1) - s)));
    mc.lambda_plus = tau * std::sqrt((Scalar(1) - s) * (Scalar(1) + s)) / omega;
    return mc;
}

namespace detail {

template <class Scalar>
void require_on_slab(const ModeConstantsT<Scalar>& mc, Scalar t, Scalar t2) {
    if (std::abs(t) > mc.tau || std::abs(t2) > mc.tau)
        throw domain_error("kernel argument outside (-tau, tau)");
}

} // namespace detail

// Rank-2 eigenstructure of the mode operator A. Eigenvectors are reported as
// coefficient pairs on the (C, S) basis and on (e^{-i omega t}, e^{+i omega t}).
struct AjEigensystem {
    double eigenvalue_plus = 0;  // +||S|| ||C|| / omega
    double eigenvalue_minus = 0; // the mirror eigenvalue
    std::complex<double> plus_on_c, plus_on_s;   // phi+ = C - i(1-delta) S
    std::complex<double> minus_on_c, minus_on_s; // phi- = C + i(1-delta) S
    double plus_on_exp_minus = 0, plus_on_exp_plus = 0;   // phi+ = (1-d/2) e^- + (d/2) e^+
    double minus_on_exp_minus = 0, minus_on_exp_plus = 0; // phi- = (d/2) e^- + (1-d/2) e^+
    double norm2 = 0; // ||phi+-||^2 = 2 ||C||^2
};

inline AjEigensystem aj_eigensystem(const ModeConstants& mc) {
    AjEigensystem es;
    es.eigenvalue_plus = mc.lambda_plus;
    es.eigenvalue_minus = -mc.lambda_plus;
    const double ratio = 1.0 - mc.delta; // ||C||/||S||
    es.plus_on_c = {1.0, 0.0};
    es.plus_on_s = {0.0, -ratio};
    es.minus_on_c = {1.0, 0.0};
    es.minus_on_s = {0.0, ratio};
    es.plus_on_exp_minus = 1.0 - 0.5 * mc.delta;
    es.plus_on_exp_plus = 0.5 * mc.delta;
    es.minus_on_exp_minus = 0.5 * mc.delta;
    es.minus_on_exp_plus = 1.0 - 0.5 * mc.delta;
    es.norm2 = 2.0 * mc.norm_c2;
    return es;
}

// Positive-part kernel
//   A+(t,t') = (||S||/(2 omega ||C||)) (e^{-i omega t} + i delta sin omega t)
//                                       (e^{+i omega t'} - i delta sin omega t')
template <class Scalar>
std::complex<Scalar> aj_plus_kernel(const ModeConstantsT<Scalar>& mc, Scalar t, Scalar t2) {
    detail::require_on_slab(mc, t, t2);
    using C = std::complex<Scalar>;
    const Scalar prefactor =
        std::sqrt(mc.norm_s2 / mc.norm_c2) / (Scalar(2) * mc.omega);
    const C left = C(std::cos(mc.omega * t), -std::sin(mc.omega * t)) +
                   C(0, mc.delta * std::sin(mc.omega * t));
    const C right = C(std::cos(mc.omega * t2), std::sin(mc.omega * t2)) -
                    C(0, mc.delta * std::sin(mc.omega * t2));
    return prefactor * left * right;
}

// Ground-state (rank-1) kernel e^{-i omega (t - t')} / (2 omega).
template <class Scalar>
std::complex<Scalar> ah_kernel(Scalar omega, Scalar t, Scalar t2) {
    const Scalar phase = omega * (t - t2);
    return std::complex<Scalar>(std::cos(phase), -std::sin(phase)) / (Scalar(2) * omega);
}

// Normal-ordered kernel
//   delta^2 cos omega(t-t') / (4 omega (1-delta))
//   + delta (2-delta) cos omega(t+t') / (4 omega (1-delta)),
// identically equal to aj_plus_kernel - ah_kernel. Real-valued; returned as
// complex to match the other kernels.
template <class Scalar>
std::complex<Scalar> normord_kernel(const ModeConstantsT<Scalar>& mc, Scalar t, Scalar t2) {
    detail::require_on_slab(mc, t, t2);
    const Scalar d = mc.delta;
    const Scalar denom = Scalar(4) * mc.omega * (Scalar(1) - d);
    const Scalar value = d * d * std::cos(mc.omega * (t - t2)) / denom +
                         d * (Scalar(2) - d) * std::cos(mc.omega * (t + t2)) / denom;
    return {value, Scalar(0)};
}

// Eigenvalues of the curvature-of-difference operator T on (-tau_inner, tau_inner):
//   on C:  -omega delta ||C'||^2 / 2
//   on S:  +omega delta ||S'||^2 / (2 (1 - delta))
// with delta taken from the outer slab and the norms recomputed on the inner one.
struct TjEigenvalues {
    double on_c = 0;
    double on_s = 0;
};

inline TjEigenvalues tj_eigenvalues(const ModeConstants& mc_tau, double tau_inner) {
    if (!(tau_inner > 0.0) || !(tau_inner < mc_tau.tau))
        throw invalid_parameter("tj_eigenvalues: need 0 < tau_inner < tau");
    const ModeConstants inner = mode_constants(mc_tau.omega, tau_inner);
    const double d = mc_tau.delta;
    return {-mc_tau.omega * d * inner.norm_c2 / 2.0,
            mc_tau.omega * d * inner.norm_s2 / (2.0 * (1.0 - d))};
}

} // namespace sjslab
