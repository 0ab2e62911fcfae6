// special.hpp
// Complex special functions: Gamma (two independent routes), zeta, zeta',
// and the logarithmic derivative zeta'/zeta.
//
// gamma() uses a fixed-coefficient Lanczos approximation (g = 7, n = 9) with
// reflection for Re z < 1/2. log_gamma() uses the Stirling series after an
// upward recurrence shift, and is the route used by all zero sums because it
// stays finite for |Im z| up to ~1e5.

#pragma once

#include <complex>
#include <span>

namespace ppz::special {

using cplx = std::complex<double>;

// log Gamma(z) split into modulus and phase. The phase is the continuous
// branch obtained from the Stirling series plus principal logs of the shift
// factors; only exp(i*phase) is meaningful across different z.
struct LogGamma {
    cplx arg;
    double log_modulus = 0.0;
    double phase = 0.0;

    cplx log_value() const { return {log_modulus, phase}; }
    cplx value() const { return std::exp(log_value()); }
};

// Gamma(z), relative error <= 1e-10 on |z| <= 1e3, |arg z| < pi - 0.1.
// Throws NearPoleError within 1e-10 of a non-positive integer.
cplx gamma(cplx arg);

// Stirling-series log Gamma. Requires |arg z| < pi - 0.05 (BranchError
// otherwise) and z away from the poles.
LogGamma log_gamma(cplx arg);

// Same value as log_gamma(z).log_value() without the branch guard, for
// internal callers that have already established the argument is safe, plus
// reflection for Re z < 0 (branch then only determined modulo 2*pi*i).
cplx log_gamma_any(cplx arg);

// log sin(z) and log cos(z), stable for large |Im z| (no overflow of the
// intermediate e^{|Im z|}). Imaginary part determined modulo 2*pi.
cplx log_sin(cplx arg);
cplx log_cos(cplx arg);

// zeta(s) and zeta'(s) by Euler-Maclaurin summation with
// N = max(20, ceil(2|Im s|)) and 8 Bernoulli corrections; zeta' is the
// term-wise derivative of the same formula.
// Supported domain: 0 < Re s <= 4, |Im s| <= 1e3; s != 1 within 1e-8.
struct ZetaPair {
    cplx zeta;
    cplx zeta_prime;
};
ZetaPair zeta_with_derivative(cplx point);
cplx zeta(cplx point);
cplx zeta_prime(cplx point);

// zeta'(s)/zeta(s). When ordinates (positive gammas, ascending) are given,
// throws ZeroProximityError if s lies within 1e-6 of 1/2 +- i*gamma.
cplx zeta_log_deriv(cplx point, std::span<const double> ordinates = {});

}  // namespace ppz::special
