// kernels.hpp
// Sieving kernels E on [-1, 1], their Fourier transforms, and the Mellin
// transform M^lambda(z) = lambda^z M(z) with
//   M(z) = (2/pi) Gamma(1-z) sin(pi z/2) m(z),   m(z) = int_0^1 E(v) v^{z-1} dv.
//
// Kernels are piecewise polynomials on [0, 1] extended evenly. m(z) has two
// exact closed forms: the branch form (antiderivatives of each polynomial
// piece, good for small |z|) and the jump form (repeated integration by parts
// over the derivative jumps, good for large |z| where the branch form
// cancels).

#pragma once

#include <complex>
#include <string>
#include <vector>

namespace ppz {

using cplx = std::complex<double>;

// E(v) = sum_k coeffs[k] v^k on [lo, hi].
struct PolynomialBranch {
    double lo = 0.0;
    double hi = 1.0;
    std::vector<double> coeffs;
};

enum class KernelType { Fejer, Jackson, Custom };

class SievingKernel {
public:
    static SievingKernel fejer();
    static SievingKernel jackson();
    // Validates: branches tile [0, 1] in order, E(0) = 1, continuity at every
    // breakpoint, E(1) = 0, E non-increasing on a grid. DomainError otherwise.
    static SievingKernel custom(std::string name, std::vector<PolynomialBranch> branches);
    // "fejer" or "jackson"; DomainError otherwise.
    static SievingKernel from_name(const std::string& name);

    const std::string& name() const { return name_; }
    KernelType type() const { return type_; }
    const std::vector<PolynomialBranch>& branches() const { return branches_; }

    // E(v), even, zero outside [-1, 1].
    double eval_E(double nu) const;
    // E^lambda(v) = E(v / lambda).
    double eval_E_lambda(double lambda, double nu) const { return eval_E(nu / lambda); }
    // Fourier weight: E^lambda(v) = (1/pi) int_0^inf E_hat(lambda, t) cos(v t) dt.
    double eval_E_hat(double lambda, double t) const;
    // int_0^1 E.
    double area() const { return area_; }

    // Mellin continuation is valid for Re z > domain_limit().
    double domain_limit() const { return domain_limit_; }
    // |M(x+iy)| decays like (|y|+1)^{-x-decay_offset()}.
    double decay_offset() const { return decay_offset_; }

    // m(z) by the branch form, the jump form, or whichever suits |z|.
    cplx moment_branch_form(cplx arg) const;
    cplx moment_jump_form(cplx arg) const;
    cplx moment(cplx arg) const;

    // lambda-free factor M(z), and log M(z) (stable for large |Im z|; real
    // part -inf at zeros of M). NearPoleError within 1e-8 of an odd positive
    // integer, DomainError for Re z <= domain_limit().
    cplx mellin(cplx arg) const;
    cplx log_mellin(cplx arg) const;

private:
    struct Jump {
        double at;
        std::vector<double> delta;  // delta[j]: jump of E^{(j)} at `at`
    };

    std::string name_;
    KernelType type_ = KernelType::Custom;
    std::vector<PolynomialBranch> branches_;
    std::vector<Jump> jumps_;
    double area_ = 0.0;
    double domain_limit_ = -3.0;
    double decay_offset_ = 0.5;

    void finalize();
    void check_argument(cplx arg) const;
    // sin(pi z/2) m(z), finite at the removable points z = 0, -2, ...
    cplx sine_times_moment(cplx arg) const;
};

struct MellinValue {
    cplx arg;
    cplx value;
    // Within 1e-3 of a pole (informational; the hard threshold is 1e-8).
    bool is_near_pole = false;
};

// M^lambda(z) = lambda^z M(z).
MellinValue mellin_M(const SievingKernel& kernel, double lambda, cplx arg);
// log M^lambda(z).
cplx log_mellin_M(const SievingKernel& kernel, double lambda, cplx arg);

// Trapezoid average of (z-1) M^lambda(z) over |z-1| = radius, i.e. the
// residue at z = 1, against the closed value -(2 lambda / pi) A^E.
struct ResidueProbe {
    double lambda = 0.0;
    double radius = 0.0;
    cplx measured;
    double expected = 0.0;
    double abs_error = 0.0;
};
ResidueProbe mellin_residue_probe(const SievingKernel& kernel, double lambda,
                                  double radius = 1e-4, int points = 64);

struct BoundSample {
    double ordinate = 0.0;
    double modulus = 0.0;
    // |M^lambda(x+iy)| (|y|+1)^{x + decay_offset}
    double ratio = 0.0;
};
struct BoundReport {
    std::string kernel;
    double lambda = 0.0;
    double real_part = 0.0;
    double exponent = 0.0;  // -x - decay_offset
    std::vector<BoundSample> samples;
    // Least-squares slope of log ratio against log(|y|+1).
    double log_slope = 0.0;
    bool bounded = false;
};
// Requires -3 < x <= 3 and |y| >= 1 for every sample (DomainError otherwise).
BoundReport mellin_bound_check(const SievingKernel& kernel, double lambda, double real_part,
                               const std::vector<double>& y_samples);

}  // namespace ppz
