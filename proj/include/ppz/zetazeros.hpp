// zetazeros.hpp
// Zeta-zero tables and the sums indexed by them. Ingested ordinates are taken
// as zeros rho = 1/2 + i*gamma (real part assumed 1/2), with the reflected
// zeros 1/2 - i*gamma included wherever a sum runs over all rho.

#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "ppz/kernels.hpp"
#include "ppz/series_result.hpp"

namespace ppz {

class ZeroSet {
public:
    // Validates positivity and monotonicity (ParseError-free variant used for
    // in-memory tables; throws DomainError).
    static ZeroSet from_ordinates(std::vector<double> ordinates, std::string source = "memory");

    std::span<const double> ordinates() const { return ordinates_; }
    const std::string& source() const { return source_; }
    std::size_t size() const { return ordinates_.size(); }
    double operator[](std::size_t i) const { return ordinates_[i]; }
    double last() const { return ordinates_.back(); }

    // N(T) = #{gamma <= T}.
    std::size_t count_up_to(double height) const;
    // The first n ordinates (n clamped to size()).
    ZeroSet truncated(std::size_t n) const;

private:
    std::vector<double> ordinates_;
    std::string source_;
};

// Plain text, one ordinate per line, '#' comments and blank lines ignored.
// ParseError (with line number) for malformed, non-positive or decreasing
// entries, fewer than two zeros, or gamma_1, gamma_2 outside (14, 14.2),
// (21, 21.1).
ZeroSet load_zeros(const std::filesystem::path& path);
ZeroSet parse_zeros(const std::string& text, const std::string& source = "text");

// Midpoint of the ordinate gap containing target (or the first gap above
// it), moving up while the gap is narrower than 2e-3. CapacityError when
// target exceeds the last ordinate.
CutoffR choose_cutoff(const ZeroSet& zeros, double target);
// Cutoff admitting the first n zeros (n <= size()); the gap rule may admit a
// few more when ordinates nearly coincide.
CutoffR cutoff_after_count(const ZeroSet& zeros, std::size_t n);
// Cutoff below gamma_1 (empty sums).
CutoffR empty_cutoff(const ZeroSet& zeros);

// Sigma_1 = (zeta'/zeta)^2 + 2 (zeta'/zeta) sum_rho Gamma(rho-s) M^lambda(rho-s) cos(pi(rho-s)/2),
// rho over 1/2 +- i*gamma with gamma <= R. Requires 1/2 < Re s < 1.
SeriesResult sigma1(std::complex<double> point, double lambda, const SievingKernel& kernel,
                    const ZeroSet& zeros, const CutoffR& zero_cutoff);

struct Sigma2Parts {
    SeriesResult total;
    std::complex<double> same_sign{};
    std::complex<double> opposite_sign{};
    std::int64_t same_sign_terms = 0;
    std::int64_t opposite_sign_terms = 0;
};

// Square partial sum over |gamma|, |gamma'| <= R of
// Gamma(rho-s) Gamma(rho'-s) M^lambda(rho+rho'-2s) cos(pi(rho-rho')/2).
Sigma2Parts sigma2_square_parts(std::complex<double> point, double lambda, const SievingKernel& kernel,
                                const ZeroSet& zeros, const CutoffR& zero_cutoff);
SeriesResult sigma2_square(std::complex<double> point, double lambda, const SievingKernel& kernel,
                           const ZeroSet& zeros, const CutoffR& zero_cutoff);

struct Sigma4Result {
    SeriesResult total;
    // The gamma' = gamma terms alone.
    std::complex<double> diagonal{};
    std::int64_t diagonal_terms = 0;
};

// 2 pi sum_{|gamma'-gamma| < gamma^{1/2}} gamma^{-2s+i(gamma-gamma')} M^lambda(1-2s+i(gamma-gamma'))
// over all ordinates of `zeros`. Requires 1/2 < Re s < 3/4.
Sigma4Result sigma4(std::complex<double> point, double lambda, const SievingKernel& kernel,
                    const ZeroSet& zeros);

struct PairCorrelation {
    double alpha = 0.0;
    double height = 0.0;
    std::int64_t zeros_used = 0;
    double value = 0.0;      // real part of F_w(alpha, T)
    double imag_part = 0.0;  // should vanish by gamma <-> gamma' symmetry
};

// F_w(alpha, T) = 2 pi / (T log T) sum_{0 < gamma, gamma' <= T}
//   e^{i alpha (gamma - gamma') log T} w(gamma - gamma'), w(u) = 4/(4+u^2).
// CapacityError when T exceeds the last ordinate, DomainError when T < gamma_1.
PairCorrelation pair_correlation_F(double alpha, const ZeroSet& zeros, double height);

// G^lambda(s) = Sigma^lambda(s) - Sigma^1(s) - R(lambda)/(s - 1/2), with the
// difference formed term by term through (lambda^z - 1) M(z), so lambda = 1
// gives exactly zero.
SeriesResult g_lambda(std::complex<double> point, double lambda, const SievingKernel& kernel,
                      const ZeroSet& zeros, const CutoffR& zero_cutoff);

// Sigma^lambda(s) - Sigma^1(s), term by term as above.
SeriesResult sigma_difference(std::complex<double> point, double lambda, const SievingKernel& kernel,
                              const ZeroSet& zeros, const CutoffR& zero_cutoff);

struct OmegaRow {
    double delta = 0.0;
    double scaled = 0.0;        // delta * Re(Sigma^lambda - Sigma^1) at s = 1/2 + delta
    double scaled_tail = 0.0;   // delta * tail_estimate
    double imag = 0.0;
};

struct OmegaReport {
    double lambda = 0.0;
    std::string kernel;
    std::int64_t zeros_used = 0;
    std::vector<OmegaRow> rows;
    // Linear extrapolation to delta = 0 through the two smallest deltas.
    double estimate = 0.0;
    std::string label = "ESTIMATE (truncated zero sums; does not decide the hypothesis)";
};

// All ordinates of `zeros` are used. delta_grid must lie in (0, 1/4).
OmegaReport omega_probe(double lambda, const SievingKernel& kernel, const ZeroSet& zeros,
                        const std::vector<double>& delta_grid);

// F^lambda(y, v, delta) = Gamma(iy-delta) Gamma(-iv-delta) M^lambda(-2delta+i(y-v)) cosh(pi(y+v)/2),
// exactly (log space), and its leading asymptotic form
// pi (yv)^{-delta-1/2} e^{i(y log y - y - v log v + v)} lambda^{-2delta+i(y-v)} M(-2delta+i(y-v)).
std::complex<double> opposite_pair_exact(double ordinate_a, double ordinate_b, double delta, double lambda,
                                         const SievingKernel& kernel);
std::complex<double> opposite_pair_asymptotic(double ordinate_a, double ordinate_b, double delta, double lambda,
                                              const SievingKernel& kernel);

// int_R^inf T^{-a} log^2(T/2pi) dT for a > 1.
double log_squared_power_tail(double zero_cutoff, double a);

}  // namespace ppz
