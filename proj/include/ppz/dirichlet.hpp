// dirichlet.hpp
// Truncated Dirichlet series over von Mangoldt pairs: D_2r(s), the banded
// expansion T^lambda(s), its odd-difference part, V^lambda(s), and probes of
// the poles at s = 1/2.

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "ppz/kernels.hpp"
#include "ppz/series_result.hpp"
#include "ppz/sieve.hpp"

namespace ppz {

// Chebyshev bound used by every tail: psi(x) <= 1.04 x for all x >= 1
// (Rosser-Schoenfeld give 1.03883).
inline constexpr double kChebyshevPsiConstant = 1.04;

// Upper bound for sum_{n > N} Lambda(n) log(n + shift) n^{-a}, a > 1, N >= 3,
// by partial summation against psi(x) <= 1.04 x:
//   1.04 N^{1-a} [ L + L/(a-1) + 1/(a-1)^2 ],  L = log N + log(1 + shift/N).
double lambda_log_tail_bound(std::uint64_t n_max, double a, double shift);

// The model int_N^inf log(x) x^{-a} dx = N^{1-a} (log N/(a-1) + 1/(a-1)^2),
// i.e. the D_0 tail with psi(x) ~ x.
double d0_model_tail(std::uint64_t n_max, double a);

struct TruncationPlan {
    std::uint64_t n_terms = 0;
    // Bound on the omitted tail of D_2r for any 2r <= n_terms at this s.
    double tail_bound = 0.0;

    // DomainError for Re s <= 1/2 or n_terms < 3.
    static TruncationPlan make(std::complex<double> point, std::uint64_t n_terms);
    // Smallest 10^k (k >= 3) with tail_bound < target, capped at max_terms.
    static TruncationPlan adaptive(std::complex<double> point, double target, std::uint64_t max_terms);
};

// Lambda(n) Lambda(m) n^{-s} m^{-s}, the summand shared by every series here.
inline std::complex<double> pair_term(std::complex<double> point, std::uint64_t n, double lambda_n,
                                      std::uint64_t m, double lambda_m) {
    return lambda_n * lambda_m *
           std::exp(-point * (std::log(static_cast<double>(n)) + std::log(static_cast<double>(m))));
}

// D_2r(s) = sum_{n <= N} Lambda(n) Lambda(n + 2r) n^{-s} (n + 2r)^{-s}.
// DomainError for Re s <= 1/2 or odd two_r, CapacityError when
// N + two_r > table.limit(). tail_estimate is a bound.
SeriesResult d_2r(std::complex<double> point, std::uint64_t two_r, const TruncationPlan& plan,
                  const PrimeTable& table);

struct D0PoleRow {
    double delta = 0.0;
    std::uint64_t n_terms = 0;
    double tail_bound = 0.0;
    bool tail_target_met = false;  // tail_bound < 0.1 delta^2
    double raw = 0.0;              // delta^2 D_0(1/2 + delta), truncated
    double corrected = 0.0;        // delta^2 (D_0 + model tail)
    bool model_valid = true;       // false outside (0, 1/4]
};

struct D0PoleReport {
    std::vector<D0PoleRow> rows;
    double target = 0.25;
    // Corrected values ordered by decreasing delta move monotonically
    // toward the target (valid rows only).
    bool trend_toward_target = false;
};

// delta^2 D_0(1/2 + delta) on a grid; N chosen per delta by
// TruncationPlan::adaptive(target 0.1 delta^2, max_terms). Rows with delta
// outside (0, 1/4] are flagged model_valid = false. DomainError for
// delta <= 0.01.
D0PoleReport d0_pole_probe(const std::vector<double>& delta_grid, std::uint64_t max_terms,
                           const PrimeTable& table);

// T^lambda(s) = sum Lambda(k) Lambda(l) k^{-s} l^{-s} E^lambda(k - l) over
// |k - l| < lambda with min(k, l) <= N. Needs N + lambda <= table.limit().
SeriesResult t_lambda_expansion(std::complex<double> point, double lambda, const SievingKernel& kernel,
                                const TruncationPlan& plan, const PrimeTable& table);

// The part of T^lambda from odd |k - l| (one of k, l a power of 2).
SeriesResult odd_difference_terms(std::complex<double> point, double lambda, const SievingKernel& kernel,
                                  const TruncationPlan& plan, const PrimeTable& table);

// V^lambda(s) = 2 sum_{0 < 2r <= lambda} E^lambda(2r) D_2r(s); exactly 0 for
// lambda <= 2.
SeriesResult v_lambda(std::complex<double> point, double lambda, const SievingKernel& kernel,
                      const TruncationPlan& plan, const PrimeTable& table);

// T^lambda - D_0 - V^lambda - odd terms, and the same relative to |T^lambda|.
struct IdentityResidual {
    std::complex<double> t_lambda;
    std::complex<double> d0;
    std::complex<double> v_lambda;
    std::complex<double> odd_terms;
    double residual = 0.0;
    double relative = 0.0;
};
IdentityResidual expansion_identity(std::complex<double> point, double lambda, const SievingKernel& kernel,
                                    const TruncationPlan& plan, const PrimeTable& table);

struct ResidueRow {
    double delta = 0.0;
    std::uint64_t n_terms = 0;
    double tail_bound = 0.0;
    double scaled = 0.0;  // delta * Re(series at 1/2 + delta)
};

struct ResidueReport {
    std::string quantity;
    double target = 0.0;
    std::vector<ResidueRow> rows;
    std::string label = "EXPLORATORY (convergence to the target is not asserted)";
};

// delta * D_2r(1/2 + delta) beside C_2r. DomainError unless every delta lies
// in (0.02, 0.25].
ResidueReport c2r_residue_probe(std::uint64_t two_r, const std::vector<double>& delta_grid,
                                std::uint64_t max_terms, const PrimeTable& table);

// delta * V^lambda(1/2 + delta) beside A^E (lambda - 1) + R(lambda).
ResidueReport v_lambda_residue_probe(double lambda, const SievingKernel& kernel,
                                     const std::vector<double>& delta_grid, std::uint64_t max_terms,
                                     const PrimeTable& table);

}  // namespace ppz
