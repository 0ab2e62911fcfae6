#include "ppz/dirichlet.hpp"

#include <algorithm>
#include <cmath>

#include "ppz/errors.hpp"
#include "ppz/hlconstants.hpp"
#include "ppz/summation.hpp"

namespace ppz {

namespace {

using cplx = std::complex<double>;

void check_half_plane(cplx point, const char* op) {
    if (!(point.real() > 0.5)) throw DomainError(std::string(op) + ": need Re s > 1/2 (the series diverges)");
}

void check_lambda(double lambda, const char* op) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError(std::string(op) + ": lambda must be positive");
}

void check_capacity(std::uint64_t needed, const PrimeTable& table, const char* op) {
    if (needed > table.limit())
        throw CapacityError(std::string(op) + ": needs the table up to " + std::to_string(needed) + ", have " +
                            std::to_string(table.limit()));
}

std::uint64_t band_width(double lambda) {
    // largest integer d with d < lambda
    const double c = std::ceil(lambda);
    return static_cast<std::uint64_t>(c) - 1;
}

struct PowerTerm {
    std::uint64_t n;
    double lambda_n;
    cplx weight;  // Lambda(n) n^{-s}
};

std::vector<PowerTerm> weighted_prime_powers(cplx point, std::uint64_t x, const PrimeTable& table) {
    std::vector<PowerTerm> out;
    table.for_each_prime_power(x, [&](std::uint64_t n, double l) {
        out.push_back({n, l, l * std::exp(-point * std::log(static_cast<double>(n)))});
    });
    return out;
}

// Pairs with min(k, l) <= N and 0 < |k - l| < lambda, restricted to odd or
// even differences, counted in both orders.
cplx banded_off_diagonal(const std::vector<PowerTerm>& terms, std::uint64_t n_max, double lambda,
                         const SievingKernel& kernel, int parity, std::int64_t* count) {
    const std::uint64_t width = band_width(lambda);
    ComplexCompensatedSum acc;
    for (std::size_t i = 0; i < terms.size() && terms[i].n <= n_max; ++i) {
        for (std::size_t j = i + 1; j < terms.size(); ++j) {
            const std::uint64_t d = terms[j].n - terms[i].n;
            if (d > width) break;
            if (parity >= 0 && static_cast<int>(d % 2) != parity) continue;
            const double e = kernel.eval_E_lambda(lambda, static_cast<double>(d));
            if (e == 0.0) continue;
            acc.add(2.0 * e * terms[i].weight * terms[j].weight);
            if (count) *count += 2;
        }
    }
    return acc.value();
}

// Bound on the omitted part of a banded sum: every omitted pair has
// min(k, l) > N, and for each of the 2*width+1 differences the omitted terms
// are dominated by sum_{n > N} Lambda(n) log(n + width) n^{-2 sigma}.
double banded_tail_bound(cplx point, std::uint64_t n_max, double lambda) {
    const std::uint64_t width = band_width(lambda);
    return static_cast<double>(2 * width + 1) *
           lambda_log_tail_bound(n_max, 2.0 * point.real(), static_cast<double>(width));
}

}  // namespace

double lambda_log_tail_bound(std::uint64_t n_max, double a, double shift) {
    if (n_max < 3) throw DomainError("tail bound: N must be >= 3");
    if (!(a > 1.0)) throw DomainError("tail bound: need a > 1");
    const double n = static_cast<double>(n_max);
    const double b = a - 1.0;
    const double L = std::log(n) + std::log1p(shift / n);
    return kChebyshevPsiConstant * std::pow(n, -b) * (L + L / b + 1.0 / (b * b));
}

double d0_model_tail(std::uint64_t n_max, double a) {
    if (!(a > 1.0)) throw DomainError("tail model: need a > 1");
    const double n = static_cast<double>(n_max);
    const double b = a - 1.0;
    return std::pow(n, -b) * (std::log(n) / b + 1.0 / (b * b));
}

TruncationPlan TruncationPlan::make(cplx point, std::uint64_t n_terms) {
    check_half_plane(point, "truncation plan");
    if (n_terms < 3) throw DomainError("truncation plan: n_terms must be >= 3");
    return {n_terms, lambda_log_tail_bound(n_terms, 2.0 * point.real(), static_cast<double>(n_terms))};
}

TruncationPlan TruncationPlan::adaptive(cplx point, double target, std::uint64_t max_terms) {
    if (max_terms < 1000) throw DomainError("adaptive plan: max_terms must be >= 1000");
    std::uint64_t n = 1000;
    TruncationPlan plan = make(point, n);
    while (plan.tail_bound >= target && n < max_terms) {
        n = std::min(max_terms, n * 10);
        plan = make(point, n);
    }
    return plan;
}

SeriesResult d_2r(cplx point, std::uint64_t two_r, const TruncationPlan& plan, const PrimeTable& table) {
    check_half_plane(point, "d_2r");
    if (two_r % 2 != 0) throw DomainError("d_2r: two_r must be even");
    check_capacity(plan.n_terms + two_r, table, "d_2r");
    ComplexCompensatedSum acc;
    SeriesResult out;
    table.for_each_lambda_pair(two_r, plan.n_terms, [&](std::uint64_t n, double a, double b) {
        acc.add(pair_term(point, n, a, n + two_r, b));
        ++out.terms_used;
    });
    out.value = acc.value();
    out.truncation = static_cast<std::int64_t>(plan.n_terms);
    out.tail_estimate = lambda_log_tail_bound(std::max<std::uint64_t>(plan.n_terms, 3), 2.0 * point.real(),
                                              static_cast<double>(two_r));
    out.tail_is_bound = true;
    return out;
}

D0PoleReport d0_pole_probe(const std::vector<double>& delta_grid, std::uint64_t max_terms,
                           const PrimeTable& table) {
    D0PoleReport rep;
    for (double delta : delta_grid) {
        if (!(delta > 0.01)) throw DomainError("d0_pole_probe: delta must exceed 0.01");
        D0PoleRow row;
        row.delta = delta;
        row.model_valid = delta <= 0.25;
        const cplx point(0.5 + delta, 0.0);
        const TruncationPlan plan = TruncationPlan::adaptive(point, 0.1 * delta * delta, max_terms);
        const SeriesResult d0 = d_2r(point, 0, plan, table);
        row.n_terms = plan.n_terms;
        row.tail_bound = d0.tail_estimate;
        row.tail_target_met = d0.tail_estimate < 0.1 * delta * delta;
        row.raw = delta * delta * d0.value.real();
        row.corrected = delta * delta * (d0.value.real() + d0_model_tail(plan.n_terms, 2.0 * point.real()));
        rep.rows.push_back(row);
    }
    std::vector<D0PoleRow> valid;
    for (const auto& r : rep.rows)
        if (r.model_valid) valid.push_back(r);
    std::sort(valid.begin(), valid.end(), [](const D0PoleRow& a, const D0PoleRow& b) { return a.delta > b.delta; });
    rep.trend_toward_target = valid.size() >= 2;
    for (std::size_t i = 1; i < valid.size(); ++i)
        if (std::abs(valid[i].corrected - rep.target) >= std::abs(valid[i - 1].corrected - rep.target))
            rep.trend_toward_target = false;
    return rep;
}

SeriesResult t_lambda_expansion(cplx point, double lambda, const SievingKernel& kernel, const TruncationPlan& plan,
                                const PrimeTable& table) {
    check_half_plane(point, "t_lambda_expansion");
    check_lambda(lambda, "t_lambda_expansion");
    const std::uint64_t n_max = plan.n_terms;
    check_capacity(n_max + band_width(lambda), table, "t_lambda_expansion");
    const auto terms = weighted_prime_powers(point, n_max + band_width(lambda), table);
    SeriesResult out;
    ComplexCompensatedSum acc;
    for (const auto& t : terms) {
        if (t.n > n_max) break;
        // same summand and order as d_2r(s, 0, ...)
        acc.add(pair_term(point, t.n, t.lambda_n, t.n, t.lambda_n));
        ++out.terms_used;
    }
    acc.add(banded_off_diagonal(terms, n_max, lambda, kernel, -1, &out.terms_used));
    out.value = acc.value();
    out.truncation = static_cast<std::int64_t>(n_max);
    out.tail_estimate = banded_tail_bound(point, std::max<std::uint64_t>(n_max, 3), lambda);
    out.tail_is_bound = true;
    return out;
}

SeriesResult odd_difference_terms(cplx point, double lambda, const SievingKernel& kernel, const TruncationPlan& plan,
                                  const PrimeTable& table) {
    check_half_plane(point, "odd_difference_terms");
    check_lambda(lambda, "odd_difference_terms");
    const std::uint64_t n_max = plan.n_terms;
    const std::uint64_t width = band_width(lambda);
    check_capacity(n_max + width, table, "odd_difference_terms");
    SeriesResult out;
    ComplexCompensatedSum acc;
    const double log2 = std::log(2.0);
    // An odd difference between prime powers needs one of them to be 2^alpha.
    for (std::uint64_t m = 2; m <= n_max + width; m *= 2) {
        for (std::uint64_t d = 1; d <= width; d += 2) {
            const double e = kernel.eval_E_lambda(lambda, static_cast<double>(d));
            if (e == 0.0) continue;
            if (m <= n_max) {
                const double l = table.von_mangoldt(m + d);
                if (l != 0.0) {
                    acc.add(2.0 * e * pair_term(point, m, log2, m + d, l));
                    out.terms_used += 2;
                }
            }
            if (m > d && m - d <= n_max) {
                const double l = table.von_mangoldt(m - d);
                if (l != 0.0) {
                    acc.add(2.0 * e * pair_term(point, m - d, l, m, log2));
                    out.terms_used += 2;
                }
            }
        }
        if (m > (std::uint64_t{1} << 62)) break;
    }
    out.value = acc.value();
    out.truncation = static_cast<std::int64_t>(n_max);
    // Omitted: m = 2^alpha with min(m, m -+ d) > N. Each such pair is at most
    // log 2 log(m + width) (m - width)^{-2 sigma}, doubled for order and summed over
    // the odd d.
    const double a = 2.0 * point.real();
    const double n_odd = static_cast<double>((width + 1) / 2);
    double tail = 0.0;
    for (int alpha = 1; alpha < 1000; ++alpha) {
        const double m = std::ldexp(1.0, alpha);
        if (m <= static_cast<double>(n_max)) continue;
        const double base = std::max(m - static_cast<double>(width), 1.0);
        const double piece = 2.0 * 2.0 * n_odd * log2 * std::log(m + static_cast<double>(width)) * std::pow(base, -a);
        tail += piece;
        if (piece < 1e-18 * tail || piece == 0.0) break;
    }
    out.tail_estimate = tail;
    out.tail_is_bound = true;
    return out;
}

SeriesResult v_lambda(cplx point, double lambda, const SievingKernel& kernel, const TruncationPlan& plan,
                      const PrimeTable& table) {
    check_half_plane(point, "v_lambda");
    check_lambda(lambda, "v_lambda");
    SeriesResult out;
    out.truncation = static_cast<std::int64_t>(plan.n_terms);
    out.tail_is_bound = true;
    ComplexCompensatedSum acc;
    for (std::uint64_t two_r = 2; static_cast<double>(two_r) <= lambda; two_r += 2) {
        const double e = kernel.eval_E_lambda(lambda, static_cast<double>(two_r));
        if (e == 0.0) continue;
        const SeriesResult d = d_2r(point, two_r, plan, table);
        acc.add(2.0 * e * d.value);
        out.terms_used += d.terms_used;
        out.tail_estimate += 2.0 * e * d.tail_estimate;
    }
    out.value = acc.value();
    return out;
}

IdentityResidual expansion_identity(cplx point, double lambda, const SievingKernel& kernel, const TruncationPlan& plan,
                                    const PrimeTable& table) {
    IdentityResidual r;
    r.t_lambda = t_lambda_expansion(point, lambda, kernel, plan, table).value;
    r.d0 = d_2r(point, 0, plan, table).value;
    r.v_lambda = v_lambda(point, lambda, kernel, plan, table).value;
    r.odd_terms = odd_difference_terms(point, lambda, kernel, plan, table).value;
    r.residual = std::abs(r.t_lambda - r.d0 - r.v_lambda - r.odd_terms);
    r.relative = r.residual / std::max(std::abs(r.t_lambda), 1e-300);
    return r;
}

ResidueReport c2r_residue_probe(std::uint64_t two_r, const std::vector<double>& delta_grid,
                                std::uint64_t max_terms, const PrimeTable& table) {
    if (two_r == 0 || two_r % 2 != 0) throw DomainError("c2r_residue_probe: two_r must be even and positive");
    ResidueReport rep;
    rep.quantity = "delta * D_" + std::to_string(two_r) + "(1/2 + delta)";
    rep.target = c_2r(two_r / 2);
    for (double delta : delta_grid) {
        if (!(delta > 0.02 && delta <= 0.25)) throw DomainError("c2r_residue_probe: delta must lie in (0.02, 0.25]");
        const cplx point(0.5 + delta, 0.0);
        const TruncationPlan plan = TruncationPlan::adaptive(point, 0.1 * delta, max_terms);
        const SeriesResult d = d_2r(point, two_r, plan, table);
        rep.rows.push_back({delta, plan.n_terms, d.tail_estimate, delta * d.value.real()});
    }
    return rep;
}

ResidueReport v_lambda_residue_probe(double lambda, const SievingKernel& kernel,
                                     const std::vector<double>& delta_grid, std::uint64_t max_terms,
                                     const PrimeTable& table) {
    check_lambda(lambda, "v_lambda_residue_probe");
    ResidueReport rep;
    rep.quantity = "delta * V^lambda(1/2 + delta)";
    rep.target = kernel.area() * (lambda - 1.0) + remainder_R(lambda, kernel);
    for (double delta : delta_grid) {
        if (!(delta > 0.02 && delta <= 0.25))
            throw DomainError("v_lambda_residue_probe: delta must lie in (0.02, 0.25]");
        const cplx point(0.5 + delta, 0.0);
        const TruncationPlan plan = TruncationPlan::adaptive(point, 0.1 * delta, max_terms);
        const SeriesResult v = v_lambda(point, lambda, kernel, plan, table);
        rep.rows.push_back({delta, plan.n_terms, v.tail_estimate, delta * v.value.real()});
    }
    return rep;
}

}  // namespace ppz
