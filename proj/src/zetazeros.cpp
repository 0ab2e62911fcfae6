#include "ppz/zetazeros.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include "ppz/errors.hpp"
#include "ppz/hlconstants.hpp"
#include "ppz/parallel.hpp"
#include "ppz/special.hpp"
#include "ppz/summation.hpp"

namespace ppz {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::int64_t kRowBlock = 16;

// e^z - 1 without cancellation for small |z|.
cplx complex_expm1(cplx z) {
    const double a = z.real(), b = z.imag();
    const double em1 = std::expm1(a);
    const double sh = std::sin(0.5 * b);
    return {em1 * std::cos(b) - 2.0 * sh * sh, std::exp(a) * std::sin(b)};
}

double log_cosh(double x) {
    x = std::abs(x);
    return x + std::log1p(std::exp(-2.0 * x)) - std::numbers::ln2;
}

// How the lambda-dependence enters each term carrying M^lambda(z) = lambda^z M(z):
// either lambda^z itself, or lambda^z - 1 for Sigma^lambda - Sigma^1.
struct MellinWeight {
    double log_lambda = 0.0;
    bool difference = false;

    cplx apply(cplx log_term, cplx z) const {
        if (difference) {
            if (log_lambda == 0.0) return 0.0;
            return std::exp(log_term) * complex_expm1(z * log_lambda);
        }
        return std::exp(log_term + z * log_lambda);
    }
};

MellinWeight make_weight(double lambda, bool difference) {
    if (!(lambda > 0.0)) throw DomainError("lambda must be positive");
    return {std::log(lambda), difference};
}

void check_strip(cplx point, double lo, double hi, const char* op) {
    if (!(point.real() > lo && point.real() < hi))
        throw DomainError(std::string(op) + ": need " + std::to_string(lo) + " < Re s < " + std::to_string(hi));
}

void check_zero_proximity(cplx point, const ZeroSet& zeros) {
    const auto g = zeros.ordinates();
    if (g.empty()) return;
    const double t = std::abs(point.imag());
    auto it = std::lower_bound(g.begin(), g.end(), t);
    for (auto cand : {it, it == g.begin() ? it : it - 1}) {
        if (cand == g.end()) continue;
        if (std::hypot(point.real() - 0.5, t - *cand) < 1e-6)
            throw ZeroProximityError("s within 1e-6 of the zero 1/2 + i*" + std::to_string(*cand), *cand);
    }
}

// Model tail for zero sums whose per-zero increment behaves like
// c * gamma^{-a} log(gamma/2pi): fit c on the given increments, integrate
// against dN(T) ~ log(T/2pi)/(2pi) dT from R.
double fitted_tail(std::span<const double> gammas, std::span<const cplx> increments, double a, double zero_cutoff) {
    if (gammas.empty() || !(a > 1.0)) return 0.0;
    double c = 0.0;
    for (std::size_t i = 0; i < gammas.size(); ++i) {
        const double scale = std::pow(gammas[i], -a) * std::log(gammas[i] / kTwoPi);
        c += std::abs(increments[i]) / scale;
    }
    c /= static_cast<double>(gammas.size());
    return c / kTwoPi * log_squared_power_tail(zero_cutoff, a);
}

struct RhoSum {
    cplx sum;
    std::int64_t terms = 0;
    double tail_rho = 0.0;  // model tail of the rho-sum alone
};

// sum over rho = 1/2 +- i*gamma, gamma <= R, of Gamma(rho-s) M(rho-s) cos(pi(rho-s)/2)
// with the lambda weight applied to M.
RhoSum rho_sum(cplx point, const MellinWeight& w, const SievingKernel& kernel, const ZeroSet& zeros,
               std::size_t n, double zero_cutoff) {
    auto term = [&](cplx rho) {
        const cplx z = rho - point;
        const cplx lt = special::log_gamma_any(z) + special::log_cos(kPi * z / 2.0) + kernel.log_mellin(z);
        return w.apply(lt, z);
    };
    ComplexCompensatedSum acc;
    RhoSum out;
    for (std::size_t k = 0; k < n; ++k) {
        const cplx rho(0.5, zeros[k]);
        acc.add(term(rho));
        acc.add(term(std::conj(rho)));
        out.terms += 2;
    }
    out.sum = acc.value();
    if (zeros.size() > 0) {
        const std::size_t probe = n < zeros.size() ? n : zeros.size() - 1;
        const cplx rho(0.5, zeros[probe]);
        const double first_omitted = std::abs(term(rho)) + std::abs(term(std::conj(rho)));
        const double p = kernel.decay_offset() + 0.5;
        const double Rv = std::max(zero_cutoff, zeros[0]);
        out.tail_rho = first_omitted * Rv * std::max(std::log(Rv / kTwoPi), 1.0) / (kTwoPi * (p - 1.0));
    }
    return out;
}

SeriesResult sigma1_impl(cplx point, const MellinWeight& w, const SievingKernel& kernel, const ZeroSet& zeros,
                         const CutoffR& zero_cutoff) {
    check_strip(point, 0.5, 1.0, "sigma1");
    check_zero_proximity(point, zeros);
    const cplx L = special::zeta_log_deriv(point, zeros.ordinates());
    const std::size_t n = zeros.count_up_to(zero_cutoff.value);
    const RhoSum rs = rho_sum(point, w, kernel, zeros, n, zero_cutoff.value);
    SeriesResult out;
    out.value = (w.difference ? cplx(0.0) : L * L) + 2.0 * L * rs.sum;
    out.terms_used = rs.terms;
    out.truncation = static_cast<std::int64_t>(n);
    out.cutoff = zero_cutoff;
    out.tail_estimate = 2.0 * std::abs(L) * rs.tail_rho;
    return out;
}

Sigma2Parts sigma2_impl(cplx point, const MellinWeight& w, const SievingKernel& kernel, const ZeroSet& zeros,
                        const CutoffR& zero_cutoff) {
    check_strip(point, 0.5, 1.0, "sigma2_square");
    check_zero_proximity(point, zeros);
    const std::size_t n = zeros.count_up_to(zero_cutoff.value);
    Sigma2Parts out;
    out.total.cutoff = zero_cutoff;
    out.total.truncation = static_cast<std::int64_t>(n);
    if (n == 0) return out;

    std::vector<cplx> lg_plus(n), lg_minus(n);
    for (std::size_t k = 0; k < n; ++k) {
        lg_plus[k] = special::log_gamma_any(cplx(0.5, zeros[k]) - point);
        lg_minus[k] = special::log_gamma_any(cplx(0.5, -zeros[k]) - point);
    }
    const cplx base = 1.0 - 2.0 * point;

    // Opposite signs: rho = 1/2 + i g_k, rho' = 1/2 - i g_j; the (rho', rho)
    // ordering doubles it.
    const std::size_t fit_count = std::min(n, std::max<std::size_t>(10, n / 10));
    const std::size_t fit_start = n - fit_count;
    const auto n_blocks = block_count(0, static_cast<std::int64_t>(n), kRowBlock);
    std::vector<ComplexCompensatedSum> block_sums(n_blocks);
    std::vector<std::vector<cplx>> block_incs(n_blocks, std::vector<cplx>(fit_count));
    parallel_for_blocks(n_blocks, [&](std::int64_t b) {
        const auto range = block_range(0, static_cast<std::int64_t>(n), kRowBlock, b);
        auto& acc = block_sums[b];
        auto& inc = block_incs[b];
        for (auto k = static_cast<std::size_t>(range.begin); k < static_cast<std::size_t>(range.end); ++k) {
            for (std::size_t j = 0; j < n; ++j) {
                const cplx z = base + cplx(0.0, zeros[k] - zeros[j]);
                const cplx lt = lg_plus[k] + lg_minus[j] + log_cosh(kPi * (zeros[k] + zeros[j]) / 2.0) +
                                kernel.log_mellin(z);
                const cplx t = w.apply(lt, z);
                acc.add(t);
                const std::size_t idx = std::max(k, j);
                if (idx >= fit_start) inc[idx - fit_start] += t;
            }
        }
    });
    ComplexCompensatedSum opposite;
    std::vector<cplx> increments(fit_count, 0.0);
    for (std::int64_t b = 0; b < n_blocks; ++b) {
        opposite.merge(block_sums[b]);
        for (std::size_t i = 0; i < fit_count; ++i) increments[i] += 2.0 * block_incs[b][i];
    }
    out.opposite_sign = 2.0 * opposite.value();
    out.opposite_sign_terms = static_cast<std::int64_t>(n * n);

    // Same signs: |term| ~ exp(-pi min(g_k, g_j)); symmetric in (k, j).
    ComplexCompensatedSum same;
    std::int64_t same_terms = 0;
    double last_same = 0.0;
    auto same_pair = [&](std::size_t k, std::size_t j) {
        const double ch = log_cosh(kPi * (zeros[k] - zeros[j]) / 2.0);
        const cplx zp = base + cplx(0.0, zeros[k] + zeros[j]);
        const cplx zm = base - cplx(0.0, zeros[k] + zeros[j]);
        const cplx tp = w.apply(lg_plus[k] + lg_plus[j] + ch + kernel.log_mellin(zp), zp);
        const cplx tm = w.apply(lg_minus[k] + lg_minus[j] + ch + kernel.log_mellin(zm), zm);
        same_terms += 2;
        return tp + tm;
    };
    std::size_t rows_done = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const double threshold = 1e-16 * std::abs(out.opposite_sign + same.value());
        const cplx diag = same_pair(k, k);
        last_same = std::abs(diag);
        same.add(diag);
        rows_done = k + 1;
        if (k > 0 && std::abs(diag) < threshold) break;
        for (std::size_t j = k + 1; j < n; ++j) {
            const cplx t = 2.0 * same_pair(k, j);
            same.add(t);
            last_same = std::abs(t);
            if (std::abs(t) < threshold) break;
        }
    }
    out.same_sign = same.value();
    out.same_sign_terms = same_terms;

    const double a = 2.0 * point.real();
    std::vector<double> fit_gammas(zeros.ordinates().begin() + static_cast<std::ptrdiff_t>(fit_start),
                                   zeros.ordinates().begin() + static_cast<std::ptrdiff_t>(n));
    const double remaining_same = static_cast<double>(n - rows_done) * static_cast<double>(n) * last_same;

    out.total.value = out.opposite_sign + out.same_sign;
    out.total.terms_used = out.opposite_sign_terms + out.same_sign_terms;
    out.total.tail_estimate = fitted_tail(fit_gammas, increments, a, zero_cutoff.value) + remaining_same;
    return out;
}

CutoffR cutoff_from_index(const ZeroSet& zeros, std::size_t i, bool below) {
    const std::size_t n = zeros.size();
    while (i + 1 < n) {
        const double gap = zeros[i + 1] - zeros[i];
        if (gap >= 2e-3)
            return {0.5 * (zeros[i] + zeros[i + 1]), static_cast<std::int64_t>(i),
                    static_cast<std::int64_t>(i + 1), below};
        ++i;
    }
    const double step = n >= 2 ? 0.5 * (zeros[n - 1] - zeros[n - 2]) : 0.5;
    return {zeros[n - 1] + std::max(step, 1e-3), static_cast<std::int64_t>(n - 1), -1, below};
}

}  // namespace

ZeroSet ZeroSet::from_ordinates(std::vector<double> ordinates, std::string source) {
    for (std::size_t i = 0; i < ordinates.size(); ++i) {
        if (!(ordinates[i] > 0.0) || !std::isfinite(ordinates[i]))
            throw DomainError("zero table: ordinates must be positive and finite");
        if (i > 0 && ordinates[i] < ordinates[i - 1])
            throw DomainError("zero table: ordinates must be non-decreasing");
    }
    ZeroSet z;
    z.ordinates_ = std::move(ordinates);
    z.source_ = std::move(source);
    return z;
}

std::size_t ZeroSet::count_up_to(double height) const {
    return static_cast<std::size_t>(std::upper_bound(ordinates_.begin(), ordinates_.end(), height) -
                                    ordinates_.begin());
}

ZeroSet ZeroSet::truncated(std::size_t n) const {
    ZeroSet z;
    n = std::min(n, ordinates_.size());
    z.ordinates_.assign(ordinates_.begin(), ordinates_.begin() + static_cast<std::ptrdiff_t>(n));
    z.source_ = source_ + " (first " + std::to_string(n) + ")";
    return z;
}

ZeroSet parse_zeros(const std::string& text, const std::string& source) {
    std::istringstream in(text);
    std::string line;
    std::int64_t line_no = 0;
    std::vector<double> values;
    std::vector<std::int64_t> lines;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto last = line.find_last_not_of(" \t\r");
        const std::string field = line.substr(first, last - first + 1);
        char* end = nullptr;
        const double v = std::strtod(field.c_str(), &end);
        if (end != field.c_str() + field.size() || !std::isfinite(v))
            throw ParseError("zeros file: cannot parse '" + field + "' at line " + std::to_string(line_no), line_no);
        if (!(v > 0.0))
            throw ParseError("zeros file: non-positive ordinate at line " + std::to_string(line_no), line_no);
        if (!values.empty() && v < values.back())
            throw ParseError("zeros file: monotonicity violation at line " + std::to_string(line_no), line_no);
        values.push_back(v);
        lines.push_back(line_no);
    }
    if (values.size() < 2)
        throw ParseError("zeros file: need at least two ordinates, found " + std::to_string(values.size()),
                         line_no);
    if (!(values[0] > 14.0 && values[0] < 14.2))
        throw ParseError("zeros file: first ordinate not in (14, 14.2)", lines[0]);
    if (!(values[1] > 21.0 && values[1] < 21.1))
        throw ParseError("zeros file: second ordinate not in (21, 21.1)", lines[1]);
    return ZeroSet::from_ordinates(std::move(values), source);
}

ZeroSet load_zeros(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open zeros file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_zeros(buf.str(), path.string());
}

CutoffR choose_cutoff(const ZeroSet& zeros, double target) {
    if (zeros.size() == 0) throw CapacityError("choose_cutoff: empty zero table");
    if (target > zeros.last())
        throw CapacityError("choose_cutoff: target " + std::to_string(target) + " beyond last ordinate " +
                            std::to_string(zeros.last()));
    if (target < zeros[0]) return cutoff_from_index(zeros, 0, true);
    return cutoff_from_index(zeros, zeros.count_up_to(target) - 1, false);
}

CutoffR cutoff_after_count(const ZeroSet& zeros, std::size_t n) {
    if (n == 0) return empty_cutoff(zeros);
    if (n > zeros.size())
        throw CapacityError("cutoff_after_count: table holds only " + std::to_string(zeros.size()) + " zeros");
    return cutoff_from_index(zeros, n - 1, false);
}

CutoffR empty_cutoff(const ZeroSet& zeros) {
    if (zeros.size() == 0) return {1.0, -1, -1, true};
    return {0.5 * zeros[0], -1, 0, true};
}

SeriesResult sigma1(cplx point, double lambda, const SievingKernel& kernel, const ZeroSet& zeros,
                    const CutoffR& zero_cutoff) {
    return sigma1_impl(point, make_weight(lambda, false), kernel, zeros, zero_cutoff);
}

Sigma2Parts sigma2_square_parts(cplx point, double lambda, const SievingKernel& kernel, const ZeroSet& zeros,
                                const CutoffR& zero_cutoff) {
    return sigma2_impl(point, make_weight(lambda, false), kernel, zeros, zero_cutoff);
}

SeriesResult sigma2_square(cplx point, double lambda, const SievingKernel& kernel, const ZeroSet& zeros,
                           const CutoffR& zero_cutoff) {
    return sigma2_square_parts(point, lambda, kernel, zeros, zero_cutoff).total;
}

Sigma4Result sigma4(cplx point, double lambda, const SievingKernel& kernel, const ZeroSet& zeros) {
    check_strip(point, 0.5, 0.75, "sigma4");
    const MellinWeight w = make_weight(lambda, false);
    const auto g = zeros.ordinates();
    const std::size_t n = g.size();
    Sigma4Result out;
    out.total.truncation = static_cast<std::int64_t>(n);
    if (n == 0) return out;

    const cplx base = 1.0 - 2.0 * point;
    const double log_two_pi = std::log(kTwoPi);
    const auto n_blocks = block_count(0, static_cast<std::int64_t>(n), kRowBlock);
    std::vector<ComplexCompensatedSum> block_sums(n_blocks), block_diag(n_blocks);
    std::vector<std::int64_t> block_terms(n_blocks, 0);
    std::vector<cplx> row_sums(n);
    parallel_for_blocks(n_blocks, [&](std::int64_t b) {
        const auto range = block_range(0, static_cast<std::int64_t>(n), kRowBlock, b);
        for (auto i = static_cast<std::size_t>(range.begin); i < static_cast<std::size_t>(range.end); ++i) {
            const double gi = g[i];
            const double width = std::sqrt(gi);
            const double log_g = std::log(gi);
            // Strict band |g_j - g_i| < sqrt(g_i).
            const auto lo = std::upper_bound(g.begin(), g.end(), gi - width);
            const auto hi = std::lower_bound(g.begin(), g.end(), gi + width);
            ComplexCompensatedSum row;
            for (auto it = lo; it != hi; ++it) {
                const double diff = gi - *it;
                const cplx z = base + cplx(0.0, diff);
                const cplx lt = log_two_pi + (-2.0 * point + cplx(0.0, diff)) * log_g + kernel.log_mellin(z);
                const cplx t = w.apply(lt, z);
                row.add(t);
                if (it - g.begin() == static_cast<std::ptrdiff_t>(i)) block_diag[b].add(t);
                ++block_terms[b];
            }
            row_sums[i] = row.value();
            block_sums[b].merge(row);
        }
    });
    ComplexCompensatedSum total, diag;
    for (std::int64_t b = 0; b < n_blocks; ++b) {
        total.merge(block_sums[b]);
        diag.merge(block_diag[b]);
        out.total.terms_used += block_terms[b];
    }
    out.total.value = total.value();
    out.diagonal = diag.value();
    out.diagonal_terms = static_cast<std::int64_t>(n);

    // Rows whose band reaches past the table are incomplete; fit on the last
    // complete rows and integrate from the first incomplete one.
    std::size_t complete = n;
    while (complete > 0 && g[complete - 1] + std::sqrt(g[complete - 1]) > g[n - 1]) --complete;
    if (complete == 0) complete = n;
    const std::size_t fit_count = std::min(complete, std::max<std::size_t>(10, complete / 10));
    const std::size_t fit_start = complete - fit_count;
    std::vector<double> fit_g(g.begin() + static_cast<std::ptrdiff_t>(fit_start),
                              g.begin() + static_cast<std::ptrdiff_t>(complete));
    std::vector<cplx> fit_inc(row_sums.begin() + static_cast<std::ptrdiff_t>(fit_start),
                              row_sums.begin() + static_cast<std::ptrdiff_t>(complete));
    const double zero_cutoff = complete < n ? g[complete] : g[n - 1];
    out.total.tail_estimate = fitted_tail(fit_g, fit_inc, 2.0 * point.real(), zero_cutoff);
    return out;
}

PairCorrelation pair_correlation_F(double alpha, const ZeroSet& zeros, double height) {
    if (zeros.size() == 0 || height < zeros[0]) throw DomainError("pair_correlation_F: T below the first ordinate");
    if (height > zeros.last())
        throw CapacityError("pair_correlation_F: T beyond the last ordinate " + std::to_string(zeros.last()));
    const std::size_t n = zeros.count_up_to(height);
    const double L = std::log(height);
    std::vector<cplx> phase(n);
    for (std::size_t k = 0; k < n; ++k) phase[k] = std::polar(1.0, alpha * zeros[k] * L);

    const auto n_blocks = block_count(0, static_cast<std::int64_t>(n), kRowBlock);
    std::vector<ComplexCompensatedSum> block_sums(n_blocks);
    parallel_for_blocks(n_blocks, [&](std::int64_t b) {
        const auto range = block_range(0, static_cast<std::int64_t>(n), kRowBlock, b);
        for (auto i = static_cast<std::size_t>(range.begin); i < static_cast<std::size_t>(range.end); ++i) {
            double re = 0.0, im = 0.0;
            const double gi = zeros[i];
            for (std::size_t j = 0; j < n; ++j) {
                const double d = gi - zeros[j];
                const double wgt = 4.0 / (4.0 + d * d);
                // phase[i] * conj(phase[j])
                re += wgt * (phase[i].real() * phase[j].real() + phase[i].imag() * phase[j].imag());
                im += wgt * (phase[i].imag() * phase[j].real() - phase[i].real() * phase[j].imag());
            }
            block_sums[b].add(cplx(re, im));
        }
    });
    ComplexCompensatedSum total;
    for (const auto& bs : block_sums) total.merge(bs);
    const cplx v = total.value() * (kTwoPi / (height * L));
    return {alpha, height, static_cast<std::int64_t>(n), v.real(), v.imag()};
}

SeriesResult sigma_difference(cplx point, double lambda, const SievingKernel& kernel, const ZeroSet& zeros,
                              const CutoffR& zero_cutoff) {
    const MellinWeight w = make_weight(lambda, true);
    const SeriesResult a = sigma1_impl(point, w, kernel, zeros, zero_cutoff);
    const SeriesResult b = sigma2_impl(point, w, kernel, zeros, zero_cutoff).total;
    SeriesResult out;
    out.value = a.value + b.value;
    out.terms_used = a.terms_used + b.terms_used;
    out.truncation = a.truncation;
    out.cutoff = zero_cutoff;
    out.tail_estimate = a.tail_estimate + b.tail_estimate;
    return out;
}

SeriesResult g_lambda(cplx point, double lambda, const SievingKernel& kernel, const ZeroSet& zeros,
                      const CutoffR& zero_cutoff) {
    SeriesResult out = sigma_difference(point, lambda, kernel, zeros, zero_cutoff);
    out.value -= remainder_R(lambda, kernel) / (point - 0.5);
    return out;
}

OmegaReport omega_probe(double lambda, const SievingKernel& kernel, const ZeroSet& zeros,
                        const std::vector<double>& delta_grid) {
    OmegaReport rep;
    rep.lambda = lambda;
    rep.kernel = kernel.name();
    rep.zeros_used = static_cast<std::int64_t>(zeros.size());
    if (delta_grid.empty()) throw DomainError("omega_probe: empty delta grid");
    const CutoffR zero_cutoff = cutoff_after_count(zeros, zeros.size());
    for (double delta : delta_grid) {
        if (!(delta > 0.0 && delta < 0.25)) throw DomainError("omega_probe: delta must lie in (0, 1/4)");
        const SeriesResult d = sigma_difference(cplx(0.5 + delta, 0.0), lambda, kernel, zeros, zero_cutoff);
        rep.rows.push_back({delta, delta * d.value.real(), delta * d.tail_estimate, delta * d.value.imag()});
    }
    std::vector<OmegaRow> sorted = rep.rows;
    std::sort(sorted.begin(), sorted.end(), [](const OmegaRow& x, const OmegaRow& y) { return x.delta < y.delta; });
    if (sorted.size() == 1) {
        rep.estimate = sorted[0].scaled;
    } else {
        const auto& r1 = sorted[0];
        const auto& r2 = sorted[1];
        rep.estimate = r1.scaled - r1.delta * (r2.scaled - r1.scaled) / (r2.delta - r1.delta);
    }
    return rep;
}

cplx opposite_pair_exact(double ordinate_a, double ordinate_b, double delta, double lambda,
                         const SievingKernel& kernel) {
    const cplx lt = special::log_gamma_any(cplx(-delta, ordinate_a)) +
                    special::log_gamma_any(cplx(-delta, -ordinate_b)) +
                    log_cosh(kPi * (ordinate_a + ordinate_b) / 2.0) +
                    log_mellin_M(kernel, lambda, cplx(-2.0 * delta, ordinate_a - ordinate_b));
    return std::exp(lt);
}

cplx opposite_pair_asymptotic(double ordinate_a, double ordinate_b, double delta, double lambda,
                              const SievingKernel& kernel) {
    const cplx shift(-2.0 * delta, ordinate_a - ordinate_b);
    const double phase =
        ordinate_a * std::log(ordinate_a) - ordinate_a - ordinate_b * std::log(ordinate_b) + ordinate_b;
    const cplx lt = std::log(kPi) + (-delta - 0.5) * std::log(ordinate_a * ordinate_b) + cplx(0.0, phase) +
                    shift * std::log(lambda) + kernel.log_mellin(shift);
    return std::exp(lt);
}

double log_squared_power_tail(double zero_cutoff, double a) {
    if (!(a > 1.0)) throw DomainError("log_squared_power_tail: need a > 1");
    const double b = a - 1.0;
    const double l = std::log(zero_cutoff / kTwoPi);
    return std::pow(zero_cutoff, -b) / b * (l * l + 2.0 * l / b + 2.0 / (b * b));
}

}  // namespace ppz
