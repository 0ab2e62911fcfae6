#include "ppz/special.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "ppz/errors.hpp"

namespace ppz::special {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfLog2Pi = 0.91893853320467274178;  // log(2 pi) / 2

// Lanczos g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// B_{2k} / (2k (2k-1)) for the Stirling series, k = 1..10.
constexpr std::array<double, 10> kStirling = {
    1.0 / 12.0,           -1.0 / 360.0,         1.0 / 1260.0,
    -1.0 / 1680.0,        1.0 / 1188.0,         -691.0 / 360360.0,
    1.0 / 156.0,          -3617.0 / 122400.0,   43867.0 / 244188.0,
    -174611.0 / 125400.0};

// B_{2k} / (2k)! for Euler-Maclaurin, k = 1..8.
constexpr std::array<double, 8> kEulerMaclaurin = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0};

void check_gamma_pole(cplx arg, double tol) {
    if (arg.real() <= 0.5) {
        const double k = std::round(arg.real());
        if (k <= 0.0 && std::abs(arg - cplx(k, 0.0)) < tol)
            throw NearPoleError("gamma: argument within " + std::to_string(tol) +
                                    " of pole at " + std::to_string(k),
                                cplx(k, 0.0));
    }
}

// log Gamma(z) via Lanczos, Re z >= 1/2.
cplx lanczos_log_gamma(cplx arg) {
    const cplx zm = arg - 1.0;
    cplx acc = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i)
        acc += kLanczos[i] / (zm + static_cast<double>(i));
    const cplx t = zm + kLanczosG + 0.5;
    return kHalfLog2Pi + (zm + 0.5) * std::log(t) - t + std::log(acc);
}

// Stirling series, valid once |z| >= 15 and |arg z| <= 3 pi / 4.
cplx stirling_log_gamma(cplx arg) {
    const cplx inv = 1.0 / arg;
    const cplx inv2 = inv * inv;
    cplx corr = 0.0;
    cplx p = inv;
    for (double c : kStirling) {
        const cplx term = c * p;
        corr += term;
        if (std::abs(term) < 1e-17 * std::abs(corr)) break;
        p *= inv2;
    }
    return (arg - 0.5) * std::log(arg) - arg + kHalfLog2Pi + corr;
}

bool stirling_ok(cplx arg) {
    return std::abs(arg) >= 15.0 && arg.real() >= -std::abs(arg.imag());
}

cplx shifted_log_gamma(cplx arg) {
    cplx shift_logs = 0.0;
    cplx w = arg;
    while (!stirling_ok(w)) {
        shift_logs += std::log(w);
        w += 1.0;
    }
    return stirling_log_gamma(w) - shift_logs;
}

}  // namespace

cplx gamma(cplx arg) {
    check_gamma_pole(arg, 1e-10);
    if (arg.real() < 0.5) {
        // Gamma(z) = pi / (sin(pi z) Gamma(1 - z)).
        const cplx lg = std::log(kPi) - log_sin(kPi * arg) - lanczos_log_gamma(1.0 - arg);
        return std::exp(lg);
    }
    return std::exp(lanczos_log_gamma(arg));
}

LogGamma log_gamma(cplx arg) {
    if (std::abs(std::arg(arg)) >= kPi - 0.05)
        throw BranchError("log_gamma: |arg z| >= pi - 0.05 (too close to the cut)");
    check_gamma_pole(arg, 1e-10);
    const cplx v = shifted_log_gamma(arg);
    return LogGamma{arg, v.real(), v.imag()};
}

cplx log_gamma_any(cplx arg) {
    if (arg.real() < 0.0 && std::abs(std::arg(arg)) >= 0.75 * kPi) {
        check_gamma_pole(arg, 1e-10);
        return std::log(kPi) - log_sin(kPi * arg) - shifted_log_gamma(1.0 - arg);
    }
    return shifted_log_gamma(arg);
}

cplx log_sin(cplx arg) {
    const double y = arg.imag();
    if (std::abs(y) < 20.0) return std::log(std::sin(arg));
    const cplx iz(-y, arg.real());  // i z
    if (y > 0.0) {
        // sin z = e^{-iz} (1 - e^{2iz}) * (i/2)
        return -iz + std::log(1.0 - std::exp(2.0 * iz)) + cplx(-std::numbers::ln2, kPi / 2);
    }
    // sin z = e^{iz} (1 - e^{-2iz}) / (2i)
    return iz + std::log(1.0 - std::exp(-2.0 * iz)) + cplx(-std::numbers::ln2, -kPi / 2);
}

cplx log_cos(cplx arg) {
    const double y = arg.imag();
    if (std::abs(y) < 20.0) return std::log(std::cos(arg));
    const cplx iz(-y, arg.real());
    if (y > 0.0) return -iz + std::log(1.0 + std::exp(2.0 * iz)) - std::numbers::ln2;
    return iz + std::log(1.0 + std::exp(-2.0 * iz)) - std::numbers::ln2;
}

ZetaPair zeta_with_derivative(cplx point) {
    if (!(point.real() > 0.0 && point.real() <= 4.0) || std::abs(point.imag()) > 1e3)
        throw DomainError("zeta: s outside supported domain 0 < Re s <= 4, |Im s| <= 1e3");
    if (std::abs(point - 1.0) < 1e-8) throw NearPoleError("zeta: s within 1e-8 of the pole at 1", 1.0);

    const auto n_cut = static_cast<int>(std::max(20.0, std::ceil(2.0 * std::abs(point.imag()))));
    cplx arg = 0.0, dz = 0.0;
    // Head: sum_{n < N} n^{-s}, summed from the small tail end upward.
    for (int n = n_cut - 1; n >= 1; --n) {
        const double ln = std::log(static_cast<double>(n));
        const cplx t = std::exp(-point * ln);
        arg += t;
        dz -= ln * t;
    }
    const double big_n = n_cut;
    const double log_n = std::log(big_n);
    const cplx n_pow = std::exp(-point * log_n);  // N^{-s}
    const cplx sm1 = point - 1.0;

    arg += big_n * n_pow / sm1 + 0.5 * n_pow;
    dz += -log_n * big_n * n_pow / sm1 - big_n * n_pow / (sm1 * sm1) - 0.5 * log_n * n_pow;

    // Corrections B_{2k}/(2k)! * P_k(s) * N^{-s-2k+1},
    // P_k(s) = s (s+1) ... (s+2k-2).
    cplx poly = point;       // P_1
    cplx dpoly = 1.0;    // P_1'
    cplx n_fac = n_pow / big_n;  // N^{-s-1}
    for (std::size_t k = 0; k < kEulerMaclaurin.size(); ++k) {
        const double c = kEulerMaclaurin[k];
        arg += c * poly * n_fac;
        dz += c * (dpoly - log_n * poly) * n_fac;
        // P_{k+1} = P_k (s + 2k + 1)(s + 2k + 2), with k zero-based here.
        const cplx a = point + static_cast<double>(2 * k + 1);
        const cplx b = point + static_cast<double>(2 * k + 2);
        dpoly = dpoly * a * b + poly * (a + b);
        poly = poly * a * b;
        n_fac /= big_n * big_n;
    }
    return {arg, dz};
}

cplx zeta(cplx point) { return zeta_with_derivative(point).zeta; }

cplx zeta_prime(cplx point) { return zeta_with_derivative(point).zeta_prime; }

cplx zeta_log_deriv(cplx point, std::span<const double> ordinates) {
    if (!ordinates.empty()) {
        const double target = std::abs(point.imag());
        auto it = std::lower_bound(ordinates.begin(), ordinates.end(), target);
        double best = -1.0;
        double best_dist = 1e300;
        for (auto cand : {it, it == ordinates.begin() ? it : it - 1}) {
            if (cand == ordinates.end()) continue;
            const double d = std::abs(cplx(point.real() - 0.5, target - *cand));
            if (d < best_dist) {
                best_dist = d;
                best = *cand;
            }
        }
        if (best_dist < 1e-6)
            throw ZeroProximityError("zeta_log_deriv: s within 1e-6 of a zeta zero", best);
    }
    const ZetaPair zp = zeta_with_derivative(point);
    if (std::abs(zp.zeta) == 0.0)
        throw ZeroProximityError("zeta_log_deriv: zeta(s) vanishes", std::abs(point.imag()));
    return zp.zeta_prime / zp.zeta;
}

}  // namespace ppz::special
