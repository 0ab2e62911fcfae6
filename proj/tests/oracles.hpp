// Independent reference implementations used only by the tests. Each one is
// the most direct route to the quantity, sharing no code with the library.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

// Plain sieve of Eratosthenes over a byte per integer.
inline std::vector<char> sieve(std::uint64_t limit) {
    std::vector<char> is(limit + 1, 1);
    is[0] = 0;
    if (limit >= 1) is[1] = 0;
    for (std::uint64_t i = 2; i * i <= limit; ++i)
        if (is[i])
            for (std::uint64_t j = i * i; j <= limit; j += i) is[j] = 0;
    return is;
}

inline std::uint64_t pair_count(const std::vector<char>& is, std::uint64_t two_r, std::uint64_t x) {
    std::uint64_t c = 0;
    for (std::uint64_t p = 2; p <= x; ++p)
        if (is[p] && is[p + two_r]) ++c;
    return c;
}

// Lambda(n) from the sieve: n = p^k with p the least prime factor.
inline double lambda_from_sieve(const std::vector<char>& is, std::uint64_t n) {
    if (n < 2) return 0.0;
    if (is[n]) return std::log(static_cast<double>(n));
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        std::uint64_t m = n;
        while (m % p == 0) m /= p;
        return m == 1 ? std::log(static_cast<double>(p)) : 0.0;
    }
    return 0.0;
}

// Long double accumulation in a different loop order (k outer, l inner, no
// banding): sum over k, l <= N + reach with min(k, l) <= N of
// Lambda(k) Lambda(l) k^-s l^-s w(k - l).
template <class Weight>
std::complex<double> naive_double_sum(const std::vector<char>& is, std::uint64_t n_max, std::uint64_t reach,
                                      std::complex<double> point, Weight&& w) {
    std::complex<long double> acc = 0;
    for (std::uint64_t k = 2; k <= n_max + reach; ++k) {
        const double lk = lambda_from_sieve(is, k);
        if (lk == 0.0) continue;
        for (std::uint64_t l = 2; l <= n_max + reach; ++l) {
            if (k > n_max && l > n_max) continue;
            const double ll = lambda_from_sieve(is, l);
            if (ll == 0.0) continue;
            const double wt = w(static_cast<double>(k) - static_cast<double>(l));
            if (wt == 0.0) continue;
            const std::complex<double> t = lk * ll * wt * std::pow(static_cast<double>(k), -point) *
                                           std::pow(static_cast<double>(l), -point);
            acc += std::complex<long double>(t.real(), t.imag());
        }
    }
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

// Composite Simpson on [a, b] with n (even) panels.
template <class F>
double simpson(F&& f, double a, double b, int n) {
    const double h = (b - a) / n;
    double acc = f(a) + f(b);
    for (int i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    return acc * h / 3.0;
}

// Deterministic generator for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    std::uint64_t integer(std::uint64_t lo, std::uint64_t hi) {
        return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
    }
    std::uint64_t even(std::uint64_t lo, std::uint64_t hi) { return 2 * integer(lo / 2, hi / 2); }

private:
    std::mt19937_64 rng_;
};

}  // namespace oracle
