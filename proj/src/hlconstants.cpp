#include "ppz/hlconstants.hpp"

#include <cmath>
#include <functional>
#include <numeric>

#include "ppz/errors.hpp"
#include "ppz/sieve.hpp"
#include "ppz/summation.hpp"

namespace ppz {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw CapacityError("rational arithmetic overflow");
    return out;
}

// E1(x) = int_x^inf e^{-u}/u du.
double exp_integral_e1(double arg) { return -std::expint(-arg); }

double simpson_step(const std::function<double(double)>& f, double a, double b, double fa, double fm,
                    double fb, double whole, double eps, int depth) {
    const double mid = 0.5 * (a + b);
    const double lm = 0.5 * (a + mid), rm = 0.5 * (mid + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (mid - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - mid) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * eps) return left + right + delta / 15.0;
    return simpson_step(f, a, mid, fa, flm, fm, left, eps / 2.0, depth - 1) +
           simpson_step(f, mid, b, fm, frm, fb, right, eps / 2.0, depth - 1);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double eps) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_step(f, a, b, fa, fm, fb, whole, eps, 48);
}

}  // namespace

Rational Rational::make(std::uint64_t num, std::uint64_t den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    const std::uint64_t g = std::gcd(num, den);
    return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

Rational Rational::operator*(const Rational& other) const {
    const std::uint64_t g1 = std::gcd(num, other.den);
    const std::uint64_t g2 = std::gcd(other.num, den);
    const std::uint64_t n = checked_mul(g1 ? num / g1 : num, g2 ? other.num / g2 : other.num);
    const std::uint64_t d = checked_mul(g2 ? den / g2 : den, g1 ? other.den / g1 : other.den);
    return make(n, d);
}

TwinPrimeConstant twin_prime_constant_detail(std::uint64_t prime_limit) {
    if (prime_limit < 1000) throw DomainError("twin_prime_constant: prime_limit must be >= 1000");
    const PrimeTable table = PrimeTable::build(prime_limit);
    CompensatedSum log_product;
    table.for_each_prime(3, prime_limit, [&](std::uint64_t p) {
        const double q = static_cast<double>(p - 1);
        log_product.add(std::log1p(-1.0 / (q * q)));
    });

    TwinPrimeConstant out;
    out.prime_limit = prime_limit;
    out.finite_product = std::exp(log_product.value());

    // Tail: sum_{p > P} -log(1 - 1/(p-1)^2) against int_P^inf dt/(t^2 log t)
    // = E1(log P). By partial summation the difference is at most
    // (7/3) B(P)/P^2 for |pi(t) - li(t)| <= B(t), plus 2/(P^2 log P) for the
    // (p-1)^2 and log1p corrections. B(t) = sqrt(t)/log t (1.95 + 3.9/log t +
    // 19.5/log^2 t) holds for 2657 <= t <= 1.4e25 (Buthe); beyond that the
    // whole tail is below 1e-26. Below 2657 fall back to the crude
    // pi(t) < 1.25506 t/log t bound on the tail itself.
    const double P = static_cast<double>(prime_limit);
    const double logP = std::log(P);
    out.tail_factor = std::exp(-exp_integral_e1(logP));
    out.value = out.finite_product * out.tail_factor;
    if (prime_limit >= 2657) {
        const double b = std::sqrt(P) / logP * (1.95 + 3.9 / logP + 19.5 / (logP * logP));
        out.error_bound = 3.0 * b / (P * P) + 2.0 / (P * P * logP);
    } else {
        out.error_bound = 2.6 / (P * logP);
    }
    return out;
}

double twin_prime_constant(std::uint64_t prime_limit) {
    return twin_prime_constant_detail(prime_limit).value;
}

double twin_prime_partial_product(std::uint64_t upper) {
    if (upper < 2) throw DomainError("twin_prime_partial_product: upper must be >= 2");
    const PrimeTable table = PrimeTable::build(std::max<std::uint64_t>(upper, 2));
    CompensatedSum log_product;
    table.for_each_prime(3, upper, [&](std::uint64_t p) {
        const double q = static_cast<double>(p - 1);
        log_product.add(std::log1p(-1.0 / (q * q)));
    });
    return std::exp(log_product.value());
}

Rational c2r_ratio(std::uint64_t half_gap) {
    if (half_gap == 0) throw DomainError("c2r ratio: r must be >= 1");
    while (half_gap % 2 == 0) half_gap /= 2;
    Rational out{1, 1};
    for (std::uint64_t p = 3; p <= half_gap / p; p += 2) {
        if (half_gap % p != 0) continue;
        out = out * Rational::make(p - 1, p - 2);
        while (half_gap % p == 0) half_gap /= p;
    }
    if (half_gap > 1) out = out * Rational::make(half_gap - 1, half_gap - 2);
    return out;
}

SingularConstants::SingularConstants(std::uint64_t prime_limit)
    : c2_(twin_prime_constant_detail(prime_limit)) {}

double SingularConstants::c_2r(std::uint64_t half_gap) const { return c2_.value * c2r_ratio(half_gap).to_double(); }

const SingularConstants& default_singular_constants() {
    static const SingularConstants constants;
    return constants;
}

double c_2r(std::uint64_t half_gap) { return default_singular_constants().c_2r(half_gap); }

std::vector<double> singular_sums(std::uint64_t terms) {
    if (terms == 0) throw DomainError("singular_sum: m must be >= 1");
    const double c2 = default_singular_constants().c2();
    std::vector<double> out;
    out.reserve(terms);
    CompensatedSum ratio_sum;
    for (std::uint64_t half_gap = 1; half_gap <= terms; ++half_gap) {
        ratio_sum.add(c2r_ratio(half_gap).to_double());
        out.push_back(c2 * ratio_sum.value());
    }
    return out;
}

double singular_sum(std::uint64_t terms) { return singular_sums(terms).back(); }

double li2(double upto) {
    if (!(upto >= 2.0)) throw DomainError("li2: x must be >= 2");
    if (upto == 2.0) return 0.0;
    const auto f = [](double t) {
        const double l = std::log(t);
        return 1.0 / (l * l);
    };
    // Pieces [2, e^2], then doubling intervals; each to ~1e-12 relative.
    const double e2 = std::exp(2.0);
    CompensatedSum acc;
    double a = 2.0;
    double b = std::min(upto, e2);
    while (a < upto) {
        const double piece_scale = (b - a) * f(a);
        acc.add(adaptive_simpson(f, a, b, 1e-12 * piece_scale));
        a = b;
        b = std::min(upto, 2.0 * b);
    }
    return acc.value();
}

double remainder_R(double lambda, const SievingKernel& kernel) {
    if (!(lambda > 0.0)) throw DomainError("remainder_R: lambda must be positive");
    const auto& constants = default_singular_constants();
    CompensatedSum acc;
    for (std::uint64_t half_gap = 1; 2.0 * static_cast<double>(half_gap) <= lambda; ++half_gap)
        acc.add(kernel.eval_E(2.0 * static_cast<double>(half_gap) / lambda) * constants.c_2r(half_gap));
    return 2.0 * acc.value() - kernel.area() * (lambda - 1.0);
}

}  // namespace ppz
