// hlconstants.hpp
// Twin-prime constant, exact C_{2r}/C_2 ratios, partial sums S_m, li2 and the
// kernel remainder R(lambda).

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ppz/kernels.hpp"

namespace ppz {

// Non-negative fraction num/den in lowest terms. Arithmetic throws
// CapacityError on 64-bit overflow.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    static Rational make(std::uint64_t num, std::uint64_t den);
    Rational operator*(const Rational& other) const;
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
    bool operator==(const Rational&) const = default;
};

struct TwinPrimeConstant {
    double value = 0.0;
    double finite_product = 0.0;  // prod over 3 <= p <= prime_limit
    double tail_factor = 1.0;     // exp(-E1(log prime_limit))
    // Bound on |value - C_2| (see twin_prime_constant in hlconstants.cpp).
    double error_bound = 0.0;
    std::uint64_t prime_limit = 0;
};

// C_2 = prod_{p > 2} (1 - 1/(p-1)^2) from primes up to prime_limit plus a tail
// correction. DomainError for prime_limit < 10^3.
TwinPrimeConstant twin_prime_constant_detail(std::uint64_t prime_limit);
double twin_prime_constant(std::uint64_t prime_limit);

// The bare product over 3 <= p <= upper, no tail (upper >= 2).
double twin_prime_partial_product(std::uint64_t upper);

// prod over odd primes p | r of (p-1)/(p-2). DomainError for r == 0.
Rational c2r_ratio(std::uint64_t half_gap);

class SingularConstants {
public:
    explicit SingularConstants(std::uint64_t prime_limit = 10'000'000);
    explicit SingularConstants(const TwinPrimeConstant& c2) : c2_(c2) {}

    double c2() const { return c2_.value; }
    const TwinPrimeConstant& c2_detail() const { return c2_; }
    Rational ratio(std::uint64_t half_gap) const { return c2r_ratio(half_gap); }
    double c_2r(std::uint64_t half_gap) const;

private:
    TwinPrimeConstant c2_;
};

// Process-wide constants (computed once, prime limit 10^7).
const SingularConstants& default_singular_constants();

// C_{2r} = C_2 * ratio(r). DomainError for r == 0.
double c_2r(std::uint64_t half_gap);

// S_m = sum_{r=1}^m C_{2r}. DomainError for m == 0.
double singular_sum(std::uint64_t terms);
// S_1, ..., S_m in one pass.
std::vector<double> singular_sums(std::uint64_t terms);

// int_2^x dt / log^2 t by adaptive Simpson. DomainError for x < 2.
double li2(double upto);

// R(lambda) = 2 sum_{0 < 2r <= lambda} E(2r/lambda) C_{2r} - A^E (lambda - 1).
double remainder_R(double lambda, const SievingKernel& kernel);

}  // namespace ppz
