#include <doctest.h>

#include <cstring>

#include "oracles.hpp"
#include "ppz/dirichlet.hpp"
#include "ppz/errors.hpp"
#include "ppz/hlconstants.hpp"
#include "ppz/special.hpp"
#include "ppz/summation.hpp"

using namespace ppz;
using cplx = std::complex<double>;

namespace {

const PrimeTable& primes() {
    static const PrimeTable t = PrimeTable::build(2'000'000);
    return t;
}

const std::vector<char>& small_sieve() {
    static const std::vector<char> is = oracle::sieve(5000);
    return is;
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("tail bound helpers") {
    // Bound must dominate the model and a direct partial tail.
    const double a = 1.6;
    CHECK(lambda_log_tail_bound(1000, a, 0.0) > d0_model_tail(1000, a));
    double direct = 0.0;
    primes().for_each_prime_power(2'000'000, [&](std::uint64_t n, double l) {
        if (n > 1000) direct += l * std::log(static_cast<double>(n)) * std::pow(static_cast<double>(n), -a);
    });
    CHECK(direct < lambda_log_tail_bound(1000, a, 0.0));
    CHECK(lambda_log_tail_bound(1000, a, 10.0) > lambda_log_tail_bound(1000, a, 0.0));

    const auto plan = TruncationPlan::adaptive(cplx(1.0, 0.0), 1e-2, 100'000'000);
    CHECK(plan.tail_bound < 1e-2);
    CHECK(TruncationPlan::adaptive(cplx(1.0, 0.0), 1e-300, 10'000).n_terms == 10'000);
    CHECK_THROWS_AS(TruncationPlan::make(cplx(0.5, 0.0), 100), DomainError);
    CHECK_THROWS_AS(TruncationPlan::make(cplx(1.0, 0.0), 2), DomainError);
}

TEST_CASE("d_2r matches an ascending brute-force loop bit for bit") {
    const std::uint64_t n_max = 1'000'000;
    const cplx point(2.0, 0.0);
    const auto plan = TruncationPlan::make(point, n_max);
    const auto got = d_2r(point, 2, plan, primes());
    const auto& t = primes();
    ComplexCompensatedSum acc;
    for (std::uint64_t n = 2; n <= n_max; ++n) {
        const double a = t.von_mangoldt(n);
        if (a == 0.0) continue;
        const double b = t.von_mangoldt(n + 2);
        if (b == 0.0) continue;
        acc.add(pair_term(point, n, a, n + 2, b));
    }
    const cplx ref = acc.value();
    CHECK(std::memcmp(&ref, &got.value, sizeof ref) == 0);
    CHECK(got.tail_is_bound);
}

TEST_CASE("d_2r against a naive long double oracle") {
    const auto& is = small_sieve();
    for (std::uint64_t two_r : {0u, 2u, 6u, 30u}) {
        for (cplx point : {cplx(1.3, 0.0), cplx(0.8, 4.0), cplx(2.0, -1.5)}) {
            const std::uint64_t n_max = 3000;
            std::complex<long double> acc = 0;
            for (std::uint64_t n = 2; n <= n_max; ++n) {
                const double a = oracle::lambda_from_sieve(is, n), b = oracle::lambda_from_sieve(is, n + two_r);
                if (a == 0.0 || b == 0.0) continue;
                const cplx term = a * b * std::pow(static_cast<double>(n), -point) *
                                  std::pow(static_cast<double>(n + two_r), -point);
                acc += std::complex<long double>(term.real(), term.imag());
            }
            const cplx ref(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
            const auto got = d_2r(point, two_r, TruncationPlan::make(point, n_max), primes());
            CHECK(rel(got.value, ref) < 1e-12);
        }
    }
}

TEST_CASE("D_0 at s = 3/2 from the logarithmic derivative of zeta") {
    // D_0(s) = (zeta'/zeta)'(2s) - sum_{p^k, k >= 2} (k - 1) log^2 p p^{-2ks}
    const double h = 1e-3;
    const auto zl = [](double w) { return special::zeta_log_deriv(cplx(w, 0.0)).real(); };
    const double deriv = (-zl(3 + 2 * h) + 8 * zl(3 + h) - 8 * zl(3 - h) + zl(3 - 2 * h)) / (12 * h);
    double correction = 0.0;
    const auto& is = small_sieve();
    for (std::uint64_t p = 2; p < 5000; ++p) {
        if (!is[p]) continue;
        const double lp = std::log(static_cast<double>(p));
        double pk = static_cast<double>(p) * p;
        for (int k = 2; pk < 1e12; ++k, pk *= p) correction += (k - 1) * lp * lp * std::pow(pk, -3.0);
    }
    const auto got = d_2r(cplx(1.5, 0.0), 0, TruncationPlan::make(cplx(1.5, 0.0), 1'000'000), primes());
    CHECK(std::abs(got.value.real() - (deriv - correction)) < 1e-6);
    CHECK(got.tail_estimate < 1e-6);
}

TEST_CASE("tail is negligible far right") {
    const auto plan = TruncationPlan::make(cplx(10.0, 0.0), 100'000);
    const auto got = d_2r(cplx(10.0, 0.0), 2, plan, primes());
    CHECK(got.tail_estimate / std::abs(got.value) < 1e-20);
}

TEST_CASE("tail bounds are honest") {
    oracle::Gen gen(31);
    for (int i = 0; i < 20; ++i) {
        const cplx point(gen.uniform(0.8, 2.0), gen.uniform(-5.0, 5.0));
        const std::uint64_t two_r = gen.even(0, 40);
        const std::uint64_t n_max = gen.integer(1000, 20000);
        const auto a = d_2r(point, two_r, TruncationPlan::make(point, n_max), primes());
        const auto b = d_2r(point, two_r, TruncationPlan::make(point, 50 * n_max), primes());
        CHECK(std::abs(a.value - b.value) <= a.tail_estimate);
    }
}

TEST_CASE("conjugate symmetry") {
    const cplx point(0.9, 2.5);
    const auto plan = TruncationPlan::make(point, 20000);
    const auto k = SievingKernel::jackson();
    CHECK(rel(d_2r(std::conj(point), 4, plan, primes()).value, std::conj(d_2r(point, 4, plan, primes()).value)) < 1e-14);
    CHECK(rel(t_lambda_expansion(std::conj(point), 5.5, k, plan, primes()).value,
              std::conj(t_lambda_expansion(point, 5.5, k, plan, primes()).value)) < 1e-14);
}

TEST_CASE("T^lambda at lambda = 1 is D_0") {
    const cplx point(0.9, 1.0);
    const auto plan = TruncationPlan::make(point, 100'000);
    for (const auto& k : {SievingKernel::fejer(), SievingKernel::jackson()}) {
        const auto t = t_lambda_expansion(point, 1.0, k, plan, primes());
        const auto d = d_2r(point, 0, plan, primes());
        CHECK(std::memcmp(&t.value, &d.value, sizeof t.value) == 0);
        CHECK(odd_difference_terms(point, 1.0, k, plan, primes()).value == cplx(0.0, 0.0));
    }
}

TEST_CASE("T^lambda and odd terms against the naive double sum") {
    const auto& is = small_sieve();
    const std::uint64_t n_max = 300;
    for (const auto& k : {SievingKernel::fejer(), SievingKernel::jackson()}) {
        for (double lambda : {2.5, 4.0, 7.3}) {
            const cplx point(1.1, 0.7);
            const auto plan = TruncationPlan::make(point, n_max);
            const auto w = [&](double d) { return std::abs(d) < lambda ? k.eval_E_lambda(lambda, d) : 0.0; };
            const auto odd_w = [&](double d) {
                const auto id = static_cast<long long>(d);
                return (id % 2 != 0) ? w(d) : 0.0;
            };
            const cplx t_ref = oracle::naive_double_sum(is, n_max, 10, point, w);
            const cplx o_ref = oracle::naive_double_sum(is, n_max, 10, point, odd_w);
            CHECK(rel(t_lambda_expansion(point, lambda, k, plan, primes()).value, t_ref) < 1e-12);
            const cplx odd = odd_difference_terms(point, lambda, k, plan, primes()).value;
            CHECK(rel(odd, o_ref) < 1e-12);
            CHECK(odd != cplx(0.0, 0.0));
        }
    }
}

TEST_CASE("expansion identity holds to rounding") {
    oracle::Gen gen(99);
    for (int i = 0; i < 30; ++i) {
        const cplx point(gen.uniform(0.6, 2.0), gen.uniform(-10.0, 10.0));
        const double lambda = gen.uniform(1.0, 12.0);
        const auto& k = (i % 2) ? SievingKernel::jackson() : SievingKernel::fejer();
        const auto id = expansion_identity(point, lambda, k, TruncationPlan::make(point, 20000), primes());
        CHECK(id.relative <= 1e-12);
    }
}

TEST_CASE("V^lambda") {
    const cplx point(1.2, 0.3);
    const auto plan = TruncationPlan::make(point, 50000);
    const auto k = SievingKernel::jackson();
    for (double lambda : {0.5, 1.0, 1.9, 2.0}) CHECK(v_lambda(point, lambda, k, plan, primes()).value == cplx(0.0, 0.0));

    cplx expected = 0.0;
    for (std::uint64_t two_r : {2u, 4u})
        expected += 2.0 * k.eval_E_lambda(6.0, static_cast<double>(two_r)) * d_2r(point, two_r, plan, primes()).value;
    CHECK(rel(v_lambda(point, 6.0, k, plan, primes()).value, expected) < 1e-14);

    const auto f = v_lambda(point, 6.0, SievingKernel::fejer(), plan, primes()).value;
    CHECK(std::abs(f - expected) > 1e-6);
}

TEST_CASE("D_0 pole probe") {
    const auto big = PrimeTable::build(10'000'000);
    const auto rep = d0_pole_probe({1.5, 0.25, 0.2}, 10'000'000, big);
    REQUIRE(rep.rows.size() == 3);
    CHECK_FALSE(rep.rows[0].model_valid);
    CHECK(rep.rows[1].model_valid);
    CHECK(rep.rows[1].corrected > 0.15);
    CHECK(rep.rows[1].corrected < 0.35);
    CHECK(std::abs(rep.rows[2].corrected - rep.rows[1].corrected) < 0.05);
    CHECK(rep.target == 0.25);
    CHECK_THROWS_AS(d0_pole_probe({0.01}, 1000, big), DomainError);
}

TEST_CASE("C_2r residue probe") {
    const auto big = PrimeTable::build(10'000'100);
    const auto d2 = c2r_residue_probe(2, {0.2}, 10'000'000, big);
    const auto d6 = c2r_residue_probe(6, {0.2}, 10'000'000, big);
    CHECK(d2.target == doctest::Approx(c_2r(1)));
    CHECK(d2.rows[0].scaled > 0.3);
    CHECK(d2.rows[0].scaled < 1.1);
    CHECK(d6.rows[0].scaled / d2.rows[0].scaled == doctest::Approx(2.0).epsilon(0.3));
    CHECK(d2.label.rfind("EXPLORATORY", 0) == 0);
    CHECK_THROWS_AS(c2r_residue_probe(2, {0.02}, 1000, big), DomainError);
    CHECK_THROWS_AS(c2r_residue_probe(2, {0.3}, 1000, big), DomainError);
}

TEST_CASE("argument errors") {
    const auto plan = TruncationPlan::make(cplx(1.0, 0.0), 1000);
    CHECK_THROWS_AS(d_2r(cplx(0.5, 1.0), 2, plan, primes()), DomainError);
    CHECK_THROWS_AS(d_2r(cplx(1.0, 0.0), 3, plan, primes()), DomainError);
    CHECK_THROWS_AS(d_2r(cplx(1.0, 0.0), 2, TruncationPlan::make(cplx(1.0, 0.0), 2'000'000), primes()),
                    CapacityError);
    CHECK_THROWS_AS(t_lambda_expansion(cplx(1.0, 0.0), 0.0, SievingKernel::fejer(), plan, primes()),
                    DomainError);
}
