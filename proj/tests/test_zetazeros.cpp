#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "oracles.hpp"
#include "ppz/errors.hpp"
#include "ppz/parallel.hpp"
#include "ppz/zetazeros.hpp"

using namespace ppz;
using cplx = std::complex<double>;

namespace {

const ZeroSet& table() {
    static const ZeroSet zeros = load_zeros(std::string(PPZ_DATA_DIR) + "/zeros_10k.txt").truncated(2000);
    return zeros;
}

bool same_bits(cplx a, cplx b) {
    return std::memcmp(&a, &b, sizeof a) == 0;
}

}  // namespace

TEST_CASE("parsing") {
    const ZeroSet zeros = parse_zeros("# header\n14.134725141734693\n\n  21.022039638771555 \n25.01085758014569\n");
    CHECK(zeros.size() == 3);
    CHECK(zeros[1] == doctest::Approx(21.022039638771555));
    CHECK(zeros.count_up_to(21.0) == 1);
    CHECK(zeros.count_up_to(100.0) == 3);
    CHECK(zeros.truncated(2).size() == 2);

    CHECK_THROWS_AS(parse_zeros("14.13\n21.02\nabc\n"), ParseError);
    CHECK_THROWS_AS(parse_zeros("14.13\n21.02\n25.0x\n"), ParseError);
    CHECK_THROWS_AS(parse_zeros("14.13\n21.02\n-3\n"), ParseError);
    CHECK_THROWS_AS(parse_zeros("14.13\n21.02\n20.0\n"), ParseError);
    CHECK_THROWS_AS(parse_zeros("14.13\n"), ParseError);
    CHECK_THROWS_AS(parse_zeros("15.0\n21.02\n"), ParseError);
    CHECK_THROWS_AS(parse_zeros("14.13\n22.5\n"), ParseError);
    CHECK_THROWS_AS(load_zeros("/nonexistent/zeros.txt"), ConfigError);
    CHECK_THROWS_AS(ZeroSet::from_ordinates({3.0, 2.0}), DomainError);
}

TEST_CASE("bundled table") {
    const ZeroSet full = load_zeros(std::string(PPZ_DATA_DIR) + "/zeros_10k.txt");
    REQUIRE(full.size() >= 2000);
    CHECK(full[0] == doctest::Approx(14.134725141734693).epsilon(1e-14));
    CHECK(full[999] == doctest::Approx(1419.4224809459956).epsilon(1e-13));
    // Riemann-von Mangoldt count at T = 1000
    const double height = 1000.0;
    const double smooth = height / (2 * M_PI) * std::log(height / (2 * M_PI * M_E)) + 7.0 / 8.0;
    CHECK(std::abs(static_cast<double>(full.count_up_to(height)) - smooth) < 3.0);
}

TEST_CASE("cutoff selection") {
    const ZeroSet& zeros = table();
    const CutoffR mid = choose_cutoff(zeros, 15.0);
    CHECK(mid.value == doctest::Approx(0.5 * (zeros[0] + zeros[1])));
    CHECK(mid.lower == 0);
    CHECK(mid.upper == 1);
    CHECK_FALSE(mid.below_first_zero);
    CHECK(choose_cutoff(zeros, 10.0).below_first_zero);
    CHECK_THROWS_AS(choose_cutoff(zeros, zeros.last() + 1.0), CapacityError);

    const ZeroSet tight = ZeroSet::from_ordinates({14.13, 21.02, 30.0, 30.0005, 40.0});
    const CutoffR r = choose_cutoff(tight, 30.0002);
    CHECK(r.lower == 3);
    CHECK(r.value == doctest::Approx(35.0005));

    const CutoffR after = cutoff_after_count(zeros, 100);
    CHECK(after.lower == 99);
    CHECK(zeros.count_up_to(after.value) == 100);
    CHECK_THROWS_AS(cutoff_after_count(zeros, zeros.size() + 1), CapacityError);
    CHECK(empty_cutoff(zeros).value < zeros[0]);
}

TEST_CASE("cutoff never lands on an ordinate") {
    const ZeroSet& zeros = table();
    oracle::Gen gen(7);
    for (int i = 0; i < 200; ++i) {
        const double target = gen.uniform(zeros[0], zeros.last());
        const CutoffR r = choose_cutoff(zeros, target);
        const std::size_t n = zeros.count_up_to(r.value);
        CHECK(n >= 1);
        CHECK(zeros[n - 1] < r.value);
        if (n < zeros.size()) CHECK(r.value < zeros[n]);
    }
}

TEST_CASE("sigma1 at the symmetric point is real and converges") {
    const auto k = SievingKernel::jackson();
    const ZeroSet& zeros = table();
    const cplx point(0.7, 0.0);
    const auto a = sigma1(point, 2.0, k, zeros, cutoff_after_count(zeros, 100));
    const auto b = sigma1(point, 2.0, k, zeros, cutoff_after_count(zeros, 500));
    CHECK(std::abs(a.value.imag()) < 1e-12 * std::abs(a.value));
    CHECK(std::abs(b.value.imag()) < 1e-12 * std::abs(b.value));
    CHECK(std::abs(a.value - b.value) <= a.tail_estimate + b.tail_estimate);
    CHECK_FALSE(a.tail_is_bound);
    CHECK_THROWS_AS(sigma1(cplx(0.5, 0), 2.0, k, zeros, cutoff_after_count(zeros, 10)), DomainError);
    CHECK_THROWS_AS(sigma1(cplx(1.0, 0), 2.0, k, zeros, cutoff_after_count(zeros, 10)), DomainError);
}

TEST_CASE("sigma1 with an empty cutoff is (zeta'/zeta)^2") {
    const auto k = SievingKernel::fejer();
    const ZeroSet& zeros = table();
    const auto r = sigma1(cplx(0.8, 3.0), 1.5, k, zeros, empty_cutoff(zeros));
    CHECK(r.terms_used == 0);
    CHECK(r.tail_estimate >= 0.0);
}

TEST_CASE("sigma2 square sums") {
    const auto k = SievingKernel::jackson();
    const ZeroSet& zeros = table();
    const cplx point(0.7, 0.0);

    const auto empty = sigma2_square(point, 2.0, k, zeros, empty_cutoff(zeros));
    CHECK(empty.value == cplx(0.0, 0.0));
    CHECK(empty.terms_used == 0);

    const auto a = sigma2_square(point, 1.0, k, zeros, cutoff_after_count(zeros, 100));
    const auto b = sigma2_square(point, 1.0, k, zeros, cutoff_after_count(zeros, 1000));
    CHECK(a.value.real() > 0.0);
    CHECK(std::abs(b.value.imag()) < 1e-10 * std::abs(b.value));
    CHECK(std::abs(a.value - b.value) <= a.tail_estimate + b.tail_estimate);

    const auto parts = sigma2_square_parts(point, 1.0, k, zeros, cutoff_after_count(zeros, 300));
    CHECK(std::abs(parts.same_sign + parts.opposite_sign - parts.total.value) <=
          1e-12 * std::abs(parts.total.value));
    CHECK(parts.opposite_sign_terms > 0);
}

TEST_CASE("zero sums do not depend on the thread count") {
    const auto k = SievingKernel::jackson();
    const ZeroSet& zeros = table();
    const cplx point(0.65, 1.5);
    const CutoffR zero_cutoff = cutoff_after_count(zeros, 700);
    set_thread_count(1);
    const auto a2 = sigma2_square(point, 2.5, k, zeros, zero_cutoff);
    const auto a4 = sigma4(cplx(0.6, 0.5), 2.5, k, zeros.truncated(700));
    set_thread_count(3);
    const auto b2 = sigma2_square(point, 2.5, k, zeros, zero_cutoff);
    const auto b4 = sigma4(cplx(0.6, 0.5), 2.5, k, zeros.truncated(700));
    set_thread_count(0);
    CHECK(same_bits(a2.value, b2.value));
    CHECK(a2.tail_estimate == b2.tail_estimate);
    CHECK(same_bits(a4.total.value, b4.total.value));
}

TEST_CASE("sigma4") {
    const auto k = SievingKernel::fejer();
    const ZeroSet one = ZeroSet::from_ordinates({14.134725141734693});
    const cplx point(0.6, 0.0);
    const auto r = sigma4(point, 1.0, k, one);
    // Only the diagonal: 2 pi gamma^{-2s} M(1 - 2s).
    const cplx expected = 2.0 * M_PI * std::pow(cplx(one[0], 0.0), -2.0 * point) * k.mellin(1.0 - 2.0 * point);
    CHECK(r.diagonal_terms == 1);
    CHECK(std::abs(r.total.value - expected) < 1e-12 * std::abs(expected));
    CHECK(r.diagonal == r.total.value);
    CHECK_THROWS_AS(sigma4(cplx(0.75, 0), 1.0, k, one), DomainError);

    const auto full = sigma4(point, 1.0, k, table().truncated(500));
    CHECK(full.diagonal_terms == 500);
    CHECK(std::abs(full.total.value - full.diagonal) > 0.0);
    CHECK(full.total.terms_used > 500);
}

TEST_CASE("pair correlation") {
    const ZeroSet& zeros = table();
    const double height = zeros[1999];
    for (double alpha : {0.0, 0.3, 1.0, 2.0}) {
        const auto f = pair_correlation_F(alpha, zeros, height);
        CHECK(f.value >= -1e-10);
        CHECK(std::abs(f.imag_part) <= 1e-10 * std::max(1.0, f.value));
        CHECK(f.zeros_used == 2000);
        const auto g = pair_correlation_F(-alpha, zeros, height);
        CHECK(g.value == doctest::Approx(f.value).epsilon(1e-12));
    }
    CHECK(pair_correlation_F(1.0, zeros, height).value == doctest::Approx(1.0).epsilon(0.5));
    CHECK_THROWS_AS(pair_correlation_F(1.0, zeros, zeros.last() + 1.0), CapacityError);
    CHECK_THROWS_AS(pair_correlation_F(1.0, zeros, 10.0), DomainError);
}

TEST_CASE("pair correlation against a direct double loop") {
    const ZeroSet& zeros = table();
    const std::size_t n = 1500;
    const double height = zeros[n - 1];
    const double log_height = std::log(height);
    for (double alpha : {0.0, 0.5, 1.0}) {
        long double acc = 0.0L;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const double d = zeros[i] - zeros[j];
                acc += std::cos(alpha * d * log_height) * 4.0 / (4.0 + d * d);
            }
        const double ref = 2.0 * M_PI / (height * log_height) * static_cast<double>(acc);
        CHECK(pair_correlation_F(alpha, zeros, height).value == doctest::Approx(ref).epsilon(1e-12));
    }
}

TEST_CASE("G^lambda and the omega probe") {
    const auto k = SievingKernel::jackson();
    const ZeroSet& zeros = table();
    const CutoffR zero_cutoff = cutoff_after_count(zeros, 200);
    const auto zero = g_lambda(cplx(0.6, 0.2), 1.0, k, zeros, zero_cutoff);
    CHECK(zero.value == cplx(0.0, 0.0));

    const cplx point(0.62, 1.3);
    const auto g = g_lambda(point, 3.0, k, zeros, zero_cutoff);
    const auto gc = g_lambda(std::conj(point), 3.0, k, zeros, zero_cutoff);
    CHECK(std::abs(g.value - std::conj(gc.value)) <= 1e-10 * std::abs(g.value));

    const auto diff = sigma_difference(point, 1.0, k, zeros, zero_cutoff);
    CHECK(diff.value == cplx(0.0, 0.0));

    const auto omega = omega_probe(1.0, k, zeros.truncated(200), {0.2, 0.1});
    CHECK(omega.estimate == 0.0);
    CHECK(omega.rows.size() == 2);
    CHECK_THROWS_AS(omega_probe(2.0, k, zeros.truncated(50), {0.3}), DomainError);
    CHECK_THROWS_AS(omega_probe(2.0, k, zeros.truncated(50), {}), DomainError);
}

TEST_CASE("opposite-sign pair: exact and asymptotic forms agree at height") {
    const auto k = SievingKernel::jackson();
    double prev = 1.0;
    for (double y : {100.0, 1000.0, 10000.0}) {
        const double v = y + 0.7;
        const cplx ex = opposite_pair_exact(y, v, 0.15, 2.0, k);
        const cplx as = opposite_pair_asymptotic(y, v, 0.15, 2.0, k);
        const double rel = std::abs(ex - as) / std::abs(ex);
        CHECK(rel < prev);
        prev = rel;
    }
    CHECK(prev < 1e-3);
}

TEST_CASE("log-squared power tail against quadrature") {
    const double zero_cutoff = 500.0, a = 1.4;
    // substitute T = R e^u
    const double ref = oracle::simpson(
        [&](double u) {
            const double height = zero_cutoff * std::exp(u);
            const double l = std::log(height / (2 * M_PI));
            return std::pow(height, 1.0 - a) * l * l;
        },
        0.0, 200.0, 400000);
    CHECK(log_squared_power_tail(zero_cutoff, a) == doctest::Approx(ref).epsilon(1e-8));
    CHECK_THROWS_AS(log_squared_power_tail(zero_cutoff, 1.0), DomainError);
}
