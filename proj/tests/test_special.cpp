#include <doctest.h>

#include <numbers>

#include "oracles.hpp"
#include "ppz/errors.hpp"
#include "ppz/special.hpp"

using namespace ppz::special;
using cplx = std::complex<double>;

namespace {
// Reference values computed with mpmath at 30 digits.
struct Ref {
    cplx arg;
    cplx value;
};
const Ref kGamma[] = {
    {{0.3, 0.7}, {0.30968625674374916, -0.85678775293927057}},
    {{2.5, -1.2}, {0.58608062539634076, -0.74789638384770271}},
    {{-1.7, 0.4}, {1.1356438824316395, -0.26890799072916941}},
    {{7.25, 3.5}, {413.38648914857977, 252.49453307381923}},
};
// log Gamma: real part exact, imaginary part up to 2 pi.
const Ref kLogGamma[] = {
    {{0.5, 100.0}, {-156.16069414628499, 360.51743526790644}},
    {{-0.1, 1000.0}, {-1574.0220414400812, 5906.812662852725}},
    {{12.0, -40.0}, {-19.336433860020052, -123.98922537157304}},
};
struct ZetaRef {
    cplx point;
    cplx zeta;
    cplx zeta_prime;
};
const ZetaRef kZeta[] = {
    {{3.0, 0.0}, {1.2020569031595943, 0.0}, {-0.19812624288563685, 0.0}},
    {{0.75, 0.3}, {-1.0802192004720399, -1.9446507412315189}, {1.2577653240997252, -6.4526210533498725}},
    {{2.0, 10.0}, {1.1979825006741846, -0.079170491720525747}, {-0.13543269333308647, 0.033197442316129978}},
    {{0.6, 30.0}, {0.022299097368404411, -0.56650896053559348}, {1.3265207282420785, 0.18446083473768027}},
    {{0.9, -250.0}, {0.59483871983594447, -0.34691628002739068}, {0.274169882797374, 0.51873908956638693}},
};

double phase_distance(double a, double b) {
    const double d = std::remainder(a - b, 2.0 * std::numbers::pi);
    return std::abs(d);
}
}  // namespace

TEST_CASE("gamma against reference values") {
    CHECK(std::abs(gamma(cplx(0.5, 0.0)) - std::sqrt(std::numbers::pi)) < 1e-14);
    CHECK(std::abs(gamma(cplx(5.0, 0.0)) - 24.0) < 1e-12);
    for (const auto& r : kGamma) CHECK(std::abs(gamma(r.arg) - r.value) < 1e-12 * std::abs(r.value));
    CHECK_THROWS_AS(gamma(cplx(-2.0, 0.0)), ppz::NearPoleError);
}

TEST_CASE("log gamma against reference values") {
    for (const auto& r : kLogGamma) {
        const cplx lg = log_gamma_any(r.arg);
        CHECK(lg.real() == doctest::Approx(r.value.real()).epsilon(1e-12));
        CHECK(phase_distance(lg.imag(), r.value.imag()) < 1e-9);
    }
    CHECK_THROWS_AS(log_gamma(cplx(-3.0, 0.01)), ppz::BranchError);
}

TEST_CASE("the two gamma routes agree") {
    oracle::Gen gen(707);
    for (int i = 0; i < 40; ++i) {
        const cplx arg(gen.uniform(0.1, 30.0), gen.uniform(-60.0, 60.0));
        const cplx a = gamma(arg);
        const cplx b = log_gamma(arg).value();
        CHECK(std::abs(a - b) < 1e-10 * std::abs(a));
    }
}

TEST_CASE("reflection on the critical line") {
    oracle::Gen gen(808);
    for (int i = 0; i < 30; ++i) {
        const double y = gen.uniform(0.0, 200.0);
        const cplx lg = log_gamma_any(cplx(0.5, y));
        // log|Gamma(1/2+iy)|^2 = log(pi / cosh(pi y))
        const double lhs = 2.0 * lg.real();
        const double rhs = std::log(std::numbers::pi) - (std::numbers::pi * y + std::log1p(std::exp(-2.0 * std::numbers::pi * y)) - std::log(2.0));
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12).scale(1.0));
    }
    for (double y : {1.0, 10.0, 30.0})
        CHECK(std::abs(std::norm(gamma(cplx(0.5, y))) * std::cosh(std::numbers::pi * y) / std::numbers::pi - 1.0) < 1e-10);
}

TEST_CASE("log sin and log cos stay finite for large imaginary parts") {
    for (cplx arg : {cplx(0.3, 0.2), cplx(-1.2, 5.0), cplx(0.7, 25.0), cplx(2.0, -400.0)}) {
        if (std::abs(arg.imag()) < 20.0) {
            CHECK(std::abs(std::exp(log_sin(arg)) - std::sin(arg)) < 1e-12 * std::abs(std::sin(arg)));
            CHECK(std::abs(std::exp(log_cos(arg)) - std::cos(arg)) < 1e-12 * std::abs(std::cos(arg)));
        } else {
            CHECK(log_sin(arg).real() == doctest::Approx(std::abs(arg.imag()) - std::log(2.0)).epsilon(1e-12));
            CHECK(std::isfinite(log_cos(arg).imag()));
        }
    }
}

TEST_CASE("zeta and zeta' against reference values") {
    CHECK(std::abs(zeta(2.0) - std::numbers::pi * std::numbers::pi / 6.0) < 1e-13);
    for (const auto& r : kZeta) {
        const auto zp = zeta_with_derivative(r.point);
        CHECK(std::abs(zp.zeta - r.zeta) < 1e-11 * std::max(1.0, std::abs(r.zeta)));
        CHECK(std::abs(zp.zeta_prime - r.zeta_prime) < 1e-10 * std::max(1.0, std::abs(r.zeta_prime)));
    }
}

TEST_CASE("zeta near the pole and on its conjugate") {
    for (double eps : {1e-2, 1e-4, 1e-6}) {
        const cplx v = eps * zeta(cplx(1.0 + eps, 0.0));
        CHECK(std::abs(v - 1.0) < 0.6 * eps);
    }
    oracle::Gen gen(909);
    for (int i = 0; i < 20; ++i) {
        const cplx point(gen.uniform(0.2, 3.5), gen.uniform(-300.0, 300.0));
        CHECK(std::abs(zeta(std::conj(point)) - std::conj(zeta(point))) < 1e-12 * std::abs(zeta(point)));
    }
}

TEST_CASE("zeta'/zeta refuses points next to a listed zero") {
    const double ordinates[] = {14.134725141734693, 21.022039638771555};
    CHECK_THROWS_AS(zeta_log_deriv(cplx(0.5, 14.134725141734693 + 1e-8), ordinates), ppz::ZeroProximityError);
    CHECK_NOTHROW(zeta_log_deriv(cplx(0.6, 14.134725141734693), ordinates));
    CHECK(zeta_log_deriv(2.0).real() == doctest::Approx(-0.56996099309453).epsilon(1e-12));
}
