#include "ppz/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "ppz/errors.hpp"
#include "ppz/special.hpp"

namespace ppz {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPoleTol = 1e-8;
constexpr double kBranchFormRadius = 4.0;
constexpr double kDirectImagLimit = 20.0;

// j-th derivative of sum_k c_k t^k at t.
double poly_derivative(const std::vector<double>& c, int j, double t) {
    double acc = 0.0;
    for (int k = static_cast<int>(c.size()) - 1; k >= j; --k) {
        double falling = 1.0;
        for (int i = 0; i < j; ++i) falling *= static_cast<double>(k - i);
        acc = acc * t + c[k] * falling;
    }
    return acc;
}

double poly_eval(const std::vector<double>& c, double t) { return poly_derivative(c, 0, t); }

cplx sinc(cplx u) {
    if (std::abs(u) < 1e-4) {
        const cplx u2 = u * u;
        return 1.0 - u2 / 6.0 + u2 * u2 / 120.0;
    }
    return std::sin(u) / u;
}

double sinc(double u) {
    if (std::abs(u) < 1e-4) {
        const double u2 = u * u;
        return 1.0 - u2 / 6.0 + u2 * u2 / 120.0;
    }
    return std::sin(u) / u;
}

// (b^w - a^w) / w for 0 < a < b, finite at w = 0.
cplx power_difference(double a, double b, cplx w) {
    const double la = std::log(a);
    const double lb = std::log(b);
    if (std::abs(w) * std::max(std::abs(la), std::abs(lb)) < 0.5) {
        cplx acc = 0.0;
        cplx wpow = 1.0;  // w^{n-1}
        double pa = la, pb = lb, fact = 1.0;
        for (int n = 1; n <= 40; ++n) {
            fact *= n;
            const cplx term = (pb - pa) * wpow / fact;
            acc += term;
            if (std::abs(term) < 1e-18 * std::abs(acc)) break;
            wpow *= w;
            pa *= la;
            pb *= lb;
        }
        return acc;
    }
    return (std::exp(w * lb) - std::exp(w * la)) / w;
}

cplx real_power(double base, cplx w) { return std::exp(w * std::log(base)); }

// 16-point Gauss-Legendre nodes and weights on [-1, 1] (positive half).
constexpr double kGLNodes[8] = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                                0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                                0.9445750230732326, 0.9894009349916499};
constexpr double kGLWeights[8] = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                                  0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                                  0.0622535239386479, 0.0271524594117541};

}  // namespace

SievingKernel SievingKernel::fejer() {
    SievingKernel k;
    k.name_ = "fejer";
    k.type_ = KernelType::Fejer;
    k.branches_ = {{0.0, 1.0, {1.0, -1.0}}};
    k.finalize();
    return k;
}

SievingKernel SievingKernel::jackson() {
    SievingKernel k;
    k.name_ = "jackson";
    k.type_ = KernelType::Jackson;
    k.branches_ = {{0.0, 0.5, {1.0, 0.0, -6.0, 6.0}}, {0.5, 1.0, {2.0, -6.0, 6.0, -2.0}}};
    k.finalize();
    return k;
}

SievingKernel SievingKernel::from_name(const std::string& name) {
    if (name == "fejer") return fejer();
    if (name == "jackson") return jackson();
    throw DomainError("unknown kernel '" + name + "' (expected fejer or jackson)");
}

SievingKernel SievingKernel::custom(std::string name, std::vector<PolynomialBranch> branches) {
    if (branches.empty()) throw DomainError("custom kernel: no branches");
    if (branches.front().lo != 0.0) throw DomainError("custom kernel: first branch must start at 0");
    if (branches.back().hi != 1.0) throw DomainError("custom kernel: last branch must end at 1");
    for (std::size_t i = 0; i < branches.size(); ++i) {
        const auto& br = branches[i];
        if (!(br.lo < br.hi)) throw DomainError("custom kernel: empty or reversed branch");
        if (br.coeffs.empty()) throw DomainError("custom kernel: branch without coefficients");
        if (i + 1 < branches.size() && std::abs(br.hi - branches[i + 1].lo) > 1e-15)
            throw DomainError("custom kernel: branches must tile [0, 1]");
    }
    if (std::abs(poly_eval(branches.front().coeffs, 0.0) - 1.0) > 1e-12)
        throw DomainError("custom kernel: E(0) must be 1");
    for (std::size_t i = 0; i + 1 < branches.size(); ++i) {
        const double t = branches[i].hi;
        if (std::abs(poly_eval(branches[i].coeffs, t) - poly_eval(branches[i + 1].coeffs, t)) > 1e-10)
            throw DomainError("custom kernel: discontinuity at " + std::to_string(t));
    }
    if (std::abs(poly_eval(branches.back().coeffs, 1.0)) > 1e-10)
        throw DomainError("custom kernel: E(1) must be 0");
    for (const auto& br : branches) {
        constexpr int kGrid = 200;
        for (int i = 0; i <= kGrid; ++i) {
            const double t = br.lo + (br.hi - br.lo) * i / kGrid;
            if (poly_derivative(br.coeffs, 1, t) > 1e-10)
                throw DomainError("custom kernel: E must be non-increasing on [0, 1]");
            if (poly_eval(br.coeffs, t) < -1e-12) throw DomainError("custom kernel: E must be >= 0");
        }
    }
    SievingKernel k;
    k.name_ = std::move(name);
    k.type_ = KernelType::Custom;
    k.branches_ = std::move(branches);
    k.finalize();
    return k;
}

void SievingKernel::finalize() {
    area_ = 0.0;
    std::size_t max_deg = 0;
    for (const auto& br : branches_) {
        for (std::size_t k = 0; k < br.coeffs.size(); ++k)
            area_ += br.coeffs[k] *
                     (std::pow(br.hi, static_cast<double>(k + 1)) - std::pow(br.lo, static_cast<double>(k + 1))) /
                     static_cast<double>(k + 1);
        max_deg = std::max(max_deg, br.coeffs.size());
    }

    jumps_.clear();
    const std::vector<double> zero_poly;
    int first_jump = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < branches_.size(); ++i) {
        const double t = branches_[i].hi;
        const auto& left = branches_[i].coeffs;
        const auto& right = i + 1 < branches_.size() ? branches_[i + 1].coeffs : zero_poly;
        Jump jump{t, {}};
        for (std::size_t j = 0; j < max_deg; ++j) {
            const double d = poly_derivative(right, static_cast<int>(j), t) -
                             poly_derivative(left, static_cast<int>(j), t);
            jump.delta.push_back(std::abs(d) < 1e-12 ? 0.0 : d);
            if (jump.delta.back() != 0.0) first_jump = std::min(first_jump, static_cast<int>(j));
        }
        jumps_.push_back(std::move(jump));
    }
    decay_offset_ = first_jump == std::numeric_limits<int>::max() ? 0.5 : first_jump + 0.5;

    domain_limit_ = -3.0;
    const auto& c0 = branches_.front().coeffs;
    for (std::size_t k = 1; k < c0.size() && k < 3; k += 2) {
        if (c0[k] != 0.0) {
            domain_limit_ = -static_cast<double>(k);
            break;
        }
    }
}

double SievingKernel::eval_E(double nu) const {
    const double a = std::abs(nu);
    if (a > 1.0) return 0.0;
    for (const auto& br : branches_)
        if (a <= br.hi) return poly_eval(br.coeffs, a);
    return 0.0;
}

double SievingKernel::eval_E_hat(double lambda, double t) const {
    if (!(lambda > 0.0)) throw DomainError("eval_E_hat: lambda must be positive");
    t = std::abs(t);
    if (type_ == KernelType::Fejer) {
        const double s = sinc(lambda * t / 2.0);
        return lambda * s * s;
    }
    if (type_ == KernelType::Jackson) {
        const double s = sinc(lambda * t / 4.0);
        return 0.75 * lambda * (s * s) * (s * s);
    }
    // 2 lambda int_0^1 E(u) cos(w u) du, w = lambda t.
    const double w = lambda * t;
    double acc = 0.0;
    if (w < 1.0) {
        for (const auto& br : branches_) {
            const double mid = 0.5 * (br.lo + br.hi), half = 0.5 * (br.hi - br.lo);
            for (int i = 0; i < 8; ++i)
                for (double sgn : {-1.0, 1.0}) {
                    const double u = mid + sgn * half * kGLNodes[i];
                    acc += half * kGLWeights[i] * poly_eval(br.coeffs, u) * std::cos(w * u);
                }
        }
    } else {
        // Exact integration by parts of P(u) e^{iwu}.
        const cplx iw(0.0, w);
        cplx total = 0.0;
        for (const auto& br : branches_) {
            cplx denom = iw;
            double sign = 1.0;
            for (std::size_t j = 0; j < br.coeffs.size(); ++j) {
                const double pb = poly_derivative(br.coeffs, static_cast<int>(j), br.hi);
                const double pa = poly_derivative(br.coeffs, static_cast<int>(j), br.lo);
                total += sign * (pb * std::exp(iw * br.hi) - pa * std::exp(iw * br.lo)) / denom;
                denom *= iw;
                sign = -sign;
            }
        }
        acc = total.real();
    }
    return 2.0 * lambda * acc;
}

cplx SievingKernel::moment_branch_form(cplx arg) const {
    cplx acc = 0.0;
    for (const auto& br : branches_) {
        for (std::size_t k = 0; k < br.coeffs.size(); ++k) {
            const double c = br.coeffs[k];
            if (c == 0.0) continue;
            const cplx w = arg + static_cast<double>(k);
            if (br.lo == 0.0) {
                if (std::abs(w) < kPoleTol)
                    throw NearPoleError("moment: pole of int_0^1 E v^{z-1} dv", -static_cast<double>(k));
                acc += c * real_power(br.hi, w) / w;
            } else {
                acc += c * power_difference(br.lo, br.hi, w);
            }
        }
    }
    return acc;
}

cplx SievingKernel::moment_jump_form(cplx arg) const {
    cplx acc = 0.0;
    for (const auto& jump : jumps_) {
        cplx poch = 1.0;
        double sign = 1.0;  // (-1)^j
        for (std::size_t j = 0; j < jump.delta.size(); ++j) {
            const cplx factor = arg + static_cast<double>(j);
            if (std::abs(factor) < kPoleTol)
                throw NearPoleError("moment: pole of the jump form", -static_cast<double>(j));
            poch *= factor;
            if (jump.delta[j] != 0.0)
                acc -= sign * jump.delta[j] * real_power(jump.at, arg + static_cast<double>(j)) / poch;
            sign = -sign;
        }
    }
    return acc;
}

cplx SievingKernel::moment(cplx arg) const {
    return std::abs(arg) <= kBranchFormRadius ? moment_branch_form(arg) : moment_jump_form(arg);
}

void SievingKernel::check_argument(cplx arg) const {
    if (!(arg.real() > domain_limit_))
        throw DomainError("mellin: Re z = " + std::to_string(arg.real()) + " outside continuation Re z > " +
                          std::to_string(domain_limit_) + " for kernel " + name_);
    if (arg.real() > 0.0) {
        const double k = 2.0 * std::round((arg.real() - 1.0) / 2.0) + 1.0;
        if (k >= 1.0 && std::abs(arg - cplx(k, 0.0)) < kPoleTol)
            throw NearPoleError("mellin: z within 1e-8 of the pole at " + std::to_string(static_cast<int>(k)),
                                cplx(k, 0.0));
    }
}

cplx SievingKernel::sine_times_moment(cplx arg) const {
    if (std::abs(arg) > kBranchFormRadius) return std::sin(kPi * arg / 2.0) * moment_jump_form(arg);
    const cplx s = std::sin(kPi * arg / 2.0);
    cplx acc = 0.0;
    for (const auto& br : branches_) {
        for (std::size_t k = 0; k < br.coeffs.size(); ++k) {
            const double c = br.coeffs[k];
            if (c == 0.0) continue;
            const cplx w = arg + static_cast<double>(k);
            if (br.lo == 0.0) {
                if (k % 2 == 0) {
                    // sin(pi z/2)/(z+k) = (-1)^{k/2} (pi/2) sinc(pi w/2)
                    const double sgn = (k / 2) % 2 == 0 ? 1.0 : -1.0;
                    acc += c * real_power(br.hi, w) * sgn * (kPi / 2.0) * sinc(kPi * w / 2.0);
                } else {
                    if (std::abs(w) < kPoleTol)
                        throw NearPoleError("mellin: pole at z = -" + std::to_string(k), -static_cast<double>(k));
                    acc += c * s * real_power(br.hi, w) / w;
                }
            } else {
                acc += c * s * power_difference(br.lo, br.hi, w);
            }
        }
    }
    return acc;
}

cplx SievingKernel::mellin(cplx arg) const {
    check_argument(arg);
    if (std::abs(arg.imag()) > kDirectImagLimit) return std::exp(log_mellin(arg));
    if (arg.real() > 0.5) return moment(arg) / (special::gamma(arg) * std::cos(kPi * arg / 2.0));
    return (2.0 / kPi) * special::gamma(1.0 - arg) * sine_times_moment(arg);
}

cplx SievingKernel::log_mellin(cplx arg) const {
    check_argument(arg);
    if (std::abs(arg.imag()) <= kDirectImagLimit) return std::log(mellin(arg));
    const cplx m = moment_jump_form(arg);
    if (m == 0.0) return {-std::numeric_limits<double>::infinity(), 0.0};
    if (arg.real() > 0.5)
        return std::log(m) - special::log_gamma_any(arg) - special::log_cos(kPi * arg / 2.0);
    return std::log(2.0 / kPi) + special::log_gamma_any(1.0 - arg) + special::log_sin(kPi * arg / 2.0) +
           std::log(m);
}

MellinValue mellin_M(const SievingKernel& kernel, double lambda, cplx arg) {
    if (!(lambda > 0.0)) throw DomainError("mellin_M: lambda must be positive");
    MellinValue out;
    out.arg = arg;
    out.value = std::exp(arg * std::log(lambda)) * kernel.mellin(arg);
    if (arg.real() > 0.0) {
        const double k = std::max(1.0, 2.0 * std::round((arg.real() - 1.0) / 2.0) + 1.0);
        out.is_near_pole = std::abs(arg - cplx(k, 0.0)) < 1e-3;
    }
    return out;
}

cplx log_mellin_M(const SievingKernel& kernel, double lambda, cplx arg) {
    if (!(lambda > 0.0)) throw DomainError("log_mellin_M: lambda must be positive");
    return arg * std::log(lambda) + kernel.log_mellin(arg);
}

ResidueProbe mellin_residue_probe(const SievingKernel& kernel, double lambda, double radius,
                                  int points) {
    if (points < 4) throw DomainError("residue probe: need at least 4 points");
    cplx acc = 0.0;
    for (int i = 0; i < points; ++i) {
        const double theta = 2.0 * kPi * (i + 0.5) / points;
        const cplx offset = radius * std::exp(cplx(0.0, theta));
        acc += offset * mellin_M(kernel, lambda, 1.0 + offset).value;
    }
    ResidueProbe out;
    out.lambda = lambda;
    out.radius = radius;
    out.measured = acc / static_cast<double>(points);
    out.expected = -(2.0 * lambda / kPi) * kernel.area();
    out.abs_error = std::abs(out.measured - out.expected);
    return out;
}

BoundReport mellin_bound_check(const SievingKernel& kernel, double lambda, double real_part,
                               const std::vector<double>& y_samples) {
    if (!(real_part > -3.0 && real_part <= 3.0)) throw DomainError("mellin_bound_check: need -3 < x <= 3");
    BoundReport rep;
    rep.kernel = kernel.name();
    rep.lambda = lambda;
    rep.real_part = real_part;
    rep.exponent = -real_part - kernel.decay_offset();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (double ordinate : y_samples) {
        if (std::abs(ordinate) < 1.0) throw DomainError("mellin_bound_check: samples need |y| >= 1");
        BoundSample s;
        s.ordinate = ordinate;
        s.modulus = std::abs(mellin_M(kernel, lambda, cplx(real_part, ordinate)).value);
        s.ratio = s.modulus * std::pow(std::abs(ordinate) + 1.0, real_part + kernel.decay_offset());
        rep.samples.push_back(s);
        const double lx = std::log(std::abs(ordinate) + 1.0), ly = std::log(s.ratio);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double n = static_cast<double>(rep.samples.size());
    const double denom = n * sxx - sx * sx;
    rep.log_slope = (n >= 2 && denom > 0) ? (n * sxy - sx * sy) / denom : 0.0;
    rep.bounded = std::isfinite(rep.log_slope) && rep.log_slope < 0.25;
    for (const auto& s : rep.samples)
        if (!std::isfinite(s.ratio)) rep.bounded = false;
    return rep;
}

}  // namespace ppz
