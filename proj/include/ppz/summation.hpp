// summation.hpp
// Compensated (Neumaier) accumulation for real and complex sums.
//
// Every truncated series in ppz goes through these accumulators so that
// 10^7-term sums near the convergence boundary keep their digits and the
// result is insensitive to term order up to ~1e-15 relative.

#pragma once

#include <cmath>
#include <complex>

namespace ppz {

class CompensatedSum {
public:
    CompensatedSum() = default;
    explicit CompensatedSum(double init) : sum_(init) {}

    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    CompensatedSum& operator+=(double x) {
        add(x);
        return *this;
    }

    // Merge another partial sum, keeping both compensation terms.
    void merge(const CompensatedSum& other) {
        add(other.sum_);
        add(other.comp_);
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class ComplexCompensatedSum {
public:
    void add(std::complex<double> z) {
        re_.add(z.real());
        im_.add(z.imag());
    }

    ComplexCompensatedSum& operator+=(std::complex<double> z) {
        add(z);
        return *this;
    }

    void merge(const ComplexCompensatedSum& other) {
        re_.merge(other.re_);
        im_.merge(other.im_);
    }

    std::complex<double> value() const { return {re_.value(), im_.value()}; }

private:
    CompensatedSum re_;
    CompensatedSum im_;
};

}  // namespace ppz
