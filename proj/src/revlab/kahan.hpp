#pragma once

#include <complex>

namespace revlab {

// Kahan-compensated accumulator for complex doubles. Long oscillatory series
// (20k+ terms) lose 3-4 digits under naive summation; the compensation keeps
// the accumulated rounding near one ulp of the running sum.
class KahanSum {
public:
    void add(std::complex<double> term) {
        const std::complex<double> y = term - carry_;
        const std::complex<double> t = sum_ + y;
        carry_ = (t - sum_) - y;
        sum_ = t;
    }
    std::complex<double> value() const { return sum_; }

private:
    std::complex<double> sum_{0.0, 0.0};
    std::complex<double> carry_{0.0, 0.0};
};

class KahanSumReal {
public:
    void add(double term) {
        const double y = term - carry_;
        const double t = sum_ + y;
        carry_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

} // namespace revlab
