#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "oleq/errors.hpp"

namespace oleq {

// Welford accumulator. Merge-free: always fed sequentially after the
// parallel phase, so the reduction order is fixed.
class RunningStats {
public:
    void add(double x) {
        ++n_;
        const double d = x - mean_;
        mean_ += d / double(n_);
        m2_ += d * (x - mean_);
    }
    std::size_t count() const { return n_; }
    double mean() const { return mean_; }
    double variance() const { return n_ > 1 ? m2_ / double(n_ - 1) : 0.0; }
    double stddev() const { return std::sqrt(variance()); }
    double se() const { return n_ > 0 ? stddev() / std::sqrt(double(n_)) : 0.0; }

private:
    std::size_t n_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

struct MeanSE {
    double mean = 0.0;
    double se = 0.0;
    std::size_t n = 0;
};

inline MeanSE mean_se(std::span<const double> xs) {
    RunningStats s;
    for (double x : xs) s.add(x);
    return {s.mean(), s.se(), s.count()};
}

struct LinearFit {
    double intercept = 0.0;
    double slope = 0.0;
    double intercept_se = 0.0;
    double slope_se = 0.0;
};

// Weighted least squares y = a + b x with weights 1/sigma^2. Parameter
// standard errors come from the weighted normal-equation covariance, i.e.
// they propagate the supplied per-point sigmas (no residual rescaling).
inline LinearFit weighted_linear_fit(std::span<const double> x, std::span<const double> y,
                                     std::span<const double> sigma) {
    if (x.size() != y.size() || x.size() != sigma.size() || x.size() < 2)
        throw DomainError("weighted_linear_fit: need >=2 points with matching sigmas");
    double sw = 0, swx = 0, swy = 0, swxx = 0, swxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double s2 = sigma[i] * sigma[i];
        if (!(s2 > 0)) s2 = std::numeric_limits<double>::min();
        const double w = 1.0 / s2;
        sw += w;
        swx += w * x[i];
        swy += w * y[i];
        swxx += w * x[i] * x[i];
        swxy += w * x[i] * y[i];
    }
    const double det = sw * swxx - swx * swx;
    if (!(std::abs(det) > 0)) throw NumericError("weighted_linear_fit: singular design");
    LinearFit f;
    f.intercept = (swxx * swy - swx * swxy) / det;
    f.slope = (sw * swxy - swx * swy) / det;
    f.intercept_se = std::sqrt(swxx / det);
    f.slope_se = std::sqrt(sw / det);
    return f;
}

// Unweighted fit; parameter SEs use the residual variance estimate.
inline LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) throw DomainError("linear_fit: need >=2 points");
    const std::size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double det = double(n) * sxx - sx * sx;
    if (!(std::abs(det) > 0)) throw NumericError("linear_fit: singular design");
    LinearFit f;
    f.slope = (double(n) * sxy - sx * sy) / det;
    f.intercept = (sy - f.slope * sx) / double(n);
    double ss = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = y[i] - f.intercept - f.slope * x[i];
        ss += r * r;
    }
    const double s2 = n > 2 ? ss / double(n - 2) : 0.0;
    f.slope_se = std::sqrt(double(n) * s2 / det);
    f.intercept_se = std::sqrt(s2 * sxx / det);
    return f;
}

}  // namespace oleq
