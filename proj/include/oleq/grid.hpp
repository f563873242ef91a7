#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "oleq/errors.hpp"

namespace oleq {

// A perturbation window [a, b] that the grid must resolve with at least
// `min_steps` subintervals.
struct WindowSpec {
    double a = 0.0;
    double b = 0.0;
    std::size_t min_steps = 4;
};

// Strictly increasing time points t0 < ... < tN.
struct TimeGrid {
    std::vector<double> t;

    std::size_t steps() const { return t.empty() ? 0 : t.size() - 1; }
    double front() const { return t.front(); }
    double back() const { return t.back(); }
    double dt(std::size_t k) const { return t[k + 1] - t[k]; }

    // Index of the grid point equal to `s` (within tolerance).
    std::size_t index_of(double s) const {
        const auto it = std::lower_bound(t.begin(), t.end(), s - 1e-12);
        if (it == t.end() || std::abs(*it - s) > 1e-9)
            throw GridError("grid does not contain requested time point");
        return std::size_t(it - t.begin());
    }

    static TimeGrid uniform(double t0, double t1, std::size_t n) {
        if (!(t1 > t0) || n == 0) throw GridError("uniform grid needs t1 > t0 and n >= 1");
        TimeGrid g;
        g.t.resize(n + 1);
        for (std::size_t k = 0; k <= n; ++k)
            g.t[k] = t0 + (t1 - t0) * double(k) / double(n);
        g.t.back() = t1;
        return g;
    }

    // Uniform base grid refined so that each window's endpoints are grid
    // points and the window interior holds at least min_steps subintervals.
    static TimeGrid build(double t0, double t1, std::size_t n,
                          std::span<const WindowSpec> windows = {}) {
        TimeGrid base = uniform(t0, t1, n);
        if (windows.empty()) return base;
        std::vector<double> pts = base.t;
        for (const auto& w : windows) {
            if (!(w.a >= t0 - 1e-12 && w.b <= t1 + 1e-12 && w.b > w.a))
                throw GridError("window outside grid span");
            const std::size_t m = std::max<std::size_t>(w.min_steps, 1);
            for (std::size_t j = 0; j <= m; ++j)
                pts.push_back(w.a + (w.b - w.a) * double(j) / double(m));
        }
        std::sort(pts.begin(), pts.end());
        TimeGrid g;
        g.t.reserve(pts.size());
        for (double p : pts) {
            if (g.t.empty() || p - g.t.back() > 1e-12) g.t.push_back(p);
        }
        // snap near-duplicates of window endpoints introduced above
        g.t.front() = t0;
        g.t.back() = t1;
        return g;
    }
};

}  // namespace oleq
