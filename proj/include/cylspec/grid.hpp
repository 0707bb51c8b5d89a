#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "cylspec/errors.hpp"

namespace cylspec {

// Uniform sample grid on [t0, tmax].
struct TimeGrid {
    double t0 = 0.0;
    double tmax = 0.0;
    std::size_t n = 0;

    TimeGrid() = default;
    TimeGrid(double t0_, double tmax_, std::size_t n_) : t0(t0_), tmax(tmax_), n(n_) {
        if (t0 < 0.1) throw HypothesisError("TimeGrid: t0 must be >= 0.1");
        if (!(tmax > t0 + 1.0)) throw HypothesisError("TimeGrid: tmax must exceed t0 + 1");
        if (n < 16) throw HypothesisError("TimeGrid: need at least 16 samples");
    }

    double h() const { return (tmax - t0) / static_cast<double>(n - 1); }
    double t(std::size_t i) const { return t0 + h() * static_cast<double>(i); }

    std::vector<double> points() const {
        std::vector<double> p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = t(i);
        return p;
    }

    // Index of the first grid point >= x (clamped).
    std::size_t index_at_or_after(double x) const {
        if (x <= t0) return 0;
        double k = std::ceil((x - t0) / h() - 1e-12);
        auto i = static_cast<std::size_t>(k);
        return i >= n ? n - 1 : i;
    }

    bool same_as(const TimeGrid& o) const {
        return n == o.n && std::abs(t0 - o.t0) < 1e-12 && std::abs(tmax - o.tmax) < 1e-12;
    }

    // Grid extended to the left by `extra` steps (same spacing).
    TimeGrid extended_left(std::size_t extra) const {
        TimeGrid g;
        g.t0 = t0 - h() * static_cast<double>(extra);
        g.tmax = tmax;
        g.n = n + extra;
        return g;
    }
};

// Time slab (m - k, m + k).
struct Strip {
    double center = 0.0;
    double half_width = 1.0;

    Strip(double m, double k) : center(m), half_width(k) {
        if (!(k > 0.0)) throw HypothesisError("Strip: half width must be positive");
    }
    double lo() const { return center - half_width; }
    double hi() const { return center + half_width; }
};

} // namespace cylspec
