#pragma once

#include <cmath>
#include <stdexcept>

namespace roughvol {

/// Uniform grid t_k = k*T/n on [0,T].
struct Grid {
    double T = 1.0;
    int n = 1;

    Grid() = default;
    Grid(double horizon, int intervals) : T(horizon), n(intervals) {
        if (!(T > 0.0) || n < 1) throw std::invalid_argument("Grid: need T > 0 and n >= 1");
    }

    double dt() const { return T / n; }
    double time(int k) const { return k * dt(); }

    /// Index of a grid-aligned time; throws if t is not (nearly) on the grid.
    int index_of(double t, double rel_tol = 1e-9) const {
        double k = t / dt();
        int ki = static_cast<int>(std::lround(k));
        if (ki < 0 || ki > n || std::fabs(k - ki) > rel_tol * n)
            throw std::invalid_argument("Grid: time not aligned to mesh");
        return ki;
    }
};

} // namespace roughvol
