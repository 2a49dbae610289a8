#pragma once

#include <divcalc/rational.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace divcalc {

/// Exact rational LP feasibility: finds x >= 0 with A x = b, or reports
/// infeasibility. Phase-1 simplex on dense rational data; Bland's rule on
/// both the entering and leaving choice, so the pivoting cannot cycle.
/// Boundary cases (components exactly 0) are decided exactly.
inline std::optional<std::vector<Rat>> lp_feasible_point(std::vector<std::vector<Rat>> a,
                                                         std::vector<Rat> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t r = 0; r < rows; ++r) {
        if (b[r] < 0) {
            for (auto& v : a[r]) v = -v;
            b[r] = -b[r];
        }
    }
    // tableau columns: [structural | artificial | rhs]
    const std::size_t width = cols + rows + 1;
    std::vector<std::vector<Rat>> t(rows, std::vector<Rat>(width));
    std::vector<std::size_t> basis(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) t[r][c] = a[r][c];
        t[r][cols + r] = 1;
        t[r][width - 1] = b[r];
        basis[r] = cols + r;
    }
    // objective: minimize sum of artificials; price out the initial basis
    std::vector<Rat> obj(width);
    for (std::size_t c = cols; c < cols + rows; ++c) obj[c] = 1;
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < width; ++c) obj[c] -= t[r][c];

    while (true) {
        std::size_t enter = width;
        for (std::size_t c = 0; c + 1 < width; ++c)
            if (obj[c] < 0) { enter = c; break; }  // Bland: lowest index
        if (enter == width) break;
        std::size_t leave = rows;
        Rat best_ratio;
        for (std::size_t r = 0; r < rows; ++r) {
            if (t[r][enter] <= 0) continue;
            const Rat ratio = t[r][width - 1] / t[r][enter];
            if (leave == rows || ratio < best_ratio ||
                (ratio == best_ratio && basis[r] < basis[leave])) {
                leave = r;
                best_ratio = ratio;
            }
        }
        if (leave == rows) return std::nullopt;  // unbounded phase-1: cannot happen, treat as infeasible
        const Rat pivot = t[leave][enter];
        for (auto& v : t[leave]) v /= pivot;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == leave || t[r][enter] == 0) continue;
            const Rat f = t[r][enter];
            for (std::size_t c = 0; c < width; ++c) t[r][c] -= f * t[leave][c];
        }
        if (obj[enter] != 0) {
            const Rat f = obj[enter];
            for (std::size_t c = 0; c < width; ++c) obj[c] -= f * t[leave][c];
        }
        basis[leave] = enter;
    }
    // optimum of phase-1 is -obj[rhs]; feasible iff it is zero
    if (obj[width - 1] != 0) return std::nullopt;
    for (std::size_t r = 0; r < rows; ++r)
        if (basis[r] >= cols && t[r][width - 1] != 0) return std::nullopt;
    std::vector<Rat> x(cols);
    for (std::size_t r = 0; r < rows; ++r)
        if (basis[r] < cols) x[basis[r]] = t[r][width - 1];
    return x;
}

}  // namespace divcalc
