#include "hrum/simplex.hpp"

#include <stdexcept>

namespace hrum {

std::optional<std::vector<Rational>> find_nonnegative_solution(const LinearSystem& system) {
    const std::size_t m = system.rows.size();
    if (system.rhs.size() != m) throw std::invalid_argument("row count and right-hand side differ");
    if (m == 0) throw std::invalid_argument("empty linear system");
    const std::size_t cols = system.rows.front().size();
    for (const auto& r : system.rows) {
        if (r.size() != cols) throw std::invalid_argument("ragged constraint matrix");
    }

    // Tableau columns: originals, then one artificial per row, then the rhs.
    const std::size_t width = cols + m + 1;
    const std::size_t rhs = width - 1;
    std::vector<std::vector<Rational>> t(m, std::vector<Rational>(width, Rational(0)));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = system.rhs[i] < 0;
        for (std::size_t j = 0; j < cols; ++j) t[i][j] = flip ? Rational(-system.rows[i][j]) : system.rows[i][j];
        t[i][rhs] = flip ? Rational(-system.rhs[i]) : system.rhs[i];
        t[i][cols + i] = 1;
        basis[i] = cols + i;
    }

    // Reduced costs of the phase-one objective (sum of artificials).
    std::vector<Rational> cost(width, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < cols; ++j) cost[j] -= t[i][j];
        cost[rhs] -= t[i][rhs];
    }

    while (true) {
        // Bland: lowest-index improving column; artificials never re-enter.
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j) {
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == cols) break;

        std::size_t leave = m;
        Rational best_ratio;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][rhs] / t[i][enter];
            if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = std::move(ratio);
            }
        }
        if (leave == m) throw std::logic_error("phase-one objective is bounded below; unbounded ray is impossible");

        const Rational pivot = t[leave][enter];
        for (auto& v : t[leave]) v /= pivot;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const Rational factor = t[i][enter];
            for (std::size_t j = 0; j < width; ++j) {
                if (t[leave][j] != 0) t[i][j] -= factor * t[leave][j];
            }
        }
        if (cost[enter] != 0) {
            const Rational factor = cost[enter];
            for (std::size_t j = 0; j < width; ++j) {
                if (t[leave][j] != 0) cost[j] -= factor * t[leave][j];
            }
        }
        basis[leave] = enter;
    }

    // cost[rhs] holds minus the phase-one objective value.
    if (cost[rhs] != 0) return std::nullopt;

    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < cols) x[basis[i]] = t[i][rhs];
    }
    return x;
}

}  // namespace hrum
