#include "dk/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dk {

namespace {

// Classic augmenting-path (Jonker-Volgenant style) solver for the square
// min-cost assignment problem. Returns row -> column.
std::vector<int> min_cost_assignment(const std::vector<std::vector<double>>& cost) {
    const int n = static_cast<int>(cost.size());
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            int j1 = 0;
            double delta = inf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }
    std::vector<int> row_to_col(n, -1);
    for (int j = 1; j <= n; ++j)
        if (p[j]) row_to_col[p[j] - 1] = j - 1;
    return row_to_col;
}

}  // namespace

MatchReport match_roots(const RootSet& computed, const RootSet& truth) {
    if (computed.size() != truth.size())
        throw std::invalid_argument("root sets must have equal length");
    if (computed.empty())
        throw std::invalid_argument("root sets must be non-empty");

    const std::size_t n = computed.size();
    std::vector<std::vector<double>> cost(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            cost[i][j] = std::abs(computed[i] - truth[j]);

    MatchReport report;
    report.assignment = min_cost_assignment(cost);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = cost[i][static_cast<std::size_t>(report.assignment[i])];
        total += d;
        report.max_error = std::max(report.max_error, d);
    }
    report.mean_error = total / static_cast<double>(n);
    return report;
}

bool enclosure_check(const RootSet& truth, double r, double slack) {
    const double limit = r * (1.0 + slack);
    return std::all_of(truth.begin(), truth.end(),
                       [limit](const Complex& z) { return std::abs(z) <= limit; });
}

}  // namespace dk
