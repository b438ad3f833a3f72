#include <cmath>
#include <vector>

#include "fishcheck/partition.hpp"
#include "fishcheck/spectral.hpp"

namespace fishcheck {

PerronEstimate perron_estimate(const Graph& g, const PowerIterationOptions& opts) {
    if (g.edge_count() == 0) throw std::invalid_argument("perron_root: graph has no edges");
    const auto n = static_cast<size_t>(g.order());
    std::vector<std::vector<int>> adj(n);
    for (size_t v = 0; v < n; ++v) adj[v] = g.neighbors(static_cast<int>(v));

    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(n);
    double theta_prev = NAN;
    for (long it = 1; it <= opts.max_iterations; ++it) {
        // y = (A + I) x
        for (size_t v = 0; v < n; ++v) {
            double acc = x[v];
            for (int w : adj[v]) acc += x[static_cast<size_t>(w)];
            y[v] = acc;
        }
        double dot = 0.0, norm2 = 0.0;
        for (size_t v = 0; v < n; ++v) {
            dot += x[v] * y[v];
            norm2 += y[v] * y[v];
        }
        const double theta = dot - 1.0;  // x is unit length
        const double norm = std::sqrt(norm2);
        if (!std::isfinite(norm) || norm == 0.0) break;
        for (size_t v = 0; v < n; ++v) x[v] = y[v] / norm;
        if (!std::isnan(theta_prev) && std::fabs(theta - theta_prev) < opts.tol / 10.0)
            return {theta, it, false};
        theta_prev = theta;
    }
    if (g.order() <= opts.exact_fallback_max_order) {
        const RootInterval iv = perron_root_exact(g);
        return {iv.approx(), opts.max_iterations, true};
    }
    throw PerronFailure("perron_root: power iteration did not converge within " +
                        std::to_string(opts.max_iterations) + " iterations (n = " + std::to_string(g.order()) + ")");
}

RootInterval perron_root_exact(const Graph& g, const Rational& tol) {
    return sturm_largest_root(char_poly(adjacency_matrix(g)), tol);
}

}  // namespace fishcheck
