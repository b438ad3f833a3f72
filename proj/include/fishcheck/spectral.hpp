#pragma once

#include <stdexcept>
#include <string>

#include "fishcheck/bipoly.hpp"
#include "fishcheck/graph.hpp"
#include "fishcheck/sturm.hpp"
#include "fishcheck/unipoly.hpp"

namespace fishcheck {

struct PerronFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PerronEstimate {
    double value = 0.0;
    long iterations = 0;
    bool exact_fallback = false;
};

struct PowerIterationOptions {
    double tol = 1e-12;
    long max_iterations = 100000;
    /// Graphs up to this order fall back to char poly + Sturm on non-convergence.
    int exact_fallback_max_order = 14;
};

/// Largest adjacency eigenvalue by power iteration on A + I from the all-ones
/// vector; stops when successive Rayleigh quotients differ by < tol/10.
/// Throws std::invalid_argument for an edgeless graph and PerronFailure when
/// iteration fails and no exact fallback applies.
PerronEstimate perron_estimate(const Graph& g, const PowerIterationOptions& opts = {});

inline double perron_root(const Graph& g, double tol = 1e-12) {
    return perron_estimate(g, PowerIterationOptions{tol}).value;
}

/// Exact largest root of the adjacency characteristic polynomial.
RootInterval perron_root_exact(const Graph& g, const Rational& tol = Rational::inverse_power_of_ten(12));

/// p_m(x) = x^4 - m x^2 - (m-2) x + m/2 - 1.
BiPoly extremal_quartic();
UniPoly extremal_quartic(int m);

struct RhoPrime {
    int m = 0;
    RootInterval interval;
    double value = 0.0;
};

/// Largest root of p_m, isolated and refined to `tol`.
/// Throws std::invalid_argument unless m is even and >= 6.
RhoPrime rho_prime(int m, const Rational& tol = Rational::inverse_power_of_ten(12));

enum class Verdict { Below, Above, EqualWithinMargin };
const char* verdict_name(Verdict v);

struct RhoComparison {
    Verdict verdict;
    double rho;
    double rho_prime;
    double difference() const { return rho - rho_prime; }
};

RhoComparison compare_rho(const Graph& g, int m, double margin = 1e-6);

}  // namespace fishcheck
