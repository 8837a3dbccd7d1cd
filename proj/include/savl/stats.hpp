#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "savl/engine.hpp"

namespace savl {

struct AggregateStats {
    double mean = 0.0;
    double std = 0.0;  ///< sample standard deviation (n - 1)
    double success_ratio = 0.0;
    std::optional<double> expected_fes;  ///< mean fe_at_acceptance over successful trials
    std::size_t n_trials = 0;
    std::size_t n_success = 0;
};

/// Success means final_value <= acceptance. Throws DomainError for no records.
AggregateStats aggregate(std::span<const TrialRecord> records, double acceptance);

struct TTestResult {
    double t_value = 0.0;
    double p_value = 1.0;
    double dof = 0.0;
    bool significant_at_005 = false;
};

/// Welch's unequal-variance test, two-tailed, Welch-Satterthwaite dof.
/// Both samples with zero variance give t = 0, p = 1 when the means agree and
/// t = +-inf, p = 0 otherwise (dof is then n_a + n_b - 2).
/// Throws DomainError if either sample has fewer than two values.
TTestResult welch_t_test(std::span<const double> a, std::span<const double> b);

/// Regularized incomplete beta I_x(a, b), a, b > 0, x in [0, 1].
double regularized_incomplete_beta(double a, double b, double x);

/// P(T <= t) for Student's t with `dof` > 0 degrees of freedom.
double student_t_cdf(double t, double dof);

/// P(|T| >= |t|).
double student_t_two_tailed_p(double t, double dof);

}  // namespace savl
