#include "savl/stats.hpp"

#include <cmath>
#include <limits>
#include <numeric>

namespace savl {
namespace {

struct Moments {
    double mean;
    double variance;
};

Moments sample_moments(std::span<const double> values) {
    const double n = static_cast<double>(values.size());
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : values) {
        ss += (v - mean) * (v - mean);
    }
    return {mean, values.size() > 1 ? ss / (n - 1.0) : 0.0};
}

// Modified Lentz evaluation of the incomplete-beta continued fraction.
double beta_continued_fraction(double a, double b, double x) {
    constexpr int kMaxIter = 10000;
    constexpr double kEps = 1e-16;
    constexpr double kTiny = 1e-300;
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps) break;
    }
    return h;
}

}  // namespace

AggregateStats aggregate(std::span<const TrialRecord> records, double acceptance) {
    if (records.empty()) {
        throw DomainError("aggregate needs at least one trial record");
    }
    std::vector<double> finals;
    finals.reserve(records.size());
    AggregateStats out;
    double fes_sum = 0.0;
    std::size_t fes_count = 0;
    for (const auto& record : records) {
        finals.push_back(record.final_value);
        if (record.final_value <= acceptance) {
            ++out.n_success;
            if (record.fe_at_acceptance) {
                fes_sum += static_cast<double>(*record.fe_at_acceptance);
                ++fes_count;
            }
        }
    }
    const auto moments = sample_moments(finals);
    out.mean = moments.mean;
    out.std = std::sqrt(moments.variance);
    out.n_trials = records.size();
    out.success_ratio = static_cast<double>(out.n_success) / static_cast<double>(out.n_trials);
    if (fes_count > 0) {
        out.expected_fes = fes_sum / static_cast<double>(fes_count);
    }
    return out;
}

double regularized_incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0)) throw DomainError("incomplete beta needs a, b > 0");
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("incomplete beta needs x in [0, 1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                             a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(log_front);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * beta_continued_fraction(a, b, x) / a;
    }
    return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double student_t_two_tailed_p(double t, double dof) {
    if (!(dof > 0.0)) throw DomainError("t distribution needs dof > 0");
    if (std::isnan(t)) return std::numeric_limits<double>::quiet_NaN();
    if (std::isinf(t)) return 0.0;
    const double t2 = t * t;
    const double x = dof / (dof + t2);
    return regularized_incomplete_beta(0.5 * dof, 0.5, x);
}

double student_t_cdf(double t, double dof) {
    const double tail = 0.5 * student_t_two_tailed_p(t, dof);
    return t < 0.0 ? tail : 1.0 - tail;
}

TTestResult welch_t_test(std::span<const double> a, std::span<const double> b) {
    if (a.size() < 2 || b.size() < 2) {
        throw DomainError("welch_t_test needs at least two values per sample");
    }
    const auto ma = sample_moments(a);
    const auto mb = sample_moments(b);
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    const double va = ma.variance / na;
    const double vb = mb.variance / nb;
    const double se2 = va + vb;

    TTestResult out;
    if (!(se2 > 0.0)) {
        out.dof = na + nb - 2.0;
        if (ma.mean == mb.mean) {
            out.t_value = 0.0;
            out.p_value = 1.0;
        } else {
            out.t_value = ma.mean > mb.mean ? std::numeric_limits<double>::infinity()
                                            : -std::numeric_limits<double>::infinity();
            out.p_value = 0.0;
        }
    } else {
        out.t_value = (ma.mean - mb.mean) / std::sqrt(se2);
        out.dof = se2 * se2 / (va * va / (na - 1.0) + vb * vb / (nb - 1.0));
        out.p_value = student_t_two_tailed_p(out.t_value, out.dof);
    }
    out.significant_at_005 = out.p_value < 0.05;
    return out;
}

}  // namespace savl
