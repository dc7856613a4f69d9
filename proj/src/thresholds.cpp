#include "corefactor/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace corefactor {

namespace {

constexpr double kLog2Pi = 1.8378770664093454836;

// log(1+x) - x without cancellation near x = 0.
double ln1pmx(double x) {
    if (x <= -1.0) return -std::numeric_limits<double>::infinity();
    if (std::fabs(x) > 0.5) return std::log1p(x) - x;
    // Alternating series sum_{i>=2} (-1)^{i+1} x^i / i.
    double term = x;  // becomes (-1)^{i+1} x^i at each step
    double sum = 0.0;
    for (int i = 2; i < 200; ++i) {
        term *= -x;
        const double contrib = term / i;
        sum += contrib;
        if (std::fabs(contrib) < 1e-20 * (std::fabs(sum) + 1e-300)) break;
    }
    return sum;
}

// log P[Poisson(lambda) = j]. For large j the Stirling form keeps full
// precision where -lambda + j log(lambda) - lgamma(j+1) would cancel.
double log_poisson_pmf(double j, double lambda) {
    if (lambda == 0.0) return j == 0.0 ? 0.0 : -std::numeric_limits<double>::infinity();
    if (j <= 30.0) return -lambda + j * std::log(lambda) - std::lgamma(j + 1.0);
    const double corr = 1.0 / (12.0 * j) - 1.0 / (360.0 * j * j * j) +
                        1.0 / (1260.0 * j * j * j * j * j);
    return j * ln1pmx((lambda - j) / j) - 0.5 * (kLog2Pi + std::log(j)) - corr;
}

struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

}  // namespace

double pi_k(int k, double lambda) {
    if (k < 1) throw std::invalid_argument("pi_k: k must be >= 1");
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
        throw std::invalid_argument("pi_k: lambda must be finite and >= 0");
    }
    const double a = static_cast<double>(k) - 1.0;  // P[X >= a]
    if (a <= 0.0) return 1.0;
    if (lambda == 0.0) return 0.0;
    if (a > lambda) {
        // Upper tail summed directly: terms decrease monotonically from j = a.
        KahanSum s;
        double term = std::exp(log_poisson_pmf(a, lambda));
        double j = a;
        while (term > 0.0) {
            s.add(term);
            term *= lambda / (j + 1.0);
            j += 1.0;
            if (term <= s.sum * 1e-19) break;
        }
        return s.sum;
    }
    // Complement: P[X <= a-1], summed downward from j = a-1 (terms decrease
    // since a-1 < lambda). The complement is bounded away from 1, so 1 - sum
    // loses no precision.
    KahanSum s;
    double term = std::exp(log_poisson_pmf(a - 1.0, lambda));
    double j = a - 1.0;
    while (term > 0.0 && j >= 0.0) {
        s.add(term);
        term *= j / lambda;
        j -= 1.0;
        if (term <= s.sum * 1e-19) break;
    }
    const double tail = 1.0 - s.sum;
    return tail < 0.0 ? 0.0 : tail;
}

ThresholdResult compute_ck(int k, double tol) {
    if (k < 3) throw std::invalid_argument("compute_ck: k must be >= 3");
    if (!(tol > 0.0)) throw std::invalid_argument("compute_ck: tol must be > 0");
    int evals = 0;
    const auto f = [&](double lambda) {
        ++evals;
        const double p = pi_k(k, lambda);
        return p > 0.0 ? lambda / p : std::numeric_limits<double>::infinity();
    };

    // Geometric scan over [k/2, 2k], expanded if the minimum is not interior.
    double lo = k / 2.0;
    double hi = 2.0 * k;
    constexpr double kRatio = 1.02;
    double a = 0, b = 0;  // bracket around the minimum
    for (int attempt = 0; attempt < 80; ++attempt) {
        std::vector<double> xs, vs;
        for (double x = lo; x < hi * kRatio; x *= kRatio) {
            xs.push_back(x);
            vs.push_back(f(x));
        }
        std::size_t best = 0;
        for (std::size_t i = 1; i < vs.size(); ++i) {
            if (vs[i] < vs[best]) best = i;
        }
        if (best == 0) {
            lo /= 4.0;  // minimum lies left of the scan
            continue;
        }
        if (best + 1 == vs.size()) {
            hi *= 4.0;  // minimum lies right of the scan
            if (hi > 1e12) break;
            continue;
        }
        a = xs[best - 1];
        b = xs[best + 1];
        break;
    }
    if (a == 0.0 && b == 0.0) {
        throw std::runtime_error("compute_ck: bracketing scan found no interior minimum for k=" +
                                 std::to_string(k));
    }

    // Golden-section search on [a, b].
    constexpr double kGolden = 0.61803398874989484820;
    double x1 = b - kGolden * (b - a);
    double x2 = a + kGolden * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kGolden * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kGolden * (b - a);
            f2 = f(x2);
        }
    }
    ThresholdResult result;
    result.k = k;
    result.lambda_k = 0.5 * (a + b);
    result.c_k = std::min(f(result.lambda_k), std::min(f1, f2));
    result.tolerance = b - a;
    result.iterations = evals;
    return result;
}

double ck_asymptotic(int k) {
    if (k < 1) throw std::invalid_argument("ck_asymptotic: k must be >= 1");
    const double q = std::log(static_cast<double>(k)) - kLog2Pi;
    if (!(q > 0.0)) {
        throw std::invalid_argument("ck_asymptotic: requires log k > log 2*pi (k >= 7)");
    }
    const double kd = static_cast<double>(k);
    return kd + std::sqrt(kd * q) + std::sqrt(kd / q) + (q - 1.0) / 3.0;
}

CorePrediction mu_kc(int k, double c) {
    const ThresholdResult thr = compute_ck(k);
    if (!(c > thr.c_k)) {
        throw std::invalid_argument("mu_kc: c=" + std::to_string(c) +
                                    " must exceed the threshold c_k=" + std::to_string(thr.c_k));
    }
    // g changes sign from - to + at the larger root of mu/c = pi_k(mu).
    // g(lambda_k) = lambda_k (1/c - 1/c_k) < 0 above threshold, and lambda_k
    // separates the two roots, so raising the lower endpoint to lambda_k
    // isolates the larger one when both roots sit inside (c-2, c) (small k
    // near threshold). If g is still positive there the larger root lies
    // below c-2 entirely and the bracket genuinely excludes it.
    const auto g = [&](double mu) { return mu / c - pi_k(k, mu); };
    double lo = std::max(c - 2.0, thr.lambda_k);
    double hi = c;
    if (!(g(lo) < 0.0 && g(hi) > 0.0)) {
        throw std::runtime_error("mu_kc: bracket (c-2, c) contains no sign change for k=" +
                                 std::to_string(k) + ", c=" + std::to_string(c));
    }
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) < 0.0 ? lo : hi) = mid;
    }

    CorePrediction pred;
    pred.k = k;
    pred.c = c;
    pred.mu = 0.5 * (lo + hi);
    pred.core_fraction = pi_k(k + 1, pred.mu);  // P[Poisson(mu) >= k]

    // Degree profile e^-mu mu^j / j! for j >= k, truncated when the remaining
    // tail drops below 1e-12.
    double term = std::exp(log_poisson_pmf(static_cast<double>(k), pred.mu));
    KahanSum acc;
    int j = k;
    while (pred.core_fraction - acc.sum >= 1e-12 && j < k + 2000000) {
        pred.degree_pmf[j] = term;
        acc.add(term);
        term *= pred.mu / (j + 1.0);
        ++j;
    }
    pred.j_max = j - 1;
    return pred;
}

double degree_pmf_distance(const CorePrediction& pred,
                           const std::map<int, std::uint64_t>& hist,
                           std::size_t n) {
    if (n == 0) throw std::invalid_argument("degree_pmf_distance: n must be > 0");
    const double nd = static_cast<double>(n);
    double total = 0.0;
    for (const auto& [j, p] : pred.degree_pmf) {
        const auto it = hist.find(j);
        const double h = it == hist.end() ? 0.0 : static_cast<double>(it->second) / nd;
        total += std::fabs(p - h);
    }
    for (const auto& [j, cnt] : hist) {
        if (!pred.degree_pmf.count(j)) total += static_cast<double>(cnt) / nd;
    }
    return 0.5 * total;
}

}  // namespace corefactor
