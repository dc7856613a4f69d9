#pragma once

#include <cstdint>
#include <map>

namespace corefactor {

// Upper tail of the Poisson distribution: pi_k(lambda) = P[Poisson(lambda) >= k-1].
// Evaluated as the smaller of tail/complement via term recurrences started in
// log space, with Kahan-compensated accumulation; stable (no overflow, no
// direct factorials) for k and lambda up to 1e6 with relative error <= 1e-12
// wherever the value is representable.
double pi_k(int k, double lambda);

struct ThresholdResult {
    int k = 0;
    double lambda_k = 0;   // the positive minimizer of f(x) = x / pi_k(x)
    double c_k = 0;        // f(lambda_k)
    double tolerance = 0;  // final bracket width around lambda_k
    int iterations = 0;    // total f evaluations
};

// The emergence threshold c_k = min_{x>0} x / pi_k(x): golden-section search
// after a geometric bracketing scan over [k/2, 2k] (expanded if needed).
// Requires k >= 3. tol is the target bracket width on lambda.
ThresholdResult compute_ck(int k, double tol = 1e-10);

// Four-term closed-form approximation of c_k:
//   k + sqrt(k q) + sqrt(k/q) + (q-1)/3,  q = log k - log(2 pi).
// Requires q > 0, i.e. k >= 7.
double ck_asymptotic(int k);

struct CorePrediction {
    int k = 0;
    double c = 0;
    double mu = 0;             // larger root of mu/c = pi_k(mu) in (c-2, c)
    double core_fraction = 0;  // predicted |core| / n = P[Poisson(mu) >= k]
    std::map<int, double> degree_pmf;  // j -> predicted fraction of n with core-degree j
    int j_max = 0;             // truncation: smallest j with remaining tail < 1e-12
};

// Predicted core structure at mean degree c > c_k: solves mu/c = pi_k(mu) by
// bisection on the bracket (c-2, c) (refined to 1e-12; fails loudly if the
// bracket holds no sign change), then fills the Poisson degree profile
// e^-mu mu^j / j! for j in [k, j_max].
CorePrediction mu_kc(int k, double c);

// Total-variation distance between the predicted per-n degree fractions and
// an empirical core degree histogram of a graph on n vertices:
//   1/2 * sum_j |pred_j - hist_j / n| over the union of supports.
double degree_pmf_distance(const CorePrediction& pred,
                           const std::map<int, std::uint64_t>& hist,
                           std::size_t n);

}  // namespace corefactor
