#pragma once

#include "reserve3d/params.hpp"

#include <cmath>
#include <cstddef>

namespace reserve3d {

struct Moments {
    double mean = 0.0;
    double variance = 0.0;
    double std_dev() const { return std::sqrt(variance); }
};

struct ReserveMoments {
    Moments ibnr_count;
    Moments ibnr_reserve;
    Moments reported_reserve;
    Moments total_reserve;
};

// First two moments of the payments a single claim with reporting lag `lag`
// makes in run-off years first_runoff..K.
struct ClaimPaymentMoments {
    double first = 0.0;   // E[g]
    double second = 0.0;  // E[g^2]
};

ClaimPaymentMoments claim_payment_moments(const ModelParams& params, std::size_t lag, std::size_t first_runoff);

// Closed-form mean and variance of the reserve quantities.
//
// Poisson ultimate counts thinned by the multinomial lag split give independent
// Poisson(N_i lambda_j) reported counts per (i, j). Binomial survival with
// conditional probabilities eta_k / eta_{k-1} and binomial payment indicators act
// independently on each claim, so every reserve is a compound Poisson sum over
// claims: E = sum mu_ij E[g_ij], Var = sum mu_ij E[g_ij^2]. For one claim,
//   E[g]   = sum_k eta_k p_k m_k
//   E[g^2] = sum_k eta_k p_k (v_k + m_k^2) + 2 sum_{k<l} eta_l p_k p_l m_k m_l
// using P(active at k and l) = eta_l for k < l. See docs/analytic_moments.md.
ReserveMoments analytic_reserve_moments(const ModelParams& params);

} // namespace reserve3d
