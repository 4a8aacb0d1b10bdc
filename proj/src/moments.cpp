#include "reserve3d/moments.hpp"

namespace reserve3d {

ClaimPaymentMoments claim_payment_moments(const ModelParams& params, std::size_t lag, std::size_t first_runoff) {
    ClaimPaymentMoments out;
    double earlier = 0.0;  // sum of p_k m_k over first_runoff <= k < l
    for (std::size_t k = first_runoff; k < params.runoff_count(); ++k) {
        const double eta = params.survival[k];
        const double p = params.pay_prob[k];
        const double m = params.severity_mean(lag, k);
        const double v = params.severity_var(lag, k);
        out.first += eta * p * m;
        out.second += eta * p * (v + m * m) + 2.0 * eta * p * m * earlier;
        earlier += p * m;
    }
    return out;
}

ReserveMoments analytic_reserve_moments(const ModelParams& params) {
    ReserveMoments out;
    const std::size_t horizon = params.occurrence_years;
    for (std::size_t occ = 0; occ < horizon; ++occ) {
        const std::size_t year = occ + 1;
        for (std::size_t j = 0; j < params.max_lag; ++j) {
            const double mu = params.expected_counts[occ] * params.lag_probs[j];
            if (year + j > horizon) {
                const auto g = claim_payment_moments(params, j, 0);
                out.ibnr_count.mean += mu;
                out.ibnr_count.variance += mu;
                out.ibnr_reserve.mean += mu * g.first;
                out.ibnr_reserve.variance += mu * g.second;
            } else {
                const std::size_t first_future = horizon - year - j + 1;
                const auto g = claim_payment_moments(params, j, first_future);
                out.reported_reserve.mean += mu * g.first;
                out.reported_reserve.variance += mu * g.second;
            }
        }
    }
    // The two parts involve disjoint claim sets, hence are independent.
    out.total_reserve.mean = out.ibnr_reserve.mean + out.reported_reserve.mean;
    out.total_reserve.variance = out.ibnr_reserve.variance + out.reported_reserve.variance;
    return out;
}

} // namespace reserve3d
