#pragma once

#include <vector>

#include "hstn/rng.hpp"

namespace hstn::channel {

/// Shadowed-Rician fading of one satellite->UAV link, N antennas with
/// i.i.d. entries. m_su must be an integer so every series terminates.
struct SrFadingParams {
    int m_su = 2;             // Nakagami LOS severity
    double b_su = 0.063;      // half average scattered power
    double omega_su = 0.0005; // average LOS power
    int antennas = 2;         // N

    double alpha_u() const;
    double beta_u() const { return 1.0 / (2.0 * b_su); }
    double delta_u() const;
    void validate() const;
};

/// One aggregated term of the multi-sum pdf of ||g||^2: coefficient Xi
/// summed over all index vectors with the same gamma = sum(i) + N.
struct SrTerm {
    int gamma;
    double xi;
};

/// Enumerate the m_su^N index vectors and aggregate Xi(N) by gamma.
std::vector<SrTerm> sr_series(const SrFadingParams& p);

/// pdf of ||g||^2 (sum of N i.i.d. SR power gains).
double sr_sum_pdf(double x, const SrFadingParams& p);

/// CDF of Lambda_su = eta_s * ||g||^2, evaluated cancellation-free.
double sr_sum_cdf_scaled(double x, const SrFadingParams& p, double eta_s);

/// Satellite link budget; angles in degrees, gains in dB.
struct LinkBudget {
    double power_w = 1.0;          // P_s
    double noise_temp_k = 300.0;   // T
    double bandwidth_hz = 15e6;    // W
    double carrier_hz = 2e9;       // f_c
    double sat_distance_m = 35786e3;
    double theta_deg = 0.8;        // angular separation from beam center
    double theta_3db_deg = 0.3;    // 3 dB beamwidth
    double gain_sat_db = 53.45;    // antenna gain at satellite
    double gain_uav_db = 4.8;      // antenna gain at UAV
    bool square_beam_bracket = false;

    double rho() const;
    void validate() const;
};

/// Beam gain of the satellite towards the UAV: gain_uav *
/// (J1(rho)/(2 rho) + 36 J3(rho)/rho^3), bracket optionally squared.
double beam_gain(const LinkBudget& b);

/// Normalized first-hop SNR scale eta_s = P_s L_su G_s beamgain / sigma^2
/// with sigma^2 = K_B T W folded into the free-space loss factor.
double eta_s(const LinkBudget& b);

/// Nakagami-m terrestrial link; |g_ud|^2 ~ Gamma(m_ud, omega_ud / m_ud).
struct NakagamiParams {
    int m_ud = 1;
    double omega_ud = 1.0;
    double alpha = 2.0;  // path-loss exponent

    void validate() const;
};

/// One draw of ||g||^2 for the SR satellite channel.
double sample_sr_power(const SrFadingParams& p, rng::Stream& rng);

/// One draw of |g_ud|^2.
double sample_nakagami_power(const NakagamiParams& p, rng::Stream& rng);

/// Variable-gain AF end-to-end SNR: a b / (a + b + 1).
double af_end_to_end_snr(double lambda_su, double lambda_ud);

/// Second-hop SNR eta_u * w^{-alpha} * gain.
double lambda_ud(double eta_u, double w, double alpha, double gain);

}  // namespace hstn::channel
