#pragma once

#include <utility>

#include "hstn/scenario.hpp"

namespace hstn::analysis {

/// One outage-probability evaluation point. eta_u = 10^(snr_db/10);
/// eta_s gets an optional offset for asymmetric-link studies.
struct OutageQuery {
    Scenario scenario;
    caching::Scheme scheme = caching::Scheme::nc;
    mobility::Mode mode = mobility::Mode::fully3d;
    double snr_db = 30.0;
    double eta_s_offset_db = 0.0;

    double eta_u() const { return std::pow(10.0, snr_db / 10.0); }
    double eta_s() const {
        return std::pow(10.0, (snr_db + eta_s_offset_db) / 10.0);
    }
};

struct OutageResult {
    double op_exact = 0.0;
    double op_asymptotic = 0.0;  // raw power law, may exceed 1 at low SNR
    struct Terms {
        double psi = 0.0;            // Pr[Lambda_id < gamma_th1]
        double cdf_ud_at_th2 = 0.0;  // F_{Lambda_ud}(gamma_th2)
        double hit_mass = 0.0;
        double miss_mass = 1.0;
    } terms;

    double op_asymptotic_clamped() const {
        return std::fmin(std::fmax(op_asymptotic, 0.0), 1.0);
    }
};

/// CDF of the second-hop SNR Lambda_ud at x: the regularized incomplete
/// gamma averaged over the steady-state distance law of the given mode.
double cdf_lambda_ud(double x, mobility::Mode mode, const Scenario& sc,
                     double eta_u);

/// pdf of Lambda_ud (the r-integral form obtained by differentiating the
/// CDF under the integral sign).
double pdf_lambda_ud(double x, mobility::Mode mode, const Scenario& sc,
                     double eta_u);

/// Pr[Lambda_id < gamma_th1] via the closed-form multi-sum with the
/// Bessel-K kernel.
double psi(double gamma_th1, mobility::Mode mode, const Scenario& sc,
           double eta_s, double eta_u);

/// Same probability by direct nested quadrature (independent oracle).
double psi_integral(double gamma_th1, mobility::Mode mode, const Scenario& sc,
                    double eta_s, double eta_u);

/// Distance moment E[W^(m_ud * alpha)] of the mode's steady-state law;
/// the J2 factor of every asymptotic OP expression.
double asymptotic_distance_moment(mobility::Mode mode, const Scenario& sc);

OutageResult op_nc(const OutageQuery& q);
OutageResult op_mpc(const OutageQuery& q);
OutageResult op_uc(const OutageQuery& q);

/// Dispatch on q.scheme.
OutageResult evaluate(const OutageQuery& q);

/// Negative least-squares slope of log10(asymptotic OP) vs log10(eta) over
/// the window (>= 5 points). If the OP underflows inside the window, the
/// window is shifted down and a warning goes to stderr.
double diversity_order(caching::Scheme scheme, mobility::Mode mode,
                       const Scenario& sc,
                       std::pair<double, double> fit_window_db = {50.0, 70.0});

}  // namespace hstn::analysis
