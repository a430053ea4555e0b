#include "hstn/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "hstn/specfun.hpp"

namespace hstn::channel {

namespace {
constexpr double kBoltzmann = 1.38e-23;  // J/K
constexpr double kLightSpeed = 3e8;      // m/s

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
}  // namespace

double SrFadingParams::alpha_u() const {
    double tb = 2.0 * b_su;
    return std::pow(tb * m_su / (tb * m_su + omega_su), m_su) / tb;
}

double SrFadingParams::delta_u() const {
    double tb = 2.0 * b_su;
    return omega_su / (tb * (tb * m_su + omega_su));
}

void SrFadingParams::validate() const {
    if (m_su < 1)
        throw std::invalid_argument("satellite: m_su must be a positive integer");
    if (!(b_su > 0))
        throw std::invalid_argument("satellite: b_su must be > 0");
    if (!(omega_su >= 0))
        throw std::invalid_argument("satellite: omega_su must be >= 0");
    if (antennas < 1)
        throw std::invalid_argument("satellite: antennas must be >= 1");
}

std::vector<SrTerm> sr_series(const SrFadingParams& p) {
    p.validate();
    const int n = p.antennas;
    const double du = p.delta_u();
    const double la = std::log(p.alpha_u());

    // zeta(k) = (-1)^k (1 - m)_k delta^k / (k!)^2, nonnegative for k < m
    std::vector<double> zeta(p.m_su);
    for (int k = 0; k < p.m_su; ++k) {
        double fact = 1.0;
        for (int i = 1; i <= k; ++i) fact *= i;
        zeta[k] = std::pow(-1.0, k) * specfun::pochhammer(1.0 - p.m_su, k) *
                  std::pow(du, k) / (fact * fact);
    }

    std::vector<double> by_gamma(static_cast<std::size_t>(n * (p.m_su - 1)) + 1, 0.0);
    std::vector<int> idx(n, 0);
    for (;;) {
        double xi = std::exp(n * la);
        int sum = 0;
        for (int k = 0; k < n; ++k) {
            xi *= zeta[idx[k]];
            sum += idx[k];
        }
        int partial = 0;
        for (int j = 1; j < n; ++j) {
            partial += idx[j - 1];
            xi *= specfun::beta(partial + j, idx[j] + 1);
        }
        by_gamma[sum] += xi;

        int d = 0;
        while (d < n) {
            if (++idx[d] < p.m_su) break;
            idx[d++] = 0;
        }
        if (d == n) break;
    }

    std::vector<SrTerm> terms;
    for (std::size_t s = 0; s < by_gamma.size(); ++s)
        if (by_gamma[s] != 0.0)
            terms.push_back({static_cast<int>(s) + n, by_gamma[s]});
    return terms;
}

double sr_sum_pdf(double x, const SrFadingParams& p) {
    if (x < 0) return 0.0;
    double rate = p.beta_u() - p.delta_u();
    double sum = 0.0;
    for (const auto& t : sr_series(p))
        sum += t.xi * std::pow(x, t.gamma - 1) * std::exp(-rate * x);
    return sum;
}

double sr_sum_cdf_scaled(double x, const SrFadingParams& p, double eta_s) {
    if (!(eta_s > 0))
        throw std::domain_error("sr_sum_cdf_scaled: requires eta_s > 0");
    if (x <= 0) return 0.0;
    double rate = p.beta_u() - p.delta_u();
    double y = rate * x / eta_s;
    double cdf = 0.0;
    for (const auto& t : sr_series(p)) {
        // integral of xi u^{gamma-1} e^{-rate u} over [0, x/eta_s]
        double coeff = t.xi * std::exp(specfun::ln_gamma(t.gamma) -
                                       t.gamma * std::log(rate));
        cdf += coeff * specfun::reg_lower_incomplete_gamma(t.gamma, y);
    }
    return std::fmin(cdf, 1.0);
}

double LinkBudget::rho() const {
    return 2.07123 * std::sin(theta_deg * M_PI / 180.0) /
           std::sin(theta_3db_deg * M_PI / 180.0);
}

void LinkBudget::validate() const {
    if (!(power_w > 0) || !(noise_temp_k > 0) || !(bandwidth_hz > 0) ||
        !(carrier_hz > 0) || !(sat_distance_m > 0))
        throw std::invalid_argument("satellite: link budget values must be > 0");
    if (!(theta_deg > 0) || !(theta_deg < 90) || !(theta_3db_deg > 0) ||
        !(theta_3db_deg < 90))
        throw std::invalid_argument("satellite: angles must lie in (0, 90) degrees");
}

double beam_gain(const LinkBudget& b) {
    double rho = b.rho();
    double bracket;
    if (rho < 1e-4) {
        bracket = 1.0;  // J1(r)/(2r) -> 1/4 and 36 J3(r)/r^3 -> 3/4
    } else {
        bracket = specfun::bessel_j(1, rho) / (2.0 * rho) +
                  36.0 * specfun::bessel_j(3, rho) / (rho * rho * rho);
    }
    if (b.square_beam_bracket) bracket *= bracket;
    return db_to_linear(b.gain_uav_db) * bracket;
}

double eta_s(const LinkBudget& b) {
    double amp = kLightSpeed / (4.0 * M_PI * b.carrier_hz * b.sat_distance_m);
    double noise = kBoltzmann * b.noise_temp_k * b.bandwidth_hz;
    return b.power_w * db_to_linear(b.gain_sat_db) * beam_gain(b) * amp * amp /
           noise;
}

void NakagamiParams::validate() const {
    if (m_ud < 1)
        throw std::invalid_argument("terrestrial: m_ud must be a positive integer");
    if (!(omega_ud > 0))
        throw std::invalid_argument("terrestrial: omega_ud must be > 0");
    if (!(alpha >= 2))
        throw std::invalid_argument("terrestrial: alpha must be >= 2");
}

double sample_sr_power(const SrFadingParams& p, rng::Stream& rng) {
    double total = 0.0;
    double scatter_sd = std::sqrt(p.b_su);  // per-component variance b_su
    for (int n = 0; n < p.antennas; ++n) {
        double los = (p.omega_su > 0)
                         ? std::sqrt(rng.gamma(p.m_su, p.omega_su / p.m_su))
                         : 0.0;
        double re = scatter_sd * rng.normal() + los;
        double im = scatter_sd * rng.normal();
        total += re * re + im * im;
    }
    return total;
}

double sample_nakagami_power(const NakagamiParams& p, rng::Stream& rng) {
    return rng.gamma(p.m_ud, p.omega_ud / p.m_ud);
}

double af_end_to_end_snr(double lambda_su, double lambda_ud) {
    if (lambda_su <= 0 || lambda_ud <= 0) return 0.0;
    return lambda_su * lambda_ud / (lambda_su + lambda_ud + 1.0);
}

double lambda_ud(double eta_u, double w, double alpha, double gain) {
    if (!(w > 0))
        throw std::domain_error("lambda_ud: requires w > 0");
    return eta_u * std::pow(w, -alpha) * gain;
}

}  // namespace hstn::channel
