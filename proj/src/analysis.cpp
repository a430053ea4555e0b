#include "hstn/analysis.hpp"

#include <cmath>
#include <iostream>
#include <optional>
#include <vector>

namespace hstn::analysis {

namespace {

double ln_factorial(int n) { return specfun::ln_gamma(n + 1.0); }

double ln_choose(int n, int k) {
    return ln_factorial(n) - ln_factorial(k) - ln_factorial(n - k);
}

// Integrate f against the steady-state distance pdf, splitting at the
// breakpoints of the piecewise law so adaptivity converges fast.
double integrate_against_distance(const mobility::DistanceDistribution& dist,
                                  const specfun::Integrand& f,
                                  const specfun::QuadratureSpec& spec) {
    auto g = [&](double r) { return f(r) * dist.pdf(r); };
    double hi = dist.support_hi();
    if (dist.mode == mobility::Mode::fixed_height)
        return specfun::integrate_finite(g, dist.params.height, hi, spec);
    double h = dist.params.height, r = dist.params.radius;
    return specfun::integrate_finite(g, 0.0, h, spec) +
           specfun::integrate_finite(g, h, r, spec) +
           specfun::integrate_finite(g, r, hi, spec);
}

mobility::DistanceDistribution distance_law(mobility::Mode mode,
                                            const Scenario& sc) {
    return {mode, sc.fleet};
}

// Cancellation-free CDF of Lambda_su given the enumerated SR terms.
double sr_cdf(double y, const std::vector<channel::SrTerm>& terms, double rate,
              double eta_s) {
    if (y <= 0) return 0.0;
    double arg = rate * y / eta_s;
    double cdf = 0.0;
    for (const auto& t : terms)
        cdf += t.xi *
               std::exp(specfun::ln_gamma(t.gamma) - t.gamma * std::log(rate)) *
               specfun::reg_lower_incomplete_gamma(t.gamma, arg);
    return std::fmin(cdf, 1.0);
}

}  // namespace

double cdf_lambda_ud(double x, mobility::Mode mode, const Scenario& sc,
                     double eta_u) {
    if (x <= 0) return 0.0;
    const auto& nk = sc.terrestrial;
    double c = nk.m_ud / (nk.omega_ud * eta_u);
    auto dist = distance_law(mode, sc);
    return integrate_against_distance(
        dist,
        [&](double r) {
            return specfun::reg_lower_incomplete_gamma(
                nk.m_ud, c * x * std::pow(r, nk.alpha));
        },
        sc.quad);
}

double pdf_lambda_ud(double x, mobility::Mode mode, const Scenario& sc,
                     double eta_u) {
    if (x <= 0) return 0.0;
    const auto& nk = sc.terrestrial;
    double c = nk.m_ud / (nk.omega_ud * eta_u);
    auto dist = distance_law(mode, sc);
    double integral = integrate_against_distance(
        dist,
        [&](double r) {
            double ra = std::pow(r, nk.alpha);
            return std::pow(r, nk.m_ud * nk.alpha) * std::exp(-c * x * ra);
        },
        sc.quad);
    return std::exp(nk.m_ud * std::log(c) - specfun::ln_gamma(nk.m_ud) +
                    (nk.m_ud - 1) * std::log(x)) *
           integral;
}

double psi_integral(double gamma_th1, mobility::Mode mode, const Scenario& sc,
                    double eta_s, double eta_u) {
    if (gamma_th1 <= 0) return 0.0;
    auto terms = channel::sr_series(sc.satellite);
    double rate = sc.satellite.beta_u() - sc.satellite.delta_u();

    // Pr[Lambda_ud < g1] + Pr[Lambda_ud >= g1, Lambda_su below the AF
    // outage boundary]; both pieces are positive, so no cancellation at
    // high SNR where Psi is tiny.
    double head = cdf_lambda_ud(gamma_th1, mode, sc, eta_u);
    auto outer = [&](double x) {
        double y = gamma_th1 * (x + gamma_th1 + 1.0) / x;
        double fsu = sr_cdf(y, terms, rate, eta_s);
        if (fsu <= 0) return 0.0;
        return fsu * pdf_lambda_ud(x + gamma_th1, mode, sc, eta_u);
    };
    specfun::QuadratureSpec outer_spec = sc.quad;
    outer_spec.abs_tol = 1e-12;
    double tail = specfun::integrate_semi_infinite(outer, 0.0, outer_spec);
    return std::fmin(head + tail, 1.0);
}

double psi(double gamma_th1, mobility::Mode mode, const Scenario& sc,
           double eta_s, double eta_u) {
    if (gamma_th1 <= 0) return 0.0;
    const auto& nk = sc.terrestrial;
    const int m = nk.m_ud;
    const double g1 = gamma_th1;
    const double rate = sc.satellite.beta_u() - sc.satellite.delta_u();
    const double theta = rate / eta_s;
    const double c = m / (nk.omega_ud * eta_u);
    const double kernel_scale = 2.0 * std::sqrt(theta * g1 * (g1 + 1.0) * c);

    auto dist = distance_law(mode, sc);

    // J1 integral of the closed form; depends on (n, q) only through
    // nu = n - q + 1, so cache it per order.
    const auto terms = channel::sr_series(sc.satellite);
    int gamma_max = 0;
    for (const auto& t : terms) gamma_max = std::max(gamma_max, t.gamma);
    const int nu_lo = 2 - gamma_max;
    std::vector<std::optional<double>> j1_cache(m - nu_lo + 1);
    auto j1_integral = [&](int nu) -> double {
        auto& slot = j1_cache[nu - nu_lo];
        if (!slot) {
            double power = (m - 0.5 * nu) * nk.alpha;
            slot = integrate_against_distance(
                dist,
                [&](double r) {
                    if (r <= 0) return 0.0;
                    double ra = std::pow(r, nk.alpha);
                    double arg = kernel_scale * std::sqrt(ra);
                    double k = specfun::bessel_k(std::abs(nu), arg);
                    return std::pow(r, power) * std::exp(-c * g1 * ra) * k;
                },
                sc.quad);
        }
        return *slot;
    };

    const double ln_c = std::log(c);
    const double ln_theta = std::log(theta);
    const double ln_g1 = std::log(g1);
    const double ln_g1p1 = std::log1p(g1);
    const double ln_eta_s = std::log(eta_s);
    const double ln_common = -theta * g1 + std::log(2.0) - specfun::ln_gamma(m);

    double total = 0.0;
    for (const auto& t : terms) {
        const int g = t.gamma;
        const double ln_xi = std::log(t.xi) - g * ln_eta_s;
        for (int p = 0; p < g; ++p) {
            const double ln_p = ln_factorial(g - 1) - ln_factorial(p);
            for (int q = 0; q <= p; ++q) {
                const double ln_q = ln_choose(p, q);
                for (int n = 0; n < m; ++n) {
                    const int nu = n - q + 1;
                    const double j1 = j1_integral(nu);
                    if (!(j1 > 0)) continue;
                    double ln_term = ln_xi + ln_p + ln_q + ln_common +
                                     ln_choose(m - 1, n) +
                                     (m - 0.5 * nu) * ln_c +
                                     (0.5 * nu - (g - p)) * ln_theta +
                                     (m + p - 0.5 * (n + q + 1)) * ln_g1 +
                                     0.5 * (n + q + 1) * ln_g1p1 + std::log(j1);
                    total += std::exp(ln_term);
                }
            }
        }
    }
    return std::fmin(std::fmax(1.0 - total, 0.0), 1.0);
}

double asymptotic_distance_moment(mobility::Mode mode, const Scenario& sc) {
    auto dist = distance_law(mode, sc);
    double power = sc.terrestrial.m_ud * sc.terrestrial.alpha;
    return integrate_against_distance(
        dist, [power](double r) { return std::pow(r, power); }, sc.quad);
}

namespace {

// alpha_u^N x^N / (N! eta_s^N), the small-argument satellite CDF.
double sr_cdf_asymptotic(double x, const Scenario& sc, double eta_s) {
    int n = sc.satellite.antennas;
    return std::exp(n * std::log(sc.satellite.alpha_u() * x / eta_s) -
                    ln_factorial(n));
}

// (1 / m!) (m x / (omega eta_u))^m * E[W^(m alpha)].
double ud_cdf_asymptotic(double x, mobility::Mode mode, const Scenario& sc,
                         double eta_u, double distance_moment) {
    int m = sc.terrestrial.m_ud;
    return std::exp(m * std::log(m * x / (sc.terrestrial.omega_ud * eta_u)) -
                    ln_factorial(m)) *
           distance_moment;
}

struct NcParts {
    double psi_exact;
    double bracket_asym;
};

NcParts nc_parts(const OutageQuery& q) {
    double g1 = q.scenario.gamma_th1();
    double moment = asymptotic_distance_moment(q.mode, q.scenario);
    return {psi(g1, q.mode, q.scenario, q.eta_s(), q.eta_u()),
            sr_cdf_asymptotic(g1, q.scenario, q.eta_s()) +
                ud_cdf_asymptotic(g1, q.mode, q.scenario, q.eta_u(), moment)};
}

}  // namespace

OutageResult op_nc(const OutageQuery& q) {
    q.scenario.validate();
    const int relays = q.scenario.relays();
    auto parts = nc_parts(q);
    OutageResult res;
    res.terms.psi = parts.psi_exact;
    res.terms.hit_mass = 0.0;
    res.terms.miss_mass = 1.0;
    res.op_exact = std::pow(parts.psi_exact, relays);
    res.op_asymptotic = std::pow(parts.bracket_asym, relays);
    return res;
}

OutageResult op_mpc(const OutageQuery& q) {
    q.scenario.validate();
    const int relays = q.scenario.relays();
    auto layout = q.scenario.cache;
    layout.scheme = caching::Scheme::mpc;
    auto masses = caching::hit_mass(layout);

    double g2 = q.scenario.gamma_th2();
    double f2 = cdf_lambda_ud(g2, q.mode, q.scenario, q.eta_u());
    auto parts = nc_parts(q);
    double moment = asymptotic_distance_moment(q.mode, q.scenario);

    OutageResult res;
    res.terms.psi = parts.psi_exact;
    res.terms.cdf_ud_at_th2 = f2;
    res.terms.hit_mass = masses.hit;
    res.terms.miss_mass = masses.miss;
    res.op_exact = std::pow(f2, relays) * masses.hit +
                   std::pow(parts.psi_exact, relays) * masses.miss;
    double hit_asym =
        ud_cdf_asymptotic(g2, q.mode, q.scenario, q.eta_u(), moment);
    res.op_asymptotic = std::pow(hit_asym, relays) * masses.hit +
                        std::pow(parts.bracket_asym, relays) * masses.miss;
    return res;
}

OutageResult op_uc(const OutageQuery& q) {
    q.scenario.validate();
    const int relays = q.scenario.relays();
    auto layout = q.scenario.cache;
    layout.scheme = caching::Scheme::uc;
    auto masses = caching::hit_mass(layout);

    double g2 = q.scenario.gamma_th2();
    double f2 = cdf_lambda_ud(g2, q.mode, q.scenario, q.eta_u());
    auto parts = nc_parts(q);
    double moment = asymptotic_distance_moment(q.mode, q.scenario);

    OutageResult res;
    res.terms.psi = parts.psi_exact;
    res.terms.cdf_ud_at_th2 = f2;
    res.terms.hit_mass = masses.hit;
    res.terms.miss_mass = masses.miss;
    // i.i.d. second hops: every per-relay term equals F(gamma_th2)
    res.op_exact = f2 * masses.hit +
                   std::pow(parts.psi_exact, relays) * masses.miss;
    double hit_asym =
        ud_cdf_asymptotic(g2, q.mode, q.scenario, q.eta_u(), moment);
    res.op_asymptotic = hit_asym * masses.hit +
                        std::pow(parts.bracket_asym, relays) * masses.miss;
    return res;
}

OutageResult evaluate(const OutageQuery& q) {
    switch (q.scheme) {
        case caching::Scheme::nc: return op_nc(q);
        case caching::Scheme::mpc: return op_mpc(q);
        case caching::Scheme::uc: return op_uc(q);
    }
    throw std::logic_error("evaluate: unknown scheme");
}

double diversity_order(caching::Scheme scheme, mobility::Mode mode,
                       const Scenario& sc,
                       std::pair<double, double> fit_window_db) {
    auto [lo, hi] = fit_window_db;
    if (!(lo < hi))
        throw std::invalid_argument("diversity_order: bad fit window");

    constexpr int kPoints = 11;
    constexpr double kUnderflow = 1e-280;
    OutageQuery q;
    q.scenario = sc;
    q.scheme = scheme;
    q.mode = mode;

    for (int attempt = 0; attempt < 8; ++attempt) {
        std::vector<double> xs, ys;
        bool underflow = false;
        for (int i = 0; i < kPoints; ++i) {
            q.snr_db = lo + (hi - lo) * i / (kPoints - 1);
            double op = evaluate(q).op_asymptotic;
            if (!(op > kUnderflow)) {
                underflow = true;
                break;
            }
            xs.push_back(q.snr_db / 10.0);  // log10(eta)
            ys.push_back(std::log10(op));
        }
        if (underflow) {
            std::cerr << "diversity_order: OP underflow in [" << lo << ", " << hi
                      << "] dB; shifting window down 10 dB\n";
            lo -= 10.0;
            hi -= 10.0;
            continue;
        }
        double xbar = 0, ybar = 0;
        for (int i = 0; i < kPoints; ++i) {
            xbar += xs[i];
            ybar += ys[i];
        }
        xbar /= kPoints;
        ybar /= kPoints;
        double sxy = 0, sxx = 0;
        for (int i = 0; i < kPoints; ++i) {
            sxy += (xs[i] - xbar) * (ys[i] - ybar);
            sxx += (xs[i] - xbar) * (xs[i] - xbar);
        }
        return -sxy / sxx;
    }
    throw specfun::AccuracyError("diversity_order: persistent underflow", 0.0);
}

}  // namespace hstn::analysis
