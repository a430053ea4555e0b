#include "hstn/mobility.hpp"

#include <algorithm>
#include <stdexcept>

#include "hstn/specfun.hpp"

namespace hstn::mobility {

void MobilityParams::validate() const {
    if (!(height > 0) || !(radius > 0) || !(height < radius))
        throw std::invalid_argument("mobility: requires 0 < H < R");
    if (!(step_range > 0))
        throw std::invalid_argument("mobility: requires R' > 0");
    if (!(v_min > 0) || !(v_min < v_max))
        throw std::invalid_argument("mobility: requires 0 < v_min < v_max");
    if (!dwell_auto() && !(tau_min <= tau_max))
        throw std::invalid_argument("mobility: requires tau_min <= tau_max");
    if (!(p_stay >= 0) || !(p_stay <= 1))
        throw std::invalid_argument("mobility: requires p_stay in [0, 1]");
    if (!(slot > 0))
        throw std::invalid_argument("mobility: requires slot > 0");
}

double mean_movement_time(const MobilityParams& p) {
    return std::log(p.v_max / p.v_min) / (p.v_max - p.v_min) * p.height / 3.0;
}

std::pair<double, double> MobilityParams::dwell_range() const {
    if (!dwell_auto()) return {tau_min, tau_max};
    if (p_stay >= 1.0) {
        double inf = std::numeric_limits<double>::infinity();
        return {inf, inf};
    }
    // E[T_s] = p_s / (1 - p_s) * E[T_m]; uniform dwell centered there.
    double mean_dwell = p_stay / (1.0 - p_stay) * mean_movement_time(*this);
    return {0.5 * mean_dwell, 1.5 * mean_dwell};
}

double altitude_pdf(double x, const MobilityParams& p) {
    if (x < 0 || x > p.height) return 0.0;
    double h = p.height;
    double stat = 1.0 / h;
    double mob = -6.0 * x * x / (h * h * h) + 6.0 * x / (h * h);
    return p.p_stay * stat + (1.0 - p.p_stay) * mob;
}

double range_pdf(double z, const MobilityParams& p) {
    if (z < 0 || z > p.radius) return 0.0;
    return 2.0 * z / (p.radius * p.radius);
}

namespace {

// Piecewise distance pdfs from mixing h (static: uniform, mobility: RWP
// transition law) with the uniform-disk horizontal range.
double distance_pdf_static(double w, double h, double r) {
    double r2 = r * r;
    if (w < 0) return 0.0;
    if (w < h) return 2.0 * w * w / (r2 * h);
    if (w < r) return 2.0 * w / r2;
    double hi = std::hypot(r, h);
    if (w <= hi) return 2.0 * w / r2 - 2.0 * w * std::sqrt(w * w - r2) / (r2 * h);
    return 0.0;
}

double distance_pdf_mobility(double w, double h, double r) {
    double r2 = r * r;
    if (w < 0) return 0.0;
    if (w < h)
        return 6.0 * w * w * w / (r2 * h * h) - 4.0 * std::pow(w, 4) / (r2 * h * h * h);
    if (w < r) return 2.0 * w / r2;
    double hi = std::hypot(r, h);
    if (w <= hi) {
        double e = w * w - r2;
        return 2.0 * w / r2 - 6.0 * w * e / (r2 * h * h) +
               4.0 * w * std::pow(e, 1.5) / (r2 * h * h * h);
    }
    return 0.0;
}

}  // namespace

double DistanceDistribution::pdf(double w) const {
    double h = params.height, r = params.radius;
    if (mode == Mode::fixed_height) {
        if (w < h || w > std::hypot(r, h)) return 0.0;
        return 2.0 * w / (r * r);
    }
    return params.p_stay * distance_pdf_static(w, h, r) +
           (1.0 - params.p_stay) * distance_pdf_mobility(w, h, r);
}

double DistanceDistribution::cdf(double w) const {
    if (w <= support_lo()) return 0.0;
    if (w >= support_hi()) return 1.0;
    if (mode == Mode::fixed_height) {
        double h = params.height, r = params.radius;
        return (w * w - h * h) / (r * r);
    }
    specfun::QuadratureSpec spec;
    return specfun::integrate_finite([this](double x) { return pdf(x); },
                                     support_lo(), w, spec);
}

double distance_pdf(double w, const DistanceDistribution& dist) {
    return dist.pdf(w);
}

UavState init_state(const MobilityParams& p, Mode mode, rng::Stream& rng) {
    UavState s;
    auto [x, y] = rng.uniform_in_disk(p.radius);
    s.zx = x;
    s.zy = y;
    if (mode == Mode::fixed_height) {
        s.h = p.height;
    } else {
        s.h = rng.uniform(0.0, p.height);
    }
    auto [lo, hi] = p.dwell_range();
    s.phase = UavState::Phase::dwelling;
    s.dwell_remaining = std::isinf(lo) ? lo : rng.uniform(lo, hi);
    return s;
}

namespace {

void horizontal_move(UavState& s, const MobilityParams& p, rng::Stream& rng) {
    if (rng.uniform() >= p.p_stay) return;  // RW fires with probability p_s
    auto [ux, uy] = rng.uniform_in_disk(p.step_range);
    double nx = s.zx + ux, ny = s.zy + uy;
    double r2 = p.radius * p.radius;
    switch (p.boundary) {
        case BoundaryPolicy::reject_stay:
            if (nx * nx + ny * ny <= r2) {
                s.zx = nx;
                s.zy = ny;
            }
            break;
        case BoundaryPolicy::resample:
            while (nx * nx + ny * ny > r2) {
                auto [vx, vy] = rng.uniform_in_disk(p.step_range);
                nx = s.zx + vx;
                ny = s.zy + vy;
            }
            s.zx = nx;
            s.zy = ny;
            break;
        case BoundaryPolicy::reflect: {
            double n = std::sqrt(nx * nx + ny * ny);
            if (n > p.radius) {
                double refl = (2.0 * p.radius - n) / n;
                nx *= refl;
                ny *= refl;
                double m = std::sqrt(nx * nx + ny * ny);
                if (m > p.radius) {  // pathological double-overshoot
                    nx *= p.radius / m;
                    ny *= p.radius / m;
                }
            }
            s.zx = nx;
            s.zy = ny;
            break;
        }
    }
}

void begin_movement(UavState& s, const MobilityParams& p, rng::Stream& rng) {
    s.phase = UavState::Phase::moving;
    s.target_h = rng.uniform(0.0, p.height);
    s.v_vertical = rng.uniform(p.v_min, p.v_max);
}

void begin_dwell(UavState& s, const MobilityParams& p, rng::Stream& rng) {
    s.phase = UavState::Phase::dwelling;
    auto [lo, hi] = p.dwell_range();
    s.dwell_remaining = std::isinf(lo) ? lo : rng.uniform(lo, hi);
}

}  // namespace

UavState step(UavState s, const MobilityParams& p, Mode mode, rng::Stream& rng) {
    if (mode == Mode::fixed_height) {
        s.h = p.height;
        s.phase = UavState::Phase::dwelling;
        horizontal_move(s, p, rng);
        return s;
    }
    if (s.phase == UavState::Phase::dwelling && s.dwell_remaining <= 0.0)
        begin_movement(s, p, rng);
    if (s.phase == UavState::Phase::dwelling) {
        horizontal_move(s, p, rng);
        s.dwell_remaining -= p.slot;
    } else {
        double dh = s.v_vertical * p.slot;
        if (std::fabs(s.target_h - s.h) <= dh) {
            s.h = s.target_h;
            begin_dwell(s, p, rng);
        } else {
            s.h += (s.target_h > s.h) ? dh : -dh;
        }
    }
    return s;
}

SteadyDistanceSampler::SteadyDistanceSampler(const DistanceDistribution& dist) {
    constexpr int kCells = 4096;
    double lo = dist.support_lo(), hi = dist.support_hi();
    grid_.resize(kCells + 1);
    cdf_.resize(kCells + 1);
    specfun::QuadratureSpec spec;
    spec.abs_tol = 1e-13;
    double acc = 0.0;
    grid_[0] = lo;
    cdf_[0] = 0.0;
    for (int i = 1; i <= kCells; ++i) {
        double a = lo + (hi - lo) * (i - 1) / kCells;
        double b = lo + (hi - lo) * i / kCells;
        acc += specfun::integrate_finite([&dist](double w) { return dist.pdf(w); },
                                         a, b, spec);
        grid_[i] = b;
        cdf_[i] = acc;
    }
    // normalize away residual quadrature error and enforce monotonicity
    for (int i = 0; i <= kCells; ++i) {
        cdf_[i] /= acc;
        if (i > 0) cdf_[i] = std::max(cdf_[i], cdf_[i - 1]);
    }
    cdf_.back() = 1.0;
}

double SteadyDistanceSampler::quantile(double u) const {
    u = std::clamp(u, 0.0, 1.0);
    auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
    if (it == cdf_.begin()) return grid_.front();
    std::size_t i = static_cast<std::size_t>(it - cdf_.begin());
    double c0 = cdf_[i - 1], c1 = cdf_[i];
    double t = (c1 > c0) ? (u - c0) / (c1 - c0) : 0.0;
    return grid_[i - 1] + t * (grid_[i] - grid_[i - 1]);
}

}  // namespace hstn::mobility
