#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "hstn/rng.hpp"

namespace hstn::mobility {

enum class Mode { fully3d, fixed_height };

/// What happens when a proposed horizontal step would leave the disk of
/// radius R. reject_stay (Metropolis-style hold) keeps the uniform-disk
/// steady state exactly; the others are approximations kept for comparison.
enum class BoundaryPolicy { reject_stay, resample, reflect };

struct MobilityParams {
    double height = 80.0;      // H [m], cylinder height
    double radius = 100.0;     // R [m], cylinder radius
    double step_range = 40.0;  // R' [m], max horizontal displacement per move
    double v_min = 0.1;        // [m/s] vertical speed range
    double v_max = 30.0;
    double tau_min = -1.0;     // [s] dwell range; negative pair -> auto-derive
    double tau_max = -1.0;
    double p_stay = 0.5;       // stay probability p_s
    double slot = 1.0;         // [s] slot duration
    BoundaryPolicy boundary = BoundaryPolicy::reject_stay;

    void validate() const;
    bool dwell_auto() const { return tau_min < 0.0 || tau_max < 0.0; }
    /// Resolved dwell-time range; when auto, centered on the value that
    /// realizes p_stay as the long-run dwelling fraction.
    std::pair<double, double> dwell_range() const;
};

/// E[T_m] = ln(v_max / v_min) / (v_max - v_min) * H / 3.
double mean_movement_time(const MobilityParams& p);

/// Steady-state altitude pdf: p_s / H + (1 - p_s)(-6x^2/H^3 + 6x/H^2).
double altitude_pdf(double x, const MobilityParams& p);

/// Steady-state horizontal-range pdf: 2z / R^2 on [0, R].
double range_pdf(double z, const MobilityParams& p);

/// Steady-state law of the UAV-to-user distance W.
struct DistanceDistribution {
    Mode mode = Mode::fully3d;
    MobilityParams params;

    double support_lo() const {
        return mode == Mode::fully3d ? 0.0 : params.height;
    }
    double support_hi() const {
        return std::hypot(params.radius, params.height);
    }
    double pdf(double w) const;
    double cdf(double w) const;
};

double distance_pdf(double w, const DistanceDistribution& dist);

struct UavState {
    enum class Phase { dwelling, moving };

    double h = 0.0;   // altitude [m]
    double zx = 0.0;  // horizontal position [m]
    double zy = 0.0;
    Phase phase = Phase::dwelling;
    double dwell_remaining = 0.0;  // [s] (dwelling)
    double target_h = 0.0;         // [m]  (moving)
    double v_vertical = 0.0;       // [m/s] (moving)

    double horizontal_range() const { return std::hypot(zx, zy); }
    /// Distance to the ground user at the disk center, W = sqrt(h^2 + |z|^2).
    double distance_to_user() const {
        return std::sqrt(h * h + zx * zx + zy * zy);
    }
};

/// Random initial state: altitude uniform in [0, H] (or pinned to H),
/// position uniform in the disk, dwell freshly drawn.
UavState init_state(const MobilityParams& p, Mode mode, rng::Stream& rng);

/// Advance one slot of the mixed-mobility (or fixed-height) process.
UavState step(UavState s, const MobilityParams& p, Mode mode, rng::Stream& rng);

/// Inverse-CDF sampler for DistanceDistribution (4096-cell CDF table with
/// monotone linear interpolation).
class SteadyDistanceSampler {
public:
    explicit SteadyDistanceSampler(const DistanceDistribution& dist);
    double quantile(double u) const;
    double sample(rng::Stream& rng) const { return quantile(rng.uniform()); }

private:
    std::vector<double> grid_;
    std::vector<double> cdf_;
};

}  // namespace hstn::mobility
