#pragma once

#include "hstn/caching.hpp"
#include "hstn/channel.hpp"
#include "hstn/mobility.hpp"
#include "hstn/specfun.hpp"

namespace hstn {

/// Everything that defines one experiment, independent of the SNR sweep.
/// Defaults mirror the reference parameter set: GEO satellite at 2 GHz,
/// heavy-shadowing SR fading, UAV cylinder H = 80 m / R = 100 m, Nakagami
/// terrestrial links with free-space path loss, rate 1 bit/s/Hz.
struct Scenario {
    channel::SrFadingParams satellite;
    channel::LinkBudget budget;
    channel::NakagamiParams terrestrial;
    mobility::MobilityParams fleet;
    caching::CacheLayout cache;
    double rate = 1.0;  // target rate R [bit/s/Hz]
    specfun::QuadratureSpec quad;

    int relays() const { return cache.relays; }
    double gamma_th1() const { return std::exp2(2.0 * rate) - 1.0; }
    double gamma_th2() const { return std::exp2(rate) - 1.0; }

    void validate() const;
};

}  // namespace hstn
