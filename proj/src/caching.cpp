#include "hstn/caching.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hstn::caching {

std::string to_string(Scheme s) {
    switch (s) {
        case Scheme::nc: return "NC";
        case Scheme::mpc: return "MPC";
        case Scheme::uc: return "UC";
    }
    return "?";
}

void CacheLayout::validate() const {
    if (catalogue < 1)
        throw std::invalid_argument("cache: catalogue must be >= 1");
    if (capacity < 0 || capacity > catalogue)
        throw std::invalid_argument("cache: requires 0 <= capacity <= catalogue");
    if (relays < 1)
        throw std::invalid_argument("cache: relays must be >= 1");
    if (!(zipf_exponent >= 0))
        throw std::invalid_argument("cache: zipf exponent must be >= 0");
    if (scheme == Scheme::uc && relays * capacity > catalogue)
        throw std::invalid_argument(
            "cache: UC placement needs relays * capacity <= catalogue");
}

std::vector<double> zipf_pmf(const CacheLayout& layout) {
    if (layout.catalogue < 1)
        throw std::domain_error("zipf_pmf: catalogue must be >= 1");
    std::vector<double> pmf(layout.catalogue);
    double norm = 0.0;
    for (int k = 1; k <= layout.catalogue; ++k)
        norm += std::pow(k, -layout.zipf_exponent);
    for (int k = 1; k <= layout.catalogue; ++k)
        pmf[k - 1] = std::pow(k, -layout.zipf_exponent) / norm;
    return pmf;
}

CacheMasses hit_mass(const CacheLayout& layout) {
    layout.validate();
    CacheMasses m;
    if (layout.scheme == Scheme::nc) {
        m.hit = 0.0;
        m.miss = 1.0;
        return m;
    }
    auto pmf = zipf_pmf(layout);
    if (layout.scheme == Scheme::mpc) {
        m.hit = std::accumulate(pmf.begin(), pmf.begin() + layout.capacity, 0.0);
    } else {
        m.per_relay.resize(layout.relays);
        for (int i = 0; i < layout.relays; ++i) {
            auto first = pmf.begin() + i * layout.capacity;
            m.per_relay[i] = std::accumulate(first, first + layout.capacity, 0.0);
        }
        m.hit = std::accumulate(m.per_relay.begin(), m.per_relay.end(), 0.0);
    }
    m.miss = 1.0 - m.hit;
    return m;
}

int select_relay(std::span<const double> snrs_second_hop,
                 std::span<const double> snrs_end_to_end, bool cached) {
    const auto& v = cached ? snrs_second_hop : snrs_end_to_end;
    if (v.empty())
        throw std::domain_error("select_relay: empty SNR vector");
    int best = 0;
    for (int i = 1; i < static_cast<int>(v.size()); ++i)
        if (v[i] > v[best]) best = i;
    return best;
}

}  // namespace hstn::caching
