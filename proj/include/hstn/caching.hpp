#pragma once

#include <span>
#include <string>
#include <vector>

namespace hstn::caching {

enum class Scheme { nc, mpc, uc };

std::string to_string(Scheme s);

struct CacheLayout {
    int catalogue = 20;          // K files
    int capacity = 2;            // C files per relay
    int relays = 2;              // M
    double zipf_exponent = 0.7;  // lambda
    Scheme scheme = Scheme::mpc;

    void validate() const;
};

/// Zipf popularity f_k = k^{-lambda} / sum_j j^{-lambda}, k = 1..K.
std::vector<double> zipf_pmf(const CacheLayout& layout);

struct CacheMasses {
    double hit = 0.0;   // total popularity mass served from cache
    double miss = 1.0;  // 1 - hit
    std::vector<double> per_relay;  // UC only: mass of relay i's range
};

/// Hit/miss masses of the layout's scheme. NC has hit 0; MPC caches files
/// 1..C at every relay; UC stores files (i-1)C+1..iC at relay i.
CacheMasses hit_mass(const CacheLayout& layout);

/// Relay choice: argmax of the second-hop SNRs when the file is cached
/// (MPC), argmax of the end-to-end SNRs otherwise. Ties -> lowest index.
int select_relay(std::span<const double> snrs_second_hop,
                 std::span<const double> snrs_end_to_end, bool cached);

}  // namespace hstn::caching
