#pragma once

#include <array>
#include <cstdint>
#include <utility>

namespace hstn::rng {

/// Purpose tag mixed into the counter block so that streams drawn for
/// different parts of a run never collide.
enum class Domain : std::uint32_t {
    generic = 0,
    init = 1,
    mobility = 2,
    fading = 3,
};

/// Counter-based random stream (Philox 4x32-10). A stream is fully
/// determined by (seed, domain, stream_id), so any number of streams can be
/// created independently on any worker and always produce the same values.
class Stream {
public:
    Stream(std::uint64_t seed, Domain domain, std::uint64_t stream_id);

    std::uint32_t next_u32();
    std::uint64_t next_u64();

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();
    /// Uniform double in [a, b).
    double uniform(double a, double b);
    /// Standard normal (Box-Muller, second deviate cached).
    double normal();
    /// Gamma(shape, scale) via Marsaglia-Tsang; requires shape >= 1.
    double gamma(double shape, double scale);
    /// Uniform point in the closed disk of given radius, centered at origin.
    std::pair<double, double> uniform_in_disk(double radius);

private:
    void refill();

    std::uint32_t key_[2];
    std::uint64_t stream_id_;
    std::uint64_t counter_ = 0;
    std::array<std::uint32_t, 4> block_{};
    int pos_ = 4;
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

}  // namespace hstn::rng
