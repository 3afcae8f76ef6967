#ifndef SGZRP_RNG_HPP
#define SGZRP_RNG_HPP

#include <array>
#include <cmath>
#include <cstdint>

namespace sgzrp {

// SplitMix64 (Steele/Lea/Flood). Used to expand seeds and derive substreams.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

// xoshiro256++ (Blackman/Vigna), seeded through SplitMix64. Replica
// substreams are keyed by (seed, stream); every simulation output records
// the generator name so runs are reproducible byte for byte.
class Xoshiro256pp {
public:
    static constexpr const char* name = "xoshiro256++/splitmix64";

    explicit Xoshiro256pp(std::uint64_t seed) : Xoshiro256pp(seed, 0) {}

    Xoshiro256pp(std::uint64_t seed, std::uint64_t stream) {
        SplitMix64 key(stream ^ 0xd1b54a32d192ed03ULL);
        SplitMix64 sm(seed ^ key.next());
        do {
            for (auto& word : s_) word = sm.next();
        } while (s_[0] == 0 && s_[1] == 0 && s_[2] == 0 && s_[3] == 0);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform on [0,1), 53 random bits.
    double uniform01() { return double(next() >> 11) * 0x1.0p-53; }

    // Uniform on (0,1], safe as a log argument.
    double uniform_pos() { return 1.0 - uniform01(); }

    double exponential(double rate) { return -std::log(uniform_pos()) / rate; }

    // Standard normal via Box-Muller; the second deviate of each pair is cached.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
        const double theta = 2.0 * pi_ * uniform01();
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    // Uniform integer in [0,n) by 128-bit multiply (Lemire); bias < n/2^64.
    std::uint32_t uniform_int(std::uint32_t n) {
        return std::uint32_t((static_cast<unsigned __int128>(next()) * n) >> 64);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    static constexpr double pi_ = 3.14159265358979323846;
    std::array<std::uint64_t, 4> s_{};
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace sgzrp

#endif
