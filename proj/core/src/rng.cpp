#include "dbb/rng.hpp"

namespace dbb {

std::mt19937_64 make_stream(std::uint64_t seed, Stream stream) {
    const auto id = static_cast<std::uint64_t>(stream);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(id), static_cast<std::uint32_t>(id >> 32)};
    return std::mt19937_64(seq);
}

double uniform_open_closed(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return 1.0 - u(rng);
}

}  // namespace dbb
