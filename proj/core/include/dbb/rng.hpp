#pragma once

#include <cstdint>
#include <random>

namespace dbb {

/// Independent sub-streams derived from one experiment seed.
enum class Stream : std::uint64_t {
    graph = 1,
    weights = 2,
    objective = 3,
    initial_point = 4,
    verify = 5,
};

std::mt19937_64 make_stream(std::uint64_t seed, Stream stream);

/// Uniform on (0, 1].
double uniform_open_closed(std::mt19937_64& rng);

}  // namespace dbb
