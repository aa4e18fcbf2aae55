#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monostat/oracle.hpp"

namespace monostat {

// Defaults follow the measurement protocol: 5000 directions, k = 12,
// merge thresholds 0.5%..10% of h-range, 100x200 mesh (40000 faces).
struct RunConfig {
    int directions = 5000;
    int knn = 12;
    std::vector<double> thresholds = kDefaultThresholds;
    int n_theta = 100;
    int n_phi = 200;
    std::uint64_t seed = 1;
    std::string outdir = ".";

    void validate() const; // throws Error on nonsense values
};

} // namespace monostat
