#pragma once

#include <cstdint>

#include "ts3c/dataset.hpp"

namespace testdata {

// Three piecewise-linear shape families with additive Gaussian noise at
// 5% of each family's signal range. The families differ in amplitude,
// number of linear pieces and smoothness, so they stay separable both for
// the mapped-vector pipeline and for raw distance baselines.
ts3c::Dataset three_family_dataset(int per_class, int length, std::uint32_t seed,
                                   double noise_fraction = 0.05);

// Identical sawtooth shape at two different levels (classes differ only by
// a vertical offset).
ts3c::Dataset level_split_dataset(int per_class, int length, std::uint32_t seed);

// Equal-level, equal-range families whose derivatives differ strongly
// (smooth wave vs. sharp relaxation sawtooth).
ts3c::Dataset shape_split_dataset(int per_class, int length, std::uint32_t seed);

}  // namespace testdata
