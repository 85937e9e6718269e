#pragma once

#include "mudist/common.hpp"
#include "mudist/fronts.hpp"

namespace mudist {

// Simplex-lattice weight vectors plus the resolution(s) that generated
// them. h2 < 0 means single layer.
struct WeightSet {
    VectorSet points;
    int m = 0;
    int h1 = 0;
    int h2 = -1;
};

// All (i_1/H, ..., i_m/H) with non-negative integers summing to H,
// enumerated lexicographically ascending in the integer composition so the
// output order is stable across platforms.
WeightSet sld(int m, int resolution);

// Boundary layer sld(m, h1) plus an inner layer sld(m, h2) shrunk toward
// the simplex center (w -> w/2 + 1/(2m)); exact duplicates removed.
// h2 == 0 degenerates to the single boundary layer.
WeightSet sld_two_layer(int m, int h1, int h2);

std::size_t sld_size(int m, int resolution);

// Resolution whose lattice has exactly the requested size, or -1.
int sld_resolution_for_size(int m, std::size_t size);

// Maps weights onto the front. For the constrained concave kind infeasible
// images are filtered out; the disconnected kind is grid-parameterized
// instead (see disconnected_reference_set).
VectorSet reference_set(const FrontShape& front, const WeightSet& weights);

// Per-axis grid of theta values (uniform in [0,1] including endpoints)
// through the disconnected parameterization: per_axis^(m-1) members.
VectorSet disconnected_reference_set(const FrontShape& front, int per_axis);

}  // namespace mudist
