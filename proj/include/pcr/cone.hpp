#pragma once

#include <cstdint>
#include <vector>

#include "pcr/bitmatrix.hpp"
#include "pcr/rat.hpp"

namespace pcr {

// Homogeneous inequality system a . x >= 0 describing the fundamental cone.
// The first n rows are always the nonnegativity constraints e_i . x >= 0,
// followed by one row per (check row j, support position l).
struct ConeSystem {
    int n = 0;
    std::vector<std::vector<std::int8_t>> inequalities;
    int dropped_zero_rows = 0;  // zero rows of H contribute nothing
};

ConeSystem fundamental_cone_system(const BitMatrix& h);

// Extreme ray, normalized to nonnegative coprime integers.
struct Ray {
    std::vector<Int> coords;

    bool operator==(const Ray& o) const { return coords == o.coords; }
    bool operator<(const Ray& o) const;
};

// Complete duplicate-free list of extreme rays, sorted lexicographically.
// Empty iff the cone is {0}. Double description with the algebraic-rank
// adjacency test; inequalities are inserted in the canonical system order,
// so the output is reproducible. Throws DimensionCap for n > 24.
std::vector<Ray> extreme_rays(const ConeSystem& s);

bool cone_contains(const ConeSystem& s, const RatVec& x);
bool cone_contains(const ConeSystem& s, const std::vector<Int>& x);

}  // namespace pcr
