#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pcr {

// One randomized property suite: the number of fixtures it actually ran
// (after filtering, e.g. only d <= 2 codes for the distance-two law) and
// the first counterexample description when it failed.
struct PropertyResult {
    std::string name;
    bool passed = true;
    std::uint64_t fixtures = 0;
    std::string detail;
};

// Runs every suite on randomized fixtures (codes of length <= 8) drawn from
// the seeded generator:
//   relations            per-matrix pseudoweight ordering
//                        maxfrac <= awgnc <= bec, maxfrac <= bsc <= bec
//   distance-two         d <= 2 codes: every matrix attains d
//   weight-two-rows      all-weight-2 matrices: wmin = min equivalence
//                        class size = d on every channel
//   weight-two-plus-one  closed form for weight-2 rows plus one extra row
//                        meeting each class at most once; equals the
//                        cone-based minimum and d
//   counterexample       the fixed 4x4 matrix whose extra row meets a
//                        class twice: maxfrac wmin = 2 < 4 = d
//   low-dimension        the analytic k <= 2 constructions attain d on
//                        every channel
//   row-monotonicity     appending a redundant dual row never lowers wmin
//   point-soundness      random cone points never beat a reported minimum
//   kronecker            closed-form lifted-circulant bound vs. Jacobi
//                        eigenvalues, within 1e-6
//   puncturing           rho(C') <= rho(C) <= rho(C') + t for codes with t
//                        zero coordinates
//   hamming-parity       the closed form for Hamming-intersect-parity
//                        check polynomials, m = 3..7
// fixtures is the per-suite randomized fixture count.
std::vector<PropertyResult> run_property_suites(std::uint64_t seed, int fixtures = 200);

}  // namespace pcr
