#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pcr/binary_code.hpp"
#include "pcr/bitmatrix.hpp"
#include "pcr/cone.hpp"
#include "pcr/rat.hpp"

namespace pcr {

enum class Channel { BEC = 0, AWGNC = 1, BSC = 2, MAXFRAC = 3 };

inline constexpr std::array<Channel, 4> kAllChannels{Channel::BEC, Channel::AWGNC, Channel::BSC,
                                                     Channel::MAXFRAC};

const char* channel_name(Channel ch);                        // "bec", "awgnc", "bsc", "maxfrac"
std::optional<Channel> channel_from_string(const std::string& s);

// Exact pseudoweight of a nonnegative nonzero vector. BEC: |supp(x)|;
// AWGNC: (sum x)^2 / sum x^2; MAXFRAC: sum x / max x; BSC: 2*xi where xi is
// the exact piecewise-linear solution of Phi(xi) = Phi(n)/2 over the
// descending-sorted coordinates. Throws ZeroVector.
Rat pseudoweight_eval(const RatVec& x, Channel ch);
Rat pseudoweight_eval(const std::vector<Int>& x, Channel ch);

struct ChannelMin {
    Rat wmin;
    Ray witness;  // lexicographically smallest minimizing extreme ray
};

struct PseudoweightReport {
    int n = 0;
    std::size_t num_rays = 0;  // 0 iff the cone is {0}; then all minima are +infinity
    std::optional<int> d;      // minimum distance of ker H, when the kernel is nonzero
    std::array<std::optional<ChannelMin>, 4> mins;

    const std::optional<ChannelMin>& channel(Channel ch) const {
        return mins[static_cast<int>(ch)];
    }
    bool empty_cone() const { return num_rays == 0; }
};

// Minimum pseudoweights of H over the extreme rays of the fundamental cone.
// Every pseudoweight is scale-invariant and, on the cross-section sum x = 1,
// each minimization is a convex maximization attained at a vertex, i.e. at a
// normalized extreme ray. Ties broken by the lexicographically smallest ray.
PseudoweightReport min_pseudoweights(const BitMatrix& h);

// Same, from a precomputed ray list (must be the sorted extreme_rays output).
PseudoweightReport min_pseudoweights_from_rays(int n, const std::vector<Ray>& rays);

// True iff every extreme ray of K(H) has pseudoweight >= d on the channel,
// i.e. wmin(H) = d given the universal bound wmin <= d. Early-exits on the
// first violating ray.
bool matrix_attains(const BitMatrix& h, Channel ch, const Rat& d);

// First extreme ray (in sorted ray order) with pseudoweight < d, if any.
// matrix_attains(h, ch, d) == !find_violating_ray(h, ch, d).
std::optional<Ray> find_violating_ray(const BitMatrix& h, Channel ch, const Rat& d);

// Closed-form minimum max-fractional weight for a matrix whose first m-1
// rows have weight 2 and whose last row meets each equivalence class of
// those rows in at most one column:
//   min{ min_{S != T in S'} (d_S + d_T), min_{S in S''} d_S }
// where S' are the classes met by the last row and S'' the rest. A matrix
// with all rows of weight 2 yields min_S d_S. Throws PreconditionViolated.
Rat maxfrac_min_weight2plus1(const BitMatrix& h);

// The (n-2) x n parity-check matrix of a dimension-2 code built from chain
// matrices over S1 (supp c1 only), S2 (supp c2 only), S3 (both) plus one row
// linking the class minima; zero coordinates of the code are handled by
// puncturing and re-inserting weight-1 rows. Its minimum pseudoweights all
// equal d. Throws DimensionNot2.
BitMatrix dimension2_matrix(const BinaryCode& c);

}  // namespace pcr
