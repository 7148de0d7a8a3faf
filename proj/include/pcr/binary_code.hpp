#pragma once

#include <optional>
#include <vector>

#include "pcr/bitmatrix.hpp"

namespace pcr {

// A binary linear code given by a parity-check matrix. Length, dimension
// and the generator (kernel basis) are derived once; the minimum distance
// is computed on demand and cached.
class BinaryCode {
public:
    explicit BinaryCode(BitMatrix pcm);

    const BitMatrix& pcm() const { return pcm_; }
    const BitMatrix& generator() const { return generator_; }
    int n() const { return n_; }
    int k() const { return k_; }
    int r() const { return n_ - k_; }

    std::optional<int> cached_distance() const { return d_; }
    void set_distance(int d) { d_ = d; }

private:
    BitMatrix pcm_;
    BitMatrix generator_;
    int n_;
    int k_;
    mutable std::optional<int> d_;

    friend int min_distance(const BinaryCode& c);
};

// Exact minimum nonzero codeword weight by Gray-code enumeration of the
// 2^k - 1 nonzero codewords. Throws DimensionTooLarge for k > 28.
int min_distance(const BinaryCode& c);

struct PunctureResult {
    BinaryCode punctured;
    int t = 0;                     // number of removed (all-zero) coordinates
    std::vector<int> coords;       // 0-based removed coordinate indices
    BitMatrix proof_matrix;        // upper block: columns of pcm' spread back to
                                   // n columns; lower block: t weight-1 rows
};

// Removes the coordinates where every codeword is zero. t = 0 returns the
// code unchanged (proof_matrix = original pcm).
PunctureResult puncture_zero_coords(const BinaryCode& c);

struct EquivClasses {
    std::vector<std::vector<int>> classes;  // disjoint, cover all columns, each sorted
    std::vector<int> sizes;                 // sizes[i] = classes[i].size()
    int min_size() const;
};

// Union-find closure of the row supports of a matrix whose rows all have
// weight exactly 2. Throws RowWeightNot2 otherwise. Isolated columns form
// singleton classes. An empty (0-row) matrix yields all singletons.
EquivClasses weight2_equiv_classes(const BitMatrix& m);

}  // namespace pcr
