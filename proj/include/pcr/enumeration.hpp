#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "pcr/binary_code.hpp"
#include "pcr/bitmatrix.hpp"

namespace pcr {

// One code per equivalence class (d >= 3, no zero coordinates).
struct CodeOrbitRep {
    BitMatrix generator;  // k x n, columns are the (sorted) generator column values
    BitMatrix pcm;        // r x n full-rank parity-check matrix of the same code
    int n = 0;
    int k = 0;
    int d = 0;
    // Size of the orbit in the representation the enumerator used (see
    // code_orbits below): number of column-sorted r x n matrices in X for
    // check-side enumeration, number of generator column multisets for
    // generator-side enumeration.
    std::uint64_t orbit_size = 0;
    bool check_side = false;  // which enumeration produced the representative
};

// Streams the set X: r x n matrices with distinct nonzero lexicographically
// ordered columns and no row combination of weight 0 or 1. Requires
// 1 <= r < n <= 9.
void generate_X(int n, int r, const std::function<void(const BitMatrix&)>& sink);

// All [n, n-r, d>=3] codes without zero coordinates, one representative per
// equivalence class. Counts for n <= 9 are frozen in the test suite.
// Internally enumerates either X up to GL_r(2) action (small r) or generator
// column multisets up to GL_k(2) action (small k), whichever is smaller.
std::vector<CodeOrbitRep> code_orbits(int n, int r);
enum class EnumSide { Auto, CheckSide, GeneratorSide };
std::vector<CodeOrbitRep> code_orbits(int n, int r, EnumSide side);

// Per-code machinery for parity-check matrix enumeration: the 2^r - 1
// nonzero dual codewords (as sorted n-bit column masks) and the column
// automorphism group of the code as induced permutations of the dual words.
class DualContext {
public:
    explicit DualContext(const BinaryCode& code);  // throws DimensionCap if r > 6 or n > 10

    int n() const { return n_; }
    int r() const { return r_; }
    int num_words() const { return static_cast<int>(words_.size()); }
    const std::vector<std::uint64_t>& dual_words() const { return words_; }
    const std::vector<std::vector<std::uint8_t>>& aut_perms() const { return aut_; }
    std::uint64_t aut_order() const { return aut_.size(); }

    // rho x n matrix whose rows are the dual words selected by the subset
    // mask (bit i = words()[i]), in index order.
    BitMatrix matrix_for(std::uint64_t subset_mask) const;
    // Lexicographically smallest subset mask in the Aut(C)-orbit.
    std::uint64_t canonical(std::uint64_t subset_mask) const;
    // True iff the selected words span the dual code (rank r).
    bool full_rank(std::uint64_t subset_mask) const;

private:
    int n_, r_;
    std::vector<std::uint64_t> words_;
    std::vector<std::vector<std::uint8_t>> aut_;
};

struct MatrixOrbitRep {
    std::uint64_t subset_mask = 0;  // canonical subset of dual-word indices
    int redundant_rows = 0;         // rho - r
};

// All rho-row parity-check matrices of the code up to simultaneous row and
// column permutation: Aut(C)-orbits of full-rank rho-subsets of the nonzero
// dual codewords, represented by their lexicographically smallest subset
// mask, in ascending mask order. Requires r <= 5 (exact orbit enumeration).
std::vector<MatrixOrbitRep> pcm_orbits(const DualContext& ctx, int rho);
std::vector<MatrixOrbitRep> pcm_orbits(const BinaryCode& code, int rho);

// Streams every full-rank rho-subset mask in ascending order WITHOUT orbit
// deduplication (used for existence searches when r = 6 makes exact orbit
// enumeration too large). Returns false if the sink stopped the stream.
bool for_each_full_rank_subset(const DualContext& ctx, int rho,
                               const std::function<bool(std::uint64_t)>& sink);

}  // namespace pcr
