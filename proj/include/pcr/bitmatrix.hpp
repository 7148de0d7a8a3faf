#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pcr {

// Dense binary matrix over F2, bit-packed by rows (64-bit words).
// Column count is capped at 256, which covers everything the cyclic
// scan needs (n <= 250).
class BitMatrix {
public:
    static constexpr int kMaxCols = 256;

    BitMatrix() = default;
    BitMatrix(int rows, int cols);

    // One string per row, characters '0'/'1'.
    static BitMatrix from_strings(const std::vector<std::string>& rows);
    // Rows given as column-index bitmasks (cols <= 64).
    static BitMatrix from_row_masks(const std::vector<std::uint64_t>& rows, int cols);
    static BitMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const {
        return (bits_[static_cast<std::size_t>(r) * words_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(int r, int c, bool v) {
        std::uint64_t& w = bits_[static_cast<std::size_t>(r) * words_ + (c >> 6)];
        if (v)
            w |= (std::uint64_t{1} << (c & 63));
        else
            w &= ~(std::uint64_t{1} << (c & 63));
    }

    // Row as a column mask; requires cols <= 64.
    std::uint64_t row_mask(int r) const;
    void xor_row_mask(int r, std::uint64_t mask);

    int row_weight(int r) const;
    int col_weight(int c) const;
    std::vector<int> row_support(int r) const;
    bool row_is_zero(int r) const;

    void xor_rows(int dst, int src);  // row dst ^= row src
    void swap_rows(int a, int b);

    BitMatrix transposed() const;
    // c must have size cols(); returns H * c^T over F2 as a row-mask of checks.
    bool in_kernel(const std::vector<int>& c) const;

    void append_row(const BitMatrix& src, int src_row);
    void append_row_mask(std::uint64_t mask);

    std::vector<std::string> to_strings() const;

    bool operator==(const BitMatrix& o) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

struct RrefResult {
    BitMatrix reduced;
    int rank = 0;
    std::vector<int> pivots;  // 0-based pivot columns
};

RrefResult rref_and_rank(const BitMatrix& m);

// Basis of {c : M c^T = 0}, one codeword per row, rows sorted
// lexicographically (column 0 most significant) for determinism.
BitMatrix kernel_basis(const BitMatrix& m);

}  // namespace pcr
