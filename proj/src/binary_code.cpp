#include "pcr/binary_code.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "pcr/errors.hpp"

namespace pcr {

BinaryCode::BinaryCode(BitMatrix pcm)
    : pcm_(std::move(pcm)), generator_(kernel_basis(pcm_)), n_(pcm_.cols()) {
    k_ = generator_.rows();
}

int min_distance(const BinaryCode& c) {
    if (c.d_) return *c.d_;
    const int k = c.k();
    if (k < 1) throw DimensionTooLarge("min_distance: zero-dimensional code has no nonzero codeword");
    if (k > 28) throw DimensionTooLarge("min_distance: k > 28, supply d externally");
    const int n = c.n();
    const int words = (n + 63) / 64;

    // generator rows as packed words
    std::vector<std::uint64_t> gen(static_cast<std::size_t>(k) * words, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j)
            if (c.generator().get(i, j))
                gen[static_cast<std::size_t>(i) * words + (j >> 6)] |= std::uint64_t{1} << (j & 63);

    std::vector<std::uint64_t> cur(words, 0);
    int best = n + 1;
    std::uint32_t prev_gray = 0;
    for (std::uint32_t m = 1; m < (std::uint32_t{1} << k); ++m) {
        std::uint32_t gray = m ^ (m >> 1);
        int bit = std::countr_zero(gray ^ prev_gray);
        prev_gray = gray;
        int w = 0;
        for (int t = 0; t < words; ++t) {
            cur[t] ^= gen[static_cast<std::size_t>(bit) * words + t];
            w += std::popcount(cur[t]);
        }
        best = std::min(best, w);
    }
    c.d_ = best;
    return best;
}

PunctureResult puncture_zero_coords(const BinaryCode& c) {
    const int n = c.n();
    std::vector<int> zero_coords;
    for (int j = 0; j < n; ++j) {
        bool all_zero = true;
        for (int i = 0; i < c.k() && all_zero; ++i)
            if (c.generator().get(i, j)) all_zero = false;
        if (all_zero) zero_coords.push_back(j);
    }
    const int t = static_cast<int>(zero_coords.size());
    if (t == 0) return PunctureResult{c, 0, {}, c.pcm()};

    std::vector<int> kept;
    {
        std::vector<bool> removed(n, false);
        for (int j : zero_coords) removed[j] = true;
        for (int j = 0; j < n; ++j)
            if (!removed[j]) kept.push_back(j);
    }
    // punctured pcm: a parity-check matrix of the punctured code is a dual
    // basis of the punctured generator
    BitMatrix gen_p(c.k() == 0 ? 0 : c.k(), static_cast<int>(kept.size()));
    for (int i = 0; i < c.k(); ++i)
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (c.generator().get(i, kept[j])) gen_p.set(i, static_cast<int>(j), true);
    BitMatrix pcm_p = kernel_basis(gen_p);

    // Proof construction: spread pcm' columns back over the kept positions
    // (zero columns at the removed positions) and append one weight-1 row
    // per removed position.
    BitMatrix proof(pcm_p.rows() + t, n);
    for (int i = 0; i < pcm_p.rows(); ++i)
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (pcm_p.get(i, static_cast<int>(j))) proof.set(i, kept[j], true);
    for (int i = 0; i < t; ++i) proof.set(pcm_p.rows() + i, zero_coords[i], true);

    return PunctureResult{BinaryCode(pcm_p), t, zero_coords, proof};
}

int EquivClasses::min_size() const {
    return *std::min_element(sizes.begin(), sizes.end());
}

EquivClasses weight2_equiv_classes(const BitMatrix& m) {
    const int n = m.cols();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int r = 0; r < m.rows(); ++r) {
        auto sup = m.row_support(r);
        if (sup.size() != 2)
            throw RowWeightNot2("weight2_equiv_classes: row " + std::to_string(r) +
                                " has weight " + std::to_string(sup.size()));
        int a = find(sup[0]), b = find(sup[1]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<std::vector<int>> by_root(n);
    for (int j = 0; j < n; ++j) by_root[find(j)].push_back(j);
    EquivClasses out;
    for (auto& cls : by_root)
        if (!cls.empty()) {
            out.sizes.push_back(static_cast<int>(cls.size()));
            out.classes.push_back(std::move(cls));
        }
    return out;
}

}  // namespace pcr
