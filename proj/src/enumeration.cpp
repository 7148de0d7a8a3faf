#include "pcr/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "pcr/errors.hpp"

namespace pcr {

namespace {

bool parity(std::uint32_t x) { return std::popcount(x) & 1u; }

// Value maps of three GL_m(2) generators acting on nonzero column values
// (bit j of a value = row j): a transvection, the swap of rows 0/1, and the
// cyclic shift of rows. Together they generate GL_m(2).
std::vector<std::vector<std::uint32_t>> gl_generator_maps(int m) {
    const std::uint32_t size = 1u << m;
    std::vector<std::vector<std::uint32_t>> maps;
    auto add = [&](auto&& f) {
        std::vector<std::uint32_t> t(size);
        for (std::uint32_t v = 0; v < size; ++v) t[v] = f(v);
        maps.push_back(std::move(t));
    };
    if (m >= 2) {
        add([](std::uint32_t v) { return v ^ ((v >> 1) & 1u); });  // row0 += row1
        add([](std::uint32_t v) {
            std::uint32_t b0 = v & 1u, b1 = (v >> 1) & 1u;
            return (v & ~3u) | (b0 << 1) | b1;  // swap rows 0 and 1
        });
        add([m](std::uint32_t v) {
            return ((v >> 1) | (v << (m - 1))) & ((1u << m) - 1);  // cycle rows
        });
    }
    return maps;
}

double log_choose(double a, double b) { return std::lgamma(a + 1) - std::lgamma(b + 1) - std::lgamma(a - b + 1); }

// ---------------------------------------------------------------- X side --

// DFS over ascending tuples of distinct column values in [1, 2^r - 1] with
// the weight >= 2 dual-distance pruning.
void x_side_dfs(int n, int r, const std::function<void(const std::vector<std::uint32_t>&)>& emit) {
    const std::uint32_t vmax = (1u << r) - 1;
    std::vector<std::uint32_t> cols;
    std::vector<int> cnt(vmax + 1, 0);
    std::function<void(std::uint32_t, int)> rec = [&](std::uint32_t start, int remaining) {
        if (remaining == 0) {
            for (std::uint32_t u = 1; u <= vmax; ++u)
                if (cnt[u] < 2) return;
            emit(cols);
            return;
        }
        for (std::uint32_t v = start; v + remaining - 1 <= vmax; ++v) {
            cols.push_back(v);
            bool ok = true;
            for (std::uint32_t u = 1; u <= vmax; ++u) {
                if (parity(u & v)) ++cnt[u];
                if (cnt[u] + remaining - 1 < 2) ok = false;
            }
            if (ok) rec(v + 1, remaining - 1);
            for (std::uint32_t u = 1; u <= vmax; ++u)
                if (parity(u & v)) --cnt[u];
            cols.pop_back();
        }
    };
    rec(1, n);
}

std::uint64_t x_mask(const std::vector<std::uint32_t>& cols) {
    std::uint64_t m = 0;
    for (auto v : cols) m |= std::uint64_t{1} << (v - 1);
    return m;
}

std::vector<std::uint32_t> x_unmask(std::uint64_t m) {
    std::vector<std::uint32_t> cols;
    while (m) {
        cols.push_back(static_cast<std::uint32_t>(std::countr_zero(m)) + 1);
        m &= m - 1;
    }
    return cols;
}

struct Orbit {
    std::uint64_t canonical;
    std::uint64_t size;
};

// ---------------------------------------------------------- generator side --

// DFS over non-decreasing tuples over [1, 2^k - 1] with the weight >= 3
// minimum-distance pruning; leaf check adds the rank-k condition.
void gen_side_dfs(int n, int k, const std::function<void(const std::vector<std::uint32_t>&)>& emit) {
    const std::uint32_t vmax = (1u << k) - 1;
    std::vector<std::uint32_t> cols;
    std::vector<int> cnt(vmax + 1, 0);
    std::function<void(std::uint32_t, int)> rec = [&](std::uint32_t start, int remaining) {
        if (remaining == 0) {
            for (std::uint32_t u = 1; u <= vmax; ++u)
                if (cnt[u] < 3) return;
            std::uint32_t basis[8] = {};
            int rank = 0;
            for (std::uint32_t v : cols) {
                std::uint32_t x = v;
                for (int b = 0; b < rank; ++b) x = std::min(x, x ^ basis[b]);
                if (x) basis[rank++] = x;
            }
            if (rank == k) emit(cols);
            return;
        }
        for (std::uint32_t v = start; v <= vmax; ++v) {
            cols.push_back(v);
            bool ok = true;
            for (std::uint32_t u = 1; u <= vmax; ++u) {
                if (parity(u & v)) ++cnt[u];
                if (cnt[u] + remaining - 1 < 3) ok = false;
            }
            if (ok) rec(v, remaining - 1);
            for (std::uint32_t u = 1; u <= vmax; ++u)
                if (parity(u & v)) --cnt[u];
            cols.pop_back();
        }
    };
    rec(1, n);
}

std::uint64_t gen_encode(const std::vector<std::uint32_t>& cols, int k) {
    std::uint64_t e = 0;
    for (auto v : cols) e = (e << k) | v;
    return e;
}

std::vector<std::uint32_t> gen_decode(std::uint64_t e, int k, int n) {
    std::vector<std::uint32_t> cols(n);
    for (int i = n - 1; i >= 0; --i) {
        cols[i] = static_cast<std::uint32_t>(e & ((1u << k) - 1));
        e >>= k;
    }
    return cols;
}

// Orbit of an encoded column tuple under the generated group, by BFS with
// the provided value maps. `remap` applies one map and re-normalizes.
template <typename Remap>
Orbit orbit_of(std::uint64_t start, const std::vector<std::vector<std::uint32_t>>& maps, Remap remap,
               std::unordered_set<std::uint64_t>& visited) {
    Orbit o{start, 0};
    std::queue<std::uint64_t> q;
    std::unordered_set<std::uint64_t> seen{start};
    q.push(start);
    while (!q.empty()) {
        std::uint64_t cur = q.front();
        q.pop();
        ++o.size;
        o.canonical = std::min(o.canonical, cur);
        for (const auto& map : maps) {
            std::uint64_t img = remap(cur, map);
            if (seen.insert(img).second) q.push(img);
        }
    }
    for (std::uint64_t s : seen) visited.insert(s);
    return o;
}

BitMatrix matrix_from_columns(const std::vector<std::uint32_t>& cols, int rows) {
    BitMatrix m(rows, static_cast<int>(cols.size()));
    for (int i = 0; i < static_cast<int>(cols.size()); ++i)
        for (int j = 0; j < rows; ++j)
            if ((cols[i] >> j) & 1u) m.set(j, i, true);
    return m;
}

}  // namespace

void generate_X(int n, int r, const std::function<void(const BitMatrix&)>& sink) {
    if (r < 1 || r >= n || n > 9) throw DimensionCap("generate_X: need 1 <= r < n <= 9");
    x_side_dfs(n, r, [&](const std::vector<std::uint32_t>& cols) { sink(matrix_from_columns(cols, r)); });
}

std::vector<CodeOrbitRep> code_orbits(int n, int r) { return code_orbits(n, r, EnumSide::Auto); }

std::vector<CodeOrbitRep> code_orbits(int n, int r, EnumSide side) {
    const int k = n - r;
    if (r < 1 || k < 1 || n > 9) throw DimensionCap("code_orbits: need 1 <= r < n <= 9");
    if (side == EnumSide::Auto) {
        bool x_ok = r <= 6;
        bool g_ok = k <= 6;
        double x_cost = x_ok ? log_choose((1 << r) - 1, n) : 1e300;
        double g_cost = g_ok ? log_choose((1 << k) - 1 + n - 1, n) : 1e300;
        side = x_cost <= g_cost ? EnumSide::CheckSide : EnumSide::GeneratorSide;
    }

    std::vector<CodeOrbitRep> out;
    std::unordered_set<std::uint64_t> visited;
    std::vector<Orbit> orbits;

    if (side == EnumSide::CheckSide) {
        if (r > 6) throw DimensionCap("code_orbits: check-side enumeration requires r <= 6");
        auto maps = gl_generator_maps(r);
        auto remap = [](std::uint64_t mask, const std::vector<std::uint32_t>& map) {
            std::uint64_t img = 0;
            for (std::uint64_t rest = mask; rest;) {
                int v = std::countr_zero(rest) + 1;
                rest &= rest - 1;
                img |= std::uint64_t{1} << (map[v] - 1);
            }
            return img;
        };
        x_side_dfs(n, r, [&](const std::vector<std::uint32_t>& cols) {
            std::uint64_t m = x_mask(cols);
            if (visited.contains(m)) return;
            orbits.push_back(orbit_of(m, maps, remap, visited));
        });
        std::sort(orbits.begin(), orbits.end(),
                  [](const Orbit& a, const Orbit& b) { return a.canonical < b.canonical; });
        for (const auto& o : orbits) {
            CodeOrbitRep rep;
            rep.pcm = matrix_from_columns(x_unmask(o.canonical), r);
            rep.generator = kernel_basis(rep.pcm);
            rep.n = n;
            rep.k = k;
            rep.d = min_distance(BinaryCode(rep.pcm));
            rep.orbit_size = o.size;
            rep.check_side = true;
            out.push_back(std::move(rep));
        }
    } else {
        if (k > 6) throw DimensionCap("code_orbits: generator-side enumeration requires k <= 6");
        auto maps = gl_generator_maps(k);
        const int kk = k, nn = n;
        auto remap = [kk, nn](std::uint64_t enc, const std::vector<std::uint32_t>& map) {
            auto cols = gen_decode(enc, kk, nn);
            for (auto& v : cols) v = map[v];
            std::sort(cols.begin(), cols.end());
            return gen_encode(cols, kk);
        };
        gen_side_dfs(n, k, [&](const std::vector<std::uint32_t>& cols) {
            std::uint64_t e = gen_encode(cols, k);
            if (visited.contains(e)) return;
            orbits.push_back(orbit_of(e, maps, remap, visited));
        });
        std::sort(orbits.begin(), orbits.end(),
                  [](const Orbit& a, const Orbit& b) { return a.canonical < b.canonical; });
        for (const auto& o : orbits) {
            CodeOrbitRep rep;
            rep.generator = matrix_from_columns(gen_decode(o.canonical, k, n), k);
            rep.pcm = kernel_basis(rep.generator);
            rep.n = n;
            rep.k = k;
            rep.d = min_distance(BinaryCode(rep.pcm));
            rep.orbit_size = o.size;
            rep.check_side = false;
            out.push_back(std::move(rep));
        }
    }
    return out;
}

DualContext::DualContext(const BinaryCode& code) : n_(code.n()), r_(code.r()) {
    if (r_ > 6) throw DimensionCap("DualContext: r > 6");
    if (n_ > 10) throw DimensionCap("DualContext: n > 10");

    // full-rank pcm rows -> all nonzero dual codewords, as column masks
    auto rr = rref_and_rank(code.pcm());
    std::vector<std::uint64_t> basis;
    for (int j = 0; j < rr.rank; ++j) basis.push_back(rr.reduced.row_mask(j));
    assert(static_cast<int>(basis.size()) == r_);
    for (std::uint32_t s = 1; s < (1u << r_); ++s) {
        std::uint64_t w = 0;
        for (int j = 0; j < r_; ++j)
            if ((s >> j) & 1u) w ^= basis[j];
        words_.push_back(w);
    }
    std::sort(words_.begin(), words_.end());

    // codeword membership table
    std::vector<bool> is_codeword(std::size_t{1} << n_, false);
    const BitMatrix& gen = code.generator();
    for (std::uint32_t s = 0; s < (1u << code.k()); ++s) {
        std::uint64_t c = 0;
        for (int j = 0; j < code.k(); ++j)
            if ((s >> j) & 1u) c ^= gen.row_mask(j);
        is_codeword[c] = true;
    }

    std::unordered_map<std::uint64_t, std::uint8_t> index;
    for (std::size_t i = 0; i < words_.size(); ++i) index[words_[i]] = static_cast<std::uint8_t>(i);

    // brute-force column automorphisms; store induced dual-word permutations
    std::vector<int> perm(n_);
    std::iota(perm.begin(), perm.end(), 0);
    std::set<std::vector<std::uint8_t>> induced;
    auto apply = [&](std::uint64_t mask) {
        std::uint64_t img = 0;
        for (std::uint64_t rest = mask; rest;) {
            int i = std::countr_zero(rest);
            rest &= rest - 1;
            img |= std::uint64_t{1} << perm[i];
        }
        return img;
    };
    do {
        bool ok = true;
        for (int j = 0; j < code.k() && ok; ++j) ok = is_codeword[apply(gen.row_mask(j))];
        if (!ok) continue;
        std::vector<std::uint8_t> p(words_.size());
        for (std::size_t i = 0; i < words_.size(); ++i) p[i] = index.at(apply(words_[i]));
        induced.insert(std::move(p));
    } while (std::next_permutation(perm.begin(), perm.end()));
    aut_.assign(induced.begin(), induced.end());
}

BitMatrix DualContext::matrix_for(std::uint64_t subset_mask) const {
    BitMatrix m(0, n_);
    for (std::uint64_t rest = subset_mask; rest;) {
        int i = std::countr_zero(rest);
        rest &= rest - 1;
        m.append_row_mask(words_[i]);
    }
    return m;
}

std::uint64_t DualContext::canonical(std::uint64_t subset_mask) const {
    std::uint64_t best = subset_mask;
    for (const auto& p : aut_) {
        std::uint64_t img = 0;
        for (std::uint64_t rest = subset_mask; rest;) {
            int i = std::countr_zero(rest);
            rest &= rest - 1;
            img |= std::uint64_t{1} << p[i];
        }
        best = std::min(best, img);
    }
    return best;
}

bool DualContext::full_rank(std::uint64_t subset_mask) const {
    std::uint64_t basis[6] = {};
    int rank = 0;
    for (std::uint64_t rest = subset_mask; rest;) {
        int i = std::countr_zero(rest);
        rest &= rest - 1;
        std::uint64_t x = words_[i];
        for (int b = 0; b < rank; ++b) x = std::min(x, x ^ basis[b]);
        if (x) {
            basis[rank++] = x;
            if (rank == r_) return true;
        }
    }
    return rank == r_;
}

namespace {

// next subset mask with the same popcount (Gosper's hack)
std::uint64_t next_subset(std::uint64_t v) {
    std::uint64_t c = v & (~v + 1), r = v + c;
    return (((r ^ v) >> 2) / c) | r;
}

}  // namespace

bool for_each_full_rank_subset(const DualContext& ctx, int rho,
                               const std::function<bool(std::uint64_t)>& sink) {
    const int d = ctx.num_words();
    if (rho < ctx.r() || rho > d) return true;
    const std::uint64_t limit = d == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d);
    for (std::uint64_t mask = (std::uint64_t{1} << rho) - 1; mask < limit; mask = next_subset(mask)) {
        if (ctx.full_rank(mask) && !sink(mask)) return false;
        if (mask == ((limit - 1) >> (d - rho)) << (d - rho)) break;  // highest rho-subset
    }
    return true;
}

std::vector<MatrixOrbitRep> pcm_orbits(const DualContext& ctx, int rho) {
    if (ctx.r() > 5) throw DimensionCap("pcm_orbits: exact orbit enumeration requires r <= 5");
    std::vector<MatrixOrbitRep> out;
    for_each_full_rank_subset(ctx, rho, [&](std::uint64_t mask) {
        // keep a mask iff it is the minimum of its orbit
        for (const auto& p : ctx.aut_perms()) {
            std::uint64_t img = 0;
            for (std::uint64_t rest = mask; rest;) {
                int i = std::countr_zero(rest);
                rest &= rest - 1;
                img |= std::uint64_t{1} << p[i];
            }
            if (img < mask) return true;
        }
        out.push_back(MatrixOrbitRep{mask, rho - ctx.r()});
        return true;
    });
    return out;
}

std::vector<MatrixOrbitRep> pcm_orbits(const BinaryCode& code, int rho) {
    DualContext ctx(code);
    return pcm_orbits(ctx, rho);
}

}  // namespace pcr
