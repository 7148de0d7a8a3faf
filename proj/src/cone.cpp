#include "pcr/cone.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>

#include "pcr/errors.hpp"

namespace pcr {

ConeSystem fundamental_cone_system(const BitMatrix& h) {
    ConeSystem s;
    s.n = h.cols();
    for (int i = 0; i < s.n; ++i) {
        std::vector<std::int8_t> e(s.n, 0);
        e[i] = 1;
        s.inequalities.push_back(std::move(e));
    }
    for (int j = 0; j < h.rows(); ++j) {
        auto sup = h.row_support(j);
        if (sup.empty()) {
            ++s.dropped_zero_rows;
            continue;
        }
        for (int l : sup) {
            std::vector<std::int8_t> a(s.n, 0);
            for (int i : sup) a[i] = 1;
            a[l] = -1;
            s.inequalities.push_back(std::move(a));
        }
    }
    return s;
}

bool Ray::operator<(const Ray& o) const {
    return std::lexicographical_compare(coords.begin(), coords.end(), o.coords.begin(), o.coords.end());
}

namespace {

// Tight-constraint bitset, sized for the full system once.
struct TightSet {
    std::vector<std::uint64_t> bits;
    explicit TightSet(int nbits) : bits((nbits + 63) / 64, 0) {}
    void set(int i) { bits[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool get(int i) const { return (bits[i >> 6] >> (i & 63)) & 1u; }
};

struct DdRay {
    std::vector<Int> coords;
    TightSet tight;
};

void normalize_coprime(std::vector<Int>& v) {
    Int g = 0;
    for (const auto& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) return;
    }
    if (g > 1)
        for (auto& x : v) x /= g;
}

// Exact rank of the selected constraint rows via fraction-free (Bareiss)
// elimination. Entries are in {-1,0,1}; with n <= 24 every intermediate
// value is a minor bounded well inside int64.
int rank_of_rows(const std::vector<std::vector<std::int8_t>>& ineqs, const std::vector<int>& sel, int n,
                 int stop_at) {
    std::vector<std::array<long long, 24>> m;
    m.reserve(sel.size());
    for (int idx : sel) {
        std::array<long long, 24> row{};
        for (int c = 0; c < n; ++c) row[c] = ineqs[idx][c];
        m.push_back(row);
    }
    int rank = 0;
    long long prev = 1;
    const int rows = static_cast<int>(m.size());
    for (int col = 0; col < n && rank < rows; ++col) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (m[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        for (int i = rank + 1; i < rows; ++i) {
            for (int c = col + 1; c < n; ++c) {
                __int128 v = (__int128)m[rank][col] * m[i][c] - (__int128)m[i][col] * m[rank][c];
                m[i][c] = static_cast<long long>(v / prev);
            }
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
        if (rank >= stop_at) return rank;
    }
    return rank;
}

}  // namespace

std::vector<Ray> extreme_rays(const ConeSystem& s) {
    const int n = s.n;
    if (n > 24) throw DimensionCap("extreme_rays: n > 24");
    const int m = static_cast<int>(s.inequalities.size());
    for (int i = 0; i < n; ++i) {
        assert(s.inequalities[i][i] == 1);  // canonical order: nonnegativity first
    }

    std::vector<DdRay> rays;
    rays.reserve(n);
    for (int i = 0; i < n; ++i) {
        DdRay r{std::vector<Int>(n, 0), TightSet(m)};
        r.coords[i] = 1;
        for (int j = 0; j < n; ++j)
            if (j != i) r.tight.set(j);
        rays.push_back(std::move(r));
    }

    std::vector<int> tight_idx;
    for (int t = n; t < m; ++t) {
        const auto& a = s.inequalities[t];
        std::vector<Int> val(rays.size());
        std::vector<int> pos, zer, neg;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            Int v = 0;
            for (int c = 0; c < n; ++c)
                if (a[c]) v += a[c] > 0 ? rays[i].coords[c] : -rays[i].coords[c];
            val[i] = v;
            if (v > 0)
                pos.push_back(static_cast<int>(i));
            else if (v < 0)
                neg.push_back(static_cast<int>(i));
            else
                zer.push_back(static_cast<int>(i));
        }
        if (neg.empty()) {
            for (int i : zer) rays[i].tight.set(t);
            continue;
        }

        std::vector<DdRay> fresh;
        const std::size_t words = rays.empty() ? 0 : rays.front().tight.bits.size();
        for (int p : pos) {
            for (int q : neg) {
                // common tight set
                int common = 0;
                for (std::size_t w = 0; w < words; ++w)
                    common += std::popcount(rays[p].tight.bits[w] & rays[q].tight.bits[w]);
                if (common < n - 2) continue;
                if (n > 2) {
                    tight_idx.clear();
                    for (int j = 0; j < t; ++j)
                        if (rays[p].tight.get(j) && rays[q].tight.get(j)) tight_idx.push_back(j);
                    if (rank_of_rows(s.inequalities, tight_idx, n, n - 2) < n - 2) continue;
                }
                DdRay w{std::vector<Int>(n), TightSet(m)};
                for (int c = 0; c < n; ++c)
                    w.coords[c] = val[p] * rays[q].coords[c] - val[q] * rays[p].coords[c];
                normalize_coprime(w.coords);
                for (int j = 0; j <= t; ++j) {
                    const auto& b = s.inequalities[j];
                    Int v = 0;
                    for (int c = 0; c < n; ++c)
                        if (b[c]) v += b[c] > 0 ? w.coords[c] : -w.coords[c];
                    if (v == 0) w.tight.set(j);
                }
                fresh.push_back(std::move(w));
            }
        }
        std::vector<DdRay> next;
        next.reserve(pos.size() + zer.size() + fresh.size());
        for (int i : pos) next.push_back(std::move(rays[i]));
        for (int i : zer) {
            rays[i].tight.set(t);
            next.push_back(std::move(rays[i]));
        }
        for (auto& w : fresh) next.push_back(std::move(w));
        rays = std::move(next);
    }

    std::vector<Ray> out;
    out.reserve(rays.size());
    for (auto& r : rays) {
        bool zero = std::all_of(r.coords.begin(), r.coords.end(), [](const Int& x) { return x == 0; });
        if (!zero) out.push_back(Ray{std::move(r.coords)});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool cone_contains(const ConeSystem& s, const RatVec& x) {
    assert(static_cast<int>(x.size()) == s.n);
    for (const auto& a : s.inequalities) {
        Rat v = 0;
        for (int c = 0; c < s.n; ++c)
            if (a[c]) v += a[c] > 0 ? x[c] : -x[c];
        if (v < 0) return false;
    }
    return true;
}

bool cone_contains(const ConeSystem& s, const std::vector<Int>& x) {
    RatVec q(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) q[i] = Rat(x[i]);
    return cone_contains(s, q);
}

}  // namespace pcr
