#include "pcr/eigenbound.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numeric>

#include "pcr/errors.hpp"

namespace pcr {

namespace {

constexpr double kClusterTol = 1e-6;  // mu1 cluster: lambda > w^2 - kClusterTol * n
constexpr double kFlagTol = 1e-6;
constexpr double kNearMissTol = 1e-3;

bool support_connected(const Poly2& h, int n) {
    int g = n;
    for (int t : h.support()) g = std::gcd(g, t);
    return g == 1;
}

// multiplicative order of x modulo an irreducible factor p of x^n - 1
// (a divisor of n, found by stripping prime factors)
int order_of_x_mod(const Poly2& p, int n) {
    if (p.degree() == 1) return 1;  // p = x + 1
    int t = n;
    int rest = n;
    for (int q = 2; q <= rest; ++q) {
        if (rest % q) continue;
        while (rest % q == 0) rest /= q;
        while (t % q == 0 &&
               Poly2::x().powmod(static_cast<unsigned long long>(t / q), p) == Poly2::one())
            t /= q;
    }
    return t;
}

// spectrum of the circulant L = H^T H from the support of h:
// lambda_j = |sum_{t in supp h} e^(2 pi i jt / n)|^2
std::vector<double> circulant_spectrum(const Poly2& h, int n) {
    auto supp = h.support();
    std::vector<std::complex<double>> root(n);
    for (int j = 0; j < n; ++j)
        root[j] = std::polar(1.0, 2.0 * M_PI * static_cast<double>(j) / n);
    std::vector<double> lambda(n);
    for (int j = 0; j < n; ++j) {
        std::complex<double> s = 0.0;
        for (int t : supp) s += root[static_cast<int>((static_cast<long long>(j) * t) % n)];
        lambda[j] = std::norm(s);
    }
    return lambda;
}

std::vector<int> autocorrelation(const Poly2& h, int n) {
    auto supp = h.support();
    std::vector<int> ell(n, 0);
    for (int a : supp)
        for (int b : supp) ell[((b - a) % n + n) % n]++;
    return ell;
}

double mu2_of(const std::vector<double>& lambda, int w, int n) {
    double mu2 = -1.0;
    const double cutoff = static_cast<double>(w) * w - kClusterTol * n;
    for (double l : lambda)
        if (l <= cutoff) mu2 = std::max(mu2, l);
    if (mu2 < 0.0) throw Disconnected("eigen bound: no eigenvalue outside the mu1 cluster");
    return mu2;
}

void check_divisor(const Poly2& h, int n) {
    if (h.degree() < 1 || h.degree() > n - 1)
        throw NotADivisor("check polynomial degree must be in [1, n-1]");
    if (!h.divides(xn_minus_1(n))) throw NotADivisor("h does not divide x^n - 1");
}

struct FactorOrders {
    Factorization fac;
    std::vector<int> ord;  // order of x modulo each irreducible factor
};

FactorOrders factor_with_orders(int n) {
    FactorOrders fo;
    fo.fac = factor_xn_minus_1(n);
    for (const auto& [p, mult] : fo.fac.factors) fo.ord.push_back(order_of_x_mod(p, n));
    return fo;
}

// order of x modulo a divisor given by factor exponents:
// ord(p^e) = ord(p) * 2^ceil(log2 e), lcm over the factors present
long long order_from_exponents(const FactorOrders& fo, const std::vector<int>& exp) {
    long long ord = 1;
    for (std::size_t i = 0; i < exp.size(); ++i) {
        if (exp[i] == 0) continue;
        long long t = fo.ord[i];
        int doubling = 1;
        while (doubling < exp[i]) doubling *= 2;
        ord = std::lcm(ord, t * doubling);
    }
    return ord;
}

ScanRecord make_record(const Poly2& h, int n) {
    ScanRecord rec;
    rec.n = n;
    rec.h = h;
    rec.k = h.degree();
    rec.w = h.weight();
    rec.connected = support_connected(h, n);
    if (!rec.connected) return rec;
    rec.ell = autocorrelation(h, n);
    auto lambda = circulant_spectrum(h, n);
    rec.mu2 = mu2_of(lambda, rec.w, n);
    double w = rec.w;
    rec.bound = n * (2.0 * w - rec.mu2) / (w * w - rec.mu2);
    return rec;
}

void finish_record(ScanRecord& rec, const FactorOrders& fo, const std::vector<int>& g_exp,
                   const Poly2& g, int d_budget) {
    if (!rec.connected) return;
    if (order_from_exponents(fo, g_exp) < rec.n) {
        rec.d = 2;  // some x^i - 1 with i < n is a codeword
    } else if (rec.k <= d_budget) {
        rec.d = cyclic_min_distance(g, rec.n);
    } else if (auto reg = registry_distance(rec.n, rec.k, rec.w)) {
        rec.d = *reg;
        rec.d_from_registry = true;
    }
    if (rec.d) {
        double gap = std::fabs(rec.bound - static_cast<double>(*rec.d));
        rec.flagged = gap <= kFlagTol;
        rec.near_miss = !rec.flagged && gap <= kNearMissTol;
    }
}

// one scan length: deterministic DFS over the factor exponent lattice,
// one polynomial multiplication per visited node
void scan_one_length(int n, int d_budget, const ScanSink& sink) {
    FactorOrders fo = factor_with_orders(n);
    const auto& factors = fo.fac.factors;
    std::vector<int> exp(factors.size(), 0);
    Poly2 xn1 = xn_minus_1(n);

    std::function<void(std::size_t, Poly2)> rec = [&](std::size_t i, Poly2 cur) {
        if (i == factors.size()) {
            int deg = cur.degree();
            if (deg < 1 || deg > n - 2) return;
            ScanRecord r = make_record(cur, n);
            if (r.connected) {
                std::vector<int> g_exp(exp.size());
                for (std::size_t j = 0; j < exp.size(); ++j)
                    g_exp[j] = factors[j].second - exp[j];
                finish_record(r, fo, g_exp, xn1 / cur, d_budget);
            }
            sink(r);
            return;
        }
        for (int e = 0;; ++e) {
            exp[i] = e;
            rec(i + 1, cur);
            if (e == factors[i].second) break;
            cur = cur * factors[i].first;
        }
        exp[i] = 0;
    };
    rec(0, Poly2::one());
}

}  // namespace

std::pair<BitMatrix, bool> full_circulant(const Poly2& h, int n) {
    check_divisor(h, n);
    BitMatrix m(n, n);
    auto supp = h.support();
    for (int j = 0; j < n; ++j)
        for (int t : supp) m.set(j, (j + n - t % n) % n, true);  // H[j][i] = h_{j-i}
    return {m, support_connected(h, n)};
}

ScanRecord circulant_eigen_bound(const Poly2& h, int n) {
    check_divisor(h, n);
    if (!support_connected(h, n))
        throw Disconnected("circulant_eigen_bound: Tanner graph is disconnected");
    return make_record(h, n);
}

double kronecker_bound(const Poly2& h, int n, int m) {
    ScanRecord rec = circulant_eigen_bound(h, n);
    double w = rec.w;
    return n * (2.0 * w - m * rec.mu2) / (w * w - rec.mu2);
}

BitMatrix kronecker_ones(const BitMatrix& h, int m) {
    BitMatrix out(h.rows() * m, h.cols() * m);
    for (int j = 0; j < h.rows(); ++j)
        for (int i = 0; i < h.cols(); ++i)
            if (h.get(j, i))
                for (int a = 0; a < m; ++a)
                    for (int b = 0; b < m; ++b) out.set(j * m + a, i * m + b, true);
    return out;
}

double kv_bound_general(const BitMatrix& h) {
    const int rows = h.rows(), n = h.cols();
    if (rows < 1 || n < 2) throw NotRegular("kv_bound_general: degenerate matrix");
    int wr = h.row_weight(0), wc = h.col_weight(0);
    for (int j = 0; j < rows; ++j)
        if (h.row_weight(j) != wr) throw NotRegular("kv_bound_general: row weights differ");
    for (int i = 0; i < n; ++i)
        if (h.col_weight(i) != wc) throw NotRegular("kv_bound_general: column weights differ");
    if (wr == 0 || wc == 0) throw NotRegular("kv_bound_general: zero weights");

    // Tanner graph connectivity: union-find over columns, merged via rows
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (int j = 0; j < rows; ++j) {
        int first = -1;
        for (int i = 0; i < n; ++i)
            if (h.get(j, i)) {
                if (first < 0)
                    first = i;
                else
                    parent[find(i)] = find(first);
            }
    }
    for (int i = 1; i < n; ++i)
        if (find(i) != find(0)) throw Disconnected("kv_bound_general: Tanner graph disconnected");

    // L = H^T H over the reals
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (int j = 0; j < rows; ++j) {
        auto supp = h.row_support(j);
        for (int p : supp)
            for (int q : supp) a[p][q] += 1.0;
    }

    // cyclic Jacobi sweeps
    double scale = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) scale += a[i][j] * a[i][j];
    const double tol = 1e-24 * scale;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += 2.0 * a[p][q] * a[p][q];
        if (off < tol) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (a[p][q] == 0.0) continue;
                double theta = 0.5 * std::atan2(2.0 * a[p][q], a[q][q] - a[p][p]);
                double c = std::cos(theta), s = std::sin(theta);
                for (int i = 0; i < n; ++i) {
                    double aip = a[i][p], aiq = a[i][q];
                    a[i][p] = c * aip - s * aiq;
                    a[i][q] = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    double api = a[p][i], aqi = a[q][i];
                    a[p][i] = c * api - s * aqi;
                    a[q][i] = s * api + c * aqi;
                }
            }
    }
    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = a[i][i];
    std::sort(eig.begin(), eig.end(), std::greater<>());
    double mu1 = eig[0], mu2 = eig[1];
    return n * (2.0 * wc - mu2) / (mu1 - mu2);
}

Lemma9Result lemma9_check(int m) {
    if (m < 3 || m > 7) throw DimensionCap("lemma9_check: need 3 <= m <= 7");
    Lemma9Result res;
    res.m = m;
    res.n = (1 << m) - 1;
    auto fac = factor_xn_minus_1(res.n);
    Poly2 p;
    for (const auto& [f, mult] : fac.factors)
        if (f.degree() == m && order_of_x_mod(f, res.n) == res.n) {
            p = f;
            break;
        }
    if (p.is_zero()) throw NoPrimitiveFactor("lemma9_check: no primitive degree-m factor");
    res.g = p * (Poly2::x() + Poly2::one());
    res.h = xn_minus_1(res.n) / res.g;
    ScanRecord rec = circulant_eigen_bound(res.h, res.n);
    res.w = rec.w;
    res.mu2 = rec.mu2;
    res.bound = rec.bound;
    const double mu2_expect = static_cast<double>(1 << (m - 2));
    const double bound_expect = 3.0 + 1.0 / (mu2_expect - 1.0);
    res.ok = res.w == (1 << (m - 1)) - 1 && std::fabs(res.mu2 - mu2_expect) <= 1e-6 &&
             std::fabs(res.bound - bound_expect) <= 1e-9;
    return res;
}

std::optional<int> registry_distance(int n, int k, int w) {
    // distances quoted from the literature for codes whose dimension exceeds
    // the exhaustive budget
    struct Entry {
        int n, k, w, d;
    };
    static constexpr Entry kRegistry[] = {
        {31, 26, 16, 3}, {63, 57, 32, 3}, {127, 120, 64, 3},
        {63, 37, 8, 9},  {73, 45, 9, 10}, {85, 68, 21, 6},
    };
    for (const auto& e : kRegistry)
        if (e.n == n && e.k == k && e.w == w) return e.d;
    return std::nullopt;
}

int cyclic_min_distance(const Poly2& g, int n) {
    const int k = n - g.degree();
    if (k < 1 || k > 28) throw DimensionTooLarge("cyclic_min_distance: k out of range");
    if (!g.divides(xn_minus_1(n))) throw NotADivisor("cyclic_min_distance: g does not divide x^n-1");
    constexpr int kWords = (BitMatrix::kMaxCols + 63) / 64;
    const int wcnt = (n + 63) >> 6;  // words actually holding coefficients
    std::array<std::uint64_t, kWords> c{};
    // shifted copies x^b g(x), b < k; degrees stay below n
    std::vector<std::array<std::uint64_t, kWords>> shifts(k);
    auto supp = g.support();
    for (int b = 0; b < k; ++b) {
        shifts[b].fill(0);
        for (int t : supp) {
            int e = t + b;
            shifts[b][e >> 6] |= std::uint64_t{1} << (e & 63);
        }
    }
    int best = n + 1;
    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t i = 1; i < total; ++i) {
        int b = std::countr_zero(i);  // Gray-code step
        int weight = 0;
        for (int wd = 0; wd < wcnt; ++wd) {
            c[wd] ^= shifts[b][wd];
            weight += std::popcount(c[wd]);
        }
        best = std::min(best, weight);
    }
    return best;
}

void scan_stream(int n_min, int n_max, int d_budget, const ScanSink& sink) {
    if (n_max > 250) throw DimensionCap("scan: n_max > 250");
    for (int n = std::max(n_min, 2); n <= n_max; ++n) scan_one_length(n, d_budget, sink);
}

void scan_stream_omp(int n_min, int n_max, int d_budget, const ScanSink& sink) {
    if (n_max > 250) throw DimensionCap("scan: n_max > 250");
    const int lo = std::max(n_min, 2);
    if (lo > n_max) return;
    const int count = n_max - lo + 1;
    std::vector<std::vector<ScanRecord>> buf(count);
#pragma omp parallel for schedule(dynamic)
    for (int idx = 0; idx < count; ++idx)
        scan_one_length(lo + idx, d_budget, [&](const ScanRecord& r) { buf[idx].push_back(r); });
    for (const auto& chunk : buf)
        for (const auto& r : chunk) sink(r);
}

std::vector<ScanRecord> scan(int n_max, int d_budget) {
    std::vector<ScanRecord> out;
    scan_stream(2, n_max, d_budget, [&](const ScanRecord& r) { out.push_back(r); });
    return out;
}

std::string scan_csv_header() { return "n,h,k,w,connected,mu2,bound,d,flagged"; }

std::string scan_csv_row(const ScanRecord& rec) {
    char num[64];
    std::string row = std::to_string(rec.n) + ',' + rec.h.to_exponent_string() + ',' +
                      std::to_string(rec.k) + ',' + std::to_string(rec.w) + ',' +
                      (rec.connected ? '1' : '0') + std::string(",");
    if (rec.connected) {
        std::snprintf(num, sizeof(num), "%.9f,%.9f", rec.mu2, rec.bound);
        row += num;
    } else {
        row += ',';
    }
    row += ',';
    if (rec.d) row += std::to_string(*rec.d);
    row += ',';
    row += rec.flagged ? '1' : '0';
    return row;
}

}  // namespace pcr
