#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pcr/bitmatrix.hpp"
#include "pcr/poly2.hpp"

namespace pcr {

// One cyclic code / check polynomial in the scan.
struct ScanRecord {
    int n = 0;
    Poly2 h;  // check polynomial, k = deg h
    int k = 0;
    int w = 0;  // regularity = weight of h
    bool connected = false;
    std::vector<int> ell;  // autocorrelation l_i = sum_t h_t h_{t+i}; empty if disconnected
    double mu2 = 0.0;      // second largest eigenvalue of L = H^T H (connected only)
    double bound = 0.0;    // n (2w - mu2) / (w^2 - mu2)          (connected only)
    std::optional<int> d;
    bool d_from_registry = false;  // d taken from the external registry, not computed
    bool flagged = false;          // |bound - d| <= 1e-6
    bool near_miss = false;        // |bound - d| <= 1e-3 but not flagged
};

// n x n circulant with H[j][i] = h_{j-i mod n}, and whether its Tanner graph
// is connected (gcd of the support of h together with n is 1). Requires
// 1 <= deg h <= n-1 and h | x^n - 1; throws NotADivisor.
std::pair<BitMatrix, bool> full_circulant(const Poly2& h, int n);

// Spectrum-based record for one connected circulant: lambda_j =
// |sum_{t in supp h} e^(2 pi i jt/n)|^2, mu1 = w^2 (the j = 0 value), mu2 =
// max over the eigenvalues outside the mu1 cluster {lambda > w^2 - 1e-6 n}.
// d is left unset. Throws NotADivisor / Disconnected.
ScanRecord circulant_eigen_bound(const Poly2& h, int n);

// Bound for the Kronecker lift H (x) 1_m of a connected circulant:
// n (2w - m mu2) / (w^2 - mu2); m = 1 reduces to circulant_eigen_bound.
double kronecker_bound(const Poly2& h, int n, int m);

// H (x) 1_m: every entry of h becomes an m x m all-ones / all-zeros block.
BitMatrix kronecker_ones(const BitMatrix& h, int m);

// Proposition-8 bound for a general (w_c, w_r)-regular connected matrix via
// Jacobi eigenvalues of L = H^T H. Throws NotRegular / Disconnected.
double kv_bound_general(const BitMatrix& h);

// Verification of the closed form for the intersection of a Hamming code of
// length n = 2^m - 1 with the simple parity-check code: g = p(x) (x+1) with
// p primitive of degree m. Expects w = 2^(m-1) - 1 exactly, mu2 = 2^(m-2)
// and bound = 3 + 1/(2^(m-2) - 1) within tolerance; ok reports the three
// checks. Requires 3 <= m <= 7; throws NoPrimitiveFactor (defensive).
struct Lemma9Result {
    int m = 0;
    int n = 0;
    Poly2 g;  // generator p(x) (x+1)
    Poly2 h;  // check polynomial (x^n - 1) / g
    int w = 0;
    double mu2 = 0.0;
    double bound = 0.0;
    bool ok = false;
};
Lemma9Result lemma9_check(int m);

// Externally sourced minimum distances for scan entries whose dimension
// exceeds the exhaustive budget, keyed by (n, k, w).
std::optional<int> registry_distance(int n, int k, int w);

// Exact minimum weight of the cyclic code generated by g (length n,
// k = n - deg g), by Gray-code enumeration of the 2^k - 1 multiples.
// Requires 1 <= k <= 28 and g | x^n - 1.
int cyclic_min_distance(const Poly2& g, int n);

// Streams one record per divisor h of x^n - 1 with 1 <= deg h <= n - 2, for
// n_min <= n <= n_max, in deterministic (n, factor-exponent) order.
// Disconnected divisors are recorded with connected = false and no bound or
// d. Connected records get d when the order test proves d = 2, when
// k <= d_budget (exhaustive), or from the registry. Requires n_max <= 250.
using ScanSink = std::function<void(const ScanRecord&)>;
void scan_stream(int n_min, int n_max, int d_budget, const ScanSink& sink);
// Same records in the same order, parallelized over lengths.
void scan_stream_omp(int n_min, int n_max, int d_budget, const ScanSink& sink);

std::vector<ScanRecord> scan(int n_max, int d_budget = 24);

// CSV: n,h,k,w,connected,mu2,bound,d,flagged with mu2/bound to 9 decimals
// (empty when disconnected) and d empty when unknown.
std::string scan_csv_header();
std::string scan_csv_row(const ScanRecord& rec);

}  // namespace pcr
