#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <tuple>

#include "doctest.h"
#include "pcr/binary_code.hpp"
#include "pcr/eigenbound.hpp"
#include "pcr/errors.hpp"
#include "pcr/poly2.hpp"

using namespace pcr;

namespace {

Poly2 P(const std::string& s) { return Poly2::parse(s); }

std::set<std::tuple<int, int, int, int>> flagged_tuples(const std::vector<ScanRecord>& recs) {
    std::set<std::tuple<int, int, int, int>> out;
    for (const auto& r : recs)
        if (r.flagged) out.insert({r.n, r.k, *r.d, r.w});
    return out;
}

}  // namespace

TEST_CASE("full circulant") {
    // h = 1 + x, n = 5: 2-regular connected double diagonal
    auto [m, conn] = full_circulant(P("1+x"), 5);
    CHECK(conn);
    CHECK(m.rows() == 5);
    CHECK(m.cols() == 5);
    for (int j = 0; j < 5; ++j) {
        CHECK(m.row_weight(j) == 2);
        CHECK(m.get(j, j));
        CHECK(m.get(j, (j + 4) % 5));
    }

    // h = 1 + x^2, n = 4: disconnected (supports stay on one parity class)
    auto [m2, conn2] = full_circulant(P("1+x^2"), 4);
    CHECK(!conn2);
    for (int j = 0; j < 4; ++j) CHECK(m2.row_weight(j) == 2);

    // Hamming [7,4,3]: h = (1+x)(1+x+x^3) = 1+x^2+x^3+x^4, 4-regular
    auto [m3, conn3] = full_circulant(P("1+x^2+x^3+x^4"), 7);
    CHECK(conn3);
    for (int j = 0; j < 7; ++j) {
        CHECK(m3.row_weight(j) == 4);
        CHECK(m3.col_weight(j) == 4);
    }

    CHECK_THROWS_AS(full_circulant(P("1+x+x^2"), 5), NotADivisor);  // not a divisor
    CHECK_THROWS_AS(full_circulant(P("1"), 5), NotADivisor);        // degree 0
    CHECK_THROWS_AS(full_circulant(P("1+x^5"), 5), NotADivisor);    // degree n
}

TEST_CASE("circulant eigen bound: frozen examples") {
    // repetition codes: h = 1 + x gives bound exactly n
    for (int n : {3, 4, 5, 10, 17}) {
        auto rec = circulant_eigen_bound(P("1+x"), n);
        CHECK(rec.w == 2);
        CHECK(rec.bound == doctest::Approx(n).epsilon(1e-12));
    }

    // [7,3,4] simplex constituent: h = 1+x+x^3 is a planar difference set,
    // mu2 = w - 1 = 2, bound = 7*(6-2)/(9-2) = 4
    auto sim = circulant_eigen_bound(P("1+x+x^3"), 7);
    CHECK(sim.k == 3);
    CHECK(sim.w == 3);
    CHECK(sim.mu2 == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(sim.bound == doctest::Approx(4.0).epsilon(1e-9));

    // Hamming [7,4,3]: w = 4, mu2 = 2, bound = 7*6/14 = 3
    auto ham = circulant_eigen_bound(P("1+x^2+x^3+x^4"), 7);
    CHECK(ham.w == 4);
    CHECK(ham.mu2 == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(ham.bound == doctest::Approx(3.0).epsilon(1e-9));

    // autocorrelation invariants
    for (const auto& rec : {sim, ham}) {
        REQUIRE(static_cast<int>(rec.ell.size()) == rec.n);
        CHECK(rec.ell[0] == rec.w);
        int sum = 0;
        for (int i = 0; i < rec.n; ++i) {
            sum += rec.ell[i];
            CHECK(rec.ell[i] == rec.ell[(rec.n - i) % rec.n]);
        }
        CHECK(sum == rec.w * rec.w);
    }

    CHECK_THROWS_AS(circulant_eigen_bound(P("1+x^2"), 4), Disconnected);
    CHECK_THROWS_AS(circulant_eigen_bound(P("1+x+x^2"), 5), NotADivisor);
}

TEST_CASE("kronecker bound") {
    // m = 1 reduces to the circulant bound
    auto rec = circulant_eigen_bound(P("1+x+x^3"), 7);
    CHECK(kronecker_bound(P("1+x+x^3"), 7, 1) == doctest::Approx(rec.bound).epsilon(1e-12));

    // Hamming lift with m = 2: 7*(8-4)/(16-2) = 2
    CHECK(kronecker_bound(P("1+x^2+x^3+x^4"), 7, 2) == doctest::Approx(2.0).epsilon(1e-9));

    // kronecker_ones structure
    BitMatrix base = full_circulant(P("1+x"), 3).first;
    BitMatrix lifted = kronecker_ones(base, 2);
    CHECK(lifted.rows() == 6);
    CHECK(lifted.cols() == 6);
    for (int j = 0; j < 6; ++j) CHECK(lifted.row_weight(j) == 4);
}

TEST_CASE("general regular bound via Jacobi") {
    // agrees with the exact circulant spectrum
    for (auto [h, n] : std::vector<std::pair<std::string, int>>{
             {"1+x+x^3", 7}, {"1+x^2+x^3+x^4", 7}, {"1+x", 9}}) {
        auto rec = circulant_eigen_bound(P(h), n);
        auto mat = full_circulant(P(h), n).first;
        CHECK(kv_bound_general(mat) == doctest::Approx(rec.bound).epsilon(1e-8));
    }

    // [1 1 1] (x) 1_2: mu1 = 12, mu2 = 0, bound = 6*4/12 = 2
    BitMatrix ones(1, 3);
    for (int i = 0; i < 3; ++i) ones.set(0, i, true);
    CHECK(kv_bound_general(kronecker_ones(ones, 2)) == doctest::Approx(2.0).epsilon(1e-9));

    // Kronecker lifts agree with the closed form
    for (int m : {2, 3}) {
        auto mat = kronecker_ones(full_circulant(P("1+x+x^3"), 7).first, m);
        CHECK(kv_bound_general(mat) ==
              doctest::Approx(kronecker_bound(P("1+x+x^3"), 7, m)).epsilon(1e-6));
    }

    BitMatrix irregular = BitMatrix::from_strings({"110", "111"});
    CHECK_THROWS_AS(kv_bound_general(irregular), NotRegular);
    BitMatrix split = BitMatrix::from_strings({"1100", "0011"});
    CHECK_THROWS_AS(kv_bound_general(split), Disconnected);
}

TEST_CASE("lemma 9 closed form") {
    // g = p(x)(x+1) with p primitive of degree m:
    // w = 2^(m-1) - 1, mu2 = 2^(m-2), bound = 3 + 1/(2^(m-2) - 1)
    auto r3 = lemma9_check(3);
    CHECK(r3.ok);
    CHECK(r3.n == 7);
    CHECK(r3.w == 3);
    CHECK(r3.mu2 == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(r3.bound == doctest::Approx(4.0).epsilon(1e-9));

    auto r4 = lemma9_check(4);
    CHECK(r4.ok);
    CHECK(r4.w == 7);
    CHECK(r4.bound == doctest::Approx(10.0 / 3.0).epsilon(1e-9));

    auto r5 = lemma9_check(5);
    CHECK(r5.ok);
    CHECK(r5.mu2 == doctest::Approx(8.0).epsilon(1e-9));

    CHECK_THROWS_AS(lemma9_check(2), DimensionCap);
    CHECK_THROWS_AS(lemma9_check(8), DimensionCap);
}

TEST_CASE("distance registry") {
    CHECK(registry_distance(63, 37, 8) == 9);
    CHECK(registry_distance(73, 45, 9) == 10);
    CHECK(registry_distance(85, 68, 21) == 6);
    CHECK(!registry_distance(63, 37, 9).has_value());
    CHECK(!registry_distance(64, 37, 8).has_value());
}

TEST_CASE("cyclic minimum distance") {
    CHECK(cyclic_min_distance(P("1+x+x^3"), 7) == 3);              // Hamming [7,4,3]
    CHECK(cyclic_min_distance(P("1+x^2+x^3+x^4"), 7) == 4);        // simplex [7,3,4]
    for (int n : {5, 8, 13}) CHECK(cyclic_min_distance(xn_minus_1(n) / P("1+x"), n) == n);

    // cross-check against the generic Gray-code search on the kernel code
    BinaryCode ham(full_circulant(P("1+x^2+x^3+x^4"), 7).first);
    CHECK(min_distance(ham) == 3);

    CHECK_THROWS_AS(cyclic_min_distance(xn_minus_1(7), 7), DimensionTooLarge);  // k = 0
    CHECK_THROWS_AS(cyclic_min_distance(P("1+x+x^2"), 5), NotADivisor);
}

TEST_CASE("scan to n = 21: flagged set") {
    auto recs = scan(21);
    std::set<std::tuple<int, int, int, int>> expect;
    for (int n = 3; n <= 21; ++n) expect.insert({n, 1, n, 2});  // repetition codes
    expect.insert({7, 4, 3, 4});                                // Hamming
    expect.insert({15, 11, 3, 8});
    expect.insert({7, 3, 4, 3});  // d >= 3 equality cases
    expect.insert({15, 7, 5, 4});
    expect.insert({21, 11, 6, 5});
    expect.insert({6, 4, 2, 4});  // d = 2 equality cases
    expect.insert({14, 11, 2, 8});
    expect.insert({14, 10, 2, 6});
    CHECK(flagged_tuples(recs) == expect);

    // the [21,11,6] record: w = 5, mu2 = 4 exactly, bound = 21*6/21 = 6
    bool found = false;
    for (const auto& r : recs)
        if (r.flagged && r.n == 21 && r.k == 11) {
            found = true;
            CHECK(r.w == 5);
            CHECK(r.mu2 == doctest::Approx(4.0).epsilon(1e-9));
            CHECK(r.bound == doctest::Approx(6.0).epsilon(1e-10));
            CHECK(scan_csv_row(r) ==
                  "21," + r.h.to_exponent_string() + ",11,5,1,4.000000000,6.000000000,6,1");
        }
    CHECK(found);

    for (const auto& r : recs) {
        CHECK(!r.d_from_registry);  // every dimension here is within the budget
        if (r.connected && r.d) {
            // the bound never exceeds the distance it lower-bounds
            CHECK(r.bound <= *r.d + 1e-6);
            // order-test d = 2 agrees with the exhaustive search
            CHECK(cyclic_min_distance(xn_minus_1(r.n) / r.h, r.n) == *r.d);
        }
    }
}

TEST_CASE("scan: d budget and order test") {
    // with a zero budget only the order test can set d, so the d = 2 rows
    // are still flagged while everything else is left open
    auto recs = scan(13, 0);
    CHECK(flagged_tuples(recs) == std::set<std::tuple<int, int, int, int>>{{6, 4, 2, 4}});
    for (const auto& r : recs)
        if (r.d) CHECK(*r.d == 2);
}

TEST_CASE("scan: serial and parallel streams agree") {
    std::vector<std::string> serial, parallel;
    scan_stream(2, 21, 24, [&](const ScanRecord& r) { serial.push_back(scan_csv_row(r)); });
    scan_stream_omp(2, 21, 24, [&](const ScanRecord& r) { parallel.push_back(scan_csv_row(r)); });
    REQUIRE(serial.size() == parallel.size());
    CHECK(serial == parallel);
    CHECK_THROWS_AS(scan_stream(2, 251, 24, [](const ScanRecord&) {}), DimensionCap);
}

TEST_CASE("scan csv") {
    CHECK(scan_csv_header() == "n,h,k,w,connected,mu2,bound,d,flagged");
    // repetition n = 3: mu2 = |1 + w|^2 = 1, bound = 3
    auto rep = circulant_eigen_bound(P("1+x"), 3);
    rep.d = 3;
    rep.flagged = true;
    CHECK(scan_csv_row(rep) == "3,1+x,1,2,1,1.000000000,3.000000000,3,1");

    // disconnected rows carry no spectrum or distance
    bool found = false;
    for (const auto& r : scan(4))
        if (!r.connected) {
            found = true;
            CHECK(scan_csv_row(r) == "4,1+x^2,2,2,0,,,,0");
        }
    CHECK(found);
}
