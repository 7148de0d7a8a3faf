#include "doctest.h"
#include "pcr/binary_code.hpp"
#include "pcr/errors.hpp"
#include "pcr/pseudoweight.hpp"

using namespace pcr;

namespace {

BitMatrix mat(const std::vector<std::string>& rows) { return BitMatrix::from_strings(rows); }

RatVec vec(std::vector<long> v) {
    RatVec x;
    for (long e : v) x.emplace_back(e);
    return x;
}

BinaryCode code_from_generator(const std::vector<std::string>& gen_rows) {
    return BinaryCode(kernel_basis(mat(gen_rows)));
}

}  // namespace

TEST_CASE("pseudoweight evaluation") {
    // 0/1 vector of weight a: all four equal a
    for (int a : {1, 2, 5}) {
        RatVec x(8, 0);
        for (int i = 0; i < a; ++i) x[i] = 1;
        for (Channel ch : kAllChannels) CHECK(pseudoweight_eval(x, ch) == a);
    }

    auto x = vec({1, 1, 1, 3});
    CHECK(pseudoweight_eval(x, Channel::MAXFRAC) == 2);
    CHECK(pseudoweight_eval(x, Channel::AWGNC) == 3);
    CHECK(pseudoweight_eval(x, Channel::BEC) == 4);
    CHECK(pseudoweight_eval(x, Channel::BSC) == 2);

    auto y = vec({1, 1, 1, 1, 1, 1, 1, 3});
    CHECK(pseudoweight_eval(y, Channel::MAXFRAC) == Rat(10, 3));
    CHECK(pseudoweight_eval(y, Channel::BSC) == 6);
    CHECK(pseudoweight_eval(y, Channel::AWGNC) == Rat(25, 4));

    // fractional BSC value: (2,1) -> half = 3/2, xi = 3/4
    CHECK(pseudoweight_eval(vec({2, 1}), Channel::BSC) == Rat(3, 2));

    CHECK_THROWS_AS(pseudoweight_eval(vec({0, 0, 0}), Channel::BEC), ZeroVector);
}

TEST_CASE("channel names") {
    CHECK(std::string(channel_name(Channel::AWGNC)) == "awgnc");
    CHECK(channel_from_string("bsc") == Channel::BSC);
    CHECK(!channel_from_string("zzz").has_value());
}

TEST_CASE("min pseudoweights: frozen matrices") {
    auto single = min_pseudoweights(mat({"111"}));
    CHECK(single.num_rays == 3);
    CHECK(single.d == 2);
    for (Channel ch : kAllChannels) CHECK(single.channel(ch)->wmin == 2);
    CHECK(single.channel(Channel::BEC)->witness.coords[0] == 0);  // lex-smallest witness

    auto ham = min_pseudoweights(mat({"0001111", "0110011", "1010101"}));
    CHECK(ham.num_rays == 42);
    CHECK(ham.d == 3);
    CHECK(ham.channel(Channel::AWGNC)->wmin == 3);
    CHECK(ham.channel(Channel::BEC)->wmin == 3);
    CHECK(ham.channel(Channel::BSC)->wmin == 2);
    CHECK(ham.channel(Channel::MAXFRAC)->wmin == 2);

    auto ext = min_pseudoweights(
        mat({"10011001", "01010101", "00110011", "11110000", "00001111"}));
    CHECK(ext.num_rays == 98);
    CHECK(ext.d == 4);
    CHECK(ext.channel(Channel::AWGNC)->wmin == 4);  // exact rational equality
    CHECK(ext.channel(Channel::BEC)->wmin == 4);
    CHECK(ext.channel(Channel::BSC)->wmin == 3);
    CHECK(ext.channel(Channel::MAXFRAC)->wmin == Rat(5, 2));

    auto simplex = min_pseudoweights(mat({"1101000", "0110100", "0011010", "0001101"}));
    CHECK(simplex.num_rays == 20);
    CHECK(simplex.d == 4);
    CHECK(simplex.channel(Channel::AWGNC)->wmin == 4);
    CHECK(simplex.channel(Channel::MAXFRAC)->wmin == Rat(8, 3));

    auto counter = min_pseudoweights(mat({"1100", "0110", "1010", "1111"}));
    CHECK(counter.d == 4);
    CHECK(counter.channel(Channel::MAXFRAC)->wmin == 2);  // 2 < 4 = d
    CHECK(counter.channel(Channel::AWGNC)->wmin == 3);

    // empty cone: weight-1 row collapses everything
    auto empty = min_pseudoweights(mat({"10", "11"}));
    CHECK(empty.empty_cone());
    for (Channel ch : kAllChannels) CHECK(!empty.channel(ch).has_value());

    // Lemma 1 chains on all of the above
    for (auto* rep : {&single, &ham, &ext, &simplex, &counter}) {
        auto w = [&](Channel ch) { return rep->channel(ch)->wmin; };
        CHECK(w(Channel::MAXFRAC) <= w(Channel::AWGNC));
        CHECK(w(Channel::AWGNC) <= w(Channel::BEC));
        CHECK(w(Channel::MAXFRAC) <= w(Channel::BSC));
        CHECK(w(Channel::BSC) <= w(Channel::BEC));
        CHECK(w(Channel::BEC) <= *rep->d);  // wmin <= d on every channel
    }
}

TEST_CASE("matrix_attains") {
    BitMatrix ext5 = mat({"10011001", "01010101", "00110011", "11110000", "00001111"});
    CHECK(matrix_attains(ext5, Channel::AWGNC, Rat(4)));
    CHECK(!matrix_attains(ext5, Channel::MAXFRAC, Rat(4)));
}

TEST_CASE("maxfrac closed form, weight-2 rows") {
    // all rows weight 2: two classes {0,1,2} and {3,4} -> min class size 2
    BitMatrix h = mat({"11000", "01100", "00011"});
    CHECK(maxfrac_min_weight2plus1(h) == 2);
    auto rep = min_pseudoweights(h);
    for (Channel ch : kAllChannels) CHECK(rep.channel(ch)->wmin == 2);
    CHECK(rep.d == 2);

    // last row meets classes {0,1,2} and {3,4} once each: min{3+2} = 5... and
    // no untouched class; closed form = d = 5 only if it matches the code.
    BitMatrix h2 = mat({"11000", "01100", "00011", "10010"});
    CHECK(maxfrac_min_weight2plus1(h2) == 5);
    auto rep2 = min_pseudoweights(h2);
    CHECK(rep2.channel(Channel::MAXFRAC)->wmin == 5);
    CHECK(rep2.d == 5);

    // untouched class beats the pair sum
    BitMatrix h3 = mat({"110000", "000110", "000011", "100100"});
    // classes of first three rows: {0,1}, {3,4,5}, {2}; last row meets the
    // first two once each -> min{2+3, 1} = 1
    CHECK(maxfrac_min_weight2plus1(h3) == 1);

    // counterexample matrix: last row meets class {0,1,2} three times
    CHECK_THROWS_AS(
        maxfrac_min_weight2plus1(mat({"1100", "0110", "1010", "1111"})), PreconditionViolated);
    // leading block with a row of weight != 2
    CHECK_THROWS_AS(maxfrac_min_weight2plus1(mat({"1110", "0110", "1111"})), PreconditionViolated);
}

TEST_CASE("dimension-2 construction") {
    BinaryCode c = code_from_generator({"111100", "001111"});
    REQUIRE(c.k() == 2);
    BitMatrix h = dimension2_matrix(c);
    CHECK(h.rows() == 4);
    CHECK(h.cols() == 6);
    CHECK(kernel_basis(h) == c.generator());
    auto rep = min_pseudoweights(h);
    CHECK(rep.d == 4);
    for (Channel ch : kAllChannels) CHECK(rep.channel(ch)->wmin == 4);

    // zero-coordinate case: generator 11100 / 00110 leaves column 4 zero
    BinaryCode z = code_from_generator({"11100", "00110"});
    REQUIRE(z.k() == 2);
    BitMatrix hz = dimension2_matrix(z);
    CHECK(hz.rows() == 3);
    CHECK(kernel_basis(hz) == z.generator());
    auto repz = min_pseudoweights(hz);
    CHECK(repz.d == 2);
    for (Channel ch : kAllChannels) CHECK(repz.channel(ch)->wmin == 2);

    // dependent rows -> dimension != 2
    BinaryCode k1(mat({"110", "011"}));
    CHECK_THROWS_AS(dimension2_matrix(k1), DimensionNot2);
}
