#include "pcr/properties.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "pcr/binary_code.hpp"
#include "pcr/bitmatrix.hpp"
#include "pcr/cone.hpp"
#include "pcr/eigenbound.hpp"
#include "pcr/errors.hpp"
#include "pcr/poly2.hpp"
#include "pcr/pseudoweight.hpp"
#include "pcr/redundancy.hpp"

namespace pcr {

namespace {

using Rng = std::mt19937_64;

int pick(Rng& rng, int lo, int hi) {  // uniform in [lo, hi]
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::string describe(const BitMatrix& m) {
    std::string out;
    for (const auto& row : m.to_strings()) {
        if (!out.empty()) out += '|';
        out += row;
    }
    return out;
}

// random parity-check matrix with a nonzero kernel, n <= 8
BitMatrix random_matrix(Rng& rng) {
    for (;;) {
        int n = pick(rng, 3, 8);
        int r = pick(rng, 1, n);
        std::vector<std::uint64_t> rows;
        for (int j = 0; j < r; ++j)
            rows.push_back(static_cast<std::uint64_t>(pick(rng, 1, (1 << n) - 1)));
        BitMatrix h = BitMatrix::from_row_masks(rows, n);
        if (rref_and_rank(h).rank < n) return h;
    }
}

// random matrix whose rows all have weight 2
BitMatrix random_weight2_matrix(Rng& rng, int max_rows) {
    int n = pick(rng, 3, 8);
    int r = pick(rng, 1, max_rows);
    BitMatrix h(0, n);
    for (int j = 0; j < r; ++j) {
        int a = pick(rng, 0, n - 1);
        int b = pick(rng, 0, n - 2);
        if (b >= a) ++b;
        h.append_row_mask((std::uint64_t{1} << a) | (std::uint64_t{1} << b));
    }
    return h;
}

struct Fail {
    bool failed = false;
    std::string detail;
    void note(const std::string& what) {
        if (!failed) detail = what;
        failed = true;
    }
};

PropertyResult finish(const std::string& name, std::uint64_t fixtures, const Fail& f) {
    PropertyResult res;
    res.name = name;
    res.fixtures = fixtures;
    res.passed = !f.failed;
    res.detail = f.detail;
    return res;
}

PropertyResult suite_relations(Rng& rng, int fixtures) {
    Fail f;
    std::uint64_t ran = 0;
    for (int i = 0; i < fixtures; ++i) {
        BitMatrix h = random_matrix(rng);
        auto rep = min_pseudoweights(h);
        if (rep.empty_cone()) continue;
        ++ran;
        const Rat& mf = rep.channel(Channel::MAXFRAC)->wmin;
        const Rat& aw = rep.channel(Channel::AWGNC)->wmin;
        const Rat& bs = rep.channel(Channel::BSC)->wmin;
        const Rat& be = rep.channel(Channel::BEC)->wmin;
        if (!(mf <= aw && aw <= be && mf <= bs && bs <= be))
            f.note("ordering violated on " + describe(h));
    }
    return finish("relations", ran, f);
}

PropertyResult suite_distance_two(Rng& rng, int fixtures) {
    Fail f;
    std::uint64_t ran = 0;
    while (ran < static_cast<std::uint64_t>(fixtures)) {
        BitMatrix h = random_matrix(rng);
        BinaryCode code(h);
        int d = min_distance(code);
        if (d > 2) continue;
        ++ran;
        auto rep = min_pseudoweights(h);
        for (Channel ch : kAllChannels)
            if (rep.channel(ch)->wmin != Rat(d))
                f.note(std::string("wmin != d on ") + channel_name(ch) + " for " + describe(h));
    }
    return finish("distance-two", ran, f);
}

PropertyResult suite_weight2(Rng& rng, int fixtures) {
    Fail f;
    for (int i = 0; i < fixtures; ++i) {
        BitMatrix h = random_weight2_matrix(rng, 10);
        int d = weight2_equiv_classes(h).min_size();
        if (min_distance(BinaryCode(h)) != d) {
            f.note("class size != distance for " + describe(h));
            continue;
        }
        auto rep = min_pseudoweights(h);
        for (Channel ch : kAllChannels)
            if (rep.channel(ch)->wmin != Rat(d))
                f.note(std::string("wmin != d on ") + channel_name(ch) + " for " + describe(h));
    }
    return finish("weight-two-rows", fixtures, f);
}

PropertyResult suite_weight2_plus1(Rng& rng, int fixtures) {
    Fail f;
    std::uint64_t ran = 0;
    while (ran < static_cast<std::uint64_t>(fixtures)) {
        BitMatrix h = random_weight2_matrix(rng, 6);
        auto classes = weight2_equiv_classes(h);
        // extra row meeting each equivalence class in at most one column
        std::uint64_t extra = 0;
        for (const auto& cls : classes.classes)
            if (pick(rng, 0, 1)) extra |= std::uint64_t{1} << cls[pick(rng, 0, (int)cls.size() - 1)];
        if (extra == 0) continue;
        h.append_row_mask(extra);
        BinaryCode code(h);
        if (code.k() < 1) continue;
        ++ran;
        Rat closed = maxfrac_min_weight2plus1(h);
        int d = min_distance(code);
        auto rep = min_pseudoweights(h);
        if (closed != rep.channel(Channel::MAXFRAC)->wmin || closed != Rat(d))
            f.note("closed form mismatch for " + describe(h));
        if (rep.channel(Channel::AWGNC)->wmin != Rat(d) || rep.channel(Channel::BSC)->wmin != Rat(d))
            f.note("awgnc/bsc wmin != d for " + describe(h));
    }
    return finish("weight-two-plus-one", ran, f);
}

PropertyResult suite_counterexample() {
    // one extra-row column pair inside a single class: the closed form's
    // precondition fails and the matrix truly undershoots d
    Fail f;
    BitMatrix h = BitMatrix::from_strings({"1100", "0110", "1010", "1111"});
    auto rep = min_pseudoweights(h);
    if (rep.channel(Channel::MAXFRAC)->wmin != Rat(2)) f.note("maxfrac wmin != 2");
    if (min_distance(BinaryCode(h)) != 4) f.note("d != 4");
    return finish("counterexample", 1, f);
}

PropertyResult suite_low_dimension(Rng& rng, int fixtures) {
    Fail f;
    for (int i = 0; i < fixtures; ++i) {
        int n = pick(rng, 2, 8);
        int k = pick(rng, 1, 2);
        std::vector<std::uint64_t> gen;
        gen.push_back(static_cast<std::uint64_t>(pick(rng, 1, (1 << n) - 1)));
        if (k == 2) {
            std::uint64_t c2;
            do {
                c2 = static_cast<std::uint64_t>(pick(rng, 1, (1 << n) - 1));
            } while (c2 == gen[0]);
            gen.push_back(c2);
        }
        BinaryCode code(kernel_basis(BitMatrix::from_row_masks(gen, n)));
        if (code.k() != k) {
            f.note("generator rank mismatch");
            continue;
        }
        BitMatrix h = k == 1 ? dimension1_matrix(code) : dimension2_matrix(code);
        if (kernel_basis(h) != code.generator()) {
            f.note("construction changes the code");
            continue;
        }
        int d = min_distance(code);
        auto rep = min_pseudoweights(h);
        for (Channel ch : kAllChannels)
            if (rep.channel(ch)->wmin != Rat(d))
                f.note(std::string("wmin != d on ") + channel_name(ch) + " for " + describe(h));
    }
    return finish("low-dimension", fixtures, f);
}

PropertyResult suite_monotonicity(Rng& rng, int fixtures) {
    Fail f;
    for (int i = 0; i < fixtures; ++i) {
        BitMatrix h = random_matrix(rng);
        // append a row from the row space: the code is unchanged and the
        // cone can only shrink
        std::uint64_t extra = 0;
        int combo = pick(rng, 1, (1 << h.rows()) - 1);
        for (int j = 0; j < h.rows(); ++j)
            if ((combo >> j) & 1) extra ^= h.row_mask(j);
        BitMatrix h2 = h;
        h2.append_row_mask(extra);
        auto rep1 = min_pseudoweights(h);
        auto rep2 = min_pseudoweights(h2);
        if (rep1.empty_cone()) {
            if (!rep2.empty_cone()) f.note("cone grew for " + describe(h));
            continue;
        }
        if (rep2.empty_cone()) continue;  // shrank to {0}: minima became infinite
        for (Channel ch : kAllChannels)
            if (rep2.channel(ch)->wmin < rep1.channel(ch)->wmin)
                f.note(std::string("wmin dropped on ") + channel_name(ch) + " for " + describe(h2));
    }
    return finish("row-monotonicity", fixtures, f);
}

PropertyResult suite_point_soundness(Rng& rng, int fixtures) {
    Fail f;
    std::uint64_t points = 0;
    for (int i = 0; i < fixtures; ++i) {
        BitMatrix h = random_matrix(rng);
        auto s = fundamental_cone_system(h);
        auto rays = extreme_rays(s);
        if (rays.empty()) continue;
        auto rep = min_pseudoweights_from_rays(s.n, rays);
        for (int p = 0; p < 25; ++p) {
            // random nonnegative integer combination of extreme rays
            std::vector<Int> x(s.n, 0);
            bool nonzero = false;
            for (const auto& ray : rays) {
                int c = pick(rng, 0, 3);
                if (c == 0) continue;
                nonzero = true;
                for (int j = 0; j < s.n; ++j) x[j] += c * ray.coords[j];
            }
            if (!nonzero) continue;
            ++points;
            if (!cone_contains(s, x)) {
                f.note("combination left the cone for " + describe(h));
                continue;
            }
            for (Channel ch : kAllChannels)
                if (pseudoweight_eval(x, ch) < rep.channel(ch)->wmin)
                    f.note(std::string("sampled point beats wmin on ") + channel_name(ch) +
                           " for " + describe(h));
        }
    }
    return finish("point-soundness", points, f);
}

PropertyResult suite_kronecker(Rng& rng, int fixtures) {
    Fail f;
    std::uint64_t ran = 0;
    int attempts = 0;
    while (ran < static_cast<std::uint64_t>(fixtures) && attempts++ < 20 * fixtures) {
        int n = pick(rng, 4, 12);
        auto divs = divisors(factor_xn_minus_1(n));
        std::vector<Poly2> usable;
        for (const auto& h : divs)
            if (h.degree() >= 1 && h.degree() <= n - 2 && full_circulant(h, n).second)
                usable.push_back(h);
        if (usable.empty()) continue;
        Poly2 h = usable[pick(rng, 0, (int)usable.size() - 1)];
        int m = pick(rng, 2, n <= 10 ? 3 : 2);
        ++ran;
        double closed = kronecker_bound(h, n, m);
        double jacobi = kv_bound_general(kronecker_ones(full_circulant(h, n).first, m));
        if (std::abs(closed - jacobi) > 1e-6)
            f.note("kronecker mismatch at n=" + std::to_string(n) + " h=" +
                   h.to_exponent_string() + " m=" + std::to_string(m));
    }
    return finish("kronecker", ran, f);
}

PropertyResult suite_puncturing(Rng& rng, int fixtures) {
    Fail f;
    std::uint64_t ran = 0;
    int attempts = 0;
    ClassifyBudgets fast;
    fast.count_attaining = false;
    while (ran < static_cast<std::uint64_t>(fixtures) && attempts++ < 50 * fixtures) {
        int n = pick(rng, 3, 6);
        int r = pick(rng, 1, n - 1);
        std::vector<std::uint64_t> rows;
        for (int j = 0; j < r; ++j)
            rows.push_back(static_cast<std::uint64_t>(pick(rng, 1, (1 << n) - 1)));
        BinaryCode raw(BitMatrix::from_row_masks(rows, n));
        if (raw.k() < 1) continue;
        BinaryCode base = puncture_zero_coords(raw).punctured;  // no zero coordinates
        int t = pick(rng, 1, 2);
        if (base.r() + t > 6) continue;  // keep the padded search exact

        // pad with t zero columns at random positions
        int nn = base.n() + t;
        std::vector<int> cols(nn);
        std::iota(cols.begin(), cols.end(), 0);
        std::shuffle(cols.begin(), cols.end(), rng);
        std::vector<int> zero_cols(cols.begin(), cols.begin() + t);
        std::sort(zero_cols.begin(), zero_cols.end());
        BitMatrix padded(0, nn);
        for (int j = 0; j < base.pcm().rows(); ++j) {
            std::uint64_t mask = 0;
            int src = 0;
            for (int i = 0; i < nn; ++i) {
                if (std::binary_search(zero_cols.begin(), zero_cols.end(), i)) continue;
                if (base.pcm().get(j, src++)) mask |= std::uint64_t{1} << i;
            }
            padded.append_row_mask(mask);
        }
        for (int i : zero_cols) padded.append_row_mask(std::uint64_t{1} << i);
        BinaryCode code(padded);
        ++ran;

        Channel ch = kAllChannels[ran % 4];
        auto rp = classify(base, ch, fast);
        auto rc = classify(code, ch, fast);
        if (rp.rho.has_value() != rc.rho.has_value()) {
            f.note("finiteness differs under padding for " + describe(base.pcm()));
            continue;
        }
        if (rp.rho && (!(*rp.rho <= *rc.rho) || !(*rc.rho <= *rp.rho + t)))
            f.note("rho sandwich violated for " + describe(base.pcm()));
    }
    return finish("puncturing", ran, f);
}

PropertyResult suite_hamming_parity() {
    Fail f;
    for (int m = 3; m <= 7; ++m)
        if (!lemma9_check(m).ok) f.note("closed form fails at m=" + std::to_string(m));
    return finish("hamming-parity", 5, f);
}

}  // namespace

std::vector<PropertyResult> run_property_suites(std::uint64_t seed, int fixtures) {
    Rng rng(seed);
    std::vector<PropertyResult> out;
    out.push_back(suite_relations(rng, fixtures));
    out.push_back(suite_distance_two(rng, fixtures));
    out.push_back(suite_weight2(rng, fixtures));
    out.push_back(suite_weight2_plus1(rng, fixtures));
    out.push_back(suite_counterexample());
    out.push_back(suite_low_dimension(rng, fixtures));
    out.push_back(suite_monotonicity(rng, fixtures));
    out.push_back(suite_point_soundness(rng, fixtures));
    out.push_back(suite_kronecker(rng, std::min(fixtures, 30)));
    out.push_back(suite_puncturing(rng, std::min(fixtures, 24)));
    out.push_back(suite_hamming_parity());
    return out;
}

}  // namespace pcr
