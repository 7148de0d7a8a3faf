#include "pcr/pseudoweight.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

#include "pcr/errors.hpp"

namespace pcr {

const char* channel_name(Channel ch) {
    switch (ch) {
        case Channel::BEC: return "bec";
        case Channel::AWGNC: return "awgnc";
        case Channel::BSC: return "bsc";
        case Channel::MAXFRAC: return "maxfrac";
    }
    return "?";
}

std::optional<Channel> channel_from_string(const std::string& s) {
    if (s == "bec") return Channel::BEC;
    if (s == "awgnc") return Channel::AWGNC;
    if (s == "bsc") return Channel::BSC;
    if (s == "maxfrac") return Channel::MAXFRAC;
    return std::nullopt;
}

Rat pseudoweight_eval(const RatVec& x, Channel ch) {
    bool nonzero = false;
    for (const auto& v : x) {
        assert(v >= 0);
        if (v != 0) nonzero = true;
    }
    if (!nonzero) throw ZeroVector("pseudoweight_eval: zero vector");

    switch (ch) {
        case Channel::BEC: {
            int supp = 0;
            for (const auto& v : x)
                if (v != 0) ++supp;
            return Rat(supp);
        }
        case Channel::AWGNC: {
            Rat s = 0, sq = 0;
            for (const auto& v : x) {
                s += v;
                sq += v * v;
            }
            return s * s / sq;
        }
        case Channel::MAXFRAC: {
            Rat s = 0, mx = 0;
            for (const auto& v : x) {
                s += v;
                if (v > mx) mx = v;
            }
            return s / mx;
        }
        case Channel::BSC: {
            RatVec sorted = x;
            std::sort(sorted.begin(), sorted.end(), std::greater<Rat>());
            Rat half = 0;
            for (const auto& v : sorted) half += v;
            half /= 2;
            Rat cum = 0;
            for (std::size_t i = 0; i < sorted.size(); ++i) {
                if (cum + sorted[i] >= half)
                    return 2 * (Rat(static_cast<long>(i)) + (half - cum) / sorted[i]);
                cum += sorted[i];
            }
            break;  // unreachable: cum reaches the total >= half
        }
    }
    assert(false);
    return 0;
}

Rat pseudoweight_eval(const std::vector<Int>& x, Channel ch) {
    RatVec q(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) q[i] = Rat(x[i]);
    return pseudoweight_eval(q, ch);
}

PseudoweightReport min_pseudoweights_from_rays(int n, const std::vector<Ray>& rays) {
    PseudoweightReport rep;
    rep.n = n;
    rep.num_rays = rays.size();
    // rays are sorted, so the first strict improvement is automatically the
    // lexicographically smallest witness of the final minimum.
    for (const Ray& r : rays) {
        for (Channel ch : kAllChannels) {
            Rat w = pseudoweight_eval(r.coords, ch);
            auto& slot = rep.mins[static_cast<int>(ch)];
            if (!slot || w < slot->wmin) slot = ChannelMin{w, r};
        }
    }
    return rep;
}

PseudoweightReport min_pseudoweights(const BitMatrix& h) {
    auto rays = extreme_rays(fundamental_cone_system(h));
    PseudoweightReport rep = min_pseudoweights_from_rays(h.cols(), rays);
    BinaryCode code(h);
    if (code.k() >= 1) rep.d = min_distance(code);
    return rep;
}

bool matrix_attains(const BitMatrix& h, Channel ch, const Rat& d) {
    return !find_violating_ray(h, ch, d).has_value();
}

std::optional<Ray> find_violating_ray(const BitMatrix& h, Channel ch, const Rat& d) {
    auto rays = extreme_rays(fundamental_cone_system(h));
    for (const Ray& r : rays)
        if (pseudoweight_eval(r.coords, ch) < d) return r;
    return std::nullopt;
}

Rat maxfrac_min_weight2plus1(const BitMatrix& h) {
    const int m = h.rows();
    bool all2 = true;
    for (int j = 0; j < m && all2; ++j) all2 = h.row_weight(j) == 2;

    if (all2) {
        // Pure weight-2 matrix: the minimum is the smallest class size.
        return Rat(weight2_equiv_classes(h).min_size());
    }

    BitMatrix head(0, h.cols());
    for (int j = 0; j + 1 < m; ++j) {
        if (h.row_weight(j) != 2)
            throw PreconditionViolated("maxfrac_min_weight2plus1: row " + std::to_string(j) +
                                       " of the leading block has weight != 2");
        head.append_row(h, j);
    }
    EquivClasses classes = weight2_equiv_classes(head);

    std::vector<int> last = h.row_support(m - 1);
    std::vector<int> met_once_sizes, untouched_sizes;
    for (std::size_t ci = 0; ci < classes.classes.size(); ++ci) {
        int hits = 0;
        for (int col : classes.classes[ci])
            if (std::binary_search(last.begin(), last.end(), col)) ++hits;
        if (hits >= 2)
            throw PreconditionViolated(
                "maxfrac_min_weight2plus1: last row meets an equivalence class " +
                std::to_string(hits) + " times");
        (hits == 1 ? met_once_sizes : untouched_sizes).push_back(classes.sizes[ci]);
    }

    std::sort(met_once_sizes.begin(), met_once_sizes.end());
    bool have = false;
    long best = 0;
    if (met_once_sizes.size() >= 2) {
        best = met_once_sizes[0] + met_once_sizes[1];
        have = true;
    }
    for (int s : untouched_sizes)
        if (!have || s < best) {
            best = s;
            have = true;
        }
    if (!have) throw EmptyCone("maxfrac_min_weight2plus1: minimization over an empty set");
    return Rat(best);
}

namespace {

// Appends the |s|-1 chain rows x_{i_j} + x_{i_{j+1}} over a sorted support s.
void append_chain(BitMatrix& out, const std::vector<int>& s) {
    for (std::size_t j = 0; j + 1 < s.size(); ++j) {
        BitMatrix row(1, out.cols());
        row.set(0, s[j], true);
        row.set(0, s[j + 1], true);
        out.append_row(row, 0);
    }
}

}  // namespace

BitMatrix dimension2_matrix(const BinaryCode& c) {
    if (c.k() != 2) throw DimensionNot2("dimension2_matrix: code dimension is not 2");
    const int n = c.n();
    const BitMatrix& gen = c.generator();

    std::vector<int> s1, s2, s3, zeros;
    for (int i = 0; i < n; ++i) {
        bool a = gen.get(0, i), b = gen.get(1, i);
        if (a && b)
            s3.push_back(i);
        else if (a)
            s1.push_back(i);
        else if (b)
            s2.push_back(i);
        else
            zeros.push_back(i);
    }

    BitMatrix out(0, n);
    append_chain(out, s1);
    append_chain(out, s2);
    append_chain(out, s3);
    // The linking row is needed (and kernel-preserving) only when all three
    // classes are nonempty: each nonzero codeword covers exactly two of them.
    // With two classes the chain rows alone already have kernel C.
    if (!s1.empty() && !s2.empty() && !s3.empty()) {
        BitMatrix h4(1, n);
        h4.set(0, s1.front(), true);
        h4.set(0, s2.front(), true);
        h4.set(0, s3.front(), true);
        out.append_row(h4, 0);
    }
    for (int z : zeros) {
        BitMatrix row(1, n);
        row.set(0, z, true);
        out.append_row(row, 0);
    }
    assert(out.rows() == n - 2);
    return out;
}

}  // namespace pcr
