#include "pcr/redundancy.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "pcr/enumeration.hpp"
#include "pcr/errors.hpp"
#include "pcr/matrix_io.hpp"

namespace pcr {

namespace {

// full-rank r x n parity-check matrix of the code (row echelon form)
BitMatrix minimal_pcm(const BinaryCode& code) {
    auto rr = rref_and_rank(code.pcm());
    BitMatrix out(0, code.n());
    for (int j = 0; j < rr.rank; ++j) out.append_row(rr.reduced, j);
    return out;
}

// all 2^r - 1 nonzero dual codewords as column masks, sorted
std::vector<std::uint64_t> dual_words_of(const BinaryCode& code) {
    auto rr = rref_and_rank(code.pcm());
    std::vector<std::uint64_t> words;
    for (std::uint32_t s = 1; s < (1u << rr.rank); ++s) {
        std::uint64_t w = 0;
        for (int j = 0; j < rr.rank; ++j)
            if ((s >> j) & 1u) w ^= rr.reduced.row_mask(j);
        words.push_back(w);
    }
    std::sort(words.begin(), words.end());
    return words;
}

struct LevelResult {
    std::optional<std::uint64_t> first_attaining;  // smallest attaining subset mask
    std::uint64_t attaining = 0;                   // attaining orbit count (exact mode)
    std::uint64_t total = 0;                       // orbit / subset count inspected
    bool all_checked = true;
    bool any_fail = false;
};

// Known-bad rays of the current code/channel: each has pseudoweight < d, so
// any candidate matrix whose cone contains one of them fails without an
// extreme-ray computation. Rays found so far are shared across rho levels.
class BadRayPool {
public:
    bool proves_failure(const ConeSystem& s) const {
        for (const auto& r : rays_)
            if (cone_contains(s, r)) return true;
        return false;
    }
    void add(std::vector<Int> ray) {
        if (seen_.insert(ray).second) rays_.push_back(std::move(ray));
    }

private:
    std::vector<std::vector<Int>> rays_;
    std::set<std::vector<Int>> seen_;
};

bool subset_attains(const DualContext& ctx, std::uint64_t mask, Channel ch, const Rat& d,
                    BadRayPool& pool) {
    BitMatrix h = ctx.matrix_for(mask);
    auto s = fundamental_cone_system(h);
    if (pool.proves_failure(s)) return false;
    auto bad = find_violating_ray(h, ch, d);
    if (bad) {
        pool.add(std::move(bad->coords));
        return false;
    }
    return true;
}

// exact mode: orbit representatives at the given rho. count_all scans the
// whole level (exact attaining count); otherwise the scan stops once the
// level's outcome — and, at the minimal level, the class-2/3 distinction —
// is decided.
LevelResult run_level_exact(const DualContext& ctx, int rho, Channel ch, const Rat& d,
                            BadRayPool& pool, bool count_all, bool need_fail_info) {
    auto reps = pcm_orbits(ctx, rho);
    LevelResult res;
    res.total = reps.size();
    for (const auto& rep : reps) {
        if (subset_attains(ctx, rep.subset_mask, ch, d, pool)) {
            ++res.attaining;
            if (!res.first_attaining) res.first_attaining = rep.subset_mask;
        } else {
            res.any_fail = true;
        }
        if (!count_all && res.first_attaining && (res.any_fail || !need_fail_info)) break;
    }
    return res;
}

// streaming mode (r = 6): no orbit deduplication, budgeted. When
// want_all_checked is set the whole level is scanned (class-3 test);
// otherwise the scan stops at the first attaining subset.
LevelResult run_level_streamed(const DualContext& ctx, int rho, Channel ch, const Rat& d,
                               BadRayPool& pool, std::uint64_t budget, bool want_all_checked) {
    LevelResult res;
    for_each_full_rank_subset(ctx, rho, [&](std::uint64_t mask) {
        if (res.total++ >= budget) {
            res.all_checked = false;
            return false;
        }
        if (subset_attains(ctx, mask, ch, d, pool)) {
            ++res.attaining;
            if (!res.first_attaining) res.first_attaining = mask;
            if (!want_all_checked) return false;
        } else {
            res.any_fail = true;
            if (want_all_checked && res.first_attaining) return false;  // class 2 decided
        }
        return true;
    });
    if (!want_all_checked && res.first_attaining) res.all_checked = true;
    return res;
}

// class-2/3 decision for a code already known to have rho = r, with the
// witness found elsewhere
void decide_minimal_class(const BinaryCode& code, Channel ch, const ClassifyBudgets& budgets,
                          RedundancyResult& res) {
    res.code_class = 2;
    if (code.r() > 6 || code.n() > 10) {
        res.class_exact = false;
        return;
    }
    DualContext ctx(code);
    Rat d(res.d);
    BadRayPool pool;
    if (code.r() <= 5) {
        auto lvl = run_level_exact(ctx, code.r(), ch, d, pool, budgets.count_attaining, true);
        if (budgets.count_attaining) res.attaining_count = lvl.attaining;
        res.code_class = lvl.any_fail ? 2 : 3;
    } else {
        auto lvl = run_level_streamed(ctx, code.r(), ch, d, pool, budgets.subset_budget, true);
        if (lvl.any_fail)
            res.code_class = 2;
        else if (lvl.all_checked)
            res.code_class = 3;
        else
            res.class_exact = false;
    }
}

}  // namespace

BitMatrix dimension1_matrix(const BinaryCode& code) {
    if (code.k() != 1) throw DimensionNot2("dimension1_matrix: k != 1");
    const int n = code.n();
    std::uint64_t c = code.generator().row_mask(0);
    BitMatrix h(0, n);
    int prev = -1;
    for (int i = 0; i < n; ++i) {
        if ((c >> i) & 1u) {
            if (prev >= 0) h.append_row_mask((std::uint64_t{1} << prev) | (std::uint64_t{1} << i));
            prev = i;
        } else {
            h.append_row_mask(std::uint64_t{1} << i);
        }
    }
    return h;
}

RedundancyResult classify(const BinaryCode& code, Channel ch, const ClassifyBudgets& budgets) {
    if (code.n() > 24) throw DimensionCap("classify: n > 24");
    if (code.k() < 1) throw PreconditionViolated("classify: zero code");
    if (code.r() > 8) throw DimensionCap("classify: r > 8 (all-dual-rows matrix too large)");

    RedundancyResult res;
    res.channel = ch;
    res.n = code.n();
    res.k = code.k();
    res.d = min_distance(code);
    const int r = code.r();

    if (res.d <= 2) {  // every parity-check matrix attains d
        res.rho = r;
        res.code_class = 3;
        res.witness = minimal_pcm(code);
        return res;
    }

    if (code.k() <= 2) {  // analytic r-row matrix attaining d on every channel
        res.rho = r;
        res.witness = code.k() == 1 ? dimension1_matrix(code) : dimension2_matrix(code);
        decide_minimal_class(code, ch, budgets, res);
        return res;
    }

    // class-0 test: the all-dual-rows matrix yields the largest wmin
    auto words = dual_words_of(code);
    BitMatrix all_rows = BitMatrix::from_row_masks(words, code.n());
    Rat d(res.d);
    if (!matrix_attains(all_rows, ch, d)) {
        res.code_class = 0;
        auto cert = min_pseudoweights(all_rows);
        res.cert_wmin = cert.channel(ch)->wmin;
        res.cert_witness = cert.channel(ch)->witness;
        return res;
    }

    if (r > 6 || code.n() > 10)
        throw BudgetExceeded("classify: rho is finite (between " + std::to_string(r) + " and " +
                             std::to_string(words.size()) +
                             ") but the exact search needs r <= 6 and n <= 10");

    DualContext ctx(code);
    BadRayPool pool;
    int rho_max = ctx.num_words();
    if (budgets.rho_cap > 0) rho_max = std::min(rho_max, budgets.rho_cap);
    for (int rho = r; rho <= rho_max; ++rho) {
        LevelResult lvl;
        bool exact = r <= 5;
        if (exact)
            lvl = run_level_exact(ctx, rho, ch, d, pool, budgets.count_attaining, rho == r);
        else
            lvl = run_level_streamed(ctx, rho, ch, d, pool, budgets.subset_budget, rho == r);
        if (lvl.first_attaining) {
            res.rho = rho;
            res.witness = ctx.matrix_for(*lvl.first_attaining);
            if (exact && budgets.count_attaining) res.attaining_count = lvl.attaining;
            if (rho > r) {
                res.code_class = 1;
            } else if (lvl.any_fail) {
                res.code_class = 2;
            } else if (lvl.all_checked) {
                res.code_class = 3;
            } else {
                res.code_class = 2;
                res.class_exact = false;
            }
            return res;
        }
        if (!lvl.all_checked)
            throw BudgetExceeded("classify: subset budget exhausted at rho = " + std::to_string(rho) +
                                 " with no attaining matrix found; rho is in [" + std::to_string(rho) +
                                 ", " + std::to_string(ctx.num_words()) + "]");
    }
    throw BudgetExceeded("classify: rho cap " + std::to_string(rho_max) +
                         " reached with no attaining matrix; the all-dual-rows matrix attains, so "
                         "rho is in (" + std::to_string(rho_max) + ", " +
                         std::to_string(ctx.num_words()) + "]");
}

RedundancyResult pseudoredundancy(const BinaryCode& code, Channel ch,
                                  const ClassifyBudgets& budgets) {
    return classify(code, ch, budgets);
}

std::vector<SurveyRow> survey(int n_max, Channel ch, const ClassifyBudgets& budgets) {
    std::vector<SurveyRow> rows;
    for (int n = 3; n <= n_max; ++n) {
        for (int k = 1; k < n; ++k) {
            for (const auto& rep : code_orbits(n, n - k)) {
                BinaryCode code(rep.pcm);
                code.set_distance(rep.d);
                auto cl = classify(code, ch, budgets);
                SurveyRow row;
                row.n = n;
                row.k = k;
                row.d = rep.d;
                row.channel = ch;
                row.rho = cl.rho;
                row.code_class = cl.code_class;
                row.class_exact = cl.class_exact;
                row.witness = cl.witness;
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

std::string survey_csv(const std::vector<SurveyRow>& rows) {
    std::ostringstream out;
    out << "n,k,d,channel,rho,class,witness\n";
    for (const auto& r : rows) {
        out << r.n << ',' << r.k << ',' << r.d << ',' << channel_name(r.channel) << ',';
        if (r.rho)
            out << *r.rho;
        else
            out << "inf";
        out << ',' << r.code_class << ',';
        if (r.witness) out << to_base64(*r.witness);
        out << '\n';
    }
    return out.str();
}

}  // namespace pcr
