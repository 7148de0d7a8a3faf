#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcr/binary_code.hpp"
#include "pcr/bitmatrix.hpp"
#include "pcr/cone.hpp"
#include "pcr/pseudoweight.hpp"

namespace pcr {

struct ClassifyBudgets {
    // maximum number of streamed full-rank subsets per rho level when exact
    // orbit enumeration is unavailable (r = 6)
    std::uint64_t subset_budget = 200'000'000;
    // optional hard ceiling on the searched rho (0 = up to 2^r - 1)
    int rho_cap = 0;
    // count every attaining matrix at the decisive rho level; turning this
    // off lets the search stop a level early and leaves attaining_count unset
    bool count_attaining = true;
};

// Classification of a code on one channel.
//   class 0: no parity-check matrix attains d  (rho = infinite, nullopt)
//   class 1: rho finite but > r
//   class 2: rho = r, but some r-row matrix fails
//   class 3: every parity-check matrix attains d
// class_exact = false means the class-2/3 distinction at rho = r was not
// verified (the reported class is then 2).
struct RedundancyResult {
    Channel channel = Channel::BEC;
    int n = 0;
    int k = 0;
    int d = 0;
    std::optional<int> rho;  // nullopt = infinite
    int code_class = 0;
    bool class_exact = true;
    std::optional<BitMatrix> witness;  // rho-row matrix attaining d, when finite
    // number of attaining matrices (up to equivalence) at the final rho,
    // when exact orbit enumeration was used
    std::optional<std::uint64_t> attaining_count;
    // class-0 certificate: minimum pseudoweight of the all-dual-rows matrix
    // (strictly below d) and a ray attaining it
    std::optional<Rat> cert_wmin;
    std::optional<Ray> cert_witness;
};

// (n-1) x n matrix for a one-dimensional code: a weight-2 chain along the
// support of the generator plus weight-1 rows at zero coordinates. Its
// minimum pseudoweight equals d on every channel. Throws DimensionNot2 if
// k != 1 (shared error type for the analytic constructions).
BitMatrix dimension1_matrix(const BinaryCode& code);

RedundancyResult classify(const BinaryCode& code, Channel ch, const ClassifyBudgets& budgets = {});
// Same search core as classify; exposed separately for the CLI.
RedundancyResult pseudoredundancy(const BinaryCode& code, Channel ch,
                                  const ClassifyBudgets& budgets = {});

struct SurveyRow {
    int n = 0;
    int k = 0;
    int d = 0;
    Channel channel = Channel::BEC;
    std::optional<int> rho;
    int code_class = 0;
    bool class_exact = true;
    std::optional<BitMatrix> witness;
};

// Classifies every [n, k, d >= 3] code without zero coordinates for
// 3 <= n <= n_max, in deterministic order (ascending n, k, canonical code).
std::vector<SurveyRow> survey(int n_max, Channel ch, const ClassifyBudgets& budgets = {});

// CSV with header n,k,d,channel,rho,class,witness; rho is "inf" for
// class 0; the witness is the base64 packing of the matrix.
std::string survey_csv(const std::vector<SurveyRow>& rows);

}  // namespace pcr
