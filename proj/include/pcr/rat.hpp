#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace pcr {

// Exact rational scalar. All cone and pseudoweight arithmetic is exact;
// doubles only appear in the spectral code.
using Rat = mpq_class;
using Int = mpz_class;

using RatVec = std::vector<Rat>;

// "p" or "p/q", always in lowest terms with q > 0.
inline std::string rat_to_string(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
    Rat r(s);
    r.canonicalize();
    return r;
}

}  // namespace pcr
