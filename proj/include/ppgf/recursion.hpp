#pragma once

#include "ppgf/ratgf.hpp"

namespace ppgf {

// x1*...*xa * y1*...*yc inside the 2k-variable grid context; requires
// 0 <= c, a <= k and a >= 1 when c = 0 is not forced (the degenerate a = c = 0
// monomial is allowed and equals 1)
Monomial staircase_monomial(int a, int c, int k);

// the full staircase denominator: one factor 1 - x1..xa*y1..yc for every
// 1 <= a <= k, 0 <= c <= a
FactoredDenominator denominator_Dk(int k);

// variable images used to re-root a width-j generating function after the
// top row drops below r columns: x1 -> x1..x_{r+1}*y1..y_r, x_j -> x_{r+j},
// y_j -> y_{r+j}
struct SubstitutionPlan {
    int r = 0;
    int k = 0;
    std::map<std::string, Monomial> images;  // into grid_context(k)
};

SubstitutionPlan substitution_plan(int r, int k);

// generating function of pairs whose top row has length exactly k
// (memoized; safe to call from several threads)
const FactoredGF& compute_Q(int k);

// top row of length at most k
FactoredGF compute_Qtilde(int k);

// y1, ..., yk all mapped to a single variable y
FactoredGF specialize_single_y(const FactoredGF& g, int k);
FactoredDenominator specialize_single_y(const FactoredDenominator& d, int k);

// product form the specialized staircase denominator must match:
// (1 - p_m y^j) over 1 <= m <= k, 0 <= j <= m, with p_m = x1..xm
FactoredDenominator single_y_staircase_denominator(int k);

// numerator over the staircase denominator denominator_Dk(k)
Polynomial numerator(int k, bool tilde);

}  // namespace ppgf
