#pragma once

#include "ppgf/ratgf.hpp"

namespace ppgf {

// one summand  coeff * X^num / prod (1 - X^f)  where exponent vectors are
// Laurent (entries may be negative) over the enclosing context
struct CrudeTerm {
    Int coeff = 1;
    Exponents num;
    std::vector<Exponents> factors;
};

// sum of CrudeTerms; the closure class of the positive-part extraction below
class CrudeForm {
public:
    explicit CrudeForm(ContextPtr ctx);

    const ContextPtr& context() const { return ctx_; }
    const std::vector<CrudeTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add_term(CrudeTerm t);
    // sorts factor lists and terms, merges identical (num, factors) pairs,
    // drops zero coefficients
    void normalize();

    std::string str() const;

private:
    ContextPtr ctx_;
    std::vector<CrudeTerm> terms_;
};

// nonnegative-part extraction in the variable v followed by v = 1.  Every
// factor must carry v with exponent -1, 0 or +1; the numerator exponent of v
// is unrestricted.  The result is v-free (exponent 0 everywhere) and lives in
// the same context.
CrudeForm omega_eliminate(const CrudeForm& e, const std::string& v);

// generating function of a 2-by-n grid of column-strict box counts,
// numbered x{row}{col}
struct BoxGF {
    int cols = 0;
    FactoredGF value;
};

ContextPtr box_context(int n);
// p_{2,1} = 1 / ((1 - x11)(1 - x11*x21))
BoxGF box_base();
// four-factor crude form for the 2x2 box, eliminated one auxiliary variable
// at a time (mu11, mu12, l11, l21)
BoxGF p22_via_omega();
// widens a 2-by-n value to 2-by-(n+1) by re-weighting the last column,
// dividing by the new column's factors and eliminating the two auxiliaries
BoxGF ap_step(const BoxGF& p, int n);

}  // namespace ppgf
