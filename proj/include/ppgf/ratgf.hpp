#pragma once

#include "ppgf/multipoly.hpp"

namespace ppgf {

// Multiset of monomial factors m, standing for the product of (1 - m).
// Factors are keyed by exponent vector with a positive multiplicity.
class FactoredDenominator {
public:
    using FactorMap = std::map<Exponents, int, GradedLexLess>;

    explicit FactoredDenominator(ContextPtr ctx);

    const ContextPtr& context() const { return ctx_; }
    const FactorMap& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }
    // number of factors counted with multiplicity
    int size() const;
    int multiplicity(const Exponents& e) const;

    void insert(const Monomial& m, int mult = 1);
    void insert(const Exponents& e, int mult = 1);

    // product of (1 - m)^mult as a polynomial
    Polynomial expanded() const;

    bool operator==(const FactoredDenominator& o) const;
    bool operator!=(const FactoredDenominator& o) const { return !(*this == o); }

    std::string str() const;
    nlohmann::json to_json() const;

private:
    ContextPtr ctx_;
    FactorMap factors_;
};

// per-factor maximum of the two multiplicities (least common multiple of the
// denominators as products)
FactoredDenominator max_union(const FactoredDenominator& a,
                              const FactoredDenominator& b);
// multiset sum
FactoredDenominator multiset_sum(const FactoredDenominator& a,
                                 const FactoredDenominator& b);
// multiset difference a - b; throws when b is not contained in a
FactoredDenominator multiset_diff(const FactoredDenominator& a,
                                  const FactoredDenominator& b);

// num / prod (1 - m)^mult, exact rational form
struct FactoredGF {
    Polynomial num;
    FactoredDenominator den;

    FactoredGF(Polynomial n, FactoredDenominator d);
    static FactoredGF one(const ContextPtr& ctx);
    static FactoredGF from_polynomial(Polynomial p);

    const ContextPtr& context() const { return num.context(); }

    std::string str() const;
    nlohmann::json to_json() const;
};

FactoredGF gf_add(const FactoredGF& a, const FactoredGF& b);
FactoredGF gf_mul(const FactoredGF& a, const FactoredGF& b);
FactoredGF gf_substitute(const FactoredGF& g, const ContextPtr& target,
                         const std::map<std::string, Monomial>& images);
// divides the numerator by every denominator factor that divides it exactly
FactoredGF gf_reduce(const FactoredGF& g);
// Taylor expansion: terms of total degree <= bound.  Requires every factor
// monomial to be nonconstant with nonnegative exponents.
Polynomial gf_series(const FactoredGF& g, int bound);
// numerator of g rewritten over the given denominator; throws when the
// reduced denominator of g is not contained in target
Polynomial gf_clear_to(const FactoredGF& g, const FactoredDenominator& target);

}  // namespace ppgf
