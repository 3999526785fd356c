#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ppgf {

using Int = boost::multiprecision::cpp_int;
using Exponents = std::vector<int>;

// Named variable tuple shared by all values of one computation.  Contexts are
// immutable and handed around by shared_ptr; equality is by name sequence.
class VariableContext {
public:
    explicit VariableContext(std::vector<std::string> names,
                             std::vector<int> display_order = {});

    std::size_t arity() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    // -1 when the name is not part of this context
    int index_of(const std::string& name) const;
    // permutation applied when rendering monomials as text
    const std::vector<int>& display_order() const { return display_order_; }

    bool operator==(const VariableContext& o) const { return names_ == o.names_; }
    bool operator!=(const VariableContext& o) const { return !(*this == o); }

private:
    std::vector<std::string> names_;
    std::vector<int> display_order_;
};

using ContextPtr = std::shared_ptr<const VariableContext>;

// x1..xk, y1..yk; displayed column by column (x1, y1, x2, y2, ...)
ContextPtr grid_context(int k);
// x1..xk plus a single y (used after specializing all y_i to one variable)
ContextPtr single_y_context(int k);
ContextPtr make_context(std::vector<std::string> names);

inline int total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

// Graded lexicographic: total degree first, ties by the highest variable in
// context order (x1 < x2 < ... < y_k), i.e. reversed-sequence comparison.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.rbegin(), a.rend(),
                                            b.rbegin(), b.rend());
    }
};

class Monomial {
public:
    explicit Monomial(ContextPtr ctx);           // the constant monomial 1
    Monomial(ContextPtr ctx, Exponents exps);

    const ContextPtr& context() const { return ctx_; }
    const Exponents& exponents() const { return exps_; }
    int exponent(std::size_t i) const { return exps_.at(i); }
    int degree() const { return total_degree(exps_); }
    bool is_constant() const;

    Monomial times(const Monomial& o) const;
    Monomial pow(int e) const;

    bool operator==(const Monomial& o) const;
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    std::string str() const;

private:
    ContextPtr ctx_;
    Exponents exps_;
};

Monomial variable_monomial(const ContextPtr& ctx, const std::string& name);

// Sparse exact-arithmetic polynomial.  Terms are kept in ascending graded-lex
// order; zero coefficients are never stored.
class Polynomial {
public:
    using TermMap = std::map<Exponents, Int, GradedLexLess>;

    explicit Polynomial(ContextPtr ctx);  // zero
    static Polynomial zero(ContextPtr ctx) { return Polynomial(std::move(ctx)); }
    static Polynomial constant(ContextPtr ctx, Int c);
    static Polynomial from_monomial(const Monomial& m, Int c = 1);
    static Polynomial variable(const ContextPtr& ctx, const std::string& name);

    const ContextPtr& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    int degree() const;  // max total degree; 0 for the zero polynomial
    const Int& coefficient(const Exponents& e) const;

    void add_term(const Exponents& e, const Int& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string str() const;
    nlohmann::json to_json() const;
    static Polynomial from_json(const nlohmann::json& j);
    // parses the same surface syntax str() produces, e.g. "1 - x1^2*y1*x2"
    static Polynomial parse(const ContextPtr& ctx, const std::string& text);

private:
    ContextPtr ctx_;
    TermMap terms_;

    static const Int zero_int_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Int& c);

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
// like poly_mul but discards every product term of total degree > bound
Polynomial poly_mul_truncated(const Polynomial& a, const Polynomial& b, int bound);
// exact quotient; throws std::domain_error when b does not divide a
Polynomial poly_exact_div(const Polynomial& a, const Polynomial& b);
// image of p in target under name -> monomial; unmapped names must exist in
// target and pass through unchanged
Polynomial poly_substitute(const Polynomial& p, const ContextPtr& target,
                           const std::map<std::string, Monomial>& images);
// keeps the terms of total degree <= bound
Polynomial poly_truncate(const Polynomial& p, int bound);

void require_same_context(const ContextPtr& a, const ContextPtr& b,
                          const char* where);

}  // namespace ppgf
