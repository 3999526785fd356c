#pragma once

// shared helpers for the test suite: exact linear algebra for unimodularity
// and coverage checks, a seeded random polynomial source, and an independent
// Laurent-series oracle for the positive-part elimination engine

#include "ppgf/multipoly.hpp"
#include "ppgf/omega.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <random>

namespace ppgf::testing {

using Rational = boost::multiprecision::cpp_rational;

// exact determinant by fraction-free Bareiss elimination
inline Int determinant(std::vector<std::vector<Int>> m) {
    const std::size_t n = m.size();
    Int sign = 1, prev = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (m[i][i] == 0) {
            std::size_t p = i + 1;
            while (p < n && m[p][i] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[i], m[p]);
            sign = -sign;
        }
        for (std::size_t r = i + 1; r < n; ++r)
            for (std::size_t c = i + 1; c < n; ++c)
                m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) / prev;
        prev = m[i][i];
    }
    return n == 0 ? sign : sign * m[n - 1][n - 1];
}

// solves A x = b exactly; empty optional when A is singular
inline std::optional<std::vector<Rational>> solve_exact(
    std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

// deterministic random polynomial with small exponents and coefficients
inline Polynomial random_poly(const ContextPtr& ctx, std::mt19937& rng,
                              int max_terms = 6, int max_exp = 3) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> expd(0, max_exp);
    std::uniform_int_distribution<int> coeffd(-9, 9);
    Polynomial p(ctx);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Exponents e(ctx->arity());
        for (auto& v : e) v = expd(rng);
        int c = coeffd(rng);
        if (c == 0) c = 1;
        p.add_term(e, c);
    }
    return p;
}

// ---------------------------------------------------------------------------
// independent series semantics for crude forms
//
// Expands coeff * X^num / prod (1 - X^f) as a Laurent series, truncated by
// total degree over the designated series variables.  Every factor must have
// positive series-degree so the expansion terminates.

using LaurentSeries = std::map<Exponents, Int>;

inline int series_degree(const Exponents& e, const std::vector<bool>& counts) {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (counts[i]) d += e[i];
    return d;
}

inline LaurentSeries crude_series(const CrudeForm& form,
                                  const std::vector<bool>& counts, int bound) {
    LaurentSeries total;
    for (const auto& t : form.terms()) {
        LaurentSeries acc;
        acc[t.num] = t.coeff;
        for (const auto& f : t.factors) {
            int fd = series_degree(f, counts);
            if (fd < 1)
                throw std::invalid_argument("crude_series: factor with nonpositive series degree");
            LaurentSeries next;
            for (const auto& [e, c] : acc) {
                Exponents cur(e);
                for (int j = 0; series_degree(cur, counts) <= bound; ++j) {
                    next[cur] += c;
                    for (std::size_t i = 0; i < cur.size(); ++i) cur[i] += f[i];
                }
            }
            acc = std::move(next);
        }
        for (const auto& [e, c] : acc) {
            if (series_degree(e, counts) > bound) continue;
            total[e] += c;
            if (total[e] == 0) total.erase(e);
        }
    }
    return total;
}

// nonnegative part in variable vi, then vi := 1
inline LaurentSeries positive_part(const LaurentSeries& s, int vi) {
    LaurentSeries out;
    for (const auto& [e, c] : s) {
        if (e[vi] < 0) continue;
        Exponents r(e);
        r[vi] = 0;
        out[r] += c;
        if (out[r] == 0) out.erase(r);
    }
    return out;
}

// one corpus entry: a form, the variable to eliminate, and which variables
// grade the truncation
struct CorpusEntry {
    std::string label;
    CrudeForm form;
    std::string var;
    std::vector<bool> series_vars;
};

// fixed battery of crude forms exercising every reduction rule: Elliott
// splits, truncations, corrections with multiplicities, repeated factors,
// multi-term inputs, and the four consecutive box-elimination stages
inline std::vector<CorpusEntry> omega_corpus() {
    std::vector<CorpusEntry> corpus;
    ContextPtr c3 = make_context({"x", "y", "v"});
    std::vector<bool> xy = {true, true, false};
    auto mono3 = [&](int x, int y, int v) { return Exponents{x, y, v}; };
    auto entry3 = [&](std::string label, std::vector<CrudeTerm> terms) {
        CrudeForm f(c3);
        for (auto& t : terms) f.add_term(std::move(t));
        corpus.push_back({std::move(label), std::move(f), "v", xy});
    };
    auto term3 = [&](Int coeff, Exponents num, std::vector<Exponents> factors) {
        CrudeTerm t;
        t.coeff = std::move(coeff);
        t.num = std::move(num);
        t.factors = std::move(factors);
        return t;
    };

    entry3("elliott-basic", {term3(1, mono3(0, 0, 0), {mono3(1, 0, 1), mono3(0, 1, -1)})});
    entry3("neg-num-pos-factor", {term3(1, mono3(0, 0, -1), {mono3(1, 0, 1)})});
    entry3("pos-num-pos-factor", {term3(1, mono3(0, 0, 2), {mono3(1, 0, 1)})});
    entry3("neg-num-neg-factor", {term3(1, mono3(0, 0, -1), {mono3(0, 1, -1)})});
    entry3("pos-num-neg-factor", {term3(1, mono3(0, 0, 2), {mono3(0, 1, -1)})});
    entry3("v-free-pos-num", {term3(1, mono3(1, 0, 3), {mono3(0, 1, 0)})});
    entry3("v-free-neg-num", {term3(1, mono3(1, 0, -2), {mono3(0, 1, 0)})});
    entry3("two-pos-one-neg",
           {term3(1, mono3(0, 0, 0), {mono3(1, 0, 1), mono3(0, 1, 1), mono3(1, 1, -1)})});
    entry3("one-pos-two-neg",
           {term3(1, mono3(0, 0, 0), {mono3(1, 0, 1), mono3(1, 0, -1), mono3(0, 1, -1)})});
    entry3("repeated-pos",
           {term3(1, mono3(0, 0, 0), {mono3(1, 0, 1), mono3(1, 0, 1), mono3(0, 1, -1)})});
    entry3("repeated-neg-trunc",
           {term3(1, mono3(0, 0, 2), {mono3(0, 1, -1), mono3(0, 1, -1)})});
    entry3("neg-num-two-pos",
           {term3(1, mono3(0, 0, -2), {mono3(1, 0, 1), mono3(0, 1, 1)})});
    entry3("multi-term", {term3(2, mono3(0, 0, 0), {mono3(1, 0, 1), mono3(0, 1, -1)}),
                          term3(-1, mono3(0, 0, 1), {mono3(1, 0, 1)})});
    entry3("mixed-free",
           {term3(1, mono3(0, 0, 0), {mono3(1, 1, 0), mono3(1, 0, 1), mono3(0, 1, -1)})});
    entry3("deep-neg-num",
           {term3(1, mono3(0, 0, -3), {mono3(1, 0, 1), mono3(0, 1, 1)})});
    entry3("pole-adjacent",
           {term3(1, mono3(0, 0, 0), {mono3(1, 1, 1), mono3(0, 1, -1)})});

    // the four consecutive eliminations of the 2x2 box setup
    ContextPtr cb = make_context({"x11", "x12", "x21", "x22", "l11", "l21", "mu11", "mu12"});
    std::vector<bool> xonly(cb->arity(), false);
    for (int i = 0; i < 4; ++i) xonly[i] = true;
    auto bmono = [&](std::initializer_list<std::pair<const char*, int>> powers) {
        Exponents e(cb->arity(), 0);
        for (const auto& [name, p] : powers) e[cb->index_of(name)] = p;
        return e;
    };
    CrudeTerm seed;
    seed.num.assign(cb->arity(), 0);
    seed.factors = {
        bmono({{"x11", 1}, {"l11", 1}, {"mu11", 1}}),
        bmono({{"x21", 1}, {"l21", 1}, {"mu11", -1}}),
        bmono({{"x12", 1}, {"mu12", 1}, {"l11", -1}}),
        bmono({{"x22", 1}, {"l21", -1}, {"mu12", -1}}),
    };
    CrudeForm stage(cb);
    stage.add_term(std::move(seed));
    const char* order[] = {"mu11", "mu12", "l11", "l21"};
    for (int i = 0; i < 4; ++i) {
        corpus.push_back({std::string("p22-stage") + std::to_string(i), stage, order[i], xonly});
        if (i < 3) stage = omega_eliminate(stage, order[i]);
    }
    return corpus;
}

}  // namespace ppgf::testing
