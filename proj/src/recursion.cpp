#include "ppgf/recursion.hpp"

#include <mutex>

namespace ppgf {

Monomial staircase_monomial(int a, int c, int k) {
    if (k < 1) throw std::invalid_argument("staircase_monomial: k must be >= 1");
    if (a < 0 || a > k || c < 0 || c > k)
        throw std::invalid_argument("staircase_monomial: index out of range");
    ContextPtr ctx = grid_context(k);
    Exponents e(2 * k, 0);
    for (int i = 0; i < a; ++i) e[i] = 1;
    for (int i = 0; i < c; ++i) e[k + i] = 1;
    return Monomial(ctx, std::move(e));
}

FactoredDenominator denominator_Dk(int k) {
    if (k < 1) throw std::invalid_argument("denominator_Dk: k must be >= 1");
    FactoredDenominator d(grid_context(k));
    for (int a = 1; a <= k; ++a)
        for (int c = 0; c <= a; ++c)
            d.insert(staircase_monomial(a, c, k));
    return d;
}

SubstitutionPlan substitution_plan(int r, int k) {
    if (k < 1 || r < 1 || r >= k)
        throw std::invalid_argument("substitution_plan: need 1 <= r < k");
    ContextPtr ctx = grid_context(k);
    SubstitutionPlan plan;
    plan.r = r;
    plan.k = k;
    plan.images.emplace("x1", staircase_monomial(r + 1, r, k));
    for (int j = 2; j <= k - r; ++j)
        plan.images.emplace("x" + std::to_string(j),
                            variable_monomial(ctx, "x" + std::to_string(r + j)));
    for (int j = 1; j <= k - r; ++j)
        plan.images.emplace("y" + std::to_string(j),
                            variable_monomial(ctx, "y" + std::to_string(r + j)));
    return plan;
}

namespace {

// width-j generating function rewritten in the 2k-variable context; j = 0
// denotes the empty pair, i.e. the constant 1
FactoredGF embed_Q(int j, const ContextPtr& ctx) {
    if (j == 0) return FactoredGF::one(ctx);
    return gf_substitute(compute_Q(j), ctx, {});
}

FactoredGF build_Q(int k) {
    ContextPtr ctx = grid_context(k);

    // x_k * Q_{k-1} / (1 - p_k)
    FactoredDenominator d0(ctx);
    d0.insert(staircase_monomial(k, 0, k));
    FactoredGF acc(Polynomial::variable(ctx, "x" + std::to_string(k)), d0);
    acc = gf_mul(acc, embed_Q(k - 1, ctx));

    // the lower row detaches after column r with i columns left on top
    for (int r = 1; r <= k; ++r) {
        for (int i = 0; i < r; ++i) {
            FactoredDenominator den(ctx);
            den.insert(staircase_monomial(k, 0, k));
            den.insert(staircase_monomial(r, r, k));
            Polynomial num = Polynomial::from_monomial(
                staircase_monomial(k, 0, k).times(staircase_monomial(0, r, k)));
            FactoredGF term(std::move(num), std::move(den));
            term = gf_mul(term, embed_Q(i, ctx));
            if (k - r > 0) {
                SubstitutionPlan plan = substitution_plan(r, k);
                term = gf_mul(term, gf_substitute(compute_Q(k - r), ctx, plan.images));
            }
            acc = gf_reduce(gf_add(acc, term));
        }
    }
    return gf_reduce(acc);
}

}  // namespace

const FactoredGF& compute_Q(int k) {
    if (k < 1) throw std::invalid_argument("compute_Q: k must be >= 1");
    static std::mutex mu;
    static std::map<int, FactoredGF> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(k);
        if (it != memo.end()) return it->second;
    }
    // built outside the lock: build_Q recurses into compute_Q for smaller k
    FactoredGF value = build_Q(k);
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = memo.emplace(k, std::move(value));
    return it->second;  // a racing builder computed the same value
}

FactoredGF compute_Qtilde(int k) {
    if (k < 1) throw std::invalid_argument("compute_Qtilde: k must be >= 1");
    ContextPtr ctx = grid_context(k);
    FactoredGF acc = FactoredGF::one(ctx);  // the width-0 term
    for (int j = 1; j <= k; ++j)
        acc = gf_reduce(gf_add(acc, embed_Q(j, ctx)));
    return acc;
}

FactoredGF specialize_single_y(const FactoredGF& g, int k) {
    ContextPtr target = single_y_context(k);
    std::map<std::string, Monomial> images;
    for (int i = 1; i <= k; ++i)
        images.emplace("y" + std::to_string(i), variable_monomial(target, "y"));
    return gf_substitute(g, target, images);
}

FactoredDenominator specialize_single_y(const FactoredDenominator& d, int k) {
    // route through a trivial-numerator gf to reuse the image machinery
    FactoredGF g(Polynomial::constant(d.context(), 1), d);
    return specialize_single_y(g, k).den;
}

FactoredDenominator single_y_staircase_denominator(int k) {
    if (k < 1) throw std::invalid_argument("single_y_staircase_denominator: k must be >= 1");
    ContextPtr ctx = single_y_context(k);
    FactoredDenominator d(ctx);
    for (int m = 1; m <= k; ++m) {
        for (int j = 0; j <= m; ++j) {
            Exponents e(ctx->arity(), 0);
            for (int i = 0; i < m; ++i) e[i] = 1;
            e[k] = j;
            d.insert(e);
        }
    }
    return d;
}

Polynomial numerator(int k, bool tilde) {
    const FactoredGF& g = compute_Q(k);
    if (!tilde) return gf_clear_to(g, denominator_Dk(k));
    return gf_clear_to(compute_Qtilde(k), denominator_Dk(k));
}

}  // namespace ppgf
