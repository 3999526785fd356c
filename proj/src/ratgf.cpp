#include "ppgf/ratgf.hpp"

#include <algorithm>

namespace ppgf {

FactoredDenominator::FactoredDenominator(ContextPtr ctx) : ctx_(std::move(ctx)) {
    if (!ctx_) throw std::invalid_argument("FactoredDenominator: null context");
}

int FactoredDenominator::size() const {
    int n = 0;
    for (const auto& [e, m] : factors_) n += m;
    return n;
}

int FactoredDenominator::multiplicity(const Exponents& e) const {
    auto it = factors_.find(e);
    return it == factors_.end() ? 0 : it->second;
}

void FactoredDenominator::insert(const Monomial& m, int mult) {
    require_same_context(ctx_, m.context(), "FactoredDenominator::insert");
    insert(m.exponents(), mult);
}

void FactoredDenominator::insert(const Exponents& e, int mult) {
    if (e.size() != ctx_->arity())
        throw std::invalid_argument("FactoredDenominator::insert: exponent length mismatch");
    if (std::all_of(e.begin(), e.end(), [](int v) { return v == 0; }))
        throw std::invalid_argument("FactoredDenominator::insert: constant factor 1 - 1");
    if (mult <= 0)
        throw std::invalid_argument("FactoredDenominator::insert: multiplicity must be positive");
    factors_[e] += mult;
}

Polynomial FactoredDenominator::expanded() const {
    Polynomial r = Polynomial::constant(ctx_, 1);
    for (const auto& [e, mult] : factors_) {
        Polynomial f = Polynomial::constant(ctx_, 1);
        f.add_term(e, -1);
        for (int i = 0; i < mult; ++i) r = poly_mul(r, f);
    }
    return r;
}

bool FactoredDenominator::operator==(const FactoredDenominator& o) const {
    return *ctx_ == *o.ctx_ && factors_ == o.factors_;
}

std::string FactoredDenominator::str() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& [e, mult] : factors_) {
        if (!out.empty()) out += "*";
        out += "(1 - " + Monomial(ctx_, e).str() + ")";
        if (mult > 1) out += "^" + std::to_string(mult);
    }
    return out;
}

nlohmann::json FactoredDenominator::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [e, mult] : factors_)
        arr.push_back({{"e", e}, {"m", mult}});
    return arr;
}

FactoredDenominator max_union(const FactoredDenominator& a,
                              const FactoredDenominator& b) {
    require_same_context(a.context(), b.context(), "max_union");
    FactoredDenominator r(a);
    for (const auto& [e, m] : b.factors()) {
        int have = r.multiplicity(e);
        if (m > have) r.insert(e, m - have);
    }
    return r;
}

FactoredDenominator multiset_sum(const FactoredDenominator& a,
                                 const FactoredDenominator& b) {
    require_same_context(a.context(), b.context(), "multiset_sum");
    FactoredDenominator r(a);
    for (const auto& [e, m] : b.factors()) r.insert(e, m);
    return r;
}

FactoredDenominator multiset_diff(const FactoredDenominator& a,
                                  const FactoredDenominator& b) {
    require_same_context(a.context(), b.context(), "multiset_diff");
    FactoredDenominator r(a.context());
    for (const auto& [e, m] : a.factors()) {
        int sub = b.multiplicity(e);
        if (sub > m)
            throw std::domain_error("multiset_diff: not a sub-multiset");
        if (m - sub > 0) r.insert(e, m - sub);
    }
    // factors present in b but absent from a
    for (const auto& [e, m] : b.factors())
        if (a.multiplicity(e) < m)
            throw std::domain_error("multiset_diff: not a sub-multiset");
    return r;
}

// ---------------------------------------------------------------------------

FactoredGF::FactoredGF(Polynomial n, FactoredDenominator d)
    : num(std::move(n)), den(std::move(d)) {
    require_same_context(num.context(), den.context(), "FactoredGF");
}

FactoredGF FactoredGF::one(const ContextPtr& ctx) {
    return FactoredGF(Polynomial::constant(ctx, 1), FactoredDenominator(ctx));
}

FactoredGF FactoredGF::from_polynomial(Polynomial p) {
    FactoredDenominator d(p.context());
    return FactoredGF(std::move(p), std::move(d));
}

std::string FactoredGF::str() const {
    if (den.empty()) return num.str();
    return "(" + num.str() + ") / " + den.str();
}

nlohmann::json FactoredGF::to_json() const {
    return {{"num", num.to_json()}, {"den", den.to_json()}};
}

FactoredGF gf_add(const FactoredGF& a, const FactoredGF& b) {
    require_same_context(a.context(), b.context(), "gf_add");
    FactoredDenominator common = max_union(a.den, b.den);
    Polynomial na = poly_mul(a.num, multiset_diff(common, a.den).expanded());
    Polynomial nb = poly_mul(b.num, multiset_diff(common, b.den).expanded());
    return FactoredGF(na + nb, std::move(common));
}

FactoredGF gf_mul(const FactoredGF& a, const FactoredGF& b) {
    require_same_context(a.context(), b.context(), "gf_mul");
    return FactoredGF(poly_mul(a.num, b.num), multiset_sum(a.den, b.den));
}

FactoredGF gf_substitute(const FactoredGF& g, const ContextPtr& target,
                         const std::map<std::string, Monomial>& images) {
    Polynomial num = poly_substitute(g.num, target, images);
    // factor images: push each monomial through the same variable images
    const auto& src = *g.context();
    std::vector<Exponents> image(src.arity());
    for (std::size_t i = 0; i < src.arity(); ++i) {
        auto it = images.find(src.name(i));
        if (it != images.end()) {
            require_same_context(it->second.context(), target, "gf_substitute");
            image[i] = it->second.exponents();
        } else {
            int j = target->index_of(src.name(i));
            if (j < 0)
                throw std::invalid_argument(
                    "gf_substitute: variable " + src.name(i) +
                    " has no image and is absent from the target context");
            image[i].assign(target->arity(), 0);
            image[i][j] = 1;
        }
    }
    FactoredDenominator den(target);
    for (const auto& [e, mult] : g.den.factors()) {
        Exponents out(target->arity(), 0);
        for (std::size_t i = 0; i < image.size(); ++i) {
            if (e[i] == 0) continue;
            for (std::size_t j = 0; j < out.size(); ++j)
                out[j] += e[i] * image[i][j];
        }
        // a factor collapsing to (1 - 1) would be a genuine division by zero;
        // FactoredDenominator::insert rejects the all-zero vector
        den.insert(out, mult);
    }
    return FactoredGF(std::move(num), std::move(den));
}

FactoredGF gf_reduce(const FactoredGF& g) {
    Polynomial num = g.num;
    FactoredDenominator den(g.context());
    if (num.is_zero()) return FactoredGF(std::move(num), std::move(den));
    for (const auto& [e, mult] : g.den.factors()) {
        Polynomial factor = Polynomial::constant(g.context(), 1);
        factor.add_term(e, -1);
        int remaining = mult;
        while (remaining > 0) {
            // quick leading-term screen before attempting the division
            const auto& lt = num.terms().rbegin()->first;
            bool lt_divisible = true;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (lt[i] < e[i]) { lt_divisible = false; break; }
            if (!lt_divisible) break;
            try {
                num = poly_exact_div(num, factor);
            } catch (const std::domain_error&) {
                break;
            }
            --remaining;
        }
        if (remaining > 0) den.insert(e, remaining);
    }
    return FactoredGF(std::move(num), std::move(den));
}

Polynomial gf_series(const FactoredGF& g, int bound) {
    if (bound < 0)
        throw std::invalid_argument("gf_series: negative degree bound");
    for (const auto& [e, mult] : g.den.factors()) {
        int deg = total_degree(e);
        bool nonneg = std::all_of(e.begin(), e.end(), [](int v) { return v >= 0; });
        if (!nonneg || deg < 1)
            throw std::invalid_argument(
                "gf_series: factor is not a nonconstant monomial with nonnegative exponents");
    }
    Polynomial r = poly_truncate(g.num, bound);
    for (const auto& [e, mult] : g.den.factors()) {
        int deg = total_degree(e);
        Polynomial geo(g.context());
        Exponents cur(e.size(), 0);
        for (int j = 0; j * deg <= bound; ++j) {
            geo.add_term(cur, 1);
            for (std::size_t i = 0; i < cur.size(); ++i) cur[i] += e[i];
        }
        for (int t = 0; t < mult; ++t)
            r = poly_mul_truncated(r, geo, bound);
    }
    return r;
}

Polynomial gf_clear_to(const FactoredGF& g, const FactoredDenominator& target) {
    require_same_context(g.context(), target.context(), "gf_clear_to");
    FactoredGF red = gf_reduce(g);
    for (const auto& [e, mult] : red.den.factors())
        if (target.multiplicity(e) < mult)
            throw std::domain_error(
                "gf_clear_to: reduced denominator is not contained in the target");
    return poly_mul(red.num, multiset_diff(target, red.den).expanded());
}

}  // namespace ppgf
