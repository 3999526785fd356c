#include "ppgf/omega.hpp"

#include <algorithm>
#include <functional>

namespace ppgf {

CrudeForm::CrudeForm(ContextPtr ctx) : ctx_(std::move(ctx)) {
    if (!ctx_) throw std::invalid_argument("CrudeForm: null context");
}

void CrudeForm::add_term(CrudeTerm t) {
    if (t.num.size() != ctx_->arity())
        throw std::invalid_argument("CrudeForm::add_term: numerator length mismatch");
    for (const auto& f : t.factors) {
        if (f.size() != ctx_->arity())
            throw std::invalid_argument("CrudeForm::add_term: factor length mismatch");
        if (std::all_of(f.begin(), f.end(), [](int v) { return v == 0; }))
            throw std::invalid_argument("CrudeForm::add_term: constant factor 1 - 1");
    }
    if (t.coeff == 0) return;
    terms_.push_back(std::move(t));
}

void CrudeForm::normalize() {
    GradedLexLess less;
    for (auto& t : terms_)
        std::sort(t.factors.begin(), t.factors.end(), less);
    auto term_less = [&](const CrudeTerm& a, const CrudeTerm& b) {
        if (a.num != b.num) return less(a.num, b.num);
        return std::lexicographical_compare(a.factors.begin(), a.factors.end(),
                                            b.factors.begin(), b.factors.end(),
                                            less);
    };
    std::sort(terms_.begin(), terms_.end(), term_less);
    std::vector<CrudeTerm> merged;
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().num == t.num &&
            merged.back().factors == t.factors) {
            merged.back().coeff += t.coeff;
            if (merged.back().coeff == 0) merged.pop_back();
        } else {
            merged.push_back(std::move(t));
        }
    }
    terms_ = std::move(merged);
}

std::string CrudeForm::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
        std::string piece;
        Int absc = t.coeff < 0 ? Int(-t.coeff) : t.coeff;
        std::string mono = Monomial(ctx_, t.num).str();
        piece = (absc == 1) ? mono : absc.str() + "*" + mono;
        if (!t.factors.empty()) {
            piece += " / ";
            for (std::size_t i = 0; i < t.factors.size(); ++i) {
                if (i) piece += "*";
                piece += "(1 - " + Monomial(ctx_, t.factors[i]).str() + ")";
            }
        }
        if (out.empty())
            out += (t.coeff < 0 ? "-" : "") + piece;
        else
            out += (t.coeff < 0 ? " - " : " + ") + piece;
    }
    return out;
}

namespace {

// enumerate all multisets of the given monomials with total count <= bound,
// emitting the accumulated exponent sum for each choice
void accumulate_products(const std::vector<Exponents>& monos, std::size_t idx,
                         int bound, Exponents& acc,
                         const std::function<void(const Exponents&)>& emit) {
    if (idx == monos.size()) {
        emit(acc);
        return;
    }
    accumulate_products(monos, idx + 1, bound, acc, emit);
    Exponents saved(acc);
    for (int n = 1; n <= bound; ++n) {
        for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += monos[idx][j];
        accumulate_products(monos, idx + 1, bound - n, acc, emit);
    }
    acc = saved;
}

}  // namespace

CrudeForm omega_eliminate(const CrudeForm& e, const std::string& v) {
    int vi = e.context()->index_of(v);
    if (vi < 0)
        throw std::invalid_argument("omega_eliminate: unknown variable " + v);
    CrudeForm out(e.context());

    // reduces one term until no factor mixes v with both signs, then applies
    // the boundary rules and emits v-free terms
    std::function<void(CrudeTerm)> process = [&](CrudeTerm t) {
        int pos = -1, neg = -1;
        for (std::size_t i = 0; i < t.factors.size(); ++i) {
            int ve = t.factors[i][vi];
            if (ve > 1 || ve < -1)
                throw std::invalid_argument(
                    "omega_eliminate: factor exponent of " + v + " outside {-1,0,1}");
            if (ve == 1 && pos < 0) pos = static_cast<int>(i);
            if (ve == -1 && neg < 0) neg = static_cast<int>(i);
        }
        if (pos >= 0 && neg >= 0) {
            // 1/((1-Av)(1-B/v)) = 1/(1-AB) * (1/(1-Av) + 1/(1-B/v) - 1)
            Exponents ab(t.factors[pos]);
            for (std::size_t j = 0; j < ab.size(); ++j) ab[j] += t.factors[neg][j];
            if (std::all_of(ab.begin(), ab.end(), [](int x) { return x == 0; }))
                throw std::domain_error(
                    "omega_eliminate: factor pair multiplies to 1 (pole at " + v + " = 1)");
            CrudeTerm base;
            base.coeff = t.coeff;
            base.num = t.num;
            for (std::size_t i = 0; i < t.factors.size(); ++i)
                if (static_cast<int>(i) != pos && static_cast<int>(i) != neg)
                    base.factors.push_back(t.factors[i]);
            base.factors.push_back(ab);
            CrudeTerm keep_pos(base), keep_neg(base), drop(base);
            keep_pos.factors.push_back(t.factors[pos]);
            keep_neg.factors.push_back(t.factors[neg]);
            drop.coeff = -drop.coeff;
            process(std::move(keep_pos));
            process(std::move(keep_neg));
            process(std::move(drop));
            return;
        }

        int s = t.num[vi];
        Exponents num(t.num);
        num[vi] = 0;
        std::vector<Exponents> kept;      // v-free factors
        std::vector<Exponents> v_monos;   // v-carrying factors with v zeroed
        for (auto f : t.factors) {
            if (f[vi] == 0) {
                kept.push_back(std::move(f));
            } else {
                f[vi] = 0;
                v_monos.push_back(std::move(f));
            }
        }
        if (pos >= 0) {
            // v^s / prod(1 - A_i v): drop negative-s corrections, then v = 1
            CrudeTerm whole;
            whole.coeff = t.coeff;
            whole.num = num;
            whole.factors = kept;
            whole.factors.insert(whole.factors.end(), v_monos.begin(), v_monos.end());
            out.add_term(std::move(whole));
            if (s < 0) {
                Exponents acc(num);
                accumulate_products(v_monos, 0, -s - 1, acc, [&](const Exponents& m) {
                    CrudeTerm corr;
                    corr.coeff = -t.coeff;
                    corr.num = m;
                    corr.factors = kept;
                    out.add_term(std::move(corr));
                });
            }
        } else if (neg >= 0) {
            // v^s / prod(1 - B_i / v): only the finitely many products with
            // total B-count <= s survive
            if (s < 0) return;
            Exponents acc(num);
            accumulate_products(v_monos, 0, s, acc, [&](const Exponents& m) {
                CrudeTerm part;
                part.coeff = t.coeff;
                part.num = m;
                part.factors = kept;
                out.add_term(std::move(part));
            });
        } else {
            if (s < 0) return;
            CrudeTerm part;
            part.coeff = t.coeff;
            part.num = num;
            part.factors = kept;
            out.add_term(std::move(part));
        }
    };

    for (const auto& t : e.terms()) process(t);
    out.normalize();
    return out;
}

// ---------------------------------------------------------------------------
// 2 x n boxes

ContextPtr box_context(int n) {
    if (n < 1) throw std::invalid_argument("box_context: n must be >= 1");
    std::vector<std::string> names;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= n; ++j)
            names.push_back("x" + std::to_string(i) + std::to_string(j));
    return make_context(std::move(names));
}

BoxGF box_base() {
    ContextPtr ctx = box_context(1);
    FactoredDenominator den(ctx);
    den.insert(variable_monomial(ctx, "x11"));
    den.insert(variable_monomial(ctx, "x11").times(variable_monomial(ctx, "x21")));
    return {1, FactoredGF(Polynomial::constant(ctx, 1), std::move(den))};
}

namespace {

// all terms must be v-free for every v in aux by now; drop the aux columns
// and rebuild an ordinary factored form over the base context
FactoredGF project_crude(const CrudeForm& form, const ContextPtr& base,
                         const std::vector<int>& base_pos) {
    FactoredGF acc(Polynomial::zero(base), FactoredDenominator(base));
    std::vector<bool> is_base(form.context()->arity(), false);
    for (int i : base_pos) is_base[i] = true;
    auto project = [&](const Exponents& e) {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (!is_base[i] && e[i] != 0)
                throw std::logic_error("project_crude: leftover auxiliary exponent");
        Exponents out(base_pos.size());
        for (std::size_t i = 0; i < base_pos.size(); ++i)
            out[i] = e[base_pos[i]];
        return out;
    };
    for (const auto& t : form.terms()) {
        Polynomial num(base);
        num.add_term(project(t.num), t.coeff);
        FactoredDenominator den(base);
        for (const auto& f : t.factors) den.insert(project(f));
        acc = gf_reduce(gf_add(acc, FactoredGF(std::move(num), std::move(den))));
    }
    return acc;
}

}  // namespace

BoxGF p22_via_omega() {
    ContextPtr base = box_context(2);
    std::vector<std::string> names = base->names();
    for (const char* aux : {"l11", "l21", "mu11", "mu12"}) names.push_back(aux);
    ContextPtr work = make_context(names);

    auto mono = [&](std::initializer_list<std::pair<const char*, int>> powers) {
        Exponents e(work->arity(), 0);
        for (const auto& [name, p] : powers) e[work->index_of(name)] = p;
        return e;
    };

    CrudeTerm t;
    t.num.assign(work->arity(), 0);
    t.factors = {
        mono({{"x11", 1}, {"l11", 1}, {"mu11", 1}}),
        mono({{"x21", 1}, {"l21", 1}, {"mu11", -1}}),
        mono({{"x12", 1}, {"mu12", 1}, {"l11", -1}}),
        mono({{"x22", 1}, {"l21", -1}, {"mu12", -1}}),
    };
    CrudeForm form(work);
    form.add_term(std::move(t));
    for (const char* v : {"mu11", "mu12", "l11", "l21"})
        form = omega_eliminate(form, v);

    std::vector<int> base_pos;
    for (const auto& n : base->names()) base_pos.push_back(work->index_of(n));
    return {2, project_crude(form, base, base_pos)};
}

BoxGF ap_step(const BoxGF& p, int n) {
    if (n < 1) throw std::invalid_argument("ap_step: n must be >= 1");
    if (p.cols != n)
        throw std::invalid_argument("ap_step: value has the wrong column count");
    ContextPtr base = box_context(n + 1);
    std::vector<std::string> names = base->names();
    names.push_back("l0");
    names.push_back("l1");
    ContextPtr work = make_context(names);

    const auto& src = *p.value.context();
    const int l0 = work->index_of("l0"), l1 = work->index_of("l1");
    const int last_top = src.index_of("x1" + std::to_string(n));
    const int last_bot = src.index_of("x2" + std::to_string(n));
    // source variable positions inside the working context
    std::vector<int> src_pos;
    for (const auto& nm : src.names()) src_pos.push_back(work->index_of(nm));

    // x_{1,n} -> x_{1,n} l0 and x_{2,n} -> x_{2,n} l1
    auto reweight = [&](const Exponents& e) {
        Exponents out(work->arity(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) out[src_pos[i]] = e[i];
        out[l0] += e[last_top];
        out[l1] += e[last_bot];
        return out;
    };

    Exponents div_top(work->arity(), 0);  // x_{1,n+1} / l0
    div_top[work->index_of("x1" + std::to_string(n + 1))] = 1;
    div_top[l0] = -1;
    Exponents div_col(work->arity(), 0);  // x_{1,n+1} x_{2,n+1} / (l0 l1)
    div_col[work->index_of("x1" + std::to_string(n + 1))] = 1;
    div_col[work->index_of("x2" + std::to_string(n + 1))] = 1;
    div_col[l0] = -1;
    div_col[l1] = -1;

    CrudeForm form(work);
    for (const auto& [e, c] : p.value.num.terms()) {
        CrudeTerm t;
        t.coeff = c;
        t.num = reweight(e);
        for (const auto& [f, mult] : p.value.den.factors())
            for (int i = 0; i < mult; ++i) t.factors.push_back(reweight(f));
        t.factors.push_back(div_top);
        t.factors.push_back(div_col);
        form.add_term(std::move(t));
    }
    form = omega_eliminate(form, "l0");
    form = omega_eliminate(form, "l1");

    std::vector<int> base_pos;
    for (const auto& nm : base->names()) base_pos.push_back(work->index_of(nm));
    // the pairing of the two appended factors already emits the completed
    // column's weight factor (1 - x11...x2,n+1); no further correction is due
    return {n + 1, gf_reduce(project_crude(form, base, base_pos))};
}

}  // namespace ppgf
