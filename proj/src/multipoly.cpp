#include "ppgf/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace ppgf {

const Int Polynomial::zero_int_ = 0;

VariableContext::VariableContext(std::vector<std::string> names,
                                 std::vector<int> display_order)
    : names_(std::move(names)), display_order_(std::move(display_order)) {
    if (names_.empty())
        throw std::invalid_argument("VariableContext: empty variable list");
    std::set<std::string> seen(names_.begin(), names_.end());
    if (seen.size() != names_.size())
        throw std::invalid_argument("VariableContext: duplicate variable name");
    if (display_order_.empty()) {
        display_order_.resize(names_.size());
        std::iota(display_order_.begin(), display_order_.end(), 0);
    }
    if (display_order_.size() != names_.size())
        throw std::invalid_argument("VariableContext: bad display order");
    std::set<int> perm(display_order_.begin(), display_order_.end());
    if (perm.size() != names_.size() || *perm.begin() != 0 ||
        *perm.rbegin() != static_cast<int>(names_.size()) - 1)
        throw std::invalid_argument("VariableContext: display order is not a permutation");
}

int VariableContext::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return -1;
    return static_cast<int>(it - names_.begin());
}

ContextPtr grid_context(int k) {
    if (k < 0) throw std::invalid_argument("grid_context: k must be >= 0");
    if (k == 0) {
        // no x/y variables exist; keep a one-variable dummy-free context by
        // representing the empty grid with a single formal unit variable is
        // worse than just refusing -- callers embed k=0 values as constants.
        throw std::invalid_argument("grid_context: k must be >= 1");
    }
    std::vector<std::string> names;
    names.reserve(2 * k);
    for (int i = 1; i <= k; ++i) names.push_back("x" + std::to_string(i));
    for (int i = 1; i <= k; ++i) names.push_back("y" + std::to_string(i));
    std::vector<int> display;
    display.reserve(2 * k);
    for (int i = 0; i < k; ++i) {
        display.push_back(i);      // x_{i+1}
        display.push_back(k + i);  // y_{i+1}
    }
    return std::make_shared<VariableContext>(std::move(names), std::move(display));
}

ContextPtr single_y_context(int k) {
    if (k < 1) throw std::invalid_argument("single_y_context: k must be >= 1");
    std::vector<std::string> names;
    for (int i = 1; i <= k; ++i) names.push_back("x" + std::to_string(i));
    names.push_back("y");
    return std::make_shared<VariableContext>(std::move(names));
}

ContextPtr make_context(std::vector<std::string> names) {
    return std::make_shared<VariableContext>(std::move(names));
}

void require_same_context(const ContextPtr& a, const ContextPtr& b,
                          const char* where) {
    if (!a || !b || *a != *b)
        throw std::invalid_argument(std::string(where) + ": context mismatch");
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(ContextPtr ctx)
    : ctx_(std::move(ctx)) {
    if (!ctx_) throw std::invalid_argument("Monomial: null context");
    exps_.assign(ctx_->arity(), 0);
}

Monomial::Monomial(ContextPtr ctx, Exponents exps)
    : ctx_(std::move(ctx)), exps_(std::move(exps)) {
    if (!ctx_) throw std::invalid_argument("Monomial: null context");
    if (exps_.size() != ctx_->arity())
        throw std::invalid_argument("Monomial: exponent length != context arity");
}

bool Monomial::is_constant() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

Monomial Monomial::times(const Monomial& o) const {
    require_same_context(ctx_, o.ctx_, "Monomial::times");
    Exponents e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.exps_[i];
    return Monomial(ctx_, std::move(e));
}

Monomial Monomial::pow(int e) const {
    Exponents r(exps_);
    for (int& v : r) v *= e;
    return Monomial(ctx_, std::move(r));
}

bool Monomial::operator==(const Monomial& o) const {
    return *ctx_ == *o.ctx_ && exps_ == o.exps_;
}

Monomial variable_monomial(const ContextPtr& ctx, const std::string& name) {
    int i = ctx->index_of(name);
    if (i < 0)
        throw std::invalid_argument("variable_monomial: unknown variable " + name);
    Exponents e(ctx->arity(), 0);
    e[i] = 1;
    return Monomial(ctx, std::move(e));
}

namespace {

// variables in display order, "*"-joined, exponents as ^e; "1" when constant
std::string monomial_text(const VariableContext& ctx, const Exponents& e) {
    std::string out;
    for (int idx : ctx.display_order()) {
        int p = e[idx];
        if (p == 0) continue;
        if (!out.empty()) out += "*";
        out += ctx.name(idx);
        if (p != 1) out += "^" + std::to_string(p);
    }
    if (out.empty()) out = "1";
    return out;
}

}  // namespace

std::string Monomial::str() const { return monomial_text(*ctx_, exps_); }

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {
    if (!ctx_) throw std::invalid_argument("Polynomial: null context");
}

Polynomial Polynomial::constant(ContextPtr ctx, Int c) {
    Polynomial p(std::move(ctx));
    if (c != 0) p.terms_.emplace(Exponents(p.ctx_->arity(), 0), std::move(c));
    return p;
}

Polynomial Polynomial::from_monomial(const Monomial& m, Int c) {
    Polynomial p(m.context());
    if (c != 0) p.terms_.emplace(m.exponents(), std::move(c));
    return p;
}

Polynomial Polynomial::variable(const ContextPtr& ctx, const std::string& name) {
    return from_monomial(variable_monomial(ctx, name));
}

int Polynomial::degree() const {
    if (terms_.empty()) return 0;
    // ascending graded order: the last term carries the maximal total degree
    return total_degree(terms_.rbegin()->first);
}

const Int& Polynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? zero_int_ : it->second;
}

void Polynomial::add_term(const Exponents& e, const Int& c) {
    if (e.size() != ctx_->arity())
        throw std::invalid_argument("Polynomial::add_term: exponent length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ctx_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require_same_context(ctx_, o.ctx_, "Polynomial::operator+=");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    require_same_context(ctx_, o.ctx_, "Polynomial::operator-=");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return *ctx_ == *o.ctx_ && terms_ == o.terms_;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a);
    r += b;
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a);
    r -= b;
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    return poly_mul(a, b);
}

Polynomial operator*(const Polynomial& a, const Int& c) {
    Polynomial r(a.context());
    if (c == 0) return r;
    for (const auto& [e, co] : a.terms()) r.add_term(e, co * c);
    return r;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) { return a + b; }

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    require_same_context(a.context(), b.context(), "poly_mul");
    Polynomial r(a.context());
    Exponents e(a.context()->arity());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial poly_mul_truncated(const Polynomial& a, const Polynomial& b, int bound) {
    require_same_context(a.context(), b.context(), "poly_mul_truncated");
    Polynomial r(a.context());
    Exponents e(a.context()->arity());
    for (const auto& [ea, ca] : a.terms()) {
        int da = total_degree(ea);
        if (da > bound) continue;
        for (const auto& [eb, cb] : b.terms()) {
            if (da + total_degree(eb) > bound) continue;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial poly_exact_div(const Polynomial& a, const Polynomial& b) {
    require_same_context(a.context(), b.context(), "poly_exact_div");
    if (b.is_zero())
        throw std::invalid_argument("poly_exact_div: division by zero");
    Polynomial quotient(a.context());
    Polynomial rem(a);
    const auto& ltb = *b.terms().rbegin();  // leading term under graded lex
    const std::size_t n = a.context()->arity();
    while (!rem.is_zero()) {
        const auto& ltr = *rem.terms().rbegin();
        Exponents q(n);
        for (std::size_t i = 0; i < n; ++i) {
            q[i] = ltr.first[i] - ltb.first[i];
            if (q[i] < 0)
                throw std::domain_error("poly_exact_div: not divisible");
        }
        Int qc, qrem;
        boost::multiprecision::divide_qr(ltr.second, ltb.second, qc, qrem);
        if (qrem != 0)
            throw std::domain_error("poly_exact_div: not divisible");
        Polynomial t(a.context());
        t.add_term(q, qc);
        quotient += t;
        rem -= t * b;
    }
    return quotient;
}

Polynomial poly_substitute(const Polynomial& p, const ContextPtr& target,
                           const std::map<std::string, Monomial>& images) {
    const auto& src = *p.context();
    std::vector<Exponents> image(src.arity());
    for (std::size_t i = 0; i < src.arity(); ++i) {
        auto it = images.find(src.name(i));
        if (it != images.end()) {
            require_same_context(it->second.context(), target, "poly_substitute");
            image[i] = it->second.exponents();
        } else {
            int j = target->index_of(src.name(i));
            if (j < 0)
                throw std::invalid_argument(
                    "poly_substitute: variable " + src.name(i) +
                    " has no image and is absent from the target context");
            image[i].assign(target->arity(), 0);
            image[i][j] = 1;
        }
    }
    Polynomial r(target);
    Exponents e(target->arity());
    for (const auto& [es, c] : p.terms()) {
        std::fill(e.begin(), e.end(), 0);
        for (std::size_t i = 0; i < image.size(); ++i) {
            if (es[i] == 0) continue;
            for (std::size_t j = 0; j < e.size(); ++j)
                e[j] += es[i] * image[i][j];
        }
        r.add_term(e, c);
    }
    return r;
}

Polynomial poly_truncate(const Polynomial& p, int bound) {
    Polynomial r(p.context());
    for (const auto& [e, c] : p.terms()) {
        if (total_degree(e) > bound) break;  // terms are graded ascending
        r.add_term(e, c);
    }
    return r;
}

// ---------------------------------------------------------------------------
// text and JSON encodings

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    // rendered highest-first so the leading term opens the expression
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Int& c = it->second;
        bool neg = c < 0;
        Int absc = neg ? Int(-c) : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono = monomial_text(*ctx_, it->first);
        if (mono == "1") {
            out += absc.str();
        } else if (absc == 1) {
            out += mono;
        } else {
            out += absc.str() + "*" + mono;
        }
    }
    return out;
}

nlohmann::json Polynomial::to_json() const {
    nlohmann::json j;
    j["vars"] = ctx_->names();
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : terms_)
        terms.push_back({{"c", c.str()}, {"e", e}});
    j["terms"] = std::move(terms);
    return j;
}

Polynomial Polynomial::from_json(const nlohmann::json& j) {
    if (!j.contains("vars") || !j.contains("terms"))
        throw std::invalid_argument("Polynomial::from_json: missing vars/terms");
    auto ctx = make_context(j.at("vars").get<std::vector<std::string>>());
    Polynomial p(ctx);
    for (const auto& t : j.at("terms")) {
        Exponents e = t.at("e").get<Exponents>();
        const auto& cj = t.at("c");
        Int c = cj.is_string() ? Int(cj.get<std::string>())
                               : Int(cj.get<long long>());
        p.add_term(e, c);
    }
    return p;
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return s[i];
    }
};

std::string read_integer(Cursor& c) {
    c.skip_ws();
    std::string out;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
        out += c.s[c.i++];
    return out;
}

std::string read_name(Cursor& c) {
    c.skip_ws();
    std::string out;
    while (c.i < c.s.size() &&
           (std::isalnum(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '_')) {
        // stop before a digit run that belongs to "^" handling; names here are
        // alphanumeric identifiers like x12, so take the whole run
        out += c.s[c.i++];
    }
    return out;
}

}  // namespace

Polynomial Polynomial::parse(const ContextPtr& ctx, const std::string& text) {
    Polynomial p(ctx);
    Cursor c{text};
    bool first = true;
    while (!c.done()) {
        int sign = 1;
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            sign = (ch == '-') ? -1 : 1;
            ++c.i;
        } else if (!first) {
            throw std::invalid_argument("Polynomial::parse: expected + or - near '" +
                                        text.substr(c.i) + "'");
        }
        first = false;
        c.skip_ws();
        Int coeff = 1;
        Exponents e(ctx->arity(), 0);
        bool saw_factor = false;
        bool expect_factor = true;
        while (expect_factor) {
            c.skip_ws();
            if (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
                coeff *= Int(read_integer(c));
                saw_factor = true;
            } else {
                std::string name = read_name(c);
                if (name.empty()) {
                    if (!saw_factor)
                        throw std::invalid_argument("Polynomial::parse: empty term");
                    break;
                }
                int idx = ctx->index_of(name);
                if (idx < 0)
                    throw std::invalid_argument("Polynomial::parse: unknown variable " + name);
                int pw = 1;
                c.skip_ws();
                if (c.i < c.s.size() && c.s[c.i] == '^') {
                    ++c.i;
                    std::string digits = read_integer(c);
                    if (digits.empty())
                        throw std::invalid_argument("Polynomial::parse: missing exponent");
                    pw = std::stoi(digits);
                }
                e[idx] += pw;
                saw_factor = true;
            }
            c.skip_ws();
            if (c.i < c.s.size() && c.s[c.i] == '*') {
                ++c.i;
            } else {
                expect_factor = false;
            }
        }
        p.add_term(e, coeff * sign);
    }
    return p;
}

}  // namespace ppgf
