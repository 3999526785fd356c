#include "ppgf/ratgf.hpp"

#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace ppgf;

namespace {

FactoredDenominator den_of(const ContextPtr& ctx,
                           std::initializer_list<const char*> monos) {
    FactoredDenominator d(ctx);
    for (const char* m : monos) {
        Polynomial p = Polynomial::parse(ctx, m);
        REQUIRE(p.term_count() == 1);
        d.insert(p.terms().begin()->first);
    }
    return d;
}

}  // namespace

TEST_CASE("denominator multiset bookkeeping") {
    ContextPtr g2 = grid_context(2);
    FactoredDenominator d(g2);
    d.insert(variable_monomial(g2, "x1"));
    d.insert(variable_monomial(g2, "x1"), 2);
    d.insert(variable_monomial(g2, "y1"));
    CHECK(d.size() == 4);
    CHECK(d.multiplicity(variable_monomial(g2, "x1").exponents()) == 3);
    CHECK_THROWS_AS(d.insert(Exponents{0, 0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(d.insert(variable_monomial(g2, "x1"), 0), std::invalid_argument);

    FactoredDenominator a = den_of(g2, {"x1", "x1*y1"});
    FactoredDenominator b = den_of(g2, {"x1", "x2"});
    FactoredDenominator u = max_union(a, b);
    CHECK(u.size() == 3);
    CHECK(u.multiplicity(variable_monomial(g2, "x1").exponents()) == 1);
    FactoredDenominator s = multiset_sum(a, b);
    CHECK(s.multiplicity(variable_monomial(g2, "x1").exponents()) == 2);
    FactoredDenominator diff = multiset_diff(u, a);
    CHECK(diff == den_of(g2, {"x2"}));
    CHECK_THROWS_AS(multiset_diff(a, b), std::domain_error);
}

TEST_CASE("expanded denominator is the factor product") {
    ContextPtr g2 = grid_context(2);
    CHECK(den_of(g2, {"x1"}).expanded() == Polynomial::parse(g2, "1 - x1"));
    FactoredDenominator sq(g2);
    sq.insert(variable_monomial(g2, "x1"), 2);
    CHECK(sq.expanded() == Polynomial::parse(g2, "1 - 2*x1 + x1^2"));
    CHECK(FactoredDenominator(g2).expanded() == Polynomial::constant(g2, 1));
}

TEST_CASE("gf arithmetic agrees with series arithmetic") {
    ContextPtr g2 = grid_context(2);
    std::mt19937 rng(123);
    std::vector<Exponents> pool = {
        {1, 0, 0, 0}, {1, 0, 1, 0}, {1, 1, 0, 0}, {1, 1, 1, 0}, {1, 1, 1, 1}};
    auto random_gf = [&]() {
        FactoredDenominator d(g2);
        std::uniform_int_distribution<int> nf(1, 3);
        std::uniform_int_distribution<int> pick(0, static_cast<int>(pool.size()) - 1);
        int n = nf(rng);
        for (int i = 0; i < n; ++i) d.insert(pool[pick(rng)]);
        Polynomial num = testing::random_poly(g2, rng, 4, 2);
        return FactoredGF(num, d);
    };
    const int N = 6;
    for (int trial = 0; trial < 15; ++trial) {
        FactoredGF a = random_gf(), b = random_gf();
        CHECK(gf_series(gf_add(a, b), N) == gf_series(a, N) + gf_series(b, N));
        CHECK(gf_series(gf_mul(a, b), N) ==
              poly_mul_truncated(gf_series(a, N), gf_series(b, N), N));
        CHECK(gf_series(gf_reduce(a), N) == gf_series(a, N));
    }
}

TEST_CASE("series of a geometric factor") {
    ContextPtr g1 = grid_context(1);
    FactoredGF g(Polynomial::constant(g1, 1), den_of(g1, {"x1"}));
    CHECK(gf_series(g, 3) == Polynomial::parse(g1, "1 + x1 + x1^2 + x1^3"));
    FactoredGF h(Polynomial::constant(g1, 1), den_of(g1, {"x1*y1"}));
    CHECK(gf_series(h, 3) == Polynomial::parse(g1, "1 + x1*y1"));
    // squared factor: 1/(1-x)^2 = 1 + 2x + 3x^2 + ...
    FactoredDenominator sq(g1);
    sq.insert(variable_monomial(g1, "x1"), 2);
    CHECK(gf_series(FactoredGF(Polynomial::constant(g1, 1), sq), 2) ==
          Polynomial::parse(g1, "1 + 2*x1 + 3*x1^2"));
    CHECK_THROWS_AS(gf_series(g, -1), std::invalid_argument);
}

TEST_CASE("series rejects factors that do not expand") {
    ContextPtr ctx = make_context({"x", "v"});
    FactoredDenominator d(ctx);
    d.insert(Exponents{1, -1});  // x / v: legal in a denominator, not in a series
    FactoredGF g(Polynomial::constant(ctx, 1), d);
    CHECK_THROWS_AS(gf_series(g, 4), std::invalid_argument);
}

TEST_CASE("reduce cancels exactly the shared factors") {
    ContextPtr g2 = grid_context(2);
    FactoredDenominator d = den_of(g2, {"x1", "x1*y1", "x2"});
    Polynomial num = poly_mul(Polynomial::parse(g2, "1 - x1"),
                              Polynomial::parse(g2, "1 + x2*y2"));
    FactoredGF r = gf_reduce(FactoredGF(num, d));
    CHECK(r.num == Polynomial::parse(g2, "1 + x2*y2"));
    CHECK(r.den == den_of(g2, {"x1*y1", "x2"}));

    // nothing cancels when the numerator shares no factor
    FactoredGF keep = gf_reduce(FactoredGF(Polynomial::parse(g2, "1 + x1"), d));
    CHECK(keep.num == Polynomial::parse(g2, "1 + x1"));
    CHECK(keep.den == d);

    // zero collapses completely
    FactoredGF z = gf_reduce(FactoredGF(Polynomial::zero(g2), d));
    CHECK(z.num.is_zero());
    CHECK(z.den.empty());

    // multiplicity is peeled one factor at a time
    FactoredDenominator dd(g2);
    dd.insert(variable_monomial(g2, "x1"), 3);
    Polynomial sq = poly_mul(Polynomial::parse(g2, "1 - x1"),
                             Polynomial::parse(g2, "1 - x1"));
    FactoredGF m = gf_reduce(FactoredGF(sq, dd));
    CHECK(m.num == Polynomial::constant(g2, 1));
    CHECK(m.den.multiplicity(variable_monomial(g2, "x1").exponents()) == 1);
}

TEST_CASE("clear_to rewrites over a containing denominator") {
    ContextPtr g2 = grid_context(2);
    FactoredDenominator target = den_of(g2, {"x1", "x1*y1", "x2"});
    FactoredGF g(Polynomial::parse(g2, "x1"), den_of(g2, {"x1"}));
    CHECK(gf_clear_to(g, target) ==
          poly_mul(Polynomial::parse(g2, "x1"),
                   den_of(g2, {"x1*y1", "x2"}).expanded()));
    // reduction happens first, so a cancelling factor is no obstacle
    FactoredGF h(Polynomial::parse(g2, "1 - y1"), den_of(g2, {"y1", "x2"}));
    CHECK(gf_clear_to(h, den_of(g2, {"x2"})) == Polynomial::constant(g2, 1));
    CHECK_THROWS_AS(gf_clear_to(FactoredGF(Polynomial::constant(g2, 1),
                                           den_of(g2, {"y2"})),
                                target),
                    std::domain_error);
}

TEST_CASE("substitution maps numerator and factors together") {
    ContextPtr g1 = grid_context(1);
    ContextPtr g2 = grid_context(2);
    FactoredGF q1(Polynomial::parse(g1, "x1 + x1*y1 - x1^2*y1"),
                  den_of(g1, {"x1", "x1*y1"}));
    // identity embedding into the wider context
    FactoredGF e = gf_substitute(q1, g2, {});
    CHECK(e.num == Polynomial::parse(g2, "x1 + x1*y1 - x1^2*y1"));
    CHECK(e.den == den_of(g2, {"x1", "x1*y1"}));
    // x1 -> x1 x2 y1 pushes through the factors
    std::map<std::string, Monomial> images = {{"x1", Monomial(g2, {1, 1, 1, 0})}};
    FactoredGF s = gf_substitute(q1, g2, images);
    CHECK(s.den == den_of(g2, {"x1*x2*y1", "x1*x2*y1^2"}));
    // a factor collapsing to a constant is division by zero
    std::map<std::string, Monomial> bad = {{"x1", Monomial(g2)}};
    CHECK_THROWS_AS(gf_substitute(q1, g2, bad), std::invalid_argument);
    // substitution commutes with taking series (on polynomial images)
    CHECK(poly_truncate(poly_substitute(gf_series(q1, 8), g2, images), 6) ==
          gf_series(s, 6));
}

TEST_CASE("factored gf json shape") {
    ContextPtr g1 = grid_context(1);
    FactoredGF g(Polynomial::parse(g1, "x1"), den_of(g1, {"x1", "x1*y1"}));
    nlohmann::json j = g.to_json();
    CHECK(j.contains("num"));
    CHECK(j.at("den").is_array());
    CHECK(j.at("den").size() == 2);
    CHECK(j.at("den")[0].at("e").get<Exponents>() == Exponents{1, 0});
    CHECK(j.at("den")[0].at("m").get<int>() == 1);
    CHECK(Polynomial::from_json(j.at("num")) == g.num);
    CHECK(g.str() == "(x1) / (1 - x1)*(1 - x1*y1)");
}
