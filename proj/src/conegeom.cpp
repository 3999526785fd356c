#include "ppgf/conegeom.hpp"

#include "ppgf/recursion.hpp"

#include <algorithm>
#include <functional>

namespace ppgf {

std::vector<Ray> rays_Uk(int k) {
    if (k < 1) throw std::invalid_argument("rays_Uk: k must be >= 1");
    std::vector<Ray> rays;
    for (int a = 1; a <= k; ++a) {
        for (int c = 0; c <= a; ++c) {
            Exponents e(2 * k, 0);
            for (int i = 0; i < a; ++i) e[i] = 1;
            for (int i = 0; i < c; ++i) e[k + i] = 1;
            rays.push_back({std::move(e)});
        }
    }
    return rays;
}

int ray_index(const Exponents& coords, int k) {
    auto rays = rays_Uk(k);
    for (std::size_t i = 0; i < rays.size(); ++i)
        if (rays[i].coords == coords) return static_cast<int>(i);
    return -1;
}

bool is_member(const Exponents& p, int k) {
    if (static_cast<int>(p.size()) != 2 * k)
        throw std::invalid_argument("is_member: wrong length");
    for (int v : p)
        if (v < 0) return false;
    for (int i = 0; i + 1 < k; ++i)
        if (p[i] < p[i + 1] || p[k + i] < p[k + i + 1]) return false;
    for (int i = 0; i < k; ++i)
        if (p[i] < p[k + i]) return false;
    return true;
}

bool is_irreducible(const Exponents& p, int k) {
    if (!is_member(p, k))
        throw std::invalid_argument("is_irreducible: not a cone member");
    if (std::all_of(p.begin(), p.end(), [](int v) { return v == 0; })) return false;
    // odometer over all u with 0 <= u <= p componentwise
    Exponents u(p.size(), 0);
    Exponents rest(p.size());
    for (;;) {
        // advance
        std::size_t i = 0;
        while (i < u.size() && u[i] == p[i]) u[i++] = 0;
        if (i == u.size()) break;  // wrapped: all u exhausted
        ++u[i];
        bool zero = std::all_of(u.begin(), u.end(), [](int v) { return v == 0; });
        bool full = u == p;
        if (zero || full) continue;
        for (std::size_t j = 0; j < u.size(); ++j) rest[j] = p[j] - u[j];
        if (is_member(u, k) && is_member(rest, k)) return false;
    }
    return true;
}

std::map<Exponents, int, GradedLexLess> decompose_into_rays(const Exponents& p, int k) {
    if (!is_member(p, k))
        throw std::invalid_argument("decompose_into_rays: not a cone member");
    std::map<Exponents, int, GradedLexLess> out;
    Exponents cur(p);
    for (;;) {
        int a = 0, c = 0;
        while (a < k && cur[a] > 0) ++a;
        while (c < k && cur[k + c] > 0) ++c;
        if (a == 0) break;  // cur == 0
        Exponents ray(2 * k, 0);
        for (int i = 0; i < a; ++i) {
            ray[i] = 1;
            --cur[i];
        }
        for (int i = 0; i < c; ++i) {
            ray[k + i] = 1;
            --cur[k + i];
        }
        ++out[ray];
    }
    return out;
}

namespace {

// walks every maximal admissible cell order; emit receives the full order
void walk_extensions(int k, const std::function<void(const std::vector<std::pair<int, int>>&)>& emit) {
    std::vector<std::pair<int, int>> order;
    order.reserve(2 * k);
    std::function<void(int, int)> step = [&](int a, int c) {
        if (a == k && c == k) {
            emit(order);
            return;
        }
        if (a < k) {  // extend the top row
            order.emplace_back(0, a);
            step(a + 1, c);
            order.pop_back();
        }
        if (c < a) {  // extend the bottom row, never past the top
            order.emplace_back(1, c);
            step(a, c + 1);
            order.pop_back();
        }
    };
    step(0, 0);
}

}  // namespace

std::vector<LinearExtension> linear_extensions(int k) {
    if (k < 1) throw std::invalid_argument("linear_extensions: k must be >= 1");
    std::vector<LinearExtension> out;
    walk_extensions(k, [&](const std::vector<std::pair<int, int>>& order) {
        out.push_back({order});
    });
    return out;
}

Int count_linear_extensions(int k) {
    if (k < 1) throw std::invalid_argument("count_linear_extensions: k must be >= 1");
    Int n = 0;
    walk_extensions(k, [&](const std::vector<std::pair<int, int>>&) { ++n; });
    return n;
}

std::vector<SimplicialCone> triangulation(int k) {
    if (k < 1) throw std::invalid_argument("triangulation: k must be >= 1");
    std::vector<SimplicialCone> cones;
    walk_extensions(k, [&](const std::vector<std::pair<int, int>>& order) {
        SimplicialCone cone;
        Exponents cur(2 * k, 0);
        for (const auto& [row, col] : order) {
            cur[row * k + col] = 1;
            cone.rays.push_back({cur});
        }
        cone.open.assign(2 * k, false);
        // reading order: top row left to right, then bottom row; a descent in
        // the chain's cell labels makes the corresponding ray coefficient strict
        auto label = [k](const std::pair<int, int>& cell) {
            return cell.first * k + cell.second;
        };
        for (int t = 0; t + 1 < 2 * k; ++t)
            cone.open[t] = label(order[t]) > label(order[t + 1]);
        cones.push_back(std::move(cone));
    });
    return cones;
}

FactoredGF cone_gf(const SimplicialCone& cone, const ContextPtr& ctx) {
    Polynomial num = Polynomial::constant(ctx, 1);
    FactoredDenominator den(ctx);
    for (std::size_t t = 0; t < cone.rays.size(); ++t) {
        den.insert(cone.rays[t].coords);
        if (cone.open[t])
            num = poly_mul(num, Polynomial::from_monomial(Monomial(ctx, cone.rays[t].coords)));
    }
    return FactoredGF(std::move(num), std::move(den));
}

FactoredGF gf_via_triangulation(int k) {
    ContextPtr ctx = grid_context(k);
    auto cones = triangulation(k);
    FactoredGF acc = cone_gf(cones[0], ctx);
    for (std::size_t i = 1; i < cones.size(); ++i)
        acc = gf_reduce(gf_add(acc, cone_gf(cones[i], ctx)));
    return gf_reduce(acc);
}

Polynomial inclusion_exclusion_k2() {
    ContextPtr ctx = grid_context(2);
    auto rays = rays_Uk(2);
    auto closed_cone = [&](std::initializer_list<int> idx, Int sign) {
        FactoredDenominator den(ctx);
        for (int i : idx) den.insert(rays[i].coords);
        return FactoredGF(Polynomial::constant(ctx, sign), std::move(den));
    };
    // the cone splits into two unimodular closed cones glued along a facet;
    // the facet is counted twice, so its series is subtracted once
    FactoredGF acc = gf_add(closed_cone({0, 1, 2, 4}, 1), closed_cone({1, 2, 3, 4}, 1));
    acc = gf_reduce(gf_add(acc, closed_cone({1, 2, 4}, -1)));
    return gf_clear_to(acc, denominator_Dk(2));
}

Int binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    Int num = 1, den = 1;
    for (int i = 0; i < r; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

Int catalan(int n) { return binomial(2 * n, n) / (n + 1); }

}  // namespace ppgf
