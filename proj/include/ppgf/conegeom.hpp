#pragma once

#include "ppgf/ratgf.hpp"

namespace ppgf {

// extreme ray of the two-row order cone: indicator vector of a pair of
// prefixes, 1^a 0^(k-a) on top and 1^c 0^(k-c) below with c <= a, a >= 1
struct Ray {
    Exponents coords;  // length 2k

    bool operator==(const Ray& o) const { return coords == o.coords; }
};

// rays listed by ascending (a, c); this is the numbering every ray-index
// output refers to
std::vector<Ray> rays_Uk(int k);
// position of the ray in rays_Uk(k); -1 when the vector is not a ray
int ray_index(const Exponents& coords, int k);

// lattice point membership in the order cone (both rows weakly decreasing,
// top dominating bottom, all entries >= 0)
bool is_member(const Exponents& p, int k);
// member that is not a sum of two nonzero members (checked exhaustively)
bool is_irreducible(const Exponents& p, int k);
// greedy support peeling; returns ray coordinate vectors with multiplicity
std::map<Exponents, int, GradedLexLess> decompose_into_rays(const Exponents& p, int k);

// maximal chain of grid cells: order[t] = (row, col), 0-based, such that the
// first t cells always form a valid support (top prefix at least as long as
// the bottom prefix)
struct LinearExtension {
    std::vector<std::pair<int, int>> order;
};

std::vector<LinearExtension> linear_extensions(int k);
Int count_linear_extensions(int k);

// unimodular cone of a chain: rays[t] is the indicator of the first t+1
// cells; open[t] marks rays whose coefficient is strict (>= 1) in the
// half-open decomposition
struct SimplicialCone {
    std::vector<Ray> rays;
    std::vector<bool> open;
};

std::vector<SimplicialCone> triangulation(int k);
FactoredGF cone_gf(const SimplicialCone& cone, const ContextPtr& ctx);
// sum of the half-open cone series: equals compute_Qtilde(k)
FactoredGF gf_via_triangulation(int k);

// closed-cone inclusion-exclusion for k = 2 (two maximal cones and their
// common facet), cleared to the staircase denominator
Polynomial inclusion_exclusion_k2();

Int binomial(int n, int r);
Int catalan(int n);

}  // namespace ppgf
