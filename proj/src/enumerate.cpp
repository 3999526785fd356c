#include "ppgf/enumerate.hpp"

#include <algorithm>
#include <numeric>

namespace ppgf {

int PlanePartition2xK::weight() const {
    return std::accumulate(lambda.begin(), lambda.end(), 0) +
           std::accumulate(mu.begin(), mu.end(), 0);
}

namespace {

void fill_mu(const std::vector<int>& lambda, std::vector<int>& mu, int pos,
             int budget, std::vector<PlanePartition2xK>& out) {
    if (pos == static_cast<int>(mu.size())) {
        out.push_back({lambda, mu});
        return;
    }
    int hi = std::min(lambda[pos], pos == 0 ? budget : std::min(mu[pos - 1], budget));
    for (int v = 0; v <= hi; ++v) {
        mu[pos] = v;
        fill_mu(lambda, mu, pos + 1, budget - v, out);
    }
    mu[pos] = 0;
}

void fill_lambda(std::vector<int>& lambda, int pos, int budget, int low,
                 std::vector<PlanePartition2xK>& out) {
    int k = static_cast<int>(lambda.size());
    if (pos == k) {
        std::vector<int> mu(k, 0);
        fill_mu(lambda, mu, 0, budget, out);
        return;
    }
    // later entries each need at least `low` of the budget
    int hi = budget - low * (k - 1 - pos);
    if (pos > 0) hi = std::min(hi, lambda[pos - 1]);
    for (int v = low; v <= hi; ++v) {
        lambda[pos] = v;
        fill_lambda(lambda, pos + 1, budget - v, low, out);
    }
    lambda[pos] = 0;
}

}  // namespace

std::vector<PlanePartition2xK> enumerate_pp(int k, int bound, bool strict_last) {
    if (k < 1) throw std::invalid_argument("enumerate_pp: k must be >= 1");
    if (bound < 0) throw std::invalid_argument("enumerate_pp: negative bound");
    std::vector<PlanePartition2xK> out;
    std::vector<int> lambda(k, 0);
    fill_lambda(lambda, 0, bound, strict_last ? 1 : 0, out);
    std::sort(out.begin(), out.end(),
              [](const PlanePartition2xK& a, const PlanePartition2xK& b) {
                  int wa = a.weight(), wb = b.weight();
                  if (wa != wb) return wa < wb;
                  if (a.lambda != b.lambda) return a.lambda > b.lambda;
                  return a.mu > b.mu;
              });
    return out;
}

Polynomial oracle_series(int k, int bound, bool strict_last) {
    ContextPtr ctx = grid_context(k);
    Polynomial p(ctx);
    Exponents e(2 * k);
    for (const auto& pp : enumerate_pp(k, bound, strict_last)) {
        for (int i = 0; i < k; ++i) {
            e[i] = pp.lambda[i];
            e[k + i] = pp.mu[i];
        }
        p.add_term(e, 1);
    }
    return p;
}

}  // namespace ppgf
