#pragma once

#include "ppgf/multipoly.hpp"

namespace ppgf {

// A plane partition with two rows of length k: lambda on top, mu below.
// Both rows decrease weakly and lambda dominates mu entrywise.
struct PlanePartition2xK {
    std::vector<int> lambda;
    std::vector<int> mu;

    int weight() const;
    bool operator==(const PlanePartition2xK& o) const {
        return lambda == o.lambda && mu == o.mu;
    }
};

// all pairs with weight <= bound; strict_last additionally requires
// lambda_k >= 1 (top row of length exactly k).  Ordered by weight, ties by
// descending lexicographic (lambda, mu).
std::vector<PlanePartition2xK> enumerate_pp(int k, int bound, bool strict_last);

// sum of y^mu x^lambda over enumerate_pp(k, bound, strict_last), as a
// polynomial over the 2k-variable grid context
Polynomial oracle_series(int k, int bound, bool strict_last);

}  // namespace ppgf
