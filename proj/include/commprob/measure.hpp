#pragma once

#include <string>
#include <vector>

#include "commprob/group.hpp"
#include "commprob/rational.hpp"

namespace commprob {

// Exact uniform-measure computations: subset measures, commuting
// probabilities, centrality floors and the decidable inequality lemmas.
// Everything here is an exact rational; sampling lives in montecarlo.

enum class PrMethod { ClassFormula, BruteForce, Sampled };

struct PrReport {
    Ratio value;
    PrMethod method = PrMethod::ClassFormula;
    int k_size = 0;
    int g_size = 0;
};

inline constexpr long long kDefaultPairCap = 1LL << 26;

// |A| / |G|.
Ratio subset_measure(GroupPtr g, const std::vector<Elt>& a);
Ratio subset_measure(const Subgroup& a);

// Pr(K,G) via the centralizer sum; exact.
PrReport pr(const Subgroup& k, GroupPtr g);
// Pr(inner, outer) for inner <= outer <= G, counting within outer.
Ratio pr_within(const Subgroup& inner, const Subgroup& outer);
// Direct commuting-pair count; the oracle form of pr.
PrReport pr_bruteforce(const Subgroup& k, GroupPtr g, long long pair_cap = kDefaultPairCap);

// min over g in K of Pr(<g>, G), with the attaining element (smallest index
// on ties). K is eps-central iff eps <= the returned floor.
struct CentralityFloor {
    Ratio floor;
    Elt witness;
};
CentralityFloor centrality_floor(GroupPtr g, const Subgroup& k);

// Pr(K,G) <= Pr(H,G) <= Pr(H,K) for H <= K <= G. Throws LemmaViolationError
// on a violated chain (a bug signal, never expected).
struct MonotonicityVerdict {
    Ratio pr_kg;
    Ratio pr_hg;
    Ratio pr_hk;
};
MonotonicityVerdict check_monotonicity(const Subgroup& h, const Subgroup& k, GroupPtr g);

// Pr(K,G) <= Pr(KN/N, G/N) * Pr(K∩N, N) for N normal.
struct QuotientInequalityVerdict {
    Ratio pr_kg;
    Ratio pr_quotient;   // Pr(KN/N, G/N)
    Ratio pr_restricted; // Pr(K∩N, N)
};
QuotientInequalityVerdict check_quotient_inequality(GroupPtr g, const Subgroup& n, const Subgroup& k);

// [H:K] <= 1/eps given mu(K) >= eps * mu(H) > 0.
struct IndexBoundVerdict {
    long long index;
    Ratio bound;  // 1/eps
};
IndexBoundVerdict index_bound_check(GroupPtr g, const Subgroup& h, const Subgroup& k, const Ratio& eps);

std::string to_string(PrMethod method);

}  // namespace commprob
