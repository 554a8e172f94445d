#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "commprob/group.hpp"
#include "commprob/rng.hpp"

namespace commprob {

// Sampled estimation of commuting probabilities and centrality floors.
// Exact paths never depend on anything in this header; every estimate is
// reproducible from its 64-bit seed alone.

struct Estimate {
    double point_value = 0.0;
    double lo = 0.0;  // Clopper-Pearson interval at `confidence`
    double hi = 1.0;
    double confidence = 0.95;
    long long samples = 0;
    long long hits = 0;
    std::uint64_t seed = 0;
    std::string method;  // "uniform-index" | "random-word"
};

// Exact two-sided Clopper-Pearson binomial interval.
std::pair<double, double> clopper_pearson(long long hits, long long samples, double confidence);

// Uniform element of an enumerated group (exact uniformity by index draw).
Elt sample_element(const FiniteGroup& g, SplitMix64& rng);

// Approximately uniform elements of a generator-presented permutation
// group via the product-replacement walk. Not certified uniform; the walk
// parameters are reported so results stay reproducible.
inline constexpr int kDefaultPrWidth = 10;
inline constexpr int kDefaultPrBurnIn = 50;

class ProductReplacementSampler {
public:
    ProductReplacementSampler(std::vector<Permutation> generators, std::uint64_t seed,
                              int width = kDefaultPrWidth, int burn_in = kDefaultPrBurnIn);

    const Permutation& sample();  // one walk step, then the replaced slot
    int degree() const { return degree_; }

private:
    void step();

    std::vector<Permutation> slots_;
    SplitMix64 rng_;
    int degree_ = 0;
    int last_ = 0;
};

// Pr(K,G) on an enumerated group: `samples` uniform pairs from K x G.
// Identical (inputs, seed) give identical estimates on every platform.
Estimate estimate_pr(GroupPtr g, const Subgroup& k, long long samples, std::uint64_t seed,
                     double confidence = 0.95);

// Pr(G,G) for a generator-presented permutation group, sampling both pair
// members by product replacement.
Estimate estimate_pr_generators(const std::vector<Permutation>& generators, long long samples,
                                std::uint64_t seed, double confidence = 0.95,
                                int width = kDefaultPrWidth, int burn_in = kDefaultPrBurnIn);

// Sampled centrality floor: min over sampled g in K of an estimate of
// Pr(<g>, G), with <g> enumerated exactly. Upper-biased: sampling can miss
// the worst element. element_samples >= |K| switches to exhaustive
// iteration over K.
struct FloorEstimate {
    Estimate estimate;
    Elt worst = -1;          // sampled element attaining the minimum
    bool exhaustive = false; // every element of K was visited
};
FloorEstimate estimate_centrality_floor(GroupPtr g, const Subgroup& k, long long element_samples,
                                        long long pair_samples, std::uint64_t seed,
                                        double confidence = 0.95);

}  // namespace commprob
