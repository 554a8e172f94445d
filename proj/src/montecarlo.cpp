#include "commprob/montecarlo.hpp"

#include <algorithm>
#include <cmath>

#include "commprob/errors.hpp"
#include "commprob/kernels.hpp"

namespace commprob {

namespace {

// Continued-fraction evaluation of the regularized incomplete beta
// function (modified Lentz method).
double beta_cf(double a, double b, double x) {
    constexpr int kMaxIter = 300;
    constexpr double kEps = 3e-14;
    constexpr double kTiny = 1e-300;

    const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) break;
    }
    return h;
}

double reg_inc_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                            a * std::log(x) + b * std::log(1.0 - x);
    const double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_cf(a, b, x) / a;
    return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

// Inverse by bisection: monotone in x, so 200 halvings reach full double
// precision.
double inv_reg_inc_beta(double a, double b, double p) {
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (reg_inc_beta(a, b, mid) < p) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

Estimate finish_estimate(long long hits, long long samples, std::uint64_t seed,
                         double confidence, std::string method) {
    Estimate e;
    e.hits = hits;
    e.samples = samples;
    e.seed = seed;
    e.confidence = confidence;
    e.method = std::move(method);
    e.point_value = static_cast<double>(hits) / static_cast<double>(samples);
    const auto [lo, hi] = clopper_pearson(hits, samples, confidence);
    e.lo = lo;
    e.hi = hi;
    return e;
}

}  // namespace

std::pair<double, double> clopper_pearson(long long hits, long long samples, double confidence) {
    if (samples < 1) throw PreconditionError("interval needs at least one sample");
    if (hits < 0 || hits > samples) throw PreconditionError("hit count out of range");
    if (confidence <= 0.0 || confidence >= 1.0)
        throw PreconditionError("confidence must lie strictly between 0 and 1");
    const double alpha = 1.0 - confidence;
    const double h = static_cast<double>(hits);
    const double n = static_cast<double>(samples);
    const double lo = (hits == 0) ? 0.0 : inv_reg_inc_beta(h, n - h + 1.0, alpha / 2.0);
    const double hi = (hits == samples) ? 1.0 : inv_reg_inc_beta(h + 1.0, n - h, 1.0 - alpha / 2.0);
    return {lo, hi};
}

Elt sample_element(const FiniteGroup& g, SplitMix64& rng) {
    return static_cast<Elt>(rng.below(static_cast<std::uint64_t>(g.order())));
}

ProductReplacementSampler::ProductReplacementSampler(std::vector<Permutation> generators,
                                                     std::uint64_t seed, int width, int burn_in)
    : rng_(seed) {
    if (generators.empty()) throw PreconditionError("sampler needs at least one generator");
    degree_ = static_cast<int>(generators[0].size());
    for (const auto& p : generators)
        if (static_cast<int>(p.size()) != degree_)
            throw PreconditionError("generators act on different degrees");
    if (width < 2) throw PreconditionError("walk width must be at least 2");
    slots_.reserve(width);
    for (int i = 0; i < width; ++i) slots_.push_back(generators[i % generators.size()]);
    for (int i = 0; i < burn_in; ++i) step();
}

void ProductReplacementSampler::step() {
    const int w = static_cast<int>(slots_.size());
    const int i = static_cast<int>(rng_.below(w));
    int j = static_cast<int>(rng_.below(w - 1));
    if (j >= i) ++j;
    const bool invert = rng_.below(2) == 1;
    const Permutation& other = invert ? perm_inverse(slots_[j]) : slots_[j];
    slots_[i] = perm_compose(slots_[i], other);
    last_ = i;
}

const Permutation& ProductReplacementSampler::sample() {
    step();
    return slots_[last_];
}

Estimate estimate_pr(GroupPtr g, const Subgroup& k, long long samples, std::uint64_t seed,
                     double confidence) {
    if (k.parent() != g) throw PreconditionError("subgroup belongs to a different group");
    if (samples < 1) throw PreconditionError("sample count must be positive");
    std::vector<Elt> all(g->order());
    for (Elt x = 0; x < g->order(); ++x) all[x] = x;
    const long long hits =
        kernels::mc_commute_hits_parallel(*g, k.elements(), all, samples, seed);
    return finish_estimate(hits, samples, seed, confidence, "uniform-index");
}

Estimate estimate_pr_generators(const std::vector<Permutation>& generators, long long samples,
                                std::uint64_t seed, double confidence, int width, int burn_in) {
    if (samples < 1) throw PreconditionError("sample count must be positive");
    ProductReplacementSampler left(generators, substream_seed(seed, 0), width, burn_in);
    ProductReplacementSampler right(generators, substream_seed(seed, 1), width, burn_in);
    long long hits = 0;
    for (long long i = 0; i < samples; ++i) {
        const Permutation x = left.sample();
        const Permutation y = right.sample();
        if (perm_compose(x, y) == perm_compose(y, x)) ++hits;
    }
    return finish_estimate(hits, samples, seed, confidence, "random-word");
}

FloorEstimate estimate_centrality_floor(GroupPtr g, const Subgroup& k, long long element_samples,
                                        long long pair_samples, std::uint64_t seed,
                                        double confidence) {
    if (k.parent() != g) throw PreconditionError("subgroup belongs to a different group");
    if (element_samples < 1 || pair_samples < 1)
        throw PreconditionError("sample counts must be positive");

    std::vector<Elt> chosen;
    const bool exhaustive = element_samples >= k.size();
    if (exhaustive) {
        chosen = k.elements();
    } else {
        SplitMix64 rng(substream_seed(seed, 0));
        chosen.reserve(element_samples);
        for (long long i = 0; i < element_samples; ++i)
            chosen.push_back(k.elements()[rng.below(static_cast<std::uint64_t>(k.size()))]);
    }

    std::vector<Elt> all(g->order());
    for (Elt x = 0; x < g->order(); ++x) all[x] = x;

    FloorEstimate result;
    result.exhaustive = exhaustive;
    long long best_hits = -1;
    for (size_t i = 0; i < chosen.size(); ++i) {
        const Elt x = chosen[i];
        const auto cyc = subgroup_generated(g, {x});
        const long long hits = kernels::mc_commute_hits_parallel(
            *g, cyc.elements(), all, pair_samples, substream_seed(seed, 1 + i));
        if (best_hits < 0 || hits < best_hits) {
            best_hits = hits;
            result.worst = x;
        }
    }
    result.estimate =
        finish_estimate(best_hits, pair_samples, seed, confidence, "uniform-index");
    return result;
}

}  // namespace commprob
