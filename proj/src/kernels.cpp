#include "commprob/kernels.hpp"

#include "commprob/group.hpp"
#include "commprob/rng.hpp"

namespace commprob::kernels {

namespace {

long long commuting_pairs_row(const FiniteGroup& g, int x, std::span<const int> b) {
    long long hits = 0;
    for (int y : b)
        if (g.mul(x, y) == g.mul(y, x)) ++hits;
    return hits;
}

int centralizer_size_of(const FiniteGroup& g, int x) {
    int count = 0;
    for (int y = 0; y < g.order(); ++y)
        if (g.mul(x, y) == g.mul(y, x)) ++count;
    return count;
}

long long mc_stream_hits(const FiniteGroup& g, std::span<const int> kElems,
                         std::span<const int> gElems, long long samples, std::uint64_t seed) {
    SplitMix64 rng(seed);
    long long hits = 0;
    for (long long i = 0; i < samples; ++i) {
        const int x = kElems[rng.below(kElems.size())];
        const int y = gElems[rng.below(gElems.size())];
        if (g.mul(x, y) == g.mul(y, x)) ++hits;
    }
    return hits;
}

long long stream_share(long long samples, int stream) {
    return samples / kStreamCount + (stream < samples % kStreamCount ? 1 : 0);
}

}  // namespace

long long commuting_pairs_serial(const FiniteGroup& g, std::span<const int> a,
                                 std::span<const int> b) {
    long long hits = 0;
    for (int x : a) hits += commuting_pairs_row(g, x, b);
    return hits;
}

long long commuting_pairs_parallel(const FiniteGroup& g, std::span<const int> a,
                                   std::span<const int> b) {
    long long hits = 0;
    const auto count = static_cast<long long>(a.size());
#pragma omp parallel for reduction(+ : hits) schedule(static)
    for (long long i = 0; i < count; ++i) hits += commuting_pairs_row(g, a[i], b);
    return hits;
}

std::vector<int> centralizer_sizes_serial(const FiniteGroup& g) {
    std::vector<int> sizes(g.order());
    for (int x = 0; x < g.order(); ++x) sizes[x] = centralizer_size_of(g, x);
    return sizes;
}

std::vector<int> centralizer_sizes_parallel(const FiniteGroup& g) {
    std::vector<int> sizes(g.order());
#pragma omp parallel for schedule(static)
    for (int x = 0; x < g.order(); ++x) sizes[x] = centralizer_size_of(g, x);
    return sizes;
}

long long mc_commute_hits_serial(const FiniteGroup& g, std::span<const int> kElems,
                                 std::span<const int> gElems, long long samples,
                                 std::uint64_t seed) {
    long long hits = 0;
    for (int s = 0; s < kStreamCount; ++s)
        hits += mc_stream_hits(g, kElems, gElems, stream_share(samples, s), substream_seed(seed, s));
    return hits;
}

long long mc_commute_hits_parallel(const FiniteGroup& g, std::span<const int> kElems,
                                   std::span<const int> gElems, long long samples,
                                   std::uint64_t seed) {
    long long hits = 0;
#pragma omp parallel for reduction(+ : hits) schedule(static)
    for (int s = 0; s < kStreamCount; ++s)
        hits += mc_stream_hits(g, kElems, gElems, stream_share(samples, s), substream_seed(seed, s));
    return hits;
}

}  // namespace commprob::kernels
