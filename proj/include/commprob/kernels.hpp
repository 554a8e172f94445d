#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace commprob {

class FiniteGroup;

// Hot enumeration loops, each in a serial reference form and an OpenMP
// form. The parallel kernels are the production path; the serial ones are
// kept for testing and for the benchmark target. Both forms must produce
// identical results on identical inputs.
namespace kernels {

// |{(x,y) in A x B : xy = yx}|
long long commuting_pairs_serial(const FiniteGroup& G,
                                 std::span<const int> a,
                                 std::span<const int> b);
long long commuting_pairs_parallel(const FiniteGroup& G,
                                   std::span<const int> a,
                                   std::span<const int> b);

// |C_G(x)| for every x.
std::vector<int> centralizer_sizes_serial(const FiniteGroup& G);
std::vector<int> centralizer_sizes_parallel(const FiniteGroup& G);

// Monte Carlo commuting-pair trials: draws (x,y) from kElems x gElems and
// counts commutations. Work is split over a fixed number of RNG streams so
// the parallel form merges the same per-stream counts as the serial one.
inline constexpr int kStreamCount = 16;

long long mc_commute_hits_serial(const FiniteGroup& G,
                                 std::span<const int> kElems,
                                 std::span<const int> gElems,
                                 long long samples, std::uint64_t seed);
long long mc_commute_hits_parallel(const FiniteGroup& G,
                                   std::span<const int> kElems,
                                   std::span<const int> gElems,
                                   long long samples, std::uint64_t seed);

}  // namespace kernels
}  // namespace commprob
