#include <chrono>
#include <iostream>

#include "commprob/catalog.hpp"
#include "commprob/kernels.hpp"

// Times the OpenMP kernels against their serial references and checks that
// both agree exactly. Run without arguments; wall times are printed per
// kernel and group.

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename F>
double time_best_of(int repeats, F&& f) {
    double best = 1e300;
    for (int i = 0; i < repeats; ++i) {
        const auto start = Clock::now();
        f();
        best = std::min(best, seconds_since(start));
    }
    return best;
}

}  // namespace

int main() {
    using namespace commprob;

    for (const char* spec : {"S5", "S6"}) {
        const auto g = build_group(spec);
        std::vector<Elt> all(g->order());
        for (Elt x = 0; x < g->order(); ++x) all[x] = x;

        std::cout << spec << " (order " << g->order() << ")\n";

        long long serial_pairs = 0, parallel_pairs = 0;
        const double t_pairs_s = time_best_of(3, [&] {
            serial_pairs = kernels::commuting_pairs_serial(*g, all, all);
        });
        const double t_pairs_p = time_best_of(3, [&] {
            parallel_pairs = kernels::commuting_pairs_parallel(*g, all, all);
        });
        if (serial_pairs != parallel_pairs) {
            std::cerr << "MISMATCH in commuting pair counts\n";
            return 1;
        }
        std::cout << "  commuting pairs:   serial " << t_pairs_s << " s, parallel " << t_pairs_p
                  << " s, speedup " << t_pairs_s / t_pairs_p << "x\n";

        std::vector<int> sizes_s, sizes_p;
        const double t_cent_s =
            time_best_of(3, [&] { sizes_s = kernels::centralizer_sizes_serial(*g); });
        const double t_cent_p =
            time_best_of(3, [&] { sizes_p = kernels::centralizer_sizes_parallel(*g); });
        if (sizes_s != sizes_p) {
            std::cerr << "MISMATCH in centralizer sizes\n";
            return 1;
        }
        std::cout << "  centralizer sizes: serial " << t_cent_s << " s, parallel " << t_cent_p
                  << " s, speedup " << t_cent_s / t_cent_p << "x\n";

        constexpr long long kSamples = 2'000'000;
        long long hits_s = 0, hits_p = 0;
        const double t_mc_s = time_best_of(3, [&] {
            hits_s = kernels::mc_commute_hits_serial(*g, all, all, kSamples, 42);
        });
        const double t_mc_p = time_best_of(3, [&] {
            hits_p = kernels::mc_commute_hits_parallel(*g, all, all, kSamples, 42);
        });
        if (hits_s != hits_p) {
            std::cerr << "MISMATCH in sampled hit counts\n";
            return 1;
        }
        std::cout << "  sampling:          serial " << t_mc_s << " s, parallel " << t_mc_p
                  << " s, speedup " << t_mc_s / t_mc_p << "x\n";
    }
    return 0;
}
