#include "commprob/measure.hpp"

#include <map>

#include "commprob/kernels.hpp"

namespace commprob {

Ratio subset_measure(GroupPtr g, const std::vector<Elt>& a) {
    for (Elt x : a)
        if (x < 0 || x >= g->order()) throw PreconditionError("subset element out of range");
    return Ratio(static_cast<long long>(a.size()), g->order());
}

Ratio subset_measure(const Subgroup& a) {
    return Ratio(a.size(), a.parent()->order());
}

PrReport pr(const Subgroup& k, GroupPtr g) {
    if (k.parent() != g) throw PreconditionError("subgroup belongs to a different group");
    const auto& data = g->conjugacy();
    BigInt sum = 0;
    for (Elt x : k.elements()) sum += data.centralizer_size[x];
    PrReport report;
    report.value = Ratio(sum, BigInt(k.size()) * g->order());
    report.method = PrMethod::ClassFormula;
    report.k_size = k.size();
    report.g_size = g->order();
    return report;
}

Ratio pr_within(const Subgroup& inner, const Subgroup& outer) {
    if (inner.parent() != outer.parent()) throw PreconditionError("subgroups of different groups");
    if (!outer.contains_all(inner)) throw PreconditionError("inner subgroup not contained in outer");
    const auto& g = *inner.parent();
    BigInt sum = 0;
    for (Elt x : inner.elements()) {
        int c = 0;
        for (Elt y : outer.elements())
            if (g.mul(x, y) == g.mul(y, x)) ++c;
        sum += c;
    }
    return Ratio(sum, BigInt(inner.size()) * outer.size());
}

PrReport pr_bruteforce(const Subgroup& k, GroupPtr g, long long pair_cap) {
    if (k.parent() != g) throw PreconditionError("subgroup belongs to a different group");
    const long long pairs = static_cast<long long>(k.size()) * g->order();
    if (pairs > pair_cap)
        throw SizeLimitError("pair count " + std::to_string(pairs) + " exceeds the cap of " +
                             std::to_string(pair_cap));
    std::vector<Elt> all(g->order());
    for (Elt x = 0; x < g->order(); ++x) all[x] = x;
    const long long hits = kernels::commuting_pairs_parallel(*g, k.elements(), all);
    PrReport report;
    report.value = Ratio(hits, pairs);
    report.method = PrMethod::BruteForce;
    report.k_size = k.size();
    report.g_size = g->order();
    return report;
}

CentralityFloor centrality_floor(GroupPtr g, const Subgroup& k) {
    if (k.parent() != g) throw PreconditionError("subgroup belongs to a different group");
    const auto& data = g->conjugacy();
    // Elements generating the same cyclic subgroup share the value.
    std::map<std::vector<bool>, Ratio> cache;
    CentralityFloor result{Ratio(2), -1};
    for (Elt x : k.elements()) {
        auto cyc = subgroup_generated(g, {x});
        auto it = cache.find(cyc.bits());
        Ratio value;
        if (it != cache.end()) {
            value = it->second;
        } else {
            BigInt sum = 0;
            for (Elt h : cyc.elements()) sum += data.centralizer_size[h];
            value = Ratio(sum, BigInt(cyc.size()) * g->order());
            cache.emplace(cyc.bits(), value);
        }
        if (result.witness == -1 || value < result.floor) {
            result.floor = value;
            result.witness = x;
        }
    }
    return result;
}

MonotonicityVerdict check_monotonicity(const Subgroup& h, const Subgroup& k, GroupPtr g) {
    if (h.parent() != g || k.parent() != g) throw PreconditionError("subgroups of a different group");
    if (!k.contains_all(h)) throw PreconditionError("H is not contained in K");
    MonotonicityVerdict v;
    v.pr_kg = pr(k, g).value;
    v.pr_hg = pr(h, g).value;
    v.pr_hk = pr_within(h, k);
    if (!(v.pr_kg <= v.pr_hg && v.pr_hg <= v.pr_hk))
        throw LemmaViolationError("monotonicity chain violated: Pr(K,G)=" + to_string(v.pr_kg) +
                                  " Pr(H,G)=" + to_string(v.pr_hg) + " Pr(H,K)=" + to_string(v.pr_hk));
    return v;
}

QuotientInequalityVerdict check_quotient_inequality(GroupPtr g, const Subgroup& n, const Subgroup& k) {
    if (n.parent() != g || k.parent() != g) throw PreconditionError("subgroups of a different group");
    const auto q = quotient(g, n);  // throws on a non-normal N

    QuotientInequalityVerdict v;
    v.pr_kg = pr(k, g).value;

    // KN/N as the image of K in the quotient.
    const auto knbar = q.image(k);
    v.pr_quotient = pr(knbar, q.target()).value;

    // Pr(K∩N, N) counted inside N.
    const auto kn = intersect(k, n);
    v.pr_restricted = pr_within(kn, n);

    if (!(v.pr_kg <= v.pr_quotient * v.pr_restricted))
        throw LemmaViolationError("quotient inequality violated: Pr(K,G)=" + to_string(v.pr_kg) +
                                  " > " + to_string(v.pr_quotient) + " * " + to_string(v.pr_restricted));
    return v;
}

IndexBoundVerdict index_bound_check(GroupPtr g, const Subgroup& h, const Subgroup& k, const Ratio& eps) {
    if (h.parent() != g || k.parent() != g) throw PreconditionError("subgroups of a different group");
    if (!h.contains_all(k)) throw PreconditionError("K is not contained in H");
    if (eps <= 0) throw PreconditionError("epsilon must be positive");
    const Ratio mu_k = subset_measure(k);
    const Ratio mu_h = subset_measure(h);
    if (!(mu_k >= eps * mu_h && mu_k > 0))
        throw PreconditionError("measure hypothesis mu(K) >= eps*mu(H) > 0 fails");
    IndexBoundVerdict v;
    v.index = h.size() / k.size();
    v.bound = 1 / eps;
    if (!(Ratio(v.index) <= v.bound))
        throw LemmaViolationError("index bound violated: [H:K]=" + std::to_string(v.index) +
                                  " > " + to_string(v.bound));
    return v;
}

std::string to_string(PrMethod method) {
    switch (method) {
        case PrMethod::ClassFormula: return "class-formula";
        case PrMethod::BruteForce: return "brute-force";
        case PrMethod::Sampled: return "sampled";
    }
    return "unknown";
}

}  // namespace commprob
