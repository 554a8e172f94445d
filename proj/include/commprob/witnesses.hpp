#pragma once

#include <string>
#include <utility>
#include <vector>

#include "commprob/group.hpp"
#include "commprob/measure.hpp"
#include "commprob/rational.hpp"

namespace commprob {

// Constructive witness pipelines. Each one executes a proof procedure and
// returns a certificate holding every object the argument produced, so the
// result can be re-verified from raw group data without rerunning the
// pipeline. Unmet hypotheses raise PreconditionError; a failed step that the
// argument guarantees raises LemmaViolationError and signals a bug.

// <X> = X^(3r) for a symmetric X containing the identity with
// (r+1)*mu(X) > 1.
struct EberhardReport {
    Subgroup span;      // <X>
    int minimal_k = 1;  // least k with X^k = <X>
    int r = 1;          // minimal r with (r+1)*mu(X) > 1
    int stabilization = 0;  // least i with X^(3i+1) = X^(3i)
    Ratio mu;           // |X| / |G|
};
EberhardReport eberhard_generation(GroupPtr g, const std::vector<Elt>& x);

// Witness for: Pr(K,G) >= eps yields a normal T <= G and B <= K with
// [G:T], [K:B] and |[T,B]| bounded in terms of eps alone.
struct Prop11Certificate {
    GroupPtr group;
    Subgroup k;
    Ratio epsilon;
    Ratio pr_kg;

    std::vector<Elt> x;  // {x in K : |x^G| <= 2/eps}
    Ratio nu_x;          // |X| / |K|
    Subgroup b;          // <X>
    int r = 1;
    long long index_kb = 1;
    int max_word_length = 0;  // over X within B, <= 3r

    Subgroup l;       // <B^G>
    Subgroup d;       // [L,L]
    QuotientMap quot; // G -> G/D

    std::vector<Elt> y;  // {y in G/D : |y^(K im)| <= 2/eps}
    Ratio mu_y;          // |Y| / |G/D|
    Subgroup ebar;       // <Y> in the quotient
    Subgroup tbar;       // normal core of ebar
    Subgroup t;          // preimage of tbar, normal in G
    Subgroup tb_bar;     // [tbar, image of B]
    Subgroup tb;         // [T, B] in G
};
Prop11Certificate prop11_witness(GroupPtr g, const Subgroup& k, const Ratio& eps);

// From eps-centrality of K, integers (l, n) with [G:C_G(g^l)] <= n for all
// g in K, via one cyclic-subgroup witness per element.
struct DeriveLnResult {
    long long l = 1;
    long long n = 1;
    std::vector<std::pair<Elt, long long>> per_element;  // g -> l_g = [<g> : B_g]
};
DeriveLnResult derive_ln(GroupPtr g, const Subgroup& k, const Ratio& eps);

// One stage of the (l,n) -> (e,T) argument. The recursion either ends at an
// abelian span ("central"), retries with l^2 on a strictly smaller class
// bound ("descent"), or runs the main construction ("main").
struct Prop13Stage {
    int level = 0;
    long long l = 1;
    std::vector<Elt> x;  // union of G-classes of l-th powers of K
    Subgroup h;          // <X>
    long long m = 1;     // max [H : C_H(x)] over x in X
    std::string branch;  // "central" | "descent" | "main"

    // main branch only
    Elt d_elt = -1;            // witness with [H:C_H(d^(l^2))] = m
    Elt a = -1;                // d^l
    std::vector<CosetRep> reps;  // b_i: C_H(a)-coset reps, lengths <= m-1
    Subgroup u;                // C_G({b_i})
    Subgroup u0;               // normal core of U
    Subgroup k0;               // K n U0
    Subgroup r_sub;            // normal closure of [H,a]
    std::vector<Elt> y1, y2;   // Xa^{-l} n U and Xa^{-1} n U
};

struct Prop13Certificate {
    GroupPtr group;
    Subgroup k;
    long long l = 1, n = 1;
    std::vector<Prop13Stage> trace;  // outermost first

    bool quotiented = false;  // main branch passes to G / R
    QuotientMap quot;         // set when quotiented
    Prop11Certificate inner;  // run on G (central) or G/R (main)

    long long e = 1;  // minimal divisor of exponent(G) with K^e <= V
    Subgroup t;       // normal in G
    Subgroup v;       // preimage of the inner B; K^e <= V
    Subgroup ket;     // [K^e, T]
};
Prop13Certificate prop13_witness(GroupPtr g, const Subgroup& k, long long l, long long n);

// Converse direction: from a normal T and exponent e, a positive epsilon0
// with K epsilon0-central. epsilon0 = 1/(e*m*s) with s = [G:T],
// m = |[K^e,T]|; justified by [G:C_G(g^e)] <= m*s, checked exhaustively.
struct ConverseReport {
    Ratio epsilon0;
    long long max_index = 1;  // max over g in K of [G : C_G(g^e)]
    long long s = 1;
    long long m = 1;
};
ConverseReport converse_epsilon(GroupPtr g, const Subgroup& k, const Subgroup& t, long long e);

struct Thm12Certificate {
    Ratio epsilon;
    DeriveLnResult ln;
    Prop13Certificate inner;
    Ratio epsilon0;
};
Thm12Certificate thm12_witness(GroupPtr g, const Subgroup& k, const Ratio& eps);

// If every G-class holding an l-th power of an element of K has size <= n,
// then K is 1/(l*n)-central.
struct ClassBoundVerdict {
    Ratio floor;  // exact centrality floor of K
    Ratio bound;  // 1/(l*n)
};
ClassBoundVerdict class_bound_centrality(GroupPtr g, const Subgroup& k, long long l, long long n);

// Re-verification of a stored certificate against raw group data. Every
// violated clause is reported; no pipeline is rerun.
struct ValidationReport {
    bool ok = true;
    std::vector<std::string> failures;

    void fail(std::string clause) {
        ok = false;
        failures.push_back(std::move(clause));
    }
};
ValidationReport validate_certificate(const Prop11Certificate& cert);
ValidationReport validate_certificate(const Prop13Certificate& cert);
ValidationReport validate_certificate(const Thm12Certificate& cert);

// Exhaustive quality oracle for the (T, B) witnesses: all Pareto-optimal
// triples ([G:T], [K:B], |[T,B]|) over normal T and cyclic-generated B <= K.
struct WitnessTriple {
    Subgroup t;
    Subgroup b;
    long long index_gt = 1;
    long long index_kb = 1;
    long long comm_order = 1;
};
std::vector<WitnessTriple> bruteforce_witness_oracle(GroupPtr g, const Subgroup& k);

}  // namespace commprob
