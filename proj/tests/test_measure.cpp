#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "commprob/catalog.hpp"
#include "commprob/kernels.hpp"
#include "commprob/measure.hpp"

using namespace commprob;

namespace {

Ratio pr_of(const std::string& spec) {
    const auto g = build_group(spec);
    return pr(Subgroup::whole(g), g).value;
}

}  // namespace

TEST_CASE("known commuting probabilities") {
    CHECK(pr_of("S3") == make_ratio(1, 2));
    CHECK(pr_of("D4") == make_ratio(5, 8));
    CHECK(pr_of("Q8") == make_ratio(5, 8));
    CHECK(pr_of("S4") == make_ratio(5, 24));
    CHECK(pr_of("A5") == make_ratio(1, 12));
    CHECK(pr_of("C17") == 1);
    CHECK(pr_of("E2^4") == 1);
    // A3 inside S3
    const auto s3 = build_group("S3");
    const auto a3 = derived_subgroup(s3);
    CHECK(pr(a3, s3).value == make_ratio(2, 3));
}

TEST_CASE("class-formula path equals the brute-force pair count") {
    for (const auto& entry : test_corpus(48))
        for (const auto& ks : entry.subgroups) {
            const auto fast = pr(ks.subgroup, entry.group);
            const auto slow = pr_bruteforce(ks.subgroup, entry.group);
            CHECK(fast.value == slow.value);
            CHECK(fast.method == PrMethod::ClassFormula);
            CHECK(slow.method == PrMethod::BruteForce);
        }
}

TEST_CASE("brute force respects the pair cap") {
    const auto g = build_group("S4");
    CHECK_THROWS_AS(pr_bruteforce(Subgroup::whole(g), g, 100), SizeLimitError);
}

TEST_CASE("serial and parallel pair kernels agree") {
    for (const char* spec : {"S4", "D16", "A5"}) {
        const auto g = build_group(spec);
        std::vector<Elt> all(g->order());
        for (Elt x = 0; x < g->order(); ++x) all[x] = x;
        CHECK(kernels::commuting_pairs_serial(*g, all, all) ==
              kernels::commuting_pairs_parallel(*g, all, all));
        CHECK(kernels::centralizer_sizes_serial(*g) == kernels::centralizer_sizes_parallel(*g));
    }
}

TEST_CASE("subset measure") {
    const auto g = build_group("C8");
    CHECK(subset_measure(g, {0, 1, 2}) == make_ratio(3, 8));
    CHECK(subset_measure(Subgroup::whole(g)) == 1);
    CHECK(subset_measure(Subgroup::trivial(g)) == make_ratio(1, 8));
}

TEST_CASE("pr_within counts inside the outer subgroup") {
    const auto g = build_group("S4");
    const auto a4 = derived_subgroup(g);
    // Pr(A4, A4) computed as a subgroup of S4 must match the standalone value
    const auto a4_standalone = build_group("A4");
    CHECK(pr_within(a4, a4) == pr(Subgroup::whole(a4_standalone), a4_standalone).value);
    CHECK(pr_within(Subgroup::trivial(g), a4) == 1);
    const auto s3sub = subgroup_generated(g, {g->find_label({1, 0, 2, 3}).value(),
                                              g->find_label({0, 2, 1, 3}).value()});
    REQUIRE(s3sub.size() == 6);
    CHECK(pr_within(s3sub, s3sub) == make_ratio(1, 2));
    CHECK_THROWS_AS(pr_within(a4, s3sub), PreconditionError);
}

TEST_CASE("centrality floor with attaining witness") {
    const auto s3 = build_group("S3");
    const auto fl = centrality_floor(s3, Subgroup::whole(s3));
    CHECK(fl.floor == make_ratio(2, 3));
    CHECK(s3->element_order(fl.witness) == 2);  // transpositions attain 2/3...

    const auto q8 = build_group("Q8");
    CHECK(centrality_floor(q8, Subgroup::whole(q8)).floor == make_ratio(3, 4));
    CHECK(centrality_floor(q8, center_subgroup(q8)).floor == 1);

    // on a central subgroup the floor is 1 and the witness the identity
    const auto c6 = build_group("C6");
    const auto abelian = centrality_floor(c6, Subgroup::whole(c6));
    CHECK(abelian.floor == 1);
    CHECK(abelian.witness == FiniteGroup::identity);
}

TEST_CASE("monotonicity checker returns the full chain") {
    const auto g = build_group("D6");
    const auto z = center_subgroup(g);
    const auto whole = Subgroup::whole(g);
    const auto v = check_monotonicity(z, whole, g);
    CHECK(v.pr_kg <= v.pr_hg);
    CHECK(v.pr_hg <= v.pr_hk);
    CHECK(v.pr_kg == pr(whole, g).value);
    CHECK_THROWS_AS(check_monotonicity(whole, z, g), PreconditionError);  // H not inside K
}

TEST_CASE("quotient inequality checker") {
    const auto g = build_group("S4");
    const auto a4 = derived_subgroup(g);
    const auto v = check_quotient_inequality(g, a4, Subgroup::whole(g));
    CHECK(v.pr_kg <= v.pr_quotient * v.pr_restricted);
    CHECK(v.pr_quotient == 1);  // S4/A4 is abelian
    // non-normal kernels are rejected by the quotient construction
    CHECK_THROWS_AS(check_quotient_inequality(g, subgroup_generated(g, {1}), Subgroup::whole(g)),
                    PreconditionError);
}

TEST_CASE("index bound from a measure inequality") {
    const auto g = build_group("C12");
    const auto whole = Subgroup::whole(g);
    const auto k = power_subgroup(g, whole, 3);  // index 3
    const auto v = index_bound_check(g, whole, k, make_ratio(1, 3));
    CHECK(v.index == 3);
    CHECK(v.bound == 3);
    CHECK_THROWS_AS(index_bound_check(g, whole, k, make_ratio(1, 2)), PreconditionError);
    CHECK_THROWS_AS(index_bound_check(g, whole, k, Ratio(0)), PreconditionError);
}
