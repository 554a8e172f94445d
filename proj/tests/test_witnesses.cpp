#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "commprob/catalog.hpp"
#include "commprob/measure.hpp"
#include "commprob/witnesses.hpp"

using namespace commprob;

namespace {

Elt label_of(const GroupPtr& g, const Permutation& p) {
    return g->find_label(p).value();
}

// Oracle: grow the product sets X^1, X^2, ... directly until they stop.
int product_set_stabilization(const GroupPtr& g, const std::vector<Elt>& x) {
    std::set<Elt> cur(x.begin(), x.end());
    int k = 1;
    while (true) {
        std::set<Elt> next;
        for (Elt a : cur)
            for (Elt b : x) next.insert(g->mul(a, b));
        if (next == cur) return k;
        cur = std::move(next);
        ++k;
    }
}

// Oracle for the derived (l, n): the smallest n admitting any l, by scan.
long long best_n_by_scan(const GroupPtr& g, const Subgroup& k) {
    long long best = g->order();
    for (long long l = 1; l <= g->exponent(); ++l) {
        long long worst = 1;
        for (Elt x : k.elements())
            worst = std::max<long long>(worst, class_size_under(*g, g->power(x, l),
                                                               Subgroup::whole(g)));
        best = std::min(best, worst);
    }
    return best;
}

}  // namespace

TEST_CASE("generation bound on hand-picked sets") {
    const auto c6 = build_group("C6");
    // X = {0, g, g^-1}: mu = 1/2, r = 2 is minimal with (r+1)mu > 1
    const auto rep = eberhard_generation(c6, {0, 1, c6->inverse(1)});
    CHECK(rep.r == 2);
    CHECK(rep.mu == make_ratio(1, 2));
    CHECK(rep.span.size() == 6);
    CHECK(rep.minimal_k == product_set_stabilization(c6, {0, 1, c6->inverse(1)}));
    CHECK(rep.minimal_k <= 3 * rep.r);

    const auto s3 = build_group("S3");
    const std::vector<Elt> gens = {0, label_of(s3, {1, 0, 2}), label_of(s3, {0, 2, 1})};
    const auto rep2 = eberhard_generation(s3, gens);
    CHECK(rep2.mu == make_ratio(1, 2));
    CHECK(rep2.r == 2);
    CHECK(rep2.span.size() == 6);
    CHECK(rep2.minimal_k == product_set_stabilization(s3, gens));

    // X = G: everything stabilizes immediately
    std::vector<Elt> all(s3->order());
    for (Elt x = 0; x < s3->order(); ++x) all[x] = x;
    const auto rep3 = eberhard_generation(s3, all);
    CHECK(rep3.r == 1);
    CHECK(rep3.minimal_k == 1);
}

TEST_CASE("generation bound preconditions") {
    const auto s3 = build_group("S3");
    CHECK_THROWS_AS(eberhard_generation(s3, {1}), PreconditionError);        // no identity
    CHECK_THROWS_AS(eberhard_generation(s3, {0, 2}), PreconditionError);     // not symmetric
    CHECK_THROWS_AS(eberhard_generation(s3, {}), PreconditionError);
}

TEST_CASE("first pipeline on S3 at its exact probability") {
    const auto g = build_group("S3");
    const auto k = Subgroup::whole(g);
    const auto cert = prop11_witness(g, k, make_ratio(1, 2));
    // every class has size <= 4 = 2/eps, so X is everything
    CHECK(cert.x.size() == 6);
    CHECK(cert.nu_x == 1);
    CHECK(cert.b.size() == 6);
    CHECK(cert.r == 1);
    CHECK(cert.d.size() == 3);
    CHECK(cert.quot.target()->order() == 2);
    CHECK(cert.t.size() == 6);
    CHECK(cert.t.is_normal());
    CHECK(cert.tb.size() == 3);
    CHECK(validate_certificate(cert).ok);
}

TEST_CASE("first pipeline on an abelian group and on a central subgroup") {
    const auto c12 = build_group("C12");
    const auto cert = prop11_witness(c12, Subgroup::whole(c12), make_ratio(1, 100));
    CHECK(cert.b.size() == 12);
    CHECK(cert.t.size() == 12);
    CHECK(cert.tb.size() == 1);  // [T,B] trivial in an abelian group
    CHECK(validate_certificate(cert).ok);

    const auto d4 = build_group("D4");
    const auto cert2 = prop11_witness(d4, center_subgroup(d4), Ratio(1));
    CHECK(cert2.b == center_subgroup(d4));
    CHECK(cert2.t.size() == 8);
    CHECK(cert2.tb.size() == 1);
    CHECK(validate_certificate(cert2).ok);
}

TEST_CASE("first pipeline rejects an unmet probability hypothesis") {
    const auto g = build_group("S4");
    CHECK_THROWS_AS(prop11_witness(g, Subgroup::whole(g), make_ratio(1, 2)), PreconditionError);
    CHECK_THROWS_AS(prop11_witness(g, Subgroup::whole(g), Ratio(0)), PreconditionError);
}

TEST_CASE("first pipeline bounds hold across the corpus") {
    for (const auto& entry : test_corpus(32))
        for (const auto& ks : entry.subgroups) {
            const auto eps = pr(ks.subgroup, entry.group).value;
            const auto cert = prop11_witness(entry.group, ks.subgroup, eps);
            CHECK(cert.max_word_length <= 3 * cert.r);
            CHECK(cert.t.is_normal());
            CHECK((cert.r + 1) * cert.nu_x > 1);
            CHECK(ks.subgroup.contains_all(cert.b));
            CHECK(validate_certificate(cert).ok);
        }
}

TEST_CASE("derived exponent and class bound") {
    const auto c8 = build_group("C8");
    const auto abelian = derive_ln(c8, Subgroup::whole(c8), Ratio(1));
    CHECK(abelian.l == 1);
    CHECK(abelian.n == 1);

    const auto q8 = build_group("Q8");
    const auto q = derive_ln(q8, Subgroup::whole(q8), make_ratio(3, 4));
    // every square in Q8 is central, so classes of l-th powers are singletons
    for (Elt x = 0; x < q8->order(); ++x)
        CHECK(class_size_under(*q8, q8->power(x, q.l), Subgroup::whole(q8)) <= q.n);
    // n is exactly the worst class size among l-th powers, never less
    long long worst = 1;
    const auto q8_whole = Subgroup::whole(q8);
    for (Elt x : q8_whole.elements())
        worst = std::max<long long>(
            worst, class_size_under(*q8, q8->power(x, q.l), Subgroup::whole(q8)));
    CHECK(q.n == worst);
    CHECK(q.n >= best_n_by_scan(q8, Subgroup::whole(q8)));

    const auto s3 = build_group("S3");
    const auto s = derive_ln(s3, Subgroup::whole(s3), make_ratio(2, 3));
    for (Elt x = 0; x < s3->order(); ++x)
        CHECK(class_size_under(*s3, s3->power(x, s.l), Subgroup::whole(s3)) <= s.n);
    for (const auto& [elt, lg] : s.per_element) CHECK(s.l % lg == 0);

    CHECK_THROWS_AS(derive_ln(s3, Subgroup::whole(s3), make_ratio(4, 5)), PreconditionError);
}

TEST_CASE("second pipeline ends in the central branch on near-abelian input") {
    const auto c12 = build_group("C12");
    const auto cert = prop13_witness(c12, Subgroup::whole(c12), 1, 1);
    REQUIRE(!cert.trace.empty());
    CHECK(cert.trace.back().branch == "central");
    CHECK_FALSE(cert.quotiented);
    CHECK(cert.e == 1);
    CHECK(cert.t.size() == 12);
    CHECK(cert.ket.size() == 1);
    CHECK(validate_certificate(cert).ok);

    const auto q8 = build_group("Q8");
    const auto cert2 = prop13_witness(q8, Subgroup::whole(q8), 2, 1);
    CHECK(cert2.trace.back().branch == "central");
    CHECK(cert2.t.is_normal());
    CHECK(cert2.v.contains_all(power_subgroup(q8, Subgroup::whole(q8), cert2.e)));
    CHECK(validate_certificate(cert2).ok);
}

TEST_CASE("second pipeline main branch on S3") {
    const auto g = build_group("S3");
    const auto cert = prop13_witness(g, Subgroup::whole(g), 1, 6);
    bool saw_main = false;
    for (const auto& stage : cert.trace)
        if (stage.branch == "main") {
            saw_main = true;
            CHECK(stage.a == g->power(stage.d_elt, stage.l));
            for (const auto& rep : stage.reps) CHECK(rep.length <= stage.m - 1);
        }
    CHECK(saw_main);
    CHECK(cert.t.is_normal());
    CHECK(cert.v.contains_all(power_subgroup(g, Subgroup::whole(g), cert.e)));
    CHECK(validate_certificate(cert).ok);
}

TEST_CASE("second pipeline rejects a false class-bound hypothesis") {
    const auto g = build_group("S3");
    // classes of first powers reach size 3 > 1
    CHECK_THROWS_AS(prop13_witness(g, Subgroup::whole(g), 1, 1), PreconditionError);
}

TEST_CASE("full pipeline on known groups") {
    const auto q8 = build_group("Q8");
    const auto cert = thm12_witness(q8, Subgroup::whole(q8), make_ratio(3, 4));
    CHECK(cert.ln.l == 1);
    CHECK(cert.ln.n == 2);
    CHECK(cert.inner.e == 2);
    CHECK(cert.inner.t.size() == 8);
    CHECK(cert.epsilon0 == make_ratio(1, 2));
    CHECK(validate_certificate(cert).ok);

    const auto s3 = build_group("S3");
    const auto cert2 = thm12_witness(s3, Subgroup::whole(s3), make_ratio(2, 3));
    CHECK(cert2.epsilon0 == make_ratio(1, 6));
    CHECK(cert2.epsilon0 <= make_ratio(2, 3));
    CHECK(validate_certificate(cert2).ok);

    const auto c6 = build_group("C6");
    const auto cert3 = thm12_witness(c6, Subgroup::whole(c6), Ratio(1));
    CHECK(cert3.inner.e == 1);
    CHECK(cert3.epsilon0 == 1);
    CHECK(validate_certificate(cert3).ok);

    CHECK_THROWS_AS(thm12_witness(s3, Subgroup::whole(s3), make_ratio(3, 4)),
                    PreconditionError);
}

TEST_CASE("full pipeline respects the floor across the corpus") {
    for (const auto& entry : test_corpus(24))
        for (const auto& ks : entry.subgroups) {
            const auto eps = centrality_floor(entry.group, ks.subgroup).floor;
            const auto cert = thm12_witness(entry.group, ks.subgroup, eps);
            CHECK(cert.epsilon0 <= eps);
            CHECK(cert.epsilon0 > 0);
            CHECK(cert.inner.t.is_normal());
            CHECK(validate_certificate(cert).ok);
        }
}

TEST_CASE("converse bound") {
    const auto q8 = build_group("Q8");
    const auto whole = Subgroup::whole(q8);
    const auto conv = converse_epsilon(q8, whole, whole, 2);
    CHECK(conv.s == 1);
    CHECK(conv.m == 1);  // squares are central: [K^2, G] = 1
    CHECK(conv.epsilon0 == make_ratio(1, 2));
    CHECK(conv.max_index <= conv.m * conv.s);

    const auto s3 = build_group("S3");
    const auto conv2 = converse_epsilon(s3, Subgroup::whole(s3), Subgroup::whole(s3), 6);
    CHECK(conv2.epsilon0 == make_ratio(1, 6));

    // a non-normal T is rejected
    CHECK_THROWS_AS(
        converse_epsilon(s3, Subgroup::whole(s3), subgroup_generated(s3, {1}), 1),
        PreconditionError);
}

TEST_CASE("class bound on centrality") {
    const auto q8 = build_group("Q8");
    const auto v = class_bound_centrality(q8, Subgroup::whole(q8), 2, 1);
    CHECK(v.bound == make_ratio(1, 2));
    CHECK(v.floor == make_ratio(3, 4));
    CHECK(v.floor >= v.bound);

    const auto s3 = build_group("S3");
    const auto v2 = class_bound_centrality(s3, Subgroup::whole(s3), 1, 3);
    CHECK(v2.floor == make_ratio(2, 3));
    CHECK(v2.floor >= make_ratio(1, 3));

    // hypothesis fails: S3 has a class of size 3 > 1
    CHECK_THROWS_AS(class_bound_centrality(s3, Subgroup::whole(s3), 1, 1), PreconditionError);
}

TEST_CASE("validation flags tampered certificates") {
    const auto g = build_group("S3");
    const auto base = prop11_witness(g, Subgroup::whole(g), make_ratio(1, 2));
    REQUIRE(validate_certificate(base).ok);

    auto tampered = base;
    tampered.r += 1;  // r must be minimal
    CHECK_FALSE(validate_certificate(tampered).ok);

    tampered = base;
    tampered.t = subgroup_generated(g, {1});  // not normal, wrong preimage
    CHECK_FALSE(validate_certificate(tampered).ok);

    tampered = base;
    tampered.epsilon = make_ratio(3, 4);  // above the actual probability
    CHECK_FALSE(validate_certificate(tampered).ok);

    const auto thm = thm12_witness(g, Subgroup::whole(g), make_ratio(2, 3));
    auto thm_bad = thm;
    thm_bad.inner.e += 1;
    CHECK_FALSE(validate_certificate(thm_bad).ok);

    thm_bad = thm;
    thm_bad.epsilon0 *= 2;
    CHECK_FALSE(validate_certificate(thm_bad).ok);

    thm_bad = thm;
    thm_bad.ln.n += 1;
    CHECK_FALSE(validate_certificate(thm_bad).ok);
}

TEST_CASE("normal closure of the commutator set equals the conjugate product") {
    // the relation subgroup in the main branch: <[h,a] : h in H>^G matches
    // the subgroup generated by all [h, a^t]
    for (const char* spec : {"S3", "D4", "A4", "Q8"}) {
        const auto g = build_group(spec);
        for (Elt a = 0; a < g->order(); ++a) {
            const auto h = normal_closure(g, std::vector<Elt>{a});
            std::vector<Elt> comms;
            for (Elt x : h.elements()) comms.push_back(g->comm(x, a));
            const auto r = normal_closure(g, subgroup_generated(g, comms));

            std::vector<Elt> conj_comms;
            for (Elt t = 0; t < g->order(); ++t)
                for (Elt x : h.elements()) conj_comms.push_back(g->comm(x, g->conj(a, t)));
            CHECK(r == subgroup_generated(g, conj_comms));
        }
    }
}

TEST_CASE("exhaustive witness oracle") {
    const auto c6 = build_group("C6");
    const auto flat = bruteforce_witness_oracle(c6, Subgroup::whole(c6));
    REQUIRE(flat.size() == 1);  // (1,1,1) dominates everything in an abelian group
    CHECK(flat[0].index_gt == 1);
    CHECK(flat[0].index_kb == 1);
    CHECK(flat[0].comm_order == 1);

    const auto d4 = build_group("D4");
    const auto central = bruteforce_witness_oracle(d4, center_subgroup(d4));
    REQUIRE(central.size() == 1);  // [G, Z(G)] = 1 already
    CHECK(central[0].comm_order == 1);

    const auto s3 = build_group("S3");
    const auto front = bruteforce_witness_oracle(s3, Subgroup::whole(s3));
    CHECK(front.size() >= 2);
    for (const auto& w : front) {
        CHECK(w.t.is_normal());
        CHECK(commutator_subgroup(s3, w.t, w.b).size() == w.comm_order);
        // no triple on the front dominates another
        for (const auto& o : front) {
            if (&o == &w) continue;
            const bool dominates = o.index_gt <= w.index_gt && o.index_kb <= w.index_kb &&
                                   o.comm_order <= w.comm_order;
            CHECK_FALSE(dominates);
        }
    }
    // (T, B) = (G, G) gives ([G:T], [K:B], |[T,B]|) = (1, 1, 3); some
    // Pareto point must match or beat it
    bool covered = false;
    for (const auto& w : front)
        covered |= w.index_gt <= 1 && w.index_kb <= 1 && w.comm_order <= 3;
    CHECK(covered);
}
