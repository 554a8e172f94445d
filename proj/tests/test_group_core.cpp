#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "commprob/catalog.hpp"
#include "commprob/group.hpp"

using namespace commprob;

namespace {

// Independent conjugacy-class computation: one full pass per element.
std::vector<Elt> naive_class(const FiniteGroup& g, Elt x) {
    std::set<Elt> out;
    for (Elt t = 0; t < g.order(); ++t) out.insert(g.conj(x, t));
    return {out.begin(), out.end()};
}

std::vector<Elt> sorted(std::vector<Elt> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("permutation primitives compose and invert") {
    const Permutation p = {1, 2, 0};  // (1 2 3)
    const Permutation q = {1, 0, 2};  // (1 2)
    CHECK(perm_compose(p, perm_inverse(p)) == perm_identity(3));
    CHECK(perm_compose(p, q) != perm_compose(q, p));
    CHECK(perm_to_cycles(p) == "(1 2 3)");
    CHECK(perm_to_cycles(perm_identity(4)) == "()");
}

TEST_CASE("closure of generators enumerates the full group breadth-first") {
    const auto g = close_generators({{1, 0, 2}, {1, 2, 0}});
    REQUIRE(g->order() == 6);
    CHECK(g->label(FiniteGroup::identity) == perm_identity(3));
    // identity first, then the two generators in order
    CHECK(g->label(1) == Permutation{1, 0, 2});
    CHECK(g->label(2) == Permutation{1, 2, 0});
    for (Elt x = 0; x < g->order(); ++x) {
        CHECK(g->mul(x, g->inverse(x)) == FiniteGroup::identity);
        CHECK(g->find_label(g->label(x)) == x);
    }
}

TEST_CASE("closure respects the order cap") {
    CHECK_THROWS_AS(close_generators({{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}}, 100), SizeLimitError);
}

TEST_CASE("group axioms are checked on untrusted tables") {
    const auto c3 = cyclic_group(3);
    std::vector<std::vector<Elt>> rows(3, std::vector<Elt>(3));
    for (Elt a = 0; a < 3; ++a)
        for (Elt b = 0; b < 3; ++b) rows[a][b] = c3->mul(a, b);
    CHECK(validate_table(rows)->order() == 3);

    rows[2][2] = 2;  // breaks associativity/latin-square structure
    CHECK_THROWS_AS(validate_table(rows), ParseError);
}

TEST_CASE("powers and element orders") {
    const auto g = build_group("C12");
    for (Elt x = 0; x < g->order(); ++x) {
        CHECK(g->power(x, g->element_order(x)) == FiniteGroup::identity);
        CHECK(g->power(x, -1) == g->inverse(x));
        CHECK(g->power(x, 25) == g->power(x, 25 % g->element_order(x)));
    }
    CHECK(g->exponent() == 12);
    CHECK(build_group("S4")->exponent() == 12);
    CHECK(build_group("Q8")->exponent() == 4);
}

TEST_CASE("conjugacy data matches a naive orbit scan") {
    for (const char* spec : {"S4", "D6", "Q8", "A4"}) {
        const auto g = build_group(spec);
        const auto& data = g->conjugacy();
        size_t covered = 0;
        for (const auto& cls : data.classes) covered += cls.size();
        CHECK(covered == static_cast<size_t>(g->order()));
        for (Elt x = 0; x < g->order(); ++x) {
            const auto cls = naive_class(*g, x);
            CHECK(data.classes[data.class_of[x]] == cls);
            // orbit-stabilizer: |x^G| * |C_G(x)| = |G|
            CHECK(cls.size() * data.centralizer_size[x] == static_cast<size_t>(g->order()));
        }
    }
}

TEST_CASE("centers and derived subgroups of known groups") {
    CHECK(center_subgroup(build_group("Q8")).size() == 2);
    CHECK(center_subgroup(build_group("S4")).size() == 1);
    CHECK(center_subgroup(build_group("D4")).size() == 2);
    CHECK(derived_subgroup(build_group("S4")).size() == 12);
    CHECK(derived_subgroup(build_group("S3")).size() == 3);
    CHECK(derived_subgroup(build_group("C12")).size() == 1);
    const auto a5gens = std::vector<Permutation>{{1, 2, 0, 3, 4}, {1, 2, 3, 4, 0}};
    const auto a5 = close_generators(a5gens);
    REQUIRE(a5->order() == 60);
    CHECK(derived_subgroup(a5).size() == 60);  // perfect
}

TEST_CASE("subgroup construction verifies closure and membership") {
    const auto g = build_group("S3");
    CHECK_THROWS_AS(Subgroup::from_members(g, {0, 1, 2}), PreconditionError);
    CHECK_THROWS_AS(Subgroup::from_members(g, {1}), PreconditionError);  // no identity
    const auto whole = Subgroup::whole(g);
    CHECK(whole.size() == 6);
    CHECK(whole.index() == 1);
    CHECK(Subgroup::trivial(g).size() == 1);
    const auto a3 = subgroup_generated(g, {g->find_label({1, 2, 0}).value()});
    CHECK(a3.size() == 3);
    CHECK(a3.is_normal());
    CHECK(whole.contains_all(a3));
    CHECK_FALSE(a3.contains_all(whole));
}

TEST_CASE("centralizers agree with a direct scan") {
    const auto g = build_group("D6");
    for (Elt x = 0; x < g->order(); ++x) {
        const auto c = centralizer(g, x);
        for (Elt t = 0; t < g->order(); ++t)
            CHECK(c.contains(t) == (g->mul(x, t) == g->mul(t, x)));
    }
    // centralizer of a set is the intersection of the element centralizers
    const std::vector<Elt> xs = {1, 3};
    CHECK(centralizer_of_set(g, xs) == intersect(centralizer(g, 1), centralizer(g, 3)));
}

TEST_CASE("normal closure and core bracket a subgroup") {
    const auto g = build_group("S4");
    for (const auto& h : all_cyclic_subgroups(g)) {
        const auto clo = normal_closure(g, h);
        const auto core = normal_core(g, h);
        CHECK(clo.is_normal());
        CHECK(core.is_normal());
        CHECK(clo.contains_all(h));
        CHECK(h.contains_all(core));
        if (h.is_normal()) {
            CHECK(clo == h);
            CHECK(core == h);
        }
    }
    // a transposition normally generates all of S4
    CHECK(normal_closure(g, std::vector<Elt>{1}).size() == 24);
}

TEST_CASE("quotient by the Klein four-group in S4") {
    const auto g = build_group("S4");
    std::vector<Elt> klein;
    for (Elt x = 0; x < g->order(); ++x)
        if (x == 0 || (g->element_order(x) == 2 && centralizer(g, x).size() == 8))
            klein.push_back(x);
    const auto v4 = Subgroup::from_members(g, klein);
    REQUIRE(v4.size() == 4);
    const auto q = quotient(g, v4);
    CHECK(q.target()->order() == 6);
    CHECK(derived_subgroup(q.target()).size() == 3);  // S4/V4 is S3, not C6
    for (Elt x = 0; x < g->order(); ++x) {
        CHECK(q.project(g->mul(x, 7 % g->order())) ==
              q.target()->mul(q.project(x), q.project(7 % g->order())));
        CHECK(q.project(q.rep(q.project(x))) == q.project(x));
    }
    CHECK(q.preimage(Subgroup::trivial(q.target())) == v4);
    CHECK(q.image(v4) == Subgroup::trivial(q.target()));

    const auto s2 = subgroup_generated(g, {1});
    CHECK_THROWS_AS(quotient(g, s2), PreconditionError);
}

TEST_CASE("power subgroups") {
    const auto q8 = build_group("Q8");
    CHECK(power_subgroup(q8, Subgroup::whole(q8), 2) == center_subgroup(q8));
    CHECK(power_subgroup(q8, Subgroup::whole(q8), 4).size() == 1);
    const auto c12 = build_group("C12");
    CHECK(power_subgroup(c12, Subgroup::whole(c12), 3).size() == 4);
    CHECK(power_subgroup(c12, Subgroup::whole(c12), 12).size() == 1);
    CHECK_THROWS_AS(power_subgroup(c12, Subgroup::whole(c12), 0), PreconditionError);
}

TEST_CASE("commutator subgroup of two subgroups") {
    const auto g = build_group("S3");
    const auto a3 = derived_subgroup(g);
    CHECK(commutator_subgroup(g, Subgroup::whole(g), Subgroup::whole(g)) == a3);
    CHECK(commutator_subgroup(g, a3, a3).size() == 1);
    CHECK(commutator_subgroup(g, Subgroup::trivial(g), Subgroup::whole(g)).size() == 1);
}

TEST_CASE("word metric lengths and witness words") {
    const auto g = build_group("C6");
    const auto wm = word_metric(g, {1}, /*symmetrize=*/false);
    CHECK(wm.length(0) == 0);
    CHECK(wm.length(g->power(1, 5)) == 5);
    CHECK(wm.max_length() == 5);
    for (Elt x = 0; x < g->order(); ++x) {
        Elt acc = FiniteGroup::identity;
        for (Elt f : wm.witness_word(x)) acc = g->mul(acc, f);
        CHECK(acc == x);
        CHECK(static_cast<int>(wm.witness_word(x).size()) == wm.length(x));
    }
    const auto sym = word_metric(g, {1}, /*symmetrize=*/true);
    CHECK(sym.max_length() == 3);

    // a non-generating set leaves elements unreachable
    const auto partial = word_metric(g, {g->power(1, 2)}, false);
    CHECK_FALSE(partial.reachable(1));
    CHECK(partial.reachable_set().size() == 3);
}

TEST_CASE("coset representatives are shortest per coset") {
    const auto g = build_group("S4");
    std::set<Elt> sym{FiniteGroup::identity};
    for (Elt x : g->generators()) {
        sym.insert(x);
        sym.insert(g->inverse(x));
    }
    const std::vector<Elt> gens(sym.begin(), sym.end());
    for (const auto& h : all_cyclic_subgroups(g)) {
        const auto reps = coset_reps_over(g, gens, h);
        CHECK(reps.size() == static_cast<size_t>(h.index()));
        const auto wm = word_metric(g, gens, false);
        std::set<Elt> seen;
        for (const auto& r : reps) {
            CHECK(r.length == wm.length(r.rep));
            // normalize to the coset's minimal member for the dedup check
            Elt least = g->order();
            for (Elt d : h.elements()) least = std::min(least, g->mul(d, r.rep));
            CHECK(seen.insert(least).second);
        }
        if (h.index() <= 8) {
            for (const auto& r : short_coset_reps(g, gens, h))
                CHECK(r.length <= h.index() - 1);
        }
    }
    // non-symmetric generator sets are rejected by the bounded variant
    CHECK_THROWS_AS(short_coset_reps(g, {0, 1, 2}, all_cyclic_subgroups(g).back()),
                    PreconditionError);
}

TEST_CASE("bounded class sets") {
    const auto g = build_group("S3");
    const auto whole = Subgroup::whole(g);
    CHECK(bounded_class_set(g, whole, whole, make_ratio(1, 1)) == std::vector<Elt>{0});
    CHECK(bounded_class_set(g, whole, whole, make_ratio(5, 2)).size() == 3);  // classes 1 and 2
    CHECK(bounded_class_set(g, whole, whole, make_ratio(3, 1)).size() == 6);
    CHECK(bounded_class_set(g, whole, Subgroup::trivial(g), make_ratio(1, 1)).size() == 6);
    for (Elt x = 0; x < g->order(); ++x)
        CHECK(class_size_under(*g, x, whole) ==
              static_cast<int>(naive_class(*g, x).size()));
}

TEST_CASE("all normal subgroups of small groups") {
    auto sizes = [](const std::vector<Subgroup>& subs) {
        std::multiset<int> out;
        for (const auto& s : subs) out.insert(s.size());
        return out;
    };
    CHECK(sizes(all_normal_subgroups(build_group("S3"))) == std::multiset<int>{1, 3, 6});
    CHECK(sizes(all_normal_subgroups(build_group("S4"))) == std::multiset<int>{1, 4, 12, 24});
    CHECK(sizes(all_normal_subgroups(build_group("Q8"))) ==
          std::multiset<int>{1, 2, 4, 4, 4, 8});
    CHECK(all_normal_subgroups(build_group("C6")).size() == 4);  // all subgroups, abelian
    for (const auto& n : all_normal_subgroups(build_group("A4"))) CHECK(n.is_normal());
}

TEST_CASE("all cyclic subgroups") {
    const auto g = build_group("Q8");
    const auto cyc = all_cyclic_subgroups(g);
    CHECK(cyc.size() == 5);  // 1, <-1>, <i>, <j>, <k>; inverse generators collapse
    int order2 = 0;
    for (const auto& c : cyc)
        if (c.size() == 2) ++order2;
    CHECK(order2 == 1);  // the unique involution
}

TEST_CASE("digest is stable across rebuilds and distinguishes groups") {
    CHECK(build_group("S4")->digest_hex() == build_group("S4")->digest_hex());
    CHECK(build_group("S4")->digest_hex() != build_group("C24")->digest_hex());
    CHECK(build_group("D4")->digest_hex() != build_group("Q8")->digest_hex());
}
