#include "doctest.h"

#include "latk/discform.hpp"
#include "latk/formgroup.hpp"

using namespace latk;

namespace {

Fqf disc_of(const std::string& dsl) { return disc_group(from_dsl(dsl)).form; }

Fqf w(long p, int k, long eps) { return fqf_w(Int(p), k, Int(eps)); }

}  // namespace

TEST_CASE("discriminant group sizes match determinants") {
    for (const char* dsl : {"U", "E8", "U + [4]", "U + [12]", "E8 + [-6]", "A2 + E7", "D9",
                            "E8(2)", "U(2) + E8(2)", "A2(2) + E7(2)", "A7", "D5 + A2"}) {
        Lattice L = from_dsl(dsl);
        CAPTURE(dsl);
        Int d = L.det();
        CHECK(disc_group(L).form.order() == (d < 0 ? -d : d));
    }
}

TEST_CASE("unimodular lattices have trivial discriminant") {
    CHECK(disc_of("U").trivial());
    CHECK(disc_of("E8").trivial());
    CHECK(normal_form_string(disc_of("E8^2")) == "1");
    CHECK(fqf_is_isomorphic(disc_of("U"), disc_of("E8")));
}

TEST_CASE("normal form strings of standard discriminants") {
    CHECK(normal_form_string(disc_of("U + [4]")) == "w1_2_2");
    CHECK(normal_form_string(disc_of("U + [8]")) == "w1_2_3");
    CHECK(normal_form_string(disc_of("U + [12]")) == "w3_2_2 + w1_3_1");
    CHECK(normal_form_string(disc_of("E8 + [-2]")) == "w3_2_1");
    CHECK(normal_form_string(disc_of("[2]")) == "w1_2_1");
    CHECK(normal_form_string(disc_of("E8 + [-4]")) == "w7_2_2");
    CHECK(normal_form_string(disc_of("D9")) == "w7_2_2");
    CHECK(normal_form_string(disc_of("E8 + [-6]")) == "w1_2_1 + w1_3_1");
    CHECK(normal_form_string(disc_of("A2 + E7")) == "w1_2_1 + w1_3_1");
    CHECK(normal_form_string(disc_of("U(2) + E8(2)")) == "u1^5");
    CHECK(normal_form_string(disc_of("E8(2)")) == "u1^4");
    CHECK(normal_form_string(disc_of("A2")) == "w1_3_1");
    CHECK(normal_form_string(disc_of("A2(-1)")) == "w-1_3_1");
}

TEST_CASE("normal form is stable under round trips") {
    for (const char* dsl : {"U + [4]", "U + [12]", "A2 + E7", "D9", "E8(2)", "A2(2) + E7(2)",
                            "A7", "D5 + A2", "U(2) + E8(2)"}) {
        CAPTURE(dsl);
        Fqf q = disc_of(dsl);
        auto blocks = normal_form_blocks(q);
        Fqf rebuilt = fqf_from_blocks(blocks);
        CHECK(normal_form_string(rebuilt) == render_blocks(blocks));
        CHECK(fqf_is_isomorphic(q, rebuilt));
    }
}

TEST_CASE("genus-mates share discriminant forms") {
    CHECK(fqf_is_isomorphic(disc_of("E8 + [-4]"), disc_of("D9")));
    CHECK(fqf_is_isomorphic(disc_of("E8 + [-6]"), disc_of("A2 + E7")));
    CHECK_FALSE(fqf_is_isomorphic(disc_of("E8 + [-4]"), disc_of("E8 + [-6]")));
}

TEST_CASE("rescaling relations between elementary blocks") {
    // 2u = 2v at every scale
    for (int k : {1, 2, 3}) {
        CAPTURE(k);
        CHECK(fqf_is_isomorphic(fqf_u(k).direct_sum(fqf_u(k)), fqf_v(k).direct_sum(fqf_v(k))));
        CHECK_FALSE(fqf_is_isomorphic(fqf_u(k), fqf_v(k)));
    }
    // u and v never trade against a single same-scale w block
    CHECK_FALSE(fqf_is_isomorphic(fqf_u(2).direct_sum(w(2, 2, 1)), fqf_v(2).direct_sum(w(2, 2, 5))));
    CHECK_FALSE(fqf_is_isomorphic(fqf_u(2).direct_sum(w(2, 2, 3)), fqf_v(2).direct_sum(w(2, 2, 7))));
    CHECK_FALSE(fqf_is_isomorphic(fqf_u(1).direct_sum(w(2, 1, 1)), fqf_v(1).direct_sum(w(2, 1, 1))));
    // scale-1 triple trades
    CHECK(fqf_is_isomorphic(fqf_u(1).direct_sum(w(2, 1, 1)),
                            w(2, 1, 1).direct_sum(w(2, 1, 1)).direct_sum(w(2, 1, 3))));
    CHECK(fqf_is_isomorphic(fqf_v(1).direct_sum(w(2, 1, 1)),
                            w(2, 1, 3).direct_sum(w(2, 1, 3)).direct_sum(w(2, 1, 3))));
    // pair trades at scale 2 preserve product and sum of units mod 8
    CHECK(fqf_is_isomorphic(w(2, 2, 1).direct_sum(w(2, 2, 7)), w(2, 2, 3).direct_sum(w(2, 2, 5))));
    CHECK(fqf_is_isomorphic(w(2, 2, 1).direct_sum(w(2, 2, 3)), w(2, 2, 5).direct_sum(w(2, 2, 7))));
    CHECK_FALSE(fqf_is_isomorphic(w(2, 2, 1).direct_sum(w(2, 2, 1)), w(2, 2, 1).direct_sum(w(2, 2, 5))));
    // distinct cyclic 2-adic forms
    CHECK_FALSE(fqf_is_isomorphic(w(2, 3, 1), w(2, 3, 5)));
    CHECK_FALSE(fqf_is_isomorphic(w(2, 1, 1), w(2, 1, 3)));
    // odd p: the product of the unit classes is the invariant
    CHECK(fqf_is_isomorphic(w(3, 1, 1).direct_sum(w(3, 1, 1)), w(3, 1, -1).direct_sum(w(3, 1, -1))));
    CHECK_FALSE(fqf_is_isomorphic(w(3, 1, 1).direct_sum(w(3, 1, 1)), w(3, 1, 1).direct_sum(w(3, 1, -1))));
    CHECK_FALSE(fqf_is_isomorphic(w(3, 1, 1), w(3, 1, -1)));
    CHECK(normal_form_string(w(3, 1, -1).direct_sum(w(3, 1, -1))) == "w1_3_1^2");
}

TEST_CASE("normal form identifies equivalent symbols") {
    CHECK(normal_form_string(w(2, 2, 1).direct_sum(w(2, 2, 7))) ==
          normal_form_string(w(2, 2, 3).direct_sum(w(2, 2, 5))));
    CHECK(normal_form_string(fqf_u(1).direct_sum(fqf_u(1))) ==
          normal_form_string(fqf_v(1).direct_sum(fqf_v(1))));
    CHECK(normal_form_string(fqf_u(1).direct_sum(w(2, 1, 3))) ==
          normal_form_string(w(2, 1, 3).direct_sum(w(2, 1, 3)).direct_sum(w(2, 1, 1))));
}

TEST_CASE("mixed-order generators do not fool the isomorphism test") {
    // Z/6 presented as one generator versus split Z/2 + Z/3
    Fqf whole = disc_of("U + [6]");
    Fqf split = w(2, 1, 1).direct_sum(w(3, 1, 1));
    REQUIRE(whole.orders.size() == 1);
    // q(g) = 1/6 splits as 3/2 on the 2-part and 2/3 before canonicalization
    CHECK(fqf_is_isomorphic(whole, whole.prime_part(2).direct_sum(whole.prime_part(3))));
    CHECK(normal_form_string(whole) ==
          normal_form_string(whole.prime_part(2).direct_sum(whole.prime_part(3))));
    CHECK(fqf_is_isomorphic(whole, split) ==
          fqf_is_isomorphic(disc_of("U + [6]"), split));  // deterministic
}

TEST_CASE("anti-isometries") {
    CHECK(fqf_anti_isometric(fqf_u(1), fqf_u(1)));
    CHECK(fqf_anti_isometric(w(2, 2, 1), w(2, 2, 7)));
    CHECK_FALSE(fqf_anti_isometric(w(2, 2, 1), w(2, 2, 1)));
    CHECK(fqf_all_anti_isometries(w(2, 2, 1), w(2, 2, 7)).size() == 2);
    CHECK(fqf_all_anti_isometries(w(2, 2, 1), w(2, 2, 1)).empty());
    // witness really negates the form
    ZMat A;
    REQUIRE(fqf_anti_isometric(disc_of("U + [12]"), disc_of("U + [12]").negated(), &A));
    Fqf q = disc_of("U + [12]");
    Fqf nq = q.negated();
    for (const auto& x : fqf_elements(q)) {
        std::vector<Int> y = nq.reduce(x * A);
        CHECK(nq.q(y) == mod_rat(-q.q(x), 2));
    }
}

TEST_CASE("orthogonal groups of small cyclic forms") {
    CHECK(fqf_orthogonal_group(disc_of("U + [2]")).size() == 1);
    CHECK(fqf_orthogonal_group(disc_of("U + [4]")).size() == 2);
    CHECK(fqf_orthogonal_group(disc_of("U + [8]")).size() == 2);
    CHECK(fqf_orthogonal_group(disc_of("U + [12]")).size() == 4);
    for (const ZMat& A : fqf_orthogonal_group(disc_of("U + [12]")))
        CHECK(is_form_automorphism(disc_of("U + [12]"), A));
}

TEST_CASE("discriminant action of isometries") {
    Lattice L = from_dsl("U + [4]");
    DiscGroup D = disc_group(L);
    ZMat f = ZMat::identity(3);
    f(2, 2) = -1;
    REQUIRE(is_isometry_matrix(L.gram, f));
    ZMat act = disc_action(D, f);
    CHECK(is_form_automorphism(D.form, act));
    CHECK(form_equal(D.form, form_compose(D.form, act, act), ZMat::identity(1)));
    CHECK(act(0, 0) == 3);  // negation on Z/4

    // swapping two orthogonal [2] summands swaps the generators
    Lattice L2 = from_dsl("[2] + [2]");
    DiscGroup D2 = disc_group(L2);
    ZMat sw{{0, 1}, {1, 0}};
    ZMat act2 = disc_action(D2, sw);
    CHECK(is_form_automorphism(D2.form, act2));
    CHECK(form_equal(D2.form, form_compose(D2.form, act2, act2), ZMat::identity(2)));
}

TEST_CASE("coords and lift round-trip") {
    DiscGroup D = disc_group(from_dsl("U + [12]"));
    for (const auto& c : fqf_elements(D.form)) {
        CHECK(D.coords(D.lift(c)) == c);
        // q computed from the lift agrees with the stored form
        std::vector<Rat> x = D.lift(c);
        Rat v = 0;
        for (int i = 0; i < D.lat.rank(); ++i)
            for (int j = 0; j < D.lat.rank(); ++j) v += x[i] * Rat(D.lat.gram(i, j)) * x[j];
        CHECK(mod_rat(v, 2) == D.form.q(c));
    }
}

TEST_CASE("subgroups, complements, and subquotients") {
    Fqf q = fqf_u(1);
    ZMat iso(1, 2);
    iso(0, 0) = 1;
    ZMat sub = subgroup_lattice(q, iso);
    CHECK(subgroup_order(q, sub) == 2);
    CHECK(is_isotropic_subgroup(q, sub));
    ZMat perp = orth_subgroup(q, sub);
    CHECK(subgroup_order(q, perp) == 2);
    CHECK(subgroup_contains(perp, sub));
    CHECK(subquotient_form(q, perp, sub).trivial());

    // non-isotropic subgroup of Z/4 with q = 1/4
    Fqf c4 = disc_of("U + [4]");
    ZMat two(1, 1);
    two(0, 0) = 2;
    ZMat s2 = subgroup_lattice(c4, two);
    CHECK(subgroup_order(c4, s2) == 2);
    CHECK_FALSE(is_isotropic_subgroup(c4, s2));
    CHECK(orth_subgroup(c4, s2) == s2);

    // double complement
    for (const char* dsl : {"U + [12]", "E8(2)"}) {
        CAPTURE(dsl);
        Fqf f = disc_of(dsl);
        ZMat gens(1, f.ngens());
        for (int j = 0; j < f.ngens(); ++j) gens(0, j) = j == 0 ? 1 : 0;
        ZMat s = subgroup_lattice(f, gens);
        CHECK(orth_subgroup(f, orth_subgroup(f, s)) == s);
        Int so = subgroup_order(f, s);
        Int po = subgroup_order(f, orth_subgroup(f, s));
        CHECK(so * po == f.order());
    }
}

TEST_CASE("quotient structure orders") {
    Fqf q = disc_of("U(2) + E8(2)");
    SubquotientBasis bs = quotient_structure(q, full_lattice(q), zero_lattice(q));
    CHECK(bs.orders == std::vector<Int>(10, Int(2)));
    CHECK(subquotient_form(q, full_lattice(q), zero_lattice(q)).order() == 1024);
}

TEST_CASE("form construction validates well-definedness") {
    QMat bad(1, 1);
    bad(0, 0) = Rat(1, 3);
    CHECK_THROWS(Fqf({Int(3)}, bad));  // 9 * (1/3) is odd
    QMat good(1, 1);
    good(0, 0) = Rat(2, 3);
    CHECK_NOTHROW(Fqf({Int(3)}, good));
}

TEST_CASE("glueing even overlattices") {
    // index-2 overlattice of [2] + [6] has determinant 3
    Lattice M = from_dsl("[2]");
    Lattice N = from_dsl("[6]");
    QMat graph(1, 2);
    graph(0, 0) = Rat(1, 2);
    graph(0, 1) = Rat(1, 2);
    ZMat em, en;
    Lattice L = glue_overlattice(M, N, graph, &em, &en);
    CHECK(L.det() == 3);
    CHECK(L.is_even());
    CHECK(det(em.vstack(en)) == 2);  // glue group order, up to sign

    // E7 + A1 glue to the even unimodular E8 form
    Lattice E7 = from_dsl("E7");
    Lattice A1 = from_dsl("A1");
    DiscGroup d7 = disc_group(E7), d1 = disc_group(A1);
    QMat graph2(1, 8);
    for (int j = 0; j < 7; ++j) graph2(0, j) = d7.gens(0, j);
    graph2(0, 7) = d1.gens(0, 0);
    Lattice E8 = glue_overlattice(E7, A1, graph2);
    CHECK(E8.det() == 1);
    CHECK(E8.is_even());
    CHECK(E8.rank() == 8);
    CHECK(disc_group(E8).form.trivial());

    // odd glue is rejected: (e1+e2)/2 in A1 + A1 has half-integer square... it is odd
    QMat bad(1, 2);
    bad(0, 0) = bad(0, 1) = Rat(1, 2);
    CHECK_THROWS(glue_overlattice(from_dsl("A1"), from_dsl("A1"), bad));
}

TEST_CASE("prime parts split the form") {
    Fqf q = disc_of("U + [12]");
    CHECK(q.primes() == std::vector<Int>{2, 3});
    CHECK(fqf_is_isomorphic(q.prime_part(2), w(2, 2, 3)));
    CHECK(fqf_is_isomorphic(q.prime_part(3), w(3, 1, 1)));
    CHECK(fqf_is_isomorphic(q, q.prime_part(2).direct_sum(q.prime_part(3))));
}

TEST_CASE("decomposition handles a rank-nine two-group") {
    Fqf q = disc_of("A2(2) + E7(2)");
    auto blocks = normal_form_blocks(q);
    Fqf rebuilt = fqf_from_blocks(blocks);
    CHECK(rebuilt.order() == q.order());
    CHECK(fqf_is_isomorphic(q, rebuilt));
    CHECK(normal_form_string(disc_of("A2(2) + E7(2)")) == normal_form_string(rebuilt));
}
