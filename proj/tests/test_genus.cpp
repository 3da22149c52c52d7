#include "doctest.h"

#include "latk/genus.hpp"
#include "latk/lattice.hpp"
#include "latk/neighbors.hpp"
#include "latk/roots.hpp"

#include <algorithm>

using namespace latk;

namespace {

ZMat gram(const std::string& dsl) { return from_dsl(dsl).gram; }

Rat mass_of(const std::string& dsl) { return genus_mass(gram(dsl)); }

Rat rat(const char* s) {
    Rat r(s);
    r.canonicalize();
    return r;
}

const JordanBlock* block_at(const std::vector<JordanBlock>& bs, int scale) {
    for (const auto& b : bs)
        if (b.scale == scale) return &b;
    return nullptr;
}

}  // namespace

TEST_CASE("jordan decomposition shapes at 2") {
    // positive definite copies keep the unit classes in their usual form
    auto E8 = jordan_decomposition(Int(-1) * gram("E8"), 2);
    REQUIRE(E8.size() == 1);
    CHECK(E8[0].scale == 0);
    CHECK(E8[0].rank == 8);
    CHECK_FALSE(E8[0].odd);
    CHECK(E8[0].unit == 1);
    CHECK(E8[0].eps == 1);

    auto E7 = jordan_decomposition(Int(-1) * gram("E7"), 2);
    REQUIRE(E7.size() == 2);
    CHECK(E7[0].rank == 6);
    CHECK_FALSE(E7[0].odd);
    CHECK(E7[0].unit == 3);
    CHECK(E7[1].scale == 1);
    CHECK(E7[1].rank == 1);
    CHECK(E7[1].odd);
    CHECK(E7[1].oddity == 3);

    auto D8 = jordan_decomposition(Int(-1) * gram("D8"), 2);
    REQUIRE(D8.size() == 2);
    CHECK_FALSE(D8[0].odd);
    CHECK(D8[0].rank == 6);
    CHECK_FALSE(D8[1].odd);  // the scale-one constituent of D8 is even
    CHECK(D8[1].rank == 2);

    auto D9 = jordan_decomposition(Int(-1) * gram("D9"), 2);
    REQUIRE(D9.size() == 2);
    CHECK(D9[0].rank == 8);
    CHECK(D9[0].unit == 1);
    CHECK(block_at(D9, 2) != nullptr);
    CHECK(block_at(D9, 2)->odd);

    auto F = jordan_decomposition(Int(-1) * gram("E8(2) + [-8]"), 2);
    REQUIRE(F.size() == 2);
    CHECK(F[0].scale == 1);
    CHECK(F[0].rank == 8);
    CHECK_FALSE(F[0].odd);
    CHECK(block_at(F, 3) != nullptr);
    CHECK(block_at(F, 3)->rank == 1);
}

TEST_CASE("jordan decomposition at odd primes") {
    auto A2 = jordan_decomposition(Int(-1) * gram("A2"), 3);
    REQUIRE(A2.size() == 2);
    CHECK(A2[0].scale == 0);
    CHECK(A2[0].rank == 1);
    CHECK(A2[1].scale == 1);
    CHECK(A2[1].rank == 1);

    auto E6 = jordan_decomposition(Int(-1) * gram("E6"), 3);
    Int d = 1;
    for (const auto& b : E6) d *= pow_int(3, b.scale * b.rank);
    CHECK(d == 3);  // valuations add up to the 3-part of the determinant
}

TEST_CASE("genus symbol rendering is deterministic") {
    auto s = genus_symbol(gram("E8 + [-4]"));
    CHECK(s.rank == 9);
    CHECK(s.sig.neg == 9);
    CHECK(s.det == -4);
    CHECK(s.str() == genus_symbol(gram("E8 + [-4]")).str());
    CHECK(s.str() != genus_symbol(gram("E8 + [-2]")).str());
}

TEST_CASE("same genus by symbols agrees with discriminant forms") {
    CHECK(same_genus(gram("E8 + [-4]"), gram("D9")));
    CHECK(same_genus(gram("E8 + [-6]"), gram("A2 + E7")));
    CHECK_FALSE(same_genus(gram("D8"), gram("E7 + A1")));
    CHECK_FALSE(same_genus(gram("E8 + [-4]"), gram("D9(2)")));
    CHECK(same_genus(gram("A2(2)"), gram("A2(2)")));
    CHECK_FALSE(same_genus(gram("[-2] + [-6]"), gram("A2(2)")));
}

TEST_CASE("fundamental discriminants") {
    CHECK(fundamental_discriminant(Int(12)) == 12);
    CHECK(fundamental_discriminant(Int(-4)) == -4);
    CHECK(fundamental_discriminant(Int(8)) == 8);
    CHECK(fundamental_discriminant(Int(-8)) == -8);
    CHECK(fundamental_discriminant(Int(5)) == 5);
    CHECK(fundamental_discriminant(Int(-3)) == -3);
    CHECK(fundamental_discriminant(Int(9)) == 1);
    CHECK(fundamental_discriminant(Int(-9)) == -4);
    CHECK(fundamental_discriminant(Int(18)) == 8);
}

TEST_CASE("masses of single-class genera equal 1/|O|") {
    CHECK(mass_of("[-2]") == rat("1/2"));
    CHECK(mass_of("[-4]") == rat("1/2"));
    CHECK(mass_of("A2") == rat("1/12"));
    CHECK(mass_of("A1^2") == rat("1/8"));
    CHECK(mass_of("A3") == rat("1/48"));
    CHECK(mass_of("D4") == rat("1/1152"));
    CHECK(mass_of("D5") == rat("1/3840"));
    CHECK(mass_of("E6") == rat("1/103680"));
    CHECK(mass_of("E7") == rat("1/2903040"));
    CHECK(mass_of("E7 + A1") == rat("1/5806080"));
    CHECK(mass_of("D8") == rat("1/10321920"));
    CHECK(mass_of("E8") == rat("1/696729600"));
    CHECK(mass_of("E8 + [-2]") == rat("1/1393459200"));
    CHECK(mass_of("[-2] + [-6]") == rat("1/4"));
}

TEST_CASE("masses of known multi-class genera") {
    // two classes each, with machine-verified isometry group orders
    CHECK(mass_of("E8 + [-4]") == rat("17/2786918400"));
    CHECK(mass_of("D9") == rat("17/2786918400"));
    CHECK(mass_of("E8 + [-6]") == rat("41/1393459200"));
    CHECK(mass_of("A2 + E7") == rat("41/1393459200"));
    // sixteen-dimensional even unimodular genus
    CHECK(mass_of("E8^2") == rat("691/277667181515243520000"));
}

TEST_CASE("masses of the frame genera") {
    CHECK(mass_of("E8^2 + [-4]") == rat("642332179/18881368343036559360000"));
    CHECK(mass_of("E8^2 + [-8]") == rat("642332179/73755345089986560000"));
    CHECK(mass_of("E8^2 + [-12]") == rat("123970110547/1110668726060974080000"));
}

TEST_CASE("mass is invariant under lattice rescaling") {
    CHECK(mass_of("A2(2)") == rat("1/12"));
    CHECK(mass_of("A2(4)") == rat("1/12"));
    CHECK(mass_of("D4(2)") == rat("1/1152"));
    CHECK(mass_of("E8(2)") == rat("1/696729600"));
    CHECK(mass_of("E8(2) + [-8]") == mass_of("E8(4) + [-16]"));
}

TEST_CASE("mass accepts either sign of a definite form") {
    CHECK(genus_mass(Int(-1) * gram("E8")) == rat("1/696729600"));
    CHECK_THROWS(genus_mass(gram("U")));
}

TEST_CASE("local density matches hand-checked values") {
    // unimodular at p: alpha contributes the standard group factor only
    auto E8 = jordan_decomposition(Int(-1) * gram("E8"), 2);
    Rat a = local_density(E8, 2);
    Rat expect = Rat(Int(256)) * 2 * (Rat(1) - Rat(1, 16));
    for (int j = 1; j < 4; ++j) expect *= Rat(1) - Rat(Int(1), pow_int(4, j));
    CHECK(a == expect);
}

TEST_CASE("kneser neighbors stay in the genus") {
    ZMat g = gram("D4");
    auto nb = kneser_neighbors(g, 3);
    CHECK(!nb.empty());
    for (const auto& ng : nb) {
        CHECK(Lattice{"", ng}.is_even());
        CHECK(det(ng) == det(g));
        CHECK(same_genus(g, ng));
    }
}

TEST_CASE("anisotropic reduction yields no neighbors") {
    CHECK(kneser_neighbors(gram("A2"), 5).empty());
}

TEST_CASE("neighbor prime skips divisors of the determinant") {
    CHECK(neighbor_prime(gram("E8 + [-6]")) == 5);
    CHECK(neighbor_prime(gram("E8 + [-4]")) == 3);
}

TEST_CASE("genus enumeration certified by mass") {
    auto one = enumerate_genus(gram("E8 + [-2]"));
    CHECK(one.complete);
    CHECK(one.classes.size() == 1);
    CHECK(one.found_mass == one.mass);

    auto two = enumerate_genus(gram("E8 + [-4]"));
    CHECK(two.complete);
    REQUIRE(two.classes.size() == 2);
    CHECK(is_isometric(two.classes[1].gram, gram("D9")));
    CHECK(two.aut_orders[0] == Int("1393459200"));
    CHECK(two.aut_orders[1] == Int("185794560"));

    auto three = enumerate_genus(gram("E8 + [-6]"));
    CHECK(three.complete);
    REQUIRE(three.classes.size() == 2);
    CHECK(is_isometric(three.classes[1].gram, gram("A2 + E7")));

    auto a2 = enumerate_genus(gram("A2"));
    CHECK(a2.complete);
    CHECK(a2.classes.size() == 1);
}
