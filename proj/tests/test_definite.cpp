#include "doctest.h"

#include "latk/autgroup.hpp"
#include "latk/lattice.hpp"
#include "latk/mat.hpp"
#include "latk/roots.hpp"
#include "latk/shortvec.hpp"

#include <algorithm>

using namespace latk;

namespace {

ZMat gram(const std::string& dsl) { return from_dsl(dsl).gram; }

// independent exhaustive count of isometries for small ranks: images of the
// standard basis vectors range over all vectors of the right norm
Int brute_aut_order(const ZMat& g) {
    int n = g.m;
    std::vector<std::vector<std::vector<Int>>> cands(n);
    for (int i = 0; i < n; ++i) {
        for (const auto& v : vectors_of_norm(g, g(i, i))) {
            cands[i].push_back(v);
            auto w = v;
            for (auto& e : w) e = -e;
            cands[i].push_back(w);
        }
    }
    std::vector<std::vector<Int>> img(n);
    Int count = 0;
    auto rec = [&](auto&& self, int level) -> void {
        if (level == n) {
            ++count;
            return;
        }
        for (const auto& v : cands[level]) {
            bool ok = true;
            for (int j = 0; j < level && ok; ++j)
                if (dot(v, g, img[j]) != g(level, j)) ok = false;
            if (dot(v, g, v) != g(level, level)) ok = false;
            if (!ok) continue;
            img[level] = v;
            self(self, level + 1);
        }
    };
    rec(rec, 0);
    return count;
}

}  // namespace

TEST_CASE("short vector counts match root numbers") {
    CHECK(count_vectors_of_norm(gram("A5"), -2) == 30);
    CHECK(count_vectors_of_norm(gram("D6"), -2) == 60);
    CHECK(count_vectors_of_norm(gram("E6"), -2) == 72);
    CHECK(count_vectors_of_norm(gram("E7"), -2) == 126);
    CHECK(count_vectors_of_norm(gram("E8"), -2) == 240);
}

TEST_CASE("short vector enumeration is exact and well ordered") {
    ZMat g = gram("A3 + [-4]");
    auto classes = short_vectors_by_norm(g, -6);
    for (const auto& [norm, vecs] : classes) {
        CHECK(std::is_sorted(vecs.begin(), vecs.end()));
        for (const auto& v : vecs) {
            CHECK(dot(v, g, v) == norm);
            bool positive = false;
            for (const auto& e : v) {
                if (e != 0) {
                    positive = e > 0;
                    break;
                }
            }
            CHECK(positive);
        }
    }
    CHECK(classes.at(Int(-2)).size() == 6);   // A3 roots, one sign each
    CHECK(classes.at(Int(-4)).size() == 4);  // three doubled D3-style vectors plus the [-4] generator
}

TEST_CASE("rescaling multiplies norms in counts") {
    CHECK(count_vectors_of_norm(gram("E6(3)"), -6) == 72);
    CHECK(count_vectors_of_norm(gram("D5(2)"), -4) == 40);
    CHECK(count_vectors_of_norm(gram("E8(2)"), -2) == 0);
}

TEST_CASE("square minus four fingerprints") {
    CHECK(count_vectors_of_norm(gram("E8(2) + [-8]"), -4) == 240);
    CHECK(count_vectors_of_norm(gram("D9(2)"), -4) == 144);
    CHECK(count_vectors_of_norm(gram("A2(2) + E7(2)"), -4) == 132);
}

TEST_CASE("short vectors reject indefinite input") {
    CHECK_THROWS(short_vectors_by_norm(gram("U"), -2));
}

TEST_CASE("root systems classify ADE types") {
    CHECK(root_type(gram("A5")).type_string() == "A5");
    CHECK(root_type(gram("D4")).type_string() == "D4");
    CHECK(root_type(gram("D7")).type_string() == "D7");
    CHECK(root_type(gram("E6")).type_string() == "E6");
    CHECK(root_type(gram("E7")).type_string() == "E7");
    CHECK(root_type(gram("E8")).type_string() == "E8");
    CHECK(root_type(gram("A2 + E7")).type_string() == "A2E7");
    CHECK(root_type(gram("A1^2 + A2^2 + A11")).type_string() == "A1^2A2^2A11");
    CHECK(root_type(gram("E8(2)")).type_string() == "1");
    CHECK(root_type(gram("E8 + E8")).type_string() == "E8^2");
}

TEST_CASE("root counts and fundamental systems") {
    auto rs = root_type(gram("E8"));
    CHECK(rs.root_count == 240);
    CHECK(rs.simple_roots.size() == 8);
    CHECK(quotient_shape(8, rs.root_basis()).str() == "0");

    auto rs2 = root_type(gram("D6"));
    CHECK(rs2.root_count == 60);
    CHECK(rs2.simple_roots.size() == 6);

    auto rs3 = root_type(gram("E8 + [-4]"));
    CHECK(rs3.type_string() == "E8");
    CHECK(quotient_shape(9, rs3.root_basis()).str() == "Z");
}

TEST_CASE("quotient shapes") {
    CHECK(quotient_shape(2, ZMat({{2, 0}})).str() == "Z + Z/2");
    CHECK(quotient_shape(2, ZMat({{1, 0}, {0, 3}})).str() == "Z/3");
    CHECK(quotient_shape(3, ZMat({{1, 0, 0}})).str() == "Z^2");
    CHECK(quotient_shape(2, ZMat({{1, 0}, {0, 1}})).str() == "0");
}

TEST_CASE("ade root count table") {
    CHECK(ade_root_count('A', 11) == 132);
    CHECK(ade_root_count('D', 9) == 144);
    CHECK(ade_root_count('E', 6) == 72);
    CHECK(ade_root_count('E', 7) == 126);
    CHECK(ade_root_count('E', 8) == 240);
}

TEST_CASE("isometry group orders of small root lattices") {
    CHECK(automorphism_group(gram("A1")).order == 2);
    CHECK(automorphism_group(gram("A2")).order == 12);
    CHECK(automorphism_group(gram("A3")).order == 48);
    CHECK(automorphism_group(gram("D4")).order == 1152);
    CHECK(automorphism_group(gram("D5")).order == 3840);
    CHECK(automorphism_group(gram("[-2]")).order == 2);
    CHECK(automorphism_group(gram("[-4]")).order == 2);
    CHECK(automorphism_group(gram("[-12]")).order == 2);
    CHECK(automorphism_group(gram("A1 + A1")).order == 8);
}

TEST_CASE("isometry group orders of exceptional lattices") {
    CHECK(automorphism_group(gram("E6")).order == 103680);
    CHECK(automorphism_group(gram("E7")).order == 2903040);
    CHECK(automorphism_group(gram("E8")).order == 696729600);
    CHECK(automorphism_group(gram("E8(2)")).order == 696729600);
}

TEST_CASE("generators are genuine isometries") {
    ZMat g = gram("D4 + [-6]");
    auto aut = automorphism_group(g);
    CHECK(aut.order == 1152 * 2);
    for (const auto& a : aut.generators) {
        CHECK(is_isometry_matrix(g, a));
        Int d = det(a);
        CHECK((d == 1 || d == -1));
    }
}

TEST_CASE("chain orders agree with exhaustive counting in low rank") {
    for (const char* name :
         {"A1", "A2", "A1 + A1", "A3", "A2(2)", "[-2] + [-4]", "A2 + [-4]", "D4"}) {
        ZMat g = gram(name);
        CHECK(automorphism_group(g).order == brute_aut_order(g));
    }
}

TEST_CASE("search budget raises an explicit failure") {
    SearchBudget tiny;
    tiny.max_nodes = 3;
    CHECK_THROWS_AS(automorphism_group(gram("E6"), tiny), BudgetExceeded);
}

TEST_CASE("isometry decision with witness") {
    ZMat g = gram("E8");
    // change of basis: conjugating by a unimodular matrix preserves the class
    ZMat s = ZMat::identity(8);
    s(0, 3) = 2;
    s(2, 7) = -1;
    s(5, 1) = 3;
    ZMat g2 = s * g * s.transpose();
    ZMat w;
    REQUIRE(is_isometric(g, g2, &w));
    CHECK(w * g2 * w.transpose() == g);
    ZMat back;
    REQUIRE(is_isometric(g2, g, &back));
    CHECK(back * g * back.transpose() == g2);
}

TEST_CASE("isometry decision separates genus mates") {
    CHECK_FALSE(is_isometric(gram("E8 + [-4]"), gram("D9")));
    CHECK_FALSE(is_isometric(gram("E8 + [-6]"), gram("A2 + E7")));
    CHECK(is_isometric(gram("E8 + [-4]"), gram("E8 + [-4]")));
}

TEST_CASE("isometry decision on distinct lattices of equal rank and determinant") {
    CHECK_FALSE(is_isometric(gram("A1^4"), gram("D4(2)")));
    CHECK_FALSE(is_isometric(gram("A1 + A3"), gram("A1^2 + A2")));
}

TEST_CASE("direct sum with a distinguishing summand") {
    auto aut = automorphism_group(gram("E8 + A1"));
    CHECK(aut.order == Int(696729600) * 2);
}

TEST_CASE("order of the doubled E8 lattice") {
    auto aut = automorphism_group(gram("E8 + E8"));
    Int e8(696729600);
    CHECK(aut.order == 2 * e8 * e8);
}

TEST_CASE("orders of rank 17 definite lattices") {
    CHECK(automorphism_group(gram("D9 + E8")).order == Int("129448569470976000"));
    CHECK(automorphism_group(gram("E8^2 + [-4]")).order == Int("1941728542064640000"));
    CHECK(automorphism_group(gram("A11 + D5 + [-8]")).order ==
          Int(2) * Int("479001600") * 3840 * 2);
}
