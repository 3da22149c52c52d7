#include "doctest.h"

#include "latk/int.hpp"
#include "latk/lattice.hpp"
#include "latk/niemeier.hpp"
#include "latk/roots.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

using namespace latk;

namespace {

Lattice root_sum(const Niemeier& nl) {
    Lattice r;
    for (const auto& [t, n] : nl.components) {
        Lattice c = named(std::string(1, t) + std::to_string(n));
        r = r.rank() ? r.direct_sum(c) : c;
    }
    return r;
}

}  // namespace

TEST_CASE("the rooted unimodular rank-24 lattices are all present") {
    const auto& all = niemeier_lattices();
    CHECK(all.size() == 23);

    std::set<std::string> names;
    for (const auto& nl : all) names.insert(nl.name);
    CHECK(names.size() == 23);
    CHECK(names.count("D24"));
    CHECK(names.count("E8^3"));
    CHECK(names.count("A17E7"));
    CHECK(names.count("A11D7E6"));
    CHECK(names.count("A5^4D4"));
    CHECK(names.count("A1^24"));

    for (size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].coxeter >= all[i].coxeter);
}

TEST_CASE("each glued lattice is even unimodular of rank 24") {
    for (const auto& nl : niemeier_lattices()) {
        CAPTURE(nl.name);
        CHECK(nl.lat.rank() == 24);
        CHECK(nl.lat.is_even());
        CHECK(nl.lat.det() == 1);
        CHECK(nl.lat.is_negative_definite());
    }
}

TEST_CASE("the root sublattice sits correctly inside the glued lattice") {
    for (const auto& nl : niemeier_lattices()) {
        CAPTURE(nl.name);
        Lattice r = root_sum(nl);
        CHECK(gram_of_rows(nl.lat.gram, nl.roots_in) == r.gram);

        Int code = index_in(ZMat::identity(24), nl.roots_in);
        Int dr = r.det();
        if (dr < 0) dr = -dr;
        CHECK(code * code == dr);
    }
}

TEST_CASE("glue codes close to self-dual isotropic groups") {
    for (const auto& nl : niemeier_lattices()) {
        CAPTURE(nl.name);
        Lattice r = root_sum(nl);
        Int dr = r.det();
        if (dr < 0) dr = -dr;

        auto code = span_mod_one(nl.glue_gens);
        Int sz = nl.glue_gens.empty() ? 1 : Int(long(code.size()));
        CHECK(sz * sz == dr);

        QMat g(r.gram);
        for (const auto& w : code) {
            Rat q(0);
            for (int i = 0; i < 24; ++i)
                for (int j = 0; j < 24; ++j)
                    if (w[i] != 0 && w[j] != 0) q += w[i] * g(i, j) * w[j];
            CHECK(qmod2(q) == 0);
        }
    }
}

TEST_CASE("root systems of the glued lattices match their names") {
    std::map<std::string, long> expect;
    for (const auto& nl : niemeier_lattices()) expect[nl.name] = nl.coxeter;

    for (const auto& nl : niemeier_lattices()) {
        CAPTURE(nl.name);
        RootSystem rs = root_type(nl.lat.gram);
        CHECK(rs.type_string() == nl.name);
        CHECK(rs.root_count == Int(24) * Int(nl.coxeter));
    }
}

TEST_CASE("lookup by name") {
    CHECK(niemeier_by_name("A2^12").coxeter == 3);
    CHECK(niemeier_by_name("D16E8").components.size() == 2);
    CHECK_THROWS_AS((void)niemeier_by_name("Leech"), std::invalid_argument);
}
