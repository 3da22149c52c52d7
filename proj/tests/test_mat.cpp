#include "doctest.h"
#include "latk/mat.hpp"

using namespace latk;

TEST_CASE("matrix arithmetic basics") {
    ZMat A = {{1, 2}, {3, 4}};
    ZMat B = {{0, 1}, {1, 0}};
    CHECK((A * B) == ZMat{{2, 1}, {4, 3}});
    CHECK((A + B) == ZMat{{1, 3}, {4, 4}});
    CHECK((A - B) == ZMat{{1, 1}, {2, 4}});
    CHECK((Int(2) * A) == ZMat{{2, 4}, {6, 8}});
    CHECK(A.transpose() == ZMat{{1, 3}, {2, 4}});
    CHECK(ZMat::identity(2) == ZMat{{1, 0}, {0, 1}});

    std::vector<Int> x = {1, 1};
    auto y = x * A;
    CHECK(y[0] == 4);
    CHECK(y[1] == 6);
    CHECK(dot(x, B, x) == 2);
}

TEST_CASE("determinant by Bareiss") {
    CHECK(det(ZMat{{0, 1}, {1, 0}}) == -1);
    CHECK(det(ZMat{{2}}) == 2);
    CHECK(det(ZMat{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}) == -3);
    CHECK(det(ZMat{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
    // 4x4 with a zero leading pivot forces a row swap
    CHECK(det(ZMat{{0, 2, 1, 0}, {1, 0, 0, 3}, {2, 1, 0, 0}, {0, 0, 3, 1}}) == -35);
}

TEST_CASE("rational inverse") {
    ZMat A = {{2, 1}, {1, 1}};
    QMat Ai = inverse(A);
    QMat P = QMat(A) * Ai;
    CHECK(P == QMat::identity(2));
    ZMat B;
    CHECK(inverse(ZMat{{1, 2}, {0, 1}}).to_integral(B));
    CHECK(B == ZMat{{1, -2}, {0, 1}});
}

TEST_CASE("rank") {
    CHECK(rank_of(ZMat{{1, 2, 3}, {2, 4, 6}}) == 1);
    CHECK(rank_of(ZMat{{1, 0}, {0, 1}}) == 2);
    CHECK(rank_of(ZMat::zero(2, 3)) == 0);
}

TEST_CASE("hermite normal form") {
    ZMat H = hnf(ZMat{{2, 4}, {3, 5}});
    CHECK(H == ZMat{{1, 1}, {0, 2}});

    ZMat U;
    ZMat A = {{6, 4, 2}, {2, 8, 4}};
    ZMat H2 = hnf(A, &U);
    CHECK(U.m == 2);
    CHECK(det(U) * det(U) == 1);
    // U*A equals H2 padded with zero rows
    ZMat UA = U * A;
    for (int i = 0; i < H2.m; ++i)
        for (int j = 0; j < A.n; ++j) CHECK(UA(i, j) == H2(i, j));
    for (int i = H2.m; i < A.m; ++i)
        for (int j = 0; j < A.n; ++j) CHECK(UA(i, j) == 0);

    // canonical: same rowspace gives same HNF
    CHECK(hnf(ZMat{{1, 1}, {0, 2}}) == hnf(ZMat{{1, 3}, {1, 1}}));
}

TEST_CASE("smith normal form") {
    ZMat U, V;
    ZMat A = {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    ZMat D = snf(A, U, V);
    CHECK((U * A * V) == D);
    CHECK(D(0, 0) == 2);
    CHECK(D(1, 1) == 6);
    CHECK(D(2, 2) == 12);
    CHECK(det(U) * det(U) == 1);
    CHECK(det(V) * det(V) == 1);

    ZMat U2, V2;
    ZMat D2 = snf(ZMat{{1, 0}, {0, 0}}, U2, V2);
    CHECK(D2(0, 0) == 1);
    CHECK(D2(1, 1) == 0);
}

TEST_CASE("integer kernel is saturated") {
    ZMat K = kernel_z(ZMat{{1}, {1}});
    CHECK(K.m == 1);
    CHECK(K(0, 0) * K(0, 1) == -1);

    // kernel of multiplication-by-A on the left
    ZMat A = {{2, 4}, {1, 2}, {0, 0}};
    ZMat K2 = kernel_z(A);
    CHECK(K2.m == 2);
    ZMat Z = K2 * A;
    CHECK(Z.is_zero());
}

TEST_CASE("solve_left") {
    ZMat A = {{2, 0}, {0, 3}};
    std::vector<Rat> b = {Rat(1), Rat(1)};
    auto x = solve_left(A, b);
    CHECK(x[0] == Rat(1, 2));
    CHECK(x[1] == Rat(1, 3));
    CHECK_THROWS(solve_left(ZMat{{1, 0}, {2, 0}}, std::vector<Rat>{Rat(0), Rat(1)}));
}

TEST_CASE("inertia of symmetric forms") {
    Inertia u = inertia(QMat(ZMat{{0, 1}, {1, 0}}));
    CHECK(u.pos == 1);
    CHECK(u.neg == 1);
    CHECK(u.zero == 0);

    Inertia dg = inertia(QMat(ZMat{{1, 1}, {1, 1}}));
    CHECK(dg.pos == 1);
    CHECK(dg.neg == 0);
    CHECK(dg.zero == 1);

    Inertia z = inertia(QMat(ZMat::zero(3, 3)));
    CHECK(z.zero == 3);

    Inertia m = inertia(QMat(ZMat{{-2, 1, 0}, {1, -2, 1}, {0, 1, -2}}));
    CHECK(m.pos == 0);
    CHECK(m.neg == 3);
}
