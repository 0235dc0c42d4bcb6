#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "kgk/matrix.hpp"

using kgk::bigint;
using kgk::imat;

TEST_CASE("matrix arithmetic basics") {
    imat a{{1, 2}, {3, 4}};
    imat b{{0, 1}, {1, 0}};
    CHECK(a * b == imat{{2, 1}, {4, 3}});
    CHECK(b * a == imat{{3, 4}, {1, 2}});
    CHECK(a + b == imat{{1, 3}, {4, 4}});
    CHECK(a - a == imat::zero(2, 2));
    CHECK((-a)(0, 1) == -2);
    CHECK(a.transpose() == imat{{1, 3}, {2, 4}});
    CHECK(imat::identity(2) * a == a);
}

TEST_CASE("empty shapes act as zero maps") {
    imat zero_rows(0, 3);
    imat zero_cols(3, 0);
    CHECK((zero_rows * imat(3, 2)).rows() == 0);
    CHECK((zero_rows * imat(3, 2)).cols() == 2);
    CHECK((imat(2, 3) * zero_cols).cols() == 0);
    CHECK(zero_rows.is_zero());
    CHECK(zero_cols.is_zero());
}

TEST_CASE("arithmetic is exact far beyond 64 bits") {
    // (10^15)^4 overflows every built-in integer type
    imat a{{bigint("1000000000000000")}};
    imat p = a * a * a * a;
    CHECK(p(0, 0) == bigint("1000000000000000000000000000000000000000000000000000000000000"));
}

TEST_CASE("stacking and blocks") {
    imat a{{1, 2}}, b{{3, 4}};
    CHECK(kgk::hstack<bigint>({a, b}) == imat{{1, 2, 3, 4}});
    CHECK(kgk::vstack<bigint>({a, b}) == imat{{1, 2}, {3, 4}});
    imat m(2, 2);
    m.set_block(0, 0, imat{{7}});
    m.set_block(1, 1, imat{{9}});
    CHECK(m == imat{{7, 0}, {0, 9}});
    CHECK(m.block(1, 1, 1, 1) == imat{{9}});
}

TEST_CASE("kronecker product") {
    imat a{{1, 2}, {0, 1}};
    imat i2 = imat::identity(2);
    imat k = kgk::kronecker(a, i2);
    CHECK(k.rows() == 4);
    CHECK(k(0, 2) == 2);
    CHECK(k(1, 3) == 2);
    CHECK(kgk::kronecker(i2, a).block(0, 0, 2, 2) == a);
}

TEST_CASE("determinant (Bareiss) matches cofactor expansion") {
    testkit::rng_t rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = testkit::rand_int(rng, 0, 4);
        imat a = testkit::random_matrix(rng, n, n, -5, 5);
        std::vector<std::size_t> idx(n);
        for (std::size_t i = 0; i < n; ++i) idx[i] = i;
        CHECK(kgk::determinant(a) == testkit::minor_det(a, idx, idx));
    }
}
