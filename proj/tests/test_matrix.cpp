#include "doctest.h"

#include "oracles.hpp"
#include "stirdet/matrix.hpp"

#include <random>

using namespace stirdet;

namespace {

std::vector<std::vector<std::int64_t>> to_plain(const IntMatrix& m)
{
    std::vector<std::vector<std::int64_t>> out(m.size(), std::vector<std::int64_t>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            out[i][j] = m(i, j).get_si();
        }
    }
    return out;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, int lo = -9, int hi = 9)
{
    std::uniform_int_distribution<int> entry(lo, hi);
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = entry(rng);
        }
    }
    return m;
}

}  // namespace

TEST_CASE("determinant examples")
{
    for (auto method : {DetMethod::bareiss, DetMethod::laplace}) {
        CHECK(det(IntMatrix{{1, 1}, {2, 3}}, method) == 1);
        CHECK(det(IntMatrix::identity(5), method) == 1);
        CHECK(det(IntMatrix{{3, 1}, {11, 6}}, method) == 7);
        CHECK(det(IntMatrix(0), method) == 1);
        CHECK(det(IntMatrix{{-4}}, method) == -4);
    }
}

TEST_CASE("zero pivots are handled by row swaps")
{
    CHECK(det(IntMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK(det(IntMatrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}) == -1);
    CHECK(det(IntMatrix{{0, 2, 3}, {0, 5, 6}, {0, 8, 9}}) == 0);
    CHECK(det(IntMatrix{{1, 2, 3}, {2, 4, 7}, {1, 1, 1}}) == oracle::det_leibniz({{1, 2, 3}, {2, 4, 7}, {1, 1, 1}}));
}

TEST_CASE("Laplace refuses large matrices")
{
    CHECK_NOTHROW(det(IntMatrix::identity(8), DetMethod::laplace));
    CHECK_THROWS_AS(det(IntMatrix::identity(9), DetMethod::laplace), SizeGuardError);
}

TEST_CASE("Bareiss, Laplace and Leibniz agree on random matrices")
{
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = rng() % 7;
        const IntMatrix m = random_matrix(rng, n);
        const ExactInt bareiss = det(m, DetMethod::bareiss);
        CHECK(bareiss == det(m, DetMethod::laplace));
        if (n <= 5) {
            CHECK(bareiss == oracle::det_leibniz(to_plain(m)));
        }
    }
}

TEST_CASE("sparse random matrices exercise pivot search")
{
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng() % 6;
        IntMatrix m = random_matrix(rng, n, -2, 2);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (rng() % 3 != 0) {
                    m(i, j) = 0;
                }
            }
        }
        CHECK(det(m) == det(m, DetMethod::laplace));
    }
}

TEST_CASE("determinant is alternating and transpose invariant")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng() % 6;
        IntMatrix m = random_matrix(rng, n);
        const ExactInt d = det(m);
        CHECK(det(m.transpose()) == d);
        const std::size_t r1 = rng() % n;
        const std::size_t r2 = (r1 + 1 + rng() % (n - 1)) % n;
        IntMatrix swapped = m;
        swapped.swap_rows(r1, r2);
        CHECK(det(swapped) == -d);
        for (std::size_t j = 0; j < n; ++j) {
            m(r2, j) = m(r1, j);
        }
        CHECK(det(m) == 0);
    }
}

TEST_CASE("leading principal minors")
{
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = rng() % 8;
        IntMatrix m = random_matrix(rng, n, -3, 3);
        if (trial % 4 == 0 && n > 2) {
            // force a vanishing leading minor
            m(0, 0) = 0;
        }
        const auto minors = leading_principal_minors(m);
        REQUIRE(minors.size() == n);
        for (std::size_t k = 1; k <= n; ++k) {
            CHECK(minors[k - 1] == det(m.leading(k), DetMethod::laplace));
        }
    }
}

TEST_CASE("initializer rows must be square")
{
    CHECK_THROWS_AS((IntMatrix{{1, 2}, {3}}), std::invalid_argument);
}
