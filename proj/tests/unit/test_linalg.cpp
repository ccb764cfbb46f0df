#include <doctest.h>

#include <vector>

#include "quadrica/linalg.hpp"
#include "quadrica/rng.hpp"
#include "support/naive_rank.hpp"

using namespace quadrica;

namespace {

const PrimeField kF; // default modulus 2^31 - 1

FpMatrix mat(std::size_t r, std::size_t c, std::vector<std::int64_t> e,
             PrimeField f = kF) {
    return FpMatrix(r, c, f, std::move(e));
}

FpMatrix random_matrix(std::size_t r, std::size_t c, std::uint64_t seed,
                       PrimeField f = kF) {
    CounterRng rng(seed, 99);
    std::vector<std::uint64_t> d(r * c);
    for (auto& v : d) v = rng.next_residue(f);
    return FpMatrix::from_residues(r, c, f, std::move(d));
}

std::vector<std::vector<std::int64_t>> to_rows(const FpMatrix& m) {
    std::vector<std::vector<std::int64_t>> rows(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        rows[r].resize(m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c)
            rows[r][c] = static_cast<std::int64_t>(m.at(r, c));
    }
    return rows;
}

} // namespace

TEST_CASE("prime field validates the modulus") {
    CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(std::uint64_t{1} << 32), std::invalid_argument);
    CHECK_NOTHROW(PrimeField(2));
    CHECK_NOTHROW(PrimeField(2147483647));
}

TEST_CASE("prime field arithmetic basics") {
    PrimeField f(101);
    CHECK(f.reduce(-1) == 100);
    CHECK(f.mul(50, 50) == 2500 % 101);
    for (std::uint64_t a = 1; a < 101; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
}

TEST_CASE("rank: empty, identity, all-ones") {
    CHECK(rank(mat(0, 0, {})) == 0);
    CHECK(rank(FpMatrix::identity(5, kF)) == 5);
    CHECK(rank(mat(3, 3, {1, 1, 1, 1, 1, 1, 1, 1, 1})) == 1);
    CHECK(rank(mat(3, 4, std::vector<std::int64_t>(12, 0))) == 0);
}

TEST_CASE("kernel: identity is trivial, forced 1x2 kernel") {
    CHECK(kernel_basis(FpMatrix::identity(4, kF)).cols() == 0);

    FpMatrix k = kernel_basis(mat(1, 2, {1, 1}));
    REQUIRE(k.cols() == 1);
    // proportional to (1, p-1): nonzero entries with sum 0
    std::uint64_t a = k.at(0, 0), b = k.at(1, 0);
    CHECK(a != 0);
    CHECK(b != 0);
    CHECK(kF.add(a, b) == 0);
}

TEST_CASE("solve: identity, inconsistent, free variables zero") {
    auto x = solve(FpMatrix::identity(3, kF), {5, 6, 7});
    REQUIRE(x.has_value());
    CHECK(*x == std::vector<std::uint64_t>{5, 6, 7});

    CHECK(!solve(mat(2, 2, {1, 1, 1, 1}), {1, 2}).has_value());

    auto y = solve(mat(1, 2, {1, 1}), {5});
    REQUIRE(y.has_value());
    CHECK(*y == std::vector<std::uint64_t>{5, 0});

    CHECK_THROWS_AS(solve(mat(2, 2, {1, 0, 0, 1}), {1}), std::invalid_argument);
}

TEST_CASE("rank equals transpose rank and matches the naive oracle") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        std::size_t r = 1 + seed % 30, c = 1 + (seed * 7 + 3) % 30;
        FpMatrix m = random_matrix(r, c, seed);
        std::size_t rk = rank(m);
        CHECK(rk == rank(m.transpose()));
        CHECK(rk == testsupport::naive_rank(to_rows(m), static_cast<std::int64_t>(kF.modulus())));
        CHECK(rk <= std::min(r, c));
    }
}

TEST_CASE("rank detects structured deficiency") {
    // duplicate a row: rank drops
    FpMatrix m = random_matrix(4, 6, 11);
    std::vector<std::int64_t> e;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 6; ++c) e.push_back(static_cast<std::int64_t>(m.at(r, c)));
    for (std::size_t c = 0; c < 6; ++c) e.push_back(static_cast<std::int64_t>(m.at(0, c)));
    CHECK(rank(mat(5, 6, e)) == 4);
}

TEST_CASE("kernel columns are exact null vectors") {
    for (std::uint64_t seed = 100; seed < 120; ++seed) {
        FpMatrix m = random_matrix(5 + seed % 6, 9, seed);
        FpMatrix k = kernel_basis(m);
        CHECK(k.cols() == m.cols() - rank(m));
        if (k.cols() > 0) CHECK(is_zero(matmul(m, k)));
    }
}

TEST_CASE("rank is invariant under row permutation and row scaling") {
    FpMatrix m = random_matrix(6, 8, 17);
    auto rows = to_rows(m);
    std::swap(rows[0], rows[4]);
    std::swap(rows[2], rows[5]);
    std::vector<std::int64_t> flat;
    for (auto& row : rows)
        for (auto& v : row) flat.push_back(v);
    CHECK(rank(mat(6, 8, flat)) == rank(m));

    // scale row 3 by 7
    auto scaled = to_rows(m);
    for (auto& v : scaled[3])
        v = static_cast<std::int64_t>(kF.mul(static_cast<std::uint64_t>(v), 7));
    flat.clear();
    for (auto& row : scaled)
        for (auto& v : row) flat.push_back(v);
    CHECK(rank(mat(6, 8, flat)) == rank(m));
}

TEST_CASE("bareiss integer rank on fixed cases") {
    auto z = [](std::initializer_list<int> vs) {
        std::vector<mpz_class> out;
        for (int v : vs) out.emplace_back(v);
        return out;
    };
    CHECK(rank(IntMatrix(2, 2, z({1, 0, 0, 1}))) == 2);
    CHECK(rank(IntMatrix(2, 2, z({2, 4, 1, 2}))) == 1);
    CHECK(rank(IntMatrix(3, 3, z({0, 0, 0, 0, 0, 0, 0, 0, 0}))) == 0);
    // pivot skip: first column zero
    CHECK(rank(IntMatrix(2, 3, z({0, 1, 2, 0, 2, 4}))) == 1);
}

TEST_CASE("integer and prime-field ranks agree on small random matrices") {
    CounterRng rng(2024, 5);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = 1 + rng.next() % 10, c = 1 + rng.next() % 10;
        std::vector<std::int64_t> e(r * c);
        std::vector<mpz_class> ze(r * c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] = static_cast<std::int64_t>(rng.next() % 201) - 100;
            ze[i] = static_cast<long>(e[i]);
        }
        std::size_t rank_p = rank(mat(r, c, e));
        std::size_t rank_z = rank(IntMatrix(r, c, std::move(ze)));
        CHECK(rank_p <= rank_z); // reduction mod p can only lose rank
        CHECK(rank_p == rank_z); // and at p = 2^31-1 it never does here
    }
}

TEST_CASE("integer solve returns exact rationals with free variables zero") {
    auto z = [](std::initializer_list<int> vs) {
        std::vector<mpz_class> out;
        for (int v : vs) out.emplace_back(v);
        return out;
    };
    // 2x = 3 -> x = 3/2
    auto x = solve(IntMatrix(1, 1, z({2})), z({3}));
    REQUIRE(x.has_value());
    CHECK((*x)[0] == mpq_class(3, 2));

    // underdetermined: x + y = 5 -> (5, 0)
    auto y = solve(IntMatrix(1, 2, z({1, 1})), z({5}));
    REQUIRE(y.has_value());
    CHECK((*y)[0] == 5);
    CHECK((*y)[1] == 0);

    // inconsistent over Q
    CHECK(!solve(IntMatrix(2, 1, z({1, 1})), z({1, 2})).has_value());

    // consistent over Q even when the default modulus divides the pivot
    auto w = solve(IntMatrix(1, 1, z({2147483647})), z({1}));
    REQUIRE(w.has_value());
    CHECK((*w)[0] == mpq_class(1, 2147483647));
}

TEST_CASE("integer solve satisfies A x = b on random systems") {
    CounterRng rng(77, 3);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t r = 1 + rng.next() % 6, c = 1 + rng.next() % 6;
        std::vector<mpz_class> a(r * c);
        for (auto& v : a) v = static_cast<long>(rng.next() % 21) - 10;
        IntMatrix m(r, c, a);
        // synthesize a consistent rhs
        std::vector<mpz_class> x0(c);
        for (auto& v : x0) v = static_cast<long>(rng.next() % 11) - 5;
        std::vector<mpz_class> b(r, mpz_class(0));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) b[i] += m.at(i, j) * x0[j];
        auto x = solve(m, b);
        REQUIRE(x.has_value());
        for (std::size_t i = 0; i < r; ++i) {
            mpq_class acc(0);
            for (std::size_t j = 0; j < c; ++j) acc += mpq_class(m.at(i, j)) * (*x)[j];
            CHECK(acc == mpq_class(b[i]));
        }
    }
}
