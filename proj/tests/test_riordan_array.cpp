#include <doctest.h>

#include <random>

#include "riordan/riordan_array.hpp"

using namespace riordan;

namespace {

RiordanPair random_proper_pair(std::mt19937& rng, Prime p, int order,
                               bool monic_f = false) {
    std::uniform_int_distribution<int> coeff(-(p.value() / 2), p.value() / 2);
    std::uniform_int_distribution<int> unit(1, p.value() - 1);
    std::vector<int> g(order), f(order, 0);
    for (int& v : g) v = coeff(rng);
    g[0] = centered(unit(rng), p.value());
    for (int k = 2; k < order; ++k) f[k] = coeff(rng);
    f[1] = monic_f ? 1 : centered(unit(rng), p.value());
    return make_pair(make_series(g, p, order), make_series(f, p, order));
}

// Binomial coefficient mod p by Lucas' theorem.
int lucas_binom(long long n, long long k, int p) {
    long long r = 1;
    while (n || k) {
        long long nd = n % p, kd = k % p;
        if (kd > nd) return 0;
        long long part = 1;
        for (long long t = 0; t < kd; ++t)
            part = part * ((nd - t) % p) % p * inv_mod(static_cast<int>(t + 1), p) % p;
        r = r * part % p;
        n /= p;
        k /= p;
    }
    return centered(r, p);
}

RiordanPair pascal_pair(Prime p, int order) {
    return make_pair(parse_series("pascal-g", p, order),
                     parse_series("pascal-f", p, order));
}

} // namespace

TEST_CASE("pair construction invariants") {
    Prime p(3);
    CHECK_THROWS_AS(make_pair(one_series(p, 4), one_series(p, 4)), precondition_error);
    CHECK_THROWS_AS(make_pair(one_series(p, 4), z_series(Prime(5), 4)),
                    precondition_error);
    RiordanPair id = identity_pair(p, 5);
    CHECK(is_proper(id));
    CHECK(id.g.c == one_series(p, 5).c);
    CHECK(id.f.c == z_series(p, 5).c);
    CHECK_FALSE(is_proper(make_pair(z_series(p, 4), z_series(p, 4))));
}

TEST_CASE("pascal leading matrix equals Lucas binomials") {
    // (1/(1-z), z/(1-z)) has l_{i,j} = C(i, j) mod p.
    for (int p : {3, 5, 7}) {
        TriangularMatrix m = leading_matrix(pascal_pair(Prime(p), 16), 16);
        for (int i = 0; i < 16; ++i)
            for (int j = 0; j < 16; ++j)
                CHECK(m.at(i, j) == (j <= i ? lucas_binom(i, j, p) : 0));
    }
}

TEST_CASE("fundamental theorem: matrix-vector product equals g phi(f)") {
    std::mt19937 rng(17);
    Prime p(5);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int trial = 0; trial < 30; ++trial) {
        RiordanPair pair = random_proper_pair(rng, p, 12);
        std::vector<int> phi_c(12);
        for (int& v : phi_c) v = coeff(rng);
        Series phi = make_series(phi_c, p, 12);
        Series via_series = ftrm_apply(pair, phi);
        TriangularMatrix m = leading_matrix(pair, 12);
        for (int i = 0; i < 12; ++i) {
            long long acc = 0;
            for (int j = 0; j <= i; ++j)
                acc += static_cast<long long>(m.at(i, j)) * phi.at(j);
            CHECK(via_series.at(i) == centered(acc, 5));
        }
    }
}

TEST_CASE("group law matches the triangular matrix product oracle") {
    std::mt19937 rng(29);
    for (int p : {3, 5, 7})
        for (int trial = 0; trial < 25; ++trial) {
            RiordanPair a = random_proper_pair(rng, Prime(p), 12);
            RiordanPair b = random_proper_pair(rng, Prime(p), 12);
            TriangularMatrix lhs = leading_matrix(multiply(a, b), 12);
            TriangularMatrix rhs =
                matrix_product(leading_matrix(a, 12), leading_matrix(b, 12), p);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("inverse gives the identity pair both ways") {
    std::mt19937 rng(31);
    for (int p : {3, 5, 7})
        for (int trial = 0; trial < 25; ++trial) {
            RiordanPair a = random_proper_pair(rng, Prime(p), 12);
            RiordanPair inv = inverse(a);
            RiordanPair id = identity_pair(Prime(p), 12);
            RiordanPair left = multiply(inv, a);
            RiordanPair right = multiply(a, inv);
            CHECK(left.g.c == id.g.c);
            CHECK(left.f.c == id.f.c);
            CHECK(right.g.c == id.g.c);
            CHECK(right.f.c == id.f.c);
        }
    CHECK_THROWS_AS(inverse(make_pair(z_series(Prime(3), 4), z_series(Prime(3), 4))),
                    precondition_error);
}

TEST_CASE("A-sequences of the classical pairs") {
    Prime p(3);
    ASequence pa = a_sequence(pascal_pair(p, 10), 6);
    CHECK(pa == ASequence{1, 1, 0, 0, 0, 0});
    RiordanPair catalan = make_pair(parse_series("catalan", p, 10),
                                    parse_series("catalan-f", p, 10));
    ASequence ca = a_sequence(catalan, 6);
    CHECK(ca == ASequence{1, 1, 1, 1, 1, 1});
    CHECK_THROWS_AS(a_sequence(make_pair(one_series(p, 6),
                                         mul_scalar(z_series(p, 6), -1))),
                    precondition_error);
}

TEST_CASE("A-sequence reconstructs the triangle and defines f") {
    std::mt19937 rng(37);
    for (int p : {3, 5, 7})
        for (int trial = 0; trial < 25; ++trial) {
            RiordanPair pair = random_proper_pair(rng, Prime(p), 12, /*monic_f=*/true);
            ASequence a = a_sequence(pair);
            TriangularMatrix direct = leading_matrix(pair, 12);
            TriangularMatrix rebuilt = reconstruct_from_a(pair.g, a, 12);
            CHECK(direct == rebuilt);
            // f = z A(f).
            Series af = compose(make_series(a, Prime(p), 12), pair.f);
            CHECK(truncate(shift_up(af, 1), 12).c == pair.f.c);
        }
}
