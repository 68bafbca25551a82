#include <doctest.h>

#include "svmod/generator.hpp"
#include "svmod/lincomb.hpp"
#include "svmod/scalar.hpp"

#include <random>

using namespace svmod;

TEST_CASE("scalar canonical form") {
    CHECK(Scalar(3, 6).str() == "1/2");
    CHECK(Scalar(-4, 2).str() == "-2");
    CHECK(Scalar(0, 7).str() == "0");
    CHECK(Scalar(2, -4).str() == "-1/2");  // denominator normalized positive
    CHECK(Scalar("7/3") == Scalar(7, 3));
    CHECK_THROWS_AS(Scalar(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Scalar("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);
}

TEST_CASE("scalar field axioms on random triples") {
    std::mt19937_64 rng(12345);
    auto rnd = [&rng]() {
        long num = static_cast<long>(rng() % 2001) - 1000;
        long den = static_cast<long>(rng() % 999) + 1;
        return Scalar(num, den);
    };
    for (int i = 0; i < 2000; ++i) {
        Scalar a = rnd(), b = rnd(), c = rnd();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a + Scalar(0) == a);
        CHECK(a * Scalar(1) == a);
        CHECK(a - a == Scalar(0));
        if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
    }
}

TEST_CASE("generator degree readback") {
    CHECK(generator_degree(Generator::L(-3)) == Scalar(-3));
    CHECK(generator_degree(Generator::Y(-2)) == Scalar(-3, 2));
    CHECK(generator_degree(Generator::C()) == Scalar(0));
    CHECK(generator_degree(Generator::WW(4)) == Scalar(4));
}

TEST_CASE("lincomb canonicalization") {
    LinComb<int>::map_type raw{{1, Scalar(0)}, {2, Scalar(3, 2)}};
    auto v = lincomb_canonicalize<int>(raw);
    CHECK(v.size() == 1);
    CHECK(v.coeff(2) == Scalar(3, 2));

    auto w = lincomb_canonicalize<int>({});
    CHECK(w.zero());

    LinComb<int> z;
    z.add(1, Scalar(1, 2));
    z.add(1, Scalar(-1, 2));
    CHECK(z.zero());
}

TEST_CASE("lincomb algebra") {
    std::mt19937_64 rng(99);
    auto rnd_comb = [&rng]() {
        LinComb<int> v;
        for (int i = 0; i < 4; ++i)
            v.add(static_cast<int>(rng() % 6), Scalar(static_cast<long>(rng() % 11) - 5));
        return v;
    };
    for (int i = 0; i < 500; ++i) {
        auto a = rnd_comb(), b = rnd_comb(), c = rnd_comb();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * Scalar(0)).zero());
        CHECK(a - a == LinComb<int>());
    }
}
