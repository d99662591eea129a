#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "germkit/errors.hpp"
#include "germkit/qpoly.hpp"

using namespace germkit;

namespace {

QPoly random_poly(std::mt19937_64 & rng)
{
    std::uniform_int_distribution<long> coef(-9, 9), deg(0, 5);
    std::vector<mpz_class> c;
    for (long k = deg(rng); k >= 0; --k)
        c.emplace_back(coef(rng));
    return QPoly(c);
}

/* [m]_q at integer v by the geometric sum */
mpz_class q_int_value(int m, long v)
{
    mpz_class s = 0, p = 1;
    for (int i = 0; i < m; ++i) {
        s += p;
        p *= v;
    }
    return s;
}

} // namespace

TEST_CASE("q-integers and q-factorials")
{
    CHECK(q_int(1) == QPoly{1});
    CHECK(q_int(2) == QPoly{1, 1});
    CHECK(q_int(3) == QPoly{1, 1, 1});
    CHECK(q_factorial(1) == QPoly{1});
    CHECK(q_factorial(2) == QPoly{1, 1});
    CHECK(q_factorial(3) == QPoly{1, 2, 2, 1});
    CHECK(q_factorial(3).to_string("q") == "q^3+2q^2+2q+1");
    CHECK_THROWS_AS(q_int(0), ValidationError);
}

TEST_CASE("q-multinomial")
{
    CHECK(q_multinomial(Partition{1, 1}) == QPoly{1, 1});
    CHECK(q_multinomial(Partition{4}) == QPoly{1});
    CHECK(q_multinomial(Partition{2, 1}) == QPoly{1, 1, 1});
    /* value at every q matches the product of q-integers over the factorials */
    for (int n = 1; n <= 7; ++n)
        for (auto const & p : enumerate_partitions(n))
            for (long v : {2L, 3L, 5L}) {
                mpz_class num = 1, den = 1;
                for (int m = 1; m <= n; ++m)
                    num *= q_int_value(m, v);
                for (int part : p.parts())
                    for (int m = 1; m <= part; ++m)
                        den *= q_int_value(m, v);
                CHECK(eval_at(q_multinomial(p), v) == num / den);
                CHECK(q_multinomial(p).eval(1) == multinomial(p));
            }
}

TEST_CASE("evaluation")
{
    CHECK(eval_at(QPoly{1, 1}, 2) == 3);
    CHECK(eval_at(q_factorial(3), 2) == 21);
    CHECK(eval_at(QPoly{}, 17) == 0);
}

TEST_CASE("arithmetic")
{
    CHECK(QPoly{1, 1} * QPoly{-1, 1} == QPoly{-1, 0, 1});
    CHECK(QPoly{3, 5}.substitute_scaled(4) == QPoly{3, 20});
    QPoly p{2, 0, 7};
    CHECK(p + QPoly{} == p);
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);
    CHECK(QPoly{-1, 4}.to_string_ascending("X") == "-1 + 4X");
    CHECK(QPoly{0, 0, 1}.to_string("q") == "q^2");
}

TEST_CASE("exact division")
{
    auto d = divmod(QPoly{-1, 0, 1}, QPoly{-1, 1});
    CHECK(d.quotient == QPoly{1, 1});
    CHECK(d.remainder.is_zero());
    CHECK_THROWS_AS(exact_quotient(QPoly{1, 0, 1}, QPoly{1, 1}), InvariantViolation);
    CHECK_THROWS(divmod(QPoly{1}, QPoly{}));
}

TEST_CASE("ring axioms on random polynomials")
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        QPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == QPoly{});
        CHECK(a * QPoly{1} == a);
        for (long v : {-2L, 0L, 3L})
            CHECK((a * b).eval(v) == a.eval(v) * b.eval(v));
        CHECK(a.substitute_scaled(2).substitute_scaled(3) == a.substitute_scaled(6));
        if (!b.is_zero() && (b.leading() == 1 || b.leading() == -1)) {
            auto qr = divmod(a, b);
            CHECK(qr.quotient * b + qr.remainder == a);
            CHECK(qr.remainder.degree() < b.degree());
        }
    }
}
