#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "germkit/errors.hpp"
#include "germkit/gl2.hpp"

using namespace germkit;
using namespace germkit::gl2;

TEST_CASE("(a, b) table")
{
    CHECK(ab_coefficients(RepClass::steinberg_twist(3, 1)) == AB{-1, 1});
    CHECK(ab_coefficients(RepClass::cuspidal_steinberg(3, 1)) == AB{-2, 1});
    CHECK(ab_coefficients(RepClass::finite_dim(1, 3, 1)) == AB{1, 0});
    CHECK(ab_coefficients(RepClass::principal_series(4, 3, 2)) == AB{0, 4});
    CHECK(ab_coefficients(RepClass::supercuspidal(1, 3)) == AB{-4, 1});
    CHECK(ab_coefficients(RepClass::supercuspidal(2, 3)) == AB{-6, 1});
    CHECK(ab_coefficients(RepClass::supercuspidal(3, 3)) == AB{-12, 1});
    CHECK_THROWS_AS(ab_coefficients(RepClass::speh_pair(2, 3, 1)), ValidationError);
    CHECK_THROWS_AS(ab_coefficients(RepClass::modp_supersingular(true, 3)), ValidationError);
}

TEST_CASE("chain dimensions")
{
    CHECK(dim_invariants(RepClass::steinberg_twist(3, 1), ChainMember::Kchain, 0) == 3);
    for (int k : {1, 2, 5})
        for (auto m : {ChainMember::IHalf, ChainMember::Kchain, ChainMember::Ichain})
            CHECK(dim_invariants(RepClass::finite_dim(k, 5, 2), m, 3) == k);
    CHECK(dim_invariants(RepClass::principal_series(3, 2, 1), ChainMember::Ichain, 1) == 24);
    CHECK_THROWS_AS(dim_invariants(RepClass::supercuspidal(4, 3), ChainMember::IHalf, 0), ValidationError);
}

TEST_CASE("Speh split")
{
    auto [z, l] = rho2_pair(3, 5, 2, 3, 1);
    CHECK(ab_coefficients(z) == AB{3, 2});
    CHECK(ab_coefficients(l) == AB{-3, 3});
    /* Z + L behaves like the induced representation: a cancels, b adds */
    CHECK(to_coefficient_map(z) + to_coefficient_map(l) == CoefficientMap(2, {{Partition{1, 1}, 5}}));
    CHECK_THROWS_AS(rho2_pair(3, 1, 1, 3, 1), ValidationError);
    CHECK_THROWS_AS(rho2_pair(3, 5, 0, 3, 1), ValidationError);
}

TEST_CASE("mod-p supersingular")
{
    CHECK(modp_supersingular_dims(true, ChainMember::IHalf, 0, 3) == 2);
    CHECK(modp_supersingular_dims(true, ChainMember::Kchain, 0, 3) == 5);
    CHECK(modp_supersingular_dims(false, ChainMember::Kchain, 1, 3) == 20);
    CHECK_THROWS_AS(modp_supersingular_dims(true, ChainMember::IHalf, 0, 2), ValidationError);
    CHECK_THROWS_AS(modp_supersingular_dims(true, ChainMember::Ichain, 0, 3), ValidationError);
    CHECK_THROWS_AS(RepClass::modp_supersingular(false, 9), ValidationError);
}

TEST_CASE("coefficient maps")
{
    CHECK(to_coefficient_map(RepClass::steinberg_twist(2, 1))
          == CoefficientMap(2, {{Partition{2}, -1}, {Partition{1, 1}, 1}}));
    CHECK(to_coefficient_map(RepClass::principal_series(1, 2, 1)) == CoefficientMap::indicator(Partition{1, 1}));
    CHECK(to_coefficient_map(RepClass::cuspidal_steinberg(2, 1))
          == CoefficientMap(2, {{Partition{2}, -2}, {Partition{1, 1}, 1}}));
    /* trivial + Steinberg = induced from the trivial character */
    CHECK(to_coefficient_map(RepClass::finite_dim(1, 2, 1)) + to_coefficient_map(RepClass::steinberg_twist(2, 1))
          == to_coefficient_map(RepClass::principal_series(1, 2, 1)));
}

TEST_CASE("chain formulas agree with the germ dimension for every concrete class")
{
    for (long q : {2L, 3L, 5L})
        for (int d : {1, 2})
            for (auto const & rep : catalog(q, d)) {
                if (rep.kind() == Kind::ModPSupersingular)
                    continue;
                if ((rep.kind() == Kind::SpehPair || rep.kind() == Kind::EssSquareIntegrablePair) && !rep.b())
                    continue;
                AB ab = ab_coefficients(rep);
                CoefficientMap c = to_coefficient_map(rep);
                for (auto m : {ChainMember::IHalf, ChainMember::Kchain, ChainMember::Ichain})
                    for (int j = 0; j <= 4; ++j)
                        CHECK(chain_formula(ab, m, j, q, d)
                              == dim_fixed(c, SubgroupSpec::make(chain_family(m), j, q, d)));
            }
}

TEST_CASE("catalog contents")
{
    CHECK(catalog(3, 1).size() == 12);
    CHECK(catalog(2, 1).size() == 10);
    CHECK(catalog(3, 2).size() == 6);
    CHECK(parse_chain_member(chain_member_name(ChainMember::Kchain)) == ChainMember::Kchain);
    CHECK_THROWS_AS(parse_chain_member("X"), ValidationError);
    CHECK_THROWS_AS(RepClass::finite_dim(0, 3, 1), ValidationError);
    CHECK_THROWS_AS(RepClass::steinberg_twist(6, 1), ValidationError);
}
