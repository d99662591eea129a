#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "germkit/errors.hpp"
#include "germkit/germ.hpp"
#include "germkit/oracle.hpp"

using namespace germkit;

namespace {

CoefficientMap steinberg() { return CoefficientMap(2, {{Partition{2}, -1}, {Partition{1, 1}, 1}}); }

CoefficientMap random_map(int n, std::mt19937_64 & rng)
{
    std::uniform_int_distribution<long> v(-5, 5);
    CoefficientMap c(n);
    for (auto const & p : enumerate_partitions(n))
        c.set(p, v(rng));
    return c;
}

} // namespace

TEST_CASE("coefficient map basics")
{
    CoefficientMap c = steinberg();
    CHECK(c.at(Partition{2}) == -1);
    CHECK(support(c).size() == 2);
    CHECK(support_min(c) == std::vector<Partition>{Partition{1, 1}});
    CHECK(support_min(CoefficientMap::indicator(Partition{3})) == std::vector<Partition>{Partition{3}});
    CHECK(support(CoefficientMap(3)).empty());
    CHECK(support_min(CoefficientMap(3)).empty());
    CHECK_THROWS_AS(c.at(Partition{3}), ValidationError);
    c.set(Partition{2}, 0);
    CHECK(c.entries().size() == 1);
}

TEST_CASE("algebra")
{
    CoefficientMap one = CoefficientMap::indicator(Partition{2});
    CHECK(one + steinberg() == CoefficientMap::indicator(Partition{1, 1}));
    CHECK((steinberg() + (-steinberg())).is_zero());
    CHECK(scalar(steinberg(), 1) == steinberg());
    CHECK_THROWS_AS(one + CoefficientMap::indicator(Partition{3}), ValidationError);
}

TEST_CASE("positivity at minimal support")
{
    CHECK(check_minimal_positivity(steinberg()).pass);
    CHECK_FALSE(check_minimal_positivity(-steinberg()).pass);
    CHECK(check_minimal_positivity(CoefficientMap(3, {{Partition{3}, 4}})).pass);
}

TEST_CASE("Gelfand-Kirillov dimension")
{
    CHECK(gk_dimension(CoefficientMap(3, {{Partition{3}, 7}})) == 0);
    CHECK(gk_dimension(steinberg()) == 1);
    CHECK(gk_dimension(CoefficientMap::indicator(Partition{1, 1, 1, 1})) == 6);
    CHECK_THROWS_AS(gk_dimension(CoefficientMap(2)), ValidationError);
}

TEST_CASE("dimension polynomial")
{
    auto st = dimension_polynomial(steinberg(), Family::VertexCongruence, 3, 1);
    CHECK(st.poly == QPoly{-1, 4});
    CHECK(st.poly.to_string_ascending("X") == "-1 + 4X");
    CHECK(dimension_polynomial(steinberg(), Family::VertexCongruence, 2, 2).poly == QPoly{-1, 5});
    for (Family f : all_families)
        CHECK(dimension_polynomial(CoefficientMap::indicator(Partition{3}), f, 5, 1).poly == QPoly{1});
    CoefficientMap ps = CoefficientMap::indicator(Partition{1, 1});
    CHECK(dimension_polynomial(scalar(ps, 3), Family::ProPIwahoriHalf, 2, 1).poly == QPoly{0, 6});
}

TEST_CASE("top coefficient cancellation is reported")
{
    /* d(4,1,1) = d(3,3) = 9 with Iwahori base counts 30 and 20 */
    CoefficientMap c(6, {{Partition{4, 1, 1}, 2}, {Partition{3, 3}, -3}, {Partition{6}, 1}});
    auto dp = dimension_polynomial(c, Family::Iwahori, 3, 1);
    CHECK(dp.poly == QPoly{1});
    CHECK(dp.formal_degree == 9);
    CHECK(dp.actual_degree == 0);
    CHECK(dp.top_cancels());
    CHECK_FALSE(dimension_polynomial(c, Family::VertexCongruence, 3, 1).top_cancels());
}

TEST_CASE("dimension of fixed vectors")
{
    CHECK(dim_fixed(steinberg(), SubgroupSpec::make(Family::VertexCongruence, 0, 3, 1)) == 3);
    CHECK(dim_fixed(CoefficientMap::indicator(Partition{2}), SubgroupSpec::make(Family::Iwahori, 0, 7, 2)) == 1);
    CoefficientMap ps(2, {{Partition{1, 1}, 2}});
    CHECK(dim_fixed(ps, SubgroupSpec::make(Family::ProPIwahoriHalf, 2, 2, 1)) == 16);
}

TEST_CASE("induction")
{
    CoefficientMap one1 = CoefficientMap::indicator(Partition{1});
    std::vector<CoefficientMap> a{one1, one1};
    CHECK(induce_maps(a) == CoefficientMap::indicator(Partition{1, 1}));
    std::vector<CoefficientMap> b{steinberg(), one1};
    CHECK(induce_maps(b) == CoefficientMap(3, {{Partition{2, 1}, -1}, {Partition{1, 1, 1}, 1}}));
    std::vector<CoefficientMap> c{CoefficientMap::indicator(Partition{2}), CoefficientMap::indicator(Partition{3})};
    CHECK(induce_maps(c) == CoefficientMap::indicator(Partition{3, 2}));
    CHECK_THROWS_AS(induce_maps(std::vector<CoefficientMap>{}), ValidationError);
}

TEST_CASE("Jacquet-Langlands transfers")
{
    CHECK(lj_transfer(steinberg(), 1, 2) == CoefficientMap::indicator(Partition{1}));
    CHECK(jl_transfer(CoefficientMap::indicator(Partition{1}), 2) == CoefficientMap(2, {{Partition{2}, -1}}));
    CHECK(lj_transfer(CoefficientMap(4, {{Partition{3, 1}, 5}}), 2, 2).is_zero());
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 6; ++n) {
        CoefficientMap c = random_map(n, rng);
        CHECK(lj_transfer(c, n, 1) == c);
        CHECK(jl_transfer(c, 1) == c);
        for (int d = 2; d <= 3; ++d)
            CHECK(lj_transfer(jl_transfer(c, d), n, d) == c);
    }
}

TEST_CASE("square-integrable top coefficient")
{
    CHECK(square_integrable_top_coeff(1, 2) == -1);
    CHECK(square_integrable_top_coeff(7, 1) == 7);
    CHECK(square_integrable_top_coeff(2, 3) == 2);
}

TEST_CASE("solve from multiplicities")
{
    auto m2 = oracle::multiplicity_matrix(2, 2);
    CHECK(solve_from_multiplicities(CoefficientMap(2, {{Partition{2}, 3}, {Partition{1, 1}, 1}}), m2)
          == CoefficientMap::indicator(Partition{1, 1}));
    /* reduced 2x2 case: m((1,1)) = b, m((2)) = a + 3b */
    CoefficientMap m(2, {{Partition{2}, 5 + 3 * 2}, {Partition{1, 1}, 2}});
    CHECK(solve_from_multiplicities(m, m2) == CoefficientMap(2, {{Partition{2}, 5}, {Partition{1, 1}, 2}}));
    std::mt19937_64 rng(3);
    auto m3 = oracle::multiplicity_matrix(3, 2);
    for (auto const & p : enumerate_partitions(3))
        CHECK(solve_from_multiplicities(forward_multiplicities(CoefficientMap::indicator(p), m3), m3)
              == CoefficientMap::indicator(p));
    for (int i = 0; i < 20; ++i) {
        CoefficientMap c = random_map(3, rng);
        CHECK(solve_from_multiplicities(forward_multiplicities(c, m3), m3) == c);
    }
}

TEST_CASE("non-unitriangular matrices are rejected")
{
    MultiplicityMatrix bad{2, enumerate_partitions(2), {{1, 3}, {1, 1}}};
    CHECK_THROWS_AS(check_unitriangular(bad), InvariantViolation);
    MultiplicityMatrix diag{2, enumerate_partitions(2), {{2, 3}, {0, 1}}};
    CHECK_THROWS_AS(check_unitriangular(diag), InvariantViolation);
}

TEST_CASE("Whittaker dimensions")
{
    auto w = whittaker_dims(steinberg());
    CHECK(w.size() == 1);
    CHECK(w.at(Partition{1, 1}) == 1);
    auto f = whittaker_dims(CoefficientMap(3, {{Partition{3}, 4}}));
    CHECK(f.at(Partition{3}) == 4);
    auto g = whittaker_dims(CoefficientMap(3, {{Partition{2, 1}, -1}, {Partition{1, 1, 1}, 1}}));
    CHECK(g.size() == 1);
    CHECK(g.at(Partition{1, 1, 1}) == 1);
    CHECK_THROWS_AS(whittaker_dims(-steinberg()), InvariantViolation);
}
