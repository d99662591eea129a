#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "germkit/errors.hpp"
#include "germkit/json_io.hpp"
#include "germkit/oracle.hpp"

using namespace germkit;
using json_io::json;

TEST_CASE("partitions and compositions")
{
    CHECK(json_io::to_json(Partition{3, 1, 1}) == json::parse("[3,1,1]"));
    CHECK(json_io::partition_from_json(json::parse("[3,1,1]")) == Partition{3, 1, 1});
    CHECK(json_io::to_json(Composition({1, 2})) == json::parse(R"({"composition":[1,2]})"));
    CHECK(json_io::composition_from_json(json::parse(R"({"composition":[1,2]})")) == Composition({1, 2}));
    CHECK_THROWS_AS(json_io::partition_from_json(json::parse("[1,3]")), ValidationError);
    CHECK_THROWS_AS(json_io::partition_from_json(json::parse(R"({"composition":[1]})")), ValidationError);
    CHECK_THROWS_AS(json_io::composition_from_json(json::parse("[1]")), ValidationError);
}

TEST_CASE("big integers")
{
    mpz_class big("123456789012345678901234567890");
    CHECK(json_io::to_json(big).is_string());
    CHECK(json_io::bigint_from_json(json_io::to_json(big)) == big);
    CHECK(json_io::to_json(mpz_class(-5)) == json(-5));
    CHECK(json_io::bigint_from_json(json("-17")) == -17);
    CHECK_THROWS_AS(json_io::bigint_from_json(json("x1")), ValidationError);
    CHECK_THROWS_AS(json_io::bigint_from_json(json(1.5)), ValidationError);
}

TEST_CASE("coefficient map round trip")
{
    CoefficientMap c(3, {{Partition{3}, 2}, {Partition{1, 1, 1}, -4}});
    json j = json_io::to_json(c);
    CHECK(j["n"] == 3);
    CHECK(j["entries"][0]["partition"] == json::parse("[3]"));
    CHECK(json_io::coefficient_map_from_json(j) == c);
    CHECK_THROWS_AS(json_io::coefficient_map_from_json(json::parse(R"({"n":2,"entries":[{"partition":[3],"value":1}]})")),
                    ValidationError);
    CHECK_THROWS_AS(json_io::coefficient_map_from_json(json::parse(R"({"entries":[]})")), ValidationError);
}

TEST_CASE("polynomials and matrices")
{
    CHECK(json_io::qpoly_from_json(json_io::to_json(QPoly{-1, 4})) == QPoly{-1, 4});
    auto m = oracle::multiplicity_matrix(2, 2);
    auto back = json_io::multiplicity_matrix_from_json(json_io::to_json(m));
    CHECK(back.index == m.index);
    CHECK(back.entries == m.entries);
}
