#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "germkit/errors.hpp"
#include "germkit/partitions.hpp"

using namespace germkit;

namespace {

/* p(n) by the pentagonal-free recurrence on largest part */
long count_partitions(int n, int max_part)
{
    if (n == 0)
        return 1;
    long c = 0;
    for (int k = std::min(n, max_part); k >= 1; --k)
        c += count_partitions(n - k, k);
    return c;
}

/* definition: λ̂_i = #{j : λ_j >= i} */
std::vector<int> dual_by_definition(Partition const & p)
{
    std::vector<int> out;
    for (int i = 1; i <= p[0]; ++i) {
        int c = 0;
        for (int part : p.parts())
            c += part >= i;
        out.push_back(c);
    }
    return out;
}

std::int64_t d_by_pairs(Partition const & p)
{
    std::int64_t s = 0;
    for (std::size_t i = 0; i < p.length(); ++i)
        for (std::size_t j = i + 1; j < p.length(); ++j)
            s += std::int64_t(p[i]) * p[j];
    return s;
}

} // namespace

TEST_CASE("partition validation")
{
    CHECK_THROWS_AS(Partition({}), ValidationError);
    CHECK_THROWS_AS(Partition({1, 2}), ValidationError);
    CHECK_THROWS_AS(Partition({2, 0}), ValidationError);
    CHECK_THROWS_AS(Partition({-1}), ValidationError);
    CHECK(Partition({3, 1, 1}).n() == 5);
    CHECK(Partition({3, 1, 1}).to_string() == "(3,1,1)");
    CHECK(Partition::row(4) == Partition{4});
    CHECK(Partition::column(3) == Partition{1, 1, 1});
}

TEST_CASE("enumerate partitions")
{
    auto two = enumerate_partitions(2);
    REQUIRE(two.size() == 2);
    CHECK(two[0] == Partition{2});
    CHECK(two[1] == Partition{1, 1});
    CHECK(enumerate_partitions(5).size() == 7);
    CHECK(enumerate_partitions(6).size() == 11);
    for (int n = 1; n <= 15; ++n)
        CHECK(static_cast<long>(enumerate_partitions(n).size()) == count_partitions(n, n));
    CHECK_THROWS_AS(enumerate_partitions(0), ValidationError);
}

TEST_CASE("enumeration order is a linear extension of reverse dominance")
{
    for (int n = 1; n <= 9; ++n) {
        auto ps = enumerate_partitions(n);
        for (std::size_t i = 0; i < ps.size(); ++i)
            for (std::size_t j = i + 1; j < ps.size(); ++j)
                CHECK_FALSE(dominance_leq(ps[i], ps[j]));
    }
}

TEST_CASE("dual")
{
    CHECK(dual(Partition{5}) == Partition{1, 1, 1, 1, 1});
    CHECK(dual(Partition{2, 1}) == Partition{2, 1});
    CHECK(dual(Partition{3, 1}) == Partition{2, 1, 1});
    for (int n = 1; n <= 12; ++n)
        for (auto const & p : enumerate_partitions(n)) {
            CHECK(dual(dual(p)) == p);
            CHECK(dual(p) == Partition(dual_by_definition(p)));
        }
}

TEST_CASE("dominance")
{
    CHECK(dominance_leq(Partition{1, 1}, Partition{2}));
    CHECK_FALSE(dominance_leq(Partition{3, 3}, Partition{4, 1, 1}));
    CHECK_FALSE(dominance_leq(Partition{4, 1, 1}, Partition{3, 3}));
    CHECK(dominance_compare(Partition{3, 3}, Partition{4, 1, 1}) == Dominance::Incomparable);
    CHECK(dominance_leq(Partition{2, 2, 1, 1}, Partition{3, 2, 1}));
    CHECK(dominance_compare(Partition{2, 1}, Partition{2, 1}) == Dominance::Equal);
    CHECK(dominance_compare(Partition{3}, Partition{2, 1}) == Dominance::Greater);
    CHECK_THROWS_AS(dominance_leq(Partition{2}, Partition{2, 1}), ValidationError);
}

TEST_CASE("d_lambda and orbit dimension")
{
    CHECK(d_of(Partition{2, 1}) == 2);
    CHECK(d_of(Partition{3, 3}) == 9);
    CHECK(d_of(Partition{4, 1, 1}) == 9);
    for (int n = 1; n <= 10; ++n) {
        CHECK(d_of(Partition::row(n)) == 0);
        CHECK(d_of(Partition::column(n)) == n * (n - 1) / 2);
        for (auto const & p : enumerate_partitions(n)) {
            CHECK(d_of(p) == d_by_pairs(p));
            CHECK(orbit_dimension(p, 2) == 2 * 4 * d_of(p));
        }
    }
}

TEST_CASE("d is injective for n <= 5 and not for n = 6")
{
    for (int n = 1; n <= 6; ++n) {
        std::set<std::int64_t> seen;
        for (auto const & p : enumerate_partitions(n))
            seen.insert(d_of(p));
        if (n <= 5)
            CHECK(seen.size() == enumerate_partitions(n).size());
        else
            CHECK(seen.size() == enumerate_partitions(n).size() - 2);
    }
}

TEST_CASE("compositions")
{
    CHECK(sort_to_partition(Composition({1, 3, 2})) == Partition{3, 2, 1});
    CHECK(sort_to_partition(Composition({2, 2})) == Partition{2, 2});
    CHECK(sort_to_partition(Composition({1, 1, 4})) == Partition{4, 1, 1});
    CHECK(composition_from_subset(std::vector<int>{}, 4) == Composition({4}));
    CHECK(composition_from_subset(std::vector<int>{1, 2, 3}, 4) == Composition({1, 1, 1, 1}));
    CHECK(composition_from_subset(std::vector<int>{2, 3}, 5) == Composition({2, 1, 2}));
    CHECK(subset_from_composition(Composition({2, 1, 2})) == std::vector<int>{2, 3});
    CHECK_THROWS_AS(composition_from_subset(std::vector<int>{5}, 5), ValidationError);
    CHECK_THROWS_AS(Composition({0, 2}), ValidationError);
}

TEST_CASE("induce and scale")
{
    std::vector<Partition> a{Partition{2, 1}, Partition{2}};
    CHECK(induce_partition(a) == Partition{2, 2, 1});
    std::vector<Partition> b{Partition{1}, Partition{1}};
    CHECK(induce_partition(b) == Partition{1, 1});
    std::vector<Partition> c{Partition{3}, Partition{2, 2}};
    CHECK(induce_partition(c) == Partition{3, 2, 2});
    CHECK(scale_partition(Partition{2, 1}, 3) == Partition{6, 3});
    CHECK(scale_partition(Partition{1, 1}, 2) == Partition{2, 2});
    CHECK(scale_partition(Partition{3, 1}, 1) == Partition{3, 1});
}

TEST_CASE("minimal elements")
{
    std::vector<Partition> s{Partition{2}, Partition{1, 1}};
    CHECK(minimal_elements(s) == std::vector<Partition>{Partition{1, 1}});
    std::vector<Partition> t{Partition{3, 3}, Partition{4, 1, 1}};
    CHECK(minimal_elements(t).size() == 2);
    std::vector<Partition> u{Partition{2, 1}};
    CHECK(minimal_elements(u) == u);
    CHECK(minimal_elements(std::vector<Partition>{}).empty());
}

TEST_CASE("order properties hold exhaustively for n <= 10")
{
    for (int n = 1; n <= 10; ++n) {
        auto ps = enumerate_partitions(n);
        for (auto const & a : ps) {
            CHECK(dominance_leq(a, a));
            for (auto const & b : ps) {
                bool ab = dominance_leq(a, b);
                if (ab && dominance_leq(b, a))
                    CHECK(a == b);
                CHECK(ab == dominance_leq(dual(b), dual(a)));
                if (ab && !(a == b))
                    CHECK(d_of(a) > d_of(b));
            }
        }
        for (auto const & a : ps)
            for (auto const & b : ps) {
                if (!dominance_leq(a, b))
                    continue;
                for (auto const & c : ps)
                    if (dominance_leq(b, c))
                        CHECK(dominance_leq(a, c));
            }
    }
}
