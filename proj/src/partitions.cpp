#include "germkit/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "germkit/errors.hpp"

namespace germkit {

namespace {

std::string join_parts(std::span<const int> parts)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            os << ',';
        os << parts[i];
    }
    os << ')';
    return os.str();
}

int checked_sum(std::span<const int> parts, char const * what)
{
    detail::require(!parts.empty(), std::string(what) + " must have at least one part");
    long long s = 0;
    for (int p : parts) {
        detail::require(p >= 1, std::string(what) + " parts must be positive");
        s += p;
    }
    detail::require(s <= 1 << 20, std::string(what) + " total is too large");
    return static_cast<int>(s);
}

} // namespace

Partition::Partition(std::vector<int> parts)
    : parts_(std::move(parts))
{
    n_ = checked_sum(parts_, "partition");
    detail::require(std::is_sorted(parts_.begin(), parts_.end(), std::greater<>()),
                    "partition parts must be weakly decreasing, got " + join_parts(parts_));
}

Partition Partition::row(int n)
{
    detail::require(n >= 1, "partition total must be >= 1");
    return Partition(std::vector<int>{n});
}

Partition Partition::column(int n)
{
    detail::require(n >= 1, "partition total must be >= 1");
    return Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
}

int Partition::prefix_sum(std::size_t k) const
{
    k = std::min(k, parts_.size());
    return std::accumulate(parts_.begin(), parts_.begin() + static_cast<std::ptrdiff_t>(k), 0);
}

std::string Partition::to_string() const { return join_parts(parts_); }

bool EnumerationOrder::operator()(Partition const & a, Partition const & b) const
{
    return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                        a.parts().begin(), a.parts().end());
}

Composition::Composition(std::vector<int> parts)
    : parts_(std::move(parts))
{
    n_ = checked_sum(parts_, "composition");
}

std::string Composition::to_string() const { return join_parts(parts_); }

std::vector<Partition> enumerate_partitions(int n)
{
    detail::require(n >= 1, "partition total must be >= 1");
    std::vector<Partition> out;
    std::vector<int> cur;
    /* largest parts first at every level gives lexicographically
     * decreasing output */
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

Partition dual(Partition const & lambda)
{
    std::vector<int> out(static_cast<std::size_t>(lambda[0]), 0);
    for (int part : lambda.parts())
        for (int i = 0; i < part; ++i)
            ++out[static_cast<std::size_t>(i)];
    return Partition(std::move(out));
}

Dominance dominance_compare(Partition const & mu, Partition const & lambda)
{
    detail::require(mu.n() == lambda.n(),
                    "dominance compares partitions of the same n, got " + mu.to_string() + " and "
                        + lambda.to_string());
    if (mu == lambda)
        return Dominance::Equal;
    bool le = true, ge = true;
    std::size_t len = std::max(mu.length(), lambda.length());
    for (std::size_t k = 1; k <= len; ++k) {
        int a = mu.prefix_sum(k), b = lambda.prefix_sum(k);
        le = le && a <= b;
        ge = ge && a >= b;
    }
    if (le)
        return Dominance::Less;
    if (ge)
        return Dominance::Greater;
    return Dominance::Incomparable;
}

bool dominance_leq(Partition const & mu, Partition const & lambda)
{
    auto c = dominance_compare(mu, lambda);
    return c == Dominance::Less || c == Dominance::Equal;
}

std::int64_t d_of(Partition const & lambda)
{
    /* sum_{i<j} λ_i λ_j = (n^2 - sum λ_i^2) / 2 */
    std::int64_t n = lambda.n(), sq = 0;
    for (int p : lambda.parts())
        sq += std::int64_t(p) * p;
    return (n * n - sq) / 2;
}

std::int64_t orbit_dimension(Partition const & lambda, int d)
{
    detail::require(d >= 1, "reduced degree d must be >= 1");
    return 2 * std::int64_t(d) * d * d_of(lambda);
}

Partition sort_to_partition(Composition const & c)
{
    std::vector<int> parts(c.parts().begin(), c.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Composition composition_from_subset(std::span<const int> subset, int n)
{
    detail::require(n >= 1, "composition total must be >= 1");
    std::vector<int> parts;
    int prev = 0;
    for (int i : subset) {
        detail::require(i > prev && i <= n - 1,
                        "subset must be strictly increasing inside [1, n-1]");
        parts.push_back(i - prev);
        prev = i;
    }
    parts.push_back(n - prev);
    return Composition(std::move(parts));
}

std::vector<int> subset_from_composition(Composition const & c)
{
    std::vector<int> out;
    int s = 0;
    auto parts = c.parts();
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        s += parts[i];
        out.push_back(s);
    }
    return out;
}

Partition induce_partition(std::span<const Partition> tuple)
{
    detail::require(!tuple.empty(), "induce_partition needs a nonempty tuple");
    std::vector<int> parts;
    for (auto const & p : tuple)
        parts.insert(parts.end(), p.parts().begin(), p.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition scale_partition(Partition const & lambda, int d)
{
    detail::require(d >= 1, "scale factor must be >= 1");
    std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
    for (int & p : parts)
        p *= d;
    return Partition(std::move(parts));
}

std::vector<Partition> minimal_elements(std::span<const Partition> s)
{
    std::vector<Partition> out;
    for (auto const & x : s) {
        bool minimal = true;
        for (auto const & y : s)
            if (dominance_compare(y, x) == Dominance::Less) {
                minimal = false;
                break;
            }
        if (minimal && std::find(out.begin(), out.end(), x) == out.end())
            out.push_back(x);
    }
    std::sort(out.begin(), out.end(), EnumerationOrder{});
    return out;
}

} // namespace germkit
