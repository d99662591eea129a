#ifndef GERMKIT_PARTITIONS_HPP
#define GERMKIT_PARTITIONS_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace germkit {

/* An integer partition of n >= 1, stored as its weakly decreasing list
 * of positive parts. Construction validates; a Partition object is
 * always canonical, so equality of objects is equality of partitions.
 */
class Partition {
  public:
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts))
    {}

    /* (n) and (1,...,1) */
    static Partition row(int n);
    static Partition column(int n);

    int n() const { return n_; }
    std::size_t length() const { return parts_.size(); }
    std::span<const int> parts() const { return parts_; }
    int operator[](std::size_t i) const { return parts_[i]; }

    /* sum of the first k parts, saturating at n for k beyond the length */
    int prefix_sum(std::size_t k) const;

    std::string to_string() const;

    friend bool operator==(Partition const &, Partition const &) = default;

  private:
    std::vector<int> parts_;
    int n_ = 0;
};

/* Orders partitions of the same n lexicographically decreasing, which is
 * the enumeration order; (n) comes first, (1,...,1) last. Use as the
 * comparator of ordered containers keyed by partitions so that every
 * emitted collection follows enumeration order.
 */
struct EnumerationOrder {
    bool operator()(Partition const & a, Partition const & b) const;
};

/* An ordered sequence of positive integers. Kept distinct from
 * Partition: a composition λ and its sorted partition λ† are different
 * objects.
 */
class Composition {
  public:
    explicit Composition(std::vector<int> parts);
    Composition(std::initializer_list<int> parts)
        : Composition(std::vector<int>(parts))
    {}

    int n() const { return n_; }
    std::span<const int> parts() const { return parts_; }
    std::string to_string() const;

    friend bool operator==(Composition const &, Composition const &) = default;

  private:
    std::vector<int> parts_;
    int n_ = 0;
};

enum class Dominance { Less, Equal, Greater, Incomparable };

/* All partitions of n, lexicographically decreasing. Throws on n < 1. */
std::vector<Partition> enumerate_partitions(int n);

Partition dual(Partition const & lambda);

/* Three-valued comparison of mu against lambda in the dominance order.
 * Throws ValidationError when the totals differ.
 */
Dominance dominance_compare(Partition const & mu, Partition const & lambda);

/* mu <= lambda in the dominance order */
bool dominance_leq(Partition const & mu, Partition const & lambda);

/* d_λ = sum over i<j of λ_i λ_j, the dimension of the unipotent radical
 * of the standard parabolic of type λ.
 */
std::int64_t d_of(Partition const & lambda);

/* F-dimension of the nilpotent orbit of type λ in M_n(D), D of reduced
 * degree d: 2 d^2 d_λ.
 */
std::int64_t orbit_dimension(Partition const & lambda, int d);

Partition sort_to_partition(Composition const & c);

/* For 1 <= i_1 < ... < i_r <= n-1 returns (i_1, i_2 - i_1, ..., n - i_r). */
Composition composition_from_subset(std::span<const int> subset, int n);

/* inverse of composition_from_subset: the partial sums except the last */
std::vector<int> subset_from_composition(Composition const & c);

/* Gathers the parts of every partition in the tuple and sorts them. */
Partition induce_partition(std::span<const Partition> tuple);

Partition scale_partition(Partition const & lambda, int d);

/* Elements of s with no strictly dominated element in s, in enumeration
 * order. All elements must share the same n.
 */
std::vector<Partition> minimal_elements(std::span<const Partition> s);

} // namespace germkit

#endif
