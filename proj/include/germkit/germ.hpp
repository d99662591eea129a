#ifndef GERMKIT_GERM_HPP
#define GERMKIT_GERM_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "germkit/cosets.hpp"
#include "germkit/partitions.hpp"
#include "germkit/qpoly.hpp"

namespace germkit {

/* A finitely supported integer function on the partitions of n: the
 * germ coefficients c_π of a finite-length representation, or of a
 * virtual one. Zero values are never stored; iteration follows
 * enumeration order.
 *
 * No character data is carried, so twisting a representation by a
 * character leaves its map unchanged by construction.
 */
class CoefficientMap {
  public:
    using Entries = std::map<Partition, mpz_class, EnumerationOrder>;

    explicit CoefficientMap(int n);
    CoefficientMap(int n, std::initializer_list<std::pair<Partition, long>> entries);

    /* indicator of λ, i.e. the map of ind_{P_λ}^G 1 */
    static CoefficientMap indicator(Partition const & lambda);

    int n() const { return n_; }
    Entries const & entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    /* value at λ, zero when absent; λ must be a partition of n */
    mpz_class at(Partition const & lambda) const;
    void set(Partition const & lambda, mpz_class v);
    void add_to(Partition const & lambda, mpz_class const & v);

    friend bool operator==(CoefficientMap const &, CoefficientMap const &) = default;

  private:
    void check(Partition const & lambda) const;
    int n_;
    Entries entries_;
};

CoefficientMap operator+(CoefficientMap const & a, CoefficientMap const & b);
CoefficientMap operator-(CoefficientMap const & c);
CoefficientMap operator-(CoefficientMap const & a, CoefficientMap const & b);
CoefficientMap scalar(CoefficientMap const & c, mpz_class const & k);

std::vector<Partition> support(CoefficientMap const & c);
std::vector<Partition> support_min(CoefficientMap const & c);

struct MinimalSupportEntry {
    Partition partition;
    mpz_class value;
    bool positive;
};

struct PositivityReport {
    std::vector<MinimalSupportEntry> entries;
    /* every minimal support value is positive; vacuous for the zero map */
    bool pass;
};

/* A map of an actual finite-length representation has a positive value
 * at every dominance-minimal element of its support.
 */
PositivityReport check_minimal_positivity(CoefficientMap const & c);

/* max d_λ over the support; throws ValidationError on the zero map */
std::int64_t gk_dimension(CoefficientMap const & c);

/* P(X) = sum_λ |P_λ\G/K| c(λ) X^{d_λ}, so that dim V^{K_j} = P(t^j)
 * with t = q^d for large j.
 *
 * formal_degree is d(π) = max d_λ over the support; actual_degree is the
 * degree of the computed polynomial. They differ exactly when the top
 * coefficient sum cancels.
 */
struct DimensionPolynomial {
    QPoly poly;
    std::int64_t formal_degree = -1;
    int actual_degree = -1;
    std::int64_t q = 0;
    int d = 1;
    std::optional<Family> family;

    bool top_cancels() const { return formal_degree != actual_degree; }
};

DimensionPolynomial dimension_polynomial(CoefficientMap const & c, Family family, std::int64_t q,
                                         int d);
/* same with caller-supplied base counts (polynomials in t = q^d) */
DimensionPolynomial dimension_polynomial(CoefficientMap const & c, BaseCountFn const & base,
                                         std::int64_t q, int d);

/* The asymptotic fixed-vector dimension: dimension_polynomial evaluated
 * at (q^d)^j. In general it is exact only for large j; the GL_2
 * catalog classes are exact for all j >= 0.
 */
mpz_class dim_fixed(CoefficientMap const & c, SubgroupSpec const & spec);

/* c(λ) = sum over tuples (λ_1..λ_r) inducing to λ of prod c_i(λ_i) */
CoefficientMap induce_maps(std::span<const CoefficientMap> maps);

/* c' on P(n) from c on P(dn): c'(λ) = (-1)^{dn-n} c(dλ); values of c off
 * dP(n) are dropped.
 */
CoefficientMap lj_transfer(CoefficientMap const & c, int n, int d);

/* section of lj_transfer: c'(dλ) = (-1)^{dn-n} c(λ), zero elsewhere */
CoefficientMap jl_transfer(CoefficientMap const & c, int d);

/* c_π((n)) = (-1)^{n-1} dim π' for π square integrable, π' its
 * Jacquet-Langlands transfer to the units of a division algebra
 */
mpz_class square_integrable_top_coeff(mpz_class const & dim_div_algebra_rep, int n);

/* Square matrix of multiplicities m(ξ_λ, π_{P_μ}); rows λ and columns μ
 * both indexed by enumerate_partitions(n).
 */
struct MultiplicityMatrix {
    int n;
    std::vector<Partition> index;
    std::vector<std::vector<mpz_class>> entries;

    mpz_class const & at(std::size_t row, std::size_t col) const { return entries[row][col]; }
};

/* throws InvariantViolation unless M[λ][λ] = 1 and M[λ][μ] = 0 whenever
 * λ does not dominate μ */
void check_unitriangular(MultiplicityMatrix const & m);

/* m(λ) = sum_μ c(μ) M[λ][μ] */
CoefficientMap forward_multiplicities(CoefficientMap const & c, MultiplicityMatrix const & m);

/* The unique c with m(λ) = sum_μ c(μ) M[λ][μ], found by upward induction
 * along dominance:
 *   c(λ) = m(λ) - sum_{μ < λ} c(μ) M[λ][μ]
 */
CoefficientMap solve_from_multiplicities(CoefficientMap const & m,
                                         MultiplicityMatrix const & matrix);

/* Restriction of c to its minimal support, read as dimensions of the
 * corresponding degenerate Whittaker spaces. Throws InvariantViolation
 * if some minimal value is not positive.
 */
std::map<Partition, mpz_class, EnumerationOrder> whittaker_dims(CoefficientMap const & c);

} // namespace germkit

#endif
