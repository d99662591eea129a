#ifndef GERMKIT_QPOLY_HPP
#define GERMKIT_QPOLY_HPP

#include <gmpxx.h>

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "germkit/partitions.hpp"

namespace germkit {

/* Univariate polynomial with arbitrary-precision integer coefficients,
 * constant term first. Trailing zeros are never stored, so the zero
 * polynomial has no coefficients and structural equality is equality of
 * polynomials. The variable name is only a matter of printing.
 */
class QPoly {
  public:
    QPoly() = default;
    explicit QPoly(std::vector<mpz_class> coeffs);
    QPoly(std::initializer_list<long> coeffs);

    static QPoly constant(mpz_class c);
    /* c * X^k */
    static QPoly monomial(mpz_class c, unsigned k);

    bool is_zero() const { return c_.empty(); }
    /* -1 for the zero polynomial */
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::span<const mpz_class> coeffs() const { return c_; }
    /* coefficient of X^k, zero beyond the degree */
    mpz_class coeff(unsigned k) const;
    mpz_class leading() const;

    QPoly & operator+=(QPoly const & o);
    QPoly & operator-=(QPoly const & o);
    QPoly & operator*=(QPoly const & o);
    QPoly & operator*=(mpz_class const & k);

    friend QPoly operator+(QPoly a, QPoly const & b) { return a += b; }
    friend QPoly operator-(QPoly a, QPoly const & b) { return a -= b; }
    friend QPoly operator*(QPoly a, QPoly const & b) { return a *= b; }
    friend QPoly operator*(QPoly a, mpz_class const & k) { return a *= k; }
    friend QPoly operator*(mpz_class const & k, QPoly a) { return a *= k; }
    QPoly operator-() const;

    friend bool operator==(QPoly const &, QPoly const &) = default;

    /* Horner evaluation */
    mpz_class eval(mpz_class const & v) const;

    /* p(c X) */
    QPoly substitute_scaled(mpz_class const & c) const;

    /* "q^2+2q+1": descending, compact */
    std::string to_string(char const * var = "q") const;
    /* "-1 + 4X": ascending, spaced */
    std::string to_string_ascending(char const * var = "X") const;

  private:
    void trim();
    std::vector<mpz_class> c_;
};

struct QPolyDivision {
    QPoly quotient;
    QPoly remainder;
};

/* Euclidean division by a divisor whose leading coefficient divides
 * every intermediate leading term; throws InvariantViolation otherwise
 * and ValidationError on a zero divisor.
 */
QPolyDivision divmod(QPoly const & num, QPoly const & den);

/* num / den, throwing InvariantViolation if the remainder is nonzero */
QPoly exact_quotient(QPoly const & num, QPoly const & den);

mpz_class eval_at(QPoly const & p, mpz_class const & v);

/* [m]_q = 1 + q + ... + q^{m-1}, m >= 1 */
QPoly q_int(int m);

/* [n]_q! = [1]_q [2]_q ... [n]_q, n >= 1 */
QPoly q_factorial(int n);

/* [n]_q! / prod [λ_i]_q!, by exact division */
QPoly q_multinomial(Partition const & lambda);

/* ordinary multinomial n! / prod λ_i! */
mpz_class multinomial(Partition const & lambda);

} // namespace germkit

#endif
