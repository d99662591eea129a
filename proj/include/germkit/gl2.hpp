#ifndef GERMKIT_GL2_HPP
#define GERMKIT_GL2_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "germkit/cosets.hpp"
#include "germkit/germ.hpp"

namespace germkit::gl2 {

enum class Kind {
    FiniteDim,
    PrincipalSeries,
    SteinbergTwist,
    /* cuspidal subrepresentation of a reducible Steinberg, char R = ℓ | q^d+1 */
    CuspidalSteinberg,
    SpehPair,
    EssSquareIntegrablePair,
    /* minimal irreducible cuspidal of GL_2(F), d = 1 */
    SupercuspidalGLn2F,
    /* irreducible supersingular mod-p representation of GL_2(Q_p) */
    ModPSupersingular,
};

/* A class of representations of GL_2(D) in the catalog, with the
 * parameters needed for its (a, b) pair. Built through the named
 * constructors, which validate.
 */
class RepClass {
  public:
    static RepClass finite_dim(mpz_class dim, std::int64_t q, int d);
    static RepClass principal_series(mpz_class dim_sigma, std::int64_t q, int d);
    static RepClass steinberg_twist(std::int64_t q, int d);
    static RepClass cuspidal_steinberg(std::int64_t q, int d);
    /* Z(Δ_{ρ,2}) and L(Δ_{ρ,2}); dim_pi2 is the dimension of the
     * transfer π_{ρ,2} to D_{2d}^*. b is unknown unless supplied. */
    static RepClass speh_pair(mpz_class dim_pi2, std::int64_t q, int d,
                              std::optional<mpz_class> b = std::nullopt);
    static RepClass ess_square_integrable_pair(mpz_class dim_pi2, std::int64_t q, int d,
                                               std::optional<mpz_class> b = std::nullopt);
    /* level given in halves: level_halves = 2ℓ >= 1 */
    static RepClass supercuspidal(int level_halves, std::int64_t q);
    static RepClass modp_supersingular(bool twist_of_pi0, std::int64_t p);

    Kind kind() const { return kind_; }
    std::int64_t q() const { return q_; }
    int d() const { return d_; }
    mpz_class const & dim() const { return dim_; }
    std::optional<mpz_class> const & b() const { return b_; }
    int level_halves() const { return level_halves_; }
    bool twist_of_pi0() const { return twist_of_pi0_; }

    std::string name() const;

  private:
    RepClass(Kind k, std::int64_t q, int d)
        : kind_(k)
        , q_(q)
        , d_(d)
    {}
    Kind kind_;
    std::int64_t q_;
    int d_;
    mpz_class dim_ = 0;
    std::optional<mpz_class> b_;
    int level_halves_ = 0;
    bool twist_of_pi0_ = false;
};

/* Z(Δ_{ρ,2}) and L(Δ_{ρ,2}) with a concrete split b_Z + b_L = dim σ,
 * both parts >= 1. */
std::pair<RepClass, RepClass> rho2_pair(mpz_class dim_pi2, mpz_class dim_sigma, mpz_class b_speh,
                                        std::int64_t q, int d);

struct AB {
    mpz_class a;
    mpz_class b;
    friend bool operator==(AB const &, AB const &) = default;
};

/* (a_π, b_π). Throws ValidationError for ModPSupersingular and for a
 * pair class whose b was never supplied. */
AB ab_coefficients(RepClass const & rep);

enum class ChainMember { IHalf, Kchain, Ichain };

char const * chain_member_name(ChainMember m);
ChainMember parse_chain_member(std::string const & s);

/* the standard family whose depth-j member is the chain group */
Family chain_family(ChainMember m);

/* a + 2b t^j, a + (t+1) b t^j, a + 2t b t^j with t = q^d; no validity check */
mpz_class chain_formula(AB const & ab, ChainMember member, int j, std::int64_t q, int d);

/* dimension of the fixed vectors of rep under the chain group at depth
 * j >= 0. A negative formula value means j is below the class's
 * validity threshold and raises ValidationError. */
mpz_class dim_invariants(RepClass const & rep, ChainMember member, int j);

/* IHalf: -2 + 4 p^j;  Kchain: a' + 2(p+1) p^j with a' = -3 for twists
 * of π_0 and -4 otherwise. p must be an odd prime. */
mpz_class modp_supersingular_dims(bool twist_of_pi0, ChainMember member, int j, std::int64_t p);

/* {(2): a, (1,1): b}; rejects ModPSupersingular */
CoefficientMap to_coefficient_map(RepClass const & rep);

/* one representative of each cataloged class at the given (q, d) */
std::vector<RepClass> catalog(std::int64_t q, int d);

} // namespace germkit::gl2

#endif
