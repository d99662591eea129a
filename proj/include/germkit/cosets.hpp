#ifndef GERMKIT_COSETS_HPP
#define GERMKIT_COSETS_HPP

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "germkit/partitions.hpp"
#include "germkit/qpoly.hpp"

namespace germkit {

/* The standard Moy-Prasad families of GL_n(D), up to conjugacy.
 *
 *   VertexMax          K_0 = GL_n(O_D)                      depth 0 only
 *   VertexCongruence   K_{1+j} = 1 + M_n(P_D^{1+j})
 *   Iwahori            I_0                                  depth 0 only
 *   ProPIwahoriHalf    I_{j+1/2}
 *   IwahoriCongruence  I_{1+j}
 *
 * Depth j counts steps of 1/d in the filtration index, so going from j
 * to j+1 multiplies |P_λ\G/K| by (q^d)^{d_λ}.
 */
enum class Family { VertexMax, VertexCongruence, Iwahori, ProPIwahoriHalf, IwahoriCongruence };

inline constexpr Family all_families[] = {Family::VertexMax, Family::VertexCongruence,
                                          Family::Iwahori, Family::ProPIwahoriHalf,
                                          Family::IwahoriCongruence};

/* full enum-style name, e.g. "VertexCongruence" */
std::string_view family_name(Family f);
/* short CLI name: K0, K, I0, IHalf, I */
std::string_view family_short_name(Family f);
/* accepts either spelling, case-sensitive; throws ValidationError */
Family parse_family(std::string_view s);

/* pro-p families admit every depth; the two parahorics only depth 0 */
bool is_pro_p(Family f);

bool is_prime(std::int64_t v);
bool is_prime_power(std::int64_t v);

struct SubgroupSpec {
    Family family;
    int depth = 0;
    std::int64_t q = 2;
    int d = 1;

    /* validates j >= 0, q a prime power, d >= 1, depth 0 for parahorics */
    static SubgroupSpec make(Family family, int depth, std::int64_t q, int d);

    /* t = q^d, the residue field size of D */
    mpz_class t() const;
};

/* |P_λ\G/K| at depth 0 as a polynomial in t = q^d. */
QPoly base_count(Partition const & lambda, Family family);

/* Base counts supplied by the caller for a subgroup class outside the
 * standard families. The scaling law is applied to these unchanged.
 */
using BaseCountFn = std::function<QPoly(Partition const &)>;

BaseCountFn standard_base_counts(Family family);

/* (q^d)^{d_λ j} */
mpz_class depth_scale(Partition const & lambda, mpz_class const & t, int j);

/* base_count evaluated at t = q^d times (q^d)^{d_λ j} */
mpz_class count_at_depth(Partition const & lambda, SubgroupSpec const & spec);
mpz_class count_at_depth(Partition const & lambda, BaseCountFn const & base,
                         std::int64_t q, int d, int j);

/* [G_{x,r} ∩ P_λ : G_{x,r+1/d} ∩ P_λ] = q^{d(n^2 - d_λ)} */
mpz_class parabolic_index(Partition const & lambda, std::int64_t q, int d);

/* A member of the GL_2(D) chain
 *   K_0 ⊃ I_0 ⊃ I_{1/2} ⊃ K_1 ⊃ I_1 ⊃ I_{3/2} ⊃ K_2 ⊃ ...
 * identified by its position in that chain.
 */
class Gl2ChainGroup {
  public:
    static Gl2ChainGroup at(int position);
    /* "K0", "I0", "I1/2", "K1", "I1", "I3/2", ... */
    static Gl2ChainGroup parse(std::string_view name);

    int position() const { return pos_; }
    std::string name() const;

    friend bool operator==(Gl2ChainGroup const &, Gl2ChainGroup const &) = default;

  private:
    explicit Gl2ChainGroup(int pos)
        : pos_(pos)
    {}
    int pos_;
};

/* [from : to] as a polynomial in t = q^d; `to` must follow `from`
 * directly in the chain.
 */
QPoly gl2_chain_index(Gl2ChainGroup from, Gl2ChainGroup to);

} // namespace germkit

#endif
