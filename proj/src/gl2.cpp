#include "germkit/gl2.hpp"

#include "germkit/errors.hpp"

namespace germkit::gl2 {

namespace {

void check_qd(std::int64_t q, int d)
{
    detail::require(is_prime_power(q), "q must be a prime power >= 2, got " + std::to_string(q));
    detail::require(d >= 1, "reduced degree d must be >= 1");
}

mpz_class pow_z(std::int64_t base, unsigned long e)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
    return r;
}

void check_pair_b(std::optional<mpz_class> const & b)
{
    detail::require(!b || *b >= 1, "the Whittaker dimension b of a pair factor must be >= 1");
}

} // namespace

RepClass RepClass::finite_dim(mpz_class dim, std::int64_t q, int d)
{
    check_qd(q, d);
    detail::require(dim >= 1, "dimension must be >= 1");
    RepClass r(Kind::FiniteDim, q, d);
    r.dim_ = std::move(dim);
    return r;
}

RepClass RepClass::principal_series(mpz_class dim_sigma, std::int64_t q, int d)
{
    check_qd(q, d);
    detail::require(dim_sigma >= 1, "dim sigma must be >= 1");
    RepClass r(Kind::PrincipalSeries, q, d);
    r.dim_ = std::move(dim_sigma);
    return r;
}

RepClass RepClass::steinberg_twist(std::int64_t q, int d)
{
    check_qd(q, d);
    return RepClass(Kind::SteinbergTwist, q, d);
}

RepClass RepClass::cuspidal_steinberg(std::int64_t q, int d)
{
    check_qd(q, d);
    return RepClass(Kind::CuspidalSteinberg, q, d);
}

RepClass RepClass::speh_pair(mpz_class dim_pi2, std::int64_t q, int d, std::optional<mpz_class> b)
{
    check_qd(q, d);
    detail::require(dim_pi2 >= 1, "dim pi_{rho,2} must be >= 1");
    check_pair_b(b);
    RepClass r(Kind::SpehPair, q, d);
    r.dim_ = std::move(dim_pi2);
    r.b_ = std::move(b);
    return r;
}

RepClass RepClass::ess_square_integrable_pair(mpz_class dim_pi2, std::int64_t q, int d,
                                              std::optional<mpz_class> b)
{
    RepClass r = speh_pair(std::move(dim_pi2), q, d, std::move(b));
    r.kind_ = Kind::EssSquareIntegrablePair;
    return r;
}

RepClass RepClass::supercuspidal(int level_halves, std::int64_t q)
{
    check_qd(q, 1);
    detail::require(level_halves >= 1, "supercuspidal level must be a half-integer >= 1/2");
    RepClass r(Kind::SupercuspidalGLn2F, q, 1);
    r.level_halves_ = level_halves;
    return r;
}

RepClass RepClass::modp_supersingular(bool twist_of_pi0, std::int64_t p)
{
    detail::require(is_prime(p) && p % 2 == 1,
                    "supersingular dimensions are known for p odd only, got p = " + std::to_string(p));
    RepClass r(Kind::ModPSupersingular, p, 1);
    r.twist_of_pi0_ = twist_of_pi0;
    return r;
}

std::string RepClass::name() const
{
    switch (kind_) {
    case Kind::FiniteDim: return "FiniteDim(" + dim_.get_str() + ")";
    case Kind::PrincipalSeries: return "PrincipalSeries(" + dim_.get_str() + ")";
    case Kind::SteinbergTwist: return "SteinbergTwist";
    case Kind::CuspidalSteinberg: return "CuspidalSteinberg";
    case Kind::SpehPair: return "SpehPair(" + dim_.get_str() + ")";
    case Kind::EssSquareIntegrablePair: return "EssSquareIntegrablePair(" + dim_.get_str() + ")";
    case Kind::SupercuspidalGLn2F:
        return "SupercuspidalGLn2F("
               + (level_halves_ % 2 == 0 ? std::to_string(level_halves_ / 2)
                                         : std::to_string(level_halves_) + "/2")
               + ")";
    case Kind::ModPSupersingular:
        return std::string("ModPSupersingular(") + (twist_of_pi0_ ? "twist of pi_0" : "other") + ")";
    }
    return "?";
}

std::pair<RepClass, RepClass> rho2_pair(mpz_class dim_pi2, mpz_class dim_sigma, mpz_class b_speh,
                                        std::int64_t q, int d)
{
    mpz_class b_l = dim_sigma - b_speh;
    detail::require(b_speh >= 1 && b_l >= 1,
                    "the split b_Z + b_L = dim sigma must have both parts >= 1");
    return {RepClass::speh_pair(dim_pi2, q, d, b_speh),
            RepClass::ess_square_integrable_pair(dim_pi2, q, d, b_l)};
}

AB ab_coefficients(RepClass const & rep)
{
    switch (rep.kind()) {
    case Kind::FiniteDim: return {rep.dim(), 0};
    case Kind::PrincipalSeries: return {0, rep.dim()};
    case Kind::SteinbergTwist: return {-1, 1};
    case Kind::CuspidalSteinberg: return {-2, 1};
    case Kind::SpehPair:
    case Kind::EssSquareIntegrablePair: {
        if (!rep.b())
            throw ValidationError(rep.name()
                                  + ": b is the undetermined Whittaker dimension of the factor; "
                                    "supply a split of dim sigma");
        mpz_class a = rep.kind() == Kind::SpehPair ? rep.dim() : mpz_class(-rep.dim());
        return {a, *rep.b()};
    }
    case Kind::SupercuspidalGLn2F: {
        /* a = -dim π_2 of the transfer to the quaternion algebra */
        int l2 = rep.level_halves();
        mpz_class a = l2 % 2 == 0 ? mpz_class(2 * pow_z(rep.q(), static_cast<unsigned long>(l2 / 2)))
                                  : mpz_class((rep.q() + 1) * pow_z(rep.q(), static_cast<unsigned long>(l2 / 2)));
        return {-a, 1};
    }
    case Kind::ModPSupersingular:
        throw ValidationError("mod-p supersingular classes have no germ pair; use modp_supersingular_dims");
    }
    throw ValidationError("unknown representation class");
}

char const * chain_member_name(ChainMember m)
{
    switch (m) {
    case ChainMember::IHalf: return "IHalf";
    case ChainMember::Kchain: return "Kchain";
    case ChainMember::Ichain: return "Ichain";
    }
    return "?";
}

ChainMember parse_chain_member(std::string const & s)
{
    if (s == "IHalf")
        return ChainMember::IHalf;
    if (s == "Kchain" || s == "K")
        return ChainMember::Kchain;
    if (s == "Ichain" || s == "I")
        return ChainMember::Ichain;
    throw ValidationError("unknown chain member '" + s + "' (expected IHalf, Kchain or Ichain)");
}

Family chain_family(ChainMember m)
{
    switch (m) {
    case ChainMember::IHalf: return Family::ProPIwahoriHalf;
    case ChainMember::Kchain: return Family::VertexCongruence;
    case ChainMember::Ichain: return Family::IwahoriCongruence;
    }
    throw ValidationError("unknown chain member");
}

mpz_class chain_formula(AB const & ab, ChainMember member, int j, std::int64_t q, int d)
{
    detail::require(j >= 0, "depth j must be >= 0");
    check_qd(q, d);
    mpz_class t = pow_z(q, static_cast<unsigned long>(d));
    mpz_class tj = pow_z(q, static_cast<unsigned long>(d) * static_cast<unsigned long>(j));
    switch (member) {
    case ChainMember::IHalf: return ab.a + 2 * ab.b * tj;
    case ChainMember::Kchain: return ab.a + (t + 1) * ab.b * tj;
    case ChainMember::Ichain: return ab.a + 2 * t * ab.b * tj;
    }
    throw ValidationError("unknown chain member");
}

mpz_class dim_invariants(RepClass const & rep, ChainMember member, int j)
{
    mpz_class v = rep.kind() == Kind::ModPSupersingular
                      ? modp_supersingular_dims(rep.twist_of_pi0(), member, j, rep.q())
                      : chain_formula(ab_coefficients(rep), member, j, rep.q(), rep.d());
    if (v < 0)
        throw ValidationError(rep.name() + ": formula gives " + v.get_str() + " at j = "
                              + std::to_string(j) + ", so j is below the validity threshold");
    return v;
}

mpz_class modp_supersingular_dims(bool twist_of_pi0, ChainMember member, int j, std::int64_t p)
{
    detail::require(is_prime(p) && p % 2 == 1,
                    "supersingular dimensions are known for p odd only, got p = " + std::to_string(p));
    detail::require(j >= 0, "depth j must be >= 0");
    mpz_class pj = pow_z(p, static_cast<unsigned long>(j));
    mpz_class const b = 2;
    switch (member) {
    case ChainMember::IHalf: return -2 + 2 * b * pj;
    case ChainMember::Kchain: return (twist_of_pi0 ? -3 : -4) + (p + 1) * b * pj;
    case ChainMember::Ichain: break;
    }
    throw ValidationError("no supersingular formula is known for the Ichain member");
}

CoefficientMap to_coefficient_map(RepClass const & rep)
{
    if (rep.kind() == Kind::ModPSupersingular)
        throw ValidationError("mod-p supersingular classes lie outside the germ expansion");
    AB ab = ab_coefficients(rep);
    CoefficientMap c(2);
    c.set(Partition{2}, ab.a);
    c.set(Partition{1, 1}, ab.b);
    return c;
}

std::vector<RepClass> catalog(std::int64_t q, int d)
{
    check_qd(q, d);
    std::vector<RepClass> out{
        RepClass::finite_dim(1, q, d),
        RepClass::principal_series(1, q, d),
        RepClass::steinberg_twist(q, d),
        RepClass::cuspidal_steinberg(q, d),
        RepClass::speh_pair(2, q, d),
        RepClass::ess_square_integrable_pair(2, q, d),
    };
    if (d == 1)
        for (int l2 = 1; l2 <= 4; ++l2)
            out.push_back(RepClass::supercuspidal(l2, q));
    if (d == 1 && is_prime(q) && q % 2 == 1) {
        out.push_back(RepClass::modp_supersingular(true, q));
        out.push_back(RepClass::modp_supersingular(false, q));
    }
    return out;
}

} // namespace germkit::gl2
