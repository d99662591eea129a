#include "germkit/cosets.hpp"

#include <charconv>

#include "germkit/errors.hpp"

namespace germkit {

std::string_view family_name(Family f)
{
    switch (f) {
    case Family::VertexMax: return "VertexMax";
    case Family::VertexCongruence: return "VertexCongruence";
    case Family::Iwahori: return "Iwahori";
    case Family::ProPIwahoriHalf: return "ProPIwahoriHalf";
    case Family::IwahoriCongruence: return "IwahoriCongruence";
    }
    return "?";
}

std::string_view family_short_name(Family f)
{
    switch (f) {
    case Family::VertexMax: return "K0";
    case Family::VertexCongruence: return "K";
    case Family::Iwahori: return "I0";
    case Family::ProPIwahoriHalf: return "IHalf";
    case Family::IwahoriCongruence: return "I";
    }
    return "?";
}

Family parse_family(std::string_view s)
{
    for (Family f : all_families)
        if (s == family_name(f) || s == family_short_name(f))
            return f;
    throw ValidationError("unknown subgroup family '" + std::string(s)
                          + "' (expected K0, K, I0, IHalf, I or the full family name)");
}

bool is_pro_p(Family f) { return f != Family::VertexMax && f != Family::Iwahori; }

bool is_prime(std::int64_t v)
{
    if (v < 2)
        return false;
    for (std::int64_t p = 2; p * p <= v; ++p)
        if (v % p == 0)
            return false;
    return true;
}

bool is_prime_power(std::int64_t v)
{
    if (v < 2)
        return false;
    std::int64_t p = 2;
    while (v % p != 0)
        ++p;
    while (v % p == 0)
        v /= p;
    return v == 1;
}

SubgroupSpec SubgroupSpec::make(Family family, int depth, std::int64_t q, int d)
{
    detail::require(depth >= 0, "depth j must be >= 0");
    detail::require(is_prime_power(q), "q must be a prime power >= 2, got " + std::to_string(q));
    detail::require(d >= 1, "reduced degree d must be >= 1");
    detail::require(is_pro_p(family) || depth == 0,
                    std::string(family_name(family)) + " is a parahoric and only exists at depth 0");
    return SubgroupSpec{family, depth, q, d};
}

mpz_class SubgroupSpec::t() const
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(d));
    return r;
}

QPoly base_count(Partition const & lambda, Family family)
{
    switch (family) {
    case Family::VertexMax:
        return QPoly::constant(1);
    case Family::VertexCongruence:
        return q_multinomial(lambda);
    case Family::Iwahori:
    case Family::ProPIwahoriHalf:
        return QPoly::constant(multinomial(lambda));
    case Family::IwahoriCongruence:
        /* generalizes |B\G/I_1| = 2 q^d of GL_2; only n = 2 is established */
        return QPoly::monomial(multinomial(lambda), static_cast<unsigned>(d_of(lambda)));
    }
    throw ValidationError("unsupported subgroup family");
}

BaseCountFn standard_base_counts(Family family)
{
    return [family](Partition const & lambda) { return base_count(lambda, family); };
}

mpz_class depth_scale(Partition const & lambda, mpz_class const & t, int j)
{
    detail::require(j >= 0, "depth j must be >= 0");
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(d_of(lambda) * j));
    return r;
}

mpz_class count_at_depth(Partition const & lambda, SubgroupSpec const & spec)
{
    auto checked = SubgroupSpec::make(spec.family, spec.depth, spec.q, spec.d);
    mpz_class t = checked.t();
    return base_count(lambda, checked.family).eval(t) * depth_scale(lambda, t, checked.depth);
}

mpz_class count_at_depth(Partition const & lambda, BaseCountFn const & base, std::int64_t q,
                         int d, int j)
{
    detail::require(j >= 0, "depth j must be >= 0");
    detail::require(is_prime_power(q), "q must be a prime power >= 2");
    detail::require(d >= 1, "reduced degree d must be >= 1");
    mpz_class t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(d));
    return base(lambda).eval(t) * depth_scale(lambda, t, j);
}

mpz_class parabolic_index(Partition const & lambda, std::int64_t q, int d)
{
    detail::require(q >= 2, "q must be >= 2");
    detail::require(d >= 1, "reduced degree d must be >= 1");
    std::int64_t n = lambda.n();
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(q),
                  static_cast<unsigned long>(d * (n * n - d_of(lambda))));
    return r;
}

/* positions: 0 K_0, 1 I_0, then for j >= 0
 *   2+3j I_{j+1/2},  3+3j K_{j+1},  4+3j I_{j+1}
 */
Gl2ChainGroup Gl2ChainGroup::at(int position)
{
    detail::require(position >= 0, "chain position must be >= 0");
    return Gl2ChainGroup(position);
}

std::string Gl2ChainGroup::name() const
{
    if (pos_ == 0)
        return "K0";
    if (pos_ == 1)
        return "I0";
    int j = (pos_ - 2) / 3;
    switch ((pos_ - 2) % 3) {
    case 0: return "I" + std::to_string(2 * j + 1) + "/2";
    case 1: return "K" + std::to_string(j + 1);
    default: return "I" + std::to_string(j + 1);
    }
}

Gl2ChainGroup Gl2ChainGroup::parse(std::string_view name)
{
    auto bad = [&] {
        return ValidationError("unrecognized GL_2 chain member '" + std::string(name)
                               + "' (expected K<j>, I<j> or I<2j+1>/2)");
    };
    if (name.size() < 2 || (name[0] != 'K' && name[0] != 'I'))
        throw bad();
    char kind = name[0];
    std::string_view rest = name.substr(1);
    bool half = false;
    if (rest.size() > 2 && rest.substr(rest.size() - 2) == "/2") {
        half = true;
        rest.remove_suffix(2);
    }
    int v = -1;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
    if (ec != std::errc() || ptr != rest.data() + rest.size() || v < 0)
        throw bad();
    if (half) {
        if (kind != 'I' || v % 2 == 0)
            throw bad();
        return Gl2ChainGroup(2 + 3 * (v / 2));
    }
    if (kind == 'K')
        return Gl2ChainGroup(v == 0 ? 0 : 3 + 3 * (v - 1));
    return Gl2ChainGroup(v == 0 ? 1 : 4 + 3 * (v - 1));
}

QPoly gl2_chain_index(Gl2ChainGroup from, Gl2ChainGroup to)
{
    if (to.position() != from.position() + 1)
        throw ValidationError("chain index is tabulated for adjacent members only, got "
                              + from.name() + " and " + to.name());
    int p = from.position();
    if (p == 0)
        return QPoly{1, 1};
    if (p == 1)
        return QPoly{1, -2, 1};
    switch ((p - 2) % 3) {
    case 0: /* I_{j+1/2} : K_{j+1} */
    case 1: /* K_{j+1} : I_{j+1} */
        return QPoly{0, 1};
    default: /* I_{j+1} : I_{j+3/2} */
        return QPoly{0, 0, 1};
    }
}

} // namespace germkit
