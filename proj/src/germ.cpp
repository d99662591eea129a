#include "germkit/germ.hpp"

#include <algorithm>

#include "germkit/errors.hpp"

namespace germkit {

CoefficientMap::CoefficientMap(int n)
    : n_(n)
{
    detail::require(n >= 1, "coefficient map needs n >= 1");
}

CoefficientMap::CoefficientMap(int n, std::initializer_list<std::pair<Partition, long>> entries)
    : CoefficientMap(n)
{
    for (auto const & [p, v] : entries)
        add_to(p, mpz_class(v));
}

CoefficientMap CoefficientMap::indicator(Partition const & lambda)
{
    CoefficientMap c(lambda.n());
    c.set(lambda, 1);
    return c;
}

void CoefficientMap::check(Partition const & lambda) const
{
    detail::require(lambda.n() == n_, "partition " + lambda.to_string() + " is not a partition of "
                                          + std::to_string(n_));
}

mpz_class CoefficientMap::at(Partition const & lambda) const
{
    check(lambda);
    auto it = entries_.find(lambda);
    return it == entries_.end() ? mpz_class(0) : it->second;
}

void CoefficientMap::set(Partition const & lambda, mpz_class v)
{
    check(lambda);
    if (v == 0)
        entries_.erase(lambda);
    else
        entries_.insert_or_assign(lambda, std::move(v));
}

void CoefficientMap::add_to(Partition const & lambda, mpz_class const & v)
{
    set(lambda, at(lambda) + v);
}

CoefficientMap operator+(CoefficientMap const & a, CoefficientMap const & b)
{
    detail::require(a.n() == b.n(), "cannot add coefficient maps over different n");
    CoefficientMap r = a;
    for (auto const & [p, v] : b.entries())
        r.add_to(p, v);
    return r;
}

CoefficientMap operator-(CoefficientMap const & c) { return scalar(c, -1); }

CoefficientMap operator-(CoefficientMap const & a, CoefficientMap const & b) { return a + (-b); }

CoefficientMap scalar(CoefficientMap const & c, mpz_class const & k)
{
    CoefficientMap r(c.n());
    for (auto const & [p, v] : c.entries())
        r.set(p, v * k);
    return r;
}

std::vector<Partition> support(CoefficientMap const & c)
{
    std::vector<Partition> out;
    for (auto const & [p, v] : c.entries())
        out.push_back(p);
    return out;
}

std::vector<Partition> support_min(CoefficientMap const & c)
{
    auto s = support(c);
    return minimal_elements(s);
}

PositivityReport check_minimal_positivity(CoefficientMap const & c)
{
    PositivityReport r{{}, true};
    for (auto const & p : support_min(c)) {
        mpz_class v = c.at(p);
        bool ok = v > 0;
        r.entries.push_back({p, v, ok});
        r.pass = r.pass && ok;
    }
    return r;
}

std::int64_t gk_dimension(CoefficientMap const & c)
{
    detail::require(!c.is_zero(), "Gelfand-Kirillov dimension is undefined for the zero map");
    std::int64_t m = 0;
    for (auto const & [p, v] : c.entries())
        m = std::max(m, d_of(p));
    return m;
}

DimensionPolynomial dimension_polynomial(CoefficientMap const & c, BaseCountFn const & base,
                                         std::int64_t q, int d)
{
    detail::require(is_prime_power(q), "q must be a prime power >= 2, got " + std::to_string(q));
    detail::require(d >= 1, "reduced degree d must be >= 1");
    detail::require(static_cast<bool>(base), "missing base counts");
    mpz_class t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(d));
    DimensionPolynomial r;
    for (auto const & [p, v] : c.entries()) {
        mpz_class count = base(p).eval(t);
        r.poly += QPoly::monomial(count * v, static_cast<unsigned>(d_of(p)));
    }
    r.formal_degree = c.is_zero() ? -1 : gk_dimension(c);
    r.actual_degree = r.poly.degree();
    r.q = q;
    r.d = d;
    return r;
}

DimensionPolynomial dimension_polynomial(CoefficientMap const & c, Family family, std::int64_t q,
                                         int d)
{
    auto r = dimension_polynomial(c, standard_base_counts(family), q, d);
    r.family = family;
    return r;
}

mpz_class dim_fixed(CoefficientMap const & c, SubgroupSpec const & spec)
{
    auto s = SubgroupSpec::make(spec.family, spec.depth, spec.q, spec.d);
    auto p = dimension_polynomial(c, s.family, s.q, s.d);
    mpz_class x;
    mpz_pow_ui(x.get_mpz_t(), s.t().get_mpz_t(), static_cast<unsigned long>(s.depth));
    return p.poly.eval(x);
}

CoefficientMap induce_maps(std::span<const CoefficientMap> maps)
{
    detail::require(!maps.empty(), "induce_maps needs at least one map");
    int total = 0;
    for (auto const & m : maps)
        total += m.n();
    CoefficientMap out(total);

    std::vector<std::vector<std::pair<Partition, mpz_class>>> supports;
    for (auto const & m : maps) {
        if (m.is_zero())
            return out;
        supports.emplace_back(m.entries().begin(), m.entries().end());
    }
    /* odometer over the product of supports */
    std::vector<std::size_t> idx(maps.size(), 0);
    std::vector<Partition> tuple;
    for (;;) {
        tuple.clear();
        mpz_class prod = 1;
        for (std::size_t i = 0; i < maps.size(); ++i) {
            tuple.push_back(supports[i][idx[i]].first);
            prod *= supports[i][idx[i]].second;
        }
        out.add_to(induce_partition(tuple), prod);
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == supports[k].size())
            idx[k++] = 0;
        if (k == idx.size())
            break;
    }
    return out;
}

namespace {
int transfer_sign(int n, int d) { return (d * n - n) % 2 == 0 ? 1 : -1; }
} // namespace

CoefficientMap lj_transfer(CoefficientMap const & c, int n, int d)
{
    detail::require(n >= 1 && d >= 1, "lj_transfer needs n >= 1 and d >= 1");
    detail::require(c.n() == d * n, "lj_transfer input must live on partitions of d*n = "
                                        + std::to_string(d * n));
    CoefficientMap out(n);
    int sign = transfer_sign(n, d);
    for (auto const & [p, v] : c.entries()) {
        bool divisible = std::all_of(p.parts().begin(), p.parts().end(),
                                     [d](int part) { return part % d == 0; });
        if (!divisible)
            continue;
        std::vector<int> parts(p.parts().begin(), p.parts().end());
        for (int & x : parts)
            x /= d;
        out.set(Partition(std::move(parts)), v * sign);
    }
    return out;
}

CoefficientMap jl_transfer(CoefficientMap const & c, int d)
{
    detail::require(d >= 1, "jl_transfer needs d >= 1");
    CoefficientMap out(c.n() * d);
    int sign = transfer_sign(c.n(), d);
    for (auto const & [p, v] : c.entries())
        out.set(scale_partition(p, d), v * sign);
    return out;
}

mpz_class square_integrable_top_coeff(mpz_class const & dim_div_algebra_rep, int n)
{
    detail::require(dim_div_algebra_rep >= 1, "representation dimension must be >= 1");
    detail::require(n >= 1, "n must be >= 1");
    return n % 2 == 1 ? dim_div_algebra_rep : mpz_class(-dim_div_algebra_rep);
}

void check_unitriangular(MultiplicityMatrix const & m)
{
    std::size_t k = m.index.size();
    if (m.entries.size() != k)
        throw ValidationError("multiplicity matrix has the wrong number of rows");
    for (std::size_t i = 0; i < k; ++i) {
        if (m.entries[i].size() != k)
            throw ValidationError("multiplicity matrix row has the wrong length");
        for (std::size_t j = 0; j < k; ++j) {
            mpz_class const & v = m.entries[i][j];
            if (i == j && v != 1)
                throw InvariantViolation("multiplicity matrix diagonal entry at "
                                         + m.index[i].to_string() + " must be 1");
            if (i != j && v != 0 && !dominance_leq(m.index[j], m.index[i]))
                throw InvariantViolation("multiplicity matrix entry at row " + m.index[i].to_string()
                                         + ", column " + m.index[j].to_string()
                                         + " must vanish: the row does not dominate the column");
        }
    }
}

CoefficientMap forward_multiplicities(CoefficientMap const & c, MultiplicityMatrix const & m)
{
    detail::require(c.n() == m.n, "coefficient map and multiplicity matrix disagree on n");
    CoefficientMap out(m.n);
    for (std::size_t i = 0; i < m.index.size(); ++i) {
        mpz_class s = 0;
        for (std::size_t j = 0; j < m.index.size(); ++j)
            s += c.at(m.index[j]) * m.at(i, j);
        out.set(m.index[i], s);
    }
    return out;
}

CoefficientMap solve_from_multiplicities(CoefficientMap const & mult,
                                         MultiplicityMatrix const & matrix)
{
    detail::require(mult.n() == matrix.n, "multiplicities and matrix disagree on n");
    check_unitriangular(matrix);
    CoefficientMap c(matrix.n);
    /* enumeration order is a linear extension of reverse dominance, so
     * walking it backwards visits every μ < λ before λ */
    for (std::size_t i = matrix.index.size(); i-- > 0;) {
        Partition const & lambda = matrix.index[i];
        mpz_class v = mult.at(lambda);
        for (std::size_t j = i + 1; j < matrix.index.size(); ++j)
            v -= c.at(matrix.index[j]) * matrix.at(i, j);
        c.set(lambda, v);
    }
    return c;
}

std::map<Partition, mpz_class, EnumerationOrder> whittaker_dims(CoefficientMap const & c)
{
    auto report = check_minimal_positivity(c);
    std::map<Partition, mpz_class, EnumerationOrder> out;
    for (auto const & e : report.entries) {
        if (!e.positive)
            throw InvariantViolation("minimal support value must be positive (at "
                                     + e.partition.to_string() + " the value is "
                                     + e.value.get_str() + ")");
        out.emplace(e.partition, e.value);
    }
    return out;
}

} // namespace germkit
