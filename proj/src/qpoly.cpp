#include "germkit/qpoly.hpp"

#include <sstream>

#include "germkit/errors.hpp"

namespace germkit {

QPoly::QPoly(std::vector<mpz_class> coeffs)
    : c_(std::move(coeffs))
{
    trim();
}

QPoly::QPoly(std::initializer_list<long> coeffs)
{
    c_.reserve(coeffs.size());
    for (long c : coeffs)
        c_.emplace_back(c);
    trim();
}

QPoly QPoly::constant(mpz_class c) { return QPoly(std::vector<mpz_class>{std::move(c)}); }

QPoly QPoly::monomial(mpz_class c, unsigned k)
{
    std::vector<mpz_class> v(k + 1);
    v[k] = std::move(c);
    return QPoly(std::move(v));
}

void QPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

mpz_class QPoly::coeff(unsigned k) const { return k < c_.size() ? c_[k] : mpz_class(0); }

mpz_class QPoly::leading() const { return c_.empty() ? mpz_class(0) : c_.back(); }

QPoly & QPoly::operator+=(QPoly const & o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

QPoly & QPoly::operator-=(QPoly const & o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

QPoly & QPoly::operator*=(QPoly const & o)
{
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<mpz_class> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    c_ = std::move(r);
    trim();
    return *this;
}

QPoly & QPoly::operator*=(mpz_class const & k)
{
    for (auto & c : c_)
        c *= k;
    trim();
    return *this;
}

QPoly QPoly::operator-() const
{
    QPoly r = *this;
    for (auto & c : r.c_)
        c = -c;
    return r;
}

mpz_class QPoly::eval(mpz_class const & v) const
{
    mpz_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * v + *it;
    return acc;
}

QPoly QPoly::substitute_scaled(mpz_class const & c) const
{
    QPoly r = *this;
    mpz_class pw = 1;
    for (auto & coef : r.c_) {
        coef *= pw;
        pw *= c;
    }
    r.trim();
    return r;
}

namespace {

/* |c| X^k with the coefficient omitted when it is 1 and k > 0 */
std::string term(mpz_class const & abs_c, std::size_t k, char const * var)
{
    std::string s;
    if (k == 0 || abs_c != 1)
        s = abs_c.get_str();
    if (k >= 1)
        s += var;
    if (k >= 2)
        s += "^" + std::to_string(k);
    return s;
}

} // namespace

std::string QPoly::to_string(char const * var) const
{
    if (is_zero())
        return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k] == 0)
            continue;
        mpz_class a = abs(c_[k]);
        if (out.empty())
            out += c_[k] < 0 ? "-" : "";
        else
            out += c_[k] < 0 ? "-" : "+";
        out += term(a, k, var);
    }
    return out;
}

std::string QPoly::to_string_ascending(char const * var) const
{
    if (is_zero())
        return "0";
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0)
            continue;
        mpz_class a = abs(c_[k]);
        if (out.empty())
            out += c_[k] < 0 ? "-" : "";
        else
            out += c_[k] < 0 ? " - " : " + ";
        out += term(a, k, var);
    }
    return out;
}

QPolyDivision divmod(QPoly const & num, QPoly const & den)
{
    if (den.is_zero())
        throw ValidationError("polynomial division by zero");
    std::vector<mpz_class> rem(num.coeffs().begin(), num.coeffs().end());
    int dd = den.degree();
    int nd = num.degree();
    std::vector<mpz_class> quo(nd >= dd ? static_cast<std::size_t>(nd - dd + 1) : 0);
    mpz_class const & lead = den.coeffs().back();
    for (int k = nd; k >= dd; --k) {
        mpz_class const & top = rem[static_cast<std::size_t>(k)];
        if (top == 0)
            continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw InvariantViolation("polynomial division leaves a non-integral quotient");
        mpz_class f = top / lead;
        quo[static_cast<std::size_t>(k - dd)] = f;
        for (int i = 0; i <= dd; ++i)
            rem[static_cast<std::size_t>(k - dd + i)] -= f * den.coeffs()[static_cast<std::size_t>(i)];
    }
    return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly exact_quotient(QPoly const & num, QPoly const & den)
{
    auto [q, r] = divmod(num, den);
    if (!r.is_zero())
        throw InvariantViolation("inexact polynomial division: remainder " + r.to_string());
    return q;
}

mpz_class eval_at(QPoly const & p, mpz_class const & v) { return p.eval(v); }

QPoly q_int(int m)
{
    detail::require(m >= 1, "q-integer [m]_q needs m >= 1");
    return QPoly(std::vector<mpz_class>(static_cast<std::size_t>(m), mpz_class(1)));
}

QPoly q_factorial(int n)
{
    detail::require(n >= 1, "q-factorial [n]_q! needs n >= 1");
    QPoly r = QPoly::constant(1);
    for (int m = 2; m <= n; ++m)
        r *= q_int(m);
    return r;
}

QPoly q_multinomial(Partition const & lambda)
{
    QPoly den = QPoly::constant(1);
    for (int part : lambda.parts())
        den *= q_factorial(part);
    return exact_quotient(q_factorial(lambda.n()), den);
}

mpz_class multinomial(Partition const & lambda)
{
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(lambda.n()));
    for (int part : lambda.parts()) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(part));
        r /= f;
    }
    return r;
}

} // namespace germkit
