#include "germkit/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "germkit/cosets.hpp"
#include "germkit/errors.hpp"

namespace germkit::oracle {

namespace {

int mod_inverse(int a, int p)
{
    /* extended Euclid; a is nonzero mod the prime p */
    int t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        int quo = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - quo * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - quo * new_r);
    }
    return t < 0 ? t + p : t;
}

void require_prime_field(std::int64_t q)
{
    detail::require(is_prime(q) && q < 256,
                    "the oracle works over prime fields F_q with q < 256, got q = "
                        + std::to_string(q));
}

void require_size(int n)
{
    detail::require(n >= 1 && n <= 8, "oracle matrix size must be in [1, 8]");
}

/* q^(n*n) as the number of matrices in M_n(F_q); nullopt when it does
 * not fit in 64 bits */
std::optional<std::uint64_t> matrix_space_size(int n, std::int64_t q)
{
    std::uint64_t r = 1;
    for (int i = 0; i < n * n; ++i) {
        if (r > UINT64_MAX / static_cast<std::uint64_t>(q))
            return std::nullopt;
        r *= static_cast<std::uint64_t>(q);
    }
    return r;
}

void check_cap(mpz_class const & size, OracleOptions const & opts, std::string const & what)
{
    if (size > mpz_class(std::to_string(opts.cap)))
        throw BoundExceeded(what + " has " + size.get_str() + " elements, over the enumeration cap "
                            + std::to_string(opts.cap)
                            + " (raise it with GERMKIT_ORACLE_CAP or --cap)");
}

unsigned worker_count(OracleOptions const & opts)
{
    unsigned w = opts.workers ? opts.workers : std::thread::hardware_concurrency();
    return std::max(1u, w);
}

/* Calls visit(m, acc) for every m in M_n(F_q), splitting the index range
 * across workers with one accumulator each. Accumulators are returned
 * in worker order so that merging is deterministic.
 */
template <class Acc, class Visit>
std::vector<Acc> stream_matrices(int n, int q, OracleOptions const & opts, Acc const & init,
                                 Visit visit)
{
    auto total = matrix_space_size(n, q);
    detail::require(total.has_value(), "matrix space too large to enumerate");
    unsigned workers = static_cast<unsigned>(
        std::min<std::uint64_t>(worker_count(opts), std::max<std::uint64_t>(1, *total / 4096)));
    std::vector<Acc> accs(workers, init);
    auto run = [&](unsigned w) {
        std::uint64_t lo = *total / workers * w;
        std::uint64_t hi = w + 1 == workers ? *total : *total / workers * (w + 1);
        std::size_t cells = static_cast<std::size_t>(n * n);
        std::vector<int> digits(cells);
        std::uint64_t v = lo;
        for (std::size_t c = 0; c < cells; ++c) {
            digits[c] = static_cast<int>(v % static_cast<std::uint64_t>(q));
            v /= static_cast<std::uint64_t>(q);
        }
        FqMatrix m(q, n, n);
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            for (std::size_t c = 0; c < cells; ++c)
                m.set(static_cast<int>(c) / n, static_cast<int>(c) % n, digits[c]);
            visit(m, accs[w]);
            for (std::size_t c = 0; c < cells; ++c) {
                if (++digits[c] < q)
                    break;
                digits[c] = 0;
            }
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w)
            threads.emplace_back(run, w);
        for (auto & t : threads)
            t.join();
    }
    return accs;
}

int primitive_root(int p)
{
    for (int g = 1; g < p; ++g) {
        int x = 1, order = 0;
        do {
            x = x * g % p;
            ++order;
        } while (x != 1);
        if (order == p - 1)
            return g;
    }
    return 1;
}

std::string key_of(FqMatrix const & m)
{
    std::string k;
    k.reserve(m.data().size());
    for (int v : m.data())
        k.push_back(static_cast<char>(v));
    return k;
}

} // namespace

FqMatrix::FqMatrix(int q, int rows, int cols)
    : q_(q)
    , rows_(rows)
    , cols_(cols)
    , a_(static_cast<std::size_t>(rows * cols), 0)
{
    detail::require(q >= 2 && rows >= 0 && cols >= 0, "invalid matrix shape or modulus");
}

FqMatrix FqMatrix::identity(int q, int n)
{
    FqMatrix m(q, n, n);
    for (int i = 0; i < n; ++i)
        m.set(i, i, 1);
    return m;
}

void FqMatrix::set(int i, int j, long v)
{
    long r = v % q_;
    a_[static_cast<std::size_t>(i * cols_ + j)] = static_cast<int>(r < 0 ? r + q_ : r);
}

FqMatrix operator*(FqMatrix const & x, FqMatrix const & y)
{
    detail::require(x.cols_ == y.rows_ && x.q_ == y.q_, "matrix product shape mismatch");
    FqMatrix r(x.q_, x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
        for (int k = 0; k < x.cols_; ++k) {
            int a = x(i, k);
            if (!a)
                continue;
            for (int j = 0; j < y.cols_; ++j)
                r.a_[static_cast<std::size_t>(i * r.cols_ + j)] =
                    (r.a_[static_cast<std::size_t>(i * r.cols_ + j)] + a * y(k, j)) % x.q_;
        }
    return r;
}

bool FqMatrix::is_zero() const
{
    return std::all_of(a_.begin(), a_.end(), [](int v) { return v == 0; });
}

int FqMatrix::rank() const
{
    std::vector<int> m = a_;
    auto at = [&](int i, int j) -> int & { return m[static_cast<std::size_t>(i * cols_ + j)]; };
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int piv = -1;
        for (int i = r; i < rows_; ++i)
            if (at(i, c)) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        for (int j = 0; j < cols_; ++j)
            std::swap(at(r, j), at(piv, j));
        int inv = mod_inverse(at(r, c), q_);
        for (int i = r + 1; i < rows_; ++i) {
            int f = at(i, c) * inv % q_;
            if (!f)
                continue;
            for (int j = c; j < cols_; ++j)
                at(i, j) = ((at(i, j) - f * at(r, j)) % q_ + q_) % q_;
        }
        ++r;
    }
    return r;
}

FqMatrix FqMatrix::power(int k) const
{
    detail::require(square() && k >= 0, "power needs a square matrix and k >= 0");
    FqMatrix r = identity(q_, rows_);
    for (int i = 0; i < k; ++i)
        r = r * *this;
    return r;
}

FqMatrix FqMatrix::inverse() const
{
    detail::require(square(), "inverse needs a square matrix");
    int n = rows_;
    FqMatrix a = *this, inv = identity(q_, n);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (a(i, c)) {
                piv = i;
                break;
            }
        if (piv < 0)
            throw ValidationError("matrix is singular");
        for (int j = 0; j < n; ++j) {
            std::swap(a.a_[static_cast<std::size_t>(c * n + j)], a.a_[static_cast<std::size_t>(piv * n + j)]);
            std::swap(inv.a_[static_cast<std::size_t>(c * n + j)], inv.a_[static_cast<std::size_t>(piv * n + j)]);
        }
        int s = mod_inverse(a(c, c), q_);
        for (int j = 0; j < n; ++j) {
            a.set(c, j, long(a(c, j)) * s);
            inv.set(c, j, long(inv(c, j)) * s);
        }
        for (int i = 0; i < n; ++i) {
            if (i == c || !a(i, c))
                continue;
            int f = a(i, c);
            for (int j = 0; j < n; ++j) {
                a.set(i, j, a(i, j) - long(f) * a(c, j));
                inv.set(i, j, inv(i, j) - long(f) * inv(c, j));
            }
        }
    }
    return inv;
}

std::string FqMatrix::to_string() const
{
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << '[';
        for (int j = 0; j < cols_; ++j)
            os << (j ? " " : "") << (*this)(i, j);
        os << "]\n";
    }
    return os.str();
}

ParabolicShape::ParabolicShape(Partition lambda)
    : lambda_(std::move(lambda))
{
    int b = 0;
    for (int part : lambda_.parts()) {
        block_.insert(block_.end(), static_cast<std::size_t>(part), b);
        ++b;
    }
}

std::int64_t ParabolicShape::nilradical_dimension() const
{
    std::int64_t c = 0;
    int n = lambda_.n();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            c += in_nilradical(i, j);
    return c;
}

bool ParabolicShape::contains_in_nilradical(FqMatrix const & x) const
{
    int n = lambda_.n();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (x(i, j) && !in_nilradical(i, j))
                return false;
    return true;
}

OracleOptions OracleOptions::from_environment()
{
    OracleOptions o;
    if (char const * env = std::getenv("GERMKIT_ORACLE_CAP")) {
        char * end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || v == 0)
            throw ValidationError("GERMKIT_ORACLE_CAP must be a positive integer");
        o.cap = v;
    }
    return o;
}

mpz_class gl_order(int n, std::int64_t q)
{
    detail::require(n >= 1 && q >= 2, "gl_order needs n >= 1 and q >= 2");
    mpz_class qn, r = 1;
    mpz_ui_pow_ui(qn.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(n));
    for (int i = 0; i < n; ++i) {
        mpz_class qi;
        mpz_ui_pow_ui(qi.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(i));
        r *= qn - qi;
    }
    return r;
}

mpz_class parabolic_order(Partition const & lambda, std::int64_t q)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(q),
                  static_cast<unsigned long>(d_of(lambda)));
    for (int part : lambda.parts())
        r *= gl_order(part, q);
    return r;
}

Partition nilpotent_partition(FqMatrix const & x)
{
    detail::require(x.square() && x.rows() >= 1, "nilpotent_partition needs a nonempty square matrix");
    int n = x.rows();
    std::vector<int> parts;
    FqMatrix pw = FqMatrix::identity(x.q(), n);
    int prev_kernel = 0;
    for (int i = 1; i <= n; ++i) {
        pw = pw * x;
        int kernel = n - pw.rank();
        if (kernel == prev_kernel)
            break;
        parts.push_back(kernel - prev_kernel);
        prev_kernel = kernel;
    }
    if (prev_kernel != n)
        throw ValidationError("matrix is not nilpotent");
    /* the Partition constructor rejects a non-monotone jump sequence */
    return Partition(std::move(parts));
}

FqMatrix build_A_lambda(Partition const & lambda, int q)
{
    require_prime_field(q);
    int n = lambda.n();
    FqMatrix a(q, n, n);
    /* block i starts at offset s_i; e_{s_i + j} -> e_{s_{i-1} + j} for
     * j < λ_i (0-based), which fits because λ_i <= λ_{i-1} */
    int prev_start = 0, start = lambda[0];
    for (std::size_t i = 1; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda[i]; ++j)
            a.set(prev_start + j, start + j, 1);
        prev_start = start;
        start += lambda[i];
    }
    return a;
}

FqMatrix canonical_coset_representative(FqMatrix const & g, ParabolicShape const & shape)
{
    int n = shape.partition().n();
    int q = g.q();
    detail::require(g.rows() == n && g.cols() == n, "coset representative shape mismatch");
    using Row = std::vector<int>;
    auto norm = [q](long v) { return static_cast<int>(((v % q) + q) % q); };

    std::vector<std::pair<int, Row>> basis; /* (pivot, row), fully reduced */
    FqMatrix out(q, n, n);
    auto parts = shape.partition().parts();
    int end = n;
    for (std::size_t b = parts.size(); b-- > 0;) {
        int begin = end - parts[b];
        std::vector<Row> rows;
        for (int i = begin; i < end; ++i) {
            Row r(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j)
                r[static_cast<std::size_t>(j)] = g(i, j);
            for (auto const & [p, br] : basis) {
                int f = r[static_cast<std::size_t>(p)];
                if (f)
                    for (int j = 0; j < n; ++j)
                        r[static_cast<std::size_t>(j)] =
                            norm(r[static_cast<std::size_t>(j)] - long(f) * br[static_cast<std::size_t>(j)]);
            }
            rows.push_back(std::move(r));
        }
        /* reduced echelon form of this block */
        std::vector<int> pivots;
        for (int c = 0; c < n && pivots.size() < rows.size(); ++c) {
            std::size_t r0 = pivots.size();
            std::size_t piv = rows.size();
            for (std::size_t i = r0; i < rows.size(); ++i)
                if (rows[i][static_cast<std::size_t>(c)]) {
                    piv = i;
                    break;
                }
            if (piv == rows.size())
                continue;
            std::swap(rows[r0], rows[piv]);
            int s = mod_inverse(rows[r0][static_cast<std::size_t>(c)], q);
            for (int & v : rows[r0])
                v = norm(long(v) * s);
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i == r0)
                    continue;
                int f = rows[i][static_cast<std::size_t>(c)];
                if (f)
                    for (int j = 0; j < n; ++j)
                        rows[i][static_cast<std::size_t>(j)] =
                            norm(rows[i][static_cast<std::size_t>(j)] - long(f) * rows[r0][static_cast<std::size_t>(j)]);
            }
            pivots.push_back(c);
        }
        std::vector<std::pair<int, Row>> reduced;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            reduced.emplace_back(pivots[i], rows[i]);
        if (reduced.size() != rows.size())
            throw ValidationError("coset representative needs an invertible matrix");
        for (std::size_t i = 0; i < reduced.size(); ++i)
            for (int j = 0; j < n; ++j)
                out.set(begin + static_cast<int>(i), j, reduced[i].second[static_cast<std::size_t>(j)]);
        /* keep the accumulated basis fully reduced */
        for (auto const & [p, nr] : reduced)
            for (auto & [bp, br] : basis) {
                int f = br[static_cast<std::size_t>(p)];
                if (f)
                    for (int j = 0; j < n; ++j)
                        br[static_cast<std::size_t>(j)] =
                            norm(br[static_cast<std::size_t>(j)] - long(f) * nr[static_cast<std::size_t>(j)]);
            }
        basis.insert(basis.end(), reduced.begin(), reduced.end());
        end = begin;
    }
    return out;
}

namespace {

mpz_class count_cosets_by_stream(ParabolicShape const & shape, int q, OracleOptions const & opts)
{
    int n = shape.partition().n();
    auto accs = stream_matrices(n, q, opts, std::uint64_t{0},
                                [&](FqMatrix const & m, std::uint64_t & acc) {
                                    if (m.rank() == n && canonical_coset_representative(m, shape) == m)
                                        ++acc;
                                });
    mpz_class total = 0;
    for (auto a : accs)
        total += static_cast<unsigned long>(a);
    return total;
}

mpz_class count_cosets_by_graph(ParabolicShape const & shape, int q, OracleOptions const & opts)
{
    int n = shape.partition().n();
    std::vector<FqMatrix> gens;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) {
                FqMatrix t = FqMatrix::identity(q, n);
                t.set(i, j, 1);
                gens.push_back(t);
            }
    if (q > 2) {
        FqMatrix dgen = FqMatrix::identity(q, n);
        dgen.set(0, 0, primitive_root(q));
        gens.push_back(dgen);
    }
    FqMatrix start = canonical_coset_representative(FqMatrix::identity(q, n), shape);
    std::unordered_set<std::string> seen{key_of(start)};
    std::deque<FqMatrix> frontier{start};
    while (!frontier.empty()) {
        FqMatrix g = std::move(frontier.front());
        frontier.pop_front();
        for (auto const & s : gens) {
            FqMatrix h = canonical_coset_representative(g * s, shape);
            if (seen.insert(key_of(h)).second) {
                if (seen.size() > opts.cap)
                    throw BoundExceeded("coset space exceeds the enumeration cap "
                                        + std::to_string(opts.cap));
                frontier.push_back(std::move(h));
            }
        }
    }
    return mpz_class(static_cast<unsigned long>(seen.size()));
}

} // namespace

CosetCount count_parabolic_cosets(Partition const & lambda, std::int64_t q,
                                  OracleOptions const & opts, CosetStrategy strategy)
{
    require_prime_field(q);
    require_size(lambda.n());
    int n = lambda.n();
    ParabolicShape shape(lambda);
    mpz_class group = gl_order(n, q);
    if (strategy == CosetStrategy::Auto)
        strategy = group <= mpz_class(std::to_string(opts.cap)) ? CosetStrategy::GroupStream
                                                                 : CosetStrategy::CosetGraph;
    mpz_class quotient = group / parabolic_order(lambda, q);
    mpz_class orbits;
    if (strategy == CosetStrategy::GroupStream) {
        check_cap(group, opts, "GL_" + std::to_string(n) + "(F_" + std::to_string(q) + ")");
        orbits = count_cosets_by_stream(shape, static_cast<int>(q), opts);
    } else {
        check_cap(quotient, opts, "the coset space");
        orbits = count_cosets_by_graph(shape, static_cast<int>(q), opts);
    }
    if (orbits != quotient)
        throw InvariantViolation("orbit count " + orbits.get_str() + " differs from |GL_n|/|P| = "
                                 + quotient.get_str() + " for " + lambda.to_string());
    return CosetCount{lambda, q, orbits, quotient, strategy};
}

MultiplicityMatrix multiplicity_matrix(int n, std::int64_t q, OracleOptions const & opts)
{
    require_prime_field(q);
    require_size(n);
    check_cap(gl_order(n, q), opts, "GL_" + std::to_string(n) + "(F_" + std::to_string(q) + ")");
    auto parts = enumerate_partitions(n);
    std::size_t k = parts.size();
    std::vector<FqMatrix> as;
    std::vector<ParabolicShape> shapes;
    for (auto const & p : parts) {
        as.push_back(build_A_lambda(p, static_cast<int>(q)));
        shapes.emplace_back(p);
    }
    using Counts = std::vector<std::uint64_t>;
    auto accs = stream_matrices(n, static_cast<int>(q), opts, Counts(k * k, 0),
                                [&](FqMatrix const & g, Counts & acc) {
                                    if (g.rank() != n)
                                        return;
                                    FqMatrix ginv = g.inverse();
                                    for (std::size_t l = 0; l < k; ++l) {
                                        FqMatrix conj = g * as[l] * ginv;
                                        for (std::size_t m = 0; m < k; ++m)
                                            if (shapes[m].contains_in_nilradical(conj))
                                                ++acc[l * k + m];
                                    }
                                });
    MultiplicityMatrix out{n, parts, std::vector<std::vector<mpz_class>>(k, std::vector<mpz_class>(k))};
    for (std::size_t l = 0; l < k; ++l)
        for (std::size_t m = 0; m < k; ++m) {
            mpz_class total = 0;
            for (auto const & a : accs)
                total += static_cast<unsigned long>(a[l * k + m]);
            mpz_class po = parabolic_order(parts[m], q);
            if (!mpz_divisible_p(total.get_mpz_t(), po.get_mpz_t()))
                throw InvariantViolation("conjugation count " + total.get_str()
                                         + " is not divisible by |P_mu(F_q)| = " + po.get_str());
            out.entries[l][m] = total / po;
        }
    return out;
}

mpz_class xi_multiplicity(Partition const & lambda, Partition const & mu, std::int64_t q,
                          OracleOptions const & opts)
{
    require_prime_field(q);
    detail::require(lambda.n() == mu.n(), "xi_multiplicity needs partitions of the same n");
    int n = lambda.n();
    require_size(n);
    check_cap(gl_order(n, q), opts, "GL_" + std::to_string(n) + "(F_" + std::to_string(q) + ")");
    FqMatrix a = build_A_lambda(lambda, static_cast<int>(q));
    ParabolicShape shape(mu);
    auto accs = stream_matrices(n, static_cast<int>(q), opts, std::uint64_t{0},
                                [&](FqMatrix const & g, std::uint64_t & acc) {
                                    if (g.rank() == n && shape.contains_in_nilradical(g * a * g.inverse()))
                                        ++acc;
                                });
    mpz_class total = 0;
    for (auto v : accs)
        total += static_cast<unsigned long>(v);
    mpz_class po = parabolic_order(mu, q);
    if (!mpz_divisible_p(total.get_mpz_t(), po.get_mpz_t()))
        throw InvariantViolation("conjugation count " + total.get_str()
                                 + " is not divisible by |P_mu(F_q)| = " + po.get_str());
    return total / po;
}

mpz_class count_nilpotent(int n, std::int64_t q, OracleOptions const & opts)
{
    require_prime_field(q);
    require_size(n);
    auto size = matrix_space_size(n, q);
    detail::require(size.has_value(), "matrix space too large to enumerate");
    check_cap(mpz_class(std::to_string(*size)), opts, "M_" + std::to_string(n) + "(F_" + std::to_string(q) + ")");
    auto accs = stream_matrices(n, static_cast<int>(q), opts, std::uint64_t{0},
                                [&](FqMatrix const & x, std::uint64_t & acc) {
                                    if (x.power(n).is_zero())
                                        ++acc;
                                });
    mpz_class total = 0;
    for (auto v : accs)
        total += static_cast<unsigned long>(v);
    return total;
}

FqMatrix random_matrix(int n, int q, std::mt19937_64 & rng)
{
    std::uniform_int_distribution<int> dist(0, q - 1);
    FqMatrix m(q, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.set(i, j, dist(rng));
    return m;
}

FqMatrix random_invertible(int n, int q, std::mt19937_64 & rng)
{
    for (;;) {
        FqMatrix m = random_matrix(n, q, rng);
        if (m.rank() == n)
            return m;
    }
}

FqMatrix random_nilpotent(int n, int q, std::mt19937_64 & rng)
{
    std::uniform_int_distribution<int> dist(0, q - 1);
    FqMatrix u(q, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            u.set(i, j, dist(rng));
    FqMatrix g = random_invertible(n, q, rng);
    return g * u * g.inverse();
}

} // namespace germkit::oracle
