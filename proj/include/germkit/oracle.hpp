#ifndef GERMKIT_ORACLE_HPP
#define GERMKIT_ORACLE_HPP

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "germkit/germ.hpp"
#include "germkit/partitions.hpp"

/* Brute-force checks over a prime field F_q: Jordan types of nilpotent
 * matrices, flag counts P_λ(F_q)\GL_n(F_q), and the multiplicities
 * m(ξ_λ, π_{P_μ}) at depth one.
 *
 * At depth one the condition on k ∈ GL_n(O_D) only sees the residue k̄,
 * and with ψ trivial on P_F and nontrivial on O_F it reduces to the
 * linear condition k̄ A_λ k̄^{-1} ∈ n_μ(F_q): the annihilator of p_μ under
 * the trace pairing is n_μ. No roots of unity are needed.
 */
namespace germkit::oracle {

/* Dense matrix over F_q, q prime. Entries are kept reduced. */
class FqMatrix {
  public:
    FqMatrix(int q, int rows, int cols);
    static FqMatrix zero(int q, int n) { return FqMatrix(q, n, n); }
    static FqMatrix identity(int q, int n);

    int q() const { return q_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    int operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
    void set(int i, int j, long v);

    std::vector<int> const & data() const { return a_; }

    friend FqMatrix operator*(FqMatrix const & x, FqMatrix const & y);
    friend bool operator==(FqMatrix const &, FqMatrix const &) = default;

    bool is_zero() const;
    int rank() const;
    FqMatrix power(int k) const;
    /* throws ValidationError when singular */
    FqMatrix inverse() const;

    std::string to_string() const;

  private:
    int q_, rows_, cols_;
    std::vector<int> a_;
};

/* Block structure of the standard parabolic of type λ: p_λ is upper
 * block triangular, n_λ strictly upper block triangular, n_λ^- strictly
 * lower block triangular.
 */
class ParabolicShape {
  public:
    explicit ParabolicShape(Partition lambda);

    Partition const & partition() const { return lambda_; }
    int block_of(int index) const { return block_[static_cast<std::size_t>(index)]; }

    bool in_nilradical(int i, int j) const { return block_of(i) < block_of(j); }
    bool in_levi(int i, int j) const { return block_of(i) == block_of(j); }
    bool in_opposite(int i, int j) const { return block_of(i) > block_of(j); }
    bool in_parabolic(int i, int j) const { return block_of(i) <= block_of(j); }

    /* number of positions of n_λ, equal to d_λ */
    std::int64_t nilradical_dimension() const;

    bool contains_in_nilradical(FqMatrix const & x) const;

  private:
    Partition lambda_;
    std::vector<int> block_;
};

struct OracleOptions {
    /* maximum |GL_n(F_q)| (or enumerated object count) allowed */
    std::uint64_t cap = 10'000'000;
    /* 0 means std::thread::hardware_concurrency() */
    unsigned workers = 0;

    /* defaults with the cap taken from GERMKIT_ORACLE_CAP when set */
    static OracleOptions from_environment();
};

/* |GL_n(F_q)| = prod_{i<n} (q^n - q^i) */
mpz_class gl_order(int n, std::int64_t q);

/* |P_λ(F_q)| = q^{d_λ} prod |GL_{λ_i}(F_q)| */
mpz_class parabolic_order(Partition const & lambda, std::int64_t q);

/* Jordan type of a nilpotent X from kernel dimension jumps:
 *   λ_i = dim Ker X^i - dim Ker X^{i-1}
 * Throws ValidationError when X is not square or not nilpotent.
 */
Partition nilpotent_partition(FqMatrix const & x);

/* The 0/1 matrix sending e_1..e_{λ_1} to 0 and e_{λ_1+..+λ_i+j} to
 * e_{λ_1+..+λ_{i-1}+j} for j = 1..λ_{i+1}. Its iterated kernels are the
 * standard flag of type λ, so it lies in n_λ with Jordan type λ.
 */
FqMatrix build_A_lambda(Partition const & lambda, int q);

/* Canonical representative of the coset P_λ(F_q) g: working from the
 * bottom block up, each block of rows is reduced modulo the span of the
 * rows below it and brought to reduced echelon form.
 */
FqMatrix canonical_coset_representative(FqMatrix const & g, ParabolicShape const & shape);

enum class CosetStrategy {
    /* choose GroupStream when |GL_n(F_q)| fits under the cap */
    Auto,
    /* stream all of GL_n(F_q) and count canonical representatives */
    GroupStream,
    /* breadth-first search of the coset space from the identity coset
     * under right multiplication by generators of GL_n(F_q) */
    CosetGraph,
};

struct CosetCount {
    Partition partition;
    std::int64_t q;
    /* number of orbits found by enumeration */
    mpz_class orbits;
    /* |GL_n(F_q)| / |P_λ(F_q)| */
    mpz_class quotient;
    CosetStrategy strategy;
};

/* |P_λ(F_q)\GL_n(F_q)| two ways; throws InvariantViolation if they
 * disagree and BoundExceeded if the enumeration is over the cap.
 */
CosetCount count_parabolic_cosets(Partition const & lambda, std::int64_t q,
                                  OracleOptions const & opts = {},
                                  CosetStrategy strategy = CosetStrategy::Auto);

/* |{k ∈ GL_n(F_q) : k A_λ k^{-1} ∈ n_μ}| / |P_μ(F_q)| */
mpz_class xi_multiplicity(Partition const & lambda, Partition const & mu, std::int64_t q,
                          OracleOptions const & opts = {});

/* every xi_multiplicity(λ, μ) for λ, μ ∈ P(n) from one pass over the
 * group, indexed in enumeration order */
MultiplicityMatrix multiplicity_matrix(int n, std::int64_t q, OracleOptions const & opts = {});

/* number of nilpotent matrices in M_n(F_q), by exhaustion */
mpz_class count_nilpotent(int n, std::int64_t q, OracleOptions const & opts = {});

/* random matrices for property tests */
FqMatrix random_matrix(int n, int q, std::mt19937_64 & rng);
FqMatrix random_invertible(int n, int q, std::mt19937_64 & rng);
/* random nilpotent matrix: a random strictly upper triangular matrix
 * conjugated by a random invertible one */
FqMatrix random_nilpotent(int n, int q, std::mt19937_64 & rng);

} // namespace germkit::oracle

#endif
