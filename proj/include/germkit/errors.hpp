#ifndef GERMKIT_ERRORS_HPP
#define GERMKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace germkit {

/* A caller-supplied value violates a documented precondition.
 * The CLI maps this to exit code 1.
 */
class ValidationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/* A mathematical invariant failed on data that was otherwise
 * well-formed (positivity at minimal support, unitriangularity, ...).
 * The CLI maps this to exit code 2.
 */
class InvariantViolation : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/* The brute-force enumeration would exceed its element budget. */
class BoundExceeded : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

namespace detail {
inline void require(bool ok, std::string const & what)
{
    if (!ok)
        throw ValidationError(what);
}
} // namespace detail

} // namespace germkit

#endif
