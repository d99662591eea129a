#ifndef GERMKIT_JSON_IO_HPP
#define GERMKIT_JSON_IO_HPP

#include <gmpxx.h>

#include "json.hpp"

#include "germkit/germ.hpp"
#include "germkit/partitions.hpp"
#include "germkit/qpoly.hpp"

/* Wire formats. Integers that fit in 64 bits are written as JSON
 * numbers, larger ones as decimal strings; readers accept both.
 */
namespace germkit::json_io {

using nlohmann::json;

json to_json(mpz_class const & v);
mpz_class bigint_from_json(json const & j);

/* [3,1,1] */
json to_json(Partition const & p);
Partition partition_from_json(json const & j);

/* {"composition": [1,3,2]} */
json to_json(Composition const & c);
Composition composition_from_json(json const & j);

/* coefficient array, constant term first */
json to_json(QPoly const & p);
QPoly qpoly_from_json(json const & j);

/* {"n": 2, "entries": [{"partition": [2], "value": -1}, ...]} */
json to_json(CoefficientMap const & c);
CoefficientMap coefficient_map_from_json(json const & j);

/* {"n": 2, "partitions": [[2],[1,1]], "rows": [[1,3],[0,1]]} */
json to_json(MultiplicityMatrix const & m);
MultiplicityMatrix multiplicity_matrix_from_json(json const & j);

} // namespace germkit::json_io

#endif
