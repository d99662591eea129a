#include "germkit/json_io.hpp"

#include "germkit/errors.hpp"

namespace germkit::json_io {

namespace {

[[noreturn]] void schema_error(std::string const & what)
{
    throw ValidationError("schema violation: " + what);
}

json const & field(json const & j, char const * key)
{
    if (!j.is_object() || !j.contains(key))
        schema_error(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::vector<int> int_array(json const & j, char const * what)
{
    if (!j.is_array())
        schema_error(std::string(what) + " must be an array of integers");
    std::vector<int> out;
    for (auto const & v : j) {
        if (!v.is_number_integer())
            schema_error(std::string(what) + " must contain integers only");
        out.push_back(v.get<int>());
    }
    return out;
}

} // namespace

json to_json(mpz_class const & v)
{
    if (mpz_fits_slong_p(v.get_mpz_t()))
        return json(static_cast<std::int64_t>(v.get_si()));
    return json(v.get_str());
}

mpz_class bigint_from_json(json const & j)
{
    if (j.is_number_integer())
        return mpz_class(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) {
        mpz_class v;
        if (v.set_str(j.get<std::string>(), 10) != 0)
            schema_error("integer string '" + j.get<std::string>() + "' is not decimal");
        return v;
    }
    schema_error("expected an integer or a decimal string");
}

json to_json(Partition const & p) { return json(std::vector<int>(p.parts().begin(), p.parts().end())); }

Partition partition_from_json(json const & j) { return Partition(int_array(j, "partition")); }

json to_json(Composition const & c)
{
    return json{{"composition", std::vector<int>(c.parts().begin(), c.parts().end())}};
}

Composition composition_from_json(json const & j)
{
    return Composition(int_array(field(j, "composition"), "composition"));
}

json to_json(QPoly const & p)
{
    json a = json::array();
    for (auto const & c : p.coeffs())
        a.push_back(to_json(c));
    return a;
}

QPoly qpoly_from_json(json const & j)
{
    if (!j.is_array())
        schema_error("polynomial must be an array of coefficients");
    std::vector<mpz_class> c;
    for (auto const & v : j)
        c.push_back(bigint_from_json(v));
    return QPoly(std::move(c));
}

json to_json(CoefficientMap const & c)
{
    json entries = json::array();
    for (auto const & [p, v] : c.entries())
        entries.push_back(json{{"partition", to_json(p)}, {"value", to_json(v)}});
    return json{{"n", c.n()}, {"entries", entries}};
}

CoefficientMap coefficient_map_from_json(json const & j)
{
    json const & n = field(j, "n");
    if (!n.is_number_integer() || n.get<int>() < 1)
        schema_error("\"n\" must be a positive integer");
    CoefficientMap c(n.get<int>());
    json const & entries = field(j, "entries");
    if (!entries.is_array())
        schema_error("\"entries\" must be an array");
    for (auto const & e : entries) {
        Partition p = partition_from_json(field(e, "partition"));
        if (p.n() != c.n())
            schema_error("partition " + p.to_string() + " does not have total " + std::to_string(c.n()));
        if (c.at(p) != 0)
            schema_error("partition " + p.to_string() + " appears twice");
        c.set(p, bigint_from_json(field(e, "value")));
    }
    return c;
}

json to_json(MultiplicityMatrix const & m)
{
    json parts = json::array(), rows = json::array();
    for (auto const & p : m.index)
        parts.push_back(to_json(p));
    for (auto const & r : m.entries) {
        json row = json::array();
        for (auto const & v : r)
            row.push_back(to_json(v));
        rows.push_back(row);
    }
    return json{{"n", m.n}, {"partitions", parts}, {"rows", rows}};
}

MultiplicityMatrix multiplicity_matrix_from_json(json const & j)
{
    json const & n = field(j, "n");
    if (!n.is_number_integer() || n.get<int>() < 1)
        schema_error("\"n\" must be a positive integer");
    MultiplicityMatrix m{n.get<int>(), enumerate_partitions(n.get<int>()), {}};
    json const & parts = field(j, "partitions");
    if (!parts.is_array() || parts.size() != m.index.size())
        schema_error("\"partitions\" must list every partition of n");
    for (std::size_t i = 0; i < m.index.size(); ++i)
        if (!(partition_from_json(parts[i]) == m.index[i]))
            schema_error("\"partitions\" must follow enumeration order (lexicographically decreasing)");
    json const & rows = field(j, "rows");
    if (!rows.is_array() || rows.size() != m.index.size())
        schema_error("\"rows\" must be a square matrix");
    for (auto const & r : rows) {
        if (!r.is_array() || r.size() != m.index.size())
            schema_error("\"rows\" must be a square matrix");
        std::vector<mpz_class> row;
        for (auto const & v : r)
            row.push_back(bigint_from_json(v));
        m.entries.push_back(std::move(row));
    }
    return m;
}

} // namespace germkit::json_io
