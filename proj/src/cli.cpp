#include "germkit/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "germkit/cosets.hpp"
#include "germkit/errors.hpp"
#include "germkit/germ.hpp"
#include "germkit/gl2.hpp"
#include "germkit/json_io.hpp"
#include "germkit/oracle.hpp"
#include "germkit/partitions.hpp"
#include "germkit/qpoly.hpp"

namespace germkit::cli {

namespace {

using json_io::json;

/* Plain left-aligned text table. */
class Table {
  public:
    explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    void print(std::ostream & os) const
    {
        std::vector<std::size_t> w;
        for (auto const & r : rows_)
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (w.size() <= i)
                    w.push_back(0);
                w[i] = std::max(w[i], r[i].size());
            }
        for (auto const & r : rows_) {
            std::string line;
            for (std::size_t i = 0; i < r.size(); ++i) {
                line += r[i];
                if (i + 1 < r.size())
                    line += std::string(w[i] - r[i].size() + 2, ' ');
            }
            os << line << '\n';
        }
    }

  private:
    std::vector<std::vector<std::string>> rows_;
};

struct Common {
    bool json = false;
    std::string out_file;
};

json read_json_file(std::string const & path)
{
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open input file '" + path + "'");
    try {
        return json::parse(in);
    } catch (json::parse_error const & e) {
        throw ValidationError("input file '" + path + "' is not valid JSON: " + e.what());
    }
}

std::string dump(json const & j) { return j.dump(2) + "\n"; }

std::vector<int> parse_int_list(std::string const & s)
{
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size())
                throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (std::exception const &) {
            throw ValidationError("expected a comma-separated list of integers, got '" + s + "'");
        }
    }
    return out;
}

void print_map(std::ostream & os, CoefficientMap const & c)
{
    if (c.is_zero()) {
        os << "zero map on partitions of " << c.n() << '\n';
        return;
    }
    Table t({"partition", "value"});
    for (auto const & [p, v] : c.entries())
        t.add({p.to_string(), v.get_str()});
    t.print(os);
}

/* ---- partitions ---------------------------------------------------- */

std::string cmd_partitions(int n, std::vector<std::string> const & show, int d, Common const & c)
{
    for (auto const & s : show)
        detail::require(s == "d" || s == "dual" || s == "orbitdim",
                        "--show accepts d, dual and orbitdim, got '" + s + "'");
    auto has = [&](char const * k) { return std::find(show.begin(), show.end(), k) != show.end(); };
    auto parts = enumerate_partitions(n);
    std::ostringstream os;
    if (c.json) {
        json arr = json::array();
        for (auto const & p : parts) {
            json row{{"partition", json_io::to_json(p)}};
            if (has("d"))
                row["d"] = d_of(p);
            if (has("dual"))
                row["dual"] = json_io::to_json(dual(p));
            if (has("orbitdim"))
                row["orbit_dim"] = orbit_dimension(p, d);
            arr.push_back(row);
        }
        os << dump(json{{"n", n}, {"partitions", arr}});
        return os.str();
    }
    std::vector<std::string> header{"partition"};
    if (has("d"))
        header.push_back("d");
    if (has("dual"))
        header.push_back("dual");
    if (has("orbitdim"))
        header.push_back("orbit_dim");
    Table t(header);
    for (auto const & p : parts) {
        std::vector<std::string> row{p.to_string()};
        if (has("d"))
            row.push_back(std::to_string(d_of(p)));
        if (has("dual"))
            row.push_back(dual(p).to_string());
        if (has("orbitdim"))
            row.push_back(std::to_string(orbit_dimension(p, d)));
        t.add(row);
    }
    t.print(os);
    if (has("d")) {
        std::map<std::int64_t, std::vector<Partition>> by_d;
        for (auto const & p : parts)
            by_d[d_of(p)].push_back(p);
        bool any = false;
        for (auto const & [v, ps] : by_d)
            if (ps.size() > 1) {
                any = true;
                os << "d collision: " << v;
                for (auto const & p : ps)
                    os << " = d" << p.to_string();
                os << '\n';
            }
        if (!any)
            os << "d is injective on partitions of " << n << '\n';
    }
    return os.str();
}

/* ---- qcount -------------------------------------------------------- */

std::string cmd_qcount(std::string const & lambda_s, std::optional<std::int64_t> q, int d,
                       Common const & c)
{
    Partition lambda(parse_int_list(lambda_s));
    QPoly p = q_multinomial(lambda);
    std::optional<mpz_class> value;
    if (q) {
        detail::require(is_prime_power(*q), "q must be a prime power >= 2");
        detail::require(d >= 1, "reduced degree d must be >= 1");
        mpz_class t;
        mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(*q), static_cast<unsigned long>(d));
        value = p.eval(t);
    }
    std::ostringstream os;
    if (c.json) {
        json j{{"partition", json_io::to_json(lambda)}, {"poly", json_io::to_json(p)}};
        if (value) {
            j["q"] = *q;
            j["d"] = d;
            j["value"] = json_io::to_json(*value);
        }
        os << dump(j);
        return os.str();
    }
    os << "q-multinomial " << lambda.to_string() << ": " << p.to_string("q") << '\n';
    if (value)
        os << "at q^d = " << *q << "^" << d << ": " << value->get_str() << '\n';
    return os.str();
}

/* ---- cosets -------------------------------------------------------- */

std::string cmd_cosets(int n, std::int64_t q, int d, int jmax, std::vector<std::string> const & fams,
                       Common const & c)
{
    detail::require(jmax >= 0, "--j must be >= 0");
    std::vector<Family> families;
    if (fams.empty())
        families.assign(std::begin(all_families), std::end(all_families));
    for (auto const & f : fams)
        families.push_back(parse_family(f));
    auto parts = enumerate_partitions(n);
    json arr = json::array();
    Table t({"partition", "family", "depth", "count"});
    for (auto const & p : parts)
        for (Family f : families)
            for (int j = 0; j <= (is_pro_p(f) ? jmax : 0); ++j) {
                mpz_class count = count_at_depth(p, SubgroupSpec::make(f, j, q, d));
                arr.push_back(json{{"partition", json_io::to_json(p)},
                                   {"family", std::string(family_name(f))},
                                   {"depth", j},
                                   {"q", q},
                                   {"d", d},
                                   {"count", json_io::to_json(count)}});
                t.add({p.to_string(), std::string(family_name(f)), std::to_string(j), count.get_str()});
            }
    std::ostringstream os;
    if (c.json)
        os << dump(arr);
    else
        t.print(os);
    return os.str();
}

/* ---- germ ---------------------------------------------------------- */

std::string cmd_dimpoly(CoefficientMap const & cm, std::string const & family_s, std::int64_t q, int d,
                        std::optional<int> jmax, Common const & c)
{
    Family f = parse_family(family_s);
    auto dp = dimension_polynomial(cm, f, q, d);
    std::vector<std::pair<int, mpz_class>> dims;
    if (jmax) {
        detail::require(*jmax >= 0, "--j must be >= 0");
        detail::require(is_pro_p(f) || *jmax == 0,
                        std::string(family_name(f)) + " only exists at depth 0");
        for (int j = 0; j <= *jmax; ++j)
            dims.emplace_back(j, dim_fixed(cm, SubgroupSpec::make(f, j, q, d)));
    }
    std::ostringstream os;
    if (c.json) {
        json j{{"poly", json_io::to_json(dp.poly)},
               {"pretty", dp.poly.to_string_ascending("X")},
               {"formal_degree", dp.formal_degree},
               {"actual_degree", dp.actual_degree},
               {"family", std::string(family_name(f))},
               {"q", q},
               {"d", d}};
        if (jmax) {
            json arr = json::array();
            for (auto const & [jj, v] : dims)
                arr.push_back(json{{"depth", jj}, {"dim", json_io::to_json(v)}});
            j["dims"] = arr;
        }
        os << dump(j);
        return os.str();
    }
    os << dp.poly.to_string_ascending("X") << '\n';
    os << "formal degree " << dp.formal_degree << ", actual degree " << dp.actual_degree << '\n';
    if (dp.top_cancels())
        os << "warning: the top coefficient cancels\n";
    for (auto const & [jj, v] : dims)
        os << "dim at depth " << jj << ": " << v.get_str() << '\n';
    return os.str();
}

std::string emit_map(CoefficientMap const & m, Common const & c)
{
    std::ostringstream os;
    if (c.json)
        os << dump(json_io::to_json(m));
    else
        print_map(os, m);
    return os.str();
}

struct WhittakerOutcome {
    std::string text;
    PositivityReport report;
};

WhittakerOutcome cmd_whittaker(CoefficientMap const & cm, Common const & c)
{
    auto report = check_minimal_positivity(cm);
    std::ostringstream os;
    if (c.json) {
        json arr = json::array();
        for (auto const & e : report.entries)
            arr.push_back(json{{"partition", json_io::to_json(e.partition)},
                               {"value", json_io::to_json(e.value)},
                               {"positive", e.positive}});
        os << dump(json{{"n", cm.n()}, {"minimal_support", arr}, {"pass", report.pass}});
    } else {
        Table t({"partition", "whittaker_dim"});
        for (auto const & e : report.entries)
            t.add({e.partition.to_string(), e.value.get_str()});
        t.print(os);
    }
    return {os.str(), report};
}

/* ---- oracle -------------------------------------------------------- */

struct OracleOutcome {
    std::string text;
    bool pass;
};

OracleOutcome cmd_oracle(int n, std::int64_t q, std::string const & check,
                         oracle::OracleOptions const & opts, Common const & c)
{
    std::ostringstream os;
    bool pass = true;
    json results = json::array();
    json report{{"check", check}, {"n", n}, {"q", q}};
    if (check == "cosets") {
        Table t({"partition", "expected", "observed", "pass"});
        for (auto const & p : enumerate_partitions(n)) {
            mpz_class expected = q_multinomial(p).eval(q);
            mpz_class observed;
            std::string strategy;
            try {
                auto r = oracle::count_parabolic_cosets(p, q, opts);
                observed = r.orbits;
                strategy = r.strategy == oracle::CosetStrategy::GroupStream ? "group-stream" : "coset-graph";
            } catch (InvariantViolation const &) {
                observed = -1;
            }
            bool ok = observed == expected;
            pass = pass && ok;
            results.push_back(json{{"partition", json_io::to_json(p)},
                                   {"expected", json_io::to_json(expected)},
                                   {"observed", json_io::to_json(observed)},
                                   {"strategy", strategy},
                                   {"pass", ok}});
            t.add({p.to_string(), expected.get_str(), observed.get_str(), ok ? "yes" : "NO"});
        }
        if (!c.json)
            t.print(os);
    } else if (check == "jordan") {
        Table t({"partition", "expected", "observed", "pass"});
        for (auto const & p : enumerate_partitions(n)) {
            Partition observed = oracle::nilpotent_partition(oracle::build_A_lambda(p, static_cast<int>(q)));
            bool ok = observed == p;
            pass = pass && ok;
            results.push_back(json{{"partition", json_io::to_json(p)},
                                   {"expected", json_io::to_json(p)},
                                   {"observed", json_io::to_json(observed)},
                                   {"pass", ok}});
            t.add({"A" + p.to_string(), p.to_string(), observed.to_string(), ok ? "yes" : "NO"});
        }
        mpz_class expected;
        mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(q),
                      static_cast<unsigned long>(n * n - n));
        mpz_class observed = oracle::count_nilpotent(n, q, opts);
        bool ok = observed == expected;
        pass = pass && ok;
        report["nilpotent_count"] = json{{"expected", json_io::to_json(expected)},
                                         {"observed", json_io::to_json(observed)},
                                         {"pass", ok}};
        t.add({"#nilpotent", expected.get_str(), observed.get_str(), ok ? "yes" : "NO"});
        if (!c.json)
            t.print(os);
    } else if (check == "ximatrix") {
        auto m = oracle::multiplicity_matrix(n, q, opts);
        bool ok = true;
        try {
            check_unitriangular(m);
        } catch (InvariantViolation const &) {
            ok = false;
        }
        pass = ok;
        report["matrix"] = json_io::to_json(m);
        report["expected"] = "dominance-unitriangular";
        report["observed"] = ok ? "dominance-unitriangular" : "not unitriangular";
        if (!c.json) {
            std::vector<std::string> header{""};
            for (auto const & p : m.index)
                header.push_back(p.to_string());
            Table t(header);
            for (std::size_t i = 0; i < m.index.size(); ++i) {
                std::vector<std::string> row{m.index[i].to_string()};
                for (auto const & v : m.entries[i])
                    row.push_back(v.get_str());
                t.add(row);
            }
            t.print(os);
            os << "unitriangular: " << (ok ? "pass" : "FAIL") << '\n';
        }
    } else {
        throw ValidationError("--check accepts cosets, jordan or ximatrix, got '" + check + "'");
    }
    if (check != "ximatrix")
        report["results"] = results;
    report["pass"] = pass;
    if (c.json)
        os << dump(report);
    else if (check != "ximatrix")
        os << "overall: " << (pass ? "pass" : "FAIL") << '\n';
    return {os.str(), pass};
}

/* ---- gl2 ----------------------------------------------------------- */

std::string cmd_gl2_table(std::int64_t q, int d, int jmax, Common const & c)
{
    detail::require(jmax >= 0, "--j must be >= 0");
    using namespace gl2;
    ChainMember const members[] = {ChainMember::IHalf, ChainMember::Kchain, ChainMember::Ichain};
    json classes = json::array();
    Table t({"class", "a", "b", "j", "IHalf", "Kchain", "Ichain"});
    bool any_below = false;
    for (auto const & rep : catalog(q, d)) {
        json jc{{"class", rep.name()}};
        std::string a_s, b_s;
        std::optional<AB> ab;
        bool modp = rep.kind() == Kind::ModPSupersingular;
        if (modp) {
            a_s = "-2";
            b_s = "2";
            jc["a"] = -2;
            jc["a_prime"] = rep.twist_of_pi0() ? -3 : -4;
            jc["b"] = 2;
        } else if (rep.b() || (rep.kind() != Kind::SpehPair && rep.kind() != Kind::EssSquareIntegrablePair)) {
            ab = ab_coefficients(rep);
            a_s = ab->a.get_str();
            b_s = ab->b.get_str();
            jc["a"] = json_io::to_json(ab->a);
            jc["b"] = json_io::to_json(ab->b);
        } else {
            mpz_class a = rep.kind() == Kind::SpehPair ? rep.dim() : mpz_class(-rep.dim());
            a_s = a.get_str();
            b_s = "?";
            jc["a"] = json_io::to_json(a);
            jc["b"] = nullptr;
        }
        json dims = json::array();
        for (int j = 0; j <= jmax; ++j) {
            std::vector<std::string> row{j == 0 ? rep.name() : "", j == 0 ? a_s : "", j == 0 ? b_s : "",
                                         std::to_string(j)};
            for (ChainMember m : members) {
                json entry{{"member", chain_member_name(m)}, {"depth", j}};
                std::optional<mpz_class> v;
                if (modp) {
                    if (m != ChainMember::Ichain)
                        v = modp_supersingular_dims(rep.twist_of_pi0(), m, j, rep.q());
                } else if (ab) {
                    v = chain_formula(*ab, m, j, q, d);
                }
                if (v) {
                    bool valid = *v >= 0;
                    any_below = any_below || !valid;
                    entry["value"] = json_io::to_json(*v);
                    entry["valid"] = valid;
                    row.push_back(v->get_str() + (valid ? "" : "*"));
                } else {
                    entry["value"] = nullptr;
                    row.push_back(modp ? "n/a" : "?");
                }
                dims.push_back(entry);
            }
            t.add(row);
        }
        jc["dims"] = dims;
        classes.push_back(jc);
    }
    std::ostringstream os;
    if (c.json) {
        os << dump(json{{"q", q}, {"d", d}, {"classes", classes}});
    } else {
        t.print(os);
        os << "? the Whittaker split b_Z + b_L = dim sigma is not determined by the catalog\n";
        if (any_below)
            os << "* below the validity threshold of the class\n";
    }
    return os.str();
}

} // namespace

int run(std::vector<std::string> const & args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"germkit: exact germ-expansion combinatorics for GL_n(D)", "germkit"};
    app.require_subcommand(1);

    Common common;
    auto add_common = [&](CLI::App * sub) {
        sub->add_flag("--json", common.json, "emit JSON");
        sub->add_option("--out", common.out_file, "write the result to FILE");
    };

    int n = 0, d = 1, j = 0;
    std::int64_t q = 2;
    std::optional<std::int64_t> q_opt;
    std::optional<int> j_opt;
    std::vector<std::string> show, families, inputs;
    std::string lambda_s, family_s = "K", check, matrix_file;
    std::uint64_t cap = 0;

    auto * partitions = app.add_subcommand("partitions", "list partitions of n");
    partitions->add_option("--n", n, "n >= 1")->required();
    partitions->add_option("--show", show, "extra columns: d, dual, orbitdim")->delimiter(',');
    partitions->add_option("--d", d, "reduced degree for orbitdim");
    add_common(partitions);

    auto * qcount = app.add_subcommand("qcount", "q-multinomial coset count of a partition");
    qcount->add_option("--lambda", lambda_s, "partition, e.g. 2,1")->required();
    qcount->add_option("--q", q_opt, "evaluate at q^d");
    qcount->add_option("--d", d);
    add_common(qcount);

    auto * cosets = app.add_subcommand("cosets", "double coset counts |P_λ\\G/K|");
    cosets->add_option("--n", n)->required();
    cosets->add_option("--q", q)->required();
    cosets->add_option("--d", d);
    cosets->add_option("--j", j, "largest depth to tabulate");
    cosets->add_option("--family", families, "restrict to families (K0, K, I0, IHalf, I)")->delimiter(',');
    add_common(cosets);

    auto * germ = app.add_subcommand("germ", "coefficient map operations");
    germ->require_subcommand(1);
    auto * dimpoly = germ->add_subcommand("dimpoly", "dimension polynomial of a coefficient map");
    dimpoly->add_option("--in", inputs, "coefficient map JSON")->required()->expected(1);
    dimpoly->add_option("--family", family_s);
    dimpoly->add_option("--q", q)->required();
    dimpoly->add_option("--d", d);
    dimpoly->add_option("--j", j_opt, "also evaluate at depths 0..j");
    add_common(dimpoly);
    auto * induce = germ->add_subcommand("induce", "coefficient map of a parabolic induction");
    induce->add_option("--in", inputs, "coefficient map JSON, repeat per factor")->required();
    add_common(induce);
    auto * lj = germ->add_subcommand("lj", "transfer from GL_{dn}(F) to GL_n(D)");
    lj->add_option("--in", inputs)->required()->expected(1);
    int target_n = 0;
    lj->add_option("--n", target_n)->required();
    lj->add_option("--d", d)->required();
    add_common(lj);
    auto * jl = germ->add_subcommand("jl", "transfer from GL_n(D) to GL_{dn}(F)");
    jl->add_option("--in", inputs)->required()->expected(1);
    jl->add_option("--d", d)->required();
    add_common(jl);
    auto * solve = germ->add_subcommand("solve", "recover a coefficient map from multiplicities");
    solve->add_option("--in", inputs, "multiplicities, coefficient map schema")->required()->expected(1);
    solve->add_option("--matrix", matrix_file, "multiplicity matrix JSON (default: oracle at --q)");
    solve->add_option("--q", q);
    add_common(solve);
    auto * whittaker = germ->add_subcommand("whittaker", "Whittaker dimensions at minimal support");
    whittaker->add_option("--in", inputs)->required()->expected(1);
    add_common(whittaker);

    auto * oracle_cmd = app.add_subcommand("oracle", "brute-force checks over F_q");
    oracle_cmd->add_option("--n", n)->required();
    oracle_cmd->add_option("--q", q)->required();
    oracle_cmd->add_option("--check", check, "cosets, jordan or ximatrix")->required();
    oracle_cmd->add_option("--cap", cap, "enumeration cap (overrides GERMKIT_ORACLE_CAP)");
    add_common(oracle_cmd);

    auto * gl2_cmd = app.add_subcommand("gl2", "GL_2(D) catalog");
    gl2_cmd->require_subcommand(1);
    auto * table = gl2_cmd->add_subcommand("table", "print the catalog");
    table->add_option("--q", q)->required();
    table->add_option("--d", d);
    table->add_option("--j", j, "largest depth to tabulate");
    add_common(table);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (CLI::CallForHelp const &) {
        out << app.help();
        return exit_ok;
    } catch (CLI::ParseError const & e) {
        err << "error: " << e.what() << '\n';
        return exit_validation;
    }

    std::string result;
    int code = exit_ok;
    try {
        if (*partitions) {
            result = cmd_partitions(n, show, d, common);
        } else if (*qcount) {
            result = cmd_qcount(lambda_s, q_opt, d, common);
        } else if (*cosets) {
            result = cmd_cosets(n, q, d, j, families, common);
        } else if (*germ) {
            std::vector<CoefficientMap> maps;
            for (auto const & f : inputs)
                maps.push_back(json_io::coefficient_map_from_json(read_json_file(f)));
            if (*dimpoly) {
                result = cmd_dimpoly(maps.at(0), family_s, q, d, j_opt, common);
            } else if (*induce) {
                result = emit_map(induce_maps(maps), common);
            } else if (*lj) {
                result = emit_map(lj_transfer(maps.at(0), target_n, d), common);
            } else if (*jl) {
                result = emit_map(jl_transfer(maps.at(0), d), common);
            } else if (*solve) {
                auto opts = oracle::OracleOptions::from_environment();
                MultiplicityMatrix m = matrix_file.empty()
                                           ? oracle::multiplicity_matrix(maps.at(0).n(), q, opts)
                                           : json_io::multiplicity_matrix_from_json(read_json_file(matrix_file));
                result = emit_map(solve_from_multiplicities(maps.at(0), m), common);
            } else if (*whittaker) {
                auto w = cmd_whittaker(maps.at(0), common);
                result = w.text;
                for (auto const & e : w.report.entries)
                    if (!e.positive) {
                        code = exit_invariant;
                        err << "error: minimal support value must be positive (at " << e.partition.to_string()
                            << " the value is " << e.value.get_str() << ")\n";
                    }
            }
        } else if (*oracle_cmd) {
            auto opts = oracle::OracleOptions::from_environment();
            if (cap)
                opts.cap = cap;
            auto outcome = cmd_oracle(n, q, check, opts, common);
            result = outcome.text;
            if (!outcome.pass)
                code = exit_invariant;
        } else if (*gl2_cmd) {
            result = cmd_gl2_table(q, d, j, common);
        }
    } catch (InvariantViolation const & e) {
        err << "error: " << e.what() << '\n';
        return exit_invariant;
    } catch (ValidationError const & e) {
        err << "error: " << e.what() << '\n';
        return exit_validation;
    }

    if (!common.out_file.empty()) {
        std::ofstream f(common.out_file);
        if (!f) {
            err << "error: cannot write '" << common.out_file << "'\n";
            return exit_validation;
        }
        f << result;
    } else {
        out << result;
    }
    return code;
}

} // namespace germkit::cli
