/*
 * Copyright 2026 The horadam Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "app.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "horadam/errors.hpp"
#include "horadam/geomean.hpp"
#include "horadam/identities.hpp"
#include "horadam/numeric.hpp"
#include "horadam/real.hpp"
#include "horadam/recurrence.hpp"
#include "horadam/roots.hpp"

namespace horadam::cli
{
namespace
{

using json = nlohmann::ordered_json;

/// Bad flag combination detected after CLI11 parsing.
class UsageError : public Error
{
public:
    using Error::Error;
};

enum class Format
{
    plain,
    json_lines,
    csv,
};

inline constexpr PrecisionBits kMaxPrecisionBits = PrecisionBits{1} << 20;

struct GlobalConfig
{
    PrecisionBits bits = 128;
    std::uint64_t seed = 0;
    Format format = Format::plain;
};

// ---------------------------------------------------------------------------
// Records

/// One output field. Strings marked `exact` are fractions and are always
/// quoted in CSV; other strings are quoted only when they need it.
struct Field
{
    std::string key;
    json value;
    bool exact = false;
};

using Record = std::vector<Field>;

Field exact_field(std::string key, const Rational& q)
{
    return {std::move(key), to_string(q), true};
}

Field real_field(std::string key, const Real& x, PrecisionBits bits)
{
    return {std::move(key), x.rounded(bits).str(Real::digits_for(bits)), false};
}

std::string csv_quote(const std::string& text)
{
    std::string out = "\"";
    for (char ch : text)
    {
        if (ch == '"')
        {
            out += '"';
        }
        out += ch;
    }
    return out + "\"";
}

std::string csv_cell(const Field& field)
{
    const json& v = field.value;
    if (v.is_null())
    {
        return "";
    }
    if (v.is_boolean())
    {
        return v.get<bool>() ? "true" : "false";
    }
    if (v.is_array())
    {
        std::string joined = "[";
        for (std::size_t i = 0; i < v.size(); ++i)
        {
            joined += (i ? "," : "") + v[i].get<std::string>();
        }
        return csv_quote(joined + "]");
    }
    if (v.is_string())
    {
        const auto& s = v.get_ref<const std::string&>();
        const bool needs = field.exact || s.find_first_of(",\"\n") != std::string::npos;
        return needs ? csv_quote(s) : s;
    }
    return v.dump();
}

void write_csv(const std::vector<Record>& records, std::ostream& out)
{
    if (records.empty())
    {
        return;
    }
    for (std::size_t i = 0; i < records.front().size(); ++i)
    {
        out << (i ? "," : "") << records.front()[i].key;
    }
    out << '\n';
    for (const auto& record : records)
    {
        for (std::size_t i = 0; i < record.size(); ++i)
        {
            out << (i ? "," : "") << csv_cell(record[i]);
        }
        out << '\n';
    }
}

void write_json_lines(const std::vector<Record>& records, std::ostream& out)
{
    for (const auto& record : records)
    {
        json object = json::object();
        for (const auto& field : record)
        {
            object[field.key] = field.value;
        }
        out << object.dump() << '\n';
    }
}

/// Machine formats are shared; plain output is command-specific and
/// handled by the caller when this returns false.
bool write_machine(const GlobalConfig& cfg, const std::vector<Record>& records,
                   std::ostream& out)
{
    switch (cfg.format)
    {
    case Format::csv:
        write_csv(records, out);
        return true;
    case Format::json_lines:
        write_json_lines(records, out);
        return true;
    case Format::plain:
        break;
    }
    return false;
}

std::string plain_value(const json& v)
{
    return v.is_string() ? v.get<std::string>() : v.dump();
}

// ---------------------------------------------------------------------------
// Argument helpers

std::array<Rational, 3> parse_triple(const std::string& text, const char* flag)
{
    std::vector<std::string> parts;
    std::string current;
    for (char ch : text)
    {
        if (ch == ',')
        {
            parts.push_back(current);
            current.clear();
        }
        else
        {
            current += ch;
        }
    }
    parts.push_back(current);
    if (parts.size() != 3)
    {
        throw ParseError(std::string(flag) + " expects three comma-separated values, got '"
                         + text + "'");
    }
    return {parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2])};
}

Params parse_params(const std::string& text)
{
    const auto v = parse_triple(text, "--params");
    return {v[0], v[1], v[2]};
}

Spec parse_spec(const std::string& spec_text, const std::string& params_text)
{
    const auto v = parse_triple(spec_text, "--spec");
    return {v[0], v[1], v[2], parse_params(params_text)};
}

GeoInit parse_init(const std::string& text)
{
    const auto v = parse_triple(text, "--init");
    return {v[0], v[1], v[2]};
}

// ---------------------------------------------------------------------------
// term

struct TermArgs
{
    std::string spec;
    std::string params;
    std::size_t n = 0;
    std::string method = "iter";
};

int cmd_term(const GlobalConfig& cfg, const TermArgs& args, std::ostream& out)
{
    const Spec spec = parse_spec(args.spec, args.params);
    const auto matrix_value = [&] {
        // M^(n-1) is undefined at n = 0; the iteration gives H_0 = a directly.
        return args.n == 0 ? term_iterative(spec, 0) : term_matrix(spec, args.n);
    };

    std::vector<Record> records;
    const auto row = [&](const char* method, Field value) {
        value.key = "value";
        records.push_back({{"method", method}, {"n", args.n}, std::move(value)});
    };

    if (args.method != "all")
    {
        if (args.method == "iter")
        {
            row("iter", exact_field("", term_iterative(spec, args.n)));
        }
        else if (args.method == "matrix")
        {
            row("matrix", exact_field("", matrix_value()));
        }
        else
        {
            row("binet", real_field("", binet_term(spec, args.n, cfg.bits), cfg.bits));
        }
        if (!write_machine(cfg, records, out))
        {
            out << plain_value(records.front()[2].value) << '\n';
        }
        return kSuccess;
    }

    const Rational iter = term_iterative(spec, args.n);
    const Rational matrix = matrix_value();
    const Real binet = binet_term(spec, args.n, cfg.bits);
    const Real tol = Real::exp2i(-static_cast<long>(cfg.bits / 2), cfg.bits);
    const bool agree = iter == matrix && relative_error(binet, iter) <= tol;

    row("iter", exact_field("", iter));
    row("matrix", exact_field("", matrix));
    row("binet", real_field("", binet, cfg.bits));
    for (auto& record : records)
    {
        record.push_back({"agree", agree});
    }
    if (!write_machine(cfg, records, out))
    {
        for (const auto& record : records)
        {
            out << std::left << std::setw(8) << record[0].value.get<std::string>()
                << plain_value(record[2].value) << '\n';
        }
        out << std::setw(8) << "verdict" << (agree ? "agree" : "disagree") << '\n';
    }
    return agree ? kSuccess : kCheckFailed;
}

// ---------------------------------------------------------------------------
// geomean

struct GeomeanArgs
{
    std::string init;
    std::size_t n = 0;
    std::string mode = "exponents";
};

int cmd_geomean(const GlobalConfig& cfg, const GeomeanArgs& args, std::ostream& out)
{
    if (args.mode == "exponents")
    {
        const ExponentTriple triple = geo_exponents(args.n);
        const auto e = triple.exponents();
        const std::vector<Record> records{{{"n", args.n},
                                           exact_field("a", e[0]),
                                           exact_field("b", e[1]),
                                           exact_field("c", e[2]),
                                           {"text", triple.to_string()}}};
        if (!write_machine(cfg, records, out))
        {
            out << triple.to_string() << '\n';
        }
        return kSuccess;
    }

    if (args.init.empty())
    {
        throw UsageError("--init is required for mode " + args.mode);
    }
    const GeoInit init = parse_init(args.init);
    init.validate();

    if (args.mode == "value")
    {
        const Real symbolic = geo_term_symbolic(init, args.n, cfg.bits);
        const Real iterative = geo_term_iterative(init, args.n, cfg.bits);
        const std::vector<Record> records{{{"n", args.n},
                                           real_field("symbolic", symbolic, cfg.bits),
                                           real_field("iterative", iterative, cfg.bits)}};
        if (!write_machine(cfg, records, out))
        {
            out << plain_value(records.front()[1].value) << '\n';
        }
        return kSuccess;
    }

    std::vector<Record> records;
    for (const auto& row : growth_trace(init, args.n, cfg.bits))
    {
        records.push_back({{"n", row.n},
                           real_field("ratio", row.ratio, cfg.bits),
                           real_field("deviation", row.deviation, cfg.bits)});
    }
    if (cfg.format == Format::json_lines)
    {
        write_json_lines(records, out);
    }
    else
    {
        write_csv(records, out);
    }
    return kSuccess;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs
{
    bool all = false;
    std::vector<std::string> ids;
    std::size_t cases = 10;
    std::optional<std::string> lambda;
    std::optional<std::size_t> n;
    std::optional<std::size_t> m;
    std::optional<std::string> spec;
    std::optional<std::string> params;

    bool single() const { return lambda || n || m || spec || params; }
};

template <typename T>
const T& require(const std::optional<T>& value, const char* flag, IdentityId id)
{
    if (!value)
    {
        throw UsageError(std::string(flag) + " is required for --id "
                         + std::string(to_string(id)));
    }
    return *value;
}

IdentityReport single_check(IdentityId id, const VerifyArgs& a)
{
    const auto family = [&] { return LambdaFamily(parse_rational(require(a.lambda, "--lambda", id))); };
    const auto n = [&] { return require(a.n, "--n", id); };
    switch (id)
    {
    case IdentityId::E4_ADDITION:
        return check_addition(parse_spec(require(a.spec, "--spec", id),
                                         require(a.params, "--params", id)),
                              n(), require(a.m, "--m", id));
    case IdentityId::E5_SQUARE_H:
        return check_square_h(parse_params(require(a.params, "--params", id)), n());
    case IdentityId::E6_SQUARE_HORADAM:
        return check_square_horadam(parse_spec(require(a.spec, "--spec", id),
                                               require(a.params, "--params", id)),
                                    n());
    case IdentityId::I1:
        return check_i1(n());
    case IdentityId::I2:
        return check_i2(n());
    case IdentityId::I3:
        return check_i3(n());
    case IdentityId::PROP1:
        return check_prop1(family(), n());
    case IdentityId::PROP2:
        return check_prop2(family(), n());
    case IdentityId::SIMILARITY_N10:
        return check_similarity(family());
    case IdentityId::REMARK_TRIB:
        return check_remark_trib(n());
    case IdentityId::REMARK_LAMBDA1:
        return check_remark_lambda1(n());
    case IdentityId::D_SEQ_PROOF2:
        return check_d_sequence(family(), n());
    }
    throw UsageError("unhandled identity");
}

Record report_record(const IdentityReport& report)
{
    json inputs = json::object();
    for (const auto& [key, value] : report.inputs)
    {
        inputs[key] = value;
    }
    const auto side = [](const std::vector<Rational>& values) -> json {
        if (values.size() == 1)
        {
            return to_string(values.front());
        }
        json list = json::array();
        for (const auto& v : values)
        {
            list.push_back(to_string(v));
        }
        return list;
    };
    return {{"identity_id", std::string(to_string(report.id))},
            {"inputs", std::move(inputs)},
            {"lhs", side(report.lhs), true},
            {"rhs", side(report.rhs), true},
            {"pass", report.pass}};
}

int cmd_verify(const GlobalConfig& cfg, const VerifyArgs& args, std::ostream& out,
               std::ostream& err)
{
    if (args.all == !args.ids.empty())
    {
        throw UsageError("verify needs exactly one of --all or --id");
    }
    std::vector<IdentityId> ids;
    for (const auto& text : args.ids)
    {
        const auto id = parse_identity_id(text);
        if (!id)
        {
            throw UsageError("unknown identity id '" + text + "'");
        }
        ids.push_back(*id);
    }

    std::vector<IdentityReport> reports;
    if (args.single())
    {
        if (ids.size() != 1)
        {
            throw UsageError("per-identity inputs need exactly one --id");
        }
        reports.push_back(single_check(ids.front(), args));
    }
    else
    {
        if (args.cases == 0)
        {
            throw UsageError("--cases must be at least 1");
        }
        reports = run_catalog(cfg.seed, args.cases, ids);
    }

    if (cfg.format == Format::plain)
    {
        for (const auto& report : reports)
        {
            out << format_record(report) << '\n';
        }
    }
    else
    {
        std::vector<Record> records;
        records.reserve(reports.size());
        for (const auto& report : reports)
        {
            records.push_back(report_record(report));
        }
        if (cfg.format == Format::csv)
        {
            // The inputs object flattens to the k=v;k=v form used by plain output.
            for (auto& record : records)
            {
                std::string flat;
                for (const auto& [key, value] : record[1].value.items())
                {
                    flat += (flat.empty() ? "" : ";") + key + "=" + value.get<std::string>();
                }
                record[1].value = flat;
            }
        }
        write_machine(cfg, records, out);
    }

    std::size_t failed = 0;
    for (const auto& report : reports)
    {
        failed += report.pass ? 0 : 1;
    }
    err << reports.size() << " reports, " << failed << " failed\n";
    return failed == 0 ? kSuccess : kCheckFailed;
}

// ---------------------------------------------------------------------------
// roots

int cmd_roots(const GlobalConfig& cfg, const std::string& params_text, std::ostream& out)
{
    const Params params = parse_params(params_text);
    const CubicRoots roots = solve_cubic(params, cfg.bits);
    const VietaResiduals vieta = vieta_residuals(roots, params);
    const PrecisionBits bits = cfg.bits;

    const std::vector<Record> records{{exact_field("delta", roots.delta),
                                       real_field("alpha", roots.alpha, bits),
                                       real_field("omega1_re", roots.omega1.re, bits),
                                       real_field("omega1_im", roots.omega1.im, bits),
                                       real_field("omega2_re", roots.omega2.re, bits),
                                       real_field("omega2_im", roots.omega2.im, bits),
                                       real_field("vieta_sum", vieta.sum, bits),
                                       real_field("vieta_pair_sum", vieta.pair_sum, bits),
                                       real_field("vieta_product", vieta.product, bits)}};
    if (write_machine(cfg, records, out))
    {
        return kSuccess;
    }
    const auto& r = records.front();
    const auto complex_text = [&](std::size_t re, std::size_t im) {
        std::string imag = plain_value(r[im].value);
        const bool negative = !imag.empty() && imag.front() == '-';
        return plain_value(r[re].value) + (negative ? " - " : " + ")
               + (negative ? imag.substr(1) : imag) + "i";
    };
    out << std::left << std::setw(16) << "delta" << plain_value(r[0].value) << '\n'
        << std::setw(16) << "alpha" << plain_value(r[1].value) << '\n'
        << std::setw(16) << "omega1" << complex_text(2, 3) << '\n'
        << std::setw(16) << "omega2" << complex_text(4, 5) << '\n';
    for (std::size_t i = 6; i < r.size(); ++i)
    {
        out << std::setw(16) << r[i].key << plain_value(r[i].value) << '\n';
    }
    return kSuccess;
}

// ---------------------------------------------------------------------------
// bench

inline constexpr std::uint64_t kBenchMatrixCap = 10'000'000;
inline constexpr std::uint64_t kBenchIterCap = 100'000;

struct BenchArgs
{
    std::vector<std::uint64_t> n;
    std::vector<std::string> methods{"iter", "matrix"};
};

int cmd_bench(const GlobalConfig& cfg, const BenchArgs& args, std::ostream& out)
{
    for (const auto& method : args.methods)
    {
        for (std::uint64_t n : args.n)
        {
            if (method == "matrix" && (n == 0 || n > kBenchMatrixCap))
            {
                throw CapExceeded("matrix bench needs 1 <= n <= "
                                  + std::to_string(kBenchMatrixCap) + ", got "
                                  + std::to_string(n));
            }
            if (method == "iter" && n > kBenchIterCap)
            {
                throw CapExceeded("iter bench needs n <= " + std::to_string(kBenchIterCap)
                                  + ", got " + std::to_string(n));
            }
        }
    }

    const auto spec = t_spec<Integer>();
    std::vector<Record> records;
    for (const auto& method : args.methods)
    {
        for (std::uint64_t n : args.n)
        {
            PowerStats stats;
            const auto start = std::chrono::steady_clock::now();
            const Integer value = method == "matrix" ? term_matrix(spec, n, &stats)
                                                     : term_iterative(spec, n);
            const std::chrono::duration<double> elapsed =
                std::chrono::steady_clock::now() - start;

            Record record{{"method", method},
                          {"n", n},
                          {"wall_time", elapsed.count()},
                          {"result_bit_length", bit_length(value)},
                          {"matrix_mults", nullptr},
                          {"mult_bound", nullptr}};
            if (method == "matrix")
            {
                record[4].value = stats.multiplications;
                record[5].value = 2.0 * std::log2(static_cast<double>(n));
            }
            records.push_back(std::move(record));
        }
    }
    if (cfg.format == Format::json_lines)
    {
        write_json_lines(records, out);
    }
    else
    {
        write_csv(records, out);
    }
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Third-order Horadam sequences, geometric-mean recurrences and "
                 "identity checks",
                 "horadam"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalConfig cfg;
    app.add_option("--precision", cfg.bits, "Mantissa bits for real-valued output")
        ->envname(kPrecisionEnv)
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "Seed for randomized checks")->capture_default_str();
    app.add_option("--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Format>{{"plain", Format::plain},
                                          {"json-lines", Format::json_lines},
                                          {"json", Format::json_lines},
                                          {"csv", Format::csv}}));

    TermArgs term;
    auto* term_cmd = app.add_subcommand("term", "Compute H_n by iteration, matrix power or Binet");
    term_cmd->add_option("--spec", term.spec, "Initial values a,b,c")->required();
    term_cmd->add_option("--params", term.params, "Coefficients r,s,t")->required();
    term_cmd->add_option("--n", term.n, "Index")->required();
    term_cmd->add_option("--method", term.method)
        ->check(CLI::IsMember({"iter", "matrix", "binet", "all"}))
        ->capture_default_str();

    GeomeanArgs geo;
    auto* geo_cmd = app.add_subcommand("geomean", "Geometric-mean sequence");
    geo_cmd->add_option("--init", geo.init, "Positive initial values a,b,c");
    geo_cmd->add_option("--n", geo.n, "Index (last index for trace)")->required();
    geo_cmd->add_option("--mode", geo.mode)
        ->check(CLI::IsMember({"exponents", "value", "trace"}))
        ->capture_default_str();

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check identities exactly");
    verify_cmd->add_flag("--all", verify.all, "Run the whole catalog");
    verify_cmd->add_option("--id", verify.ids, "Identity id (repeatable)");
    verify_cmd->add_option("--cases", verify.cases, "Cases per identity")
        ->capture_default_str();
    verify_cmd->add_option("--lambda", verify.lambda);
    verify_cmd->add_option("--n", verify.n);
    verify_cmd->add_option("--m", verify.m);
    verify_cmd->add_option("--spec", verify.spec);
    verify_cmd->add_option("--params", verify.params);

    std::string roots_params;
    auto* roots_cmd = app.add_subcommand("roots", "Discriminant and characteristic roots");
    roots_cmd->add_option("--params", roots_params, "Coefficients r,s,t")->required();

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "Time T_n by iteration and matrix power");
    bench_cmd->add_option("--n", bench.n, "Comma-separated indices")
        ->delimiter(',')
        ->required();
    bench_cmd->add_option("--methods", bench.methods)
        ->delimiter(',')
        ->check(CLI::IsMember({"iter", "matrix"}));

    std::vector<std::string> tail(args.size() > 1 ? args.begin() + 1 : args.end(),
                                  args.end());
    std::reverse(tail.begin(), tail.end());
    try
    {
        app.parse(tail);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try
    {
        // Checked here rather than by a CLI11 validator so that a bad value
        // from the environment is rejected the same way as a bad flag.
        if (cfg.bits < kMinPrecisionBits || cfg.bits > kMaxPrecisionBits)
        {
            throw UsageError("--precision must be in [" + std::to_string(kMinPrecisionBits)
                             + ", " + std::to_string(kMaxPrecisionBits) + "], got "
                             + std::to_string(cfg.bits));
        }
        if (*term_cmd)
        {
            return cmd_term(cfg, term, out);
        }
        if (*geo_cmd)
        {
            return cmd_geomean(cfg, geo, out);
        }
        if (*verify_cmd)
        {
            return cmd_verify(cfg, verify, out, err);
        }
        if (*roots_cmd)
        {
            return cmd_roots(cfg, roots_params, out);
        }
        return cmd_bench(cfg, bench, out);
    }
    catch (const ParseError& e)
    {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    catch (const UsageError& e)
    {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    catch (const IndexError& e)
    {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    catch (const CapExceeded& e)
    {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    catch (const InconsistencyError& e)
    {
        err << "check failed: " << e.what() << '\n';
        return kCheckFailed;
    }
    catch (const Error& e)
    {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }
}

}  // namespace horadam::cli
