#include "stirdet/cli.hpp"

#include "stirdet/combinatorics.hpp"
#include "stirdet/genfun.hpp"
#include "stirdet/report.hpp"
#include "stirdet/schur.hpp"
#include "stirdet/stirling_dets.hpp"
#include "stirdet/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace stirdet {
namespace {

using nlohmann::json;

/// Bad input detected after CLI11 parsing succeeded; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "text";
    bool quiet = false;

    int stirling_kind = 1;
    int n = 0;
    int k = 0;
    int a = 0;
    int b = 0;
    std::string matrix_kind;
    std::string method;
    std::string lambda_csv;
    std::string alphabet_csv;
    int guard = 10;
    int max = 6;
    int report_max = 10;
    std::string out_file;
};

std::vector<std::string> split_csv(const std::string& text)
{
    std::vector<std::string> out;
    if (text.empty()) {
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(item);
    }
    if (text.back() == ',') {
        out.emplace_back();
    }
    return out;
}

Partition parse_partition(const std::string& csv)
{
    std::vector<int> parts;
    for (const auto& item : split_csv(csv)) {
        const ExactInt v = parse_int(item);
        if (!v.fits_sint_p()) {
            throw std::invalid_argument("partition part out of range: " + item);
        }
        parts.push_back(static_cast<int>(v.get_si()));
    }
    return Partition(std::move(parts));
}

Alphabet parse_alphabet(const std::string& csv)
{
    Alphabet alpha;
    for (const auto& item : split_csv(csv)) {
        alpha.values.push_back(parse_int(item));
    }
    return alpha;
}

json strings(const std::vector<ExactInt>& values)
{
    json out = json::array();
    for (const auto& v : values) {
        out.push_back(v.get_str());
    }
    return out;
}

json strings(const std::vector<ExactRat>& values)
{
    json out = json::array();
    for (const auto& v : values) {
        out.push_back(v.get_str());
    }
    return out;
}

void print_value(const Options& o, std::ostream& out, const ExactInt& value, json fields)
{
    if (o.format == "json") {
        fields["value"] = value.get_str();
        out << fields.dump() << '\n';
    } else {
        out << value.get_str() << '\n';
    }
}

int cmd_stirling(const Options& o, std::ostream& out)
{
    if (o.n < 0) {
        throw UsageError("stirling: n must be nonnegative");
    }
    const ExactInt v = o.stirling_kind == 1 ? stirling1_unsigned(o.n, o.k) : stirling2(o.n, o.k);
    print_value(o, out, v,
                {{"kind", std::to_string(o.stirling_kind)}, {"n", std::to_string(o.n)}, {"k", std::to_string(o.k)}});
    return kExitOk;
}

int cmd_matrix(const Options& o, std::ostream& out)
{
    const MatrixKind kind = o.matrix_kind == "M" ? MatrixKind::first_kind_M : MatrixKind::second_kind_N;
    const IntMatrix m = build_matrix({kind, o.n, o.a, o.b});
    if (o.format == "json") {
        json rows = json::array();
        for (std::size_t i = 0; i < m.size(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < m.size(); ++j) {
                row.push_back(m(i, j).get_str());
            }
            rows.push_back(std::move(row));
        }
        out << json{{"kind", o.matrix_kind},
                    {"n", std::to_string(o.n)},
                    {"a", std::to_string(o.a)},
                    {"b", std::to_string(o.b)},
                    {"rows", std::move(rows)}}
                   .dump()
            << '\n';
        return kExitOk;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            out << (j ? " " : "") << m(i, j).get_str();
        }
        out << '\n';
    }
    return kExitOk;
}

json triple_fields(const Options& o, std::string_view method)
{
    return {{"n", std::to_string(o.n)},
            {"a", std::to_string(o.a)},
            {"b", std::to_string(o.b)},
            {"method", std::string(method)}};
}

int cmd_beta(const Options& o, std::ostream& out)
{
    const auto method = parse_beta_method(o.method);
    if (!method) {
        throw UsageError("beta: unknown method '" + o.method + "'");
    }
    print_value(o, out, beta(o.n, o.a, o.b, *method), triple_fields(o, o.method));
    return kExitOk;
}

int cmd_gamma(const Options& o, std::ostream& out)
{
    const auto method = parse_gamma_method(o.method);
    if (!method) {
        throw UsageError("gamma: unknown method '" + o.method + "'");
    }
    print_value(o, out, gamma(o.n, o.a, o.b, *method), triple_fields(o, o.method));
    return kExitOk;
}

int cmd_schur(const Options& o, std::ostream& out)
{
    SchurMethod method;
    if (o.method == "bialternant") {
        method = SchurMethod::bialternant;
    } else if (o.method == "jacobi_trudi_h") {
        method = SchurMethod::jacobi_trudi_h;
    } else if (o.method == "naegelsbach_e") {
        method = SchurMethod::naegelsbach_e;
    } else {
        throw UsageError("schur: unknown method '" + o.method + "'");
    }
    const Partition lambda = parse_partition(o.lambda_csv);
    const Alphabet alpha = parse_alphabet(o.alphabet_csv);
    json fields = {{"lambda", json(lambda.parts())}, {"alphabet", strings(alpha.values)}, {"method", o.method}};
    print_value(o, out, schur_eval(lambda, alpha, method), std::move(fields));
    return kExitOk;
}

int cmd_genfun(const Options& o, std::ostream& out)
{
    const RationalFunction rf = fit_generating_function(o.a, o.b, o.guard);
    if (o.format == "json") {
        json factors = json::array();
        for (const auto& r : rf.den_rates()) {
            factors.push_back(json::array({"1", ExactInt(-r).get_str()}));
        }
        out << json{{"a", std::to_string(o.a)},
                    {"b", std::to_string(o.b)},
                    {"guard", std::to_string(o.guard)},
                    {"num", strings(rf.num().coeffs())},
                    {"den", strings(rf.den().coeffs())},
                    {"den_factors", std::move(factors)},
                    {"cancelled_rates", strings(cancelled_rates(rf))}}
                   .dump()
            << '\n';
    } else {
        out << to_text(rf) << '\n';
    }
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    if (o.max < 0) {
        throw UsageError("verify: --max must be nonnegative");
    }
    const auto checks = run_verification(o.max);
    const bool passed = std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
    if (!o.quiet) {
        if (o.format == "json") {
            json list = json::array();
            for (const auto& c : checks) {
                list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
            }
            out << json{{"status", passed ? "pass" : "fail"}, {"max", std::to_string(o.max)}, {"checks", list}}.dump(2)
                << '\n';
        } else {
            for (const auto& c : checks) {
                out << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.detail << ")\n";
            }
            out << "status=" << (passed ? "pass" : "fail") << '\n';
        }
    }
    return passed ? kExitOk : kExitVerificationFailure;
}

int cmd_report(const Options& o, std::ostream& out, std::ostream& err)
{
    const Report report = generate_report(o.report_max);
    const std::string rendered = o.format == "json" ? render_json(report) : render_text(report);
    if (!o.out_file.empty()) {
        std::ofstream file(o.out_file, std::ios::binary);
        if (!file) {
            err << "error: cannot open '" << o.out_file << "' for writing\n";
            return kExitUsage;
        }
        file << rendered;
    } else if (!o.quiet) {
        out << rendered;
    }
    return report.passed() ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Exact Stirling determinants, Schur evaluations and generating functions", "stirdet"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--quiet", o.quiet, "Suppress report and verify output; rely on the exit code");

    auto* stirling = app.add_subcommand("stirling", "Stirling number: 1 = unsigned first kind, 2 = second kind");
    stirling->add_option("kind", o.stirling_kind)->required()->check(CLI::IsMember({1, 2}));
    stirling->add_option("n", o.n)->required();
    stirling->add_option("k", o.k)->required();

    auto* matrix = app.add_subcommand("matrix", "Print M_n(a,b) or N_n(a,b)");
    matrix->add_option("kind", o.matrix_kind)->required()->check(CLI::IsMember({"M", "N"}));
    matrix->add_option("n", o.n)->required()->check(CLI::NonNegativeNumber);
    matrix->add_option("a", o.a)->required()->check(CLI::NonNegativeNumber);
    matrix->add_option("b", o.b)->required()->check(CLI::NonNegativeNumber);

    auto* beta_cmd = app.add_subcommand("beta", "det M_n(a,b)");
    auto* gamma_cmd = app.add_subcommand("gamma", "det N_n(a,b)");
    for (auto* sub : {beta_cmd, gamma_cmd}) {
        sub->add_option("n", o.n)->required()->check(CLI::NonNegativeNumber);
        sub->add_option("a", o.a)->required()->check(CLI::NonNegativeNumber);
        sub->add_option("b", o.b)->required()->check(CLI::NonNegativeNumber);
        sub->add_option("--method", o.method, "Evaluation route (default direct)");
    }

    auto* schur = app.add_subcommand("schur", "Evaluate s_lambda at an integer alphabet");
    schur->add_option("lambda", o.lambda_csv, "Comma-separated parts, e.g. 2,2 (empty string for ())")->required();
    schur->add_option("alphabet", o.alphabet_csv, "Comma-separated integers, e.g. 1,2,3")->required();
    schur->add_option("--method", o.method, "bialternant | jacobi_trudi_h | naegelsbach_e");

    auto* genfun = app.add_subcommand("genfun", "Fit sum_n beta_n(a,b) q^n over the product denominator");
    genfun->add_option("a", o.a)->required()->check(CLI::NonNegativeNumber);
    genfun->add_option("b", o.b)->required()->check(CLI::NonNegativeNumber);
    genfun->add_option("--guard", o.guard, "Extra vanishing coefficients to check")->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "Run the invariant suite");
    verify->add_option("--max", o.max, "Range scale (default 6)")->check(CLI::NonNegativeNumber);

    auto* report = app.add_subcommand("report", "Sweep max >= n >= a >= b >= 0");
    report->add_option("--max", o.report_max, "Sweep bound (default 10)")->check(CLI::NonNegativeNumber);
    report->add_option("--out", o.out_file, "Write the report here instead of standard output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
        return kExitUsage;
    }

    if (o.method.empty()) {
        o.method = schur->parsed() ? "bialternant" : "direct";
    }

    try {
        if (stirling->parsed()) return cmd_stirling(o, out);
        if (matrix->parsed()) return cmd_matrix(o, out);
        if (beta_cmd->parsed()) return cmd_beta(o, out);
        if (gamma_cmd->parsed()) return cmd_gamma(o, out);
        if (schur->parsed()) return cmd_schur(o, out);
        if (genfun->parsed()) return cmd_genfun(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        if (report->parsed()) return cmd_report(o, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const FitFailure& e) {
        err << "fit failure: " << e.what() << '\n';
        return kExitVerificationFailure;
    } catch (const ExactnessViolation& e) {
        err << "internal exactness violation: " << e.what() << '\n';
        return kExitVerificationFailure;
    }
    err << "error: no subcommand\n" << app.help();
    return kExitUsage;
}

}  // namespace stirdet
