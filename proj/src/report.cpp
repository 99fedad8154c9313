#include "stirdet/report.hpp"

#include "stirdet/combinatorics.hpp"
#include "stirdet/stirling_dets.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>
#include <utility>

namespace stirdet {
namespace {

using nlohmann::json;

std::string join_values(const std::vector<ExactInt>& values)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += (i ? "," : "") + values[i].get_str();
    }
    return out;
}

void fill_cell(ReportCell& cell)
{
    std::ostringstream failure;
    cell.methods_agree = true;
    try {
        std::vector<ExactInt> betas;
        for (auto m : kAllBetaMethods) {
            betas.push_back(beta(cell.n, cell.a, cell.b, m));
        }
        std::vector<ExactInt> gammas;
        for (auto m : kAllGammaMethods) {
            gammas.push_back(gamma(cell.n, cell.a, cell.b, m));
        }
        cell.beta = betas.front();
        cell.gamma = gammas.front();
        if (std::adjacent_find(betas.begin(), betas.end(), std::not_equal_to<>()) != betas.end()) {
            cell.methods_agree = false;
            failure << "beta methods disagree: " << join_values(betas) << "; ";
        }
        if (std::adjacent_find(gammas.begin(), gammas.end(), std::not_equal_to<>()) != gammas.end()) {
            cell.methods_agree = false;
            failure << "gamma methods disagree: " << join_values(gammas) << "; ";
        }
    } catch (const std::exception& e) {
        cell.methods_agree = false;
        failure << e.what() << "; ";
    }
    cell.failure = failure.str();
}

struct Group {
    int a;
    int b;
    std::vector<ReportCell> cells;
};

void fill_group(Group& group, int max, int guard)
{
    for (int n = group.a; n <= max; ++n) {
        ReportCell cell;
        cell.n = n;
        cell.a = group.a;
        cell.b = group.b;
        fill_cell(cell);
        group.cells.push_back(std::move(cell));
    }
    ReportCell& last = group.cells.back();
    try {
        last.genfun = fit_generating_function(group.a, group.b, guard);
    } catch (const std::exception& e) {
        last.genfun_ok = false;
        last.failure += std::string("genfun: ") + e.what() + "; ";
    }
}

json int_array(const std::vector<ExactInt>& values)
{
    json out = json::array();
    for (const auto& v : values) {
        out.push_back(v.get_str());
    }
    return out;
}

json rat_array(const std::vector<ExactRat>& values)
{
    json out = json::array();
    for (const auto& v : values) {
        out.push_back(v.get_str());
    }
    return out;
}

json genfun_json(const ReportCell& cell)
{
    const auto& rf = *cell.genfun;
    json factors = json::array();
    for (const auto& r : rf.den_rates()) {
        factors.push_back(json::array({"1", ExactInt(-r).get_str()}));
    }
    return {
        {"a", std::to_string(cell.a)},
        {"b", std::to_string(cell.b)},
        {"num", rat_array(rf.num().coeffs())},
        {"den", rat_array(rf.den().coeffs())},
        {"den_factors", std::move(factors)},
        {"cancelled_rates", int_array(cancelled_rates(rf))},
    };
}

int parse_small(const json& j, const char* key)
{
    const auto& v = j.at(key);
    if (!v.is_string()) {
        throw std::invalid_argument(std::string("report json: '") + key + "' must be a string");
    }
    const ExactInt parsed = parse_int(v.get<std::string>());
    if (!parsed.fits_sint_p()) {
        throw std::invalid_argument(std::string("report json: '") + key + "' out of range");
    }
    return static_cast<int>(parsed.get_si());
}

RationalFunction parse_genfun(const json& j)
{
    std::vector<ExactRat> num;
    for (const auto& c : j.at("num")) {
        num.push_back(parse_rat(c.get<std::string>()));
    }
    std::vector<ExactInt> rates;
    for (const auto& f : j.at("den_factors")) {
        if (!f.is_array() || f.size() != 2 || f[0].get<std::string>() != "1") {
            throw std::invalid_argument("report json: den_factors entries must be [\"1\", \"-r\"]");
        }
        rates.push_back(-parse_int(f[1].get<std::string>()));
    }
    return RationalFunction::from_rates(Poly(std::move(num)), std::move(rates));
}

}  // namespace

bool Report::passed() const
{
    return std::all_of(cells.begin(), cells.end(), [](const ReportCell& c) { return c.ok(); });
}

Report generate_report(int max, unsigned threads, int guard)
{
    if (max < 0) {
        throw DomainError("generate_report: max must be nonnegative");
    }
    std::vector<Group> groups;
    for (int a = 0; a <= max; ++a) {
        for (int b = 0; b <= a; ++b) {
            groups.push_back({a, b, {}});
        }
    }
    // Largest denominators first so the long fits start early.
    std::vector<std::size_t> order(groups.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
        return binomial(groups[l].a, groups[l].b) > binomial(groups[r].a, groups[r].b);
    });

    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < order.size(); i = next++) {
            fill_group(groups[order[i]], max, guard);
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }

    Report report;
    report.max = max;
    for (auto& g : groups) {
        for (auto& c : g.cells) {
            report.cells.push_back(std::move(c));
        }
    }
    return report;
}

std::string render_text(const Report& report)
{
    std::ostringstream os;
    for (const auto& c : report.cells) {
        os << "n=" << c.n << " a=" << c.a << " b=" << c.b << " beta=" << c.beta.get_str()
           << " gamma=" << c.gamma.get_str() << " ok=" << (c.ok() ? "true" : "false") << '\n';
        if (!c.failure.empty()) {
            os << "failure n=" << c.n << " a=" << c.a << " b=" << c.b << ' ' << c.failure << '\n';
        }
        if (c.genfun) {
            os << "genfun a=" << c.a << " b=" << c.b << " num=" << coeffs_csv(c.genfun->num())
               << " den=" << factors_text(c.genfun->den_rates()) << '\n';
        }
    }
    os << "status=" << (report.passed() ? "pass" : "fail") << " max=" << report.max
       << " cells=" << report.cells.size() << '\n';
    return os.str();
}

std::string render_json(const Report& report)
{
    json cells = json::array();
    json genfuns = json::array();
    for (const auto& c : report.cells) {
        json cell = {
            {"n", std::to_string(c.n)},
            {"a", std::to_string(c.a)},
            {"b", std::to_string(c.b)},
            {"beta", c.beta.get_str()},
            {"gamma", c.gamma.get_str()},
            {"methods_agree", c.methods_agree},
            {"genfun_ok", c.genfun_ok},
            {"ok", c.ok()},
        };
        if (!c.failure.empty()) {
            cell["failure"] = c.failure;
        }
        cells.push_back(std::move(cell));
        if (c.genfun) {
            json g = genfun_json(c);
            g["n"] = std::to_string(c.n);
            genfuns.push_back(std::move(g));
        }
    }
    json top = {
        {"status", report.passed() ? "pass" : "fail"},
        {"max", std::to_string(report.max)},
        {"cells", std::move(cells)},
        {"genfuns", std::move(genfuns)},
    };
    return top.dump(2) + "\n";
}

Report parse_report_json(const std::string& text)
{
    try {
        const json top = json::parse(text);
        Report report;
        report.max = parse_small(top, "max");
        for (const auto& j : top.at("cells")) {
            ReportCell cell;
            cell.n = parse_small(j, "n");
            cell.a = parse_small(j, "a");
            cell.b = parse_small(j, "b");
            cell.beta = parse_int(j.at("beta").get<std::string>());
            cell.gamma = parse_int(j.at("gamma").get<std::string>());
            cell.methods_agree = j.at("methods_agree").get<bool>();
            cell.genfun_ok = j.at("genfun_ok").get<bool>();
            cell.failure = j.value("failure", std::string());
            report.cells.push_back(std::move(cell));
        }
        for (const auto& g : top.at("genfuns")) {
            const int n = parse_small(g, "n");
            const int a = parse_small(g, "a");
            const int b = parse_small(g, "b");
            auto it = std::find_if(report.cells.begin(), report.cells.end(), [&](const ReportCell& c) {
                return c.n == n && c.a == a && c.b == b;
            });
            if (it == report.cells.end()) {
                throw std::invalid_argument("report json: genfun without a matching cell");
            }
            it->genfun = parse_genfun(g);
        }
        return report;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("report json: ") + e.what());
    }
}

}  // namespace stirdet
