// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "oracles.hpp"
#include "stirdet/cli.hpp"
#include "stirdet/combinatorics.hpp"
#include "stirdet/genfun.hpp"
#include "stirdet/matrix.hpp"
#include "stirdet/report.hpp"
#include "stirdet/schur.hpp"
#include "stirdet/stirling_dets.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace stirdet;

namespace {

/// Counts cases and keeps the first failure message.
struct Tally {
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first;

    void expect(bool ok, const std::string& what)
    {
        ++cases;
        if (!ok && failures++ == 0) {
            first = what;
        }
    }
    bool ok() const { return failures == 0; }
};

std::string triple(int n, int a, int b)
{
    std::ostringstream os;
    os << "(n,a,b)=(" << n << "," << a << "," << b << ")";
    return os.str();
}

std::string pair(int a, int b) { return "(a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Tally criterion1_beta_five_way()
{
    Tally t;
    const auto start = Clock::now();
    for (int a = 0; a <= 6; ++a) {
        for (int b = 0; b <= a; ++b) {
            const int n_max = a <= 4 ? 10 : 8;
            for (int n = 0; n <= n_max; ++n) {
                const ExactInt reference = beta(n, a, b, BetaMethod::direct);
                for (auto m : kAllBetaMethods) {
                    t.expect(beta(n, a, b, m) == reference, std::string(name(m)) + " at " + triple(n, a, b));
                }
            }
        }
    }
    const double elapsed = seconds_since(start);
    t.expect(elapsed < 60.0, "runtime " + std::to_string(elapsed) + " s exceeds 60 s");
    return t;
}

Tally criterion2_gamma()
{
    Tally t;
    for (int a = 0; a <= 6; ++a) {
        for (int b = 0; b <= a; ++b) {
            const int n_max = a <= 4 ? 10 : 8;
            for (int n = 0; n <= n_max; ++n) {
                t.expect(gamma(n, a, b, GammaMethod::direct) == gamma(n, a, b, GammaMethod::schur_corrected),
                         triple(n, a, b));
            }
        }
    }
    // The alphabet (1..a) gives s_{(1,1)}(1) = 0 at (2,1,0), while det N_2(1,0) = 2.
    const ExactInt literal = schur_eval(Partition::rectangle(1, 2), Alphabet::canonical(1), SchurMethod::bialternant);
    t.expect(literal == 0, "alphabet (1..a) at (2,1,0) expected 0, got " + literal.get_str());
    t.expect(gamma(2, 1, 0, GammaMethod::direct) == 2, "direct gamma at (2,1,0) expected 2");
    t.expect(literal != gamma(2, 1, 0, GammaMethod::direct), "alphabet (1..a) unexpectedly matched");
    return t;
}

Tally criterion3_duality()
{
    Tally t;
    for (int n = 0; n <= 6; ++n) {
        for (int a = 0; a <= 6; ++a) {
            for (int b = 0; b <= 6; ++b) {
                t.expect(beta(n, a + b, b) == gamma(a, n + b, b), triple(n, a, b));
            }
        }
    }
    t.expect(oracle::det_leibniz({{11, 6}, {50, 35}}) == 85, "oracle det [[11,6],[50,35]]");
    t.expect(oracle::det_leibniz({{7, 6}, {15, 25}}) == 85, "oracle det [[7,6],[15,25]]");
    t.expect(beta(2, 3, 1) == 85, "beta_2(3,1) = 85");
    t.expect(gamma(2, 3, 1) == 85, "gamma_2(3,1) = 85");
    return t;
}

Tally criterion4_theorem1()
{
    Tally t;
    for (int a = 0; a <= 5; ++a) {
        for (int b = 0; b <= a; ++b) {
            try {
                const auto rf = fit_generating_function(a, b, 10);
                const long d = binomial(a, b).get_si();
                t.expect(rf.den().degree() == d, "denominator degree at " + pair(a, b));
                t.expect(rf.num().degree() < d, "numerator degree at " + pair(a, b));
                const auto series = series_expand(rf, static_cast<std::size_t>(d + 11));
                for (long n = 0; n <= d + 10; ++n) {
                    t.expect(series[n] == ExactRat(beta(static_cast<int>(n), a, b)),
                             "round trip at " + pair(a, b) + " n=" + std::to_string(n));
                }
            } catch (const FitFailure& e) {
                t.expect(false, e.what());
            }
        }
    }
    const auto rf = fit_generating_function(2, 1, 10);
    t.expect(rf.num() == Poly({ExactRat(1)}), "(2,1) numerator is 1");
    t.expect(rf.den() == Poly({ExactRat(1), ExactRat(-3), ExactRat(2)}), "(2,1) denominator is (1-q)(1-2q)");
    return t;
}

Tally criterion5_partial_fractions()
{
    Tally t;
    for (int a = 0; a <= 5; ++a) {
        for (int b = 0; b <= a; ++b) {
            const auto form = theorem3_partial_fractions(a, b);
            for (int n = 0; n <= 10; ++n) {
                t.expect(form.evaluate(n) == ExactRat(beta(n, a, b)), pair(a, b) + " n=" + std::to_string(n));
            }
            t.expect(form.rate_multiset() == theorem1_rates(a, b), "rate multiset at " + pair(a, b));
            const Poly den = theorem1_denominator(a, b);
            for (const auto& term : form.terms) {
                t.expect(sgn(den.evaluate(make_rat(1, term.rate))) == 0,
                         "1/" + term.rate.get_str() + " is not a root at " + pair(a, b));
            }
        }
    }
    return t;
}

Tally criterion6_specializations()
{
    Tally t;
    for (int big_n = 0; big_n <= 10; ++big_n) {
        const Alphabet alpha = Alphabet::canonical(big_n);
        for (int m = 0; m <= 10; ++m) {
            const std::string where = "m=" + std::to_string(m) + " N=" + std::to_string(big_n);
            t.expect(sym_spec(SymKind::elementary, m, alpha) == stirling1_unsigned(big_n + 1, big_n + 1 - m),
                     "e_m " + where);
            t.expect(sym_spec(SymKind::complete, m, alpha) == stirling2(big_n + m, big_n), "h_m " + where);
        }
    }
    return t;
}

Tally criterion7_core_oracles()
{
    Tally t;
    for (int n = 0; n <= 8; ++n) {
        const auto cycles = oracle::permutations_by_cycles(n);
        const auto blocks = oracle::set_partitions_by_blocks(n);
        for (int k = 0; k <= n; ++k) {
            t.expect(stirling1_unsigned(n, k) == cycles[k], "stirling1 n=" + std::to_string(n));
            t.expect(stirling2(n, k) == blocks[k], "stirling2 n=" + std::to_string(n));
        }
    }

    std::mt19937_64 rng(500);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = rng() % 7;
        IntMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) = entry(rng);
            }
        }
        t.expect(det(m, DetMethod::bareiss) == det(m, DetMethod::laplace), "random det trial " + std::to_string(trial));
    }

    std::vector<ExactInt> rising{ExactInt(1)};
    for (int n = 0; n <= 12; ++n) {
        for (int k = 0; k <= n; ++k) {
            t.expect(rising[k] == stirling1_unsigned(n, k), "rising factorial n=" + std::to_string(n));
        }
        std::vector<ExactInt> next(rising.size() + 1, ExactInt(0));
        for (std::size_t k = 0; k < rising.size(); ++k) {
            next[k] += n * rising[k];
            next[k + 1] += rising[k];
        }
        rising = std::move(next);
    }

    std::vector<ExactInt> bell{ExactInt(1)};
    for (int n = 0; n <= 12; ++n) {
        ExactInt next = 0;
        for (int k = 0; k <= n; ++k) {
            next += oracle::pascal(n, k) * bell[k];
        }
        bell.push_back(next);
        ExactInt row = 0;
        for (int k = 0; k <= n; ++k) {
            row += stirling2(n, k);
        }
        t.expect(row == bell[n], "Bell n=" + std::to_string(n));
    }
    return t;
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

Tally criterion8_sweep()
{
    Tally t;
    std::size_t expected_cells = 0;
    for (int n = 0; n <= 10; ++n) {
        for (int a = 0; a <= n; ++a) {
            for (int b = 0; b <= a; ++b) {
                ++expected_cells;
            }
        }
    }
    t.expect(expected_cells == 286, "brute-force triple count is " + std::to_string(expected_cells));

    const auto dir = std::filesystem::temp_directory_path();
    std::string outputs[2];
    for (int run = 0; run < 2; ++run) {
        const std::string path = (dir / ("stirdet_acceptance_" + std::to_string(run) + ".json")).string();
        std::ostringstream out;
        std::ostringstream err;
        const auto start = Clock::now();
        const int code = run_cli({"report", "--max", "10", "--format", "json", "--out", path}, out, err);
        const double elapsed = seconds_since(start);
        std::cout << "    report --max 10 run " << run + 1 << ": " << elapsed << " s\n";
        t.expect(code == kExitOk, "exit code " + std::to_string(code) + ": " + err.str());
        t.expect(elapsed < 120.0, "runtime " + std::to_string(elapsed) + " s exceeds 120 s");
        outputs[run] = slurp(path);
        std::remove(path.c_str());
    }
    t.expect(!outputs[0].empty() && outputs[0] == outputs[1], "outputs differ between runs");

    const Report report = parse_report_json(outputs[0]);
    t.expect(report.cells.size() == expected_cells, "cell count " + std::to_string(report.cells.size()));
    for (const auto& c : report.cells) {
        t.expect(c.ok(), "cell " + triple(c.n, c.a, c.b) + " not ok: " + c.failure);
    }
    return t;
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Tally()>>> criteria = {
        {"1 five-way beta agreement", criterion1_beta_five_way},
        {"2 gamma agreement and alphabet correction", criterion2_gamma},
        {"3 beta/gamma duality", criterion3_duality},
        {"4 generating function fit and round trip", criterion4_theorem1},
        {"5 partial-fraction consistency", criterion5_partial_fractions},
        {"6 specialization identities", criterion6_specializations},
        {"7 core oracles", criterion7_core_oracles},
        {"8 report sweep max 10", criterion8_sweep},
    };
    int failed = 0;
    for (const auto& [label, body] : criteria) {
        const auto start = Clock::now();
        Tally t;
        try {
            t = body();
        } catch (const std::exception& e) {
            t.expect(false, std::string("exception: ") + e.what());
        }
        const double elapsed = seconds_since(start);
        if (t.ok()) {
            std::cout << "PASS criterion " << label << " (" << t.cases << " checks, " << elapsed << " s)\n";
        } else {
            ++failed;
            std::cout << "FAIL criterion " << label << " (" << t.failures << "/" << t.cases
                      << " failed; first: " << t.first << ")\n";
        }
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
    return failed == 0 ? 0 : 1;
}
