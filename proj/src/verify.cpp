#include "stirdet/verify.hpp"

#include "stirdet/combinatorics.hpp"
#include "stirdet/genfun.hpp"
#include "stirdet/matrix.hpp"
#include "stirdet/schur.hpp"
#include "stirdet/stirling_dets.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace stirdet {
namespace {

/// Collects the first failure; later failures only bump the count.
class Check {
public:
    explicit Check(std::string name) : name_(std::move(name)) {}

    void expect(bool condition, const std::function<std::string()>& describe)
    {
        ++cases_;
        if (!condition) {
            if (failures_ == 0) {
                first_ = describe();
            }
            ++failures_;
        }
    }

    CheckResult result() const
    {
        if (failures_ == 0) {
            return {name_, true, std::to_string(cases_) + " cases"};
        }
        return {name_, false,
                std::to_string(failures_) + "/" + std::to_string(cases_) + " failed; first: " + first_};
    }

private:
    std::string name_;
    std::size_t cases_ = 0;
    std::size_t failures_ = 0;
    std::string first_;
};

std::string triple(int n, int a, int b)
{
    return "(n,a,b)=(" + std::to_string(n) + "," + std::to_string(a) + "," + std::to_string(b) + ")";
}

CheckResult run_guarded(const std::string& name, const std::function<CheckResult()>& body)
{
    try {
        return body();
    } catch (const std::exception& e) {
        return {name, false, std::string("exception: ") + e.what()};
    }
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n)
{
    std::uniform_int_distribution<int> entry(-9, 9);
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = entry(rng);
        }
    }
    return m;
}

}  // namespace

std::vector<CheckResult> run_verification(int max)
{
    if (max < 0) {
        throw DomainError("run_verification: max must be nonnegative");
    }
    const int table_max = 2 * max;
    const int spec_max = max + 4;
    const int gf_max = std::max(0, max - 1);
    std::vector<CheckResult> results;
    std::mt19937_64 rng(20220617);

    results.push_back(run_guarded("stirling1 row sums equal n!", [&] {
        Check c("stirling1 row sums equal n!");
        for (int n = 0; n <= table_max; ++n) {
            ExactInt sum = 0;
            for (int k = 0; k <= n; ++k) {
                sum += stirling1_unsigned(n, k);
            }
            ExactInt fact = 1;
            for (int i = 2; i <= n; ++i) {
                fact *= i;
            }
            c.expect(sum == fact, [&] { return "n=" + std::to_string(n); });
        }
        return c.result();
    }));

    results.push_back(run_guarded("rising factorial coefficients", [&] {
        Check c("rising factorial coefficients");
        std::vector<ExactInt> poly{ExactInt(1)};
        for (int n = 0; n <= table_max; ++n) {
            for (int k = 0; k <= n; ++k) {
                c.expect(poly[k] == stirling1_unsigned(n, k),
                         [&] { return "n=" + std::to_string(n) + " k=" + std::to_string(k); });
            }
            // poly *= (x + n)
            std::vector<ExactInt> next(poly.size() + 1, ExactInt(0));
            for (std::size_t k = 0; k < poly.size(); ++k) {
                next[k] += n * poly[k];
                next[k + 1] += poly[k];
            }
            poly = std::move(next);
        }
        return c.result();
    }));

    results.push_back(run_guarded("stirling2 row sums equal Bell numbers", [&] {
        Check c("stirling2 row sums equal Bell numbers");
        std::vector<ExactInt> bell{ExactInt(1)};
        for (int n = 0; n <= table_max; ++n) {
            ExactInt next = 0;
            for (int k = 0; k <= n; ++k) {
                next += binomial(n, k) * bell[k];
            }
            bell.push_back(next);
            ExactInt sum = 0;
            for (int k = 0; k <= n; ++k) {
                sum += stirling2(n, k);
            }
            c.expect(sum == bell[n], [&] { return "n=" + std::to_string(n); });
        }
        return c.result();
    }));

    results.push_back(run_guarded("e_m and h_m at (1..N) are Stirling numbers", [&] {
        Check c("e_m and h_m at (1..N) are Stirling numbers");
        for (int big_n = 0; big_n <= spec_max; ++big_n) {
            const Alphabet alpha = Alphabet::canonical(big_n);
            for (int m = 0; m <= spec_max; ++m) {
                auto where = [&] { return "m=" + std::to_string(m) + " N=" + std::to_string(big_n); };
                c.expect(sym_spec(SymKind::elementary, m, alpha) ==
                             stirling1_unsigned(big_n + 1, big_n + 1 - m),
                         where);
                c.expect(sym_spec(SymKind::complete, m, alpha) == stirling2(big_n + m, big_n), where);
            }
        }
        return c.result();
    }));

    results.push_back(run_guarded("sym_spec is symmetric", [&] {
        Check c("sym_spec is symmetric");
        for (int trial = 0; trial < 50; ++trial) {
            Alphabet alpha;
            std::uniform_int_distribution<int> entry(-5, 9);
            const int len = static_cast<int>(rng() % 7);
            for (int i = 0; i < len; ++i) {
                alpha.values.emplace_back(entry(rng));
            }
            Alphabet shuffled = alpha;
            std::shuffle(shuffled.values.begin(), shuffled.values.end(), rng);
            for (int m = 0; m <= 6; ++m) {
                for (auto kind : {SymKind::elementary, SymKind::complete}) {
                    c.expect(sym_spec(kind, m, alpha) == sym_spec(kind, m, shuffled),
                             [&] { return "trial " + std::to_string(trial); });
                }
            }
        }
        return c.result();
    }));

    results.push_back(run_guarded("Bareiss agrees with Laplace", [&] {
        Check c("Bareiss agrees with Laplace");
        const std::size_t max_size = std::min<std::size_t>(static_cast<std::size_t>(max), 6);
        for (int trial = 0; trial < 500; ++trial) {
            const std::size_t n = rng() % (max_size + 1);
            const IntMatrix m = random_matrix(rng, n);
            c.expect(det(m, DetMethod::bareiss) == det(m, DetMethod::laplace),
                     [&] { return "trial " + std::to_string(trial); });
        }
        return c.result();
    }));

    results.push_back(run_guarded("det alternating, transpose-invariant, repeated rows vanish", [&] {
        Check c("det alternating, transpose-invariant, repeated rows vanish");
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t n = 2 + rng() % 5;
            IntMatrix m = random_matrix(rng, n);
            const ExactInt d = det(m);
            c.expect(det(m.transpose()) == d, [&] { return "transpose, trial " + std::to_string(trial); });
            const std::size_t r1 = rng() % n;
            const std::size_t r2 = (r1 + 1 + rng() % (n - 1)) % n;
            IntMatrix swapped = m;
            swapped.swap_rows(r1, r2);
            c.expect(det(swapped) == -d, [&] { return "swap, trial " + std::to_string(trial); });
            for (std::size_t j = 0; j < n; ++j) {
                m(r2, j) = m(r1, j);
            }
            c.expect(sgn(det(m)) == 0, [&] { return "repeated row, trial " + std::to_string(trial); });
        }
        return c.result();
    }));

    results.push_back(run_guarded("Schur methods agree", [&] {
        Check c("Schur methods agree");
        for (int a = 0; a <= gf_max; ++a) {
            const Alphabet alpha = Alphabet::canonical(a);
            for (int total = 0; total <= max + 2; ++total) {
                for (const auto& lambda : partitions_of(total)) {
                    const ExactInt bi = schur_eval(lambda, alpha, SchurMethod::bialternant);
                    const ExactInt jt = schur_eval(lambda, alpha, SchurMethod::jacobi_trudi_h);
                    const ExactInt nk = schur_eval(lambda, alpha, SchurMethod::naegelsbach_e);
                    c.expect(bi == jt && jt == nk, [&] {
                        return "a=" + std::to_string(a) + " |lambda|=" + std::to_string(total);
                    });
                    if (lambda.length() > a) {
                        c.expect(sgn(bi) == 0, [&] { return "vanishing, a=" + std::to_string(a); });
                    }
                }
            }
        }
        return c.result();
    }));

    results.push_back(run_guarded("Schur one-row, one-column and two-variable rectangles", [&] {
        Check c("Schur one-row, one-column and two-variable rectangles");
        for (int a = 0; a <= gf_max; ++a) {
            const Alphabet alpha = Alphabet::canonical(a);
            for (int m = 0; m <= max + 2; ++m) {
                c.expect(schur_eval(Partition::rectangle(m, 1), alpha, SchurMethod::bialternant) ==
                             sym_spec(SymKind::complete, m, alpha),
                         [&] { return "row m=" + std::to_string(m); });
                c.expect(schur_eval(Partition::rectangle(1, m), alpha, SchurMethod::bialternant) ==
                             sym_spec(SymKind::elementary, m, alpha),
                         [&] { return "column m=" + std::to_string(m); });
            }
        }
        const Alphabet two = Alphabet::canonical(2);
        for (int n = 0; n <= spec_max; ++n) {
            c.expect(schur_eval(Partition::rectangle(n, 2), two, SchurMethod::jacobi_trudi_h) ==
                         ipow(ExactInt(2), static_cast<unsigned long>(n)),
                     [&] { return "(n,n) at (1,2), n=" + std::to_string(n); });
        }
        return c.result();
    }));

    results.push_back(run_guarded("beta five-way agreement and positivity", [&] {
        Check c("beta five-way agreement and positivity");
        for (int a = 0; a <= max; ++a) {
            for (int b = 0; b <= a; ++b) {
                for (int n = 0; n <= max + 2; ++n) {
                    const auto values = beta_all_methods(n, a, b);
                    const bool agree = std::all_of(values.begin(), values.end(),
                                                   [&](const DetResult& r) { return r.value == values[0].value; });
                    c.expect(agree, [&] { return triple(n, a, b); });
                    c.expect(sgn(values[0].value) > 0, [&] { return "positivity " + triple(n, a, b); });
                    c.expect(theorem3_expansion(n, a, b).summands ==
                                 binomial(a, a - b).get_ui(),
                             [&] { return "summand count " + triple(n, a, b); });
                }
            }
        }
        return c.result();
    }));

    results.push_back(run_guarded("gamma direct agrees with Schur form", [&] {
        Check c("gamma direct agrees with Schur form");
        for (int a = 0; a <= max; ++a) {
            for (int b = 0; b <= a; ++b) {
                for (int n = 0; n <= max + 2; ++n) {
                    c.expect(gamma(n, a, b, GammaMethod::direct) == gamma(n, a, b, GammaMethod::schur_corrected),
                             [&] { return triple(n, a, b); });
                }
            }
        }
        return c.result();
    }));

    results.push_back(run_guarded("beta/gamma duality", [&] {
        Check c("beta/gamma duality");
        for (int n = 0; n <= max; ++n) {
            for (int a = 0; a <= max; ++a) {
                for (int b = 0; b <= max; ++b) {
                    c.expect(sgn(duality_residual(n, a, b)) == 0, [&] { return triple(n, a, b); });
                }
            }
        }
        return c.result();
    }));

    results.push_back(run_guarded("generating function fit and round trip", [&] {
        Check c("generating function fit and round trip");
        for (int a = 0; a <= gf_max; ++a) {
            for (int b = 0; b <= a; ++b) {
                const auto rf = fit_generating_function(a, b, 10);
                const int d = static_cast<int>(binomial(a, b).get_si());
                auto where = [&] { return "(a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ")"; };
                c.expect(rf.den().degree() == d, where);
                c.expect(rf.num().degree() < d, where);
                const auto series = series_expand(rf, static_cast<std::size_t>(d + 11));
                for (int n = 0; n <= d + 10; ++n) {
                    c.expect(series[n] == ExactRat(beta(n, a, b)), where);
                }
            }
        }
        return c.result();
    }));

    results.push_back(run_guarded("partial fractions reproduce beta", [&] {
        Check c("partial fractions reproduce beta");
        for (int a = 0; a <= gf_max; ++a) {
            for (int b = 0; b <= a; ++b) {
                const auto form = theorem3_partial_fractions(a, b);
                auto where = [&] { return "(a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ")"; };
                c.expect(form.rate_multiset() == theorem1_rates(a, b), where);
                for (int n = 0; n <= spec_max; ++n) {
                    c.expect(form.evaluate(n) == ExactRat(beta(n, a, b)), where);
                }
            }
        }
        return c.result();
    }));

    results.push_back(run_guarded("denominator rates equal complementary subset products", [&] {
        Check c("denominator rates equal complementary subset products");
        for (int a = 0; a <= max + 1; ++a) {
            for (int b = 0; b <= a; ++b) {
                std::vector<ExactInt> products;
                for_each_subset(a, a - b, [&](std::span<const int> s) {
                    ExactInt p = 1;
                    for (int i : s) {
                        p *= i;
                    }
                    products.push_back(p);
                });
                std::sort(products.begin(), products.end());
                c.expect(products == theorem1_rates(a, b),
                         [&] { return "(a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ")"; });
            }
        }
        return c.result();
    }));

    return results;
}

}  // namespace stirdet
