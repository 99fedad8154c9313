#include "stirdet/stirling_dets.hpp"

#include "stirdet/combinatorics.hpp"
#include "stirdet/schur.hpp"

#include <string>

namespace stirdet {
namespace {

void check_indices(int n, int a, int b, const char* op)
{
    if (n < 0 || a < 0 || b < 0) {
        throw DomainError(std::string(op) + ": n, a, b must be nonnegative");
    }
}

void check_b_le_a(int a, int b, const char* op)
{
    if (b > a) {
        throw DomainError(std::string(op) + ": requires b <= a, got a=" + std::to_string(a) +
                          " b=" + std::to_string(b));
    }
}

}  // namespace

IntMatrix build_matrix(const StirlingMatrixSpec& spec)
{
    check_indices(spec.n, spec.a, spec.b, "build_matrix");
    IntMatrix m(static_cast<std::size_t>(spec.n));
    for (int i = 1; i <= spec.n; ++i) {
        for (int j = 1; j <= spec.n; ++j) {
            m(i - 1, j - 1) = spec.kind == MatrixKind::first_kind_M
                                  ? stirling1_unsigned(i + spec.a, j + spec.b)
                                  : stirling2(i + spec.a, j + spec.b);
        }
    }
    return m;
}

std::string_view name(BetaMethod m)
{
    switch (m) {
    case BetaMethod::direct: return "direct";
    case BetaMethod::schur_bialternant: return "schur_bialternant";
    case BetaMethod::schur_jt_h: return "schur_jt_h";
    case BetaMethod::schur_nk_e: return "schur_nk_e";
    case BetaMethod::theorem3: return "theorem3";
    }
    return "?";
}

std::string_view name(GammaMethod m)
{
    switch (m) {
    case GammaMethod::direct: return "direct";
    case GammaMethod::schur_corrected: return "schur_corrected";
    }
    return "?";
}

std::optional<BetaMethod> parse_beta_method(std::string_view text)
{
    for (auto m : kAllBetaMethods) {
        if (name(m) == text) {
            return m;
        }
    }
    return std::nullopt;
}

std::optional<GammaMethod> parse_gamma_method(std::string_view text)
{
    for (auto m : kAllGammaMethods) {
        if (name(m) == text) {
            return m;
        }
    }
    return std::nullopt;
}

ExactRat theorem3_weight(int p, int i)
{
    if (i < 1 || i > p) {
        throw DomainError("theorem3_weight: index outside [p]");
    }
    const ExactInt magnitude = ipow(ExactInt(i), static_cast<unsigned long>(p)) * binomial(p, i);
    ExactRat w = make_rat(magnitude, factorial(p));
    return (p - i) % 2 == 0 ? w : ExactRat(-w);
}

Theorem3Expansion theorem3_expansion(int n, int a, int b)
{
    check_indices(n, a, b, "theorem3_expansion");
    check_b_le_a(a, b, "theorem3_expansion");
    const int k = a - b;
    std::vector<ExactRat> weights(static_cast<std::size_t>(a) + 1);
    for (int i = 1; i <= a; ++i) {
        weights[i] = theorem3_weight(a, i);
    }
    const long exponent = static_cast<long>(n) - k + 1;

    Theorem3Expansion out;
    for_each_subset(a, k, [&](std::span<const int> subset) {
        ExactRat term = 1;
        ExactInt discriminant = 1;
        for (std::size_t u = 0; u < subset.size(); ++u) {
            term *= weights[subset[u]];
            term *= rpow(ExactRat(subset[u]), exponent);
            for (std::size_t v = u + 1; v < subset.size(); ++v) {
                const int diff = subset[u] - subset[v];
                discriminant *= diff * diff;
            }
        }
        out.total += term * discriminant;
        ++out.summands;
    });
    const bool negate = (static_cast<long>(k) * (k - 1) / 2) % 2 != 0;
    if (negate) {
        out.total = -out.total;
    }
    return out;
}

ExactInt beta(int n, int a, int b, BetaMethod method)
{
    check_indices(n, a, b, "beta");
    if (method == BetaMethod::direct) {
        return det(build_matrix({MatrixKind::first_kind_M, n, a, b}));
    }
    check_b_le_a(a, b, "beta");
    const Partition rect = Partition::rectangle(n, a - b);
    const Alphabet alphabet = Alphabet::canonical(a);
    switch (method) {
    case BetaMethod::schur_bialternant:
        return schur_eval(rect, alphabet, SchurMethod::bialternant);
    case BetaMethod::schur_jt_h:
        return schur_eval(rect, alphabet, SchurMethod::jacobi_trudi_h);
    case BetaMethod::schur_nk_e:
        return schur_eval(rect, alphabet, SchurMethod::naegelsbach_e);
    case BetaMethod::theorem3:
        return to_integer(theorem3_expansion(n, a, b).total, "explicit subset sum");
    case BetaMethod::direct:
        break;
    }
    throw std::invalid_argument("beta: unknown method");
}

ExactInt gamma(int n, int a, int b, GammaMethod method)
{
    check_indices(n, a, b, "gamma");
    switch (method) {
    case GammaMethod::direct:
        return det(build_matrix({MatrixKind::second_kind_N, n, a, b}));
    case GammaMethod::schur_corrected:
        check_b_le_a(a, b, "gamma");
        return schur_eval(Partition::rectangle(a - b, n), Alphabet::canonical(n + b),
                          SchurMethod::bialternant);
    }
    throw std::invalid_argument("gamma: unknown method");
}

std::vector<ExactInt> beta_sequence(int a, int b, int count)
{
    check_indices(count, a, b, "beta_sequence");
    if (count == 0) {
        return {};
    }
    std::vector<ExactInt> out{ExactInt(1)};
    auto minors = leading_principal_minors(build_matrix({MatrixKind::first_kind_M, count - 1, a, b}));
    out.insert(out.end(), std::make_move_iterator(minors.begin()),
               std::make_move_iterator(minors.end()));
    return out;
}

std::vector<DetResult> beta_all_methods(int n, int a, int b)
{
    std::vector<DetResult> out;
    out.reserve(kAllBetaMethods.size());
    for (auto m : kAllBetaMethods) {
        out.push_back({beta(n, a, b, m), m, {MatrixKind::first_kind_M, n, a, b}});
    }
    return out;
}

ExactInt duality_residual(int n, int a, int b)
{
    check_indices(n, a, b, "duality_residual");
    return beta(n, a + b, b) - gamma(a, n + b, b);
}

}  // namespace stirdet
