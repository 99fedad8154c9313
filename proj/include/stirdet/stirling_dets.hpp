#pragma once

// Determinants of Stirling-number matrices
//   M_n(a,b) = ([i+a, j+b])_{1<=i,j<=n}   (unsigned first kind)
//   N_n(a,b) = ({i+a, j+b})_{1<=i,j<=n}   (second kind)
// and the alternative routes that must agree with them:
//   beta_n(a,b)  = s_{(n^{a-b})}(1..a)     by three Schur evaluations
//   beta_n(a,b)  = explicit subset sum      (see theorem3_expansion)
//   gamma_n(a,b) = s_{((a-b)^n)}(1..n+b)
//   beta_n(a+b,b) = gamma_a(n+b,b)

#include "stirdet/exact.hpp"
#include "stirdet/matrix.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace stirdet {

enum class MatrixKind { first_kind_M, second_kind_N };

struct StirlingMatrixSpec {
    MatrixKind kind = MatrixKind::first_kind_M;
    int n = 0;
    int a = 0;
    int b = 0;

    friend bool operator==(const StirlingMatrixSpec&, const StirlingMatrixSpec&) = default;
};

IntMatrix build_matrix(const StirlingMatrixSpec& spec);

enum class BetaMethod { direct, schur_bialternant, schur_jt_h, schur_nk_e, theorem3 };
enum class GammaMethod { direct, schur_corrected };

inline constexpr std::array kAllBetaMethods = {BetaMethod::direct, BetaMethod::schur_bialternant,
                                               BetaMethod::schur_jt_h, BetaMethod::schur_nk_e,
                                               BetaMethod::theorem3};
inline constexpr std::array kAllGammaMethods = {GammaMethod::direct, GammaMethod::schur_corrected};

std::string_view name(BetaMethod m);
std::string_view name(GammaMethod m);
std::optional<BetaMethod> parse_beta_method(std::string_view text);
std::optional<GammaMethod> parse_gamma_method(std::string_view text);

/// det(M_n(a,b)). Every method except `direct` requires b <= a.
ExactInt beta(int n, int a, int b, BetaMethod method = BetaMethod::direct);

/// det(N_n(a,b)). `schur_corrected` requires b <= a.
ExactInt gamma(int n, int a, int b, GammaMethod method = GammaMethod::direct);

/// beta_0(a,b), ..., beta_{count-1}(a,b) as leading minors of one Stirling matrix.
std::vector<ExactInt> beta_sequence(int a, int b, int count);

struct DetResult {
    ExactInt value;
    BetaMethod method;
    StirlingMatrixSpec spec;
};

/// beta_n(a,b) by every method, in kAllBetaMethods order.
std::vector<DetResult> beta_all_methods(int n, int a, int b);

/// A_i = (-1)^{p-i} i^p / p! * C(p,i), 1 <= i <= p.
ExactRat theorem3_weight(int p, int i);

struct Theorem3Expansion {
    ExactRat total;
    std::size_t summands = 0;
};

/// With k = a - b:
///   (-1)^{C(k,2)} sum over k-subsets S of [a] of
///       prod_{i in S} A_i * prod_{u<v in S} (u-v)^2 * prod_{i in S} i^{n-k+1}
/// using the weights A_i for p = a. Requires b <= a.
Theorem3Expansion theorem3_expansion(int n, int a, int b);

/// beta(n, a+b, b, direct) - gamma(a, n+b, b, direct); zero when the duality holds.
ExactInt duality_residual(int n, int a, int b);

}  // namespace stirdet
