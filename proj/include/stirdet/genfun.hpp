#pragma once

#include "stirdet/exact.hpp"

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace stirdet {

/// Univariate polynomial in q over ExactRat. coeffs[i] is the coefficient of q^i;
/// trailing zeros are always trimmed, so the zero polynomial has no coefficients.
class Poly {
public:
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    Poly() = default;
    explicit Poly(std::vector<ExactRat> coeffs);

    /// 1 - rate*q
    static Poly linear_factor(const ExactInt& rate);

    int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<ExactRat>& coeffs() const { return coeffs_; }
    /// Coefficient of q^i (0 beyond the degree).
    ExactRat coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : ExactRat(0); }
    ExactRat evaluate(const ExactRat& q) const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim();
    std::vector<ExactRat> coeffs_;
};

/// num/den with den(0) == 1. Not reduced to lowest terms. When the denominator was
/// built from linear factors, `den_rates()` lists them: den = prod (1 - r q).
class RationalFunction {
public:
    /// Rescales so that den(0) == 1; throws DomainError if den(0) == 0.
    RationalFunction(Poly num, Poly den);
    /// den = prod_r (1 - r q), rates kept in the given order.
    static RationalFunction from_rates(Poly num, std::vector<ExactInt> rates);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const std::vector<ExactInt>& den_rates() const { return den_rates_; }
    bool has_factored_den() const { return factored_; }

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

private:
    RationalFunction() = default;
    Poly num_;
    Poly den_;
    std::vector<ExactInt> den_rates_;
    bool factored_ = false;
};

/// First `count` Taylor coefficients at q = 0.
std::vector<ExactRat> series_expand(const RationalFunction& rf, std::size_t count);

/// The rates a!/(i_1...i_b) over all b-subsets of [a], ascending.
std::vector<ExactInt> theorem1_rates(int a, int b);

/// prod over b-subsets {i_1 < ... < i_b} of [a] of (1 - a!/(i_1...i_b) q).
Poly theorem1_denominator(int a, int b);

/// The sequence beta_n(a,b) failed to be annihilated by the product denominator.
class FitFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Fits the numerator of sum_n beta_n(a,b) q^n against theorem1_denominator(a,b) and
/// checks `guard` + 1 further coefficients of series * denominator vanish.
RationalFunction fit_generating_function(int a, int b, int guard = 10);

/// Linear factors of rf.den_rates() that also divide the numerator (num(1/r) == 0).
std::vector<ExactInt> cancelled_rates(const RationalFunction& rf);

struct PartialFractionTerm {
    ExactInt rate;
    ExactRat coeff;
    /// Number of subsets whose rate product equals `rate`.
    std::size_t multiplicity = 0;

    friend bool operator==(const PartialFractionTerm&, const PartialFractionTerm&) = default;
};

/// beta_n = sum coeff * rate^n; rates strictly decreasing.
struct PartialFractionForm {
    std::vector<PartialFractionTerm> terms;

    ExactRat evaluate(int n) const;
    /// Every rate repeated by its multiplicity, ascending.
    std::vector<ExactInt> rate_multiset() const;
};

/// The explicit subset sum for beta_n(a,b) grouped by the rate prod_{i in S} i.
PartialFractionForm theorem3_partial_fractions(int a, int b);

/// "c0,c1,..." (empty string for the zero polynomial).
std::string coeffs_csv(const Poly& p);
/// "(1-q)(1-2q)"; "1" for an empty product.
std::string factors_text(const std::vector<ExactInt>& rates);
/// "num_coeffs / den_factors", e.g. "1 / (1-q)(1-2q)".
std::string to_text(const RationalFunction& rf);

}  // namespace stirdet
