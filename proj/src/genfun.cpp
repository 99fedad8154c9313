#include "stirdet/genfun.hpp"

#include "stirdet/combinatorics.hpp"
#include "stirdet/stirling_dets.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace stirdet {

Poly::Poly(std::vector<ExactRat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::linear_factor(const ExactInt& rate) { return Poly({ExactRat(1), ExactRat(-rate)}); }

void Poly::trim()
{
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) {
        coeffs_.pop_back();
    }
}

ExactRat Poly::evaluate(const ExactRat& q) const
{
    ExactRat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * q + *it;
    }
    return acc;
}

Poly& Poly::operator+=(const Poly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    trim();
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs)
{
    if (lhs.is_zero() || rhs.is_zero()) {
        return {};
    }
    std::vector<ExactRat> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return Poly(std::move(out));
}

RationalFunction::RationalFunction(Poly num, Poly den)
{
    const ExactRat constant = den.coeff(0);
    if (sgn(constant) == 0) {
        throw DomainError("RationalFunction: denominator must not vanish at q = 0");
    }
    if (constant != 1) {
        const Poly scale({ExactRat(1 / constant)});
        num = num * scale;
        den = den * scale;
    }
    num_ = std::move(num);
    den_ = std::move(den);
}

RationalFunction RationalFunction::from_rates(Poly num, std::vector<ExactInt> rates)
{
    Poly den({ExactRat(1)});
    for (const auto& r : rates) {
        den = den * Poly::linear_factor(r);
    }
    RationalFunction out;
    out.num_ = std::move(num);
    out.den_ = std::move(den);
    out.den_rates_ = std::move(rates);
    out.factored_ = true;
    return out;
}

std::vector<ExactRat> series_expand(const RationalFunction& rf, std::size_t count)
{
    // den(q) * sum s_n q^n = num(q), den_0 = 1:
    //   s_n = num_n - sum_{j=1}^{min(n,deg den)} den_j s_{n-j}
    const auto& den = rf.den().coeffs();
    std::vector<ExactRat> out(count);
    for (std::size_t n = 0; n < count; ++n) {
        ExactRat s = rf.num().coeff(n);
        for (std::size_t j = 1; j < den.size() && j <= n; ++j) {
            s -= den[j] * out[n - j];
        }
        out[n] = std::move(s);
    }
    return out;
}

namespace {

void check_ab(int a, int b, const char* op)
{
    if (a < 0 || b < 0 || b > a) {
        throw DomainError(std::string(op) + ": requires 0 <= b <= a, got a=" + std::to_string(a) +
                          " b=" + std::to_string(b));
    }
}

}  // namespace

std::vector<ExactInt> theorem1_rates(int a, int b)
{
    check_ab(a, b, "theorem1_rates");
    const ExactInt a_fact = factorial(a);
    std::vector<ExactInt> rates;
    for_each_subset(a, b, [&](std::span<const int> subset) {
        ExactInt product = 1;
        for (int i : subset) {
            product *= i;
        }
        rates.push_back(exact_div(a_fact, product, "denominator rate"));
    });
    std::sort(rates.begin(), rates.end());
    return rates;
}

Poly theorem1_denominator(int a, int b)
{
    Poly den({ExactRat(1)});
    for (const auto& r : theorem1_rates(a, b)) {
        den = den * Poly::linear_factor(r);
    }
    return den;
}

RationalFunction fit_generating_function(int a, int b, int guard)
{
    check_ab(a, b, "fit_generating_function");
    if (guard < 1) {
        throw DomainError("fit_generating_function: guard must be at least 1");
    }
    auto rates = theorem1_rates(a, b);
    const Poly den = theorem1_denominator(a, b);
    const int d = den.degree();
    const auto betas = beta_sequence(a, b, d + guard + 1);

    std::vector<ExactRat> product(static_cast<std::size_t>(d + guard) + 1);
    for (int m = 0; m <= d + guard; ++m) {
        for (int j = 0; j <= std::min(m, d); ++j) {
            product[m] += den.coeff(j) * betas[m - j];
        }
    }
    for (int m = d; m <= d + guard; ++m) {
        if (sgn(product[m]) != 0) {
            throw FitFailure("generating function fit for (a,b)=(" + std::to_string(a) + "," +
                             std::to_string(b) + "): coefficient of q^" + std::to_string(m) +
                             " is " + product[m].get_str() + ", expected 0");
        }
    }
    product.resize(static_cast<std::size_t>(d));
    return RationalFunction::from_rates(Poly(std::move(product)), std::move(rates));
}

std::vector<ExactInt> cancelled_rates(const RationalFunction& rf)
{
    std::vector<ExactInt> out;
    for (const auto& r : rf.den_rates()) {
        if (sgn(r) != 0 && sgn(rf.num().evaluate(make_rat(1, r))) == 0) {
            out.push_back(r);
        }
    }
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ExactRat PartialFractionForm::evaluate(int n) const
{
    ExactRat total = 0;
    for (const auto& t : terms) {
        total += t.coeff * rpow(ExactRat(t.rate), n);
    }
    return total;
}

std::vector<ExactInt> PartialFractionForm::rate_multiset() const
{
    std::vector<ExactInt> out;
    for (const auto& t : terms) {
        out.insert(out.end(), t.multiplicity, t.rate);
    }
    std::sort(out.begin(), out.end());
    return out;
}

PartialFractionForm theorem3_partial_fractions(int a, int b)
{
    check_ab(a, b, "theorem3_partial_fractions");
    const int k = a - b;
    std::vector<ExactRat> weights(static_cast<std::size_t>(a) + 1);
    for (int i = 1; i <= a; ++i) {
        weights[i] = theorem3_weight(a, i);
    }
    const bool negate = (static_cast<long>(k) * (k - 1) / 2) % 2 != 0;

    std::map<ExactInt, PartialFractionTerm, std::greater<>> grouped;
    for_each_subset(a, k, [&](std::span<const int> subset) {
        ExactInt rate = 1;
        ExactRat coeff = negate ? -1 : 1;
        for (std::size_t u = 0; u < subset.size(); ++u) {
            rate *= subset[u];
            coeff *= weights[subset[u]];
            for (std::size_t v = u + 1; v < subset.size(); ++v) {
                const int diff = subset[u] - subset[v];
                coeff *= diff * diff;
            }
        }
        coeff *= rpow(ExactRat(rate), 1 - k);
        auto& term = grouped[rate];
        term.rate = rate;
        term.coeff += coeff;
        ++term.multiplicity;
    });

    PartialFractionForm out;
    for (auto& [rate, term] : grouped) {
        out.terms.push_back(std::move(term));
    }
    return out;
}

std::string coeffs_csv(const Poly& p)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        os << (i ? "," : "") << p.coeffs()[i].get_str();
    }
    return os.str();
}

std::string factors_text(const std::vector<ExactInt>& rates)
{
    if (rates.empty()) {
        return "1";
    }
    std::ostringstream os;
    for (const auto& r : rates) {
        os << "(1";
        if (sgn(r) > 0) {
            os << '-';
        } else if (sgn(r) < 0) {
            os << '+';
        }
        if (sgn(r) != 0) {
            const ExactInt mag = abs(r);
            if (mag != 1) {
                os << mag.get_str();
            }
            os << 'q';
        }
        os << ')';
    }
    return os.str();
}

std::string to_text(const RationalFunction& rf)
{
    const std::string num = rf.num().is_zero() ? "0" : coeffs_csv(rf.num());
    if (rf.has_factored_den()) {
        return num + " / " + factors_text(rf.den_rates());
    }
    return num + " / [" + coeffs_csv(rf.den()) + "]";
}

}  // namespace stirdet
