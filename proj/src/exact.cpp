#include "stirdet/exact.hpp"

#include <cctype>

namespace stirdet {

ExactInt exact_div(const ExactInt& num, const ExactInt& den, std::string_view context)
{
    ExactInt out = num;
    exact_div_inplace(out, den, context);
    return out;
}

void exact_div_inplace(ExactInt& num, const ExactInt& den, std::string_view context)
{
    if (sgn(den) == 0) {
        throw ExactnessViolation(std::string(context) + ": division by zero");
    }
    if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) == 0) {
        throw ExactnessViolation(std::string(context) + ": nonzero remainder dividing " +
                                 num.get_str() + " by " + den.get_str());
    }
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
}

ExactInt ipow(const ExactInt& base, unsigned long exponent)
{
    ExactInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

ExactRat rpow(const ExactRat& base, long exponent)
{
    if (exponent >= 0) {
        const auto e = static_cast<unsigned long>(exponent);
        return make_rat(ipow(base.get_num(), e), ipow(base.get_den(), e));
    }
    if (sgn(base) == 0) {
        throw DomainError("rpow: zero raised to a negative power");
    }
    const auto e = static_cast<unsigned long>(-exponent);
    return make_rat(ipow(base.get_den(), e), ipow(base.get_num(), e));
}

ExactInt factorial(int n)
{
    if (n < 0) {
        throw DomainError("factorial: negative argument " + std::to_string(n));
    }
    ExactInt out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

ExactInt to_integer(const ExactRat& r, std::string_view context)
{
    if (r.get_den() != 1) {
        throw ExactnessViolation(std::string(context) + ": value " + r.get_str() +
                                 " is not an integer");
    }
    return r.get_num();
}

ExactRat make_rat(const ExactInt& num, const ExactInt& den)
{
    ExactRat out(num, den);
    out.canonicalize();
    return out;
}

std::string to_string(const ExactInt& v) { return v.get_str(); }

std::string to_string(const ExactRat& v) { return v.get_str(); }

ExactInt parse_int(std::string_view text)
{
    std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (start == text.size()) {
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
    for (std::size_t i = start; i < text.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(text[i])) == 0) {
            throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
        }
    }
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return ExactInt(digits, 10);
}

ExactRat parse_rat(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return ExactRat(parse_int(text));
    }
    ExactInt den = parse_int(text.substr(slash + 1));
    if (sgn(den) == 0) {
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    }
    return make_rat(parse_int(text.substr(0, slash)), den);
}

}  // namespace stirdet
