#include "hameig/bound.hpp"

#include <stdexcept>

namespace hameig {

namespace {

constexpr int kFloatPrecisionBits = 256;
constexpr std::size_t kDecimalDigits = 25;

mpz_class int_pow(unsigned long base, unsigned long exp) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, exp);  // 0^0 == 1
    return out;
}

std::string decimal_from_mpf(const mpf_class& value, std::size_t digits) {
    mp_exp_t exp = 0;
    std::string mantissa = value.get_str(exp, 10, digits);
    if (mantissa.empty() || mantissa == "-") return "0";
    bool negative = mantissa.front() == '-';
    if (negative) mantissa.erase(0, 1);
    std::string body;
    if (exp <= 0) {
        body = "0." + std::string(static_cast<std::size_t>(-exp), '0') + mantissa;
    } else if (static_cast<std::size_t>(exp) >= mantissa.size()) {
        body = mantissa + std::string(static_cast<std::size_t>(exp) - mantissa.size(), '0');
    } else {
        body = mantissa.substr(0, static_cast<std::size_t>(exp)) + "." +
               mantissa.substr(static_cast<std::size_t>(exp));
    }
    return negative ? "-" + body : body;
}

}  // namespace

bool SupportBound::leq(const Rational& x) const {
    if (branch == 1) return exact <= x;
    if (sgn(x) < 0) return false;
    return squared <= x * x;
}

SupportBound vorobev_lower_bound(int n, int q, int m) {
    if (n < 1) throw std::invalid_argument("vorobev_lower_bound: n must be >= 1");
    if (q < 2) throw std::invalid_argument("vorobev_lower_bound: q must be >= 2");
    if (m < 0 || m > n) throw std::invalid_argument("vorobev_lower_bound: m must lie in 0..n");
    if (q == 2 && m == n) {
        throw std::invalid_argument(
            "vorobev_lower_bound: (q=2, m=n) is outside the supported range");
    }

    SupportBound result;
    const std::int64_t lhs = static_cast<std::int64_t>(m) * q * q;
    const std::int64_t rhs = 4LL * n * (q - 1);
    if (lhs > rhs) {
        result.branch = 1;
        result.exact = Rational(int_pow(2, static_cast<unsigned long>(m)) *
                                int_pow(static_cast<unsigned long>(q - 2),
                                        static_cast<unsigned long>(n - m)));
        result.squared = result.exact * result.exact;
        result.decimal = to_string(result.exact);
        result.approx = result.exact.get_d();
        return result;
    }

    // Squaring clears the half-integer exponents:
    //   bound^2 = q^(2n) * m^m * (n-m)^(n-m) / ((q-1)^m * n^n)
    result.branch = 2;
    const mpz_class numerator = int_pow(static_cast<unsigned long>(q), 2UL * static_cast<unsigned long>(n)) *
                                int_pow(static_cast<unsigned long>(m), static_cast<unsigned long>(m)) *
                                int_pow(static_cast<unsigned long>(n - m), static_cast<unsigned long>(n - m));
    const mpz_class denominator = int_pow(static_cast<unsigned long>(q - 1), static_cast<unsigned long>(m)) *
                                  int_pow(static_cast<unsigned long>(n), static_cast<unsigned long>(n));
    result.squared = Rational(numerator, denominator);
    result.squared.canonicalize();

    // m = 0 and similar corners make the square a perfect rational square;
    // surface the exact root for them.
    const mpz_class& num = result.squared.get_num();
    const mpz_class& den = result.squared.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
        mpz_class root_num, root_den;
        mpz_sqrt(root_num.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(root_den.get_mpz_t(), den.get_mpz_t());
        result.exact = Rational(root_num, root_den);
        result.exact.canonicalize();
    }

    mpf_class square_f(0, kFloatPrecisionBits);
    mpf_set_q(square_f.get_mpf_t(), result.squared.get_mpq_t());
    mpf_class root(0, kFloatPrecisionBits);
    mpf_sqrt(root.get_mpf_t(), square_f.get_mpf_t());
    result.decimal = decimal_from_mpf(root, kDecimalDigits);
    result.approx = root.get_d();
    return result;
}

}  // namespace hameig
