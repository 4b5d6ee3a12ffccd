#include "leelab/numeric.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace leelab {

Count binomial(long a, long b) {
  if (b < 0 || b > a) return 0;
  if (b == 0) return 1;
  Count out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return out;
}

Count power(const Count& base, unsigned long exponent) {
  Count out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Count power(long base, unsigned long exponent) { return power(Count(base), exponent); }

Ratio power(const Ratio& base, unsigned long exponent) {
  Count num = power(Count(base.get_num()), exponent);
  Count den = power(Count(base.get_den()), exponent);
  return make_ratio(num, den);
}

Ratio power_signed(const Ratio& base, long exponent) {
  if (exponent >= 0) return power(base, static_cast<unsigned long>(exponent));
  if (base == 0) throw std::domain_error("zero raised to a negative power");
  Ratio inv = 1 / base;
  return power(inv, static_cast<unsigned long>(-exponent));
}

Ratio make_ratio(const Count& num, const Count& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Ratio q(num, den);
  q.canonicalize();
  return q;
}

Ratio make_ratio(long num, long den) { return make_ratio(Count(num), Count(den)); }

Count floor(const Ratio& q) {
  Count out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Count ceil(const Ratio& q) {
  Count out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

std::string to_fraction(const Ratio& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Count& c) { return c.get_str(); }

std::string to_decimal(const Ratio& q, int significant) {
  if (q == 0) return "0";
  // Enough binary precision for the requested decimal digits plus slack.
  const auto bits = static_cast<mp_bitcnt_t>(significant * 4 + 64);
  mpf_class value(q, bits);
  int n = gmp_snprintf(nullptr, 0, "%.*Fg", significant, value.get_mpf_t());
  std::vector<char> buf(static_cast<std::size_t>(n) + 1);
  gmp_snprintf(buf.data(), buf.size(), "%.*Fg", significant, value.get_mpf_t());
  return std::string(buf.data());
}

long double log2(const Count& c) {
  if (c <= 0) return -std::numeric_limits<long double>::infinity();
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, c.get_mpz_t());
  return std::log2(static_cast<long double>(mant)) + static_cast<long double>(exp);
}

long double log2(const Ratio& q) { return log2(Count(q.get_num())) - log2(Count(q.get_den())); }

Ratio parse_ratio(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    Count num, den;
    if (num.set_str(text.substr(0, slash), 10) != 0 || den.set_str(text.substr(slash + 1), 10) != 0)
      throw std::invalid_argument("malformed rational: " + text);
    return make_ratio(num, den);
  }
  const auto dot = text.find('.');
  if (dot == std::string::npos) {
    Count num;
    if (num.set_str(text, 10) != 0) throw std::invalid_argument("malformed rational: " + text);
    return Ratio(num);
  }
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  if (digits.empty() || digits == "-" || digits == "+") throw std::invalid_argument("malformed rational: " + text);
  if (digits[0] == '+') digits.erase(0, 1);
  Count num;
  if (num.set_str(digits, 10) != 0) throw std::invalid_argument("malformed rational: " + text);
  return make_ratio(num, power(10, text.size() - dot - 1));
}

bool le_power_of_two(const Count& value, const Ratio& exponent) {
  if (value < 0) throw std::domain_error("negative value");
  if (value == 0) return true;
  if (exponent < 0) return false;
  const Count& a = exponent.get_num();
  const Count& b = exponent.get_den();
  const Count length = static_cast<unsigned long>(mpz_sizeinbase(value.get_mpz_t(), 2));
  // value lies in [2^(length-1), 2^length).
  if (b * (length - 1) > a) return false;
  if (b * length <= a) return true;
  if (!b.fits_ulong_p() || !a.fits_ulong_p()) throw std::domain_error("exponent too large for exact comparison");
  Count lhs = power(value, b.get_ui());
  Count rhs = power(Count(2), a.get_ui());
  return lhs <= rhs;
}

}  // namespace leelab
