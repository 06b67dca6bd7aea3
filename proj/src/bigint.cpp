#include "ifam/bigint.hpp"

namespace ifam {

BigInt binomial(long n, long k) {
  if (n < 0) throw std::domain_error("binomial: negative n (" + std::to_string(n) + ")");
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational binomial_real(const Rational& x, long m) {
  if (m < 0) return 0;
  Rational num = 1;
  for (long i = 0; i < m; ++i) num *= x - i;
  BigInt fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(m));
  Rational r = num / Rational(fact);
  r.canonicalize();
  return r;
}

double binomial_real(double x, long m) {
  if (m < 0) return 0.0;
  double num = 1.0;
  for (long i = 0; i < m; ++i) num *= x - static_cast<double>(i);
  double fact = 1.0;
  for (long i = 2; i <= m; ++i) fact *= static_cast<double>(i);
  return num / fact;
}

std::string str(const BigInt& v) { return v.get_str(); }

std::string str(const Rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac_len = s.size() - dot - 1;
    if (digits.empty() || frac_len == 0) throw std::invalid_argument("bad rational literal: " + s);
    BigInt num(digits, 10);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(frac_len));
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

}  // namespace ifam
