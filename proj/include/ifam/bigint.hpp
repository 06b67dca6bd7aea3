#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ifam {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Exact binomial coefficient C(n, k). Returns 0 when k < 0 or k > n.
/// Negative n is rejected: none of the formulas here need it, and a silent
/// convention would mask bugs.
BigInt binomial(long n, long k);

/// Generalized binomial C(x, m) = x(x-1)...(x-m+1) / m! for rational x and
/// integer m. m < 0 yields 0.
Rational binomial_real(const Rational& x, long m);
double binomial_real(double x, long m);

std::string str(const BigInt& v);

/// "p" when integral, "p/q" otherwise.
std::string str(const Rational& v);

/// Accepts "3", "-7/2" and decimal literals like "2.5" (parsed exactly).
Rational parse_rational(const std::string& s);

inline BigInt to_bigint(const Rational& q) {
  if (q.get_den() != 1) throw std::domain_error("rational value is not an integer: " + str(q));
  return q.get_num();
}

inline bool fits_long(const BigInt& v) { return v.fits_slong_p(); }

}  // namespace ifam
