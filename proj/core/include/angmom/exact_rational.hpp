#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstdint>
#include <string>

namespace angmom {

using BigInt = boost::multiprecision::mpz_int;

//==============================================================================
//! Arbitrary-precision signed rational, always in lowest terms with a positive
//! denominator.
class ExactRational {
public:
  ExactRational() = default;
  ExactRational(std::int64_t n); // NOLINT: implicit from integers is intended
  ExactRational(const BigInt &n);
  //! Throws std::domain_error when den == 0.
  ExactRational(const BigInt &num, const BigInt &den);

  //! Exact value of a finite double.
  static ExactRational from_double(double x);

  BigInt numerator() const;
  BigInt denominator() const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }

  //! Correctly rounded (round-half-even) conversion.
  double to_double() const;
  //! Correctly rounded sqrt of a nonnegative value, computed without
  //! underflow for very small squares.
  double sqrt_to_double() const;

  //! "num/den", denominator always printed.
  std::string to_string() const;

  ExactRational &operator+=(const ExactRational &o);
  ExactRational &operator-=(const ExactRational &o);
  ExactRational &operator*=(const ExactRational &o);
  //! Throws std::domain_error on division by zero.
  ExactRational &operator/=(const ExactRational &o);

  friend ExactRational operator+(ExactRational a, const ExactRational &b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational &b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational &b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational &b) { return a /= b; }
  ExactRational operator-() const;

  friend bool operator==(const ExactRational &a, const ExactRational &b);
  friend std::strong_ordering operator<=>(const ExactRational &a, const ExactRational &b);

private:
  using Rep = boost::multiprecision::mpq_rational;
  explicit ExactRational(Rep r) : value_(std::move(r)) {}
  Rep value_;
};

} // namespace angmom
