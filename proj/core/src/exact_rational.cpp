#include "angmom/exact_rational.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace angmom {

namespace mp = boost::multiprecision;

namespace {

// Rounds a positive integer with more than 53 significant bits to 53 bits,
// round-half-even, where `sticky` says whether discarded low-order parts
// beyond `q` were nonzero. Returns the rounded mantissa and the number of
// bits dropped.
std::pair<BigInt, long> round_to_53(const BigInt &q, bool sticky) {
  const long top = static_cast<long>(mp::msb(q));
  if (top <= 52)
    return {q, 0};
  const long drop = top - 52;
  BigInt kept = q >> drop;
  const BigInt rest = q - (kept << drop);
  const BigInt half = BigInt(1) << (drop - 1);
  if (rest > half || (rest == half && (sticky || mp::bit_test(kept, 0))))
    ++kept;
  return {kept, drop};
}

double ldexp_exact(const BigInt &mantissa, long exponent) {
  const double m = mantissa.convert_to<double>(); // < 2^54, exact
  if (exponent > std::numeric_limits<int>::max())
    return std::numeric_limits<double>::infinity();
  if (exponent < std::numeric_limits<int>::min())
    return 0.0;
  return std::ldexp(m, static_cast<int>(exponent));
}

} // namespace

ExactRational::ExactRational(std::int64_t n) : value_(n) {}

ExactRational::ExactRational(const BigInt &n) : value_(n) {}

ExactRational::ExactRational(const BigInt &num, const BigInt &den) {
  if (den == 0)
    throw std::domain_error("ExactRational: zero denominator");
  value_ = Rep(num, den);
}

ExactRational ExactRational::from_double(double x) {
  if (!std::isfinite(x))
    throw std::domain_error("ExactRational::from_double: non-finite value");
  if (x == 0.0)
    return {};
  int exp = 0;
  const double frac = std::frexp(x, &exp); // x = frac * 2^exp, |frac| in [0.5,1)
  const auto mant = static_cast<std::int64_t>(std::ldexp(frac, 53));
  exp -= 53;
  BigInt num(mant);
  BigInt den(1);
  if (exp >= 0)
    num <<= exp;
  else
    den <<= -exp;
  return ExactRational(num, den);
}

BigInt ExactRational::numerator() const { return mp::numerator(value_); }
BigInt ExactRational::denominator() const { return mp::denominator(value_); }

int ExactRational::sign() const { return value_.sign(); }

double ExactRational::to_double() const {
  const int s = sign();
  if (s == 0)
    return 0.0;
  const BigInt n = mp::abs(numerator());
  const BigInt d = denominator();
  const long shift = 55 - (static_cast<long>(mp::msb(n)) - static_cast<long>(mp::msb(d)));
  BigInt q, r;
  if (shift >= 0)
    mp::divide_qr(BigInt(n << shift), d, q, r);
  else
    mp::divide_qr(n, BigInt(d << -shift), q, r);
  const auto [mant, dropped] = round_to_53(q, r != 0);
  return s * ldexp_exact(mant, dropped - shift);
}

double ExactRational::sqrt_to_double() const {
  const int s = sign();
  if (s < 0)
    throw std::domain_error("ExactRational::sqrt_to_double: negative value");
  if (s == 0)
    return 0.0;
  const BigInt n = numerator();
  const BigInt d = denominator();
  // Scale by 4^t so the integer quotient carries at least 112 bits; its
  // integer square root then has at least 56.
  const long bits = static_cast<long>(mp::msb(n)) - static_cast<long>(mp::msb(d));
  long t = (114 - bits) / 2;
  BigInt q, r;
  if (t >= 0)
    mp::divide_qr(BigInt(n << (2 * t)), d, q, r);
  else
    mp::divide_qr(n, BigInt(d << (-2 * t)), q, r);
  const BigInt root = mp::sqrt(q);
  const bool sticky = (r != 0) || (root * root != q);
  const auto [mant, dropped] = round_to_53(root, sticky);
  return ldexp_exact(mant, dropped - t);
}

std::string ExactRational::to_string() const {
  return numerator().str() + "/" + denominator().str();
}

ExactRational &ExactRational::operator+=(const ExactRational &o) {
  value_ += o.value_;
  return *this;
}
ExactRational &ExactRational::operator-=(const ExactRational &o) {
  value_ -= o.value_;
  return *this;
}
ExactRational &ExactRational::operator*=(const ExactRational &o) {
  value_ *= o.value_;
  return *this;
}
ExactRational &ExactRational::operator/=(const ExactRational &o) {
  if (o.is_zero())
    throw std::domain_error("ExactRational: division by zero");
  value_ /= o.value_;
  return *this;
}

ExactRational ExactRational::operator-() const { return ExactRational(Rep(-value_)); }

bool operator==(const ExactRational &a, const ExactRational &b) { return a.value_ == b.value_; }

std::strong_ordering operator<=>(const ExactRational &a, const ExactRational &b) {
  const int c = a.value_.compare(b.value_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

} // namespace angmom
