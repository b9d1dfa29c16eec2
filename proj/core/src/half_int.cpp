#include "angmom/coupled_pair.hpp"
#include "angmom/errors.hpp"
#include "angmom/half_int.hpp"

#include <charconv>
#include <cstdlib>

namespace angmom {

namespace {

bool parse_int(std::string_view s, long long &out) {
  if (!s.empty() && s.front() == '+')
    s.remove_prefix(1);
  if (s.empty())
    return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad(std::string_view text) {
  throw InvalidQuantumNumbers("cannot parse quantum number '" + std::string(text) +
                              "' (expected integer, n/2 or n.5)");
}

constexpr long long kLimit = 1LL << 28;

} // namespace

HalfInt HalfInt::parse(std::string_view text) {
  const auto s = trim(text);
  long long twice = 0;

  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    long long num = 0, den = 0;
    if (!parse_int(s.substr(0, slash), num) || !parse_int(s.substr(slash + 1), den))
      bad(text);
    if (den == 1)
      twice = 2 * num;
    else if (den == 2)
      twice = num;
    else
      bad(text);
  } else if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    long long whole = 0;
    const auto head = s.substr(0, dot);
    const auto frac = s.substr(dot + 1);
    const bool negative = !head.empty() && head.front() == '-';
    if (head == "-" || head.empty())
      whole = 0;
    else if (!parse_int(head, whole))
      bad(text);
    int half = 0;
    if (frac.find_first_not_of('0') == std::string_view::npos)
      half = 0;
    else if (frac.front() == '5' && frac.substr(1).find_first_not_of('0') == std::string_view::npos)
      half = 1;
    else
      bad(text);
    twice = 2 * whole + (negative ? -half : half);
  } else {
    long long n = 0;
    if (!parse_int(s, n))
      bad(text);
    twice = 2 * n;
  }
  if (twice > kLimit || twice < -kLimit)
    bad(text);
  return HalfInt{static_cast<int>(twice)};
}

std::string HalfInt::to_string() const {
  if (is_integer())
    return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

void require_jm(HalfInt j, HalfInt m, std::string_view what) {
  if (!validate_jm(j, m))
    throw InvalidQuantumNumbers("invalid " + std::string(what) + ": j=" + j.to_string() +
                                ", m=" + m.to_string());
}

int parity_sign(HalfInt n) {
  if (!n.is_integer())
    throw InvalidQuantumNumbers("phase exponent " + n.to_string() + " is not an integer");
  return (n.as_int() % 2 == 0) ? 1 : -1;
}

void CoupledPair::validate() const {
  require_jm(j1, m1, "(j1,m1)");
  require_jm(j2, m2, "(j2,m2)");
  require_jm(J, M, "(J,M)");
}

bool CoupledPair::satisfies_selection_rules() const {
  if ((j1.twice + j2.twice + J.twice) % 2 != 0)
    return false;
  if (J.twice > j1.twice + j2.twice || J.twice < std::abs(j1.twice - j2.twice))
    return false;
  return M == m1 + m2;
}

} // namespace angmom
