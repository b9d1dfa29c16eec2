#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace angmom {

//==============================================================================
//! Angular-momentum quantum number stored as twice its value, so that
//! half-integers (spin 1/2, 3/2, ...) are exact.
struct HalfInt {
  int twice = 0;

  static constexpr HalfInt from_twice(int t) { return HalfInt{t}; }
  static constexpr HalfInt integer(int n) { return HalfInt{2 * n}; }

  //! Accepts "3", "-2", "3/2", "-1/2" and "2.5"-style decimals ending in .5.
  //! Throws InvalidQuantumNumbers on anything else.
  static HalfInt parse(std::string_view text);

  constexpr bool is_integer() const { return twice % 2 == 0; }
  constexpr double value() const { return 0.5 * twice; }
  //! Only meaningful when is_integer().
  constexpr int as_int() const { return twice / 2; }

  std::string to_string() const;

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return {a.twice + b.twice}; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return {a.twice - b.twice}; }
  friend constexpr HalfInt operator-(HalfInt a) { return {-a.twice}; }
  friend constexpr bool operator==(HalfInt, HalfInt) = default;
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;
};

//! True iff j >= 0, |m| <= j and j - m is an integer.
constexpr bool validate_jm(HalfInt j, HalfInt m) {
  if (j.twice < 0)
    return false;
  if (m.twice > j.twice || -m.twice > j.twice)
    return false;
  return (j.twice - m.twice) % 2 == 0;
}

//! Throws InvalidQuantumNumbers with a readable message when !validate_jm.
void require_jm(HalfInt j, HalfInt m, std::string_view what = "(j,m)");

//! (-1)^n for integer n given as a HalfInt; throws if n is half-integer.
int parity_sign(HalfInt n);

} // namespace angmom
