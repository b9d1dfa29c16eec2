#pragma once

#include "angmom/exact_rational.hpp"

namespace angmom::detail {

//! n! for n >= 0. Grows an append-only table on demand; references stay
//! valid and the function is safe to call from several threads.
const BigInt &factorial(int n);

//! n!/k! for 0 <= k <= n, as a product (no table lookup of n!).
BigInt falling_ratio(int n, int k);

} // namespace angmom::detail
