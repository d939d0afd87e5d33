#pragma once

#include <vector>

#include "eulersum/bigfloat.hpp"

namespace eulersum {

/// All complex roots of a square-free polynomial of degree >= 1, each with
/// |q(root)| < 10^-D * ||q||. Conjugate pairs are made exactly conjugate and
/// the result is sorted by real part, then imaginary part. Throws
/// std::runtime_error if the iteration fails to converge.
std::vector<BigComplex> find_roots_hp(const Polynomial& q, int digits);

}  // namespace eulersum
