#pragma once

#include <string>
#include <vector>

#include "beauville/exact/poly.hpp"
#include "beauville/exact/rational.hpp"

namespace beauville {

/// How the rational-root question for a quadratic was settled.
struct DiscriminantCertificate {
  Rational discriminant;
  mpz_class square_test;  // numerator * denominator of the discriminant
  bool is_square = false;
};

/// Rational roots of a nonzero polynomial of degree at most 2, ascending.
/// Degree > 2 raises OutsideModel.
std::vector<Rational> rational_roots(const RatPoly& p);

/// Discriminant b^2 - 4ac of a quadratic and the integer square test on
/// num*den that decides whether its square root is rational.
DiscriminantCertificate discriminant_certificate(const RatPoly& quadratic);

/// Integer roots of a polynomial with Gaussian rational coefficients
/// (given low degree first).
std::vector<long> integer_roots(const std::vector<GaussianRational>& coeffs);

}  // namespace beauville
