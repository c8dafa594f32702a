#include "beauville/exact/roots.hpp"

#include <algorithm>

#include "beauville/error.hpp"

namespace beauville {

DiscriminantCertificate discriminant_certificate(const RatPoly& quadratic) {
  if (quadratic.degree() != 2) throw InvalidArgument("discriminant needs a quadratic");
  const Rational a = quadratic.coeff(2);
  const Rational b = quadratic.coeff(1);
  const Rational c = quadratic.coeff(0);
  DiscriminantCertificate cert;
  cert.discriminant = b * b - Rational(4) * a * c;
  // sqrt(p/q) is rational iff p*q is a perfect square (p/q reduced).
  cert.square_test = cert.discriminant.num() * cert.discriminant.den();
  mpz_class root;
  cert.is_square = integer_sqrt(cert.square_test, root);
  return cert;
}

std::vector<Rational> rational_roots(const RatPoly& p) {
  if (p.is_zero()) throw InvalidArgument("roots of the zero polynomial");
  std::vector<Rational> roots;
  switch (p.degree()) {
    case 0:
      return roots;
    case 1:
      roots.push_back(-p.coeff(0) / p.coeff(1));
      return roots;
    case 2: {
      const auto cert = discriminant_certificate(p);
      if (cert.discriminant.sign() < 0 || !cert.is_square) return roots;
      mpz_class sn;
      mpz_class sd;
      integer_sqrt(cert.discriminant.num(), sn);
      integer_sqrt(cert.discriminant.den(), sd);
      const Rational s(sn, sd);
      const Rational two_a = Rational(2) * p.coeff(2);
      roots.push_back((-p.coeff(1) - s) / two_a);
      if (!s.is_zero()) roots.push_back((-p.coeff(1) + s) / two_a);
      std::sort(roots.begin(), roots.end());
      return roots;
    }
    default:
      throw OutsideModel("rational roots only for degree <= 2");
  }
}

std::vector<long> integer_roots(const std::vector<GaussianRational>& coeffs) {
  std::size_t n = coeffs.size();
  while (n > 0 && coeffs[n - 1].is_zero()) --n;
  if (n == 0) throw InvalidArgument("roots of the zero polynomial");
  std::vector<long> out;
  if (n == 1) return out;
  // Cauchy bound 1 + max |c_k / c_n|, using |z| <= |re| + |im|.
  const GaussianRational lead = coeffs[n - 1];
  Rational bound(0);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const GaussianRational q = coeffs[k] / lead;
    bound = std::max(bound, q.re().abs() + q.im().abs());
  }
  const mpz_class top = bound.num() / bound.den() + 1;
  if (!top.fits_slong_p()) throw OutsideModel("root bound too large");
  const long limit = top.get_si();
  for (long x = -limit; x <= limit; ++x) {
    GaussianRational acc(0);
    const GaussianRational gx{Rational(x)};
    for (std::size_t k = n; k-- > 0;) acc = acc * gx + coeffs[k];
    if (acc.is_zero()) out.push_back(x);
  }
  return out;
}

}  // namespace beauville
