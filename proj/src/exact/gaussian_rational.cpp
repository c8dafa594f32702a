#include "beauville/exact/gaussian_rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "beauville/error.hpp"

namespace beauville {

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  const Rational n = norm();
  return {re_ / n, -im_ / n};
}

// Zero imaginary parts are common and skipping them halves the GMP calls.
GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  if (!o.im_.is_zero()) im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  if (!o.im_.is_zero()) im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (o.im_.is_zero()) {
    re_ *= o.re_;
    if (!im_.is_zero()) im_ *= o.re_;
    return *this;
  }
  if (im_.is_zero()) {
    im_ = re_ * o.im_;
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  return *this *= o.inverse();
}

std::string GaussianRational::str() const {
  if (im_.is_zero()) return re_.str();
  std::string imag;
  if (im_ == Rational(1)) {
    imag = "i";
  } else if (im_ == Rational(-1)) {
    imag = "-i";
  } else {
    imag = im_.str() + "*i";
  }
  if (re_.is_zero()) return imag;
  if (imag[0] == '-') return re_.str() + imag;
  return re_.str() + "+" + imag;
}

namespace {

// One signed summand: rational, i, or rational*i.
void add_summand(std::string_view tok, std::string_view whole, Rational& re, Rational& im) {
  if (tok.empty() || tok == "+" || tok == "-") {
    throw InvalidArgument("not a gaussian rational: '" + std::string(whole) + "'");
  }
  bool neg = false;
  if (tok[0] == '+' || tok[0] == '-') {
    neg = tok[0] == '-';
    tok.remove_prefix(1);
  }
  Rational value;
  bool imaginary = false;
  if (tok == "i") {
    value = Rational(1);
    imaginary = true;
  } else if (tok.size() > 2 && tok.substr(tok.size() - 2) == "*i") {
    value = Rational::parse(tok.substr(0, tok.size() - 2));
    imaginary = true;
  } else {
    value = Rational::parse(tok);
  }
  if (neg) value = -value;
  (imaginary ? im : re) += value;
}

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw InvalidArgument("empty gaussian rational");
  Rational re;
  Rational im;
  std::size_t start = 0;
  int summands = 0;
  for (std::size_t k = 1; k <= s.size(); ++k) {
    if (k == s.size() || s[k] == '+' || s[k] == '-') {
      // A sign directly after '/' belongs to nothing valid; let Rational::parse reject it.
      if (k < s.size() && s[k - 1] == '/') continue;
      add_summand(std::string_view(s).substr(start, k - start), text, re, im);
      start = k;
      ++summands;
    }
  }
  if (summands > 2) throw InvalidArgument("not a gaussian rational: '" + std::string(text) + "'");
  return {re, im};
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

}  // namespace beauville
