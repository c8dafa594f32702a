#pragma once

// Lets the exact scalars live inside Eigen containers. Only the traits that
// exact arithmetic can honour are given; tolerance-based helpers are never
// used on these types.

#include <Eigen/Core>

#include "beauville/exact/gaussian_rational.hpp"
#include "beauville/exact/poly.hpp"
#include "beauville/exact/rational.hpp"

namespace Eigen {

namespace beauville_detail {
template <class T>
struct ExactTraits : GenericNumTraits<T> {
  using Real = T;
  using NonInteger = T;
  using Nested = T;
  using Literal = T;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static T epsilon() { return T(0); }
  static T dummy_precision() { return T(0); }
  static T highest() = delete;
  static T lowest() = delete;
  static int digits10() { return 0; }
};
}  // namespace beauville_detail

template <>
struct NumTraits<beauville::Rational> : beauville_detail::ExactTraits<beauville::Rational> {};
template <>
struct NumTraits<beauville::GaussianRational>
    : beauville_detail::ExactTraits<beauville::GaussianRational> {};
template <class C>
struct NumTraits<beauville::Poly<C>> : beauville_detail::ExactTraits<beauville::Poly<C>> {};

}  // namespace Eigen
