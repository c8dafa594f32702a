#pragma once

#include <vector>

#include "beauville/k3/relative.hpp"
#include "beauville/report.hpp"

namespace beauville {

/// Multiplicativity reduced against the relbv axiom: difference = lambda * relbv.
struct Reduction {
  TripleCycle difference;
  Rational lambda;
  TripleCycle residual;  // difference - lambda * relbv
};
Reduction reduce_multiplicativity();

std::vector<Report> verify_bv_ring();
std::vector<Report> verify_projectors();
std::vector<Report> verify_motivic_sl2();
std::vector<Report> verify_fourier_stability();
std::vector<Report> verify_multiplicativity();
std::vector<Report> verify_absolute_push();

/// Everything above.
std::vector<Report> verify_k3_motive();

}  // namespace beauville
