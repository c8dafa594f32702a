#pragma once

#include <utility>
#include <vector>

#include "beauville/llv/model.hpp"
#include "beauville/report.hpp"

namespace beauville {

/// A named difference that must vanish.
struct Residual {
  std::string where;
  Op diff;
};

/// Verified iff every residual is the zero matrix; the witness names the
/// first nonzero one.
Report& expect_zero(ReportSink& sink, const std::string& check, const std::vector<Residual>& residuals,
                    const MukaiSpace& space);

nlohmann::ordered_json model_params(const FourClassModel& m);

/// The six relation families among K_ij, e, f, h for all distinct indices.
std::vector<Report> verify_verbitsky(const FourClassModel& m, nlohmann::ordered_json params);

/// sigma and sigma-bar triples, mixed brackets, and h_sigbar - h_sigma = i K_ij.
std::vector<Report> verify_sigma(const FourClassModel& m, nlohmann::ordered_json params);

struct LhLambda {
  Op L;
  Op Lambda;
  Op H;
};
LhLambda lhl_elements(const FourClassModel& m);

/// (L, H, Lambda) closes and matches the K_ij expressions.
std::vector<Report> verify_lhl(const FourClassModel& m, nlohmann::ordered_json params);

/// e_eta = [e_sigma, [f_sigma, e_eta]] with sigma = sigma_23, eta orthogonal
/// to eta_2 and eta_3.
std::vector<Report> verify_eta_sigma(const FourClassModel& m, const LatticeClass& eta, nlohmann::ordered_json params);

struct WeightDecomposition {
  std::vector<std::pair<long, int>> weights;  // eigenvalue, eigenspace dimension
  bool integral = true;         // every eigenvalue is an integer
  bool diagonalizable = true;   // eigenspaces fill the space
  bool symmetric() const;
  std::string str() const;
};

/// Exact eigenspace decomposition of an operator with integer spectrum.
WeightDecomposition weight_decompose(const Op& h);

}  // namespace beauville
