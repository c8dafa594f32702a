#include "beauville/dsl/suite.hpp"

#include <algorithm>
#include <initializer_list>

#include "beauville/error.hpp"
#include "beauville/k3/verify.hpp"
#include "beauville/llv/triple.hpp"
#include "beauville/llv/verify.hpp"
#include "beauville/taut/obstruction.hpp"

namespace beauville {

Suite parse_suite(const std::string& name) {
  if (name == "llv") return Suite::llv;
  if (name == "triple") return Suite::triple;
  if (name == "k3-motive") return Suite::k3_motive;
  if (name == "theta-obstruction") return Suite::theta_obstruction;
  throw InvalidArgument("unknown suite '" + name + "' (llv, triple, k3-motive, theta-obstruction)");
}

const char* suite_name(Suite s) {
  switch (s) {
    case Suite::llv: return "llv";
    case Suite::triple: return "triple";
    case Suite::k3_motive: return "k3-motive";
    case Suite::theta_obstruction: return "theta-obstruction";
  }
  return "?";
}

namespace {

void append(std::vector<Report>& out, std::vector<Report> more) {
  for (auto& r : more) out.push_back(std::move(r));
}

FourClassModel model(const SuiteParams& p, std::uint64_t seed) {
  return seed == 0 ? FourClassModel::standard(p.hdim, p.t) : FourClassModel::rotated(p.hdim, p.t, seed);
}

void run_llv(std::vector<Report>& out, const SuiteParams& p) {
  if (p.trials < 1) throw InvalidArgument("trials must be positive");
  for (int k = 0; k < p.trials; ++k) {
    const std::uint64_t seed = p.seed + static_cast<std::uint64_t>(k);
    const FourClassModel m = model(p, seed);
    auto params = model_params(m);
    params["seed"] = seed;
    append(out, verify_verbitsky(m, params));
    append(out, verify_sigma(m, params));
    append(out, verify_lhl(m, params));
    for (int i : {1, 4}) {  // the identity needs eta orthogonal to eta2, eta3
      auto pi = params;
      pi["eta"] = i;
      append(out, verify_eta_sigma(m, m.eta(i), pi));
    }
  }
}

void run_triple(std::vector<Report>& out, const SuiteParams& p) {
  std::vector<std::pair<int, int>> signs = p.signs;
  if (signs.empty()) signs = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  const int g = p.space ? p.space->genus() : p.genus;
  if (g < 2) throw InvalidArgument("genus must be at least 2");
  const FourClassModel m = model(p, p.seed);
  for (const auto& [c0, c1] : signs) {
    if ((c0 != 1 && c0 != -1) || (c1 != 1 && c1 != -1)) throw InvalidArgument("signs are +1 or -1");
    append(out, verify_triple(m, g, c0, c1));
    append(out, verify_fourier_conjugacy(m, g, c0, c1));
    append(out, p.space ? verify_op_map_compatibility(p.space, c0, c1) : verify_op_map_compatibility(g, c0, c1));
  }
}

}  // namespace

std::vector<Report> run_suite(const std::vector<Suite>& selection, const SuiteParams& params) {
  std::vector<Report> out;
  for (Suite s : selection) {
    switch (s) {
      case Suite::llv: run_llv(out, params); break;
      case Suite::triple: run_triple(out, params); break;
      case Suite::k3_motive: append(out, verify_k3_motive()); break;
      case Suite::theta_obstruction:
        append(out, verify_theta_obstruction(params.genus));
        break;
    }
  }
  sort_reports(out);
  return out;
}

bool all_verified(const std::vector<Report>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.ok(); });
}

}  // namespace beauville
