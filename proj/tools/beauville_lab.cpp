#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "beauville/dsl/eval.hpp"
#include "beauville/dsl/suite.hpp"
#include "beauville/error.hpp"

using namespace beauville;

namespace {

constexpr int kSchemaVersion = 1;

struct Output {
  std::string format = "json";
  bool timing = false;
  bool ledger = false;
};

void print_text(const Report& r, const Output& o) {
  std::cout << status_name(r.status) << "  " << r.check << "  " << r.params.dump();
  if (o.timing) std::cout << "  " << r.elapsed_ms << " ms";
  std::cout << "\n";
  if (!r.value.empty()) std::cout << "    value: " << r.value << "\n";
  if (!r.witness.empty()) std::cout << "    witness: " << r.witness << "\n";
  if (o.ledger)
    for (const auto& a : r.assumptions) std::cout << "    assumes: " << a << "\n";
}

int emit(const std::string& suite, const std::vector<Report>& reports, const Output& o) {
  if (o.format == "json") {
    nlohmann::ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["suite"] = suite;
    doc["reports"] = nlohmann::ordered_json::array();
    for (const auto& r : reports) doc["reports"].push_back(r.to_json(o.timing));
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& r : reports) print_text(r, o);
    std::size_t ok = 0;
    for (const auto& r : reports) ok += r.ok();
    std::cout << ok << "/" << reports.size() << " verified\n";
  }
  return all_verified(reports) ? 0 : 1;
}

Locus parse_locus(const std::string& s) {
  for (Locus l : {Locus::total, Locus::open, Locus::boundary, Locus::base, Locus::boundary_base})
    if (s == locus_name(l)) return l;
  throw InvalidArgument("unknown locus '" + s + "'");
}

int run_eval(const std::string& ctx_name, const std::string& src, const EvalParams& p, const Output& o) {
  const EvalContext ctx = parse_context(ctx_name);
  const AstPtr ast = parse(src);
  nlohmann::ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["context"] = context_name(ctx);
  doc["expr"] = print(*ast);
  int code = 0;
  try {
    const Value v = eval(*ast, ctx, p);
    doc["status"] = "ok";
    doc["value"] = value_str(v, ctx, p);
    doc["is_zero"] = value_is_zero(v);
  } catch (const OutsideModel& e) {
    doc["status"] = "unsupported";
    doc["reason"] = e.what();
    code = 1;
  }
  if (o.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else if (code == 0) {
    std::cout << doc["value"].get<std::string>() << "\n";
  } else {
    std::cout << "unsupported: " << doc["reason"].get<std::string>() << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of sl2 actions, K3 motives and theta obstructions"};
  app.fallthrough();  // global flags may follow the subcommand
  app.require_subcommand(1);
  Output out;
  app.add_option("--format", out.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timing", out.timing, "include per-check milliseconds (output no longer byte stable)");
  app.add_flag("--ledger", out.ledger, "print consumed assumptions in text output");

  SuiteParams sp;
  std::string t = "1";
  std::string space_file;
  std::vector<int> c0, c1;

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);

  auto* llv = verify->add_subcommand("llv", "Verbitsky relations and the sigma triples");
  llv->add_option("--hdim", sp.hdim, "model dimension")->check(CLI::Range(6, 10));
  llv->add_option("--t", t, "common square of the eta classes, a rational");
  llv->add_option("--trials", sp.trials, "number of seeded quadruples")->check(CLI::PositiveNumber);
  llv->add_option("--seed", sp.seed, "first seed; 0 is the standard quadruple");

  auto* triple = verify->add_subcommand("triple", "Fourier conjugate triple, all sign pairs unless given");
  triple->add_option("--genus", sp.genus, "genus g >= 2");
  triple->add_option("--c0", c0, "sign c0")->check(CLI::IsMember({-1, 1}));
  triple->add_option("--c1", c1, "sign c1")->check(CLI::IsMember({-1, 1}));
  triple->add_option("--hdim", sp.hdim, "model dimension")->check(CLI::Range(6, 10));
  triple->add_option("--t", t, "common square of the eta classes");
  triple->add_option("--seed", sp.seed, "quadruple seed");
  triple->add_option("--space", space_file, "JSON space for the class-level check (genus taken from it)")
      ->check(CLI::ExistingFile);

  auto* k3 = verify->add_subcommand("k3-motive", "motivic decomposition of the elliptic K3");

  auto* theta = verify->add_subcommand("theta-obstruction", "tautological obstruction for one genus");
  theta->add_option("--genus", sp.genus, "genus g >= 2")->required();

  EvalParams ep;
  std::string context, expr, locus = "total";
  auto* ev = app.add_subcommand("eval", "evaluate one expression");
  ev->add_option("--context", context, "llv, k3 or taut")->required();
  ev->add_option("expr", expr, "expression")->required();
  ev->add_option("--hdim", ep.hdim, "llv model dimension")->check(CLI::Range(6, 10));
  ev->add_option("--t", t, "llv eta square");
  ev->add_option("--seed", ep.seed, "llv quadruple seed");
  ev->add_option("--genus", ep.genus, "taut genus");
  ev->add_option("--locus", locus, "taut locus: total, open, boundary, base, boundary_base");

  int show_genus = 3;
  auto* show = app.add_subcommand("show-space", "print the standard Mukai space as JSON");
  show->add_option("--genus", show_genus, "genus");
  show->add_option("--t", t, "eta square");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (show->parsed()) {
      std::cout << MukaiSpace::standard(show_genus, Rational::parse(t))->to_json().dump(2) << "\n";
      return 0;
    }
    if (ev->parsed()) {
      ep.t = Rational::parse(t);
      ep.locus = parse_locus(locus);
      return run_eval(context, expr, ep, out);
    }
    sp.t = Rational::parse(t);
    if (llv->parsed()) return emit("llv", run_suite({Suite::llv}, sp), out);
    if (triple->parsed()) {
      if (!space_file.empty()) {
        std::ifstream in(space_file);
        sp.space = MukaiSpace::from_json(nlohmann::json::parse(in));
      }
      for (int a : c0.empty() ? std::vector<int>{1, -1} : c0)
        for (int b : c1.empty() ? std::vector<int>{1, -1} : c1) sp.signs.emplace_back(a, b);
      return emit("triple", run_suite({Suite::triple}, sp), out);
    }
    if (k3->parsed()) return emit("k3-motive", run_suite({Suite::k3_motive}, sp), out);
    if (theta->parsed()) return emit("theta-obstruction", run_suite({Suite::theta_obstruction}, sp), out);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "bad JSON: " << e.what() << "\n";
    return 2;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
