#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orlicz/bergman.hpp"
#include "orlicz/harness.hpp"
#include "orlicz/io.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/operators.hpp"
#include "orlicz/orlicz_function.hpp"

namespace {

using namespace orlicz;

struct BergmanRow {
  double p, closed_form, computed, difference;
};

void print_kv(const std::string& key, const std::string& value) {
  std::cout << key << " = " << value << "\n";
}

int run_norm(const std::string& phi_spec, const std::string& op_spec,
             double rel_tol, const std::string& output) {
  const OrliczFunction f = parse_phi_spec(phi_spec);
  const CompactOperator op = load_operator(op_spec);
  const NormResult lux = luxemburg_norm(op, f, rel_tol);
  const NormResult orl = amemiya_norm(op, f, rel_tol);
  if (output == "json") {
    JsonObject o;
    o.add("phi", phi_spec);
    o.add("operator", op_spec);
    o.add_raw("luxemburg", to_json(lux));
    o.add_raw("orlicz", to_json(orl));
    std::cout << o.str() << "\n";
  } else {
    print_kv("luxemburg.value", json_double(lux.value));
    print_kv("luxemburg.iterations", std::to_string(lux.iterations));
    print_kv("luxemburg.bracket_width", json_double(lux.bracket_width));
    print_kv("luxemburg.method", to_string(lux.method));
    print_kv("orlicz.value", json_double(orl.value));
    print_kv("orlicz.iterations", std::to_string(orl.iterations));
    print_kv("orlicz.bracket_width", json_double(orl.bracket_width));
    print_kv("orlicz.method", to_string(orl.method));
  }
  return 0;
}

int run_modular(const std::string& phi_spec, const std::string& op_spec,
                double lambda, double eps_tail, const std::string& output) {
  const OrliczFunction f = parse_phi_spec(phi_spec);
  const CompactOperator op = load_operator(op_spec);
  const ModularValue m = modular(op, f, lambda, eps_tail);
  if (output == "json") {
    JsonObject o;
    o.add("phi", phi_spec);
    o.add("operator", op_spec);
    o.add("lambda", lambda);
    o.add_raw("modular", to_json(m));
    std::cout << o.str() << "\n";
  } else {
    print_kv("modular.value", json_double(m.value));
    print_kv("modular.terms_used", std::to_string(m.terms_used));
    print_kv("modular.tail_bound", json_double(m.tail_bound));
  }
  return 0;
}

int run_membership(const std::string& phi_spec, const std::string& op_spec,
                   const std::string& output) {
  const OrliczFunction f = parse_phi_spec(phi_spec);
  const CompactOperator op = load_operator(op_spec);
  const MembershipVerdict v = classify_membership(op, f);
  if (output == "json") {
    JsonObject o;
    o.add("phi", phi_spec);
    o.add("operator", op_spec);
    o.add_raw("verdict", to_json(v));
    std::cout << o.str() << "\n";
  } else {
    print_kv("in_S_phi", v.in_S_phi ? "true" : "false");
    print_kv("in_E_phi", v.in_E_phi ? "true" : "false");
    print_kv("witness_lambda",
             v.witness_lambda ? json_double(*v.witness_lambda) : "null");
    print_kv("rationale", to_string(v.rationale));
  }
  return 0;
}

int run_verify(std::uint64_t seed, int trials, const std::string& output) {
  SuiteConfig config;
  config.seed = seed;
  config.trials = trials;
  const std::vector<CheckReport> reports = run_suite(config);
  if (output == "json") {
    std::cout << to_json(reports) << "\n";
  } else {
    for (const auto& r : reports)
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.name
                << " slack=" << json_double(r.slack)
                << " lhs=" << json_double(r.lhs)
                << " rhs=" << json_double(r.rhs) << "\n";
  }
  return all_passed(reports) ? 0 : 1;
}

int run_bergman(double extra_p, const std::string& output) {
  std::vector<double> ps = {1.5, 2.0, 3.0, 4.0};
  if (extra_p != 0.0) ps.push_back(extra_p); // out-of-range p rejected below
  const CompactOperator op = bergman_operator();
  std::vector<BergmanRow> rows;
  for (double p : ps) {
    BergmanRow row;
    row.p = p;
    row.closed_form = bergman_schatten_norm(p);
    row.computed = luxemburg_norm(op, OrliczFunction::power(p), 1e-9).value;
    row.difference = row.computed - row.closed_form;
    rows.push_back(row);
  }
  const double cosh_rank_one =
      rank_one_luxemburg(OrliczFunction::cosh_minus_one());
  if (output == "json") {
    JsonArray table;
    for (const auto& r : rows) {
      JsonObject o;
      o.add("p", r.p);
      o.add("closed_form", r.closed_form);
      o.add("computed", r.computed);
      o.add("difference", r.difference);
      table.add_raw(o.str());
    }
    JsonObject top;
    top.add_raw("table", table.str());
    top.add("cosh_rank_one", cosh_rank_one);
    std::cout << top.str() << "\n";
  } else {
    for (const auto& r : rows)
      std::cout << "p=" << json_double(r.p)
                << " closed_form=" << json_double(r.closed_form)
                << " computed=" << json_double(r.computed)
                << " difference=" << json_double(r.difference) << "\n";
    std::cout << "cosh_rank_one = " << json_double(cosh_rank_one) << "\n";
  }
  for (const auto& r : rows)
    if (std::abs(r.difference) > 1e-8) return 1;
  return 0;
}

int run_svd(const std::string& op_spec, std::int64_t max_terms,
            const std::string& output) {
  const CompactOperator op = load_operator(op_spec);
  const SingularSpectrum sp = singular_values(op, max_terms);
  if (output == "json") {
    JsonObject o;
    o.add("operator", op_spec);
    o.add_raw("spectrum", to_json(sp));
    std::cout << o.str() << "\n";
  } else {
    const auto flat = sp.expanded();
    for (std::size_t i = 0; i < sp.values.size(); ++i)
      std::cout << "s=" << json_double(sp.values[i])
                << " multiplicity=" << sp.multiplicities[i] << "\n";
    std::cout << "count = " << flat.size() << "\n";
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orlicz norms, modulars and trace inequalities for compact operators"};
  app.require_subcommand(1);

  std::string phi_spec, op_spec, output = "json";
  double rel_tol = 1e-10, eps_tail = 1e-11, lambda = 1.0, extra_p = 0.0;
  std::uint64_t seed = 42;
  int trials = 500;
  std::int64_t max_terms = 10;

  const auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--output", output, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
  };

  auto* norm = app.add_subcommand("norm", "Luxemburg and Orlicz norms");
  norm->add_option("--phi", phi_spec, "Orlicz function spec")->required();
  norm->add_option("--op", op_spec, "operator source")->required();
  norm->add_option("--rel-tol", rel_tol, "relative tolerance");
  add_output(norm);

  auto* mod = app.add_subcommand("modular", "Tr phi(lambda x)");
  mod->add_option("--phi", phi_spec, "Orlicz function spec")->required();
  mod->add_option("--op", op_spec, "operator source")->required();
  mod->add_option("--lambda", lambda, "scale factor")->required();
  mod->add_option("--eps-tail", eps_tail, "tail tolerance");
  add_output(mod);

  auto* mem = app.add_subcommand("membership", "S_phi / E_phi classification");
  mem->add_option("--phi", phi_spec, "Orlicz function spec")->required();
  mem->add_option("--op", op_spec, "operator source")->required();
  add_output(mem);

  auto* ver = app.add_subcommand("verify", "run the inequality suite");
  ver->add_option("--seed", seed, "base seed");
  ver->add_option("--trials", trials, "trials per check")->check(CLI::PositiveNumber);
  add_output(ver);

  auto* ber = app.add_subcommand("bergman", "closed form vs computed norms");
  ber->add_option("--p", extra_p, "additional exponent row");
  add_output(ber);

  auto* sv = app.add_subcommand("svd", "singular spectrum");
  sv->add_option("--op", op_spec, "operator source")->required();
  sv->add_option("--max-terms", max_terms, "truncation for analytic operators")
      ->check(CLI::PositiveNumber);
  add_output(sv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(norm))
      return run_norm(phi_spec, op_spec, rel_tol, output);
    if (app.got_subcommand(mod))
      return run_modular(phi_spec, op_spec, lambda, eps_tail, output);
    if (app.got_subcommand(mem)) return run_membership(phi_spec, op_spec, output);
    if (app.got_subcommand(ver)) return run_verify(seed, trials, output);
    if (app.got_subcommand(ber)) return run_bergman(extra_p, output);
    if (app.got_subcommand(sv)) return run_svd(op_spec, max_terms, output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
