#include "ladder/cli.h"

#include "ladder/coulomb.h"
#include "ladder/factorizations.h"
#include "ladder/generators.h"
#include "ladder/opdsl.h"
#include "ladder/report.h"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

namespace ladder {

namespace {

using report::Report;
using report::Row;

// Input problems that are not syntax errors of the command line itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "json";
  std::string out_path;

  std::vector<std::string> exprs;
  std::string expect;
  std::string algebra;
  std::string transform;

  std::string q = "-1", l = "0", m = "0", a = "1", c = "0", d = "1";
  int eps = 1;

  std::string Z = "1";
  int t_max = 6;
  int mu_max = 5;
  int nu_max = 7;
  int n = 1;
  int L = 0;
  double lambda_shift = 0.0;
  std::string csv_path;
  coulomb::Tolerances tol;
  std::optional<double> tol_all;
};

Rational rational_arg(const std::string& name, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::exception& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

Row algebra_row(const AlgebraReport& r) { return report::from_algebra(r); }

Report cmd_parse(const Options& o) {
  Report rep{"parse", {{"expr", o.exprs.at(0)}}, {}};
  OperatorExpr e = dsl::parse(o.exprs[0]);
  std::string text = dsl::render(e);
  OperatorExpr back = dsl::parse(text);
  rep.rows.push_back({"parse(render(expr)) = expr", text, dsl::render(back), dsl::render(back - e), back == e});
  return rep;
}

Report cmd_commutator(const Options& o) {
  Report rep{"commutator", {{"a", o.exprs.at(0)}, {"b", o.exprs.at(1)}}, {}};
  OperatorExpr a = dsl::parse(o.exprs[0]);
  OperatorExpr b = dsl::parse(o.exprs[1]);
  OperatorExpr c = commutator(a, b);
  std::string name = "[" + dsl::render(a) + ", " + dsl::render(b) + "]";
  if (o.expect.empty()) {
    rep.rows.push_back(report::info(name, dsl::render(c)));
  } else {
    rep.params.emplace_back("expect", o.expect);
    OperatorExpr expected = dsl::parse(o.expect);
    rep.rows.push_back({name, dsl::render(expected), dsl::render(c), dsl::render(c - expected), c == expected});
  }
  return rep;
}

Report cmd_verify_algebra(const Options& o) {
  Report rep{"verify-algebra", {{"algebra", o.algebra}}, {}};
  if (o.algebra == "su11") {
    for (const auto& r : verify_su11()) rep.rows.push_back(algebra_row(r));
    for (const auto& r : verify_jacobi(build_T().members)) rep.rows.push_back(algebra_row(r));
  } else if (o.algebra == "weyl") {
    for (const auto& r : verify_weyl()) rep.rows.push_back(algebra_row(r));
  } else {
    const GeneratorSet t = build_T();
    const GeneratorSet ab = build_AB();
    auto closure_row = [&](const std::string& name, const std::vector<OperatorExpr>& basis, std::size_t want) {
      ClosureReport c = closure_check(basis, 32);
      rep.rows.push_back({name, std::to_string(want), c.closed ? std::to_string(c.dimension) : "not closed",
                          std::to_string(static_cast<long>(c.dimension) - static_cast<long>(want)),
                          c.closed && c.dimension == want});
    };
    closure_row("closure dim {T0, T+, T-}", {t["T0"], t["Tplus"], t["Tminus"]}, 3);
    closure_row("closure dim {A+, A-, B+, B-, 1}",
                {ab["Aplus"], ab["Aminus"], ab["Bplus"], ab["Bminus"], OperatorExpr::identity()}, 5);
    std::vector<OperatorExpr> bilinears;
    for (const auto& [name, op] : weyl_bilinears()) bilinears.push_back(op);
    closure_row("closure dim of the symmetrized bilinears", bilinears, 10);
  }
  return rep;
}

Report cmd_casimir() {
  Report rep{"casimir", {}, {}};
  for (const auto& r : verify_casimir()) rep.rows.push_back(algebra_row(r));
  return rep;
}

Report cmd_transform(const Options& o) {
  Report rep{"transform", {{"kind", o.transform}}, {}};
  const Rational l = rational_arg("l", o.l), m = rational_arg("m", o.m);
  auto build = [&]() -> TransformResult {
    if (o.transform == "f2b") {
      const Rational q = rational_arg("q", o.q), a = rational_arg("a", o.a);
      rep.params.insert(rep.params.end(), {{"q", to_string(q)}, {"l", to_string(l)}, {"m", to_string(m)},
                                           {"a", to_string(a)}});
      return f_to_b(q, l, m, a);
    } else if (o.transform == "f2c") {
      const Rational q = rational_arg("q", o.q);
      rep.params.insert(rep.params.end(), {{"q", to_string(q)}, {"l", to_string(l)}, {"m", to_string(m)},
                                           {"eps", std::to_string(o.eps)}});
      return f_to_c(q, l, m, o.eps);
    } else {
      const Rational a = rational_arg("a", o.a), c = rational_arg("c", o.c), d = rational_arg("d", o.d);
      rep.params.insert(rep.params.end(), {{"a", to_string(a)}, {"c", to_string(c)}, {"d", to_string(d)},
                                           {"l", to_string(l)}, {"m", to_string(m)},
                                           {"eps", std::to_string(o.eps)}});
      return b_to_c(FamilyParams::type_b(a, c, d), l, m, o.eps);
    }
  };
  std::optional<TransformResult> built;
  try {
    built = build();
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }

  const TransformResult& t = *built;

  if (t.target.type() == FamilyType::B) {
    rep.rows.push_back(report::info("dbar/abar", to_string(Rational(t.target.d() / t.target.a()))));
    rep.rows.push_back(report::info("mbar+cbar", to_string(t.quantum_map.m_plus_c)));
    rep.rows.push_back(report::info("lbar+cbar", to_string(t.quantum_map.l_plus_c)));
    rep.rows.push_back(report::info("abar", to_string(t.target.a())));
    rep.rows.push_back(report::info("dbar", to_string(t.target.d())));
  } else {
    rep.rows.push_back(report::info("bhat", to_string(t.target.b())));
    rep.rows.push_back(report::info("mhat+chat", to_string(t.quantum_map.m_plus_c)));
    rep.rows.push_back(report::info("lhat+chat", to_string(t.quantum_map.l_plus_c)));
  }
  rep.rows.push_back(report::info("s", to_string(t.scale_s)));
  for (const auto& r : t.verify()) rep.rows.push_back(report::from_relation(r));
  return rep;
}

coulomb::Tolerances tolerances(const Options& o) { return o.tol; }

Report cmd_coulomb_verify(const Options& o) {
  using namespace coulomb;
  const Rational Z = rational_arg("Z", o.Z);
  if (sgn(Z) <= 0) throw UsageError("--Z must be positive");
  if (o.t_max < 1 || o.mu_max < 0 || o.nu_max < 0) throw UsageError("label bounds must be non-negative");
  const Tolerances tol = tolerances(o);
  Report rep{"coulomb-verify",
             {{"Z", to_string(Z)},
              {"t_max", std::to_string(o.t_max)},
              {"mu_max", std::to_string(o.mu_max)},
              {"nu_max", std::to_string(o.nu_max)},
              {"tol_coefficient", report::format_double(tol.coefficient)},
              {"tol_pointwise", report::format_double(tol.pointwise)},
              {"tol_norm", report::format_double(tol.norm)}},
             {}};

  const int top = std::max(o.t_max, (o.mu_max + o.nu_max + 2) / 2 + 1) + 1;
  auto rule = std::make_shared<const QuadratureRule>(gauss_laguerre(quadrature_order(Rational(top))));
  const FamilyParams f = FamilyParams::type_f(-Z);
  const OperatorExpr cas = casimir().casimir;

  for (int n = 1; n <= o.t_max; ++n) {
    const Rational e = energy(Z, n);
    const Rational rule_value = eigenvalue(f, Rational(n - 1)) / 2;
    rep.rows.push_back({"E_" + std::to_string(n) + " = lambda/2", to_string(rule_value), to_string(e),
                        to_string(Rational(e - rule_value)), e == rule_value});
  }
  for (int t = 1; t <= o.t_max; ++t) {
    for (int m = 0; m < t; ++m) {
      const QuantumState st = QuantumState::make(SuLabels{t, m}, Z);
      rep.rows.push_back(report::from_norm(check_norm(st, tol.norm, rule)));
      for (int dir : {1, -1}) rep.rows.push_back(report::from_action(check_action(Generator::T, dir, st, tol, rule)));
      rep.rows.push_back(report::from_casimir(check_casimir(cas, st, tol.pointwise, rule)));
      const double res = schrodinger_residual(st, rule);
      rep.rows.push_back({"Schrodinger residual " + describe(st.labels()), "0", report::format_double(res),
                          report::format_double(res), res <= tol.pointwise});
    }
  }
  for (int mu = 0; mu <= o.mu_max; ++mu) {
    for (int nu = mu + 1; nu <= o.nu_max; nu += 2) {
      const QuantumState st = QuantumState::make(WeylLabels{mu, nu}, Z);
      rep.rows.push_back(report::from_norm(check_norm(st, tol.norm, rule)));
      for (Generator g : {Generator::A, Generator::B})
        for (int dir : {1, -1}) rep.rows.push_back(report::from_action(check_action(g, dir, st, tol, rule)));
    }
  }
  return rep;
}

Report cmd_coulomb_residual(const Options& o) {
  using namespace coulomb;
  const Rational Z = rational_arg("Z", o.Z);
  if (sgn(Z) <= 0) throw UsageError("--Z must be positive");
  const Labels labels = SuLabels{o.n, o.L};
  if (!valid(labels)) throw UsageError("need n >= 1 and 0 <= L <= n-1");
  const Tolerances tol = tolerances(o);
  Report rep{"coulomb-residual",
             {{"Z", to_string(Z)},
              {"n", std::to_string(o.n)},
              {"L", std::to_string(o.L)},
              {"lambda_shift", report::format_double(o.lambda_shift)},
              {"tol_pointwise", report::format_double(tol.pointwise)}},
             {}};
  auto rule = std::make_shared<const QuadratureRule>(gauss_laguerre(quadrature_order(Rational(o.n))));
  const QuantumState st = QuantumState::make(labels, Z);
  const double res = schrodinger_residual(st, rule, o.lambda_shift);
  rep.rows.push_back({"Schrodinger residual " + describe(labels), "0", report::format_double(res),
                      report::format_double(res), res <= tol.pointwise});
  rep.rows.push_back(report::from_norm(check_norm(st, tol.norm, rule)));
  if (!o.csv_path.empty()) {
    std::ofstream csv(o.csv_path);
    if (!csv) throw UsageError("cannot write " + o.csv_path);
    csv << "rho,psi\n";
    for (double rho : rule->nodes) csv << report::format_double(rho) << "," << report::format_double(st.value(rho)) << "\n";
  }
  return rep;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  if (const char* env = std::getenv("LADDER_FORGE_TOL")) {
    try {
      const double v = std::stod(env);
      o.tol = {v, v, v};
    } catch (const std::exception&) {
      err << "ignoring malformed LADDER_FORGE_TOL='" << env << "'\n";
    }
  }

  CLI::App app{"Operator algebra and ladder-operator verification for the Coulomb problem", "ladder-forge"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", o.out_path, "Write the report to this file instead of stdout");

  auto* parse = app.add_subcommand("parse", "Parse an operator and print its canonical form");
  parse->add_option("expr", o.exprs, "Operator expression")->required()->expected(1);

  auto* comm = app.add_subcommand("commutator", "Commutator [A, B] in canonical form");
  comm->add_option("exprs", o.exprs, "Two operator expressions")->required()->expected(2);
  comm->add_option("--expect", o.expect, "Compare against this expression");

  auto* alg = app.add_subcommand("verify-algebra", "Check the commutation relations of a generator set");
  alg->add_option("algebra", o.algebra)->required()->check(CLI::IsMember({"su11", "weyl", "sp4"}));

  auto* cas = app.add_subcommand("casimir", "Check the Casimir identity and its centrality");

  auto* tr = app.add_subcommand("transform", "Map a factorization type onto another");
  tr->add_option("kind", o.transform)->required()->check(CLI::IsMember({"f2b", "f2c", "b2c"}));
  tr->add_option("--q", o.q, "Type F charge parameter (q < 0)");
  tr->add_option("--l", o.l, "Eigenvalue label of the source problem");
  tr->add_option("--m", o.m, "Ladder label of the source problem");
  tr->add_option("--eps", o.eps, "Branch of the F -> C and B -> C maps")->check(CLI::IsMember({1, -1}));
  tr->add_option("--a", o.a, "Type B a (f2b: target a)");
  tr->add_option("--c", o.c, "Type B c");
  tr->add_option("--d", o.d, "Type B d");

  auto add_tolerances = [&](CLI::App* sub) {
    sub->add_option("--tol", o.tol_all, "Set all three tolerances");
    sub->add_option("--tol-coef", o.tol.coefficient, "Relative tolerance on action coefficients");
    sub->add_option("--tol-pointwise", o.tol.pointwise, "Tolerance on L2 and residual errors");
    sub->add_option("--tol-norm", o.tol.norm, "Tolerance on |<psi|psi> - 1|");
  };

  auto* cv = app.add_subcommand("coulomb-verify", "Numerical checks of the ladder actions on bound states");
  cv->add_option("--Z", o.Z, "Nuclear charge (rational, > 0)");
  cv->add_option("--t-max", o.t_max, "Largest t for the T+- checks");
  cv->add_option("--mu-max", o.mu_max, "Largest mu for the A+-, B+- checks");
  cv->add_option("--nu-max", o.nu_max, "Largest nu for the A+-, B+- checks");
  add_tolerances(cv);

  auto* cr = app.add_subcommand("coulomb-residual", "Residual of the radial equation for one state");
  cr->add_option("--Z", o.Z, "Nuclear charge (rational, > 0)");
  cr->add_option("--n", o.n, "Principal quantum number")->required();
  cr->add_option("--L", o.L, "Angular momentum")->required();
  cr->add_option("--lambda-shift", o.lambda_shift, "Perturb lambda = 2E by this amount");
  cr->add_option("--csv", o.csv_path, "Dump (rho, psi) on the quadrature nodes");
  add_tolerances(cr);

  for (CLI::App* sub : {parse, comm, alg, cas, tr, cv, cr}) sub->fallthrough();

  std::vector<std::string> argv_storage{"ladder-forge"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }
  if (o.tol_all) o.tol = {*o.tol_all, *o.tol_all, *o.tol_all};

  Report rep;
  try {
    if (parse->parsed()) rep = cmd_parse(o);
    else if (comm->parsed()) rep = cmd_commutator(o);
    else if (alg->parsed()) rep = cmd_verify_algebra(o);
    else if (cas->parsed()) rep = cmd_casimir();
    else if (tr->parsed()) rep = cmd_transform(o);
    else if (cv->parsed()) rep = cmd_coulomb_verify(o);
    else rep = cmd_coulomb_residual(o);
  } catch (const dsl::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  const std::string text = o.format == "json" ? report::to_json(rep) : report::to_text(rep);
  if (o.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out_path);
    if (!file) {
      err << "error: cannot write " << o.out_path << "\n";
      return 2;
    }
    file << text;
  }
  if (rep.pass()) return 0;
  for (const Row& row : rep.failures()) err << report::row_text(row);
  return 1;
}

}  // namespace ladder
