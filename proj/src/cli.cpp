#include "ratsub/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ratsub/io.hpp"
#include "ratsub/parse.hpp"
#include "ratsub/suites.hpp"

namespace ratsub {

namespace {

struct Options {
  std::string command;
  std::string file;
  std::string at;
  std::string side = "right";
  int degree_cap = -1;
};

Json load_json(const std::string& path) {
  try {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open '" + path + "'");
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("'" + path + "' is not valid JSON: " + e.what());
  }
}

template <class F>
const RationalMap<F>& need_map(const Problem<F>& pr, const std::string& cmd) {
  if (!pr.map) throw InvalidArgument(cmd + " needs a \"map\" entry in the problem file");
  return *pr.map;
}

template <class F>
int dispatch(const Options& o, const ProblemFile& pf, std::ostream& out) {
  const Problem<F> pr = build_problem<F>(pf);
  const PolyMatrix<F>& p = pr.p;
  Json j;
  j["command"] = o.command;
  j["field"] = pf.field.to_string();
  j["variable"] = pf.var;
  if (pr.map) {
    j["map_variable"] = pf.map_var;
    j["map"] = Json{{"n", to_string(pr.map->n(), pf.map_var)}, {"d", to_string(pr.map->d(), pf.map_var)}};
  }
  j["grade"] = p.grade();
  int code = kExitOk;
  if (o.command == "smith") {
    j["smith"] = to_json(smith_form(p), pf.var);
  } else if (o.command == "eig") {
    j["eigenstructure"] = to_json(complete_eigenstructure(p), pf.var);
  } else if (o.command == "transform") {
    const RationalMap<F>& map = need_map(pr, o.command);
    const PolyMatrix<F> q = phi_matrix(p, map);
    j["G"] = map.G();
    j["result_grade"] = q.grade();
    j["degree_bound"] = to_json(degree_bound(p, map));
    j["matrix"] = to_json(q, pf.map_var);
  } else if (o.command == "preimage") {
    const RationalMap<F>& map = need_map(pr, o.command);
    const CharPoint<F> t =
        o.at == "inf" ? CharPoint<F>::infinity() : CharPoint<F>::value(pf.field, parse_scalar<F>(o.at, pf.field));
    j["preimage"] = to_json(preimage_set(map, t), pf.var, pf.map_var);
  } else if (o.command == "minbasis") {
    const MinimalBasis<F> b =
        o.side == "left" ? left_kernel_minimal_basis(p, o.degree_cap) : right_kernel_minimal_basis(p, o.degree_cap);
    j["side"] = o.side;
    j["basis"] = to_json(b, pf.var);
  } else if (o.command == "verify") {
    const TheoremReport<F> r = verify_theorem(p, need_map(pr, o.command));
    j["report"] = to_json(r, pf.var, pf.map_var);
    code = r.verdict ? kExitOk : kExitFalse;
  }
  out << j.dump(2) << "\n";
  return code;
}

int selftest(const SuiteOptions& so, std::ostream& out) {
  Json j;
  j["command"] = "selftest";
  j["seed"] = so.seed;
  j["cases"] = so.cases;
  j["max_dim"] = {so.max_rows, so.max_cols};
  j["max_deg"] = so.max_deg;
  j["max_G"] = so.max_G;
  Json fields = Json::array();
  for (const auto& f : so.fields) fields.push_back(f.to_string());
  j["fields"] = fields;
  bool ok = true;
  Json suites = Json::array();
  for (auto* fn : {&smith_oracle_suite, &minbasis_oracle_suite, &theorem_suite, &mobius_suite, &structural_suite,
                   &root_transport_suite}) {
    const SuiteResult r = fn(so);
    ok = ok && r.passed();
    suites.push_back(Json{{"name", r.name},
                          {"cases", r.cases},
                          {"failures", r.failures},
                          {"findings", r.findings},
                          {"stats", r.stats},
                          {"messages", r.messages}});
  }
  j["suites"] = suites;
  j["passed"] = ok;
  out << j.dump(2) << "\n";
  return ok ? kExitOk : kExitFalse;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact eigenstructure of polynomial matrices under x = n(y)/d(y)", "ratsub"};
  app.require_subcommand(1);
  Options o;
  auto file_cmd = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("file", o.file, "problem file (JSON); - reads standard input")->required();
    return s;
  };
  file_cmd("smith", "Smith form A P B = S with unimodular A, B");
  file_cmd("eig", "complete eigenstructure: elementary divisors and minimal indices");
  file_cmd("transform", "Q(y) = d(y)^g P(n(y)/d(y))");
  CLI::App* pre = file_cmd("preimage", "solutions of x(y) = x0 with multiplicities");
  pre->add_option("--at", o.at, "x0: a constant or inf")->required();
  CLI::App* mb = file_cmd("minbasis", "minimal polynomial basis of a kernel");
  mb->add_option("--side", o.side, "left or right")->check(CLI::IsMember({"left", "right"}));
  mb->add_option("--degree-cap", o.degree_cap, "largest degree searched (default deg*min(m,p)+1)");
  file_cmd("verify", "check how the eigenstructure maps from P to Q");

  SuiteOptions so;
  std::vector<long> dims{so.max_rows, so.max_cols};
  std::vector<std::string> fields{"Q", "Fp:7"};
  CLI::App* st = app.add_subcommand("selftest", "seeded randomized property suites");
  st->add_option("--cases", so.cases, "cases per suite")->check(CLI::NonNegativeNumber);
  st->add_option("--seed", so.seed, "generator seed");
  st->add_option("--max-dim", dims, "largest rows and columns")->expected(2)->check(CLI::PositiveNumber);
  st->add_option("--max-deg", so.max_deg, "largest entry degree / grade")->check(CLI::Range(1, 8));
  st->add_option("--max-G", so.max_G, "largest map degree")->check(CLI::Range(1, 6));
  st->add_option("--field", fields, "Q or Fp:<prime>; repeatable");

  std::vector<std::string> rev;  // CLI11 consumes arguments from the back
  for (std::size_t k = args.size(); k-- > 1;) rev.push_back(args[k]);
  try {
    app.parse(std::move(rev));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (st->parsed()) {
      so.max_rows = dims[0];
      so.max_cols = dims[1];
      so.fields.clear();
      for (const auto& f : fields) so.fields.push_back(FieldSpec::parse(f));
      return selftest(so, out);
    }
    o.command = app.get_subcommands().front()->get_name();
    const ProblemFile pf = read_problem(load_json(o.file));
    return pf.field.is_rationals() ? dispatch<Rational>(o, pf, out) : dispatch<ModP>(o, pf, out);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitFalse;
  } catch (const BoundExceeded& e) {
    err << "input too large: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace ratsub
