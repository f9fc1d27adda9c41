#include "hnr/cli.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hnr/basis.hpp"
#include "hnr/error.hpp"
#include "hnr/expression.hpp"
#include "hnr/fixed.hpp"
#include "hnr/trace.hpp"
#include "hnr/verifier.hpp"

namespace hnr {

namespace {

using nlohmann::json;

struct Options {
  std::string config;
  std::string target;
  std::vector<std::string> exprs;
  std::string basis = "bg";
  std::string suite = "all";
  int trials = 0;
  std::uint64_t seed = 1;
  std::string out;
};

// Handler result; a failed check still writes its report, then exits 1.
struct Outcome {
  std::string text;
  bool ok = true;
};

ParameterSet load_parameters(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadShape, "cannot read config file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::BadShape, "config file '" + path + "' is not valid JSON");
  }
  return parameters_from_json(j);
}

json context_json(const Algebra& alg) {
  json j;
  to_json(j, alg.params());
  return j;
}

Element product_of(const std::vector<std::string>& exprs, const AlgebraPtr& alg) {
  if (exprs.empty()) throw Error(ErrorCode::BadShape, "at least one --expr is required");
  Element x = parse_element(exprs.front(), alg);
  for (std::size_t i = 1; i < exprs.size(); ++i) x = x * parse_element(exprs[i], alg);
  return x;
}

json element_report(const Element& x, Basis basis) {
  return {{"context", context_json(x.context())},
          {"basis", to_string(basis)},
          {"text", format_element(x, basis)},
          {"coordinates", to_json(to_coordinates(x, basis))["entries"]}};
}

Outcome cmd_mult(const Options& o, std::ostream&) {
  auto alg = Algebra::create(load_parameters(o.config));
  return {element_report(product_of(o.exprs, alg), basis_from_string(o.basis)).dump(2)};
}

Outcome cmd_convert(const Options& o, std::ostream&) {
  auto alg = Algebra::create(load_parameters(o.config));
  if (o.exprs.size() != 1) throw Error(ErrorCode::BadShape, "convert takes exactly one --expr");
  return {element_report(parse_element(o.exprs.front(), alg), basis_from_string(o.basis)).dump(2)};
}

Outcome cmd_trace(const Options& o, std::ostream&) {
  auto alg = Algebra::create(load_parameters(o.config));
  return {tau(product_of(o.exprs, alg)).str()};
}

Outcome cmd_verify(const Options& o, std::ostream& err) {
  ParameterSet p = load_parameters(o.config);
  VerificationReport report;
  if (o.trials > 0) {
    report = multi_parameter_fuzz(p.n, p.r, o.trials, o.seed);
  } else {
    auto alg = Algebra::create(p);
    if (o.suite == "def")
      report = verify_definition_presentation(alg);
    else if (o.suite == "yh")
      report = verify_yokonuma_presentation(alg);
    else if (o.suite == "b")
      report = verify_b_presentation(alg);
    else if (o.suite == "lemmas")
      report = verify_lemma_suite(alg);
    else
      report = verify_all(alg);
  }
  err << format_table(report);
  return {to_json(report).dump(2), report.pass()};
}

Outcome cmd_gram(const Options& o, std::ostream& err) {
  auto alg = Algebra::create(load_parameters(o.config));
  GramReport report = gram_check(alg);
  json j = to_json(report);
  if (!report.is_identity) {
    err << "NOT IDENTITY at " << j["counterexample"].dump() << "\n";
    return {j.dump(2), false};
  }
  err << "IDENTITY\n";
  return {j.dump(2)};
}

Outcome cmd_fixed_basis(const Options& o, std::ostream&) {
  auto alg = Algebra::create(load_parameters(o.config));
  auto basis = fixed_basis(alg);
  json elements = json::array();
  for (const auto& b : basis) {
    json label = b;
    label["element"] = format_element(b.element);
    elements.push_back(label);
  }
  return {json{{"context", context_json(*alg)}, {"size", basis.size()}, {"elements", elements}}.dump(2)};
}

Outcome cmd_isomap(const Options& o, std::ostream& err) {
  auto alg = Algebra::create(load_parameters(o.config));
  if (o.target.empty()) throw Error(ErrorCode::BadShape, "isomap needs --target");
  ParameterSet target = load_parameters(o.target);
  ParameterChange change = parameter_change_map(alg, target);

  VerificationReport report;
  report.suite = "isomap";
  report.contexts = {alg->params(), target};
  RelationRecorder rec(report);
  std::vector<Element> T;
  for (int i = 1; i < alg->n(); ++i) T.push_back(gen_T(alg, i));
  check_definition_relations(rec, target, alg, change.images, T);

  json a = json::array(), images = json::array();
  for (const auto& x : change.a) a.push_back(x.str());
  for (const auto& x : change.images) images.push_back(format_element(x));
  json j{{"source", context_json(*alg)}, {"target", target},
         {"a", a}, {"t_images", images}, {"relations", to_json(report)}};
  err << format_table(report);
  return {j.dump(2), report.pass()};
}

Outcome cmd_orbits(const Options& o, std::ostream&) {
  ParameterSet p = load_parameters(o.config);
  json orbits = json::array();
  for (const auto& orbit : enumerate_orbit_representatives(p.n, p.r)) {
    json members = json::array();
    for (const auto& m : orbit.members) members.push_back(m);
    orbits.push_back({{"representative", orbit.representative}, {"members", members}});
  }
  return {json{{"n", p.n}, {"r", p.r}, {"count", orbits.size()}, {"orbits", orbits}}.dump(2)};
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text << "\n";
    return;
  }
  std::ofstream file(o.out);
  if (!file) throw Error(ErrorCode::BadShape, "cannot write '" + o.out + "'");
  file << text << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the modified Ariki-Koike algebra H_{n,r}", "hnr"};
  app.require_subcommand(1);
  Options o;

  using Handler = Outcome (*)(const Options&, std::ostream&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const char* name, const char* about, Handler h) {
    CLI::App* sub = app.add_subcommand(name, about);
    sub->add_option("--config", o.config, "ParameterSet JSON file")->required();
    sub->add_option("--out", o.out, "write the result to this file");
    commands.emplace_back(sub, h);
    return sub;
  };

  auto mult = add("mult", "multiply expressions left to right", cmd_mult);
  mult->add_option("--expr", o.exprs, "element expression (repeatable)")->required();
  mult->add_option("--basis", o.basis, "bg, tg or tT");
  auto trace = add("trace", "evaluate the trace form", cmd_trace);
  trace->add_option("--expr", o.exprs, "element expression")->required();
  auto convert = add("convert", "coordinates in a chosen basis", cmd_convert);
  convert->add_option("--expr", o.exprs, "element expression")->required();
  convert->add_option("--basis", o.basis, "bg, tg or tT");
  auto verify = add("verify", "check presentations and lemmas", cmd_verify);
  verify->add_option("--suite", o.suite, "def, yh, b, lemmas or all")
      ->check(CLI::IsMember({"def", "yh", "b", "lemmas", "all"}));
  verify->add_option("--trials", o.trials, "random parameter sets (all suites)");
  verify->add_option("--seed", o.seed, "seed for --trials");
  add("gram", "Gram matrix of the trace pairing", cmd_gram);
  add("fixed-basis", "basis of the Sym(r)-fixed subalgebra", cmd_fixed_basis);
  auto isomap = add("isomap", "parameter-change isomorphism", cmd_isomap);
  isomap->add_option("--target", o.target, "target ParameterSet JSON file")->required();
  add("orbits", "Sym(r)-orbits of color vectors", cmd_orbits);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  for (const auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    try {
      Outcome result = handler(o, err);
      emit(o, result.text, out);
      return result.ok ? 0 : 1;
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      if (e.code() == ErrorCode::NotSymmetrizing || e.code() == ErrorCode::AssertFailed) return 1;
      return 2;
    }
  }
  return 2;
}

}  // namespace hnr
