#include <fstream>
#include <sstream>

#include "json.hpp"

#include "fracosc/error.hpp"
#include "fracosc/expr.hpp"
#include "fracosc/model.hpp"

namespace fracosc {

namespace {

using nlohmann::json;

double require_number(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) throw InvalidArgument(std::string("problem file: missing field '") + key + "'");
  if (!it->is_number()) throw InvalidArgument(std::string("problem file: field '") + key + "' must be a number");
  return it->get<double>();
}

expr::Expression require_expression(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) throw InvalidArgument(std::string("problem file: missing field '") + key + "'");
  if (it->is_number()) return expr::parse(it->dump());
  if (!it->is_string()) throw InvalidArgument(std::string("problem file: field '") + key + "' must be an expression string");
  return expr::parse(it->get<std::string>());
}

}  // namespace

ProblemSpec parse_problem_json(std::string_view text, std::string name) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("problem file: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidArgument("problem file: top level must be an object");

  OscillatorProblem p;
  p.beta = require_number(doc, "beta");
  p.gamma_order = require_number(doc, "gamma");
  p.lambda = require_number(doc, "lambda");
  p.omega = require_expression(doc, "omega");
  p.forcing = require_expression(doc, "f");
  p.alpha1 = require_number(doc, "alpha1");
  p.alpha2 = require_number(doc, "alpha2");
  p.horizon = require_number(doc, "T");
  p.validate();

  std::optional<ExactSolution> exact;
  if (const auto it = doc.find("exact"); it != doc.end() && !it->is_null()) {
    if (it->is_string() || it->is_number()) {
      auto e = require_expression(doc, "exact");
      std::string text_form = it->is_string() ? it->get<std::string>() : it->dump();
      exact = ExactSolution{ExpressionSolution{e, std::move(text_form)}};
    } else if (it->is_object()) {
      const auto kind = it->value("kind", std::string{});
      if (kind != "aho") throw InvalidArgument("problem file: exact.kind must be \"aho\"");
      AhoSolution aho;
      aho.delta = require_number(*it, "delta");
      aho.mu_amp = require_number(*it, "mu");
      aho.omega0 = require_number(*it, "omega0");
      aho.alpha1 = p.alpha1;
      aho.alpha2 = p.alpha2;
      aho.beta = p.beta;
      exact = ExactSolution{aho};
    } else {
      throw InvalidArgument("problem file: 'exact' must be an expression string or an object");
    }
    exact->validate();
  }
  return {std::move(name), std::move(p), std::move(exact)};
}

ProblemSpec load_problem_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open problem file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem_json(buf.str(), path);
}

}  // namespace fracosc
