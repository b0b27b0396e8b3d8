#include "singidx/problem.hpp"

#include <fstream>

namespace singidx {

std::vector<std::vector<KForm>> parse_form_blocks(const nlohmann::json& forms, const CtxPtr& ctx) {
  std::vector<std::vector<KForm>> blocks;
  if (!forms.is_array()) throw ProblemValidationError("'forms' must be an array of blocks");
  for (const auto& block : forms) {
    std::vector<KForm> ws;
    if (!block.is_array()) throw ProblemValidationError("each forms block must be an array");
    for (const auto& w : block) {
      if (!w.is_array() || w.size() != ctx->nvars())
        throw ProblemValidationError("each 1-form needs one coefficient string per variable");
      std::vector<Polynomial> coeffs;
      for (const auto& c : w) {
        if (!c.is_string()) throw ProblemValidationError("form coefficients must be strings");
        coeffs.push_back(parse_poly(c.get<std::string>(), ctx));
      }
      ws.push_back(KForm::one_form(ctx, coeffs));
    }
    blocks.push_back(std::move(ws));
  }
  return blocks;
}

ProblemFile parse_problem(const nlohmann::json& j) {
  try {
    if (!j.contains("variables") || !j["variables"].is_array() || j["variables"].empty())
      throw ProblemValidationError("'variables' must be a non-empty array of names");
    std::vector<std::string> vars;
    for (const auto& v : j["variables"]) vars.push_back(v.get<std::string>());
    CtxPtr ctx = RingContext::make(vars, Ordering::LocalDeg);

    std::vector<Polynomial> ideal;
    if (j.contains("ideal"))
      for (const auto& s : j["ideal"]) ideal.push_back(parse_poly(s.get<std::string>(), ctx));

    if (!j.contains("dimension")) throw ProblemValidationError("'dimension' is required");
    const std::size_t n = j["dimension"].get<std::size_t>();

    ProblemFile pf;
    pf.germ = GermSpec::make(ctx, std::move(ideal), n);
    if (j.contains("partition") && j.contains("forms")) {
      std::vector<std::size_t> partition;
      for (const auto& k : j["partition"]) partition.push_back(k.get<std::size_t>());
      pf.collection = CollectionSpec::make(partition, parse_form_blocks(j["forms"], ctx), n);
    } else if (j.contains("partition") != j.contains("forms")) {
      throw ProblemValidationError("'partition' and 'forms' must be given together");
    }
    pf.options = j.value("options", nlohmann::json::object());
    return pf;
  } catch (const ProblemValidationError&) {
    throw;
  } catch (const std::exception& e) {
    throw ProblemValidationError(e.what());
  }
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ProblemValidationError("cannot open input file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ProblemValidationError(std::string("JSON parse failure: ") + e.what());
  }
  return parse_problem(j);
}

nlohmann::json report_skeleton(const std::string& command) {
  nlohmann::json rep;
  rep["command"] = command;
  rep["engine"] = kEngineVersion;
  rep["warnings"] = nlohmann::json::array();
  return rep;
}

}  // namespace singidx
