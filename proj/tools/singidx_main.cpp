// Batch front-end: reads a JSON problem file, dispatches to the index
// computations, writes a machine-readable report to stdout (or --json-out)
// and a short human summary to stderr.
//
// Exit codes: 0 success, 2 non-isolated / not-ICIS input, 3 parse or
// validation failure, 4 internal disagreement between computation routes.

#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "nlohmann/json.hpp"
#include "singidx/problem.hpp"

using nlohmann::json;
using namespace singidx;

namespace {

json profile_json(const std::vector<std::int64_t>& p) {
  return json(p);
}

CollectionSpec require_collection(const ProblemFile& pf) {
  if (!pf.collection)
    throw ProblemValidationError("this command requires 'partition' and 'forms'");
  return *pf.collection;
}

int run_command(const std::string& cmd, const ProblemFile& pf, bool cross_check,
                std::size_t samples, std::uint64_t seed, const std::string& t_value,
                json& rep) {
  if (cmd == "gsv") {
    auto c = require_collection(pf);
    IndexReport r = gsv_index_minors(pf.germ, c);
    rep["result"]["gsv"] = r.value;
    rep["result"]["method"] = r.method;
    rep["witnesses"] = r.witnesses;
    if (cross_check) {
      IndexReport f = gsv_index_forms(pf.germ, c);
      rep["result"]["gsv_forms"] = f.value;
      rep["result"]["equal"] = (f.value == r.value);
      if (f.value != r.value)
        throw Disagreement("gsv-minors and gsv-forms routes disagree");
    }
    rep["result"]["value"] = r.value;
  } else if (cmd == "hom") {
    auto c = require_collection(pf);
    IndexReport r = hom_index(pf.germ, c);
    rep["result"]["hom"] = r.value;
    rep["result"]["value"] = r.value;
    rep["result"]["cohomology_profile"] = profile_json(*r.cohomology_profile);
    if (cross_check) {
      IndexReport g = gsv_index_minors(pf.germ, c);
      rep["result"]["gsv"] = g.value;
      rep["result"]["equal"] = (g.value == r.value);
      if (g.value != r.value) throw Disagreement("homological and GSV routes disagree");
    }
  } else if (cmd == "invariant") {
    InvariantReport r = singularity_invariant(pf.germ, pf.collection
                                                   ? pf.collection->partition
                                                   : pf.options.value("partition",
                                                                      std::vector<std::size_t>{}),
                                              samples, seed);
    rep["result"]["invariant"] = r.invariant;
    rep["result"]["value"] = r.invariant;
    rep["result"]["values"] = r.values;
    rep["result"]["samples"] = r.samples;
    rep["result"]["partition"] = r.partition;
    rep["notes"] = "generic collections realized as differentials of seeded random linear "
                   "functions (the Chern obstruction vanishes for such collections)";
  } else if (cmd == "torsion") {
    auto [t0, t1] = torsion_dims(pf.germ);
    rep["result"]["dim_T"] = t0;
    rep["result"]["dim_T_prime"] = t1;
    rep["result"]["value"] = t0;
    rep["warnings"].push_back(kEnDifferentialNote);
  } else if (cmd == "en") {
    if (!pf.options.contains("matrix"))
      throw ProblemValidationError("'en' needs options.matrix (rows of polynomial strings)");
    std::vector<std::vector<Polynomial>> M;
    for (const auto& row : pf.options["matrix"]) {
      std::vector<Polynomial> r;
      for (const auto& e : row) r.push_back(parse_poly(e.get<std::string>(), pf.germ.ctx));
      M.push_back(std::move(r));
    }
    ChainComplex E = eagon_northcott(M, pf.germ.ambient_ideal());
    if (!verify_d_squared(E)) throw Disagreement("d^2 != 0 on the Eagon-Northcott complex");
    auto dims = cohomology_dims(E);
    json out = json::array();
    for (const auto& d : dims)
      out.push_back(d ? json(*d) : json("infinite"));
    rep["result"]["cohomology"] = out;
    std::vector<std::int64_t> ranks;
    for (const auto& t : E.terms) ranks.push_back(static_cast<std::int64_t>(t.rank));
    rep["result"]["ranks"] = ranks;
    rep["warnings"].push_back(kEnDifferentialNote);
  } else if (cmd == "conserve") {
    auto c = require_collection(pf);
    if (!pf.options.contains("perturbation"))
      throw ProblemValidationError("'conserve' needs options.perturbation");
    auto blocks = parse_form_blocks(pf.options["perturbation"], pf.germ.ctx);
    CollectionSpec pert = CollectionSpec::make(c.partition, std::move(blocks), pf.germ.dim_n);
    std::string ts = !t_value.empty() ? t_value : pf.options.value("t", std::string("1"));
    Rational t = Rational::from_string(ts);
    ConservationReport r = conservation_probe(pf.germ, c, pert, t);
    rep["result"]["local_index"] = r.local_index;
    rep["result"]["global_count"] = r.global_count;
    rep["result"]["difference"] = r.difference;
    rep["result"]["t"] = ts;
    rep["result"]["value"] = r.difference;
  } else if (cmd == "check") {
    auto c = require_collection(pf);
    bool d2 = true;
    ChainComplex C = build_collection_complex(pf.germ, c.partition[0], c.forms[0]);
    d2 = d2 && verify_d_squared(C);
    for (std::size_t i = 1; i < c.forms.size(); ++i) {
      ChainComplex Ci = build_collection_complex(pf.germ, c.partition[i], c.forms[i]);
      d2 = d2 && verify_d_squared(Ci);
      C = tensor(C, Ci);
    }
    d2 = d2 && verify_d_squared(C);
    rep["result"]["d_squared_zero"] = d2;
    Dim iso = colength(gsv_minor_ideal(pf.germ, c));
    rep["result"]["isolated"] = iso.has_value();
    if (iso) rep["result"]["minor_ideal_colength"] = *iso;
    rep["result"]["value"] = d2 && iso.has_value() ? 0 : 1;
    if (!d2) throw Disagreement("d^2 != 0 on a constructed complex");
  } else {
    throw ProblemValidationError("unknown command '" + cmd + "'");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"singidx: indices of collections of 1-forms on singular germs"};
  app.require_subcommand(1);

  std::string input, json_out, t_value;
  bool cross_check = false;
  std::size_t samples = 5;
  std::uint64_t seed = 1;

  std::vector<std::string> commands = {"gsv", "hom", "invariant", "torsion",
                                       "en", "conserve", "check"};
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c);
    sub->add_option("-i,--input", input, "problem file (JSON)")->required();
    sub->add_flag("--cross-check", cross_check, "also run the independent route");
    sub->add_option("--samples", samples, "sample count for 'invariant'");
    sub->add_option("--seed", seed, "RNG seed for 'invariant'");
    sub->add_option("--t", t_value, "deformation parameter for 'conserve'");
    sub->add_option("--json-out", json_out, "write the JSON report to a file");
  }

  CLI11_PARSE(app, argc, argv);
  const std::string cmd = app.get_subcommands()[0]->get_name();

  json rep = report_skeleton(cmd);
  int code = 0;
  auto t0 = std::chrono::steady_clock::now();
  try {
    ProblemFile pf = load_problem(input);
    run_command(cmd, pf, cross_check, samples, seed, t_value, rep);
  } catch (const ProblemValidationError& e) {
    rep["error"] = {{"kind", "validation"}, {"message", e.what()}};
    code = 3;
  } catch (const ParseError& e) {
    rep["error"] = {{"kind", "parse"}, {"message", e.what()}};
    code = 3;
  } catch (const NotICIS& e) {
    rep["error"] = {{"kind", "NotICIS"}, {"message", e.what()}};
    code = 2;
  } catch (const NonIsolated& e) {
    rep["error"] = {{"kind", "NonIsolated"}, {"message", e.what()}, {"block", e.block + 1}};
    code = 2;
  } catch (const SamplingExhausted& e) {
    rep["error"] = {{"kind", "SamplingExhausted"}, {"message", e.what()}};
    code = 2;
  } catch (const Disagreement& e) {
    rep["error"] = {{"kind", "Disagreement"}, {"message", e.what()}};
    code = 4;
  } catch (const std::exception& e) {
    rep["error"] = {{"kind", "internal"}, {"message", e.what()}};
    code = 4;
  }
  auto t1 = std::chrono::steady_clock::now();
  rep["timing_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();

  std::string text = rep.dump(2);
  if (!json_out.empty()) {
    std::ofstream out(json_out);
    out << text << "\n";
  } else {
    std::cout << text << "\n";
  }
  if (code == 0) {
    if (rep["result"].contains("value"))
      std::cerr << cmd << ": value " << rep["result"]["value"] << "\n";
    else
      std::cerr << cmd << ": ok\n";
  } else {
    std::cerr << cmd << ": " << rep["error"]["kind"].get<std::string>() << " — "
              << rep["error"]["message"].get<std::string>() << "\n";
  }
  return code;
}
