// Command-line front end: parses spec files, dispatches to the engine, and
// emits deterministic reports (human-readable or JSON).  Exit codes: 0 for a
// definitive verdict, 2 for inconclusive, 1 for errors.
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gralg/specfile.hpp"

using json = nlohmann::ordered_json;
using namespace gralg;

namespace {

constexpr const char* kSchema = "gralg/v1";

SpecFile load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

std::vector<std::string> labels_of(const GradedAlgebra& a, const std::vector<int>& idx) {
  std::vector<std::string> out;
  for (int i : idx) out.push_back(a.labels()[i]);
  return out;
}

json witness_json(const GradedAlgebra& a, const GradedPolynomial& p,
                  const std::vector<int>& w) {
  json out = json::object();
  for (int i = 0; i < p.nvars(); ++i) out[p.vars()[i].name] = a.labels()[w[i]];
  return out;
}

json iso_witness_json(const IsoWitness& w) {
  json out;
  out["shift"] = w.shift.to_string();
  json corr = json::array();
  for (const auto& h : w.corrections) corr.push_back(h.to_string());
  out["corrections"] = corr;
  out["sigma"] = w.sigma;
  return out;
}

GradedFactor trivial_factor(const FgAbelianGroup& g) {
  DivisionSpec spec{{1}};
  return {spec, GroupHom::trivial(spec.support_group(), g)};
}

const ElementarySpec& elementary_of(const SpecFile& sf, const std::string& name) {
  auto it = sf.elementary.find(name);
  if (it == sf.elementary.end())
    throw error(name + " is not an elementary (ut/matrix) algebra");
  return it->second;
}

GradedFactor division_of(const SpecFile& sf, const std::string& name,
                         const FgAbelianGroup& g) {
  if (name == "-") return trivial_factor(g);
  auto it = sf.division.find(name);
  if (it == sf.division.end()) throw error(name + " is not a pauli algebra");
  return it->second;
}

struct Output {
  bool as_json = false;
  json report;
  std::vector<std::string> lines;

  void kv(const std::string& key, const json& value, const std::string& text) {
    report["result"][key] = value;
    lines.push_back(text);
  }
  void emit(double ms) {
    if (as_json) {
      report["timing"] = {{"total_ms", ms}};
      std::cout << report.dump(2) << "\n";
    } else {
      for (const auto& l : lines) std::cout << l << "\n";
    }
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for group-graded matrix algebras"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  bool as_json = false;
  int threads = 1;
  int max_degree = 3;
  bool verify_pi = false;
  app.add_flag("--json", as_json, "emit a JSON report");
  app.add_option("--threads", threads, "worker thread cap");

  std::string file, name_a, name_b, name_poly, div_a, div_b;

  auto* cmd_verify = app.add_subcommand("verify-grading", "check the grading axiom");
  cmd_verify->add_option("file", file)->required();
  cmd_verify->add_option("algebra", name_a)->required();

  auto* cmd_decomp = app.add_subcommand("decompose-neutral",
                                        "neutral component ideal decomposition");
  cmd_decomp->add_option("file", file)->required();
  cmd_decomp->add_option("algebra", name_a)->required();

  auto* cmd_check = app.add_subcommand("check-identity",
                                       "decide a graded polynomial identity");
  cmd_check->add_option("file", file)->required();
  cmd_check->add_option("poly", name_poly)->required();
  cmd_check->add_option("algebra", name_a)->required();

  auto* cmd_rank = app.add_subcommand("capelli-rank", "minimal Capelli identity rank");
  cmd_rank->add_option("file", file)->required();
  cmd_rank->add_option("algebra", name_a)->required();

  auto* cmd_supp = app.add_subcommand("support", "recover the division support");
  cmd_supp->add_option("file", file)->required();
  cmd_supp->add_option("algebra", name_a)->required();

  auto* cmd_idc = app.add_subcommand("id-compare",
                                     "compare identities at bounded degree");
  cmd_idc->add_option("file", file)->required();
  cmd_idc->add_option("a", name_a)->required();
  cmd_idc->add_option("b", name_b)->required();
  cmd_idc->add_option("--max-degree", max_degree);

  auto* cmd_iso = app.add_subcommand("iso", "elementary-tensor isomorphism witness");
  cmd_iso->add_option("file", file)->required();
  cmd_iso->add_option("a", name_a)->required();
  cmd_iso->add_option("div-a", div_a)->required();
  cmd_iso->add_option("b", name_b)->required();
  cmd_iso->add_option("div-b", div_b)->required();

  auto* cmd_pipe = app.add_subcommand("pipeline", "full isomorphism pipeline");
  cmd_pipe->add_option("file", file)->required();
  cmd_pipe->add_option("a", name_a)->required();
  cmd_pipe->add_option("div-a", div_a)->required();
  cmd_pipe->add_option("b", name_b)->required();
  cmd_pipe->add_option("div-b", div_b)->required();
  cmd_pipe->add_option("--max-degree", max_degree);
  cmd_pipe->add_flag("--verify-pi-degree", verify_pi);

  CLI11_PARSE(app, argc, argv);

  Output out;
  out.as_json = as_json;
  out.report["schema"] = kSchema;
  out.report["command"] = app.get_subcommands()[0]->get_name();
  out.report["result"] = json::object();
  int exit_code = 0;
  auto t0 = std::chrono::steady_clock::now();

  try {
    EngineOptions engine = EngineOptions::from_env();
    engine.threads = threads;
    SpecFile sf = load(file);

    if (cmd_verify->parsed()) {
      const GradedAlgebra& a = sf.algebra(name_a);
      std::pair<int, int> bad;
      bool graded = a.verify_grading(&bad);
      bool assoc = a.check_associativity();
      out.kv("graded", graded, std::string("grading axiom: ") + (graded ? "ok" : "violated"));
      if (!graded)
        out.kv("offending_pair", json::array({a.labels()[bad.first], a.labels()[bad.second]}),
               "offending pair: " + a.labels()[bad.first] + ", " + a.labels()[bad.second]);
      out.kv("associative", assoc, std::string("associativity: ") + (assoc ? "ok" : "violated"));
    } else if (cmd_decomp->parsed()) {
      const ElementarySpec& spec = elementary_of(sf, name_a);
      const GradedAlgebra& a = sf.algebra(name_a);
      std::vector<NeutralIdeal> ideals = decompose_neutral(spec);
      json arr = json::array();
      out.lines.push_back("neutral component splits into " +
                          std::to_string(ideals.size()) + " ideal(s)");
      for (const auto& ideal : ideals) {
        json j;
        j["dimension"] = ideal.basis_indices.size();
        j["shape"] = ideal.shape;
        j["basis"] = labels_of(a, ideal.basis_indices);
        arr.push_back(j);
        std::string shape;
        for (int d : ideal.shape) shape += (shape.empty() ? "" : ",") + std::to_string(d);
        out.lines.push_back("  ideal: dim " + std::to_string(ideal.basis_indices.size()) +
                            ", shape UT(" + shape + ")");
      }
      out.report["result"]["ideals"] = arr;
    } else if (cmd_check->parsed()) {
      const GradedAlgebra& a = sf.algebra(name_a);
      const GradedPolynomial& p = sf.poly(name_poly);
      IdentityResult r = is_identity(p, a, engine);
      out.kv("identity", r.holds, std::string("identity: ") + (r.holds ? "yes" : "no"));
      out.kv("vacuous", r.vacuous, std::string("vacuous: ") + (r.vacuous ? "yes" : "no"));
      out.kv("substitutions", r.substitutions,
             "substitutions: " + std::to_string(r.substitutions));
      if (r.witness) {
        out.report["result"]["witness"] = witness_json(a, p, *r.witness);
        std::string w;
        for (int i = 0; i < p.nvars(); ++i)
          w += (w.empty() ? "" : ", ") + p.vars()[i].name + "=" + a.labels()[(*r.witness)[i]];
        out.lines.push_back("witness: " + w);
      }
    } else if (cmd_rank->parsed()) {
      const GradedAlgebra& a = sf.algebra(name_a);
      CapelliRank r = capelli_rank(a, engine);
      out.kv("rank", r.t, "capelli rank: " + std::to_string(r.t));
      if (r.witness) {
        out.report["result"]["witness"] = labels_of(a, *r.witness);
        std::string w;
        for (const auto& l : labels_of(a, *r.witness)) w += (w.empty() ? "" : ", ") + l;
        out.lines.push_back("Cap_" + std::to_string(r.t - 1) + " witness: " + w);
      }
      CapelliRank rn = capelli_rank(neutral_component(a), engine);
      out.kv("neutral_rank", rn.t, "neutral component rank: " + std::to_string(rn.t));
    } else if (cmd_supp->parsed()) {
      const GradedAlgebra& a = sf.algebra(name_a);
      SupportRecovery rec = recover_division_support(a, engine);
      json elems = json::array();
      std::string elems_text;
      for (const auto& g : rec.elements) {
        elems.push_back(g.to_string());
        elems_text += (elems_text.empty() ? "" : ", ") + g.to_string();
      }
      out.kv("elements", elems, "support elements: {" + elems_text + "}");
      out.kv("order", rec.elements.size(), "order: " + std::to_string(rec.elements.size()));
      out.kv("closed", rec.closed,
             rec.closed ? "closed under product and inverse"
                        : "NOT closed: out-of-model input");
      out.kv("neutral_capelli_rank", rec.capelli_rank_neutral,
             "neutral Capelli rank: " + std::to_string(rec.capelli_rank_neutral));
    } else if (cmd_idc->parsed()) {
      IdCompare cmp = same_identities_upto(sf.algebra(name_a), sf.algebra(name_b),
                                           max_degree, engine);
      out.kv("equal", cmp.equal,
             std::string("identities up to degree ") + std::to_string(max_degree) +
                 ": " + (cmp.equal ? "equal" : "different"));
      if (cmp.signature) {
        json sig = json::array();
        std::string st;
        for (const auto& g : *cmp.signature) {
          sig.push_back(g.to_string());
          st += (st.empty() ? "" : ", ") + g.to_string();
        }
        out.kv("signature", sig, "distinguishing signature: (" + st + ")");
      }
    } else if (cmd_iso->parsed()) {
      const ElementarySpec& a = elementary_of(sf, name_a);
      const ElementarySpec& b = elementary_of(sf, name_b);
      GradedFactor fa = division_of(sf, div_a, sf.group);
      GradedFactor fb = division_of(sf, div_b, sf.group);
      Bicharacter ba = build_pauli_division(fa.spec).bicharacter.mapped(fa.embed);
      Bicharacter bb = build_pauli_division(fb.spec).bicharacter.mapped(fb.embed);
      std::optional<IsoWitness> w = elementary_tensor_iso(a, ba, b, bb);
      out.kv("isomorphic", w.has_value(),
             w ? "isomorphic: witness found" : "no witness: not isomorphic in this family");
      if (w) {
        out.report["result"]["witness"] = iso_witness_json(*w);
        out.lines.push_back("  shift g = " + w->shift.to_string());
      }
    } else if (cmd_pipe->parsed()) {
      const ElementarySpec& a = elementary_of(sf, name_a);
      const ElementarySpec& b = elementary_of(sf, name_b);
      PipelineOptions popt;
      popt.max_degree = max_degree;
      popt.verify_pi_degree = verify_pi;
      popt.engine = engine;
      PipelineVerdict v = pipeline(a, division_of(sf, div_a, sf.group), b,
                                   division_of(sf, div_b, sf.group), popt);
      out.kv("verdict", v.final, "verdict: " + v.final);
      out.kv("reason", v.reason, "reason: " + v.reason);
      json stages;
      stages["support_match_a"] = v.support_match_a;
      stages["support_match_b"] = v.support_match_b;
      stages["supports_equal"] = v.supports_equal;
      stages["division_ok"] = v.division_ok;
      stages["coarse_model_ok_a"] = v.coarse_model_ok_a;
      stages["coarse_model_ok_b"] = v.coarse_model_ok_b;
      stages["coarse_witness_found"] = v.coarse_witness_found;
      stages["ds_condition"] = v.ds;
      if (v.pi_degree_ok) stages["pi_degree_ok"] = *v.pi_degree_ok;
      out.report["result"]["stages"] = stages;
      if (v.witness) {
        out.report["result"]["witness"] = iso_witness_json(*v.witness);
        out.lines.push_back("witness shift g = " + v.witness->shift.to_string());
      }
      if (v.distinguishing_signature) {
        json sig = json::array();
        std::string st;
        for (const auto& g : *v.distinguishing_signature) {
          sig.push_back(g.to_string());
          st += (st.empty() ? "" : ", ") + g.to_string();
        }
        out.kv("signature", sig, "distinguishing signature: (" + st + ")");
      }
      if (v.final == "inconclusive") exit_code = 2;
    }
  } catch (const std::exception& e) {
    if (as_json) {
      out.report["error"] = e.what();
      std::cout << out.report.dump(2) << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return 1;
  }

  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  out.emit(ms);
  return exit_code;
}
