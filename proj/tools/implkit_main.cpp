// Copyright 2026 The implkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "implkit/canonical.hpp"
#include "implkit/checks.hpp"
#include "implkit/equilibrium.hpp"
#include "implkit/fuzz.hpp"
#include "implkit/json_io.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace implkit;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_report(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw Error(Errc::kParseError, "cannot write '" + out_path + "'");
    out << j.dump(2) << "\n";
  }
}

int default_xi_cap() {
  if (const char* cap = std::getenv("IMPLKIT_XI_CAP")) {
    try {
      return std::stoi(cap);
    } catch (...) {
      throw Error(Errc::kParseError, "IMPLKIT_XI_CAP is not an integer");
    }
  }
  return kDefaultXiCap;
}

Json names(const Environment& env, const std::vector<int>& outcomes) {
  Json arr = Json::array();
  for (int z : outcomes) arr.push_back(env.outcome_name(z));
  return arr;
}

Json state_names(const Environment& env, const std::vector<int>& states) {
  Json arr = Json::array();
  for (int t : states) arr.push_back(env.state_name(t));
  return arr;
}

Json lottery_json(const Environment& env, const Lottery& y) {
  return Json::parse(lottery_to_json(env, y));
}

Json witness_json(const Environment& env, const CheckWitness& w) {
  Json j;
  if (w.theta >= 0) j["theta"] = env.state_name(w.theta);
  if (w.theta_prime >= 0) j["theta_prime"] = env.state_name(w.theta_prime);
  if (w.agent >= 0) j["agent"] = w.agent + 1;
  if (w.outcome >= 0) j["outcome"] = env.outcome_name(w.outcome);
  if (w.lottery) j["lottery"] = lottery_json(env, *w.lottery);
  if (!w.note.empty()) j["note"] = w.note;
  return j;
}

Json report_json(const Environment& env, const CheckReport& report,
                 bool all_witnesses) {
  Json j;
  j["task"] = "check";
  j["condition"] = report.condition;
  j["verdict"] = report.verdict == Verdict::kHolds ? "holds" : "fails";
  if (report.witness) j["witness"] = witness_json(env, *report.witness);
  if (all_witnesses) {
    Json arr = Json::array();
    for (const auto& w : report.all_witnesses) {
      arr.push_back(witness_json(env, w));
    }
    j["witnesses"] = std::move(arr);
  }
  j["stats"] = Json{{"pairs_checked", report.pairs_checked}};
  return j;
}

struct CheckArgs {
  std::string condition;
  std::string in_path;
  std::string out_path;
  bool all_witnesses = false;
  int xi_cap = kDefaultXiCap;
};

int run_check(const CheckArgs& args) {
  CheckOptions opt;
  opt.all_witnesses = args.all_witnesses;
  opt.xi_cap = args.xi_cap;
  const std::string text = read_file(args.in_path);

  bool ordinal_condition = args.condition == "set-mono" ||
                           args.condition == "strong-set-mono" ||
                           args.condition == "ly-uniform";
  CheckReport report;
  Environment report_env;
  if (ordinal_condition) {
    OrdinalFile file = parse_ordinal(text);
    ValidationResult v = validate(file.oenv);
    if (!v.ok) {
      throw Error(Errc::kValidationError,
                  std::string(validation_code_name(v.code)) + " at " + v.where);
    }
    if (!file.scc) {
      throw Error(Errc::kValidationError, "ordinal file carries no scc");
    }
    report_env = rank_representation(file.oenv);
    ValidationResult vf = validate(report_env, *file.scc);
    if (!vf.ok) {
      throw Error(Errc::kValidationError,
                  std::string(validation_code_name(vf.code)) + " at " +
                      vf.where);
    }
    if (args.condition == "set-mono") {
      report = check_set_monotonicity(file.oenv, *file.scc, opt);
    } else if (args.condition == "strong-set-mono") {
      report = check_strong_set_monotonicity(file.oenv, *file.scc, opt);
    } else {
      report = check_LY_uniform(file.oenv, *file.scc, opt);
    }
  } else {
    ModelFile file = parse_model(text);
    report_env = file.env;
    bool scf_condition = args.condition == "maskin" ||
                         args.condition == "no-veto" ||
                         args.condition == "lhat-scf";
    if (scf_condition) {
      if (!file.scf) {
        throw Error(Errc::kValidationError, "file carries no scf");
      }
      ValidationResult v = validate(file.env, *file.scf);
      if (!v.ok) {
        throw Error(Errc::kValidationError,
                    std::string(validation_code_name(v.code)) + " at " +
                        v.where);
      }
      if (args.condition == "maskin") {
        report = check_maskin(file.env, *file.scf, opt);
      } else if (args.condition == "no-veto") {
        report = check_no_veto(file.env, *file.scf, opt);
      } else {
        report = check_lhat_scf(file.env, *file.scf, opt);
      }
    } else {
      Scc F;
      if (file.scc) {
        F = *file.scc;
      } else if (file.scf) {
        F = scc_from_scf(*file.scf);
      } else {
        throw Error(Errc::kValidationError, "file carries no scc or scf");
      }
      ValidationResult v = validate(file.env, F);
      if (!v.ok) {
        throw Error(Errc::kValidationError,
                    std::string(validation_code_name(v.code)) + " at " +
                        v.where);
      }
      if (args.condition == "lhat-ef") {
        report = check_lhat_EF(file.env, F, opt);
      } else if (args.condition == "lhat-ab") {
        report = check_lhat_AB_uniform(file.env, F, opt);
      } else if (args.condition == "lhat-cd") {
        report = check_lhat_CD(file.env, F, opt);
      } else {
        throw Error(Errc::kParseError,
                    "unknown condition '" + args.condition + "'");
      }
    }
  }
  write_report(report_json(report_env, report, args.all_witnesses),
               args.out_path);
  return report.verdict == Verdict::kHolds ? kExitHolds : kExitFails;
}

int run_certify(const std::string& in_path, const std::string& out_path) {
  ModelFile file = parse_model(read_file(in_path));
  if (!file.scf) throw Error(Errc::kValidationError, "file carries no scf");
  ValidationResult v = validate(file.env, *file.scf);
  if (!v.ok) {
    throw Error(Errc::kValidationError,
                std::string(validation_code_name(v.code)) + " at " + v.where);
  }
  auto result = certify_scf(file.env, *file.scf);
  Json j;
  j["task"] = "certify";
  if (std::holds_alternative<Certificate>(result)) {
    j["result"] = "certificate";
    Json entries = Json::array();
    for (const auto& e : std::get<Certificate>(result).whistle_blowers) {
      Json entry;
      entry["theta"] = file.env.state_name(e.theta);
      entry["theta_star"] = file.env.state_name(e.theta_star);
      entry["agent"] = e.agent + 1;
      entry["lottery"] = lottery_json(file.env, e.vertex);
      entries.push_back(std::move(entry));
    }
    j["whistle_blowers"] = std::move(entries);
    write_report(j, out_path);
    return kExitHolds;
  }
  const Refutation& r = std::get<Refutation>(result);
  j["result"] = "refutation";
  j["clause"] = r.clause;
  j["witness"] = witness_json(file.env, r.witness);
  write_report(j, out_path);
  return kExitFails;
}

int run_build_canonical(const std::string& in_path, const std::string& variant,
                        int K, int xi_cap, const std::string& out_path) {
  ModelFile file = parse_model(read_file(in_path));
  CanonicalMechanism canon;
  if (variant == "scf") {
    if (!file.scf) throw Error(Errc::kValidationError, "file carries no scf");
    ValidationResult v = validate(file.env, *file.scf);
    if (!v.ok) {
      throw Error(Errc::kValidationError,
                  std::string(validation_code_name(v.code)) + " at " +
                      v.where);
    }
    canon = build_canonical_scf(file.env, *file.scf, K);
  } else if (variant == "ab") {
    Scc F;
    if (file.scc) {
      F = *file.scc;
    } else if (file.scf) {
      F = scc_from_scf(*file.scf);
    } else {
      throw Error(Errc::kValidationError, "file carries no scc or scf");
    }
    ValidationResult v = validate(file.env, F);
    if (!v.ok) {
      throw Error(Errc::kValidationError,
                  std::string(validation_code_name(v.code)) + " at " +
                      v.where);
    }
    canon = build_canonical_AB(file.env, F, K, xi_cap);
  } else {
    throw Error(Errc::kParseError, "variant must be scf or ab");
  }
  Mechanism mech = canon.to_mechanism();
  if (out_path.empty()) {
    std::cout << emit_mechanism(mech, file.env, /*embed_env=*/true) << "\n";
  } else {
    std::ofstream out(out_path);
    out << emit_mechanism(mech, file.env, /*embed_env=*/true) << "\n";
  }
  return kExitHolds;
}

int run_enumerate_ne(const std::string& mech_path, const std::string& env_path,
                     const std::string& state, const std::string& out_path) {
  std::optional<Environment> fallback;
  if (!env_path.empty()) fallback = parse_model(read_file(env_path)).env;
  MechanismFile file = parse_mechanism(read_file(mech_path),
                                       fallback ? &*fallback : nullptr);
  int theta = file.env.state_index(state);
  if (theta < 0) throw Error(Errc::kParseError, "unknown state '" + state + "'");
  std::vector<std::vector<int>> eq = pure_ne(file.mech, file.env, theta);
  Json j;
  j["task"] = "enumerate-ne";
  j["state"] = state;
  Json arr = Json::array();
  for (const auto& profile : eq) {
    Json names_row = Json::array();
    for (int i = 0; i < file.mech.agents(); ++i) {
      names_row.push_back(file.mech.messages[i][profile[i]]);
    }
    Json entry;
    entry["profile"] = std::move(names_row);
    entry["outcome"] = lottery_json(file.env, file.mech.outcome(profile));
    arr.push_back(std::move(entry));
  }
  j["count"] = eq.size();
  j["equilibria"] = std::move(arr);
  write_report(j, out_path);
  return kExitHolds;
}

int run_fuzz(const FuzzConfig& cfg, const std::string& out_path) {
  FuzzReport report = necessity_fuzz(cfg);
  Json j;
  j["task"] = "fuzz";
  j["config"] = Json{{"count", cfg.count},
                     {"seed", cfg.seed},
                     {"max_msgs", cfg.max_msgs},
                     {"max_outcomes", cfg.max_outcomes},
                     {"max_states", cfg.max_states}};
  j["instances"] = report.instances;
  j["with_nonempty_pne"] = report.with_nonempty_pne;
  j["single_valued"] = report.single_valued;
  j["supports_checked"] = report.supports_checked;
  Json arr = Json::array();
  for (const auto& v : report.violations) {
    arr.push_back(Json{{"instance", v.instance},
                       {"seed", v.instance_seed},
                       {"clause", v.clause},
                       {"detail", v.detail}});
  }
  j["violations"] = std::move(arr);
  write_report(j, out_path);
  return report.violations.empty() ? kExitHolds : kExitFails;
}

int run_inspect(const std::string& in_path, int xi_cap,
                const std::string& out_path) {
  ModelFile file = parse_model(read_file(in_path));
  Scc F;
  if (file.scc) {
    F = *file.scc;
  } else if (file.scf) {
    F = scc_from_scf(*file.scf);
  } else {
    throw Error(Errc::kValidationError, "file carries no scc or scf");
  }
  const Environment& env = file.env;
  Json j;
  j["task"] = "inspect";
  MaxSetCache cache(env, F);
  j["zstar"] = names(env, cache.zstar());

  // Sparse listing of max sets (guarded by the powerset size).
  Json imax = Json::array();
  if (env.num_outcomes() <= 10) {
    for (std::size_t mask = 1;
         mask < (std::size_t{1} << env.num_outcomes()); ++mask) {
      std::vector<int> E;
      for (int z = 0; z < env.num_outcomes(); ++z) {
        if (mask & (std::size_t{1} << z)) E.push_back(z);
      }
      Json agents = Json::array();
      for (int i = 0; i < env.agents(); ++i) {
        if (is_i_max_set(env, E, i)) agents.push_back(i + 1);
      }
      if (!agents.empty()) {
        imax.push_back(Json{{"set", names(env, E)}, {"agents", agents}});
      }
    }
  }
  j["imax_sets"] = std::move(imax);

  Json per = Json::array();
  for (int i = 0; i < env.agents(); ++i) {
    for (int t = 0; t < env.num_states(); ++t) {
      Json entry;
      entry["agent"] = i + 1;
      entry["state"] = env.state_name(t);
      entry["theta_set"] = state_names(env, cache.theta_i_theta(i, t));
      XiFamily fam = cache.xi_family_detail(i, t, xi_cap);
      Json xi = Json::array();
      for (const auto& K : fam.members) xi.push_back(state_names(env, K));
      entry["xi"] = std::move(xi);
      if (!fam.skipped_empty_base.empty()) {
        Json skipped = Json::array();
        for (const auto& K : fam.skipped_empty_base) {
          skipped.push_back(state_names(env, K));
        }
        entry["xi_skipped_empty_base"] = std::move(skipped);
      }
      if (file.scf) {
        entry["gamma_hat"] = names(env, gamma_hat(env, *file.scf, i, t));
        LhatSet L = lhat_scf(env, *file.scf, i, t);
        Json verts = Json::array();
        for (const Lottery& v : vertices(L.poly).v) {
          verts.push_back(lottery_json(env, v));
        }
        entry["lhat"] = Json{{"first_branch", L.first_branch},
                             {"ground", names(env, L.poly.ground)},
                             {"vertices", verts}};
      }
      entry["gamma_hat_ab"] = names(env, gamma_hat_AB(cache, i, t, xi_cap));
      LhatSet Lab = lhat_AB(cache, i, t, xi_cap);
      Json verts_ab = Json::array();
      for (const Lottery& v : vertices(Lab.poly).v) {
        verts_ab.push_back(lottery_json(env, v));
      }
      entry["lhat_ab"] = Json{{"first_branch", Lab.first_branch},
                              {"ground", names(env, Lab.poly.ground)},
                              {"vertices", verts_ab}};
      per.push_back(std::move(entry));
    }
  }
  j["per_agent_state"] = std::move(per);
  write_report(j, out_path);
  return kExitHolds;
}

int run_ordinalize(const std::string& in_path, const std::string& out_path) {
  ModelFile file = parse_model(read_file(in_path));
  OrdinalEnvironment oenv = ordinalize(file.env);
  Scc F;
  const Scc* Fp = nullptr;
  if (file.scc) {
    F = *file.scc;
    Fp = &F;
  } else if (file.scf) {
    F = scc_from_scf(*file.scf);
    Fp = &F;
  }
  if (out_path.empty()) {
    std::cout << emit_ordinal(oenv, Fp) << "\n";
  } else {
    std::ofstream out(out_path);
    out << emit_ordinal(oenv, Fp) << "\n";
  }
  return kExitHolds;
}

int run_represent(const std::string& in_path, bool rank,
                  const std::string& target_path,
                  const std::string& out_path) {
  OrdinalFile file = parse_ordinal(read_file(in_path));
  ValidationResult v = validate(file.oenv);
  if (!v.ok) {
    throw Error(Errc::kValidationError,
                std::string(validation_code_name(v.code)) + " at " + v.where);
  }
  if (rank) {
    Environment rep = rank_representation(file.oenv);
    const Scc* Fp = file.scc ? &*file.scc : nullptr;
    if (out_path.empty()) {
      std::cout << emit_model(rep, nullptr, Fp) << "\n";
    } else {
      std::ofstream out(out_path);
      out << emit_model(rep, nullptr, Fp) << "\n";
    }
    return kExitHolds;
  }
  if (target_path.empty()) {
    throw Error(Errc::kParseError, "--bracket needs --target");
  }
  Environment target = parse_model(read_file(target_path)).env;
  BracketingReps reps = bracketing_reps(file.oenv, target);
  Json j;
  j["task"] = "represent";
  j["mode"] = "bracket";
  j["n"] = reps.n;
  j["u_hat"] = Json::parse(emit_model(reps.u_hat, nullptr, nullptr));
  j["u_tilde"] = Json::parse(emit_model(reps.u_tilde, nullptr, nullptr));
  write_report(j, out_path);
  return kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact decision procedures for Nash implementation by "
               "stochastic mechanisms"};
  app.require_subcommand(1);

  CheckArgs check_args;
  check_args.xi_cap = -1;  // resolved after env var lookup
  auto* check = app.add_subcommand("check", "Decide a monotonicity condition");
  check
      ->add_option("condition", check_args.condition,
                   "one of: maskin, no-veto, lhat-scf, lhat-ef, lhat-ab, "
                   "lhat-cd, set-mono, strong-set-mono, ly-uniform")
      ->required();
  check->add_option("--in", check_args.in_path, "input model file")
      ->required();
  check->add_option("--out", check_args.out_path, "report path (default stdout)");
  check->add_flag("--all-witnesses", check_args.all_witnesses,
                  "enumerate every violating pair");
  check->add_option("--xi-cap", check_args.xi_cap,
                    "cap on |Theta_i^theta| for Xi enumeration");

  std::string certify_in, certify_out;
  auto* certify = app.add_subcommand(
      "certify", "Verify the sufficiency facts for an scf without "
                 "equilibrium enumeration");
  certify->add_option("--in", certify_in, "input model file")->required();
  certify->add_option("--out", certify_out, "report path (default stdout)");

  std::string mech_in, mech_out, mech_variant = "scf";
  int mech_K = 3, mech_cap = -1;
  auto* mechanism = app.add_subcommand("mechanism", "Mechanism constructions");
  auto* build = mechanism->add_subcommand(
      "build-canonical", "Construct the truncated three-case mechanism");
  build->add_option("--in", mech_in, "input model file")->required();
  build->add_option("--variant", mech_variant, "scf or ab");
  build->add_option("--K", mech_K, "integer truncation bound (>= 2)");
  build->add_option("--xi-cap", mech_cap, "Xi enumeration cap");
  build->add_option("--out", mech_out, "mechanism path (default stdout)");

  std::string ne_mech, ne_env, ne_state, ne_out;
  auto* enumerate = app.add_subcommand("enumerate-ne",
                                       "List pure equilibria of a mechanism");
  enumerate->add_option("--mech", ne_mech, "mechanism file")->required();
  enumerate->add_option("--env", ne_env,
                        "model file (when the mechanism has no embedded "
                        "environment)");
  enumerate->add_option("--state", ne_state, "state name")->required();
  enumerate->add_option("--out", ne_out, "report path (default stdout)");

  FuzzConfig fuzz_cfg;
  int fuzz_cap = -1;
  std::string fuzz_out;
  auto* fuzz = app.add_subcommand(
      "fuzz", "Sample mechanisms and assert the necessity consequences");
  fuzz->add_option("--count", fuzz_cfg.count, "number of instances");
  fuzz->add_option("--seed", fuzz_cfg.seed, "master seed");
  fuzz->add_option("--max-msgs", fuzz_cfg.max_msgs, "messages per agent");
  fuzz->add_option("--max-outcomes", fuzz_cfg.max_outcomes, "outcome bound");
  fuzz->add_option("--max-states", fuzz_cfg.max_states, "state bound");
  fuzz->add_option("--xi-cap", fuzz_cap, "Xi enumeration cap");
  fuzz->add_option("--out", fuzz_out, "report path (default stdout)");

  std::string inspect_in, inspect_out;
  int inspect_cap = -1;
  auto* inspect = app.add_subcommand(
      "inspect", "Emit max sets, Z*, Theta sets, Xi families, reachable "
                 "sets, and contour vertices");
  inspect->add_option("--in", inspect_in, "input model file")->required();
  inspect->add_option("--xi-cap", inspect_cap, "Xi enumeration cap");
  inspect->add_option("--out", inspect_out, "report path (default stdout)");

  std::string ord_in, ord_out;
  auto* ordinalize_cmd = app.add_subcommand(
      "ordinalize", "Extract the weak orders of a cardinal model");
  ordinalize_cmd->add_option("--in", ord_in, "input model file")->required();
  ordinalize_cmd->add_option("--out", ord_out, "output path (default stdout)");

  std::string rep_in, rep_out, rep_target;
  bool rep_rank = false, rep_bracket = false;
  auto* represent = app.add_subcommand(
      "represent", "Build cardinal representations of an ordinal model");
  represent->add_option("--in", rep_in, "ordinal model file")->required();
  represent->add_flag("--rank", rep_rank, "rank-utility representation");
  represent->add_flag("--bracket", rep_bracket,
                      "bracketing pair around --target");
  represent->add_option("--target", rep_target, "cardinal model file");
  represent->add_option("--out", rep_out, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    int cap = default_xi_cap();
    if (app.got_subcommand(check)) {
      if (check_args.xi_cap < 0) check_args.xi_cap = cap;
      return run_check(check_args);
    }
    if (app.got_subcommand(certify)) {
      return run_certify(certify_in, certify_out);
    }
    if (app.got_subcommand(mechanism)) {
      if (mech_cap < 0) mech_cap = cap;
      return run_build_canonical(mech_in, mech_variant, mech_K, mech_cap,
                                 mech_out);
    }
    if (app.got_subcommand(enumerate)) {
      return run_enumerate_ne(ne_mech, ne_env, ne_state, ne_out);
    }
    if (app.got_subcommand(fuzz)) {
      fuzz_cfg.xi_cap = fuzz_cap >= 0 ? fuzz_cap : cap;
      return run_fuzz(fuzz_cfg, fuzz_out);
    }
    if (app.got_subcommand(inspect)) {
      if (inspect_cap < 0) inspect_cap = cap;
      return run_inspect(inspect_in, inspect_cap, inspect_out);
    }
    if (app.got_subcommand(ordinalize_cmd)) {
      return run_ordinalize(ord_in, ord_out);
    }
    if (app.got_subcommand(represent)) {
      if (rep_rank == rep_bracket) {
        throw Error(Errc::kParseError,
                    "pass exactly one of --rank or --bracket");
      }
      return run_represent(rep_in, rep_rank, rep_target, rep_out);
    }
  } catch (const Error& e) {
    Json j;
    j["task"] = "error";
    j["error"] = e.what();
    std::cout << j.dump(2) << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    Json j;
    j["task"] = "error";
    j["error"] = e.what();
    std::cout << j.dump(2) << "\n";
    return kExitError;
  }
  return kExitError;
}
