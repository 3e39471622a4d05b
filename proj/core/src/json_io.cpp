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

#include "implkit/json_io.hpp"

#include <json.hpp>

#include <algorithm>

namespace implkit {

namespace {

using Json = nlohmann::ordered_json;

Json parse_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw Error(Errc::kParseError, "invalid JSON");
  return j;
}

int require_outcome(const Environment& env, const std::string& name) {
  int z = env.outcome_index(name);
  if (z < 0) throw Error(Errc::kParseError, "unknown outcome '" + name + "'");
  return z;
}

int require_state(const Environment& env, const std::string& name) {
  int t = env.state_index(name);
  if (t < 0) throw Error(Errc::kParseError, "unknown state '" + name + "'");
  return t;
}

Environment env_from_json(const Json& j) {
  if (!j.contains("agents") || !j.contains("states") ||
      !j.contains("outcomes") || !j.contains("utility")) {
    throw Error(Errc::kParseError,
                "environment needs agents, states, outcomes, utility");
  }
  int agents = j.at("agents").get<int>();
  std::vector<std::string> states =
      j.at("states").get<std::vector<std::string>>();
  std::vector<std::string> outcomes =
      j.at("outcomes").get<std::vector<std::string>>();
  Environment env(agents, states, outcomes);
  std::vector<char> present(
      static_cast<std::size_t>(agents) * states.size() * outcomes.size(), 0);
  for (const auto& [agent_key, by_state] : j.at("utility").items()) {
    int i = std::stoi(agent_key) - 1;
    if (i < 0 || i >= agents) {
      throw Error(Errc::kParseError, "bad agent key '" + agent_key + "'");
    }
    for (const auto& [state_key, by_outcome] : by_state.items()) {
      int t = require_state(env, state_key);
      for (const auto& [outcome_key, value] : by_outcome.items()) {
        int z = require_outcome(env, outcome_key);
        env.set_utility(i, t, z,
                        Rational::parse(value.get<std::string>()));
        present[(static_cast<std::size_t>(i) * states.size() + t) *
                    outcomes.size() +
                z] = 1;
      }
    }
  }
  for (char p : present) {
    if (!p) {
      throw Error(Errc::kValidationError, "MissingUtility: table not total");
    }
  }
  return env;
}

Json env_to_json(const Environment& env) {
  Json j;
  j["agents"] = env.agents();
  j["states"] = env.state_names();
  j["outcomes"] = env.outcome_names();
  Json table;
  for (int i = 0; i < env.agents(); ++i) {
    Json by_state;
    for (int t = 0; t < env.num_states(); ++t) {
      Json by_outcome;
      for (int z = 0; z < env.num_outcomes(); ++z) {
        by_outcome[env.outcome_name(z)] = env.utility(i, t, z).str();
      }
      by_state[env.state_name(t)] = std::move(by_outcome);
    }
    table[std::to_string(i + 1)] = std::move(by_state);
  }
  j["utility"] = std::move(table);
  return j;
}

Lottery lottery_from(const Environment& env, const Json& j) {
  Lottery y;
  y.p.assign(env.num_outcomes(), Rational(0));
  for (const auto& [outcome_key, value] : j.items()) {
    int z = require_outcome(env, outcome_key);
    y.p[z] = Rational::parse(value.get<std::string>());
  }
  if (!y.is_valid()) {
    throw Error(Errc::kValidationError, "lottery does not sum to one");
  }
  return y;
}

Json lottery_to(const Environment& env, const Lottery& y) {
  Json j = Json::object();
  for (int z = 0; z < env.num_outcomes(); ++z) {
    if (!y.p[z].is_zero()) j[env.outcome_name(z)] = y.p[z].str();
  }
  return j;
}

}  // namespace

ModelFile parse_model(const std::string& text) {
  Json j = parse_text(text);
  ModelFile out;
  out.env = env_from_json(j);
  if (j.contains("scf")) {
    Scf f;
    f.choice.assign(out.env.num_states(), -1);
    for (const auto& [state_key, outcome_key] : j.at("scf").items()) {
      f.choice[require_state(out.env, state_key)] =
          require_outcome(out.env, outcome_key.get<std::string>());
    }
    for (int c : f.choice) {
      if (c < 0) throw Error(Errc::kParseError, "scf is not total");
    }
    out.scf = std::move(f);
  }
  if (j.contains("scc")) {
    Scc F;
    F.choice.assign(out.env.num_states(), {});
    for (const auto& [state_key, outcome_list] : j.at("scc").items()) {
      std::vector<int> v;
      for (const auto& name : outcome_list) {
        v.push_back(require_outcome(out.env, name.get<std::string>()));
      }
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      F.choice[require_state(out.env, state_key)] = std::move(v);
    }
    out.scc = std::move(F);
  }
  return out;
}

std::string emit_model(const Environment& env, const Scf* f, const Scc* F) {
  Json j = env_to_json(env);
  if (f) {
    Json m;
    for (int t = 0; t < env.num_states(); ++t) {
      m[env.state_name(t)] = env.outcome_name(f->choice[t]);
    }
    j["scf"] = std::move(m);
  }
  if (F) {
    Json m;
    for (int t = 0; t < env.num_states(); ++t) {
      Json v = Json::array();
      for (int z : F->choice[t]) v.push_back(env.outcome_name(z));
      m[env.state_name(t)] = std::move(v);
    }
    j["scc"] = std::move(m);
  }
  return j.dump(2);
}

OrdinalFile parse_ordinal(const std::string& text) {
  Json j = parse_text(text);
  if (!j.contains("agents") || !j.contains("states") ||
      !j.contains("outcomes") || !j.contains("orders")) {
    throw Error(Errc::kParseError,
                "ordinal file needs agents, states, outcomes, orders");
  }
  OrdinalFile out;
  OrdinalEnvironment& oenv = out.oenv;
  oenv.agents = j.at("agents").get<int>();
  oenv.states = j.at("states").get<std::vector<std::string>>();
  oenv.outcomes = j.at("outcomes").get<std::vector<std::string>>();
  oenv.classes_by_agent.assign(
      oenv.agents,
      std::vector<std::vector<std::vector<int>>>(oenv.states.size()));
  auto outcome_index = [&](const std::string& name) {
    auto it = std::find(oenv.outcomes.begin(), oenv.outcomes.end(), name);
    if (it == oenv.outcomes.end()) {
      throw Error(Errc::kParseError, "unknown outcome '" + name + "'");
    }
    return static_cast<int>(it - oenv.outcomes.begin());
  };
  auto state_index = [&](const std::string& name) {
    auto it = std::find(oenv.states.begin(), oenv.states.end(), name);
    if (it == oenv.states.end()) {
      throw Error(Errc::kParseError, "unknown state '" + name + "'");
    }
    return static_cast<int>(it - oenv.states.begin());
  };
  for (const auto& [agent_key, by_state] : j.at("orders").items()) {
    int i = std::stoi(agent_key) - 1;
    if (i < 0 || i >= oenv.agents) {
      throw Error(Errc::kParseError, "bad agent key '" + agent_key + "'");
    }
    for (const auto& [state_key, class_list] : by_state.items()) {
      int t = state_index(state_key);
      std::vector<std::vector<int>> classes;
      for (const auto& cls : class_list) {
        std::vector<int> c;
        for (const auto& name : cls) {
          c.push_back(outcome_index(name.get<std::string>()));
        }
        std::sort(c.begin(), c.end());
        classes.push_back(std::move(c));
      }
      oenv.classes_by_agent[i][t] = std::move(classes);
    }
  }
  if (j.contains("scc")) {
    Scc F;
    F.choice.assign(oenv.states.size(), {});
    for (const auto& [state_key, outcome_list] : j.at("scc").items()) {
      std::vector<int> v;
      for (const auto& name : outcome_list) {
        v.push_back(outcome_index(name.get<std::string>()));
      }
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      F.choice[state_index(state_key)] = std::move(v);
    }
    out.scc = std::move(F);
  }
  return out;
}

std::string emit_ordinal(const OrdinalEnvironment& oenv, const Scc* F) {
  Json j;
  j["agents"] = oenv.agents;
  j["states"] = oenv.states;
  j["outcomes"] = oenv.outcomes;
  Json orders;
  for (int i = 0; i < oenv.agents; ++i) {
    Json by_state;
    for (int t = 0; t < oenv.num_states(); ++t) {
      Json classes = Json::array();
      for (const auto& cls : oenv.classes(i, t)) {
        Json c = Json::array();
        for (int z : cls) c.push_back(oenv.outcomes[z]);
        classes.push_back(std::move(c));
      }
      by_state[oenv.states[t]] = std::move(classes);
    }
    orders[std::to_string(i + 1)] = std::move(by_state);
  }
  j["orders"] = std::move(orders);
  if (F) {
    Json m;
    for (int t = 0; t < oenv.num_states(); ++t) {
      Json v = Json::array();
      for (int z : F->choice[t]) v.push_back(oenv.outcomes[z]);
      m[oenv.states[t]] = std::move(v);
    }
    j["scc"] = std::move(m);
  }
  return j.dump(2);
}

MechanismFile parse_mechanism(const std::string& text,
                              const Environment* fallback_env) {
  Json j = parse_text(text);
  MechanismFile out;
  if (j.contains("environment")) {
    out.env = env_from_json(j.at("environment"));
  } else if (fallback_env) {
    out.env = *fallback_env;
  } else {
    throw Error(Errc::kParseError,
                "mechanism file has no embedded environment; pass one");
  }
  if (!j.contains("messages") || !j.contains("outcomes")) {
    throw Error(Errc::kParseError, "mechanism needs messages and outcomes");
  }
  out.mech.messages =
      j.at("messages").get<std::vector<std::vector<std::string>>>();
  for (const auto& mi : out.mech.messages) {
    if (mi.empty()) {
      throw Error(Errc::kParseError, "empty message set");
    }
  }
  std::size_t profiles = out.mech.profile_count();
  out.mech.table.assign(profiles, Lottery{});
  std::vector<char> seen(profiles, 0);
  for (const auto& [key, lottery_json] : j.at("outcomes").items()) {
    // Split "m1|m2|m3" into per-agent message names.
    std::vector<std::string> parts;
    std::string cur;
    for (char c : key) {
      if (c == '|') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    parts.push_back(cur);
    if (parts.size() != out.mech.messages.size()) {
      throw Error(Errc::kParseError, "bad profile key '" + key + "'");
    }
    std::vector<int> profile;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const auto& names = out.mech.messages[i];
      auto it = std::find(names.begin(), names.end(), parts[i]);
      if (it == names.end()) {
        throw Error(Errc::kParseError,
                    "unknown message '" + parts[i] + "' in '" + key + "'");
      }
      profile.push_back(static_cast<int>(it - names.begin()));
    }
    std::size_t idx = out.mech.flat_index(profile);
    out.mech.table[idx] = lottery_from(out.env, lottery_json);
    seen[idx] = 1;
  }
  for (char s : seen) {
    if (!s) {
      throw Error(Errc::kValidationError, "outcome table is not total");
    }
  }
  return out;
}

std::string emit_mechanism(const Mechanism& mech, const Environment& env,
                           bool embed_env) {
  Json j;
  if (embed_env) j["environment"] = env_to_json(env);
  j["messages"] = mech.messages;
  Json outcomes;
  std::vector<int> profile(mech.agents(), 0);
  while (true) {
    std::string key;
    for (int i = 0; i < mech.agents(); ++i) {
      if (i > 0) key += "|";
      key += mech.messages[i][profile[i]];
    }
    outcomes[key] = lottery_to(env, mech.outcome(profile));
    int carry = mech.agents() - 1;
    while (carry >= 0) {
      if (++profile[carry] < static_cast<int>(mech.messages[carry].size())) {
        break;
      }
      profile[carry] = 0;
      --carry;
    }
    if (carry < 0) break;
  }
  j["outcomes"] = std::move(outcomes);
  return j.dump(2);
}

std::string lottery_to_json(const Environment& env, const Lottery& y) {
  return lottery_to(env, y).dump();
}

Lottery lottery_from_json(const Environment& env, const std::string& text) {
  return lottery_from(env, parse_text(text));
}

}  // namespace implkit
