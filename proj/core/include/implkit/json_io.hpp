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

#ifndef IMPLKIT_JSON_IO_HPP_
#define IMPLKIT_JSON_IO_HPP_

#include <optional>
#include <string>

#include "implkit/mechanism.hpp"
#include "implkit/ordinal.hpp"

namespace implkit {

// Cardinal model file: environment plus an SCF or an SCC (or neither).
struct ModelFile {
  Environment env;
  std::optional<Scf> scf;
  std::optional<Scc> scc;
};

ModelFile parse_model(const std::string& text);
std::string emit_model(const Environment& env, const Scf* f, const Scc* F);

struct OrdinalFile {
  OrdinalEnvironment oenv;
  std::optional<Scc> scc;
};

OrdinalFile parse_ordinal(const std::string& text);
std::string emit_ordinal(const OrdinalEnvironment& oenv, const Scc* F);

// Mechanism file; outcome keys are message names joined with '|'.  The
// environment may be embedded under "environment", otherwise the caller
// supplies one for outcome-name resolution.
struct MechanismFile {
  Mechanism mech;
  Environment env;
};

MechanismFile parse_mechanism(const std::string& text,
                              const Environment* fallback_env = nullptr);
std::string emit_mechanism(const Mechanism& mech, const Environment& env,
                           bool embed_env);

std::string lottery_to_json(const Environment& env, const Lottery& y);
Lottery lottery_from_json(const Environment& env, const std::string& text);

}  // namespace implkit

#endif  // IMPLKIT_JSON_IO_HPP_
