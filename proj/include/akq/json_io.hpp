// Copyright 2026 The akq Authors
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

#pragma once

#include "akq/adversary.hpp"
#include "akq/ake.hpp"
#include "json.hpp"

namespace akq {

/// SessionTranscript JSON: one key per transcript field, bit sequences as
/// '0'/'1' strings, the config echoed under "config".
nlohmann::json to_json(const SessionConfig &cfg);
nlohmann::json to_json(const SessionEveReport &rep);
nlohmann::json to_json(const SessionTranscript &tr);
nlohmann::json to_json(const AttackReport &rep);

/// Reads the keys present in `j` over the defaults in `base`. Unknown keys or
/// wrongly typed values throw InvalidConfiguration naming the key.
SessionConfig session_config_from_json(const nlohmann::json &j, SessionConfig base = {});

}  // namespace akq
