// SPDX-License-Identifier: Apache-2.0
//
// secrecy-ascent: secrecy capacity optimization for jammer-assisted V2I links
// Copyright (C) 2026 The secrecy-ascent authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "secrecy/experiment.hpp"

namespace secrecy
{
    // Validation or parse failure tied to one configuration key.
    class ConfigError : public std::runtime_error
    {
    public:
        ConfigError(std::string field, const std::string &message);
        const std::string &field() const { return field_; }

    private:
        std::string field_;
    };

    using KeyValues = std::map<std::string, std::string>;

    // Recognized keys in canonical output order.
    const std::vector<std::string> &config_keys();

    // key = value lines; '#' starts a comment; blank lines ignored. Unknown or
    // duplicated keys are errors.
    KeyValues parse_key_values(const std::string &text);

    // Applies defaults, converts dB quantities and validates. `overrides`
    // replace file values key by key.
    SystemConfig resolve_config(const KeyValues &file_values, const KeyValues &overrides = {});

    SystemConfig load_config(const std::string &path, const KeyValues &overrides = {});

    // The resolved configuration as key/value pairs; feeding them back through
    // resolve_config reproduces the configuration (dB values to 12 digits).
    std::vector<std::pair<std::string, std::string>> config_snapshot(const SystemConfig &cfg);
    std::string format_config(const SystemConfig &cfg);
}
