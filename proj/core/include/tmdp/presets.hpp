// Copyright 2026 The TMDP Lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef TMDP_PRESETS_HPP_
#define TMDP_PRESETS_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "tmdp/config.hpp"

namespace tmdp {

struct PresetInfo {
  std::string name;
  std::string description;
};

const std::vector<PresetInfo>& list_presets();
bool has_preset(std::string_view name);
// Throws ConfigError listing the known names when name is unknown.
ExperimentConfig preset(std::string_view name);

}  // namespace tmdp

#endif  // TMDP_PRESETS_HPP_
