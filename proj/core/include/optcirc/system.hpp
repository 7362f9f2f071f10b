// Copyright 2026 The optcirc Authors
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

#pragma once

#include <map>
#include <string>
#include <vector>

#include "optcirc/common.hpp"

namespace optcirc {

// A wire type. The descriptor is opaque at the circuit layer; backends
// interpret it (the quantum and classical backends read it as a positive
// integer dimension).
struct SystemType {
  std::string label;
  std::string descriptor;
};

// Registry of the system types available to a circuit. The trivial system
// "I" is always present and cannot be redeclared.
class SystemRegistry {
 public:
  static constexpr const char* kTrivialLabel = "I";

  SystemRegistry() {
    systems_[kTrivialLabel] = SystemType{kTrivialLabel, "1"};
  }

  void add(const std::string& label, const std::string& descriptor) {
    if (label == kTrivialLabel) {
      throw Error("system label 'I' is reserved for the trivial system");
    }
    if (label.empty()) {
      throw Error("system label may not be empty");
    }
    auto [it, inserted] = systems_.emplace(label, SystemType{label, descriptor});
    if (!inserted) {
      throw Error("duplicate system label '" + label + "'");
    }
  }

  bool has(const std::string& label) const { return systems_.count(label) != 0; }

  const SystemType& get(const std::string& label) const {
    auto it = systems_.find(label);
    if (it == systems_.end()) {
      throw Error("unknown system '" + label + "'");
    }
    return it->second;
  }

  bool is_trivial(const std::string& label) const { return label == kTrivialLabel; }

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    out.reserve(systems_.size());
    for (const auto& [label, sys] : systems_) out.push_back(label);
    return out;
  }

 private:
  std::map<std::string, SystemType> systems_;
};

}  // namespace optcirc
