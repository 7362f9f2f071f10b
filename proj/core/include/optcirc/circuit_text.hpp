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

#include <iosfwd>
#include <string>

#include "optcirc/circuit.hpp"

namespace optcirc {

// Parses the line-oriented circuit description format:
//
//   # comment
//   system <label> <backend-descriptor>
//   node <id> inputs=[<sys>,...] outputs=[<sys>,...] outcomes=<k> payload=<key>
//   wire <sys> <srcNode>.<outPortIdx> -> <dstNode>.<inPortIdx>
//
// Circuits written in this format are closed. Structural problems beyond the
// grammar (cycles, dangling ports, ...) are left to Circuit::validate().
// Throws ParseError with a 1-based line number on malformed input.
Circuit parse_circuit(std::istream& in);
Circuit parse_circuit_string(const std::string& text);
Circuit parse_circuit_file(const std::string& path);

}  // namespace optcirc
