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

#include "optcirc/circuit_text.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

namespace optcirc {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) tokens.push_back(tok);
  return tokens;
}

// Splits "key=value", checking the key.
std::string expect_kv(const std::string& token, const std::string& key, int line) {
  const std::string prefix = key + "=";
  if (token.rfind(prefix, 0) != 0) {
    throw ParseError(line, "expected '" + key + "=...', got '" + token + "'");
  }
  return token.substr(prefix.size());
}

// Parses "[a,b,c]" or "[]" into labels.
std::vector<std::string> parse_label_list(const std::string& value, int line) {
  if (value.size() < 2 || value.front() != '[' || value.back() != ']') {
    throw ParseError(line, "expected bracketed list, got '" + value + "'");
  }
  std::vector<std::string> labels;
  std::string inner = value.substr(1, value.size() - 2);
  if (inner.empty()) return labels;
  std::istringstream is(inner);
  std::string item;
  while (std::getline(is, item, ',')) {
    if (item.empty()) {
      throw ParseError(line, "empty label in list '" + value + "'");
    }
    labels.push_back(item);
  }
  return labels;
}

int parse_int(const std::string& value, int line, const std::string& what) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "bad " + what + " '" + value + "'");
  }
}

// Parses "node.port" into a PortRef.
PortRef parse_port(const std::string& token, int line) {
  auto dot = token.rfind('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 == token.size()) {
    throw ParseError(line, "expected <node>.<port>, got '" + token + "'");
  }
  PortRef ref;
  ref.node = token.substr(0, dot);
  ref.port = parse_int(token.substr(dot + 1), line, "port index");
  return ref;
}

}  // namespace

Circuit parse_circuit(std::istream& in) {
  SystemRegistry systems;
  std::vector<TestNode> nodes;
  std::vector<Wire> wires;

  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    const std::string& kind = tokens[0];
    if (kind == "system") {
      if (tokens.size() != 3) {
        throw ParseError(lineno, "expected 'system <label> <descriptor>'");
      }
      try {
        systems.add(tokens[1], tokens[2]);
      } catch (const Error& e) {
        throw ParseError(lineno, e.what());
      }
    } else if (kind == "node") {
      if (tokens.size() != 6) {
        throw ParseError(lineno,
                         "expected 'node <id> inputs=[...] outputs=[...] outcomes=<k> payload=<key>'");
      }
      TestNode n;
      n.id = tokens[1];
      n.inputs = parse_label_list(expect_kv(tokens[2], "inputs", lineno), lineno);
      n.outputs = parse_label_list(expect_kv(tokens[3], "outputs", lineno), lineno);
      n.outcomes = parse_int(expect_kv(tokens[4], "outcomes", lineno), lineno, "outcome count");
      n.payload = expect_kv(tokens[5], "payload", lineno);
      if (n.payload.empty()) {
        throw ParseError(lineno, "empty payload key");
      }
      nodes.push_back(std::move(n));
    } else if (kind == "wire") {
      if (tokens.size() != 5 || tokens[3] != "->") {
        throw ParseError(lineno, "expected 'wire <sys> <src>.<port> -> <dst>.<port>'");
      }
      Wire w;
      w.system = tokens[1];
      w.source = parse_port(tokens[2], lineno);
      w.target = parse_port(tokens[4], lineno);
      wires.push_back(std::move(w));
    } else {
      throw ParseError(lineno, "unknown directive '" + kind + "'");
    }
  }

  return Circuit(std::move(systems), std::move(nodes), std::move(wires), /*closed=*/true);
}

Circuit parse_circuit_string(const std::string& text) {
  std::istringstream is(text);
  return parse_circuit(is);
}

Circuit parse_circuit_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open circuit file '" + path + "'");
  }
  return parse_circuit(in);
}

}  // namespace optcirc
