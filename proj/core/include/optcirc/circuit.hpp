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

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "optcirc/common.hpp"
#include "optcirc/system.hpp"

namespace optcirc {

// A port of a node: `port` indexes the node's input or output port list,
// depending on which endpoint of a wire the reference sits in.
struct PortRef {
  std::string node;
  int port = 0;

  friend bool operator==(const PortRef& a, const PortRef& b) {
    return a.node == b.node && a.port == b.port;
  }
};

// A typed link between an output port and an input port. An absent endpoint
// is the open boundary of a non-closed circuit.
struct Wire {
  std::string system;
  std::optional<PortRef> source;  // (node, output-port index)
  std::optional<PortRef> target;  // (node, input-port index)
};

// One test of the circuit: a collection of alternative events indexed by a
// finite outcome space of size `outcomes`. The per-outcome transformations
// are resolved by a backend through the payload key.
struct TestNode {
  std::string id;
  std::vector<std::string> inputs;   // system label per input port
  std::vector<std::string> outputs;  // system label per output port
  int outcomes = 1;
  std::string payload;
};

enum class ViolationKind {
  DuplicateNode,
  BadOutcomeCount,
  UnknownSystem,
  UnknownNode,
  BadPortIndex,
  SystemMismatch,
  DanglingPort,
  DoubleAttachedPort,
  BoundaryWireInClosed,
  Cycle,
};

struct Violation {
  ViolationKind kind;
  std::string message;
};

// Violations are data, not failures: an ill-formed circuit can always be
// inspected, it just cannot be simulated.
struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// A circuit: test nodes wired by typed systems into a directed acyclic
/// graph, oriented from output ports to input ports. Closed circuits have no
/// boundary endpoints and are the objects whose joint outcome distribution a
/// backend can evaluate.
///
/// Circuits are immutable after construction; all queries are const and safe
/// to call concurrently.
class Circuit {
 public:
  Circuit(SystemRegistry systems, std::vector<TestNode> nodes,
          std::vector<Wire> wires, bool closed = true);

  const SystemRegistry& systems() const { return systems_; }
  const std::vector<TestNode>& nodes() const { return nodes_; }
  const std::vector<Wire>& wires() const { return wires_; }
  bool closed() const { return closed_; }

  bool has_node(const std::string& id) const;
  const TestNode& node(const std::string& id) const;

  // All input ports trivial / all output ports trivial, respectively.
  bool is_preparation(const TestNode& n) const;
  bool is_observation(const TestNode& n) const;

  ValidationReport validate() const;

  // Strict partial order: true iff a directed path leads from an output
  // port of `a` to an input port of `b`.
  bool precedes(const std::string& a, const std::string& b) const;

  // past_cone(a) = { x : precedes(x, a) }, future_cone(a) = { x : precedes(a, x) }.
  std::set<std::string> past_cone(const std::string& id) const;
  std::set<std::string> future_cone(const std::string& id) const;

  // Deterministic linear extension of `precedes` (ties broken by node id).
  // Throws Error if the wiring contains a cycle.
  std::vector<std::string> topological_order() const;

 private:
  std::vector<std::string> successors(const std::string& id) const;
  std::vector<std::string> predecessors(const std::string& id) const;

  SystemRegistry systems_;
  std::vector<TestNode> nodes_;
  std::vector<Wire> wires_;
  bool closed_;

  std::map<std::string, std::size_t> node_index_;
  // Node-level adjacency derived from wires whose endpoints both resolve.
  std::map<std::string, std::set<std::string>> succ_;
  std::map<std::string, std::set<std::string>> pred_;
};

// Splits a closed circuit along a directed edge cut into an open preparation
// circuit (cut wires become boundary outputs) and an open observation
// circuit (cut wires become boundary inputs). `cut` holds indices into
// circuit.wires(). Throws CutError if the indices do not form a directed cut.
std::pair<Circuit, Circuit> split_prep_obs(const Circuit& circuit,
                                           const std::set<std::size_t>& cut);

// Recomposes the two halves produced by split_prep_obs, pairing boundary
// wires positionally. The result reproduces the original circuit
// node-for-node and wire-for-wire.
Circuit recompose(const Circuit& preparation, const Circuit& observation);

}  // namespace optcirc
