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

#include "optcirc/circuit.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace optcirc {

namespace {

std::string port_name(const PortRef& p, bool output) {
  std::ostringstream os;
  os << p.node << "." << (output ? "out" : "in") << "[" << p.port << "]";
  return os.str();
}

}  // namespace

Circuit::Circuit(SystemRegistry systems, std::vector<TestNode> nodes,
                 std::vector<Wire> wires, bool closed)
    : systems_(std::move(systems)),
      nodes_(std::move(nodes)),
      wires_(std::move(wires)),
      closed_(closed) {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    node_index_.emplace(nodes_[i].id, i);
  }
  for (const auto& w : wires_) {
    if (!w.source || !w.target) continue;
    if (!node_index_.count(w.source->node) || !node_index_.count(w.target->node)) continue;
    succ_[w.source->node].insert(w.target->node);
    pred_[w.target->node].insert(w.source->node);
  }
}

bool Circuit::has_node(const std::string& id) const {
  return node_index_.count(id) != 0;
}

const TestNode& Circuit::node(const std::string& id) const {
  auto it = node_index_.find(id);
  if (it == node_index_.end()) {
    throw Error("unknown node '" + id + "'");
  }
  return nodes_[it->second];
}

bool Circuit::is_preparation(const TestNode& n) const {
  return std::all_of(n.inputs.begin(), n.inputs.end(),
                     [&](const std::string& s) { return systems_.is_trivial(s); });
}

bool Circuit::is_observation(const TestNode& n) const {
  return std::all_of(n.outputs.begin(), n.outputs.end(),
                     [&](const std::string& s) { return systems_.is_trivial(s); });
}

std::vector<std::string> Circuit::successors(const std::string& id) const {
  auto it = succ_.find(id);
  if (it == succ_.end()) return {};
  return {it->second.begin(), it->second.end()};
}

std::vector<std::string> Circuit::predecessors(const std::string& id) const {
  auto it = pred_.find(id);
  if (it == pred_.end()) return {};
  return {it->second.begin(), it->second.end()};
}

ValidationReport Circuit::validate() const {
  ValidationReport report;
  auto add = [&](ViolationKind kind, const std::string& msg) {
    report.violations.push_back({kind, msg});
  };

  // Node-level checks.
  std::set<std::string> seen;
  for (const auto& n : nodes_) {
    if (!seen.insert(n.id).second) {
      add(ViolationKind::DuplicateNode, "duplicate node id '" + n.id + "'");
    }
    if (n.outcomes < 1) {
      add(ViolationKind::BadOutcomeCount,
          "node '" + n.id + "' has outcome space of size " + std::to_string(n.outcomes));
    }
    for (const auto& s : n.inputs) {
      if (!systems_.has(s)) {
        add(ViolationKind::UnknownSystem, "unknown system '" + s + "' on input port of node '" + n.id + "'");
      }
    }
    for (const auto& s : n.outputs) {
      if (!systems_.has(s)) {
        add(ViolationKind::UnknownSystem, "unknown system '" + s + "' on output port of node '" + n.id + "'");
      }
    }
  }

  // Wire endpoint checks plus per-port attachment counts.
  std::map<std::pair<std::string, int>, int> in_count;
  std::map<std::pair<std::string, int>, int> out_count;
  for (std::size_t wi = 0; wi < wires_.size(); ++wi) {
    const Wire& w = wires_[wi];
    const std::string wire_name = "wire #" + std::to_string(wi);
    if (!systems_.has(w.system)) {
      add(ViolationKind::UnknownSystem, "unknown system '" + w.system + "' on " + wire_name);
    }
    if (closed_ && (!w.source || !w.target)) {
      add(ViolationKind::BoundaryWireInClosed,
          "boundary wire in a closed circuit (" + wire_name + ")");
    }
    if (w.source) {
      auto it = node_index_.find(w.source->node);
      if (it == node_index_.end()) {
        add(ViolationKind::UnknownNode,
            "unknown node '" + w.source->node + "' on " + wire_name);
      } else {
        const TestNode& n = nodes_[it->second];
        if (w.source->port < 0 || w.source->port >= static_cast<int>(n.outputs.size())) {
          add(ViolationKind::BadPortIndex,
              "bad output port index on " + wire_name + ": " + port_name(*w.source, true));
        } else {
          if (systems_.has(w.system) && n.outputs[w.source->port] != w.system) {
            add(ViolationKind::SystemMismatch,
                "system mismatch on " + wire_name + ": " + port_name(*w.source, true) +
                    " carries '" + n.outputs[w.source->port] + "', wire declares '" + w.system + "'");
          }
          out_count[{w.source->node, w.source->port}]++;
        }
      }
    }
    if (w.target) {
      auto it = node_index_.find(w.target->node);
      if (it == node_index_.end()) {
        add(ViolationKind::UnknownNode,
            "unknown node '" + w.target->node + "' on " + wire_name);
      } else {
        const TestNode& n = nodes_[it->second];
        if (w.target->port < 0 || w.target->port >= static_cast<int>(n.inputs.size())) {
          add(ViolationKind::BadPortIndex,
              "bad input port index on " + wire_name + ": " + port_name(*w.target, false));
        } else {
          if (systems_.has(w.system) && n.inputs[w.target->port] != w.system) {
            add(ViolationKind::SystemMismatch,
                "system mismatch on " + wire_name + ": " + port_name(*w.target, false) +
                    " carries '" + n.inputs[w.target->port] + "', wire declares '" + w.system + "'");
          }
          in_count[{w.target->node, w.target->port}]++;
        }
      }
    }
  }

  for (const auto& n : nodes_) {
    for (int p = 0; p < static_cast<int>(n.inputs.size()); ++p) {
      int c = in_count.count({n.id, p}) ? in_count.at({n.id, p}) : 0;
      if (c == 0) {
        add(ViolationKind::DanglingPort, "dangling port " + port_name({n.id, p}, false));
      } else if (c > 1) {
        add(ViolationKind::DoubleAttachedPort,
            "double-attached port " + port_name({n.id, p}, false));
      }
    }
    for (int p = 0; p < static_cast<int>(n.outputs.size()); ++p) {
      int c = out_count.count({n.id, p}) ? out_count.at({n.id, p}) : 0;
      if (c == 0) {
        add(ViolationKind::DanglingPort, "dangling port " + port_name({n.id, p}, true));
      } else if (c > 1) {
        add(ViolationKind::DoubleAttachedPort,
            "double-attached port " + port_name({n.id, p}, true));
      }
    }
  }

  // Cycle detection on the node-level adjacency (Kahn).
  {
    std::map<std::string, int> indegree;
    for (const auto& n : nodes_) indegree[n.id] = 0;
    for (const auto& [u, vs] : succ_) {
      for (const auto& v : vs) indegree[v]++;
    }
    std::queue<std::string> ready;
    for (const auto& [id, deg] : indegree) {
      if (deg == 0) ready.push(id);
    }
    std::size_t processed = 0;
    while (!ready.empty()) {
      std::string u = ready.front();
      ready.pop();
      ++processed;
      for (const auto& v : successors(u)) {
        if (--indegree[v] == 0) ready.push(v);
      }
    }
    if (processed < nodes_.size()) {
      std::vector<std::string> stuck;
      for (const auto& [id, deg] : indegree) {
        if (deg > 0) stuck.push_back(id);
      }
      std::ostringstream os;
      os << "cycle through nodes:";
      for (const auto& id : stuck) os << " " << id;
      add(ViolationKind::Cycle, os.str());
    }
  }

  return report;
}

bool Circuit::precedes(const std::string& a, const std::string& b) const {
  node(a);
  node(b);
  // DFS from a; a itself never precedes itself in an acyclic circuit.
  std::vector<std::string> stack{a};
  std::set<std::string> visited;
  while (!stack.empty()) {
    std::string u = stack.back();
    stack.pop_back();
    for (const auto& v : successors(u)) {
      if (v == b) return true;
      if (visited.insert(v).second) stack.push_back(v);
    }
  }
  return false;
}

std::set<std::string> Circuit::past_cone(const std::string& id) const {
  node(id);
  std::set<std::string> cone;
  std::vector<std::string> stack{id};
  while (!stack.empty()) {
    std::string u = stack.back();
    stack.pop_back();
    for (const auto& v : predecessors(u)) {
      if (cone.insert(v).second) stack.push_back(v);
    }
  }
  cone.erase(id);
  return cone;
}

std::set<std::string> Circuit::future_cone(const std::string& id) const {
  node(id);
  std::set<std::string> cone;
  std::vector<std::string> stack{id};
  while (!stack.empty()) {
    std::string u = stack.back();
    stack.pop_back();
    for (const auto& v : successors(u)) {
      if (cone.insert(v).second) stack.push_back(v);
    }
  }
  cone.erase(id);
  return cone;
}

std::vector<std::string> Circuit::topological_order() const {
  std::map<std::string, int> indegree;
  for (const auto& n : nodes_) indegree[n.id] = 0;
  for (const auto& [u, vs] : succ_) {
    for (const auto& v : vs) indegree[v]++;
  }
  // Min-heap on node id makes the order a deterministic function of the
  // circuit: lexicographically smallest ready node first.
  std::priority_queue<std::string, std::vector<std::string>, std::greater<>> ready;
  for (const auto& [id, deg] : indegree) {
    if (deg == 0) ready.push(id);
  }
  std::vector<std::string> order;
  order.reserve(nodes_.size());
  while (!ready.empty()) {
    std::string u = ready.top();
    ready.pop();
    order.push_back(u);
    for (const auto& v : successors(u)) {
      if (--indegree[v] == 0) ready.push(v);
    }
  }
  if (order.size() < nodes_.size()) {
    throw Error("topological_order: circuit contains a cycle");
  }
  return order;
}

std::pair<Circuit, Circuit> split_prep_obs(const Circuit& circuit,
                                           const std::set<std::size_t>& cut) {
  if (!circuit.closed()) {
    throw CutError("split_prep_obs requires a closed circuit");
  }
  if (!circuit.validate().ok()) {
    throw CutError("split_prep_obs requires a valid circuit");
  }
  if (cut.empty()) {
    throw CutError("cut is empty");
  }
  const auto& wires = circuit.wires();
  for (std::size_t wi : cut) {
    if (wi >= wires.size()) {
      throw CutError("cut refers to wire #" + std::to_string(wi) + " which does not exist");
    }
  }

  // The observation side is the forward closure of the cut targets; in a
  // valid directed cut everything else sits strictly before the cut.
  std::set<std::string> right;
  std::vector<std::string> stack;
  for (std::size_t wi : cut) {
    const std::string& t = wires[wi].target->node;
    if (right.insert(t).second) stack.push_back(t);
  }
  while (!stack.empty()) {
    std::string u = stack.back();
    stack.pop_back();
    for (const auto& n : circuit.future_cone(u)) {
      if (right.insert(n).second) stack.push_back(n);
    }
  }

  for (std::size_t wi = 0; wi < wires.size(); ++wi) {
    const Wire& w = wires[wi];
    const bool src_right = right.count(w.source->node) != 0;
    const bool dst_right = right.count(w.target->node) != 0;
    if (cut.count(wi)) {
      if (src_right || !dst_right) {
        throw CutError("cut wire #" + std::to_string(wi) +
                       " does not cross the induced bipartition left-to-right");
      }
    } else if (src_right != dst_right) {
      throw CutError("wire #" + std::to_string(wi) +
                     " crosses the induced bipartition but is not in the cut");
    }
  }

  std::vector<TestNode> left_nodes, right_nodes;
  for (const auto& n : circuit.nodes()) {
    if (right.count(n.id)) {
      right_nodes.push_back(n);
    } else {
      left_nodes.push_back(n);
    }
  }
  if (left_nodes.empty() || right_nodes.empty()) {
    throw CutError("cut does not induce a proper bipartition");
  }

  std::vector<Wire> left_wires, right_wires;
  for (std::size_t wi = 0; wi < wires.size(); ++wi) {
    const Wire& w = wires[wi];
    if (cut.count(wi)) continue;
    if (right.count(w.source->node)) {
      right_wires.push_back(w);
    } else {
      left_wires.push_back(w);
    }
  }
  // Boundary wires keep the cut's ascending wire-index order on both sides,
  // which is what recompose() pairs them by.
  for (std::size_t wi : cut) {
    const Wire& w = wires[wi];
    left_wires.push_back(Wire{w.system, w.source, std::nullopt});
    right_wires.push_back(Wire{w.system, std::nullopt, w.target});
  }

  Circuit preparation(circuit.systems(), std::move(left_nodes), std::move(left_wires),
                      /*closed=*/false);
  Circuit observation(circuit.systems(), std::move(right_nodes), std::move(right_wires),
                      /*closed=*/false);
  return {std::move(preparation), std::move(observation)};
}

Circuit recompose(const Circuit& preparation, const Circuit& observation) {
  std::vector<const Wire*> left_boundary, right_boundary;
  std::vector<Wire> merged_wires;
  for (const auto& w : preparation.wires()) {
    if (!w.target) {
      left_boundary.push_back(&w);
    } else if (!w.source) {
      throw CutError("preparation half has a boundary input");
    } else {
      merged_wires.push_back(w);
    }
  }
  for (const auto& w : observation.wires()) {
    if (!w.source) {
      right_boundary.push_back(&w);
    } else if (!w.target) {
      throw CutError("observation half has a boundary output");
    } else {
      merged_wires.push_back(w);
    }
  }
  if (left_boundary.size() != right_boundary.size()) {
    throw CutError("boundary sizes do not match: " + std::to_string(left_boundary.size()) +
                   " vs " + std::to_string(right_boundary.size()));
  }
  for (std::size_t i = 0; i < left_boundary.size(); ++i) {
    if (left_boundary[i]->system != right_boundary[i]->system) {
      throw CutError("boundary wire #" + std::to_string(i) + " has mismatched systems '" +
                     left_boundary[i]->system + "' vs '" + right_boundary[i]->system + "'");
    }
    merged_wires.push_back(
        Wire{left_boundary[i]->system, left_boundary[i]->source, right_boundary[i]->target});
  }

  std::vector<TestNode> merged_nodes = preparation.nodes();
  for (const auto& n : observation.nodes()) {
    if (preparation.has_node(n.id)) {
      throw CutError("node '" + n.id + "' appears in both halves");
    }
    merged_nodes.push_back(n);
  }

  SystemRegistry merged_systems = preparation.systems();
  for (const auto& label : observation.systems().labels()) {
    if (!merged_systems.has(label)) {
      merged_systems.add(label, observation.systems().get(label).descriptor);
    }
  }

  return Circuit(std::move(merged_systems), std::move(merged_nodes), std::move(merged_wires),
                 /*closed=*/true);
}

}  // namespace optcirc
