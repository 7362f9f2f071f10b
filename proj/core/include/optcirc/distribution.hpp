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

#include <set>
#include <string>
#include <vector>

#include "optcirc/common.hpp"

namespace optcirc {

/// The joint outcome distribution of a closed circuit: one axis per test
/// node (in topological order), a dense probability table indexed row-major
/// by outcome tuples.
class JointDistribution {
 public:
  struct Axis {
    std::string node;
    int outcomes = 1;
  };

  explicit JointDistribution(std::vector<Axis> axes);

  const std::vector<Axis>& axes() const { return axes_; }
  std::size_t size() const { return probs_.size(); }

  double& at(const std::vector<int>& outcome);
  double at(const std::vector<int>& outcome) const;

  double prob_at_flat(std::size_t flat) const { return probs_[flat]; }
  double& prob_at_flat(std::size_t flat) { return probs_[flat]; }

  // Outcome tuple for a flat row-major index.
  std::vector<int> tuple_at_flat(std::size_t flat) const;

  double total_mass() const;

  // Sums out every axis not in `keep`; axes keep their relative order.
  // Throws Error when `keep` names an unknown node.
  JointDistribution marginal(const std::set<std::string>& keep) const;

  // Largest absolute entrywise difference; axes must agree.
  static double max_deviation(const JointDistribution& a, const JointDistribution& b);

 private:
  std::size_t flat_index(const std::vector<int>& outcome) const;

  std::vector<Axis> axes_;
  std::vector<double> probs_;
};

}  // namespace optcirc
