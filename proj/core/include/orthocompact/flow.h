// Copyright 2026 The orthocompact Authors
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

// Integer minimum-cost flow with arc lower bounds.
//
// Node demands follow the convention outflow(k) - inflow(k) = demand(k), so a
// circulation has all demands zero. Costs must be non-negative.

#ifndef ORTHOCOMPACT_FLOW_H_
#define ORTHOCOMPACT_FLOW_H_

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orthocompact {

using FlowQuantity = int64_t;
using CostValue = int64_t;

inline constexpr FlowQuantity kUnbounded =
    std::numeric_limits<FlowQuantity>::max();

struct FlowArc {
  int tail = 0;
  int head = 0;
  FlowQuantity lower = 0;
  FlowQuantity upper = kUnbounded;
  CostValue cost = 0;

  friend bool operator==(const FlowArc&, const FlowArc&) = default;
};

struct FlowNetwork {
  std::vector<FlowQuantity> demand;
  std::vector<FlowArc> arcs;

  int num_nodes() const { return static_cast<int>(demand.size()); }
  int num_arcs() const { return static_cast<int>(arcs.size()); }
  int AddNode(FlowQuantity b = 0);
  int AddArc(int tail, int head, FlowQuantity lower, FlowQuantity upper,
             CostValue cost);

  friend bool operator==(const FlowNetwork&, const FlowNetwork&) = default;
};

struct Flow {
  std::vector<FlowQuantity> arc_flow;
  CostValue total_cost = 0;

  friend bool operator==(const Flow&, const Flow&) = default;
};

// Successive shortest paths with potentials after removing lower bounds.
// `hint`, if given, is a known feasible flow; it only enlarges the finite
// stand-in used for unbounded capacities. Throws InfeasibleError when no
// feasible flow exists and std::invalid_argument on malformed input
// (negative cost, lower > upper, demands not summing to zero).
Flow SolveMinCost(const FlowNetwork& net,
                  std::span<const FlowQuantity> hint = {});

// True iff bounds and conservation hold exactly and total_cost matches.
bool CheckFlow(const FlowNetwork& net, const Flow& flow);

// True iff the residual network of `flow` has no negative-cost cycle.
// Expects CheckFlow(net, flow).
bool CertifyOptimal(const FlowNetwork& net, const Flow& flow);

CostValue FlowCost(const FlowNetwork& net,
                   std::span<const FlowQuantity> arc_flow);

// Line format: "N <id> <b>" per node in id order, then
// "A <tail> <head> <l> <u|inf> <c>" per arc.
std::string DumpNetwork(const FlowNetwork& net);
// Throws ParseError.
FlowNetwork ParseNetwork(std::string_view text);

}  // namespace orthocompact

#endif  // ORTHOCOMPACT_FLOW_H_
