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


#include "orthocompact/flow.h"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "orthocompact/errors.h"

namespace orthocompact {

int FlowNetwork::AddNode(FlowQuantity b) {
  demand.push_back(b);
  return num_nodes() - 1;
}

int FlowNetwork::AddArc(int tail, int head, FlowQuantity lower,
                        FlowQuantity upper, CostValue cost) {
  arcs.push_back({tail, head, lower, upper, cost});
  return num_arcs() - 1;
}

CostValue FlowCost(const FlowNetwork& net,
                   std::span<const FlowQuantity> arc_flow) {
  CostValue cost = 0;
  for (int a = 0; a < net.num_arcs(); ++a) {
    cost += arc_flow[a] * net.arcs[a].cost;
  }
  return cost;
}

namespace {

void CheckWellFormed(const FlowNetwork& net) {
  FlowQuantity sum = 0;
  for (FlowQuantity b : net.demand) sum += b;
  if (sum != 0) throw std::invalid_argument("demands do not sum to zero");
  for (const FlowArc& arc : net.arcs) {
    if (arc.tail < 0 || arc.tail >= net.num_nodes() || arc.head < 0 ||
        arc.head >= net.num_nodes()) {
      throw std::invalid_argument("arc endpoint out of range");
    }
    if (arc.lower < 0 || arc.lower > arc.upper) {
      throw std::invalid_argument("arc bounds out of order");
    }
    if (arc.cost < 0) throw std::invalid_argument("negative arc cost");
  }
}

// Residual graph with paired forward/backward entries (2i, 2i + 1).
class Residual {
 public:
  explicit Residual(int num_nodes) : adjacency_(num_nodes) {}

  int AddEdge(int from, int to, FlowQuantity capacity, CostValue cost) {
    const int id = static_cast<int>(to_.size());
    to_.push_back(to);
    capacity_.push_back(capacity);
    cost_.push_back(cost);
    adjacency_[from].push_back(id);
    to_.push_back(from);
    capacity_.push_back(0);
    cost_.push_back(-cost);
    adjacency_[to].push_back(id + 1);
    return id;
  }

  int num_nodes() const { return static_cast<int>(adjacency_.size()); }
  FlowQuantity flow(int edge) const { return capacity_[edge ^ 1]; }

  // Sends up to `amount` units from `source` to `sink` along shortest
  // paths. Returns the amount sent.
  FlowQuantity Run(int source, int sink, FlowQuantity amount) {
    const int n = num_nodes();
    constexpr CostValue kInf = std::numeric_limits<CostValue>::max() / 4;
    std::vector<CostValue> potential(n, 0);
    std::vector<CostValue> dist(n);
    std::vector<int> parent_edge(n);
    FlowQuantity sent = 0;
    while (sent < amount) {
      std::fill(dist.begin(), dist.end(), kInf);
      std::fill(parent_edge.begin(), parent_edge.end(), -1);
      dist[source] = 0;
      using Entry = std::pair<CostValue, int>;
      std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
      queue.push({0, source});
      while (!queue.empty()) {
        const auto [d, u] = queue.top();
        queue.pop();
        if (d != dist[u]) continue;
        for (int e : adjacency_[u]) {
          if (capacity_[e] == 0) continue;
          const int v = to_[e];
          const CostValue nd = d + cost_[e] + potential[u] - potential[v];
          if (nd < dist[v]) {
            dist[v] = nd;
            parent_edge[v] = e;
            queue.push({nd, v});
          }
        }
      }
      if (dist[sink] == kInf) break;
      for (int v = 0; v < n; ++v) {
        if (dist[v] < kInf) potential[v] += dist[v];
      }
      FlowQuantity push = amount - sent;
      for (int v = sink; v != source; v = to_[parent_edge[v] ^ 1]) {
        push = std::min(push, capacity_[parent_edge[v]]);
      }
      for (int v = sink; v != source; v = to_[parent_edge[v] ^ 1]) {
        capacity_[parent_edge[v]] -= push;
        capacity_[parent_edge[v] ^ 1] += push;
      }
      sent += push;
    }
    return sent;
  }

 private:
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> to_;
  std::vector<FlowQuantity> capacity_;
  std::vector<CostValue> cost_;
};

}  // namespace

Flow SolveMinCost(const FlowNetwork& net,
                  std::span<const FlowQuantity> hint) {
  CheckWellFormed(net);
  const int n = net.num_nodes();

  // No optimal flow needs more than this on any arc above its lower bound.
  FlowQuantity cap = 0;
  for (int a = 0; a < net.num_arcs(); ++a) {
    FlowQuantity base = net.arcs[a].lower;
    if (a < static_cast<int>(hint.size())) base = std::max(base, hint[a]);
    cap += base;
  }
  for (FlowQuantity b : net.demand) cap += b < 0 ? -b : b;

  std::vector<FlowQuantity> excess(net.demand);
  for (const FlowArc& arc : net.arcs) {
    excess[arc.tail] -= arc.lower;
    excess[arc.head] += arc.lower;
  }
  const int source = n, sink = n + 1;
  Residual residual(n + 2);
  std::vector<int> arc_edge(net.num_arcs());
  for (int a = 0; a < net.num_arcs(); ++a) {
    const FlowArc& arc = net.arcs[a];
    const FlowQuantity room =
        arc.upper == kUnbounded ? cap : arc.upper - arc.lower;
    arc_edge[a] = residual.AddEdge(arc.tail, arc.head, room, arc.cost);
  }
  FlowQuantity supply = 0;
  for (int k = 0; k < n; ++k) {
    if (excess[k] > 0) {
      residual.AddEdge(source, k, excess[k], 0);
      supply += excess[k];
    } else if (excess[k] < 0) {
      residual.AddEdge(k, sink, -excess[k], 0);
    }
  }
  if (residual.Run(source, sink, supply) != supply) {
    throw InfeasibleError("no flow satisfies the bounds and demands");
  }
  Flow flow;
  flow.arc_flow.resize(net.num_arcs());
  for (int a = 0; a < net.num_arcs(); ++a) {
    flow.arc_flow[a] = net.arcs[a].lower + residual.flow(arc_edge[a]);
  }
  flow.total_cost = FlowCost(net, flow.arc_flow);
  return flow;
}

bool CheckFlow(const FlowNetwork& net, const Flow& flow) {
  if (static_cast<int>(flow.arc_flow.size()) != net.num_arcs()) return false;
  std::vector<FlowQuantity> balance(net.num_nodes(), 0);
  for (int a = 0; a < net.num_arcs(); ++a) {
    const FlowArc& arc = net.arcs[a];
    const FlowQuantity x = flow.arc_flow[a];
    if (x < arc.lower || x > arc.upper) return false;
    balance[arc.tail] += x;
    balance[arc.head] -= x;
  }
  if (balance != net.demand) return false;
  return FlowCost(net, flow.arc_flow) == flow.total_cost;
}

bool CertifyOptimal(const FlowNetwork& net, const Flow& flow) {
  struct Edge {
    int from, to;
    CostValue cost;
  };
  std::vector<Edge> edges;
  for (int a = 0; a < net.num_arcs(); ++a) {
    const FlowArc& arc = net.arcs[a];
    const FlowQuantity x = flow.arc_flow[a];
    if (x < arc.upper) edges.push_back({arc.tail, arc.head, arc.cost});
    if (x > arc.lower) edges.push_back({arc.head, arc.tail, -arc.cost});
  }
  // Bellman-Ford from a virtual root joined to every node at distance 0.
  std::vector<CostValue> dist(net.num_nodes(), 0);
  for (int round = 0; round <= net.num_nodes(); ++round) {
    bool changed = false;
    for (const Edge& e : edges) {
      if (dist[e.from] + e.cost < dist[e.to]) {
        dist[e.to] = dist[e.from] + e.cost;
        changed = true;
      }
    }
    if (!changed) return true;
  }
  return false;
}

std::string DumpNetwork(const FlowNetwork& net) {
  std::ostringstream out;
  for (int k = 0; k < net.num_nodes(); ++k) {
    out << "N " << k << ' ' << net.demand[k] << '\n';
  }
  for (const FlowArc& arc : net.arcs) {
    out << "A " << arc.tail << ' ' << arc.head << ' ' << arc.lower << ' ';
    if (arc.upper == kUnbounded) {
      out << "inf";
    } else {
      out << arc.upper;
    }
    out << ' ' << arc.cost << '\n';
  }
  return out.str();
}

FlowNetwork ParseNetwork(std::string_view text) {
  FlowNetwork net;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || tag[0] == '#') continue;
    if (tag == "N") {
      int id;
      FlowQuantity b;
      if (!(fields >> id >> b)) throw ParseError(line_number, 1, "bad node");
      if (id != net.num_nodes()) {
        throw ParseError(line_number, 1, "node ids must be consecutive");
      }
      net.AddNode(b);
    } else if (tag == "A") {
      FlowArc arc;
      std::string upper;
      if (!(fields >> arc.tail >> arc.head >> arc.lower >> upper >>
            arc.cost)) {
        throw ParseError(line_number, 1, "bad arc");
      }
      if (upper == "inf") {
        arc.upper = kUnbounded;
      } else {
        try {
          arc.upper = std::stoll(upper);
        } catch (const std::exception&) {
          throw ParseError(line_number, 1, "bad upper bound '" + upper + "'");
        }
      }
      net.arcs.push_back(arc);
    } else {
      throw ParseError(line_number, 1, "unknown record '" + tag + "'");
    }
  }
  return net;
}

}  // namespace orthocompact
