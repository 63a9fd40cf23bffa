/*
   Copyright 2026 The secroute Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "secroute/geometry.hpp"
#include "secroute/params.hpp"
#include "secroute/tradeoff.hpp"

namespace secroute {

using NodeId = std::size_t;

struct Edge {
    NodeId to;
    double weight;
};

/// Undirected geometric graph: nodes u != v are joined when
/// 0 < |u - v| <= max_range, weighted by the exact Euclidean distance.
class LinkGraph {
public:
    LinkGraph(PointSet nodes, double max_range);

    std::size_t size() const noexcept { return nodes_.size(); }
    const PointSet& nodes() const noexcept { return nodes_; }
    double max_range() const noexcept { return max_range_; }
    /// Neighbours of `u` in ascending id order.
    std::span<const Edge> neighbors(NodeId u) const;
    std::size_t edge_count() const noexcept;
    std::optional<double> weight(NodeId u, NodeId v) const;
    bool connected() const;

private:
    PointSet nodes_;
    double max_range_;
    std::vector<std::vector<Edge>> adj_;
};

/// Graph over the legitimate nodes of `scenario`. Throws
/// std::invalid_argument unless max_range > 0.
LinkGraph build_graph(const Scenario& scenario, double max_range);

struct ShortestPath {
    std::vector<NodeId> nodes; ///< source first, destination last
    double length;             ///< hop weights summed from the source
    std::size_t rounds;        ///< relaxation rounds that changed some estimate
};

/// Minimum-length path by synchronous distance-vector relaxation towards
/// `dst`: each round every node recomputes its estimate from its
/// neighbours' previous estimates only. Among equal-length paths the
/// lexicographically smallest node sequence wins. Returns nullopt when dst
/// is unreachable. Throws std::invalid_argument if src == dst or an id is
/// out of range.
std::optional<ShortestPath> shortest_path(const LinkGraph& graph, NodeId src, NodeId dst);

/// Legitimate node closest to the lower-left (0, 0) corner and the one
/// closest to the upper-right corner; ties go to the smaller id.
struct Endpoints {
    NodeId source;
    NodeId destination;
};
Endpoints default_endpoints(const Scenario& scenario);

struct RouteResult {
    std::vector<NodeId> nodes;
    std::vector<double> hop_distances;
    double total_length;
    PowerAllocation allocation;
    /// The minimised outage of the chosen path (COP for so-cop, SOP for
    /// qo-sop).
    double achieved;
};

/// Shortest path, then the secrecy-constrained allocation on its hops.
/// Default endpoints unless overridden. nullopt when unreachable.
std::optional<RouteResult> route_so_cop(const Scenario& scenario, double max_range,
                                        const SystemParams& params, double beta_so,
                                        std::optional<Endpoints> endpoints = std::nullopt);

/// Shortest path, then the connection-constrained allocation on its hops.
std::optional<RouteResult> route_qo_sop(const Scenario& scenario, double max_range,
                                        const SystemParams& params, double beta_co,
                                        std::optional<Endpoints> endpoints = std::nullopt);

} // namespace secroute
