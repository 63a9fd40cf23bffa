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

#include "secroute/routing.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace secroute {

LinkGraph::LinkGraph(PointSet nodes, double max_range)
    : nodes_(std::move(nodes)), max_range_(max_range), adj_(nodes_.size())
{
    if (!(max_range > 0) || std::isnan(max_range)) {
        throw std::invalid_argument("max_range must be positive");
    }
    for (NodeId u = 0; u < nodes_.size(); ++u) {
        for (NodeId v = 0; v < nodes_.size(); ++v) {
            if (u == v) {
                continue;
            }
            const double w = distance(nodes_[u], nodes_[v]);
            if (w > 0 && w <= max_range) {
                adj_[u].push_back({v, w});
            }
        }
    }
}

std::span<const Edge> LinkGraph::neighbors(NodeId u) const
{
    return adj_.at(u);
}

std::size_t LinkGraph::edge_count() const noexcept
{
    std::size_t n = 0;
    for (const auto& list : adj_) {
        n += list.size();
    }
    return n / 2;
}

std::optional<double> LinkGraph::weight(NodeId u, NodeId v) const
{
    for (const auto& e : adj_.at(u)) {
        if (e.to == v) {
            return e.weight;
        }
    }
    return std::nullopt;
}

bool LinkGraph::connected() const
{
    if (nodes_.empty()) {
        return true;
    }
    std::vector<bool> seen(size(), false);
    std::vector<NodeId> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        const NodeId u = stack.back();
        stack.pop_back();
        for (const auto& e : adj_[u]) {
            if (!seen[e.to]) {
                seen[e.to] = true;
                ++count;
                stack.push_back(e.to);
            }
        }
    }
    return count == size();
}

LinkGraph build_graph(const Scenario& scenario, double max_range)
{
    return LinkGraph(scenario.legit_nodes, max_range);
}

std::optional<ShortestPath> shortest_path(const LinkGraph& graph, NodeId src, NodeId dst)
{
    const std::size_t n = graph.size();
    if (src >= n || dst >= n) {
        throw std::invalid_argument("node id out of range");
    }
    if (src == dst) {
        throw std::invalid_argument("source and destination coincide");
    }
    constexpr double inf = std::numeric_limits<double>::infinity();
    constexpr NodeId none = std::numeric_limits<NodeId>::max();

    // Each node's advertised distance to dst and its chosen next hop.
    std::vector<double> dist(n, inf), fresh(n, inf);
    std::vector<NodeId> next(n, none);
    dist[dst] = 0;
    fresh[dst] = 0;

    std::size_t changed_rounds = 0;
    // |V| - 1 rounds reach the fixed point; one more confirms it and settles
    // every next hop against the final estimates.
    for (std::size_t round = 0; round < n; ++round) {
        bool changed = false;
        for (NodeId v = 0; v < n; ++v) {
            if (v == dst) {
                continue;
            }
            double best = inf;
            NodeId via = none;
            for (const auto& e : graph.neighbors(v)) { // ascending id: first wins ties
                const double cand = e.weight + dist[e.to];
                if (cand < best) {
                    best = cand;
                    via = e.to;
                }
            }
            fresh[v] = best;
            next[v] = via;
            changed = changed || best != dist[v];
        }
        dist.swap(fresh);
        if (!changed) {
            break;
        }
        ++changed_rounds;
    }

    if (dist[src] == inf) {
        return std::nullopt;
    }
    ShortestPath path{{src}, 0.0, changed_rounds};
    for (NodeId v = src; v != dst;) {
        const NodeId u = next[v];
        path.length += *graph.weight(v, u);
        path.nodes.push_back(u);
        v = u;
    }
    return path;
}

Endpoints default_endpoints(const Scenario& scenario)
{
    const auto& nodes = scenario.legit_nodes;
    if (nodes.size() < 2) {
        throw std::invalid_argument("routing needs at least two legitimate nodes");
    }
    const Point lower_left{0.0, 0.0};
    const Point upper_right{scenario.region.width(), scenario.region.height()};
    Endpoints ends{0, 0};
    for (NodeId i = 1; i < nodes.size(); ++i) {
        if (squared_distance(nodes[i], lower_left) <
            squared_distance(nodes[ends.source], lower_left)) {
            ends.source = i;
        }
        if (squared_distance(nodes[i], upper_right) <
            squared_distance(nodes[ends.destination], upper_right)) {
            ends.destination = i;
        }
    }
    if (ends.source == ends.destination) {
        throw std::invalid_argument("the same node is closest to both corners");
    }
    return ends;
}

namespace {

template <typename Solve>
std::optional<RouteResult> route(const Scenario& scenario, double max_range,
                                 std::optional<Endpoints> endpoints, Solve&& solve)
{
    const LinkGraph graph = build_graph(scenario, max_range);
    const Endpoints ends = endpoints ? *endpoints : default_endpoints(scenario);
    auto sp = shortest_path(graph, ends.source, ends.destination);
    if (!sp) {
        return std::nullopt;
    }
    std::vector<double> hops;
    for (std::size_t i = 0; i + 1 < sp->nodes.size(); ++i) {
        hops.push_back(*graph.weight(sp->nodes[i], sp->nodes[i + 1]));
    }
    PowerAllocation alloc = solve(PathSpec::from_distances(hops));
    const double achieved = alloc.achieved_objective();
    return RouteResult{std::move(sp->nodes), std::move(hops), sp->length, std::move(alloc),
                       achieved};
}

} // namespace

std::optional<RouteResult> route_so_cop(const Scenario& scenario, double max_range,
                                        const SystemParams& params, double beta_so,
                                        std::optional<Endpoints> endpoints)
{
    return route(scenario, max_range, endpoints,
                 [&](const PathSpec& path) { return solve_so_cop(path, params, beta_so); });
}

std::optional<RouteResult> route_qo_sop(const Scenario& scenario, double max_range,
                                        const SystemParams& params, double beta_co,
                                        std::optional<Endpoints> endpoints)
{
    return route(scenario, max_range, endpoints,
                 [&](const PathSpec& path) { return solve_qo_sop(path, params, beta_co); });
}

} // namespace secroute
