#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qnetcap/capacity.hpp"
#include "qnetcap/freespace.hpp"

namespace qnetcap {

struct Node {
    std::string id;
    std::string community;   // empty for unlabeled / backbone-only nodes
    bool backbone = false;
};

// One undirected edge.  Parallel edges are kept distinct: their capacities
// sum under flooding and compete under single-path routing.
struct Edge {
    std::string u, v;
    std::optional<double> capacity;    // bits per channel use; may be unset
                                       // until stamped from the channel
    CapacityKind kind = CapacityKind::ExactAchievable;
    std::optional<ChannelModel> channel;
    nlohmann::json channel_spec;       // original JSON spec when loaded
};

// Undirected capacitated multigraph over string node ids.  Immutable once
// built; all analyses below are read-only.
class Network {
public:
    // Registering an existing id with identical labels is a no-op; with
    // different labels it is a ConfigError.  Returns the node index.
    int add_node(const std::string& id, const std::string& community = "",
                 bool backbone = false);
    // Endpoints must already exist; self-loops are a ConfigError and the
    // capacity must be finite and >= 0.  Returns the edge index.
    int add_edge(const std::string& u, const std::string& v, double capacity,
                 CapacityKind kind = CapacityKind::ExactAchievable);
    int add_channel_edge(const std::string& u, const std::string& v,
                         ChannelModel channel,
                         nlohmann::json spec = nlohmann::json());
    int add_pending_edge(const std::string& u, const std::string& v,
                         nlohmann::json spec);

    bool has_node(const std::string& id) const;
    int node_index(const std::string& id) const;   // UnknownNodeError

    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& incident_edges(int node) const;

    // Stamped capacity of an edge; ConfigError when still unset.
    double edge_capacity(int edge) const;

private:
    friend Network capacities_from_channels(const Network& net);

    void check_endpoints(const std::string& u, const std::string& v,
                         int& iu, int& iv);

    std::vector<Node> nodes_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incidence_;
    std::vector<std::pair<std::string, int>> index_;   // sorted id -> node
};

// A bipartition of the nodes witnessing a network capacity.  Node ids in
// each side and the crossing edge list are sorted, so witnesses compare
// reproducibly.
struct Cut {
    std::vector<std::string> a_side;       // contains alpha
    std::vector<std::string> b_side;       // contains beta
    std::vector<int> cut_edges;            // indices into Network::edges()
    double multi_edge_capacity = 0.0;      // sum over the cut-set
    double single_edge_capacity = 0.0;     // max over the cut-set
};

struct PathResult {
    double value = 0.0;                    // maximin bottleneck, bits/use
    CapacityKind kind = CapacityKind::ExactAchievable;
    std::vector<std::string> route;        // alpha..beta; empty if none
};

struct FlowResult {
    double value = 0.0;                    // max-flow = min-cut, bits/use
    CapacityKind kind = CapacityKind::ExactAchievable;
    Cut min_cut;
};

enum class CutMode { Single, Multi };

// Widest-path (maximin bottleneck) end-to-end capacity with a witnessing
// route.  A disconnected pair yields value 0 and an empty route.
PathResult single_path_capacity(const Network& net, const std::string& alpha,
                                const std::string& beta);

// Multi-path end-to-end capacity: max-flow with a witnessing minimum cut
// (the residual-reachable source side, which is the unique inclusion-minimal
// minimum cut, so witnesses are deterministic).  A disconnected pair yields
// value 0 and the trivial cut around alpha's component.  The result kind
// degrades to TightUpperBound when any edge capacity is itself only an
// upper bound.
FlowResult flooding_capacity(const Network& net, const std::string& alpha,
                             const std::string& beta);

// Exhaustive minimum cut over all bipartitions with alpha in A, beta in B.
// Mode selects the objective: Multi minimizes the capacity sum, Single the
// maximum single-edge capacity.  Ties prefer the lexicographically smallest
// A-side.  Guarded to <= 20 nodes (DomainError beyond).
Cut brute_force_min_cut(const Network& net, const std::string& alpha,
                        const std::string& beta, CutMode mode);

// Evaluate every pending channel edge and stamp its capacity and kind.
// Errors from channel evaluation gain "edge u-v:" context.
Network capacities_from_channels(const Network& net);

// JSON network format:
//   {"nodes":[{"id":..., "community":..., "backbone":bool}],
//    "edges":[{"u":..., "v":..., "capacity":...} | {"u","v","channel":{...}}]}
// Integer ids are canonicalized to their decimal strings.  Unknown keys are
// a ConfigError; edge endpoints must be declared nodes.
Network network_from_json(const nlohmann::json& j);
nlohmann::json network_to_json(const Network& net);

} // namespace qnetcap
