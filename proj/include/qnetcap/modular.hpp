#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "qnetcap/network.hpp"

namespace qnetcap {

// A network partitioned into community sub-networks and a backbone, with
// intercommunity edges bridging them.  Nodes carry their community label or
// the backbone flag; direct community-to-community links are rejected, as is
// any node that belongs to neither side.
class ModularNetwork {
public:
    explicit ModularNetwork(Network base);

    const Network& base() const { return base_; }
    const std::vector<std::string>& communities() const { return labels_; }
    const std::vector<std::string>& backbone_nodes() const { return backbone_; }
    const std::vector<int>& backbone_edges() const { return backbone_edges_; }

    const std::vector<std::string>& community_nodes(const std::string& c) const;
    const std::vector<int>& community_edges(const std::string& c) const;
    const std::vector<int>& intercommunity_edges(const std::string& c) const;
    // Backbone nodes touched by the community's intercommunity edges.
    const std::vector<std::string>& backbone_gateways(
        const std::string& c) const;
    // Community nodes with a direct backbone connection.
    const std::vector<std::string>& community_gateways(
        const std::string& c) const;

    // Community label of a node; empty for backbone nodes.
    const std::string& community_of(const std::string& node) const;

private:
    struct CommunityData {
        std::vector<std::string> nodes;
        std::vector<int> edges;
        std::vector<int> inter_edges;
        std::vector<std::string> backbone_gateways;
        std::vector<std::string> community_gateways;
    };
    const CommunityData& data(const std::string& c) const;

    Network base_;
    std::vector<std::string> labels_;
    std::vector<std::string> backbone_;
    std::vector<int> backbone_edges_;
    std::map<std::string, CommunityData> per_community_;
};

// Induced sub-networks (capacities preserved, labels dropped).
Network backbone_subgraph(const ModularNetwork& mod);
Network community_subgraph(const ModularNetwork& mod, const std::string& c);

// Star-shaped quotient: one node per community around a central "backbone"
// node, each star edge carrying the summed intercommunity capacity.
Network quotient_graph(const ModularNetwork& mod);

// Community-isolation capacity: the smaller of the two end-user communities'
// total intercommunity capacity.  Both users must be community members, and
// in different communities.
double global_community_capacity(const ModularNetwork& mod,
                                 const std::string& alpha,
                                 const std::string& beta);

// Cheapest cut restricted to the user's community, augmented with the user's
// direct backbone edges when present.
double local_community_capacity(const ModularNetwork& mod,
                                const std::string& user);

// Minimum cut-set size isolating the target nodes on a k-regular network:
// k|I| minus the shared-edge and shared-neighbor corrections.  The closed
// form presumes targets sparse enough for independent per-node absorption
// decisions; h_min_oracle is authoritative where they disagree.
long long h_min(int k, const std::vector<std::string>& targets,
                const Network& net);

// Exhaustive reference: unit-capacity max-flow from the targets to every
// node at graph distance >= 2 from them (adjacent nodes may be absorbed
// into the isolated side).  Requires at least one such distant node.
long long h_min_oracle(const std::vector<std::string>& targets,
                       const Network& net);

// Global edge connectivity: minimum unit-capacity cut over all node pairs.
long long edge_connectivity(const Network& net);

struct IdealModularSpec {
    int k_b = 0;                                 // backbone regularity
    std::map<std::string, int> k_c;              // community connectivity
    std::map<std::string, int> k_cb;             // intercommunity edge counts
};

struct IdealReport {
    bool ok = false;
    int backbone_degree = -1;                    // -1 when irregular
    std::map<std::string, long long> connectivity;
    std::map<std::string, long long> intercommunity_counts;
    std::vector<std::string> findings;
};

// Check the declared regularity/connectivity numbers against the graph.
IdealReport verify_ideal(const ModularNetwork& mod,
                         const IdealModularSpec& spec);

struct ThresholdResult {
    double global_capacity = 0.0;                // community-isolation value
    std::map<std::string, double> c_min_community;   // end-user communities
    double c_min_backbone = 0.0;
    long long h_min_star = 0;
    bool communities_ok = false;
    bool backbone_ok = false;
    bool satisfied = false;
    std::vector<std::string> notes;              // closed-form discrepancies
};

// Threshold capacities under which the flooding capacity collapses to the
// global-community capacity, plus the predicate evaluation on the given
// network.  The declared spec is re-verified first.  Isolation sizes are
// certified against h_min_oracle; if the closed form disagrees, the
// certified value is used and the discrepancy is recorded in notes.
ThresholdResult threshold_capacities(const ModularNetwork& mod,
                                    const IdealModularSpec& spec,
                                    const std::string& alpha,
                                    const std::string& beta);

// Generators.  Node ids are prefix + index (tori use "r.c" coordinates).
Network make_torus(int rows, int cols, double capacity,
                   const std::string& prefix = "t", bool backbone = false);
Network make_open_grid(int rows, int cols, double capacity,
                       const std::string& prefix = "g");
Network make_complete(int n, double capacity,
                      const std::string& prefix = "k");
Network make_cycle(int n, double capacity, const std::string& prefix = "c");
Network make_circulant(int n, const std::vector<int>& offsets,
                       double capacity, const std::string& prefix = "u");

struct RandomModular {
    Network base;
    IdealModularSpec spec;
    std::string alpha;
    std::string beta;
};

// Random ideal modular instance: a 4-regular torus backbone (9-25 nodes),
// 2-4 communities (complete or cycle topology, 4-8 nodes) attached through
// 1-2 mutually non-adjacent backbone gateways each (single gateways when a
// torus dimension is 3), intercommunity capacities drawn in [0.5, 2] and
// equalized across a community's two gateways, and community/backbone
// capacities set a safety margin above the thresholds.  The equal split
// keeps every mixed cut (one gateway's links plus the other gateway's
// backbone isolation) at or above the community-isolation value.
RandomModular random_ideal_modular(std::mt19937& rng);

} // namespace qnetcap
