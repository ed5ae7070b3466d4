#include "qnetcap/modular.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "qnetcap/errors.hpp"

namespace qnetcap {

namespace {

std::string unique_id(const Network& net, std::string candidate) {
    while (net.has_node(candidate)) candidate += "#";
    return candidate;
}

struct TargetIndex {
    std::vector<int> nodes;
    std::vector<char> is_target;
};

TargetIndex index_targets(const Network& net,
                          const std::vector<std::string>& targets) {
    if (targets.empty())
        throw DomainError("target distribution must not be empty");
    TargetIndex ti;
    ti.is_target.assign(net.nodes().size(), 0);
    for (const auto& id : targets) {
        const int v = net.node_index(id);
        if (ti.is_target[v])
            throw DomainError("duplicate target node \"" + id + "\"");
        ti.is_target[v] = 1;
        ti.nodes.push_back(v);
    }
    return ti;
}

} // namespace

ModularNetwork::ModularNetwork(Network base) : base_(std::move(base)) {
    for (const Node& n : base_.nodes()) {
        const bool in_community = !n.community.empty();
        if (n.backbone && in_community)
            throw ConfigError("node \"" + n.id +
                              "\" is labeled both backbone and community");
        if (!n.backbone && !in_community)
            throw ConfigError("node \"" + n.id +
                              "\" belongs to neither the backbone nor a "
                              "community");
        if (n.backbone)
            backbone_.push_back(n.id);
        else
            per_community_[n.community].nodes.push_back(n.id);
    }
    for (const auto& [label, data] : per_community_) labels_.push_back(label);

    for (size_t e = 0; e < base_.edges().size(); ++e) {
        const Edge& edge = base_.edges()[e];
        const std::string& cu = community_of(edge.u);
        const std::string& cv = community_of(edge.v);
        if (cu.empty() && cv.empty()) {
            backbone_edges_.push_back(static_cast<int>(e));
        } else if (cu == cv) {
            per_community_[cu].edges.push_back(static_cast<int>(e));
        } else if (cu.empty() || cv.empty()) {
            const std::string& label = cu.empty() ? cv : cu;
            CommunityData& d = per_community_[label];
            d.inter_edges.push_back(static_cast<int>(e));
            d.backbone_gateways.push_back(cu.empty() ? edge.u : edge.v);
            d.community_gateways.push_back(cu.empty() ? edge.v : edge.u);
        } else {
            throw ConfigError("direct community-community edge " + edge.u +
                              "-" + edge.v + " between \"" + cu + "\" and \"" +
                              cv + "\"");
        }
    }
    for (auto& [label, d] : per_community_) {
        auto dedupe = [](std::vector<std::string>& v) {
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
        };
        dedupe(d.backbone_gateways);
        dedupe(d.community_gateways);
    }
}

const ModularNetwork::CommunityData& ModularNetwork::data(
    const std::string& c) const {
    auto it = per_community_.find(c);
    if (it == per_community_.end())
        throw ConfigError("unknown community \"" + c + "\"");
    return it->second;
}

const std::vector<std::string>& ModularNetwork::community_nodes(
    const std::string& c) const {
    return data(c).nodes;
}
const std::vector<int>& ModularNetwork::community_edges(
    const std::string& c) const {
    return data(c).edges;
}
const std::vector<int>& ModularNetwork::intercommunity_edges(
    const std::string& c) const {
    return data(c).inter_edges;
}
const std::vector<std::string>& ModularNetwork::backbone_gateways(
    const std::string& c) const {
    return data(c).backbone_gateways;
}
const std::vector<std::string>& ModularNetwork::community_gateways(
    const std::string& c) const {
    return data(c).community_gateways;
}

const std::string& ModularNetwork::community_of(const std::string& node) const {
    return base_.nodes()[base_.node_index(node)].community;
}

Network backbone_subgraph(const ModularNetwork& mod) {
    Network sub;
    for (const auto& id : mod.backbone_nodes()) sub.add_node(id);
    for (const int e : mod.backbone_edges()) {
        const Edge& edge = mod.base().edges()[e];
        sub.add_edge(edge.u, edge.v, mod.base().edge_capacity(e), edge.kind);
    }
    return sub;
}

Network community_subgraph(const ModularNetwork& mod, const std::string& c) {
    Network sub;
    for (const auto& id : mod.community_nodes(c)) sub.add_node(id);
    for (const int e : mod.community_edges(c)) {
        const Edge& edge = mod.base().edges()[e];
        sub.add_edge(edge.u, edge.v, mod.base().edge_capacity(e), edge.kind);
    }
    return sub;
}

Network quotient_graph(const ModularNetwork& mod) {
    Network star;
    const std::string center = "backbone";
    for (const auto& label : mod.communities())
        if (label == center)
            throw ConfigError(
                "community label \"backbone\" collides with the quotient "
                "center node");
    star.add_node(center, "", true);
    for (const auto& label : mod.communities()) {
        star.add_node(label, label);
        double total = 0.0;
        CapacityKind kind = CapacityKind::ExactAchievable;
        for (const int e : mod.intercommunity_edges(label)) {
            total += mod.base().edge_capacity(e);
            if (mod.base().edges()[e].kind == CapacityKind::TightUpperBound)
                kind = CapacityKind::TightUpperBound;
        }
        star.add_edge(label, center, total, kind);
    }
    return star;
}

namespace {

const std::string& user_community(const ModularNetwork& mod,
                                  const std::string& user) {
    const std::string& c = mod.community_of(user);
    if (c.empty())
        throw DomainError("end user \"" + user +
                          "\" is on the backbone, not in a community");
    return c;
}

} // namespace

double global_community_capacity(const ModularNetwork& mod,
                                 const std::string& alpha,
                                 const std::string& beta) {
    const std::string& ca = user_community(mod, alpha);
    const std::string& cb = user_community(mod, beta);
    if (ca == cb)
        throw DomainError("end users are in the same community \"" + ca +
                          "\"; community isolation needs remote users");
    double best = std::numeric_limits<double>::infinity();
    for (const std::string* c : {&ca, &cb}) {
        double total = 0.0;
        for (const int e : mod.intercommunity_edges(*c))
            total += mod.base().edge_capacity(e);
        best = std::min(best, total);
    }
    return best;
}

double local_community_capacity(const ModularNetwork& mod,
                                const std::string& user) {
    const std::string& c = user_community(mod, user);

    double direct = 0.0;
    for (const int e : mod.intercommunity_edges(c)) {
        const Edge& edge = mod.base().edges()[e];
        if (edge.u == user || edge.v == user)
            direct += mod.base().edge_capacity(e);
    }

    std::vector<std::string> exits;
    for (const auto& g : mod.community_gateways(c))
        if (g != user) exits.push_back(g);
    if (exits.empty()) return direct;

    Network aux = community_subgraph(mod, c);
    double total = 0.0;
    for (const int e : mod.community_edges(c))
        total += mod.base().edge_capacity(e);
    const std::string sink = unique_id(aux, "__sink__");
    aux.add_node(sink);
    for (const auto& g : exits) aux.add_edge(g, sink, total + 1.0);
    return direct + flooding_capacity(aux, user, sink).value;
}

long long h_min(int k, const std::vector<std::string>& targets,
                const Network& net) {
    if (k < 1) throw DomainError("regularity must be positive");
    for (const Node& n : net.nodes()) {
        const int deg =
            static_cast<int>(net.incident_edges(net.node_index(n.id)).size());
        if (deg != k)
            throw DomainError("not " + std::to_string(k) +
                              "-regular: node \"" + n.id + "\" has degree " +
                              std::to_string(deg));
    }
    const TargetIndex ti = index_targets(net, targets);

    long long shared_edges = 0;
    std::vector<int> shares(net.nodes().size(), 0);
    for (const Edge& edge : net.edges()) {
        const int u = net.node_index(edge.u);
        const int v = net.node_index(edge.v);
        if (ti.is_target[u] && ti.is_target[v])
            shared_edges += 2;   // one redundant copy per endpoint
        else if (ti.is_target[u])
            ++shares[v];
        else if (ti.is_target[v])
            ++shares[u];
    }
    long long shared_neighbors = 0;
    for (size_t x = 0; x < shares.size(); ++x)
        if (!ti.is_target[x])
            shared_neighbors += std::max(0, 2 * shares[x] - k);

    return static_cast<long long>(k) *
               static_cast<long long>(ti.nodes.size()) -
           shared_edges - shared_neighbors;
}

long long h_min_oracle(const std::vector<std::string>& targets,
                       const Network& net) {
    const TargetIndex ti = index_targets(net, targets);

    std::vector<char> near(net.nodes().size(), 0);
    for (const int v : ti.nodes) {
        near[v] = 1;
        for (const int e : net.incident_edges(v)) {
            const Edge& edge = net.edges()[e];
            near[net.node_index(edge.u)] = 1;
            near[net.node_index(edge.v)] = 1;
        }
    }
    std::vector<std::string> far;
    for (size_t v = 0; v < near.size(); ++v)
        if (!near[v]) far.push_back(net.nodes()[v].id);
    if (far.empty())
        throw DomainError(
            "isolation oracle undefined: every node is a target or "
            "target-adjacent");

    Network aux;
    for (const Node& n : net.nodes()) aux.add_node(n.id);
    const std::string src = unique_id(aux, "__source__");
    aux.add_node(src);
    const std::string snk = unique_id(aux, "__sink__");
    aux.add_node(snk);
    const double big = static_cast<double>(net.edges().size()) + 1.0;
    for (const Edge& edge : net.edges()) aux.add_edge(edge.u, edge.v, 1.0);
    for (const auto& id : targets) aux.add_edge(src, id, big);
    for (const auto& id : far) aux.add_edge(id, snk, big);
    return std::llround(flooding_capacity(aux, src, snk).value);
}

long long edge_connectivity(const Network& net) {
    const size_t n = net.nodes().size();
    if (n < 2) return 0;
    Network unit;
    for (const Node& nd : net.nodes()) unit.add_node(nd.id);
    for (const Edge& e : net.edges()) unit.add_edge(e.u, e.v, 1.0);
    const std::string& pivot = unit.nodes()[0].id;
    double best = std::numeric_limits<double>::infinity();
    for (size_t v = 1; v < n; ++v) {
        best = std::min(best,
                        flooding_capacity(unit, pivot, unit.nodes()[v].id)
                            .value);
        if (best == 0.0) break;
    }
    return std::llround(best);
}

IdealReport verify_ideal(const ModularNetwork& mod,
                         const IdealModularSpec& spec) {
    IdealReport rep;

    std::vector<int> degree(mod.base().nodes().size(), 0);
    for (const int e : mod.backbone_edges()) {
        const Edge& edge = mod.base().edges()[e];
        ++degree[mod.base().node_index(edge.u)];
        ++degree[mod.base().node_index(edge.v)];
    }
    if (mod.backbone_nodes().empty()) {
        rep.findings.push_back("backbone is empty");
    } else {
        rep.backbone_degree =
            degree[mod.base().node_index(mod.backbone_nodes().front())];
        for (const auto& id : mod.backbone_nodes()) {
            const int d = degree[mod.base().node_index(id)];
            if (d != rep.backbone_degree) {
                rep.findings.push_back("backbone is irregular: node \"" + id +
                                       "\" has intra-backbone degree " +
                                       std::to_string(d));
                rep.backbone_degree = -1;
                break;
            }
        }
    }
    if (rep.backbone_degree != -1 && rep.backbone_degree != spec.k_b)
        rep.findings.push_back(
            "backbone degree " + std::to_string(rep.backbone_degree) +
            " does not match declared " + std::to_string(spec.k_b));

    for (const auto& label : mod.communities()) {
        const long long kc = edge_connectivity(community_subgraph(mod, label));
        rep.connectivity[label] = kc;
        rep.intercommunity_counts[label] =
            static_cast<long long>(mod.intercommunity_edges(label).size());
        auto it = spec.k_c.find(label);
        if (it == spec.k_c.end())
            rep.findings.push_back("community \"" + label +
                                   "\" missing from the declared spec");
        else if (it->second != kc)
            rep.findings.push_back(
                "community \"" + label + "\" is " + std::to_string(kc) +
                "-connected, declared " + std::to_string(it->second));
        auto ik = spec.k_cb.find(label);
        if (ik != spec.k_cb.end() &&
            ik->second != rep.intercommunity_counts[label])
            rep.findings.push_back(
                "community \"" + label + "\" has " +
                std::to_string(rep.intercommunity_counts[label]) +
                " intercommunity edges, declared " +
                std::to_string(ik->second));
    }
    for (const auto& [label, kc] : spec.k_c)
        if (!std::binary_search(mod.communities().begin(),
                                mod.communities().end(), label))
            rep.findings.push_back("declared community \"" + label +
                                   "\" not present in the network");

    rep.ok = rep.findings.empty();
    return rep;
}

ThresholdResult threshold_capacities(const ModularNetwork& mod,
                                    const IdealModularSpec& spec,
                                    const std::string& alpha,
                                    const std::string& beta) {
    const IdealReport rep = verify_ideal(mod, spec);
    if (!rep.ok) {
        std::ostringstream msg;
        msg << "spec mismatch:";
        for (const auto& f : rep.findings) msg << " " << f << ";";
        throw DomainError(msg.str());
    }

    ThresholdResult out;
    out.global_capacity = global_community_capacity(mod, alpha, beta);
    const std::string& ca = mod.community_of(alpha);
    const std::string& cb = mod.community_of(beta);

    const Network backbone = backbone_subgraph(mod);
    out.h_min_star = std::numeric_limits<long long>::max();
    for (const std::string* c : {&ca, &cb}) {
        const auto& gateways = mod.backbone_gateways(*c);
        if (gateways.empty())
            throw DomainError("community \"" + *c +
                              "\" has no intercommunity edges");
        const long long certified = h_min_oracle(gateways, backbone);
        const long long closed_form = h_min(spec.k_b, gateways, backbone);
        if (closed_form != certified)
            out.notes.push_back(
                "community \"" + *c + "\": closed-form isolation size " +
                std::to_string(closed_form) + " exceeds the certified " +
                std::to_string(certified) + "; using the certified value");
        out.h_min_star = std::min(out.h_min_star, certified);
    }
    if (out.h_min_star < 1)
        throw DomainError(
            "degenerate gateway layout: nonpositive isolation cut size");
    out.c_min_backbone =
        out.global_capacity / static_cast<double>(out.h_min_star);

    out.communities_ok = true;
    for (const std::string* c : {&ca, &cb}) {
        const long long kc = spec.k_c.at(*c);
        const double c_min =
            kc > 0 ? out.global_capacity / static_cast<double>(kc) : 0.0;
        out.c_min_community[*c] = c_min;
        for (const int e : mod.community_edges(*c))
            if (mod.base().edge_capacity(e) < c_min)
                out.communities_ok = false;
    }
    out.backbone_ok = true;
    for (const int e : mod.backbone_edges())
        if (mod.base().edge_capacity(e) < out.c_min_backbone)
            out.backbone_ok = false;
    out.satisfied = out.communities_ok && out.backbone_ok;
    return out;
}

Network make_torus(int rows, int cols, double capacity,
                   const std::string& prefix, bool backbone) {
    if (rows < 3 || cols < 3)
        throw ConfigError("torus needs at least 3 rows and 3 columns");
    Network net;
    auto id = [&](int r, int c) {
        return prefix + std::to_string(r) + "." + std::to_string(c);
    };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) net.add_node(id(r, c), "", backbone);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            net.add_edge(id(r, c), id(r, (c + 1) % cols), capacity);
            net.add_edge(id(r, c), id((r + 1) % rows, c), capacity);
        }
    return net;
}

Network make_open_grid(int rows, int cols, double capacity,
                       const std::string& prefix) {
    if (rows < 2 || cols < 2)
        throw ConfigError("grid needs at least 2 rows and 2 columns");
    Network net;
    auto id = [&](int r, int c) {
        return prefix + std::to_string(r) + "." + std::to_string(c);
    };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) net.add_node(id(r, c));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) net.add_edge(id(r, c), id(r, c + 1), capacity);
            if (r + 1 < rows) net.add_edge(id(r, c), id(r + 1, c), capacity);
        }
    return net;
}

Network make_complete(int n, double capacity, const std::string& prefix) {
    if (n < 2) throw ConfigError("complete graph needs at least 2 nodes");
    Network net;
    for (int i = 0; i < n; ++i) net.add_node(prefix + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            net.add_edge(prefix + std::to_string(i),
                         prefix + std::to_string(j), capacity);
    return net;
}

Network make_cycle(int n, double capacity, const std::string& prefix) {
    if (n < 3) throw ConfigError("cycle needs at least 3 nodes");
    Network net;
    for (int i = 0; i < n; ++i) net.add_node(prefix + std::to_string(i));
    for (int i = 0; i < n; ++i)
        net.add_edge(prefix + std::to_string(i),
                     prefix + std::to_string((i + 1) % n), capacity);
    return net;
}

Network make_circulant(int n, const std::vector<int>& offsets,
                       double capacity, const std::string& prefix) {
    if (n < 3) throw ConfigError("circulant needs at least 3 nodes");
    std::set<int> seen;
    for (const int d : offsets) {
        if (d < 1 || 2 * d > n)
            throw ConfigError("circulant offset " + std::to_string(d) +
                              " outside [1, n/2]");
        if (!seen.insert(d).second)
            throw ConfigError("duplicate circulant offset " +
                              std::to_string(d));
    }
    Network net;
    for (int i = 0; i < n; ++i) net.add_node(prefix + std::to_string(i));
    for (const int d : offsets) {
        const int span = (2 * d == n) ? n / 2 : n;
        for (int i = 0; i < span; ++i)
            net.add_edge(prefix + std::to_string(i),
                         prefix + std::to_string((i + d) % n), capacity);
    }
    return net;
}

RandomModular random_ideal_modular(std::mt19937& rng) {
    auto uniform = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    auto real = [&](double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    };

    const int rows = uniform(3, 5);
    const int cols = uniform(3, 5);
    const int backbone_nodes = rows * cols;
    int n_comm = uniform(2, 4);
    if (backbone_nodes == 9) n_comm = std::min(n_comm, 3);

    // per-community topology: complete (k_c = size-1) or cycle (k_c = 2)
    std::vector<int> sizes, kcs;
    std::vector<bool> complete;
    for (int j = 0; j < n_comm; ++j) {
        sizes.push_back(uniform(4, 8));
        complete.push_back(uniform(0, 1) == 1);
        kcs.push_back(complete.back() ? sizes.back() - 1 : 2);
    }

    // choose pairwise non-adjacent backbone gateways; shrink the request
    // until an independent set of that size is found
    // a 3-length torus dimension wraps columns into triangles, where grouped
    // neighbor absorption undercuts the closed-form isolation size; single
    // gateways keep every gateway set inside the certified-exact domain
    std::vector<int> gateway_counts(n_comm, 1);
    if (rows > 3 && cols > 3)
        for (int& g : gateway_counts) g = uniform(1, 2);
    auto adjacent = [&](int a, int b) {
        const int ra = a / cols, ca = a % cols;
        const int rb = b / cols, cb = b % cols;
        const int dr = std::abs(ra - rb), dc = std::abs(ca - cb);
        const int wr = std::min(dr, rows - dr), wc = std::min(dc, cols - dc);
        return (wr + wc) == 1;
    };
    std::vector<int> chosen;
    for (;;) {
        const int want = std::accumulate(gateway_counts.begin(),
                                         gateway_counts.end(), 0);
        bool found = false;
        for (int attempt = 0; attempt < 200 && !found; ++attempt) {
            std::vector<int> pool(backbone_nodes);
            std::iota(pool.begin(), pool.end(), 0);
            std::shuffle(pool.begin(), pool.end(), rng);
            chosen.clear();
            for (const int cand : pool) {
                bool ok = true;
                for (const int have : chosen)
                    if (adjacent(cand, have)) { ok = false; break; }
                if (ok) chosen.push_back(cand);
                if (static_cast<int>(chosen.size()) == want) break;
            }
            found = static_cast<int>(chosen.size()) == want;
        }
        if (found) break;
        bool shrunk = false;
        for (int& g : gateway_counts)
            if (g > 1) { g = 1; shrunk = true; }
        if (!shrunk) { --n_comm; gateway_counts.pop_back(); sizes.pop_back();
                       complete.pop_back(); kcs.pop_back(); }
    }

    // intercommunity wiring plan: per gateway, 1-2 edges from random
    // community nodes, with capacities drawn in [0.5, 2].  When a community
    // has two gateways their totals are equalized: otherwise a cut could
    // pay for the lighter gateway's links and isolate only the heavier
    // gateway on the backbone, undercutting the community-isolation value.
    struct InterEdge { int comm, comm_node, backbone; double cap; };
    std::vector<InterEdge> inter;
    int next_gateway = 0;
    std::vector<double> inter_total(n_comm, 0.0);
    for (int j = 0; j < n_comm; ++j) {
        std::vector<double> gateway_total(gateway_counts[j], 0.0);
        const size_t first = inter.size();
        for (int g = 0; g < gateway_counts[j]; ++g) {
            const int b = chosen[next_gateway++];
            const int fanout = uniform(1, 2);
            for (int f = 0; f < fanout; ++f) {
                InterEdge e{j, uniform(0, sizes[j] - 1), b, real(0.5, 2.0)};
                gateway_total[g] += e.cap;
                inter.push_back(e);
            }
        }
        if (gateway_counts[j] == 2) {
            const double scale = gateway_total[0] / gateway_total[1];
            for (size_t e = first; e < inter.size(); ++e)
                if (inter[e].backbone == chosen[next_gateway - 1])
                    inter[e].cap *= scale;
            gateway_total[1] = gateway_total[0];
        }
        for (const double t : gateway_total) inter_total[j] += t;
    }

    // end-user pair in two distinct communities
    const int comm_a = 0;
    const int comm_b = uniform(1, n_comm - 1);
    const double global_cap = std::min(inter_total[comm_a],
                                       inter_total[comm_b]);

    // thresholds: gateways are mutually non-adjacent so the isolation size
    // of a gateway set is exactly 4 * its cardinality
    const long long h_star =
        4 * std::min(gateway_counts[comm_a], gateway_counts[comm_b]);
    const double backbone_min = global_cap / static_cast<double>(h_star);

    Network net = make_torus(rows, cols, 1.0, "b", true);
    // re-stamp backbone capacities with a margin above the threshold
    Network base;
    for (const Node& nd : net.nodes()) base.add_node(nd.id, "", true);
    for (size_t e = 0; e < net.edges().size(); ++e)
        base.add_edge(net.edges()[e].u, net.edges()[e].v,
                      backbone_min * real(1.05, 2.0));

    IdealModularSpec spec;
    spec.k_b = 4;
    std::string alpha, beta;
    for (int j = 0; j < n_comm; ++j) {
        const std::string label = "c" + std::to_string(j + 1);
        auto node_id = [&](int i) {
            return label + "." + std::to_string(i);
        };
        for (int i = 0; i < sizes[j]; ++i) base.add_node(node_id(i), label);
        const bool user_comm = (j == comm_a || j == comm_b);
        const double floor_cap =
            user_comm ? global_cap / static_cast<double>(kcs[j]) : 0.0;
        auto community_cap = [&] {
            return user_comm ? floor_cap * real(1.05, 2.0) : real(0.5, 2.0);
        };
        if (complete[j]) {
            for (int a = 0; a < sizes[j]; ++a)
                for (int b = a + 1; b < sizes[j]; ++b)
                    base.add_edge(node_id(a), node_id(b), community_cap());
        } else {
            for (int a = 0; a < sizes[j]; ++a)
                base.add_edge(node_id(a), node_id((a + 1) % sizes[j]),
                              community_cap());
        }
        spec.k_c[label] = kcs[j];
        if (j == comm_a) alpha = node_id(uniform(0, sizes[j] - 1));
        if (j == comm_b) beta = node_id(uniform(0, sizes[j] - 1));
    }
    for (const InterEdge& e : inter) {
        const std::string label = "c" + std::to_string(e.comm + 1);
        const std::string bid = "b" + std::to_string(e.backbone / cols) + "." +
                                std::to_string(e.backbone % cols);
        base.add_edge(label + "." + std::to_string(e.comm_node), bid, e.cap);
        spec.k_cb[label] += 1;
    }

    return RandomModular{std::move(base), std::move(spec), std::move(alpha),
                         std::move(beta)};
}

} // namespace qnetcap
