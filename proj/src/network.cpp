#include "qnetcap/network.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <utility>

#include "json_util.hpp"
#include "qnetcap/config.hpp"
#include "qnetcap/errors.hpp"

namespace qnetcap {

namespace {

using nlohmann::json;

constexpr double kResidualEps = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();

std::string edge_label(const Edge& e) { return e.u + "-" + e.v; }

// Dinic's algorithm over the undirected graph: each edge becomes a pair of
// mutually-reverse arcs, each carrying the full edge capacity.
class MaxFlow {
public:
    explicit MaxFlow(int n) : adj_(n), level_(n), iter_(n) {}

    void add_undirected(int u, int v, double cap) {
        adj_[u].push_back({v, static_cast<int>(adj_[v].size()), cap});
        adj_[v].push_back({u, static_cast<int>(adj_[u].size()) - 1, cap});
    }

    double run(int s, int t) {
        double flow = 0.0;
        while (build_levels(s, t)) {
            std::fill(iter_.begin(), iter_.end(), 0);
            for (;;) {
                const double pushed = augment(s, t, kInf);
                if (pushed <= kResidualEps) break;
                flow += pushed;
            }
        }
        return flow;
    }

    // Nodes reachable from s through arcs with positive residual capacity.
    std::vector<char> reachable(int s) const {
        std::vector<char> seen(adj_.size(), 0);
        std::queue<int> q;
        seen[s] = 1;
        q.push(s);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (const Arc& a : adj_[v])
                if (a.cap > kResidualEps && !seen[a.to]) {
                    seen[a.to] = 1;
                    q.push(a.to);
                }
        }
        return seen;
    }

private:
    struct Arc {
        int to;
        int rev;
        double cap;
    };

    bool build_levels(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        level_[s] = 0;
        q.push(s);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (const Arc& a : adj_[v])
                if (a.cap > kResidualEps && level_[a.to] < 0) {
                    level_[a.to] = level_[v] + 1;
                    q.push(a.to);
                }
        }
        return level_[t] >= 0;
    }

    double augment(int v, int t, double limit) {
        if (v == t) return limit;
        for (int& i = iter_[v]; i < static_cast<int>(adj_[v].size()); ++i) {
            Arc& a = adj_[v][i];
            if (a.cap <= kResidualEps || level_[a.to] != level_[v] + 1)
                continue;
            const double pushed = augment(a.to, t, std::min(limit, a.cap));
            if (pushed > kResidualEps) {
                a.cap -= pushed;
                adj_[a.to][a.rev].cap += pushed;
                return pushed;
            }
        }
        return 0.0;
    }

    std::vector<std::vector<Arc>> adj_;
    std::vector<int> level_;
    std::vector<int> iter_;
};

Cut cut_from_sides(const Network& net, const std::vector<char>& in_a) {
    Cut cut;
    const auto& nodes = net.nodes();
    for (size_t i = 0; i < nodes.size(); ++i)
        (in_a[i] ? cut.a_side : cut.b_side).push_back(nodes[i].id);
    std::sort(cut.a_side.begin(), cut.a_side.end());
    std::sort(cut.b_side.begin(), cut.b_side.end());
    const auto& edges = net.edges();
    for (size_t e = 0; e < edges.size(); ++e) {
        const int u = net.node_index(edges[e].u);
        const int v = net.node_index(edges[e].v);
        if (in_a[u] == in_a[v]) continue;
        cut.cut_edges.push_back(static_cast<int>(e));
        const double c = net.edge_capacity(static_cast<int>(e));
        cut.multi_edge_capacity += c;
        cut.single_edge_capacity = std::max(cut.single_edge_capacity, c);
    }
    return cut;
}

CapacityKind network_kind(const Network& net) {
    for (const Edge& e : net.edges())
        if (e.kind == CapacityKind::TightUpperBound)
            return CapacityKind::TightUpperBound;
    return CapacityKind::ExactAchievable;
}

std::pair<int, int> endpoint_pair(const Network& net, const std::string& alpha,
                                  const std::string& beta) {
    const int a = net.node_index(alpha);
    const int b = net.node_index(beta);
    if (a == b)
        throw ConfigError("end users must be two distinct nodes, got \"" +
                          alpha + "\" twice");
    return {a, b};
}

} // namespace

int Network::add_node(const std::string& id, const std::string& community,
                      bool backbone) {
    auto it = std::lower_bound(
        index_.begin(), index_.end(), id,
        [](const auto& entry, const std::string& key) { return entry.first < key; });
    if (it != index_.end() && it->first == id) {
        const Node& existing = nodes_[it->second];
        if (existing.community != community || existing.backbone != backbone)
            throw ConfigError("node \"" + id +
                              "\" redeclared with different labels");
        return it->second;
    }
    const int idx = static_cast<int>(nodes_.size());
    nodes_.push_back(Node{id, community, backbone});
    incidence_.emplace_back();
    index_.insert(it, {id, idx});
    return idx;
}

bool Network::has_node(const std::string& id) const {
    auto it = std::lower_bound(
        index_.begin(), index_.end(), id,
        [](const auto& entry, const std::string& key) { return entry.first < key; });
    return it != index_.end() && it->first == id;
}

int Network::node_index(const std::string& id) const {
    auto it = std::lower_bound(
        index_.begin(), index_.end(), id,
        [](const auto& entry, const std::string& key) { return entry.first < key; });
    if (it == index_.end() || it->first != id)
        throw UnknownNodeError("unknown node id \"" + id + "\"");
    return it->second;
}

void Network::check_endpoints(const std::string& u, const std::string& v,
                              int& iu, int& iv) {
    iu = node_index(u);
    iv = node_index(v);
    if (iu == iv)
        throw ConfigError("self-loop " + u + "-" + v + " is not allowed");
}

int Network::add_edge(const std::string& u, const std::string& v,
                      double capacity, CapacityKind kind) {
    int iu = 0, iv = 0;
    check_endpoints(u, v, iu, iv);
    if (!std::isfinite(capacity) || capacity < 0.0)
        throw ConfigError("edge " + u + "-" + v +
                          ": capacity must be finite and >= 0");
    const int idx = static_cast<int>(edges_.size());
    Edge e;
    e.u = u;
    e.v = v;
    e.capacity = capacity;
    e.kind = kind;
    edges_.push_back(std::move(e));
    incidence_[iu].push_back(idx);
    incidence_[iv].push_back(idx);
    return idx;
}

int Network::add_channel_edge(const std::string& u, const std::string& v,
                              ChannelModel channel, nlohmann::json spec) {
    int iu = 0, iv = 0;
    check_endpoints(u, v, iu, iv);
    const int idx = static_cast<int>(edges_.size());
    Edge e;
    e.u = u;
    e.v = v;
    e.channel = std::move(channel);
    e.channel_spec = std::move(spec);
    edges_.push_back(std::move(e));
    incidence_[iu].push_back(idx);
    incidence_[iv].push_back(idx);
    return idx;
}

int Network::add_pending_edge(const std::string& u, const std::string& v,
                              nlohmann::json spec) {
    int iu = 0, iv = 0;
    check_endpoints(u, v, iu, iv);
    const int idx = static_cast<int>(edges_.size());
    Edge e;
    e.u = u;
    e.v = v;
    e.channel_spec = std::move(spec);
    edges_.push_back(std::move(e));
    incidence_[iu].push_back(idx);
    incidence_[iv].push_back(idx);
    return idx;
}

const std::vector<int>& Network::incident_edges(int node) const {
    return incidence_.at(static_cast<size_t>(node));
}

double Network::edge_capacity(int edge) const {
    const Edge& e = edges_.at(static_cast<size_t>(edge));
    if (!e.capacity)
        throw ConfigError("edge " + edge_label(e) +
                          " has no capacity yet; evaluate its channel first");
    return *e.capacity;
}

PathResult single_path_capacity(const Network& net, const std::string& alpha,
                                const std::string& beta) {
    const auto [src, dst] = endpoint_pair(net, alpha, beta);
    const int n = static_cast<int>(net.nodes().size());

    std::vector<double> width(n, 0.0);
    std::vector<int> parent(n, -1);
    std::vector<char> done(n, 0);
    width[src] = kInf;

    // Max-width Dijkstra; ties pop the smaller node index so the witness
    // route is reproducible.
    using Entry = std::pair<double, int>;
    auto cmp = [](const Entry& a, const Entry& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second > b.second;
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp);
    heap.push({width[src], src});
    while (!heap.empty()) {
        const auto [w, v] = heap.top();
        heap.pop();
        if (done[v]) continue;
        done[v] = 1;
        for (const int e : net.incident_edges(v)) {
            const Edge& edge = net.edges()[e];
            const int other = net.node_index(edge.u == net.nodes()[v].id
                                                 ? edge.v
                                                 : edge.u);
            const double cand = std::min(w, net.edge_capacity(e));
            if (cand > width[other]) {
                width[other] = cand;
                parent[other] = v;
                heap.push({cand, other});
            }
        }
    }

    PathResult out;
    out.kind = network_kind(net);
    if (width[dst] <= 0.0 || !std::isfinite(width[dst])) return out;
    out.value = width[dst];
    for (int v = dst; v != -1; v = parent[v])
        out.route.push_back(net.nodes()[v].id);
    std::reverse(out.route.begin(), out.route.end());
    return out;
}

FlowResult flooding_capacity(const Network& net, const std::string& alpha,
                             const std::string& beta) {
    const auto [src, dst] = endpoint_pair(net, alpha, beta);
    const int n = static_cast<int>(net.nodes().size());

    MaxFlow mf(n);
    for (size_t e = 0; e < net.edges().size(); ++e) {
        const Edge& edge = net.edges()[e];
        mf.add_undirected(net.node_index(edge.u), net.node_index(edge.v),
                          net.edge_capacity(static_cast<int>(e)));
    }

    FlowResult out;
    out.value = mf.run(src, dst);
    out.kind = network_kind(net);
    out.min_cut = cut_from_sides(net, mf.reachable(src));
    return out;
}

Cut brute_force_min_cut(const Network& net, const std::string& alpha,
                        const std::string& beta, CutMode mode) {
    const auto [src, dst] = endpoint_pair(net, alpha, beta);
    const int n = static_cast<int>(net.nodes().size());
    if (n > 20)
        throw DomainError("brute_force_min_cut: network too large (" +
                          std::to_string(n) + " nodes, limit 20)");

    std::vector<int> movable;
    for (int v = 0; v < n; ++v)
        if (v != src && v != dst) movable.push_back(v);

    std::vector<char> in_a(n, 0);
    Cut best;
    double best_value = kInf;
    bool have_best = false;
    const uint32_t masks = 1u << movable.size();
    for (uint32_t mask = 0; mask < masks; ++mask) {
        std::fill(in_a.begin(), in_a.end(), 0);
        in_a[src] = 1;
        for (size_t i = 0; i < movable.size(); ++i)
            if (mask & (1u << i)) in_a[movable[i]] = 1;
        Cut cand = cut_from_sides(net, in_a);
        const double value = mode == CutMode::Multi
                                 ? cand.multi_edge_capacity
                                 : cand.single_edge_capacity;
        const bool better =
            !have_best || value < best_value ||
            (value == best_value &&
             std::lexicographical_compare(cand.a_side.begin(),
                                          cand.a_side.end(),
                                          best.a_side.begin(),
                                          best.a_side.end()));
        if (better) {
            best = std::move(cand);
            best_value = value;
            have_best = true;
        }
    }
    return best;
}

Network capacities_from_channels(const Network& net) {
    Network out = net;
    for (Edge& e : out.edges_) {
        if (!e.channel && e.channel_spec.is_null()) {
            if (!e.capacity)
                throw ConfigError("edge " + edge_label(e) +
                                  " has neither a capacity nor a channel");
            continue;
        }
        const std::string ctx = "edge " + edge_label(e) + ": ";
        try {
            if (!e.channel) e.channel = channel_from_json(e.channel_spec);
            const CapacityBound bound = e.channel->capacity();
            if (bound.unbounded)
                throw DomainError(
                    "channel capacity is unbounded; network capacities "
                    "must be finite");
            e.capacity = bound.value;
            e.kind = bound.kind;
        } catch (const WeakTurbulenceViolated& ex) {
            throw WeakTurbulenceViolated(ctx + ex.what());
        } catch (const DomainError& ex) {
            throw DomainError(ctx + ex.what());
        } catch (const ConfigError& ex) {
            throw ConfigError(ctx + ex.what());
        }
    }
    return out;
}

Network network_from_json(const nlohmann::json& j) {
    detail::check_keys(j, {"nodes", "edges"}, "network");
    if (!j.contains("nodes") || !j.at("nodes").is_array())
        throw ConfigError("network: \"nodes\" must be an array");

    Network net;
    for (const auto& node : j.at("nodes")) {
        detail::check_keys(node, {"id", "community", "backbone"},
                           "network node");
        if (!node.contains("id"))
            throw ConfigError("network node: missing \"id\"");
        const std::string id = detail::canonical_id(node.at("id"),
                                                    "network node");
        if (net.has_node(id))
            throw ConfigError("duplicate node id \"" + id + "\"");
        std::string community;
        if (node.contains("community"))
            community = detail::canonical_id(node.at("community"),
                                             "network node community");
        bool backbone = false;
        if (node.contains("backbone")) {
            if (!node.at("backbone").is_boolean())
                throw ConfigError("network node: \"backbone\" must be a bool");
            backbone = node.at("backbone").get<bool>();
        }
        net.add_node(id, community, backbone);
    }

    if (j.contains("edges")) {
        if (!j.at("edges").is_array())
            throw ConfigError("network: \"edges\" must be an array");
        for (const auto& edge : j.at("edges")) {
            detail::check_keys(edge, {"u", "v", "capacity", "channel"},
                               "network edge");
            if (!edge.contains("u") || !edge.contains("v"))
                throw ConfigError("network edge: missing \"u\" or \"v\"");
            const std::string u = detail::canonical_id(edge.at("u"),
                                                       "network edge");
            const std::string v = detail::canonical_id(edge.at("v"),
                                                       "network edge");
            for (const std::string& id : {u, v})
                if (!net.has_node(id))
                    throw ConfigError("edge " + u + "-" + v +
                                      " references undeclared node \"" + id +
                                      "\"");
            const bool has_cap = edge.contains("capacity");
            const bool has_chan = edge.contains("channel");
            if (has_cap == has_chan)
                throw ConfigError(
                    "edge " + u + "-" + v +
                    ": provide exactly one of \"capacity\" or \"channel\"");
            if (has_cap)
                net.add_edge(u, v,
                             detail::get_number(edge, "capacity",
                                                "network edge"));
            else
                net.add_pending_edge(u, v, edge.at("channel"));
        }
    }
    return net;
}

nlohmann::json network_to_json(const Network& net) {
    json nodes = json::array();
    for (const Node& n : net.nodes()) {
        json entry{{"id", n.id}};
        if (!n.community.empty()) entry["community"] = n.community;
        if (n.backbone) entry["backbone"] = true;
        nodes.push_back(std::move(entry));
    }
    json edges = json::array();
    for (const Edge& e : net.edges()) {
        json entry{{"u", e.u}, {"v", e.v}};
        if (!e.channel_spec.is_null())
            entry["channel"] = e.channel_spec;
        else if (e.capacity)
            entry["capacity"] = *e.capacity;
        edges.push_back(std::move(entry));
    }
    return json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

} // namespace qnetcap
