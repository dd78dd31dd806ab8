#include "ftdiam/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

namespace ftdiam {

Graph::Graph(int n, bool directed, int fixed_digits)
    : n_(n), directed_(directed), fixed_digits_(fixed_digits), adj_(static_cast<size_t>(n)) {
    if (n < 0) throw error("graph: negative vertex count");
    if (fixed_digits < 0 || fixed_digits > 9) throw error("graph: fixed-point digits out of range");
}

EdgeId Graph::add_edge(Vertex u, Vertex v, Distance w) {
    if (!has_vertex(u) || !has_vertex(v))
        throw error("graph: edge endpoint out of range: " + std::to_string(u) + " " +
                    std::to_string(v));
    if (u == v) throw error("graph: self-loop rejected at vertex " + std::to_string(u));
    if (w <= 0) throw error("graph: non-positive edge weight rejected");
    if (find_edge(u, v) != -1)
        throw error("graph: parallel edge rejected: " + std::to_string(u) + "-" +
                    std::to_string(v));
    EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.push_back(Edge{u, v, w});
    adj_[static_cast<size_t>(u)].push_back(HalfEdge{v, id});
    if (!directed_) adj_[static_cast<size_t>(v)].push_back(HalfEdge{u, id});
    return id;
}

EdgeId Graph::find_edge(Vertex u, Vertex v) const {
    if (!has_vertex(u) || !has_vertex(v)) return -1;
    for (const HalfEdge& h : adj_[static_cast<size_t>(u)])
        if (h.to == v) return h.id;
    return -1;
}

Graph Graph::reversed() const {
    Graph r(n_, directed_, fixed_digits_);
    for (const Edge& e : edges_) {
        if (directed_)
            r.add_edge(e.v, e.u, e.w);
        else
            r.add_edge(e.u, e.v, e.w);
    }
    return r;
}

namespace {

bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos) continue;
        if (line[i] == '#') continue;
        return true;
    }
    return false;
}

// Parses a weight token under the declared scale: plain integer for `int`,
// decimal with at most `digits` fractional places for `fixed:<digits>`.
Distance parse_weight(const std::string& tok, int digits) {
    size_t dot = tok.find('.');
    std::string int_part = dot == std::string::npos ? tok : tok.substr(0, dot);
    std::string frac_part = dot == std::string::npos ? "" : tok.substr(dot + 1);
    if (digits == 0 && dot != std::string::npos)
        throw error("graph parse: fractional weight in weights=int file: " + tok);
    if (static_cast<int>(frac_part.size()) > digits)
        throw error("graph parse: too many fractional digits in weight: " + tok);
    if (int_part.empty() && frac_part.empty()) throw error("graph parse: bad weight: " + tok);
    for (char c : int_part + frac_part)
        if (c < '0' || c > '9') throw error("graph parse: bad weight: " + tok);
    frac_part.resize(static_cast<size_t>(digits), '0');
    Distance value = 0;
    for (char c : int_part + frac_part) {
        if (value > kInfDist / 10) throw error("graph parse: weight overflow: " + tok);
        value = value * 10 + (c - '0');
    }
    return value;
}

}  // namespace

Graph Graph::parse(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) throw error("graph parse: missing header line");
    std::istringstream hs(line);
    long long n = -1, m = -1;
    std::string directed_tok, weights_tok;
    if (!(hs >> n >> m >> directed_tok >> weights_tok))
        throw error("graph parse: bad header: " + line);
    bool directed;
    if (directed_tok == "directed=0")
        directed = false;
    else if (directed_tok == "directed=1")
        directed = true;
    else
        throw error("graph parse: bad directed flag: " + directed_tok);
    int digits = 0;
    if (weights_tok == "weights=int") {
        digits = 0;
    } else if (weights_tok.rfind("weights=fixed:", 0) == 0) {
        std::string k = weights_tok.substr(std::string("weights=fixed:").size());
        if (k.empty() || k.size() > 1 || k[0] < '1' || k[0] > '9')
            throw error("graph parse: bad fixed-point scale: " + weights_tok);
        digits = k[0] - '0';
    } else {
        throw error("graph parse: bad weights flag: " + weights_tok);
    }
    if (n < 0 || m < 0) throw error("graph parse: bad header counts");

    Graph g(static_cast<int>(n), directed, digits);
    for (long long i = 0; i < m; ++i) {
        if (!next_content_line(in, line))
            throw error("graph parse: expected " + std::to_string(m) + " edges, got " +
                        std::to_string(i));
        std::istringstream es(line);
        long long u, v;
        std::string wtok;
        if (!(es >> u >> v >> wtok)) throw error("graph parse: bad edge line: " + line);
        g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v), parse_weight(wtok, digits));
    }
    return g;
}

Graph Graph::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("graph: cannot open file: " + path);
    return parse(in);
}

FailureSet::FailureSet(const Graph& g, std::vector<EdgeId> edge_ids) {
    std::sort(edge_ids.begin(), edge_ids.end());
    edge_ids.erase(std::unique(edge_ids.begin(), edge_ids.end()), edge_ids.end());
    for (EdgeId e : edge_ids) {
        if (e < 0 || e >= g.m())
            throw error("failure set: edge id out of range: " + std::to_string(e));
        endpoints_.push_back(g.edge(e).u);
        endpoints_.push_back(g.edge(e).v);
    }
    edges_ = std::move(edge_ids);
    std::sort(endpoints_.begin(), endpoints_.end());
    endpoints_.erase(std::unique(endpoints_.begin(), endpoints_.end()), endpoints_.end());
}

FailureSet FailureSet::from_pairs(const Graph& g,
                                  const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    std::vector<EdgeId> ids;
    for (const auto& [u, v] : pairs) {
        EdgeId e = g.find_edge(u, v);
        if (e == -1)
            throw error("failure set: no such edge: " + std::to_string(u) + "-" +
                        std::to_string(v));
        ids.push_back(e);
    }
    return FailureSet(g, std::move(ids));
}

bool FailureSet::contains(EdgeId e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

}  // namespace ftdiam
