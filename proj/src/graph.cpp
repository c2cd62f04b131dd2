#include "riordan/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace riordan {

void SkewAdjacency::set(int i, int j, int v) {
    s[(i - 1) * n + (j - 1)] = v;
    s[(j - 1) * n + (i - 1)] = (i == j) ? v : -v;
}

std::string SkewAdjacency::lower_key() const {
    std::string key;
    key.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j)
            key.push_back(static_cast<char>(at(i, j) + 127));
    return key;
}

SkewAdjacency zero_skew(int n, int p) {
    SkewAdjacency s;
    s.n = n;
    s.p = p;
    s.s.assign(static_cast<size_t>(n) * n, 0);
    return s;
}

bool is_zero_matrix(const SkewAdjacency& s) {
    return std::all_of(s.s.begin(), s.s.end(), [](int x) { return x == 0; });
}

namespace {

SkewAdjacency skew_from_key(int n, int p, const std::string& key) {
    SkewAdjacency s = zero_skew(n, p);
    size_t idx = 0;
    for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j) s.set(i, j, static_cast<int>(key[idx++]) - 127);
    return s;
}

} // namespace

SkewAdjacency skew_from_pair(const RiordanPair& pair, int n) {
    if (n < 1) throw precondition_error("skew_from_pair: order must be >= 1");
    if (n >= 2 && pair.order() < n - 1)
        throw precondition_error("skew_from_pair: truncation " +
                                 std::to_string(pair.order()) + " < " +
                                 std::to_string(n - 1));
    SkewAdjacency s = zero_skew(n, pair.p());
    if (n == 1) return s;
    Series col = truncate(pair.g, n - 1);
    Series f = truncate(pair.f, n - 1);
    for (int j = 1; j < n; ++j) {
        // s_{i,j} = [z^{i-2}] g f^{j-1} for i > j
        for (int i = j + 1; i <= n; ++i) s.set(i, j, col.c[i - 2]);
        if (j + 1 < n) col = mul(col, f);
    }
    return s;
}

OrientedGraph graph_from_skew(const SkewAdjacency& s) {
    OrientedGraph g;
    g.n = s.n;
    for (int i = 1; i <= s.n; ++i)
        for (int j = i + 1; j <= s.n; ++j) {
            int v = s.at(i, j);
            if (v > 0) g.arcs.push_back({i, j, v});
            else if (v < 0) g.arcs.push_back({j, i, -v});
        }
    return g;
}

SkewAdjacency skew_from_graph(const OrientedGraph& g, int p) {
    SkewAdjacency s = zero_skew(g.n, p);
    for (const Arc& a : g.arcs) {
        if (a.from < 1 || a.from > g.n || a.to < 1 || a.to > g.n || a.from == a.to)
            throw precondition_error("skew_from_graph: bad arc endpoints");
        if (a.w < 1 || a.w > p / 2)
            throw precondition_error("skew_from_graph: arc weight out of range");
        if (s.at(a.from, a.to) != 0)
            throw precondition_error("skew_from_graph: duplicate arc pair");
        s.set(a.from, a.to, a.w);
    }
    return s;
}

BigInt count_formula(int n, int p) {
    if (n < 1) throw precondition_error("count_formula: order must be >= 1");
    BigInt num = boost::multiprecision::pow(BigInt(p), 2 * (n - 1)) + p;
    return num / (p + 1);
}

namespace {

// Enumerate the canonical coefficient space for a fixed leading index i:
// g_i a unit, g_{i+1..n-2} and f_1..f_{n-i-2} free digits.
void enumerate_leading_index(int n, int p, int i,
                             std::unordered_map<std::string, PairWitness>& out) {
    int order = std::max(n - 1, 1);
    Prime prime(p);
    int half = p / 2;
    int cnt_g = n - 2 - i;              // free g digits above the unit
    int cnt_f = std::max(0, n - i - 2); // f_1..f_{n-i-2}
    int digits = cnt_g + cnt_f;

    std::vector<int> unit_values;
    for (int u = -half; u <= half; ++u)
        if (u != 0) unit_values.push_back(u);

    std::vector<int> digit(digits, -half);
    std::vector<int> gco(order, 0), fco(order, 0);
    while (true) {
        for (int unit : unit_values) {
            std::fill(gco.begin(), gco.end(), 0);
            std::fill(fco.begin(), fco.end(), 0);
            gco[i] = unit;
            for (int t = 0; t < cnt_g; ++t) gco[i + 1 + t] = digit[t];
            for (int t = 0; t < cnt_f; ++t) fco[1 + t] = digit[cnt_g + t];
            RiordanPair pair = make_pair(make_series(gco, prime, order),
                                         make_series(fco, prime, order));
            SkewAdjacency s = skew_from_pair(pair, n);
            out.emplace(s.lower_key(), PairWitness{gco, fco});
        }
        // odometer
        int pos = 0;
        while (pos < digits && digit[pos] == half) digit[pos++] = -half;
        if (pos == digits) break;
        ++digit[pos];
    }
}

} // namespace

std::unordered_map<std::string, PairWitness>
enumerate_with_witness(int n, int p, long long budget, int workers) {
    if (n < 1) throw precondition_error("enumerate: order must be >= 1");
    BigInt total = count_formula(n, p);
    if (total > budget)
        throw budget_error("enumeration space " + total.str() +
                           " exceeds budget " + std::to_string(budget));

    std::unordered_map<std::string, PairWitness> result;
    int order = std::max(n - 1, 1);
    result.emplace(zero_skew(n, p).lower_key(),
                   PairWitness{std::vector<int>(order, 0), std::vector<int>(order, 0)});

    workers = std::max(workers, 1);
    if (workers == 1 || n < 3) {
        for (int i = 0; i <= n - 2; ++i) enumerate_leading_index(n, p, i, result);
        return result;
    }

    // Shard the outer leading-index loop; merge by key equality.
    std::vector<std::unordered_map<std::string, PairWitness>> shards(workers);
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w)
        threads.emplace_back([&, w] {
            for (int i = w; i <= n - 2; i += workers)
                enumerate_leading_index(n, p, i, shards[w]);
        });
    for (auto& t : threads) t.join();
    for (auto& shard : shards)
        for (auto& kv : shard) result.emplace(std::move(kv.first), std::move(kv.second));
    return result;
}

std::vector<SkewAdjacency> enumerate_all(int n, int p, long long budget, int workers) {
    auto map = enumerate_with_witness(n, p, budget, workers);
    std::vector<SkewAdjacency> out;
    out.reserve(map.size());
    for (const auto& kv : map) out.push_back(skew_from_key(n, p, kv.first));
    return out;
}

SkewAdjacency induced_skew(const SkewAdjacency& s, const std::vector<int>& vertices) {
    if (vertices.empty()) throw precondition_error("induced_skew: empty vertex set");
    for (size_t k = 0; k < vertices.size(); ++k) {
        if (vertices[k] < 1 || vertices[k] > s.n)
            throw precondition_error("induced_skew: vertex out of range");
        if (k > 0 && vertices[k] <= vertices[k - 1])
            throw precondition_error("induced_skew: vertices must strictly increase");
    }
    SkewAdjacency r = zero_skew(static_cast<int>(vertices.size()), s.p);
    for (int i = 1; i <= r.n; ++i)
        for (int j = 1; j < i; ++j) r.set(i, j, s.at(vertices[i - 1], vertices[j - 1]));
    return r;
}

bool digraph_isomorphic(const OrientedGraph& a, const OrientedGraph& b) {
    if (a.n != b.n) return false;
    if (a.n > 8) throw precondition_error("digraph_isomorphic: order > 8");
    if (a.arcs.size() != b.arcs.size()) return false;
    int n = a.n;
    auto weights = [n](const OrientedGraph& g) {
        std::vector<int> w(static_cast<size_t>(n) * n, 0);
        for (const Arc& arc : g.arcs) w[(arc.from - 1) * n + (arc.to - 1)] = arc.w;
        return w;
    };
    std::vector<int> wa = weights(a), wb = weights(b);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                if (wa[i * n + j] != wb[perm[i] * n + perm[j]]) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::string skew_to_json(const SkewAdjacency& s) {
    nlohmann::json j;
    j["n"] = s.n;
    j["p"] = s.p;
    j["entries"] = nlohmann::json::array();
    for (int i = 1; i <= s.n; ++i)
        for (int k = i + 1; k <= s.n; ++k)
            if (s.at(i, k) != 0) j["entries"].push_back({i, k, s.at(i, k)});
    return j.dump();
}

SkewAdjacency skew_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad graph JSON: ") + e.what());
    }
    if (!j.contains("n") || !j.contains("p") || !j.contains("entries"))
        throw parse_error("graph JSON missing n/p/entries");
    SkewAdjacency s = zero_skew(j["n"].get<int>(), j["p"].get<int>());
    for (const auto& entry : j["entries"]) {
        if (!entry.is_array() || entry.size() != 3)
            throw parse_error("graph JSON entry must be [i,j,s]");
        int i = entry[0].get<int>(), k = entry[1].get<int>(), v = entry[2].get<int>();
        if (i < 1 || k <= i || k > s.n || v == 0 || std::abs(v) > s.p / 2)
            throw parse_error("graph JSON entry out of range");
        s.set(i, k, v);
    }
    return s;
}

std::string graph_to_dot(const OrientedGraph& g) {
    std::ostringstream out;
    out << "digraph G {\n";
    for (int v = 1; v <= g.n; ++v) out << "  " << v << ";\n";
    for (const Arc& a : g.arcs) {
        out << "  " << a.from << " -> " << a.to;
        if (a.w != 1) out << " [label=" << a.w << "]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

OrientedGraph graph_from_dot(const std::string& text) {
    // Parses exactly the subset graph_to_dot emits.
    OrientedGraph g;
    std::istringstream in(text);
    std::string line;
    bool seen_header = false;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        line = line.substr(first);
        if (line.rfind("digraph", 0) == 0) { seen_header = true; continue; }
        if (line == "}") continue;
        if (!line.empty() && line.back() == ';') line.pop_back();
        std::istringstream ls(line);
        int from = 0;
        if (!(ls >> from)) throw parse_error("bad DOT line: " + line);
        std::string arrow;
        if (!(ls >> arrow)) {
            g.n = std::max(g.n, from);
            continue;
        }
        if (arrow != "->") throw parse_error("bad DOT line: " + line);
        int to = 0;
        if (!(ls >> to)) throw parse_error("bad DOT line: " + line);
        int w = 1;
        std::string attr;
        if (ls >> attr) {
            if (attr.rfind("[label=", 0) != 0 || attr.back() != ']')
                throw parse_error("bad DOT attribute: " + attr);
            w = std::stoi(attr.substr(7));
        }
        g.arcs.push_back({from, to, w});
        g.n = std::max({g.n, from, to});
    }
    if (!seen_header) throw parse_error("DOT input missing digraph header");
    return g;
}

std::string skew_to_text(const SkewAdjacency& s) {
    int width = 1;
    for (int v : s.s) width = std::max(width, static_cast<int>(std::to_string(v).size()));
    std::ostringstream out;
    for (int i = 1; i <= s.n; ++i) {
        for (int j = 1; j <= s.n; ++j) {
            std::string cell = std::to_string(s.at(i, j));
            out << (j > 1 ? " " : "") << std::string(width - cell.size(), ' ') << cell;
        }
        out << "\n";
    }
    return out.str();
}

} // namespace riordan
