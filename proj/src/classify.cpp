#include "riordan/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace riordan {

RiordanUniverse riordan_universe(int n, int p, long long budget, int workers) {
    return enumerate_with_witness(n, p, budget, workers);
}

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<std::vector<int>> out;
    do out.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

SkewAdjacency relabel(const SkewAdjacency& s, const std::vector<int>& labeling) {
    // New vertex u takes the row/column of original vertex labeling[u-1].
    SkewAdjacency r = zero_skew(s.n, s.p);
    for (int u = 1; u <= s.n; ++u)
        for (int v = 1; v < u; ++v) r.set(u, v, s.at(labeling[u - 1], labeling[v - 1]));
    return r;
}

} // namespace

RiordanMembershipResult is_riordan_graph(const OrientedGraph& graph,
                                         const RiordanUniverse& universe, int p) {
    SkewAdjacency s = skew_from_graph(graph, p);
    for (const auto& labeling : all_permutations(graph.n)) {
        SkewAdjacency rel = relabel(s, labeling);
        auto it = universe.find(rel.lower_key());
        if (it == universe.end()) continue;
        RiordanMembershipResult result;
        result.is_riordan = true;
        result.labeling = labeling;
        result.g = it->second.g;
        result.f = it->second.f;
        // Witness soundness: the stored pair must rebuild the relabeled
        // matrix exactly.
        int order = std::max(graph.n - 1, 1);
        Prime prime(p);
        RiordanPair pair = make_pair(make_series(result.g, prime, order),
                                     make_series(result.f, prime, order));
        if (!(skew_from_pair(pair, graph.n) == rel))
            throw consistency_error("is_riordan_graph: witness fails to rebuild matrix");
        return result;
    }
    return {};
}

RiordanMembershipResult is_riordan_graph(const OrientedGraph& graph, int p,
                                         long long budget) {
    return is_riordan_graph(graph, riordan_universe(graph.n, p, budget), p);
}

bool verify_kn1_not_riordan(int n, long long budget) {
    if (n < 2) throw precondition_error("verify_kn1_not_riordan: order must be >= 2");
    RiordanUniverse universe = riordan_universe(n, 3, budget);
    // Edges of K_{n-1} on vertices 1..n-1; vertex n stays isolated.
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    long long orientations = 1LL << edges.size();
    for (long long mask = 0; mask < orientations; ++mask) {
        OrientedGraph g;
        g.n = n;
        for (size_t e = 0; e < edges.size(); ++e) {
            auto [a, b] = edges[e];
            if (mask >> e & 1) g.arcs.push_back({a, b, 1});
            else g.arcs.push_back({b, a, 1});
        }
        if (is_riordan_graph(g, universe, 3).is_riordan) return false;
    }
    return true;
}

namespace {

// Arc code: one base-3 digit per unordered pair (i<j) in lexicographic
// order; 0 none, 1 arc i->j, 2 arc j->i.
long long graph_code(const OrientedGraph& g) {
    int n = g.n;
    std::vector<int> w(static_cast<size_t>(n) * n, 0);
    for (const Arc& a : g.arcs) w[(a.from - 1) * n + (a.to - 1)] = a.w;
    long long code = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            int digit = 0;
            if (w[(i - 1) * n + (j - 1)]) digit = 1;
            else if (w[(j - 1) * n + (i - 1)]) digit = 2;
            code = code * 3 + digit;
        }
    return code;
}

OrientedGraph graph_from_code(int n, long long code) {
    int pairs = n * (n - 1) / 2;
    std::vector<int> digits(pairs);
    for (int t = pairs - 1; t >= 0; --t) {
        digits[t] = static_cast<int>(code % 3);
        code /= 3;
    }
    OrientedGraph g;
    g.n = n;
    int t = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j, ++t) {
            if (digits[t] == 1) g.arcs.push_back({i, j, 1});
            else if (digits[t] == 2) g.arcs.push_back({j, i, 1});
        }
    return g;
}

OrientedGraph apply_labeling(const OrientedGraph& g, const std::vector<int>& inv) {
    // inv[v-1] = new name of original vertex v
    OrientedGraph out;
    out.n = g.n;
    for (const Arc& a : g.arcs)
        out.arcs.push_back({inv[a.from - 1], inv[a.to - 1], a.w});
    return out;
}

} // namespace

std::vector<GraphClass> classify_small(int n, int p) {
    if (n < 1 || n > 4) throw precondition_error("classify_small: order must be 1..4");
    RiordanUniverse universe = riordan_universe(n, p);
    auto perms = all_permutations(n);

    int pairs = n * (n - 1) / 2;
    long long total = 1;
    for (int t = 0; t < pairs; ++t) total *= 3;

    std::map<long long, GraphClass> classes; // canonical code -> class
    for (long long code = 0; code < total; ++code) {
        OrientedGraph g = graph_from_code(n, code);
        long long canon = code;
        for (const auto& perm : perms)
            canon = std::min(canon, graph_code(apply_labeling(g, perm)));
        auto it = classes.find(canon);
        if (it == classes.end()) {
            GraphClass cls;
            cls.id = canon;
            cls.representative = graph_from_code(n, canon);
            cls.labeled_count = 1;
            cls.verdict = is_riordan_graph(cls.representative, universe, p);
            classes.emplace(canon, std::move(cls));
        } else {
            ++it->second.labeled_count;
        }
    }
    std::vector<GraphClass> out;
    for (auto& kv : classes) out.push_back(std::move(kv.second));
    return out;
}

std::string classes_to_csv(const std::vector<GraphClass>& classes) {
    std::ostringstream out;
    out << "class_id,order,arcs,riordan,witness_g,witness_f\n";
    for (const GraphClass& cls : classes) {
        out << cls.id << "," << cls.representative.n << ",";
        for (size_t k = 0; k < cls.representative.arcs.size(); ++k) {
            const Arc& a = cls.representative.arcs[k];
            out << (k ? " " : "") << a.from << "->" << a.to;
            if (a.w != 1) out << "(" << a.w << ")";
        }
        out << "," << (cls.verdict.is_riordan ? "yes" : "no") << ",";
        auto emit = [&](const std::vector<int>& v) {
            for (size_t k = 0; k < v.size(); ++k) out << (k ? " " : "") << v[k];
        };
        if (cls.verdict.is_riordan) {
            emit(cls.verdict.g);
            out << ",";
            emit(cls.verdict.f);
        } else {
            out << ",";
        }
        out << "\n";
    }
    return out.str();
}

} // namespace riordan
