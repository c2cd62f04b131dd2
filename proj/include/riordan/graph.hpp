#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "riordan/riordan_array.hpp"

namespace riordan {

using BigInt = boost::multiprecision::cpp_int;

/// Antisymmetric n x n matrix of centered residues, 1-based vertex
/// labels to match the combinatorial statements.
struct SkewAdjacency {
    int n = 0;
    int p = 3;
    std::vector<int> s; // row-major

    int at(int i, int j) const { return s[(i - 1) * n + (j - 1)]; }
    void set(int i, int j, int v);

    // Strict lower triangle packed into a string; usable as a hash key.
    std::string lower_key() const;
    bool operator==(const SkewAdjacency&) const = default;
};

SkewAdjacency zero_skew(int n, int p);
bool is_zero_matrix(const SkewAdjacency& s);

struct Arc {
    int from = 0, to = 0, w = 1;
    bool operator==(const Arc&) const = default;
};

struct OrientedGraph {
    int n = 0;
    std::vector<Arc> arcs;
};

// S = (zg, f)_n - (zg, f)_n^T mod p, centered; requires truncation >= n-1.
SkewAdjacency skew_from_pair(const RiordanPair& pair, int n);

// One arc per nonzero unordered pair, oriented toward the positive sign.
OrientedGraph graph_from_skew(const SkewAdjacency& s);
SkewAdjacency skew_from_graph(const OrientedGraph& g, int p);

// (p^{2(n-1)} + p) / (p+1), exactly.
BigInt count_formula(int n, int p);

constexpr long long kDefaultBudget = 4'000'000;

// All distinct order-n skew matrices arising from the canonical
// coefficient space (smallest nonzero g index i, unit g_i, free tail
// and f_1..f_{n-i-2}), plus the null graph.  Deduplicated.
std::vector<SkewAdjacency> enumerate_all(int n, int p,
                                         long long budget = kDefaultBudget,
                                         int workers = 1);

// Same enumeration, keyed by lower_key() and carrying the generating
// (g, f) coefficients that produced each matrix.
struct PairWitness {
    std::vector<int> g, f;
};
std::unordered_map<std::string, PairWitness>
enumerate_with_witness(int n, int p, long long budget = kDefaultBudget,
                       int workers = 1);

// Submatrix on a strictly increasing 1-based vertex subset.
SkewAdjacency induced_skew(const SkewAdjacency& s, const std::vector<int>& vertices);

// Brute-force weighted digraph isomorphism; orders must match and be <= 8.
bool digraph_isomorphic(const OrientedGraph& a, const OrientedGraph& b);

// {"n":..,"p":..,"entries":[[i,j,s],...]} with i<j, s nonzero centered.
std::string skew_to_json(const SkewAdjacency& s);
SkewAdjacency skew_from_json(const std::string& text);

// One directed edge per arc; label=<weight> omitted when the weight is 1.
std::string graph_to_dot(const OrientedGraph& g);
OrientedGraph graph_from_dot(const std::string& text);

// Aligned centered-residue matrix text, one row per line.
std::string skew_to_text(const SkewAdjacency& s);

} // namespace riordan
