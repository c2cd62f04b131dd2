#pragma once

#include <string>
#include <vector>

#include "riordan/graph.hpp"

namespace riordan {

// All order-n oriented Riordan skew matrices, keyed by lower triangle,
// each with a generating (g, f) witness.
using RiordanUniverse = std::unordered_map<std::string, PairWitness>;
RiordanUniverse riordan_universe(int n, int p, long long budget = kDefaultBudget,
                                 int workers = 1);

struct RiordanMembershipResult {
    bool is_riordan = false;
    // On success: labeling sigma (1-based, new label u sits on original
    // vertex labeling[u-1]) and the generating coefficients.
    std::vector<int> labeling;
    std::vector<int> g, f;
};

// True iff some relabeling of the graph lands in the universe.  The
// returned witness is validated by rebuilding the relabeled matrix from
// (g, f) before it is reported.
RiordanMembershipResult is_riordan_graph(const OrientedGraph& graph, int p,
                                         long long budget = kDefaultBudget);
RiordanMembershipResult is_riordan_graph(const OrientedGraph& graph,
                                         const RiordanUniverse& universe, int p);

// True iff every orientation of K_{n-1} plus an isolated vertex fails
// the membership test.
bool verify_kn1_not_riordan(int n, long long budget = kDefaultBudget);

struct GraphClass {
    long long id = 0; // canonical base-3 arc code
    OrientedGraph representative;
    int labeled_count = 0;
    RiordanMembershipResult verdict;
};

// Nonisomorphic oriented graphs of order n (n <= 4), each classified.
std::vector<GraphClass> classify_small(int n, int p = 3);

std::string classes_to_csv(const std::vector<GraphClass>& classes);

} // namespace riordan
