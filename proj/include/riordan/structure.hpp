#pragma once

#include <utility>
#include <vector>

#include "riordan/graph.hpp"

namespace riordan {

/// Rectangular matrix of centered residues, 0-based.
struct Mat {
    int rows = 0, cols = 0;
    std::vector<int> a;

    int at(int r, int c) const { return a[r * cols + c]; }
    void set(int r, int c, int v) { a[r * cols + c] = v; }
    bool operator==(const Mat&) const = default;
};

Mat zero_mat(int rows, int cols);

// Residue classes V_1..V_p of [n]; V_i = { j : j = i mod p } (V_p holds
// the multiples of p).
std::vector<std::vector<int>> residue_parts(int n, int p);
// Part sizes l_i = floor((n-i)/p) + 1.
int part_size(int n, int p, int i);

// Gap of the A-sequence: number of zeros between a_0 = 1 and the first
// nonzero tail term.  Rejects pairs whose A-sequence has no nonzero
// tail within truncation (f = z up to truncation) or a_0 != 1.
int a_gap(const RiordanPair& pair);

// All pairs {i + m p^s, j + m p^s} inside [n], where s is the smallest
// exponent satisfying the gap condition floor((|i-j|-1)/p^s) <= gap
// (or p*floor(...) <= gap in strict mode).  Pairs keep the (i, j)
// orientation.
std::vector<std::pair<int, int>> cognate_set(const RiordanPair& pair, int n,
                                             int i, int j, bool strict = false);

// True iff both shifted windows of size (k+1)p^s (+1) induce entrywise
// equal skew submatrices.  Requires 0 <= k <= a_gap and the windows to
// fit in [n].
bool check_fractal(const RiordanPair& pair, int n, int s, int k, int alpha);

/// Generating functions of one diagonal block and one off-diagonal
/// block pair.  B_{i,j} is the l_i x l_j leading part of L - U^T where
/// L = (z * sieve(g f^{j-1} / z^{i-1}), f)   (strictly lower)
/// U = (sieve(z^{p+1-j} g f^{i-1}), f)       (lower incl. diagonal, l_j x l_i).
struct BlockGenerators {
    RiordanPair diag; // (sieve(g f^{i-1} / z^{i-1}), f)
    RiordanPair L;    // first component WITHOUT the z factor
    RiordanPair U;
};
BlockGenerators block_generators(const RiordanPair& pair, int i, int j);

struct Decomposition {
    int n = 0, p = 3;
    std::vector<std::vector<int>> parts; // V_1..V_p
    std::vector<int> perm;               // concatenation of the parts
    SkewAdjacency permuted;              // P S P^T
    std::vector<SkewAdjacency> diag_blocks;  // X_1..X_p
    std::vector<std::vector<Mat>> off_blocks; // [i-1][j-1] valid for i<j
    bool has_formula = false;            // formula route ran (f'(0) != 0)
    std::vector<RiordanPair> diag_pairs; // formula generators, when present
    bool formula_matches_direct = false;
};

// Builds the permutation-similar block form, computing every block both
// directly (submatrices of the skew matrix) and from the generating
// function formulas when f'(0) != 0, and asserting agreement.
Decomposition decompose(const RiordanPair& pair, int n);

// Reassemble the block matrix (diag X_i, B_{i,j} above, -B^T below).
SkewAdjacency assemble_blocks(const Decomposition& d);

/// Verdicts of the coefficient-level part predicates against the
/// matrix-level facts they characterize.
struct PartReport {
    int n = 0, p = 3;
    std::vector<bool> null_coeff, null_matrix;         // per part, index i-1
    std::vector<std::vector<bool>> iso_coeff;          // [i-1][j-1], i<j
    std::vector<std::vector<bool>> blocks_equal;       // leading square equality
    std::vector<std::vector<bool>> noarc_coeff, noarc_matrix;
    bool partite_coeff = false, partite_matrix = false;
    bool consistent = false;
};
PartReport part_predicates(const RiordanPair& pair, int n);

std::string decomposition_to_json(const Decomposition& d);
std::string part_report_to_json(const PartReport& r);

} // namespace riordan
