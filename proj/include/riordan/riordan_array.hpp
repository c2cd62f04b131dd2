#pragma once

#include <vector>

#include "riordan/series.hpp"

namespace riordan {

/// A (g, f) generating-function pair.  f(0) = 0 always; the pair is
/// proper (invertible) when additionally g(0) != 0 and f'(0) != 0.
struct RiordanPair {
    Series g, f;

    int p() const { return g.p; }
    int order() const { return std::min(g.order(), f.order()); }
};

RiordanPair make_pair(Series g, Series f);
RiordanPair identity_pair(Prime p, int order);
bool is_proper(const RiordanPair& pair);

/// Lower-triangular n x n matrix of centered residues, 0-based indices.
struct TriangularMatrix {
    int n = 0;
    std::vector<int> e; // row-major, full square, zero above diagonal

    int at(int i, int j) const { return e[i * n + j]; }
    void set(int i, int j, int v) { e[i * n + j] = v; }
    bool operator==(const TriangularMatrix&) const = default;
};

// l_{i,j} = [z^i] g f^j, centered mod p.
TriangularMatrix leading_matrix(const RiordanPair& pair, int n);

// Exact triangular matrix product (oracle-grade, no generating functions).
TriangularMatrix matrix_product(const TriangularMatrix& a, const TriangularMatrix& b, int p);

// The fundamental theorem: (g,f) Phi = g Phi(f).
Series ftrm_apply(const RiordanPair& pair, const Series& phi);

// Group law (g,f)*(h,l) = (g h(f), l(f)).
RiordanPair multiply(const RiordanPair& a, const RiordanPair& b);

// (g,f)^{-1} = (1/g(fbar), fbar); requires a proper pair.
RiordanPair inverse(const RiordanPair& pair);

using ASequence = std::vector<int>;

// A = z/fbar; requires a proper pair normalized to f'(0) = 1.
// len < 0 means order-1 terms.
ASequence a_sequence(const RiordanPair& pair, int len = -1);

// Rebuild the triangle from column 0 and the A-recurrence
// l_{i+1,j+1} = a_0 l_{i,j} + a_1 l_{i,j+1} + ...
TriangularMatrix reconstruct_from_a(const Series& g_column, const ASequence& a, int n);

} // namespace riordan
