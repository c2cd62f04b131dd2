#pragma once

#include <string>
#include <vector>

#include "riordan/graph.hpp"

namespace riordan {

// f = z g coefficientwise up to the common truncation.
bool is_bell(const RiordanPair& pair);

// Direct matrix check that <V_3> is null; requires a proper Bell pair
// at p = 3.
bool v3_is_null(const RiordanPair& pair, int n);

// <V_1> reproduces the order-|V_1| graph of the same pair and <V_2>,
// <V_3> are null, all checked on submatrices.  Requires a proper pair,
// p = 3.
bool i1_by_definition(const RiordanPair& pair, int n);

struct SignVerdict {
    bool ok = false;
    int sign = 0; // +1 or -1 when ok
};

// g' = sign * g^2 coefficientwise on indices 0..len-1 (len < 0 means
// the full available prefix).
SignVerdict i1_by_derivative(const RiordanPair& pair, int len = -1);

// Ternary A-sequence matches (1, s, 0, a_3, s*a_3, 0, ...) for
// s in {+1,-1}, checked on the first len terms.
SignVerdict i1_by_a_pattern(const RiordanPair& pair, int len = -1);

struct I1Report {
    bool by_definition = false;
    SignVerdict by_derivative;
    SignVerdict by_a_pattern;
    bool consistent = false;
    std::vector<int> a_prefix;
};

// All three verdicts over a matched coefficient window derived from n.
I1Report i1_report(const RiordanPair& pair, int n);

// Closed-form row n for an i1-decomposable Bell pair with the given
// derivative sign; n must be 3^i+1 (i>=1) or 2*3^i+1 (i>=0).
std::vector<int> last_row_formula(int n, int sign);

// Row n of the skew matrix, as a length-n vector.
std::vector<int> skew_row(const RiordanPair& pair, int n);

// Solve g = A(z g) for g (equivalently f = z A(f), g = f/z) by Newton
// iteration and return the Bell pair (g, zg) at the given truncation.
// The A-sequence may be shorter than order; missing terms are zero.
RiordanPair bell_pair_from_a(const std::vector<int>& a, Prime p, int order);

std::string i1_report_to_json(const I1Report& r);

} // namespace riordan
