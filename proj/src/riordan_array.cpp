#include "riordan/riordan_array.hpp"

namespace riordan {

RiordanPair make_pair(Series g, Series f) {
    if (g.p != f.p) throw precondition_error("RiordanPair: mismatched moduli");
    if (f.at(0) != 0) throw precondition_error("RiordanPair: f(0) != 0");
    return RiordanPair{std::move(g), std::move(f)};
}

RiordanPair identity_pair(Prime p, int order) {
    return make_pair(one_series(p, order), z_series(p, order));
}

bool is_proper(const RiordanPair& pair) {
    return pair.g.at(0) != 0 && pair.f.at(1) != 0;
}

TriangularMatrix leading_matrix(const RiordanPair& pair, int n) {
    if (pair.order() < n)
        throw precondition_error("leading_matrix: truncation " +
                                 std::to_string(pair.order()) + " < order " +
                                 std::to_string(n));
    TriangularMatrix m;
    m.n = n;
    m.e.assign(static_cast<size_t>(n) * n, 0);
    Series col = truncate(pair.g, n);
    Series f = truncate(pair.f, n);
    for (int j = 0; j < n; ++j) {
        for (int i = j; i < n; ++i) m.set(i, j, col.c[i]);
        if (j + 1 < n) col = mul(col, f);
    }
    return m;
}

TriangularMatrix matrix_product(const TriangularMatrix& a, const TriangularMatrix& b, int p) {
    if (a.n != b.n) throw precondition_error("matrix_product: size mismatch");
    TriangularMatrix r;
    r.n = a.n;
    r.e.assign(static_cast<size_t>(a.n) * a.n, 0);
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j <= i; ++j) {
            long long acc = 0;
            for (int k = j; k <= i; ++k)
                acc += static_cast<long long>(a.at(i, k)) * b.at(k, j);
            r.set(i, j, centered(acc, p));
        }
    return r;
}

Series ftrm_apply(const RiordanPair& pair, const Series& phi) {
    return mul(pair.g, compose(phi, pair.f));
}

RiordanPair multiply(const RiordanPair& a, const RiordanPair& b) {
    if (a.p() != b.p()) throw precondition_error("multiply: mismatched moduli");
    return make_pair(mul(a.g, compose(b.g, a.f)), compose(b.f, a.f));
}

RiordanPair inverse(const RiordanPair& pair) {
    if (!is_proper(pair)) throw precondition_error("inverse: pair is not proper");
    Series fbar = comp_inverse(pair.f);
    return make_pair(reciprocal(compose(pair.g, fbar)), fbar);
}

ASequence a_sequence(const RiordanPair& pair, int len) {
    if (!is_proper(pair)) throw precondition_error("a_sequence: pair is not proper");
    if (pair.f.at(1) != 1)
        throw precondition_error("a_sequence: requires f'(0) = 1");
    if (len < 0) len = pair.order() - 1;
    if (len < 1) throw precondition_error("a_sequence: length must be >= 1");
    Series fbar = comp_inverse(truncate(pair.f, pair.order()));
    Series a = reciprocal(shift_down(fbar, 1)); // z/fbar
    ASequence out(len, 0);
    for (int k = 0; k < len; ++k) out[k] = a.at(k);
    return out;
}

TriangularMatrix reconstruct_from_a(const Series& g_column, const ASequence& a, int n) {
    if (a.empty()) throw precondition_error("reconstruct_from_a: empty A-sequence");
    if (a[0] == 0) throw precondition_error("reconstruct_from_a: a_0 = 0");
    if (g_column.order() < n)
        throw precondition_error("reconstruct_from_a: column truncation too small");
    int p = g_column.p;
    TriangularMatrix m;
    m.n = n;
    m.e.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) m.set(i, 0, g_column.c[i]);
    for (int i = 0; i + 1 < n; ++i)
        for (int j = 0; j <= i; ++j) {
            long long acc = 0;
            for (int t = 0; j + t <= i && t < static_cast<int>(a.size()); ++t)
                acc += static_cast<long long>(a[t]) * m.at(i, j + t);
            m.set(i + 1, j + 1, centered(acc, p));
        }
    return m;
}

} // namespace riordan
