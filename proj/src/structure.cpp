#include "riordan/structure.hpp"

#include <json.hpp>

namespace riordan {

Mat zero_mat(int rows, int cols) {
    Mat m;
    m.rows = rows;
    m.cols = cols;
    m.a.assign(static_cast<size_t>(rows) * cols, 0);
    return m;
}

std::vector<std::vector<int>> residue_parts(int n, int p) {
    std::vector<std::vector<int>> parts(p);
    for (int i = 1; i <= p; ++i)
        for (int j = i; j <= n; j += p) parts[i - 1].push_back(j);
    return parts;
}

int part_size(int n, int p, int i) { return (n - i) / p + 1; }

int a_gap(const RiordanPair& pair) {
    ASequence a = a_sequence(pair);
    if (a[0] != 1) throw precondition_error("a_gap: a_0 != 1");
    for (size_t k = 1; k < a.size(); ++k)
        if (a[k] != 0) return static_cast<int>(k) - 1;
    throw precondition_error("a_gap: A-sequence has no nonzero tail (f = z up to truncation)");
}

std::vector<std::pair<int, int>> cognate_set(const RiordanPair& pair, int n,
                                             int i, int j, bool strict) {
    if (i == j) throw precondition_error("cognate_set: i == j");
    if (i < 1 || i > n || j < 1 || j > n)
        throw precondition_error("cognate_set: vertex out of range");
    int gap = a_gap(pair);
    int p = pair.p();
    int d = std::abs(i - j);
    long long ps = 1;
    while (true) {
        long long q = (d - 1) / ps;
        if ((strict ? p * q : q) <= gap) break;
        ps *= p;
    }
    std::vector<std::pair<int, int>> out;
    for (long long m = -(n / ps) - 1; m <= n / ps + 1; ++m) {
        long long a = i + m * ps, b = j + m * ps;
        if (a >= 1 && a <= n && b >= 1 && b <= n)
            out.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    return out;
}

bool check_fractal(const RiordanPair& pair, int n, int s, int k, int alpha) {
    int gap = a_gap(pair);
    if (k < 0 || k > gap)
        throw precondition_error("check_fractal: k outside 0..gap");
    if (s < 0 || alpha < 1)
        throw precondition_error("check_fractal: need s >= 0 and alpha >= 1");
    long long w = k + 1;
    for (int t = 0; t < s; ++t) w *= pair.p();
    if ((alpha + 1) * w + 1 > n)
        throw precondition_error("check_fractal: window exceeds graph order");
    SkewAdjacency full = skew_from_pair(pair, n);
    auto window = [&](long long lo, long long hi) {
        std::vector<int> v;
        for (long long u = lo; u <= hi; ++u) v.push_back(static_cast<int>(u));
        return induced_skew(full, v);
    };
    bool closed = window(1, w + 1) == window(alpha * w + 1, (alpha + 1) * w + 1);
    bool half = window(1, w) == window(alpha * w + 1, (alpha + 1) * w);
    return closed && half;
}

BlockGenerators block_generators(const RiordanPair& pair, int i, int j) {
    int p = pair.p();
    if (i < 1 || j < i || j > p)
        throw precondition_error("block_generators: need 1 <= i <= j <= p");
    if (pair.f.at(1) == 0)
        throw precondition_error("block_generators: f'(0) = 0");
    const Series& g = pair.g;
    const Series& f = pair.f;
    Series diag_g = sieve(shift_down(mul(g, power(f, i - 1)), i - 1));
    Series l_g = sieve(shift_down(mul(g, power(f, j - 1)), i - 1));
    Series u_g = sieve(shift_up(mul(g, power(f, i - 1)), p + 1 - j));
    return BlockGenerators{make_pair(diag_g, f), make_pair(l_g, f), make_pair(u_g, f)};
}

namespace {

// Rectangular leading matrix [z^row] h f^col, 0-based.
Mat rect_leading(const Series& h, const Series& f, int rows, int cols) {
    Mat m = zero_mat(rows, cols);
    Series col = h;
    for (int v = 0; v < cols; ++v) {
        for (int r = 0; r < rows && r < col.order(); ++r) m.set(r, v, col.c[r]);
        if (v + 1 < cols) col = mul(col, f);
    }
    return m;
}

Mat formula_off_block(const RiordanPair& pair, const BlockGenerators& gen,
                      int li, int lj) {
    // L is strictly lower: row u, col v gets [z^{u-2}] sL f^{v-1}
    // (the z factor of the theorem shifts rows down by one).
    Mat lmat = zero_mat(li, lj);
    {
        Mat body = rect_leading(gen.L.g, pair.f, std::max(li - 1, 0), lj);
        for (int u = 1; u < li; ++u)
            for (int v = 0; v < lj; ++v) lmat.set(u, v, body.at(u - 1, v));
    }
    Mat umat = rect_leading(gen.U.g, pair.f, lj, li);
    Mat b = zero_mat(li, lj);
    for (int u = 0; u < li; ++u)
        for (int v = 0; v < lj; ++v)
            b.set(u, v, centered(lmat.at(u, v) - umat.at(v, u), pair.p()));
    return b;
}

Mat direct_off_block(const SkewAdjacency& s, const std::vector<int>& vi,
                     const std::vector<int>& vj) {
    Mat m = zero_mat(static_cast<int>(vi.size()), static_cast<int>(vj.size()));
    for (int u = 0; u < m.rows; ++u)
        for (int v = 0; v < m.cols; ++v) m.set(u, v, s.at(vi[u], vj[v]));
    return m;
}

} // namespace

Decomposition decompose(const RiordanPair& pair, int n) {
    int p = pair.p();
    if (n < p) throw precondition_error("decompose: order must be >= p");
    if (pair.order() < n - 1)
        throw precondition_error("decompose: truncation too small for order " +
                                 std::to_string(n));
    Decomposition d;
    d.n = n;
    d.p = p;
    d.parts = residue_parts(n, p);
    for (const auto& part : d.parts)
        d.perm.insert(d.perm.end(), part.begin(), part.end());

    SkewAdjacency s = skew_from_pair(pair, n);
    d.permuted = zero_skew(n, p);
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v < u; ++v)
            d.permuted.set(u, v, s.at(d.perm[u - 1], d.perm[v - 1]));

    for (int i = 1; i <= p; ++i) d.diag_blocks.push_back(induced_skew(s, d.parts[i - 1]));
    d.off_blocks.assign(p, std::vector<Mat>(p));
    for (int i = 1; i <= p; ++i)
        for (int j = i + 1; j <= p; ++j)
            d.off_blocks[i - 1][j - 1] = direct_off_block(s, d.parts[i - 1], d.parts[j - 1]);

    // The generator formulas divide by z^{i-1} for i up to p, so they
    // need one coefficient beyond what the direct route uses when n = p.
    d.has_formula = pair.f.at(1) != 0 && pair.order() >= p;
    if (d.has_formula) {
        for (int i = 1; i <= p; ++i) {
            BlockGenerators gen = block_generators(pair, i, i);
            d.diag_pairs.push_back(gen.diag);
            int li = part_size(n, p, i);
            SkewAdjacency x = skew_from_pair(gen.diag, li);
            if (!(x == d.diag_blocks[i - 1]))
                throw consistency_error("decompose: formula X_" + std::to_string(i) +
                                        " disagrees with direct submatrix");
        }
        for (int i = 1; i <= p; ++i)
            for (int j = i + 1; j <= p; ++j) {
                BlockGenerators gen = block_generators(pair, i, j);
                Mat b = formula_off_block(pair, gen, part_size(n, p, i), part_size(n, p, j));
                if (!(b == d.off_blocks[i - 1][j - 1]))
                    throw consistency_error("decompose: formula B_" + std::to_string(i) +
                                            "," + std::to_string(j) +
                                            " disagrees with direct submatrix");
            }
        d.formula_matches_direct = true;
    }
    return d;
}

SkewAdjacency assemble_blocks(const Decomposition& d) {
    SkewAdjacency s = zero_skew(d.n, d.p);
    std::vector<int> offset(d.p + 1, 0);
    for (int i = 1; i <= d.p; ++i)
        offset[i] = offset[i - 1] + static_cast<int>(d.parts[i - 1].size());
    for (int i = 1; i <= d.p; ++i) {
        const SkewAdjacency& x = d.diag_blocks[i - 1];
        for (int u = 1; u <= x.n; ++u)
            for (int v = 1; v < u; ++v)
                s.set(offset[i - 1] + u, offset[i - 1] + v, x.at(u, v));
        for (int j = i + 1; j <= d.p; ++j) {
            const Mat& b = d.off_blocks[i - 1][j - 1];
            for (int u = 0; u < b.rows; ++u)
                for (int v = 0; v < b.cols; ++v)
                    s.set(offset[j - 1] + v + 1, offset[i - 1] + u + 1, -b.at(u, v));
        }
    }
    return s;
}

PartReport part_predicates(const RiordanPair& pair, int n) {
    int p = pair.p();
    if (n < p) throw precondition_error("part_predicates: order must be >= p");
    if (pair.order() < n - 1)
        throw precondition_error("part_predicates: truncation too small");
    PartReport r;
    r.n = n;
    r.p = p;
    auto parts = residue_parts(n, p);
    SkewAdjacency s = skew_from_pair(pair, n);

    std::vector<Series> cols; // g f^{i-1}, i = 1..p
    cols.push_back(pair.g);
    for (int i = 2; i <= p; ++i) cols.push_back(mul(cols.back(), pair.f));

    auto coeff = [&](int i, int idx) { return cols[i - 1].at(idx); };

    r.null_coeff.resize(p);
    r.null_matrix.resize(p);
    for (int i = 1; i <= p; ++i) {
        int li = part_size(n, p, i);
        bool zero = true;
        for (int m = 1; m <= li - 1; ++m)
            if (coeff(i, p * m + i - 2) != 0) zero = false;
        r.null_coeff[i - 1] = zero;
        r.null_matrix[i - 1] = is_zero_matrix(induced_skew(s, parts[i - 1]));
    }

    r.iso_coeff.assign(p, std::vector<bool>(p, false));
    r.blocks_equal.assign(p, std::vector<bool>(p, false));
    r.noarc_coeff.assign(p, std::vector<bool>(p, false));
    r.noarc_matrix.assign(p, std::vector<bool>(p, false));
    for (int i = 1; i <= p; ++i)
        for (int j = i + 1; j <= p; ++j) {
            int li = part_size(n, p, i), lj = part_size(n, p, j);
            int lm = std::min(li, lj);
            bool eq = true;
            for (int m = 1; m <= lm - 1; ++m)
                if (coeff(i, p * m + i - 2) != coeff(j, p * m + j - 2)) eq = false;
            r.iso_coeff[i - 1][j - 1] = eq;
            SkewAdjacency xi = induced_skew(s, parts[i - 1]);
            SkewAdjacency xj = induced_skew(s, parts[j - 1]);
            std::vector<int> head(lm);
            for (int t = 0; t < lm; ++t) head[t] = t + 1;
            r.blocks_equal[i - 1][j - 1] =
                induced_skew(xi, head) == induced_skew(xj, head);

            bool noarc = true;
            for (int m = 1; m <= li - 1; ++m)
                if (coeff(j, p * m + i - 2) != 0) noarc = false;
            for (int m = 1; m <= lj; ++m)
                if (coeff(i, p * (m - 1) + j - 2) != 0) noarc = false;
            r.noarc_coeff[i - 1][j - 1] = noarc;
            bool mat_noarc = true;
            for (int u : parts[i - 1])
                for (int v : parts[j - 1])
                    if (s.at(u, v) != 0) mat_noarc = false;
            r.noarc_matrix[i - 1][j - 1] = mat_noarc;
        }

    r.partite_coeff = true;
    r.partite_matrix = true;
    for (int i = 0; i < p; ++i) {
        r.partite_coeff = r.partite_coeff && r.null_coeff[i];
        r.partite_matrix = r.partite_matrix && r.null_matrix[i];
    }

    r.consistent = r.partite_coeff == r.partite_matrix;
    for (int i = 0; i < p; ++i)
        r.consistent = r.consistent && r.null_coeff[i] == r.null_matrix[i];
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) {
            r.consistent = r.consistent && r.noarc_coeff[i][j] == r.noarc_matrix[i][j];
            r.consistent = r.consistent && r.iso_coeff[i][j] == r.blocks_equal[i][j];
        }
    return r;
}

std::string decomposition_to_json(const Decomposition& d) {
    nlohmann::json j;
    j["n"] = d.n;
    j["p"] = d.p;
    j["parts"] = d.parts;
    j["permutation"] = d.perm;
    j["formula_matches_direct"] = d.formula_matches_direct;
    j["blocks"] = nlohmann::json::array();
    for (int i = 1; i <= d.p; ++i) {
        nlohmann::json block;
        block["part"] = i;
        block["order"] = d.diag_blocks[i - 1].n;
        if (d.has_formula) {
            block["generator_g"] = d.diag_pairs[i - 1].g.c;
        }
        j["blocks"].push_back(block);
    }
    j["off_blocks"] = nlohmann::json::array();
    for (int i = 1; i <= d.p; ++i)
        for (int k = i + 1; k <= d.p; ++k) {
            nlohmann::json block;
            block["i"] = i;
            block["j"] = k;
            const Mat& b = d.off_blocks[i - 1][k - 1];
            block["rows"] = b.rows;
            block["cols"] = b.cols;
            block["entries"] = b.a;
            j["off_blocks"].push_back(block);
        }
    return j.dump();
}

std::string part_report_to_json(const PartReport& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["p"] = r.p;
    j["null_coeff"] = r.null_coeff;
    j["null_matrix"] = r.null_matrix;
    j["partite_coeff"] = r.partite_coeff;
    j["partite_matrix"] = r.partite_matrix;
    j["consistent"] = r.consistent;
    auto pairs = nlohmann::json::array();
    for (int i = 1; i <= r.p; ++i)
        for (int k = i + 1; k <= r.p; ++k) {
            nlohmann::json e;
            e["i"] = i;
            e["j"] = k;
            e["iso_coeff"] = static_cast<bool>(r.iso_coeff[i - 1][k - 1]);
            e["blocks_equal"] = static_cast<bool>(r.blocks_equal[i - 1][k - 1]);
            e["noarc_coeff"] = static_cast<bool>(r.noarc_coeff[i - 1][k - 1]);
            e["noarc_matrix"] = static_cast<bool>(r.noarc_matrix[i - 1][k - 1]);
            pairs.push_back(e);
        }
    j["pairs"] = pairs;
    return j.dump();
}

} // namespace riordan
