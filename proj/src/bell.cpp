#include "riordan/bell.hpp"

#include <json.hpp>

#include "riordan/structure.hpp"

namespace riordan {

bool is_bell(const RiordanPair& pair) {
    int n = std::min(pair.f.order(), pair.g.order() + 1);
    for (int k = 0; k < n; ++k)
        if (pair.f.at(k) != (k >= 1 ? pair.g.at(k - 1) : 0)) return false;
    return true;
}

namespace {

void require_p3(const RiordanPair& pair, const char* who) {
    if (pair.p() != 3)
        throw precondition_error(std::string(who) + ": defined for p = 3 only");
}

} // namespace

bool v3_is_null(const RiordanPair& pair, int n) {
    require_p3(pair, "v3_is_null");
    if (!is_bell(pair) || !is_proper(pair))
        throw precondition_error("v3_is_null: requires a proper Bell pair");
    if (n < 3) throw precondition_error("v3_is_null: order must be >= 3");
    SkewAdjacency s = skew_from_pair(pair, n);
    return is_zero_matrix(induced_skew(s, residue_parts(n, 3)[2]));
}

bool i1_by_definition(const RiordanPair& pair, int n) {
    require_p3(pair, "i1_by_definition");
    if (!is_proper(pair))
        throw precondition_error("i1_by_definition: pair is not proper");
    if (n < 3) throw precondition_error("i1_by_definition: order must be >= 3");
    SkewAdjacency s = skew_from_pair(pair, n);
    auto parts = residue_parts(n, 3);
    // |V_1| = floor((n-1)/3)+1; the subgraph must reproduce the same
    // family at that order with labels intact, not merely up to
    // isomorphism.
    SkewAdjacency v1 = induced_skew(s, parts[0]);
    if (!(v1 == skew_from_pair(pair, v1.n))) return false;
    return is_zero_matrix(induced_skew(s, parts[1])) &&
           is_zero_matrix(induced_skew(s, parts[2]));
}

SignVerdict i1_by_derivative(const RiordanPair& pair, int len) {
    Series dg = derivative(pair.g);
    Series g2 = mul(pair.g, pair.g);
    int limit = std::min(dg.order(), g2.order());
    if (len >= 0) limit = std::min(limit, len);
    for (int sign : {1, -1}) {
        bool ok = true;
        for (int k = 0; k < limit && ok; ++k)
            if (dg.at(k) != centered(sign * g2.at(k), pair.p())) ok = false;
        if (ok) return {true, sign};
    }
    return {false, 0};
}

SignVerdict i1_by_a_pattern(const RiordanPair& pair, int len) {
    ASequence a = a_sequence(pair, len);
    if (a[0] != 1) return {false, 0};
    for (int sign : {1, -1}) {
        bool ok = a.size() < 2 || a[1] == sign;
        for (size_t t = 0; t < a.size() && ok; ++t) {
            size_t r = t % 3;
            if (r == 1 && a[t] != centered(sign * a[t - 1], pair.p())) ok = false;
            if (r == 2 && a[t] != 0) ok = false;
        }
        if (ok) return {true, sign};
    }
    return {false, 0};
}

I1Report i1_report(const RiordanPair& pair, int n) {
    require_p3(pair, "i1_report");
    if (!is_bell(pair) || !is_proper(pair))
        throw precondition_error("i1_report: requires a proper Bell pair");
    if (pair.f.at(1) != 1)
        throw precondition_error("i1_report: A-sequence route requires f'(0) = 1");
    I1Report r;
    r.by_definition = i1_by_definition(pair, n);
    // The derivative and A-sequence checks look at the coefficient
    // window the order-n matrix actually determines.
    r.by_derivative = i1_by_derivative(pair, std::max(1, n - 3));
    r.by_a_pattern = i1_by_a_pattern(pair, std::max(3, std::min(n - 3, pair.order() - 1)));
    r.consistent = r.by_definition == r.by_derivative.ok &&
                   r.by_definition == r.by_a_pattern.ok &&
                   (!r.by_definition || r.by_derivative.sign == r.by_a_pattern.sign);
    ASequence a = a_sequence(pair, std::min(9, pair.order() - 1));
    r.a_prefix.assign(a.begin(), a.end());
    return r;
}

std::vector<int> last_row_formula(int n, int sign) {
    if (sign != 1 && sign != -1)
        throw precondition_error("last_row_formula: sign must be +1 or -1");
    auto pow3_exp = [](long long v) {
        int e = 0;
        while (v > 1 && v % 3 == 0) { v /= 3; ++e; }
        return v == 1 ? e : -1;
    };
    std::vector<int> row(n, 0);
    int e = pow3_exp(n - 1);
    if (e >= 1) {
        // n = 3^i + 1
        for (int k = 1; k < n; ++k) row[k - 1] = sign == 1 ? (k % 2 ? 1 : -1) : 1;
        return row;
    }
    if ((n - 1) % 2 == 0 && pow3_exp((n - 1) / 2) >= 0) {
        // n = 2*3^i + 1, two blocks of length 3^i
        int b = (n - 1) / 2;
        for (int k = 1; k < n; ++k) {
            int pos = (k - 1) % b;
            if (sign == 1) row[k - 1] = pos % 2 ? -1 : 1;
            else row[k - 1] = k <= b ? -1 : 1;
        }
        return row;
    }
    throw precondition_error("last_row_formula: n is neither 3^i+1 nor 2*3^i+1");
}

std::vector<int> skew_row(const RiordanPair& pair, int n) {
    if (n >= 2 && pair.order() < n - 1)
        throw precondition_error("skew_row: truncation too small");
    std::vector<int> row(n, 0);
    if (n == 1) return row;
    Series col = truncate(pair.g, n - 1);
    Series f = truncate(pair.f, n - 1);
    for (int k = 1; k < n; ++k) {
        row[k - 1] = col.c[n - 2];
        if (k + 1 < n) col = mul(col, f);
    }
    return row;
}

RiordanPair bell_pair_from_a(const std::vector<int>& a, Prime p, int order) {
    if (a.empty() || a[0] == 0)
        throw precondition_error("bell_pair_from_a: need a_0 != 0");
    int target = order + 1; // build f to one extra coefficient, then g = f/z
    // One spare coefficient so the derivative below still has `target`
    // terms.
    Series as = make_series(a, p, target + 1);
    Series das = derivative(as);

    Series f = zero_series(p, 2);
    f.c[1] = as.c[0];
    int m = 2;
    while (m < target) {
        int m2 = std::min(2 * m, target);
        f.c.resize(m2, 0);
        Series af = compose(truncate(as, m2), f);
        Series num = sub(f, truncate(shift_up(af, 1), m2));
        Series daf = compose(truncate(das, m2), f);
        Series den = sub(one_series(p, m2), truncate(shift_up(daf, 1), m2));
        f = sub(f, mul(num, reciprocal(den)));
        m = m2;
    }
    Series check = truncate(shift_up(compose(truncate(as, target), f), 1), target);
    if (!(sub(f, check).c == zero_series(p, target).c))
        throw consistency_error("bell_pair_from_a: Newton iterate does not satisfy f = zA(f)");
    return make_pair(shift_down(f, 1), truncate(f, order));
}

std::string i1_report_to_json(const I1Report& r) {
    nlohmann::json j;
    j["by_definition"] = r.by_definition;
    j["by_derivative"] = {{"ok", r.by_derivative.ok}, {"sign", r.by_derivative.sign}};
    j["by_a_pattern"] = {{"ok", r.by_a_pattern.ok}, {"sign", r.by_a_pattern.sign}};
    j["consistent"] = r.consistent;
    j["a_prefix"] = r.a_prefix;
    return j.dump();
}

} // namespace riordan
