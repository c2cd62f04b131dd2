#include "riordan/series.hpp"

#include <algorithm>
#include <sstream>

namespace riordan {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void check_same_p(const Series& a, const Series& b) {
    if (a.p != b.p)
        throw precondition_error("mismatched moduli: " + std::to_string(a.p) +
                                 " vs " + std::to_string(b.p));
}

int common_order(const Series& a, const Series& b) {
    return std::min(a.order(), b.order());
}

} // namespace

Prime::Prime(int value) : value_(value) {
    if (value < 3 || value % 2 == 0 || !is_prime(value))
        throw precondition_error("modulus must be an odd prime >= 3, got " +
                                 std::to_string(value));
}

int centered(long long x, int p) {
    int r = static_cast<int>(((x % p) + p) % p);
    return r > p / 2 ? r - p : r;
}

int inv_mod(int a, int p) {
    int r = ((a % p) + p) % p;
    if (r == 0) throw precondition_error("attempt to invert 0 mod p");
    // Fermat; p is tiny.
    int result = 1, base = r, e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return centered(result, p);
}

Series make_series(const std::vector<long long>& coeffs, Prime p, int order) {
    if (order < 1) throw precondition_error("series order must be >= 1");
    Series s;
    s.p = p.value();
    s.c.assign(order, 0);
    for (int k = 0; k < order && k < static_cast<int>(coeffs.size()); ++k)
        s.c[k] = centered(coeffs[k], s.p);
    return s;
}

Series make_series(const std::vector<int>& coeffs, Prime p, int order) {
    return make_series(std::vector<long long>(coeffs.begin(), coeffs.end()), p,
                       order);
}

Series zero_series(Prime p, int order) { return make_series(std::vector<int>{}, p, order); }

Series one_series(Prime p, int order) { return make_series(std::vector<int>{1}, p, order); }

Series z_series(Prime p, int order) { return make_series(std::vector<int>{0, 1}, p, order); }

bool is_zero(const Series& s) {
    return std::all_of(s.c.begin(), s.c.end(), [](int x) { return x == 0; });
}

int valuation(const Series& s) {
    for (int k = 0; k < s.order(); ++k)
        if (s.c[k] != 0) return k;
    return s.order();
}

Series add(const Series& a, const Series& b) {
    check_same_p(a, b);
    Series r;
    r.p = a.p;
    int n = common_order(a, b);
    r.c.resize(n);
    for (int k = 0; k < n; ++k) r.c[k] = centered(a.c[k] + b.c[k], r.p);
    return r;
}

Series sub(const Series& a, const Series& b) { return add(a, negate(b)); }

Series negate(const Series& a) {
    Series r = a;
    for (int& x : r.c) x = -x;
    return r;
}

Series mul(const Series& a, const Series& b) {
    check_same_p(a, b);
    Series r;
    r.p = a.p;
    int n = common_order(a, b);
    r.c.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        if (a.c[i] == 0) continue;
        long long acc;
        for (int j = 0; i + j < n; ++j) {
            acc = static_cast<long long>(r.c[i + j]) + a.c[i] * b.c[j];
            r.c[i + j] = centered(acc, r.p);
        }
    }
    return r;
}

Series mul_scalar(const Series& a, long long k) {
    Series r = a;
    for (int& x : r.c) x = centered(x * k, r.p);
    return r;
}

Series power(const Series& a, int e) {
    if (e < 0) throw precondition_error("negative series power");
    Series r = one_series(Prime(a.p), a.order());
    for (int i = 0; i < e; ++i) r = mul(r, a);
    return r;
}

Series truncate(const Series& a, int order) {
    if (order < 1) throw precondition_error("series order must be >= 1");
    if (order > a.order())
        throw precondition_error("cannot extend truncation from " +
                                 std::to_string(a.order()) + " to " +
                                 std::to_string(order));
    Series r;
    r.p = a.p;
    r.c.assign(a.c.begin(), a.c.begin() + order);
    return r;
}

Series compose(const Series& g, const Series& f) {
    check_same_p(g, f);
    if (f.at(0) != 0) throw precondition_error("compose: f(0) != 0");
    int n = common_order(g, f);
    Series fn = truncate(f, n);
    // Horner: (((g_{n-1}) f + g_{n-2}) f + ...) + g_0
    Series r = zero_series(Prime(g.p), n);
    for (int k = n - 1; k >= 0; --k) {
        r = mul(r, fn);
        r.c[0] = centered(r.c[0] + g.c[k], r.p);
    }
    return r;
}

Series comp_inverse(const Series& f) {
    if (f.at(0) != 0) throw precondition_error("comp_inverse: f(0) != 0");
    if (f.order() < 2 || f.c[1] == 0)
        throw precondition_error("comp_inverse: f'(0) not invertible");
    int n = f.order();
    int inv1 = inv_mod(f.c[1], f.p);
    Series fbar = zero_series(Prime(f.p), n);
    fbar.c[1] = centered(inv1, f.p);
    // Solve [z^k] f(fbar) = 0 for fbar_k ascending; the unknown enters
    // linearly with coefficient f_1.
    for (int k = 2; k < n; ++k) {
        Series partial = truncate(fbar, k + 1);
        int residue = compose(truncate(f, k + 1), partial).c[k];
        fbar.c[k] = centered(-static_cast<long long>(residue) * inv1, f.p);
    }
    return fbar;
}

Series reciprocal(const Series& a) {
    if (a.at(0) == 0) throw precondition_error("reciprocal: a(0) = 0");
    int n = a.order();
    int inv0 = inv_mod(a.c[0], a.p);
    Series r = zero_series(Prime(a.p), n);
    r.c[0] = inv0;
    for (int k = 1; k < n; ++k) {
        long long acc = 0;
        for (int t = 1; t <= k; ++t) acc += static_cast<long long>(a.at(t)) * r.c[k - t];
        r.c[k] = centered(-acc * inv0, a.p);
    }
    return r;
}

Series derivative(const Series& h) {
    int n = std::max(h.order() - 1, 1);
    Series r = zero_series(Prime(h.p), n);
    for (int k = 0; k + 1 < h.order(); ++k)
        r.c[k] = centered(static_cast<long long>(k + 1) * h.c[k + 1], h.p);
    return r;
}

Series sieve(const Series& h) {
    int n = std::max(h.order() / h.p, 1);
    Series r = zero_series(Prime(h.p), n);
    for (int k = 0; k < n; ++k) r.c[k] = h.at(h.p * k + h.p - 1);
    return r;
}

Series frobenius_pow(const Series& g, const Series& f, int k) {
    if (k < 0) throw precondition_error("frobenius_pow: negative exponent");
    if (f.at(0) != 0) throw precondition_error("frobenius_pow: f(0) != 0");
    long long step = 1;
    for (int i = 0; i < k; ++i) step *= g.p;
    int n = common_order(g, f);
    Series spread = zero_series(Prime(g.p), n);
    for (long long j = 0; j * step < n; ++j) spread.c[j * step] = g.at(static_cast<int>(j));
    return compose(spread, truncate(f, n));
}

Series shift_up(const Series& a, int k) {
    Series r = zero_series(Prime(a.p), a.order() + k);
    for (int i = 0; i < a.order(); ++i) r.c[i + k] = a.c[i];
    return r;
}

Series shift_down(const Series& a, int k) {
    if (k >= a.order())
        throw precondition_error("shift_down: shift exceeds truncation");
    for (int i = 0; i < k; ++i)
        if (a.c[i] != 0)
            throw precondition_error("shift_down: nonzero coefficient below z^" +
                                     std::to_string(k));
    Series r;
    r.p = a.p;
    r.c.assign(a.c.begin() + k, a.c.end());
    return r;
}

namespace {

Series catalan_series(Prime p, int order) {
    // C = 1 + zC^2 via the convolution recurrence, reduced as we go.
    Series c = zero_series(p, order);
    c.c[0] = 1;
    for (int n = 1; n < order; ++n) {
        long long acc = 0;
        for (int i = 0; i < n; ++i) acc += static_cast<long long>(c.c[i]) * c.c[n - 1 - i];
        c.c[n] = centered(acc, c.p);
    }
    return c;
}

Series geometric_series(Prime p, int order) {
    // 1/(1-z)
    Series s = zero_series(p, order);
    for (int& x : s.c) x = 1;
    return s;
}

} // namespace

Series parse_series(const std::string& spec, Prime p, int order) {
    if (spec == "one") return one_series(p, order);
    if (spec == "z") return z_series(p, order);
    if (spec == "zero") return zero_series(p, order);
    if (spec == "pascal-g") return geometric_series(p, order);
    if (spec == "pascal-f") return truncate(shift_up(geometric_series(p, order), 1), order);
    if (spec == "catalan") return catalan_series(p, order);
    if (spec == "catalan-f") return truncate(shift_up(catalan_series(p, order), 1), order);
    if (spec.rfind("coeffs:", 0) == 0) {
        std::vector<long long> coeffs;
        std::stringstream ss(spec.substr(7));
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                size_t pos = 0;
                long long v = std::stoll(tok, &pos);
                if (pos != tok.size()) throw std::invalid_argument(tok);
                coeffs.push_back(v);
            } catch (const std::exception&) {
                throw parse_error("bad coefficient '" + tok + "' in series literal");
            }
        }
        if (coeffs.empty()) throw parse_error("empty coefficient list in series literal");
        return make_series(coeffs, p, order);
    }
    throw parse_error("unknown series spec '" + spec + "'");
}

} // namespace riordan
