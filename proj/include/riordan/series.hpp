#pragma once

#include <string>
#include <vector>

#include "riordan/errors.hpp"

namespace riordan {

/// A small odd prime modulus.  All arithmetic in this library is exact
/// mod p with coefficients kept in the centered range {-p/2,...,p/2}.
class Prime {
public:
    explicit Prime(int value);
    int value() const { return value_; }
    int half() const { return value_ / 2; }

private:
    int value_;
};

// Reduce x into the centered residue range {-p/2,...,p/2}.
int centered(long long x, int p);

// Multiplicative inverse of a nonzero residue mod p.
int inv_mod(int a, int p);

/// Truncated formal power series over Z_p.  Stores coefficients
/// c[0..order-1] as centered residues.  All operations are truncation
/// stable: output coefficient k depends only on input coefficients of
/// index <= k.  Values are immutable by convention; every operation
/// returns a fresh series.
struct Series {
    int p = 3;
    std::vector<int> c;

    int order() const { return static_cast<int>(c.size()); }
    int at(int k) const { return k < order() ? c[k] : 0; }
};

Series make_series(const std::vector<long long>& coeffs, Prime p, int order);
Series make_series(const std::vector<int>& coeffs, Prime p, int order);

Series zero_series(Prime p, int order);
Series one_series(Prime p, int order);
Series z_series(Prime p, int order);

bool is_zero(const Series& s);
// Index of the first nonzero coefficient, or order() if none.
int valuation(const Series& s);

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series negate(const Series& a);
Series mul(const Series& a, const Series& b);
Series mul_scalar(const Series& a, long long k);
// a^e by repeated multiplication at the order of a.
Series power(const Series& a, int e);
Series truncate(const Series& a, int order);

// g(f), requires f(0)=0.  Horner accumulation of powers of f.
Series compose(const Series& g, const Series& f);

// Compositional inverse: f(0)=0, f'(0) invertible.  Triangular
// coefficient recurrence, exact mod p.
Series comp_inverse(const Series& f);

// Multiplicative reciprocal: requires a(0) invertible.
Series reciprocal(const Series& a);

// d/dz; output order is max(order-1, 1).
Series derivative(const Series& h);

// h -> sum_k h_{pk+p-1} z^k, the mod-p normal form of substituting
// z^{1/p} into -d^{p-1}/dz^{p-1} h.  Note the sign: this is the
// NEGATION of the raw (p-1)-fold derivative identity, chosen so the
// result feeds the block-generator formulas directly.  Output order is
// max(order/p, 1).
Series sieve(const Series& h);

// g(f^{p^k}) computed by spreading the coefficients of g onto powers of
// z^{p^k} and composing once; equal to g^{p^k}(f) mod p.
Series frobenius_pow(const Series& g, const Series& f, int k);

// Multiply by z^k (order grows by k) / divide by z^k (requires the
// first k coefficients to vanish).
Series shift_up(const Series& a, int k);
Series shift_down(const Series& a, int k);

// Series literal syntax: "coeffs:c0,c1,..." or a preset name among
// pascal-g, pascal-f, catalan, catalan-f, one, z, zero.
Series parse_series(const std::string& spec, Prime p, int order);

} // namespace riordan
