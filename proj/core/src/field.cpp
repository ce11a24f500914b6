#include "l21/field.hpp"

#include <algorithm>

namespace l21 {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Coefficient vectors are little-endian: poly[i] is the coefficient of x^i.
using Poly = std::vector<int>;

Poly decode(int value, int p, int len) {
    Poly out(static_cast<size_t>(len), 0);
    for (int i = 0; i < len && value > 0; ++i) {
        out[i] = value % p;
        value /= p;
    }
    return out;
}

int poly_degree(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

// Remainder of a modulo m over GF(p); m must be monic.
Poly poly_mod(Poly a, const Poly& m, int p) {
    int dm = poly_degree(m);
    for (int d = poly_degree(a); d >= dm; d = poly_degree(a)) {
        int c = a[d];
        for (int i = 0; i <= dm; ++i) {
            int& slot = a[d - dm + i];
            slot = ((slot - c * m[i]) % p + p) % p;
        }
    }
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    Poly out(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    return out;
}

bool divides(const Poly& d, const Poly& a, int p) {
    return poly_degree(poly_mod(a, d, p)) < 0;
}

// Irreducible over GF(p): no monic divisor of degree 1..deg/2.
bool is_irreducible(const Poly& a, int p) {
    int deg = poly_degree(a);
    for (int dd = 1; 2 * dd <= deg; ++dd) {
        int count = 1;
        for (int i = 0; i < dd; ++i) count *= p;  // p^dd monic candidates
        for (int enc = 0; enc < count; ++enc) {
            Poly cand = decode(enc, p, dd + 1);
            cand[dd] = 1;
            if (divides(cand, a, p)) return false;
        }
    }
    return true;
}

}  // namespace

FiniteField::FiniteField(int p, int k) : p_(p), k_(k) {
    if (!is_prime(p)) throw input_error(std::to_string(p) + " is not prime");
    if (k < 1) throw input_error("extension degree must be at least 1");
    long long q = 1;
    for (int i = 0; i < k; ++i) {
        q *= p;
        if (q > 256) throw capability_error("field order exceeds 256");
    }
    q_ = static_cast<int>(q);

    // Smallest encoding of an irreducible monic degree-k polynomial; the
    // leading coefficient is implicit, lower coefficients enumerate 0..p^k-1.
    for (int enc = 0; enc < q_; ++enc) {
        Poly cand = decode(enc, p_, k_ + 1);
        cand[k_] = 1;
        if (is_irreducible(cand, p_)) {
            modulus_ = cand;
            break;
        }
    }
    if (modulus_.empty()) throw internal_error("no irreducible modulus found");
}

int FiniteField::check(int a) const {
    if (a < 0 || a >= q_) throw input_error("element out of field range");
    return a;
}

int FiniteField::add(int a, int b) const {
    check(a);
    check(b);
    int out = 0;
    int scale = 1;
    for (int i = 0; i < k_; ++i) {
        out += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return out;
}

int FiniteField::neg(int a) const {
    check(a);
    int out = 0;
    int scale = 1;
    for (int i = 0; i < k_; ++i) {
        out += ((p_ - a % p_) % p_) * scale;
        a /= p_;
        scale *= p_;
    }
    return out;
}

int FiniteField::sub(int a, int b) const { return add(a, neg(b)); }

int FiniteField::mul(int a, int b) const {
    check(a);
    check(b);
    Poly prod = poly_mod(poly_mul(decode(a, p_, k_), decode(b, p_, k_), p_),
                         modulus_, p_);
    int out = 0;
    for (int i = k_ - 1; i >= 0; --i) out = out * p_ + prod[i];
    return out;
}

int FiniteField::inv(int a) const {
    check(a);
    if (a == 0) throw domain_error("inverse of zero");
    for (int b = 1; b < q_; ++b)
        if (mul(a, b) == 1) return b;
    throw internal_error("element without inverse");
}

std::vector<int> FiniteField::coefficients(int a) const {
    check(a);
    return decode(a, p_, k_);
}

int FiniteField::from_coefficients(const std::vector<int>& coeffs) const {
    if (static_cast<int>(coeffs.size()) != k_)
        throw input_error("coefficient list must have length k");
    int out = 0;
    for (int i = k_ - 1; i >= 0; --i) {
        if (coeffs[i] < 0 || coeffs[i] >= p_)
            throw input_error("coefficient out of range");
        out = out * p_ + coeffs[i];
    }
    return out;
}

}  // namespace l21
