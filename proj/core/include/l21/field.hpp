#ifndef L21_FIELD_HPP
#define L21_FIELD_HPP

#include <vector>

#include "l21/errors.hpp"

namespace l21 {

/// Arithmetic in GF(p^k) for p prime and p^k <= 256.
///
/// Elements are encoded as integers in [0, p^k): the base-p digits of the
/// encoding are the polynomial-basis coefficients, constant term least
/// significant. The modulus is the irreducible monic degree-k polynomial
/// with the smallest such encoding, found by exhaustive search, so two runs
/// (or two implementations following the same rule) build identical fields.
class FiniteField {
public:
    FiniteField(int p, int k);

    int characteristic() const noexcept { return p_; }
    int degree() const noexcept { return k_; }
    int order() const noexcept { return q_; }

    /// Modulus coefficients, length k+1, leading coefficient 1.
    const std::vector<int>& modulus() const noexcept { return modulus_; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    /// Multiplicative inverse; domain_error on 0.
    int inv(int a) const;

    /// Polynomial-basis coefficients of an element, length k.
    std::vector<int> coefficients(int a) const;
    int from_coefficients(const std::vector<int>& coeffs) const;

private:
    int check(int a) const;

    int p_;
    int k_;
    int q_;
    std::vector<int> modulus_;
};

}  // namespace l21

#endif
