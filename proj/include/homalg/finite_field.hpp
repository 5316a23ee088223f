#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace homalg {

/// Element of a finite field: the base-p digits of the code are the
/// coefficients of a polynomial in the field generator (digit i = x^i).
/// 0 and 1 are the field's zero and one.
using FieldElement = std::uint32_t;

/// F_q for q = p^k <= 2^14, with exp/log tables for a fixed primitive
/// element.
///
/// Prime-power fields use the monic irreducible modulus of degree k whose
/// lower coefficients, read as a base-p number, are smallest.  The primitive
/// element is the smallest code of multiplicative order q - 1.
class FiniteField {
 public:
  /// Throws InvalidField unless q is a prime power with 2 <= q <= 2^14.
  explicit FiniteField(std::uint32_t q);

  std::uint32_t q() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  /// Coefficients c_0..c_{k-1} of the modulus x^k + sum c_i x^i.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  FieldElement generator() const { return generator_; }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const { return sub(0, a); }
  FieldElement mul(FieldElement a, FieldElement b) const;
  /// Throws std::domain_error on division by zero.
  FieldElement div(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const { return div(1, a); }
  FieldElement pow(FieldElement a, long e) const;

  /// Discrete log base generator(), in [0, q - 1); a must be nonzero.
  std::uint32_t log(FieldElement a) const;
  FieldElement exp(std::uint64_t i) const { return exp_[i % (q_ - 1)]; }

  std::string to_string(FieldElement a) const;

 private:
  std::uint32_t q_;
  std::uint32_t p_;
  std::uint32_t k_;
  std::vector<std::uint32_t> modulus_;
  FieldElement generator_ = 1;
  std::vector<FieldElement> exp_;
  std::vector<std::uint32_t> log_;
};

}  // namespace homalg
