#pragma once

// Dense integer polynomials. Coefficients are stored ascending by degree;
// the leading coefficient is nonzero unless the polynomial is zero.

#include <span>
#include <string>
#include <vector>

#include "arith.hpp"

namespace genarr {

class IntPoly {
 public:
  IntPoly() = default;  // the zero polynomial

  static IntPoly from_ascending(std::vector<BigInt> coeffs);
  static IntPoly monomial(int degree, BigInt coeff = BigInt(1));
  static IntPoly constant(BigInt c);

  // prod (t - roots[i]); used by the Boolean/braid cross-checks.
  static IntPoly from_roots(std::span<const long> roots);

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coeff(int i) const;
  const std::vector<BigInt>& coeffs_ascending() const { return coeffs_; }

  BigInt eval(const BigInt& t) const;

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  bool operator==(const IntPoly&) const = default;

  // Divide by t, throwing InternalError if the constant term is nonzero.
  IntPoly divided_by_t() const;

  // "t^3 - 10t^2 + 30t - 21"; "0" for the zero polynomial.
  std::string pretty(const std::string& var = "t") const;

  // Coefficients highest degree first, as decimal strings.
  std::vector<std::string> coeffs_desc_decimal() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

}  // namespace genarr
