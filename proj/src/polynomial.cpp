#include "polynomial.hpp"

#include <sstream>

#include "errors.hpp"

namespace genarr {

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::from_ascending(std::vector<BigInt> coeffs) {
  IntPoly p;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

IntPoly IntPoly::monomial(int degree, BigInt coeff) {
  IntPoly p;
  if (coeff != 0) {
    p.coeffs_.assign(static_cast<size_t>(degree) + 1, BigInt(0));
    p.coeffs_.back() = std::move(coeff);
  }
  return p;
}

IntPoly IntPoly::constant(BigInt c) { return monomial(0, std::move(c)); }

IntPoly IntPoly::from_roots(std::span<const long> roots) {
  IntPoly p = constant(BigInt(1));
  for (long r : roots) {
    p = p * from_ascending({BigInt(-r), BigInt(1)});
  }
  return p;
}

BigInt IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return BigInt(0);
  return coeffs_[static_cast<size_t>(i)];
}

BigInt IntPoly::eval(const BigInt& t) const {
  BigInt acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * t + *it;
  }
  return acc;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<BigInt> c(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return from_ascending(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<BigInt> c(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
  return from_ascending(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  std::vector<BigInt> c(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    for (size_t j = 0; j < o.coeffs_.size(); ++j) {
      c[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return from_ascending(std::move(c));
}

IntPoly IntPoly::divided_by_t() const {
  if (is_zero()) return IntPoly();
  if (coeffs_.front() != 0) {
    throw InternalError("divided_by_t: nonzero constant term");
  }
  return from_ascending(
      std::vector<BigInt>(coeffs_.begin() + 1, coeffs_.end()));
}

std::string IntPoly::pretty(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[static_cast<size_t>(i)];
    if (c == 0) continue;
    BigInt a = abs(c);
    if (first) {
      if (c < 0) out << '-';
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (i == 0) {
      out << to_decimal(a);
    } else {
      if (a != 1) out << to_decimal(a);
      out << var;
      if (i > 1) out << '^' << i;
    }
  }
  return out.str();
}

std::vector<std::string> IntPoly::coeffs_desc_decimal() const {
  std::vector<std::string> out;
  for (int i = degree(); i >= 0; --i) out.push_back(to_decimal(coeff(i)));
  if (out.empty()) out.push_back("0");
  return out;
}

}  // namespace genarr
