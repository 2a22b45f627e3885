#include "arith.hpp"

#include <deque>
#include <mutex>

#include "errors.hpp"

namespace genarr {

namespace {
// Deque keeps references stable while the cache grows. Pre-filling in blocks
// keeps the common case (multinomials in the counting inner loop) lock-cheap.
constexpr unsigned kFactorialBlock = 1024;

std::mutex g_fact_mutex;
std::deque<BigInt>& factorial_table() {
  static std::deque<BigInt> table{BigInt(1)};  // 0! = 1
  return table;
}
}  // namespace

const BigInt& factorial(unsigned int n) {
  std::lock_guard<std::mutex> lock(g_fact_mutex);
  auto& table = factorial_table();
  if (n >= table.size()) {
    unsigned target = ((n / kFactorialBlock) + 1) * kFactorialBlock;
    for (unsigned i = static_cast<unsigned>(table.size()); i <= target; ++i) {
      table.push_back(table[i - 1] * i);
    }
  }
  return table[n];
}

BigInt binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return BigInt(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

BigInt multinomial(std::span<const int> parts) {
  unsigned total = 0;
  for (int p : parts) {
    if (p < 0) throw UsageError("multinomial: negative part");
    total += static_cast<unsigned>(p);
  }
  BigInt r = factorial(total);
  for (int p : parts) {
    if (p > 1) mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), factorial(static_cast<unsigned>(p)).get_mpz_t());
  }
  return r;
}

BigInt multinomial(std::initializer_list<int> parts) {
  return multinomial(std::span<const int>(parts.begin(), parts.size()));
}

BigInt exact_divide(const BigInt& a, const BigInt& b, const char* what) {
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0) {
    throw InternalError(std::string("non-exact division in ") + what);
  }
  return q;
}

std::string to_decimal(const BigInt& v) { return v.get_str(10); }

BigInt from_decimal(const std::string& s) {
  try {
    return BigInt(s, 10);
  } catch (const std::invalid_argument&) {
    throw UsageError("not a decimal integer: " + s);
  }
}

}  // namespace genarr
