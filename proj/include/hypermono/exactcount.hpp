#pragma once

#include <cstddef>
#include <shared_mutex>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hypermono {

/// Signed arbitrary-precision integer. Counts are always nonnegative; signed
/// arithmetic is only needed for intermediate sums and polynomial coefficients.
using BigInt = boost::multiprecision::cpp_int;
using Count = BigInt;

std::string to_decimal(const BigInt& value);

/// Dense polynomial with exact integer coefficients; coefficient i multiplies
/// x^i. Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  static IntPolynomial monomial(BigInt coefficient, std::size_t degree);

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  const std::vector<BigInt>& coefficients() const { return coefficients_; }
  /// Zero beyond the degree.
  BigInt coefficient(std::size_t i) const;
  BigInt evaluate(const BigInt& x) const;

  IntPolynomial operator+(const IntPolynomial& rhs) const;
  IntPolynomial operator-(const IntPolynomial& rhs) const;
  IntPolynomial operator*(const IntPolynomial& rhs) const;
  IntPolynomial operator*(const BigInt& scalar) const;

  /// Throws kInternal unless every coefficient is divisible by `divisor`.
  IntPolynomial divide_exact(const BigInt& divisor) const;

  /// e.g. "x^4 + 5x^2"; "0" for the zero polynomial.
  std::string to_string() const;

  bool operator==(const IntPolynomial&) const = default;

 private:
  void trim();
  std::vector<BigInt> coefficients_;
};

/// Triangle of unsigned Stirling numbers of the first kind, grown on demand.
/// Lookups may run concurrently; growth takes an exclusive lock.
class StirlingTable {
 public:
  /// c(n, k); zero for k < 0, k > n, or k = 0 < n.
  BigInt get(long n, long k);
  std::size_t rows() const;

  /// The process-wide table.
  static StirlingTable& shared();

 private:
  void grow_to(std::size_t n);

  mutable std::shared_mutex mutex_;
  std::vector<std::vector<BigInt>> rows_{{BigInt(1)}};
};

BigInt binomial(long n, long k);
BigInt factorial(long n);

/// Unsigned Stirling number of the first kind (permutations of n points with
/// k cycles).
Count stirling_c(long n, long k);

/// Number of circular psi on n points such that (0 1 ... n-1) psi has k cycles:
/// c(n+1, k) / C(n+1, 2) when n - k is even, else 0. Requires 1 <= k <= n.
Count hultman_H(long n, long k);

/// Number of reduced unicellular hypermonopoles with sigma = (0 1 ... n-1)
/// and k hyperedges, by inclusion-exclusion over forced buds.
/// Requires n >= 2 and 1 <= k <= n/2.
Count reduced_r(long n, long k);

/// Number of reduced unicellular hypermonopoles of genus g (sigma fixed):
/// sum of r(n, n - 2g) over 2g+1 <= n <= 4g.
Count u_of_g(long g);

/// x (x+1) ... (x+n).
IntPolynomial rising_factorial_poly(long n);
/// x (x-1) ... (x-n).
IntPolynomial falling_factorial_poly(long n);

/// sum_k H(n,k) x^k, from the difference of the two factorial products.
IntPolynomial genpoly_H(long n);

/// sum_{i=0}^{n-1} C(n,i) (-x)^i genpoly_H(n-i). Its coefficients at
/// 1 <= k <= n/2 are r(n,k).
IntPolynomial genpoly_r(long n);

}  // namespace hypermono
