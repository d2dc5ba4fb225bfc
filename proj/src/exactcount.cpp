#include "hypermono/exactcount.hpp"

#include <mutex>

#include "hypermono/error.hpp"

namespace hypermono {

std::string to_decimal(const BigInt& value) { return value.str(); }

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coefficients_(std::move(coefficients)) {
  trim();
}

IntPolynomial IntPolynomial::monomial(BigInt coefficient, std::size_t degree) {
  std::vector<BigInt> c(degree + 1);
  c[degree] = std::move(coefficient);
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

BigInt IntPolynomial::coefficient(std::size_t i) const {
  return i < coefficients_.size() ? coefficients_[i] : BigInt(0);
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
  std::vector<BigInt> c(std::max(coefficients_.size(), rhs.coefficients_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coefficient(i) + rhs.coefficient(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
  std::vector<BigInt> c(std::max(coefficients_.size(), rhs.coefficients_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coefficient(i) - rhs.coefficient(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  std::vector<BigInt> c(coefficients_.size() + rhs.coefficients_.size() - 1);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coefficients_.size(); ++j) {
      c[i + j] += coefficients_[i] * rhs.coefficients_[j];
    }
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const BigInt& scalar) const {
  std::vector<BigInt> c = coefficients_;
  for (BigInt& v : c) v *= scalar;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::divide_exact(const BigInt& divisor) const {
  if (divisor == 0) fail(ErrorCode::kInternal, "polynomial division by zero");
  std::vector<BigInt> c = coefficients_;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] % divisor != 0) {
      fail(ErrorCode::kInternal, "coefficient " + to_decimal(c[i]) + " of x^" + std::to_string(i) +
                                     " is not divisible by " + to_decimal(divisor));
    }
    c[i] /= divisor;
  }
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coefficients_.size(); i-- > 0;) {
    const BigInt& c = coefficients_[i];
    if (c == 0) continue;
    BigInt magnitude = abs(c);
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (magnitude != 1 || i == 0) out += to_decimal(magnitude);
    if (i >= 1) out += 'x';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

StirlingTable& StirlingTable::shared() {
  static StirlingTable table;
  return table;
}

std::size_t StirlingTable::rows() const {
  std::shared_lock lock(mutex_);
  return rows_.size();
}

void StirlingTable::grow_to(std::size_t n) {
  std::unique_lock lock(mutex_);
  while (rows_.size() <= n) {
    const std::vector<BigInt>& prev = rows_.back();
    const std::size_t row = rows_.size();
    std::vector<BigInt> next(row + 1);
    // c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k)
    for (std::size_t k = 1; k <= row; ++k) {
      next[k] = prev[k - 1];
      if (k < prev.size()) next[k] += (row - 1) * prev[k];
    }
    rows_.push_back(std::move(next));
  }
}

BigInt StirlingTable::get(long n, long k) {
  if (n < 0) fail(ErrorCode::kInvalidArgument, "Stirling number needs n >= 0");
  if (k < 0 || k > n) return 0;
  {
    std::shared_lock lock(mutex_);
    if (static_cast<std::size_t>(n) < rows_.size()) return rows_[n][k];
  }
  grow_to(static_cast<std::size_t>(n));
  std::shared_lock lock(mutex_);
  return rows_[n][k];
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (long i = 0; i < k; ++i) result = result * (n - i) / (i + 1);
  return result;
}

BigInt factorial(long n) {
  BigInt result = 1;
  for (long i = 2; i <= n; ++i) result *= i;
  return result;
}

Count stirling_c(long n, long k) { return StirlingTable::shared().get(n, k); }

Count hultman_H(long n, long k) {
  if (n < 1 || k < 1 || k > n) {
    fail(ErrorCode::kInvalidArgument,
         "H(n,k) needs n >= 1 and 1 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  if ((n - k) % 2 != 0) return 0;
  const BigInt numerator = stirling_c(n + 1, k);
  const BigInt denominator = binomial(n + 1, 2);
  if (numerator % denominator != 0) {
    fail(ErrorCode::kInternal, "C(" + std::to_string(n + 1) + ",2) does not divide c(" +
                                   std::to_string(n + 1) + "," + std::to_string(k) + ")");
  }
  return numerator / denominator;
}

Count reduced_r(long n, long k) {
  if (n < 2 || k < 1 || 2 * k > n) {
    fail(ErrorCode::kInvalidArgument,
         "r(n,k) needs n >= 2 and 1 <= k <= n/2, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  BigInt sum = 0;
  for (long i = 0; i < k; ++i) {
    BigInt term = binomial(n, i) * hultman_H(n - i, k - i);
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  if (sum < 0) {
    fail(ErrorCode::kInternal, "negative count " + to_decimal(sum) + " for r(" + std::to_string(n) + "," +
                                   std::to_string(k) + ")");
  }
  return sum;
}

Count u_of_g(long g) {
  if (g < 0) fail(ErrorCode::kInvalidArgument, "genus must be nonnegative");
  BigInt sum = 0;
  for (long n = 2 * g + 1; n <= 4 * g; ++n) sum += reduced_r(n, n - 2 * g);
  return sum;
}

IntPolynomial rising_factorial_poly(long n) {
  if (n < 0) fail(ErrorCode::kInvalidArgument, "factorial polynomial needs n >= 0");
  IntPolynomial p = IntPolynomial::monomial(1, 1);
  for (long j = 1; j <= n; ++j) p = p * IntPolynomial({BigInt(j), BigInt(1)});
  return p;
}

IntPolynomial falling_factorial_poly(long n) {
  if (n < 0) fail(ErrorCode::kInvalidArgument, "factorial polynomial needs n >= 0");
  IntPolynomial p = IntPolynomial::monomial(1, 1);
  for (long j = 1; j <= n; ++j) p = p * IntPolynomial({BigInt(-j), BigInt(1)});
  return p;
}

IntPolynomial genpoly_H(long n) {
  if (n < 1) fail(ErrorCode::kInvalidArgument, "genpoly_H needs n >= 1");
  return (rising_factorial_poly(n) - falling_factorial_poly(n)).divide_exact(BigInt(n + 1) * n);
}

IntPolynomial genpoly_r(long n) {
  if (n < 2) fail(ErrorCode::kInvalidArgument, "genpoly_r needs n >= 2");
  IntPolynomial sum;
  for (long i = 0; i < n; ++i) {
    BigInt c = binomial(n, i);
    if (i % 2 != 0) c = -c;
    sum = sum + IntPolynomial::monomial(c, static_cast<std::size_t>(i)) * genpoly_H(n - i);
  }
  return sum;
}

}  // namespace hypermono
