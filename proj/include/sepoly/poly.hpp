#pragma once
/**
 * Dense integer polynomials and the polynomial-level transforms:
 * h* from tail histograms or lattice counts, the gamma basis change,
 * closed forms for cycles and a binomial identity.
 */

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sepoly/errors.hpp"
#include "sepoly/numeric.hpp"

namespace sepoly {

class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> c) : c_(std::move(c)) { trim(); }
  IntPolynomial(std::initializer_list<long long> c) {
    for (long long x : c) c_.emplace_back(x);
    trim();
  }

  static IntPolynomial monomial(int k, BigInt coeff = 1) {
    std::vector<BigInt> c(static_cast<std::size_t>(k) + 1, 0);
    c.back() = std::move(coeff);
    return IntPolynomial(std::move(c));
  }

  /// (1 + x)^k
  static IntPolynomial one_plus_x_pow(int k) {
    std::vector<BigInt> c;
    for (int i = 0; i <= k; ++i) c.push_back(binomial(k, i));
    return IntPolynomial(std::move(c));
  }

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const noexcept { return c_; }

  BigInt operator[](int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(i)];
  }

  BigInt eval(const BigInt& x) const {
    BigInt r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  /// p(x) == x^d p(1/x) with d the degree.
  bool is_palindromic() const {
    for (std::size_t i = 0, j = c_.size(); i < j; ++i) {
      if (c_[i] != c_[--j]) return false;
    }
    return true;
  }

  IntPolynomial& operator+=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }

  IntPolynomial& operator-=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPolynomial(std::move(c));
  }

  friend IntPolynomial operator*(const IntPolynomial& a, const BigInt& k) {
    std::vector<BigInt> c = a.c_;
    for (auto& x : c) x *= k;
    return IntPolynomial(std::move(c));
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ", ";
      s += c_[i].str();
    }
    return s + "]";
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

/// h* from the tail-edge histogram of all Jaeger trees of a graph on n
/// vertices. Checks h[0] = 1, degree n - 1 and palindromy.
inline IntPolynomial hstar_from_histogram(std::span<const std::uint64_t> h, int n) {
  std::vector<BigInt> c;
  BigInt total = 0;
  for (auto x : h) {
    c.emplace_back(x);
    total += x;
  }
  if (total == 0) throw std::invalid_argument("empty histogram");
  IntPolynomial p(std::move(c));
  if (p[0] != 1) throw IntegrityError("histogram does not start with a single tree: " + p.to_string());
  if (p.degree() != n - 1) {
    throw IntegrityError("h* has degree " + std::to_string(p.degree()) + ", expected " +
                         std::to_string(n - 1));
  }
  if (!p.is_palindromic()) throw IntegrityError("h* is not palindromic: " + p.to_string());
  return p;
}

/// Numerator of the Ehrhart series from L(0), L(1), ...: the product
/// (1 - t)^(d+1) * sum L(k) t^k truncated to degree d. Extra counts beyond
/// L(d) are used to check that the higher coefficients vanish.
inline IntPolynomial hstar_from_lattice_counts(std::span<const BigInt> counts, int d) {
  if (d < 0) throw std::invalid_argument("negative dimension");
  if (static_cast<int>(counts.size()) < d + 1) {
    throw std::invalid_argument("need at least d + 1 lattice counts");
  }
  if (counts[0] != 1) throw std::invalid_argument("L(0) must be 1");
  const int len = static_cast<int>(counts.size());
  std::vector<BigInt> c(static_cast<std::size_t>(len), 0);
  for (int k = 0; k < len; ++k) {
    for (int j = 0; j <= std::min(k, d + 1); ++j) {
      BigInt term = binomial(d + 1, j) * counts[static_cast<std::size_t>(k - j)];
      if (j % 2) c[k] -= term;
      else c[k] += term;
    }
  }
  for (int k = d + 1; k < len; ++k) {
    if (c[k] != 0) {
      throw InconsistencyError("lattice counts are not those of a degree-" + std::to_string(d) +
                               " Ehrhart polynomial (coefficient " + std::to_string(k) +
                               " = " + c[k].str() + ")");
    }
  }
  c.resize(static_cast<std::size_t>(d) + 1);
  return IntPolynomial(std::move(c));
}

inline IntPolynomial hstar_from_lattice_counts(std::span<const long long> counts, int d) {
  std::vector<BigInt> big(counts.begin(), counts.end());
  return hstar_from_lattice_counts(std::span<const BigInt>(big), d);
}

/// Coordinates gamma with p = sum gamma_i x^i (1 + x)^(d - 2i), d = deg p.
inline IntPolynomial gamma_transform(const IntPolynomial& p) {
  if (p.is_zero()) return {};
  if (!p.is_palindromic()) throw DomainError("polynomial is not palindromic: " + p.to_string());
  const int d = p.degree();
  IntPolynomial rest = p;
  std::vector<BigInt> gamma;
  for (int i = 0; 2 * i <= d; ++i) {
    BigInt gi = rest[i];
    gamma.push_back(gi);
    if (gi != 0) rest -= IntPolynomial::monomial(i) * IntPolynomial::one_plus_x_pow(d - 2 * i) * gi;
  }
  if (!rest.is_zero()) throw IntegrityError("gamma expansion left a residual: " + rest.to_string());
  return IntPolynomial(std::move(gamma));
}

/// Inverse of gamma_transform for a target degree d.
inline IntPolynomial gamma_expand(const IntPolynomial& gamma, int d) {
  if (gamma.degree() * 2 > d) throw std::invalid_argument("gamma vector too long for degree");
  IntPolynomial p;
  for (int i = 0; i <= gamma.degree(); ++i) {
    if (gamma[i] == 0) continue;
    p += IntPolynomial::monomial(i) * IntPolynomial::one_plus_x_pow(d - 2 * i) * gamma[i];
  }
  return p;
}

/// gamma_i = C(2i, i) for the cycle on n vertices, i = 0..(n-1)/2.
inline IntPolynomial cycle_gamma(int n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  std::vector<BigInt> c;
  for (int i = 0; 2 * i <= n - 1; ++i) c.push_back(binomial(2 * i, i));
  return IntPolynomial(std::move(c));
}

/// Number of Jaeger trees of the n-cycle with exactly i tail-edges; the
/// upper half follows by palindromy.
inline BigInt cycle_hstar_coefficient(int n, int i) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  if (i < 0 || i > n - 1) return 0;
  if (2 * i > n - 1) i = n - 1 - i;
  BigInt s = 0;
  for (int j = 0; j <= i; ++j) s += binomial(2 * j, j) * binomial(n - 1 - 2 * j, i - j);
  return s;
}

/// Both sides of sum_a C(2a, a) C(b - 2a, n - a) = sum_a C(2a + c, a) C(b - c - 2a, n - a).
inline std::pair<BigInt, BigInt> binom_identity_check(int b, int c, int n) {
  if (n < 0 || c < 0 || c > b - 2 * n) throw std::invalid_argument("need 0 <= c <= b - 2n");
  BigInt left = 0, right = 0;
  for (int a = 0; a <= n; ++a) {
    left += binomial(2 * a, a) * binomial(b - 2 * a, n - a);
    right += binomial(2 * a + c, a) * binomial(b - c - 2 * a, n - a);
  }
  return {left, right};
}

}  // namespace sepoly
