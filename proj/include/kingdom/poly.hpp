#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace kingdom {

/// Exact signed integer used for coefficients and evaluations.
using BigInt = mpz_class;

/// Dense domination polynomial: coeffs()[k] is the number of dominating sets of size k.
class DominationPolynomial {
 public:
  /// Polynomial of the empty board, P(z) = 1.
  DominationPolynomial() : coeffs_{BigInt(1)} {}

  /// Throws std::invalid_argument on an empty coefficient vector or a negative coefficient.
  explicit DominationPolynomial(std::vector<BigInt> coeffs);

  std::size_t nverts() const noexcept { return coeffs_.size() - 1; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  const BigInt& operator[](std::size_t k) const { return coeffs_.at(k); }

  friend bool operator==(const DominationPolynomial&, const DominationPolynomial&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// Horner evaluation at z.
BigInt eval_at(const DominationPolynomial& p, const BigInt& z);

/// Smallest k with N_k > 0; 0 for the empty board.
std::size_t domination_number(const DominationPolynomial& p);

/// Coefficient-wise equality; polynomials of different length are unequal.
inline bool equal(const DominationPolynomial& p, const DominationPolynomial& q) { return p == q; }

/// Index of the first coefficient where p and q differ, or -1 if equal.
/// A length mismatch reports the shorter length.
long first_difference(const DominationPolynomial& p, const DominationPolynomial& q);

/// Structural facts every domination polynomial satisfies (top coefficient 1,
/// N_0 pattern, contiguous support, odd P(1)). Returns a description of each
/// violated property; empty when all hold.
std::vector<std::string> invariant_violations(const DominationPolynomial& p);

/// Throws std::logic_error if invariant_violations(p) is nonempty.
void check_invariants(const DominationPolynomial& p);

/// `{"board", "nverts", "coeffs", "gamma", "eval": {"-1", "1"}}` with decimal-string coefficients.
std::string to_json(const DominationPolynomial& p, const std::string& board);

/// Reads the coefficient array back from to_json output. Throws ParseError.
DominationPolynomial polynomial_from_json(const std::string& text);

}  // namespace kingdom
