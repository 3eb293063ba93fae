#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "zamobelt/error.hpp"

namespace zamobelt {

inline constexpr std::size_t kMaxVars = 16;
inline constexpr std::size_t kDefaultTermGuard = 1'000'000;

/// Exponent vector in Z^nvars, unused slots zero. Ordered lexicographically.
struct Monomial {
  std::array<std::int16_t, kMaxVars> e{};

  static Monomial variable(std::size_t i, int power = 1);

  Monomial& operator+=(const Monomial& o);
  Monomial& operator-=(const Monomial& o);
  friend Monomial operator+(Monomial a, const Monomial& b) { return a += b; }
  friend Monomial operator-(Monomial a, const Monomial& b) { return a -= b; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct Term {
  Monomial mono;
  mpz_class coef;
};

/// Per-variable (min, max) exponents.
struct DegreeProfile {
  std::vector<std::pair<int, int>> degrees;

  int deg_min(std::size_t var) const { return degrees[var].first; }
  int deg_max(std::size_t var) const { return degrees[var].second; }
  friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

/// Sparse Laurent polynomial over Z in nvars variables. Terms are kept sorted
/// in strictly decreasing lexicographic order with no zero coefficients, so
/// equality is structural.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t nvars);

  static LaurentPoly constant(std::size_t nvars, const mpz_class& c);
  static LaurentPoly variable(std::size_t nvars, std::size_t i);
  static LaurentPoly monomial(std::size_t nvars, const Monomial& m,
                              const mpz_class& c = 1);
  /// Takes terms in any order; merges duplicates and drops zeros.
  static LaurentPoly from_terms(std::size_t nvars, std::vector<Term> terms);
  /// Parses the canonical rendering, e.g. "x1^-1*x2 + 3*x1 - 1".
  static LaurentPoly parse(const std::string& text, std::size_t nvars);

  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  /// Single term with coefficient +1 and exponent e_j: returns j, else -1.
  int as_variable() const;
  bool all_coefficients_positive() const;

  std::string to_string() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

 private:
  friend class LaurentBuilder;
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

/// Raised by div_exact; the remainder a - q*b for the partial quotient q is
/// kept for diagnostics.
class NotDivisibleError : public Error {
 public:
  NotDivisibleError(const std::string& what, LaurentPoly remainder)
      : Error(ErrorCode::not_divisible, what), remainder_(std::move(remainder)) {}
  const LaurentPoly& remainder() const noexcept { return remainder_; }

 private:
  LaurentPoly remainder_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b,
                std::size_t term_guard = kDefaultTermGuard);
LaurentPoly pow(const LaurentPoly& a, unsigned exponent,
                std::size_t term_guard = kDefaultTermGuard);
LaurentPoly mul_monomial(const LaurentPoly& a, const Monomial& m);

/// Exact quotient q with q * b == a. Throws division_by_zero, or
/// not_divisible (NotDivisibleError, which carries a remainder).
LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b,
                      std::size_t term_guard = kDefaultTermGuard);

DegreeProfile degree_profile(const LaurentPoly& a);
/// d_j = -deg_min(j).
std::vector<int> denominator_vector(const LaurentPoly& a);

/// Evaluates max over terms of <exponent, weights>. Matches the tropical
/// evaluation of any subtraction-free expression of the polynomial.
mpq_class tropical_evaluate(const LaurentPoly& a, const std::vector<mpq_class>& weights);

/// Substitutes x_i -> x_{perm[i]}.
LaurentPoly relabel(const LaurentPoly& a, const std::vector<int>& perm);

inline LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return add(a, b); }
inline LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return sub(a, b); }
inline LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return mul(a, b); }

}  // namespace zamobelt
