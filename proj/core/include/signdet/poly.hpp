#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "signdet/rational.hpp"
#include "signdet/sign.hpp"

namespace signdet {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  Poly(std::initializer_list<Rat> coeffs);

  static Poly constant(const Rat& c);
  /// c * X^k
  static Poly monomial(const Rat& c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  const Rat& lead() const { return coeffs_.back(); }
  /// Coefficient of X^k, zero past the degree.
  Rat coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rat(0); }
  std::span<const Rat> coeffs() const { return coeffs_; }

  Poly& operator+=(const Poly& q);
  Poly& operator-=(const Poly& q);
  Poly& operator*=(const Rat& c);

  friend Poly operator+(Poly p, const Poly& q) { return p += q; }
  friend Poly operator-(Poly p, const Poly& q) { return p -= q; }
  friend Poly operator-(Poly p);
  friend Poly operator*(const Poly& p, const Poly& q);
  friend Poly operator*(Poly p, const Rat& c) { return p *= c; }
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void normalize();

  std::vector<Rat> coeffs_;
};

enum class Infinity { Minus, Plus };

Poly add(const Poly& p, const Poly& q);
Poly sub(const Poly& p, const Poly& q);
Poly neg(const Poly& p);
Poly mul(const Poly& p, const Poly& q);

Poly derivative(const Poly& p);

/// Euclidean division p = q*quot + rem with deg rem < deg q.
/// Throws std::domain_error if q is zero.
std::pair<Poly, Poly> divmod(const Poly& p, const Poly& q);
Poly rem(const Poly& p, const Poly& q);
/// Quotient of an exact division; throws std::domain_error if q does not divide p.
Poly exact_div(const Poly& p, const Poly& q);

/// rem(p, p0). The result agrees with p at every root of p0.
Poly mod_reduce(const Poly& p, const Poly& p0);

/// Monic gcd. Throws std::domain_error if both are zero.
Poly gcd(const Poly& p, const Poly& q);

/// p / gcd(p, p'), made monic. Same distinct roots as p.
Poly squarefree_part(const Poly& p);

/// Positive rational multiple of p with coprime integer coefficients.
/// Returns the scaled polynomial and the positive factor applied.
std::pair<Poly, Rat> primitive_part(const Poly& p);

Rat eval(const Poly& p, const Rat& x);
Sign sign_at(const Poly& p, const Rat& x);
Sign sign_at_inf(const Poly& p, Infinity end);

/// Comma-separated ascending coefficients, the instance-file notation.
std::string to_coeff_string(const Poly& p);
/// Human-readable form, e.g. "X^3 - X".
std::string to_string(const Poly& p);

}  // namespace signdet
