#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cartanlab/numeric.hpp"

namespace cartanlab {

/// Integer coefficients of the n-th cyclotomic polynomial, constant term
/// first. Cached; safe to call concurrently.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t n);

std::uint32_t euler_phi(std::uint32_t n);

/// An exact element of Q(zeta_n).
///
/// Stored as n rational coefficients over zeta_n^0..zeta_n^(n-1), reduced
/// modulo Phi_n, so only the first phi(n) entries can be non-zero and two
/// values are equal iff their coefficient vectors are.
class Cyclotomic {
 public:
  /// Zero in Q(zeta_1) = Q.
  Cyclotomic() : Cyclotomic(1) {}
  /// Zero in Q(zeta_n).
  explicit Cyclotomic(std::uint32_t conductor);

  static Cyclotomic from_rational(const Rational& q, std::uint32_t conductor = 1);
  /// zeta_n^k
  static Cyclotomic root_of_unity(std::uint32_t n, std::int64_t k);
  /// Reduce an arbitrary coefficient vector (any length) modulo x^n - 1 and Phi_n.
  static Cyclotomic from_coefficients(std::uint32_t conductor, std::vector<Rational> coeffs);

  std::uint32_t conductor() const { return conductor_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Present iff the value is rational.
  std::optional<Rational> to_rational() const;
  bool is_integer() const;

  /// Same value in Q(zeta_m); requires conductor() | m.
  Cyclotomic embed(std::uint32_t m) const;

  /// Complex conjugation, zeta^k -> zeta^(n-k).
  Cyclotomic conj() const;
  /// Galois automorphism zeta -> zeta^a, gcd(a, n) = 1.
  Cyclotomic galois(std::uint64_t a) const;

  /// Image under zeta_n -> root (mod p); all coefficients must be p-integral.
  std::uint64_t reduce_mod(std::uint64_t p, std::uint64_t root) const;

  Cyclotomic operator-() const;
  /// The arithmetic operators require equal conductors (ValidationError
  /// otherwise); use embed_common() to align mixed values first.
  Cyclotomic operator+(const Cyclotomic& rhs) const;
  Cyclotomic operator-(const Cyclotomic& rhs) const;
  Cyclotomic operator*(const Cyclotomic& rhs) const;
  Cyclotomic operator*(const Rational& q) const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
  }
  /// Orders by conductor, then lexicographically on the canonical coefficients.
  friend std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b);

  /// Human-readable form: rationals print as "a" or "a/b", a single root of
  /// unity as "zN^k", anything else as a polynomial in zN.
  std::string to_string() const;

 private:
  void reduce();

  std::uint32_t conductor_;
  std::vector<Rational> coeffs_;
};

/// Embed both values into Q(zeta_lcm).
std::pair<Cyclotomic, Cyclotomic> embed_common(const Cyclotomic& a, const Cyclotomic& b);

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x);

}  // namespace cartanlab
