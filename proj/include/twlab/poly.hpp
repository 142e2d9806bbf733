#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "twlab/finring.hpp"

namespace twlab {

// Coefficient domain: the integers (arbitrary precision) or a finite ring.
// Finite-ring coefficients are stored as canonical carrier indices.
class CoeffRing {
 public:
  static CoeffRing integers();
  static CoeffRing of(FiniteRing R);

  bool is_integers() const { return !ring_.has_value(); }
  const FiniteRing& ring() const;
  bool operator==(const CoeffRing& o) const;
  bool operator!=(const CoeffRing& o) const { return !(*this == o); }

  mpz_class add(const mpz_class& a, const mpz_class& b) const;
  mpz_class mul(const mpz_class& a, const mpz_class& b) const;
  mpz_class neg(const mpz_class& a) const;
  // image of an arbitrary integer (identity over Z, the map Z -> R otherwise)
  mpz_class from_int(const mpz_class& v) const;
  bool is_valid(const mpz_class& c) const;  // canonical coefficient?
  std::string show(const mpz_class& c) const;
  std::string text() const;  // "Z" or the ring-spec text

 private:
  std::optional<FiniteRing> ring_;
};

// Exponent map of one monomial; variables with exponent 0 are absent.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::map<std::string, long> exps);

  long exponent(const std::string& var) const;
  const std::map<std::string, long>& exponents() const { return e_; }
  long degree() const;
  bool is_constant() const { return e_.empty(); }
  Monomial operator*(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  // graded lexicographic: total degree first, then the alphabetically first
  // variable with differing exponent decides (larger exponent => later)
  bool operator<(const Monomial& o) const;

  std::string text() const;  // "x^2*y", "1" for the constant monomial

 private:
  std::map<std::string, long> e_;
};

// Sparse multivariate polynomial with exact coefficients.
class Polynomial {
 public:
  explicit Polynomial(CoeffRing ring);
  static Polynomial zero(const CoeffRing& ring) { return Polynomial(ring); }
  static Polynomial constant(const CoeffRing& ring, const mpz_class& c);
  static Polynomial variable(const CoeffRing& ring, const std::string& name);
  // single term with an already-canonical coefficient (a carrier index over a
  // finite ring); use constant() for integer images
  static Polynomial monomial(const CoeffRing& ring, const Monomial& m, const mpz_class& coeff);

  const CoeffRing& coeff_ring() const { return ring_; }
  const std::map<Monomial, mpz_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long degree() const;  // total degree; -1 for the zero polynomial
  long degree_in(const std::string& var) const;
  std::set<std::string> variables() const;
  mpz_class coefficient(const Monomial& m) const;  // 0 if absent

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const mpz_class& c) const;
  Polynomial pow(long e) const;  // e >= 0
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Simultaneous substitution. Every variable occurring in the polynomial
  // must be bound; bindings must share the coefficient ring.
  Polynomial substitute(const std::map<std::string, Polynomial>& bindings) const;
  Polynomial rename(const std::map<std::string, std::string>& vars) const;

  // Value in R under a total environment. Integer-coefficient polynomials are
  // mapped through Z -> R; otherwise the coefficient ring must equal R.
  FiniteRing::Elem evaluate(const std::map<std::string, FiniteRing::Elem>& env,
                            const FiniteRing& R) const;

  // Normal form modulo (v^q - v) for every v in vars: each exponent e >= 1
  // becomes 1 + ((e-1) mod (q-1)). Requires q >= 2.
  Polynomial reduce_xq(long q, const std::set<std::string>& vars) const;
  Polynomial reduce_xq(long q) const;  // all variables

  // Maps an integer-coefficient polynomial into R coefficient-wise.
  Polynomial into_ring(const FiniteRing& R) const;

  // Display: graded-lex descending, e.g. "3*x^2*y + 1"; parses back bit-exactly.
  std::string text() const;
  static Polynomial parse(const CoeffRing& ring, std::string_view s);

 private:
  CoeffRing ring_;
  std::map<Monomial, mpz_class> terms_;
  void add_term(const Monomial& m, const mpz_class& c);  // canonicalizing
  void check_same_ring(const Polynomial& o) const;
};

}  // namespace twlab
