#pragma once

#include <string>
#include <variant>
#include <vector>

#include "twlab/biring.hpp"
#include "twlab/finring.hpp"
#include "twlab/poly.hpp"
#include "twlab/report.hpp"
#include "twlab/toycoh.hpp"

namespace twlab {

struct TwmonCaps {
  long exhaustive_cap = 64;        // carriers at most this size are walked in full
  long sample_count = 8;           // pseudorandom sample size otherwise
  unsigned long long seed = 0;     // recorded in the report when sampling
  long max_degree = 2;             // degree bound for sampled polynomials
  long coeff_bound = 2;            // |coefficient| bound for integer samples
  long curry_cap = 4096;           // largest flat carrier for currying_iso
  long cogroup_cap = 4096;         // largest n for cogroup_uniqueness
};

// A finite monoid over an ordered carrier with the identity first.
// Associativity and the two-sided identity are checked on construction.
class FiniteMonoid {
 public:
  FiniteMonoid(std::string name, std::vector<std::string> labels, std::vector<int> table);
  static FiniteMonoid cyclic(long n);  // "C<n>" with labels e, g, g2, ...
  static FiniteMonoid trivial() { return cyclic(1); }

  const std::string& name() const { return name_; }
  long size() const { return static_cast<long>(labels_.size()); }
  int mul(int a, int b) const;
  const std::string& label(int a) const;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<int> table_;
};

// ---------------------------------------------------------------------------
// The three composition-monoid instances. Each exposes the same vocabulary:
// unit/ring_one, add/mul/compose, constants and counits, and the two
// co-operation folds a(b+c) = sum (a'(b))(a''(c)) used by the axiom suite.

// Polynomials under substitution (reduced when the biring has a modulus).
class PolyTW {
 public:
  explicit PolyTW(Biring biring);

  const Biring& biring() const { return biring_; }
  std::string name() const;

  Polynomial unit() const;      // the class of x
  Polynomial ring_one() const;  // the constant 1
  Polynomial add(const Polynomial& a, const Polynomial& b) const;
  Polynomial mul(const Polynomial& a, const Polynomial& b) const;
  Polynomial compose(const Polynomial& a, const Polynomial& b) const;
  std::vector<FiniteRing::Elem> rho_values() const;
  Polynomial constant_of(FiniteRing::Elem rho) const;
  Polynomial counit_constant(const Polynomial& a, FiniteRing::Elem rho) const;
  Polynomial fold_add(const Polynomial& a, const Polynomial& b, const Polynomial& c) const;
  Polynomial fold_mul(const Polynomial& a, const Polynomial& b, const Polynomial& c) const;
  std::vector<Polynomial> sample_carrier(const TwmonCaps& caps, std::string* policy) const;
  std::string show(const Polynomial& a) const { return a.text(); }

 private:
  Biring biring_;
  const Polynomial& check(const Polynomial& a) const;  // errc::instance_mismatch
};

// Functions |R| -> |R| under composition.
class FunTW {
 public:
  explicit FunTW(FiniteRing ring);

  const FiniteRing& ring() const { return ring_; }
  std::string name() const;

  FunctionElement unit() const;
  FunctionElement ring_one() const;
  FunctionElement add(const FunctionElement& a, const FunctionElement& b) const;
  FunctionElement mul(const FunctionElement& a, const FunctionElement& b) const;
  FunctionElement compose(const FunctionElement& a, const FunctionElement& b) const;
  std::vector<FiniteRing::Elem> rho_values() const;
  FunctionElement constant_of(FiniteRing::Elem rho) const;
  FunctionElement counit_constant(const FunctionElement& a, FiniteRing::Elem rho) const;
  FunctionElement fold_add(const FunctionElement& a, const FunctionElement& b,
                           const FunctionElement& c) const;
  FunctionElement fold_mul(const FunctionElement& a, const FunctionElement& b,
                           const FunctionElement& c) const;
  std::vector<FunctionElement> sample_carrier(const TwmonCaps& caps, std::string* policy) const;
  std::string show(const FunctionElement& a) const { return a.text(); }

 private:
  FiniteRing ring_;
  const FunctionElement& check(const FunctionElement& a) const;
};

// Integer polynomials in the ring-like generators x_m, one per monoid
// element, with P (.) Q = P[x_m := sigma_m(Q)] where sigma_m sends x_{m'}
// to x_{m * m'}. The trivial monoid collapses to plain substitution in x_e.
class MonoidPlethory {
 public:
  explicit MonoidPlethory(FiniteMonoid m);

  const FiniteMonoid& monoid() const { return monoid_; }
  std::string name() const;

  Polynomial generator(int m) const;  // x_<label(m)>
  Polynomial sigma(int m, const Polynomial& P) const;

  Polynomial unit() const { return generator(0); }
  Polynomial ring_one() const;
  Polynomial add(const Polynomial& a, const Polynomial& b) const;
  Polynomial mul(const Polynomial& a, const Polynomial& b) const;
  Polynomial compose(const Polynomial& a, const Polynomial& b) const;
  std::vector<long> rho_values() const;
  Polynomial constant_of(long rho) const;
  Polynomial counit_constant(const Polynomial& a, long rho) const;
  Polynomial fold_add(const Polynomial& a, const Polynomial& b, const Polynomial& c) const;
  Polynomial fold_mul(const Polynomial& a, const Polynomial& b, const Polynomial& c) const;
  std::vector<Polynomial> sample_carrier(const TwmonCaps& caps, std::string* policy) const;
  std::string show(const Polynomial& a) const { return a.text(); }

 private:
  FiniteMonoid monoid_;
  CoeffRing ints_;
  const Polynomial& check(const Polynomial& a) const;
  std::string var_of(int m) const;
};

using TWInstance = std::variant<PolyTW, FunTW, MonoidPlethory>;

Polynomial tw_compose(const PolyTW& T, const Polynomial& a, const Polynomial& b);
FunctionElement tw_compose(const FunTW& T, const FunctionElement& a, const FunctionElement& b);
Polynomial tw_compose(const MonoidPlethory& T, const Polynomial& a, const Polynomial& b);

// The unfolded monoid laws on sampled elements: associativity, both unit
// laws, left compatibility with the ring structure ((a+b)(.)c, (ab)(.)c,
// 1(.)c) and right compatibility with the co-operations (a(.)(b+c) through
// the coadd fold, a(.)(bc) through the comul fold, a(.)const through the
// counit). One summary row per law plus a sampling-policy row.
Report verify_tw_axioms(const TWInstance& T, const TwmonCaps& caps = {});

// For the substitution instance over base R without a modulus: checks that
// the ideal (x^q - x) is a coideal and that composition translates it into
// itself (P (.) M*(x^q - x) - P (.) 0 reduces to 0) on a spanning family of
// monomials plus seeded samples, then folds both into the final verdict.
Report descent_check(const PolyTW& T, long q, const TwmonCaps& caps = {});

// The currying bijection A^(S1 x S2) ~ (A^S2)^S1 as a ring isomorphism for
// the pointwise structures, with naturality in A along every unital ring
// homomorphism A -> A' for A' in `roster`.
Report currying_iso(long s1, long s2, const FiniteRing& A,
                    const std::vector<FiniteRing>& roster = {}, const TwmonCaps& caps = {});

// Number of co-group structures (co-addition Z/n -> Z/n (+) Z/n with a
// co-unit and a co-inverse satisfying the co-group laws); always 1, realized
// by the diagonal v -> (v, v).
long cogroup_uniqueness(long n, const TwmonCaps& caps = {});

}  // namespace twlab
