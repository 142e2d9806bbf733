#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twlab/poly.hpp"
#include "twlab/report.hpp"

namespace twlab {

// Element of the tensor square B (x) B in the two-variable realization:
// the first tensor leg is the variable x, the second is y.
struct CoPair {
  Polynomial value;
  bool operator==(const CoPair& o) const { return value == o.value; }
  bool operator!=(const CoPair& o) const { return !(*this == o); }
  std::string text() const { return value.text(); }
};

// Co-ring structure on R<x> (no modulus) or on R<x>/(x^q - x) (modulus q,
// elements kept reduce_xq-canonical).
class Biring {
 public:
  explicit Biring(FiniteRing base);
  Biring(FiniteRing base, long modulus_q);  // q >= 2

  const FiniteRing& base() const { return base_; }
  const CoeffRing& coeffs() const { return coeffs_; }
  std::optional<long> modulus_q() const { return q_; }

  // canonical representative (reduced in every variable when a modulus is set)
  Polynomial canon(const Polynomial& P) const;

  // The four co-operations. Inputs must be univariate in x over the base ring.
  CoPair coadd(const Polynomial& P) const;   // P(x + y)
  CoPair comul(const Polynomial& P) const;   // P(x * y)
  FiniteRing::Elem counit(const Polynomial& P, FiniteRing::Elem r) const;  // P(r)
  Polynomial coinverse(const Polynomial& P) const;  // P(-x)

  struct CoidealResult {
    bool ok = false;
    std::optional<Polynomial> witness;  // nonzero normal form on failure
    std::string detail;                 // which component failed and where
  };
  // Decides whether (x^q - x) is a coideal for both co-operations: the coadd
  // and comul images of x^q - x must vanish in the two-variable normal form
  // (free-module basis x^i y^j, 0 <= i,j <= q-1) and every counit must kill it.
  CoidealResult is_coideal(long q) const;

  // Coassociativity, cocommutativity, counit laws and the coadd/comul
  // interchange on every sample element, as substitution identities with one
  // final canonicalization per route; with a modulus present, a leading
  // "quotient-coideal" row carries the well-definedness verdict.
  Report verify_colaws(const std::vector<Polynomial>& sample) const;

  // All reduce_xq-canonical elements (coefficient vectors of degree < q),
  // enumerated little-endian in the carrier order: element k has coefficient
  // digit_i(k) on x^i. Requires a modulus; |R|^q must stay within the cap.
  std::vector<Polynomial> canonical_elements() const;

 private:
  FiniteRing base_;
  CoeffRing coeffs_;
  std::optional<long> q_;

  const Polynomial& check_element(const Polynomial& P) const;
};

}  // namespace twlab
