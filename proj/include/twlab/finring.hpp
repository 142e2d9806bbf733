#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twlab/error.hpp"

namespace twlab {

// Description of a finite commutative unital ring: Z/n, GF(p^k) with an
// explicit monic irreducible modulus, or a finite product of such.
// Structurally equal specs build rings with identical carrier orderings.
class RingSpec {
 public:
  enum class Kind { Zmod, GF, Product };

  static RingSpec zmod(long n);
  // modulus defaults to find_irreducible(p, k)
  static RingSpec gf(long p, long k);
  // modulus given as coefficients c0..ck (monic: ck == 1), over Z/p
  static RingSpec gf(long p, long k, std::vector<long> modulus);
  static RingSpec product(RingSpec left, RingSpec right);

  Kind kind() const;
  long n() const;                           // Zmod
  long p() const;                           // GF
  long k() const;                           // GF
  const std::vector<long>& modulus() const; // GF, c0..ck
  const RingSpec& left() const;             // Product
  const RingSpec& right() const;            // Product

  bool operator==(const RingSpec& o) const;
  bool operator!=(const RingSpec& o) const { return !(*this == o); }

  // Round-trips through parse_ring_spec: "Z/6", "GF(2,2;x^2+x+1)", "Z/2xZ/3".
  std::string text() const;

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
  explicit RingSpec(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
};

// Grammar: spec := atom ('x' atom)*, atom := 'Z/' int | 'GF(' p ',' k [';' modulus] ')'.
// Throws errc::parse_error with the byte offset of the offending character.
RingSpec parse_ring_spec(std::string_view s);

class FiniteRing {
 public:
  // Elements are indices into the canonical carrier: 0 is the additive zero,
  // 1 the multiplicative unit (when size >= 2), the rest in encoding order.
  using Elem = int;

  long size() const;
  Elem zero() const { return 0; }
  Elem one() const;
  Elem add(Elem a, Elem b) const;
  Elem mul(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const;
  Elem pow(Elem a, long e) const;  // e >= 0
  std::optional<Elem> inverse(Elem a) const;

  long characteristic() const;  // additive order of 1
  Elem from_int(long v) const;  // image of v under the unique map Z -> R

  // Canonical integer-vector encoding: residue; GF coefficient vector
  // c0..c_{k-1}; concatenation for products.
  const std::vector<long>& encoding(Elem a) const;
  Elem from_encoding(const std::vector<long>& enc) const;  // errc::foreign_element

  std::string show(Elem a) const;
  // Inverse of show; also accepts plain integers for any ring kind.
  Elem parse_element(std::string_view text) const;

  std::vector<Elem> idempotents() const;  // all e with e*e == e, ascending
  bool is_field() const;

  const RingSpec& spec() const;
  bool same_ring(const FiniteRing& o) const;

  friend FiniteRing build_ring(const RingSpec& spec);

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  explicit FiniteRing(std::shared_ptr<const Impl> i) : impl_(std::move(i)) {}
};

// Validates the ring spec (primality, irreducibility, n >= 1) and materializes the
// canonical carrier. Rings of size <= 64 get a full exhaustive axiom check.
FiniteRing build_ring(const RingSpec& spec);
FiniteRing build_ring(std::string_view spec_text);

// Lexicographically least monic irreducible of degree k over Z/p, as c0..ck.
std::vector<long> find_irreducible(long p, long k);

// Carrier reordered to begin with `prefix` (must be duplicate-free), with the
// remaining elements in canonical order.
std::vector<FiniteRing::Elem> enumerate_with_prefix(
    const FiniteRing& R, const std::vector<FiniteRing::Elem>& prefix);

// Exhaustive commutative-unital-ring axiom check; nullopt means all hold.
std::optional<std::string> check_ring_axioms(const FiniteRing& R);

// All unital ring homomorphisms A -> B, each as an image table indexed by A's
// carrier, in lexicographic table order. Brute force; |B|^|A| capped at 10^7.
std::vector<std::vector<FiniteRing::Elem>> ring_homs(const FiniteRing& A,
                                                     const FiniteRing& B);

}  // namespace twlab
