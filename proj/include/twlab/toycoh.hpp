#pragma once

#include <string>
#include <vector>

#include "twlab/biring.hpp"
#include "twlab/finring.hpp"
#include "twlab/poly.hpp"
#include "twlab/report.hpp"

namespace twlab {

// ---------------------------------------------------------------------------
// The function ring R^R: total maps carrier -> carrier with pointwise ring
// structure and composition as the monoid product.

class FunctionElement {
 public:
  FunctionElement(FiniteRing ring, std::vector<FiniteRing::Elem> table);

  static FunctionElement identity(const FiniteRing& R);
  static FunctionElement constant(const FiniteRing& R, FiniteRing::Elem c);
  static FunctionElement zero_fn(const FiniteRing& R) { return constant(R, R.zero()); }
  static FunctionElement one_fn(const FiniteRing& R) { return constant(R, R.one()); }

  const FiniteRing& ring() const { return ring_; }
  const std::vector<FiniteRing::Elem>& table() const { return table_; }
  FiniteRing::Elem operator()(FiniteRing::Elem r) const;

  // pointwise ring structure
  FunctionElement operator+(const FunctionElement& o) const;
  FunctionElement operator*(const FunctionElement& o) const;
  FunctionElement operator-() const;

  // (f.compose(g))(r) = f(g(r))
  FunctionElement compose(const FunctionElement& g) const;

  bool operator==(const FunctionElement& o) const;
  bool operator!=(const FunctionElement& o) const { return !(*this == o); }
  bool operator<(const FunctionElement& o) const;  // table order, for sets

  // value tuple in carrier order, e.g. "(0,1)" for the identity on Z/2
  std::string text() const;

 private:
  FiniteRing ring_;
  std::vector<FiniteRing::Elem> table_;

  const FiniteRing& check_same(const FunctionElement& o) const;
};

// Tables on carrier^2 under the pairing index (r1, r2) -> r1 * |R| + r2.
// coadd_fn(f)(r1,r2) = f(r1 + r2), comul_fn(f)(r1,r2) = f(r1 * r2).
std::vector<FiniteRing::Elem> coadd_fn(const FunctionElement& f);
std::vector<FiniteRing::Elem> comul_fn(const FunctionElement& f);

// The evaluation map R<x> -> R^R: P goes to the table r -> P(r). P must be
// univariate in x (constants allowed) with coefficients in R or Z.
FunctionElement eta(const FiniteRing& R, const Polynomial& P);

// For a finite field of size q: eta(P) vanishes exactly when P reduces to 0
// modulo x^q - x. Checked over all q^q reduced polynomials plus `lifts`
// seeded-random unreduced lifts of degree < 3q.
bool kernel_is_principal(const FiniteRing& R, unsigned long long seed = 0, int lifts = 64);

// (f . g)(x) = f(g(x)) for a table g: X -> carrier over an arbitrary finite
// index set X = {0, ..., |g|-1}.
std::vector<FiniteRing::Elem> module_action(const FunctionElement& f,
                                            const std::vector<FiniteRing::Elem>& g);

// ---------------------------------------------------------------------------
// Idempotent decompositions over a uniform ring interface.

// Finite commutative unital ring addressed by carrier index. Implementations:
// FiniteRingView (a FiniteRing) and SequenceRing (decomposition convolution).
class RingView {
 public:
  virtual ~RingView() = default;
  virtual long size() const = 0;
  virtual long zero() const = 0;
  virtual long one() const = 0;
  virtual long add(long a, long b) const = 0;
  virtual long mul(long a, long b) const = 0;
  virtual long neg(long a) const = 0;
  virtual std::string show(long a) const = 0;

  long sub(long a, long b) const { return add(a, neg(b)); }
  bool is_idempotent(long a) const { return mul(a, a) == a; }
  std::vector<long> idempotents() const;  // ascending carrier order
};

class FiniteRingView final : public RingView {
 public:
  explicit FiniteRingView(FiniteRing r) : r_(std::move(r)) {}
  long size() const override { return r_.size(); }
  long zero() const override { return r_.zero(); }
  long one() const override { return r_.one(); }
  long add(long a, long b) const override;
  long mul(long a, long b) const override;
  long neg(long a) const override;
  std::string show(long a) const override;
  const FiniteRing& ring() const { return r_; }

 private:
  FiniteRing r_;
};

// A decomposition of 1 into pairwise orthogonal idempotents, as base-view
// carrier indices in slot order. Slot labels are positional; displays use
// the base view's element shows.
using Decomp = std::vector<long>;

struct ToycohCaps {
  long base_cap = 4096;        // largest base view decompositions() will walk
  long decomp_cap = 1 << 20;   // largest decomposition count enumerated
  long sequence_cap = 4096;    // sequence-ring carriers materialize up to here
  long table_cap = 512;        // materialized sequence rings get op tables up to here
  long field_cap = 4096;       // largest q^q handled by tw_iso_check
  long full_cap = 256;         // largest q^q given the exhaustive pairwise checks
};

bool is_decomposition(const RingView& base, const Decomp& parts);
std::string show_decomp(const RingView& base, const Decomp& parts);

// All decompositions of 1 into `slots` ordered parts, lexicographically
// ascending in the parts vector. Every prefix of pairwise-orthogonal
// idempotents extends uniquely in the last slot by 1 - (partial sum), and a
// candidate part e is admissible iff e * (partial sum) == 0, so the walk
// prunes on a single product per candidate.
std::vector<Decomp> decompositions(const RingView& base, long slots,
                                   const ToycohCaps& caps = {});

// ---------------------------------------------------------------------------
// The sequence ring: |R'|-indexed decompositions of a base ring under the
// convolution operations
//   (a + b)_r0 = sum over r1 + r2 = r0 of a_r1 * b_r2
//   (a * b)_r0 = sum over r1 * r2 = r0 of a_r1 * b_r2
//   (r1 . a)_r0 = sum over r2 with r1 * r2 = r0 of a_r2.
// Zero is delta_0, one is delta_1. Carriers of at most `sequence_cap`
// decompositions are materialized (required for the RingView interface and
// for mu); larger ones fall back to membership tests and raw convolution.
class SequenceRing final : public RingView {
 public:
  SequenceRing(const RingView& base, FiniteRing index_ring, const ToycohCaps& caps = {});

  const RingView& base() const { return base_; }
  const FiniteRing& index_ring() const { return idx_; }
  bool materialized() const { return materialized_; }
  const std::vector<Decomp>& carrier() const;  // requires materialization
  long index_of(const Decomp& d) const;        // errc::foreign_element if absent
  bool contains(const Decomp& d) const;
  Decomp delta(FiniteRing::Elem r) const;      // unit of base in slot r

  // convolution on raw decompositions; closure is re-checked on every result
  Decomp conv_add(const Decomp& a, const Decomp& b) const;
  Decomp conv_mul(const Decomp& a, const Decomp& b) const;
  Decomp conv_neg(const Decomp& a) const;
  Decomp scalar_action(FiniteRing::Elem r1, const Decomp& a) const;

  // RingView interface over the materialized carrier
  long size() const override;
  long zero() const override { return zero_; }
  long one() const override { return one_; }
  long add(long a, long b) const override;
  long mul(long a, long b) const override;
  long neg(long a) const override;
  std::string show(long a) const override;

 private:
  const RingView& base_;
  FiniteRing idx_;
  bool materialized_ = false;
  std::vector<Decomp> carrier_;
  std::vector<long> addtab_, multab_, negtab_;  // filled up to table_cap
  long zero_ = 0, one_ = 0;

  const Decomp& check_member(const Decomp& d) const;
  long member_index(long a) const;  // bounds-check a view index
  Decomp checked(Decomp d, const char* op) const;
};

// mu_R on one decomposition: slot s of the image holds the sequence-ring
// element (1 - a_s, a_s, 0, ..., 0). `alpha` is indexed by the carrier of
// sr.index_ring() with parts in sr.base(); the image is indexed the same way
// with parts in sr itself.
Decomp mu_image(const SequenceRing& sr, const Decomp& alpha);

// Whether alpha * alpha == alpha in the sequence ring. Also evaluates the
// support criterion (alpha_r == 0 for every non-idempotent r of the index
// ring) independently and throws errc::internal_error if the two disagree.
bool idempotent_support(const SequenceRing& sr, const Decomp& alpha);

// Compares { mu_image(alpha) : alpha an |R|-indexed decomposition of B }
// with all |R|-indexed decompositions of SequenceRing(B, R). Returns set
// equality; mu_image is verified injective, and the verdict is checked
// against the idempotent criterion (bijective iff R has only 0 and 1).
bool mu_is_bijection(const FiniteRing& R, const FiniteRing& B, const ToycohCaps& caps = {});

// ---------------------------------------------------------------------------
// The isomorphism report for a finite field R of size q: the induced map
// eta from the reduced polynomials modulo x^q - x to R^R is checked to be a
// bijection of size q^q that matches the ring structure, the co-operations
// and all evaluations, sends x to the identity and 1 - x^{q-1} to the
// indicator of 0, and turns substitution into composition. Above
// `full_cap` reduced elements, only the bijection, the distinguished images
// and the evaluation rows run (the pairwise checks are skipped).
Report tw_iso_check(const FiniteRing& R, const ToycohCaps& caps = {});

}  // namespace twlab
