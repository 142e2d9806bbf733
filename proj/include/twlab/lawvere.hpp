#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "twlab/finring.hpp"
#include "twlab/report.hpp"

namespace twlab {

// Finite term tree: a variable or an operation applied to argument terms.
// Text form is an S-expression: bare atoms are variables, applications are
// parenthesized, so the nullary constant of a theory is written "(0)".
class Term {
 public:
  static Term var(std::string name);
  static Term app(std::string symbol, std::vector<Term> args = {});

  bool is_var() const { return is_var_; }
  const std::string& head() const { return head_; }  // variable name or symbol
  const std::vector<Term>& args() const { return args_; }

  long depth() const;  // Var -> 0, App -> 1 + max over args (1 for constants)
  std::set<std::string> variables() const;
  // replaces bound variables by their images; unbound variables stay put
  Term substitute(const std::map<std::string, Term>& bindings) const;

  std::string text() const;
  static Term parse(std::string_view s);  // byte offsets on errors

  bool operator==(const Term& o) const;
  bool operator!=(const Term& o) const { return !(*this == o); }

 private:
  bool is_var_ = true;
  std::string head_;
  std::vector<Term> args_;
};

struct OpDecl {
  std::string symbol;
  long arity;
};

// A finitary equational presentation: named operations plus identities.
class TheoryPresentation {
 public:
  TheoryPresentation(std::string name, std::vector<OpDecl> ops,
                     std::vector<std::pair<Term, Term>> identities);

  const std::string& name() const { return name_; }
  const std::vector<OpDecl>& operations() const { return ops_; }
  const std::vector<std::pair<Term, Term>>& identities() const { return ids_; }
  std::optional<long> arity_of(const std::string& symbol) const;

  // Declarative text format: `op <symbol> <arity>` and `id <term> = <term>`
  // lines; `#` starts a comment. The embedded built-ins use this parser too.
  static TheoryPresentation parse(std::string_view text, std::string name);

  static const TheoryPresentation& monoid();
  static const TheoryPresentation& abgroup();
  static const TheoryPresentation& commring();

 private:
  std::string name_;
  std::vector<OpDecl> ops_;
  std::vector<std::pair<Term, Term>> ids_;
};

// A finite model: carrier {0..size-1} plus one table per operation.
// A table for an arity-a operation has size^a entries indexed little-endian:
// index = sum over i of args[i] * size^i.
class FiniteAlgebra {
 public:
  FiniteAlgebra(TheoryPresentation theory, long carrier_size,
                std::map<std::string, std::vector<long>> tables, std::string label = "");

  const TheoryPresentation& theory() const { return theory_; }
  long size() const { return size_; }
  const std::string& label() const { return label_; }  // e.g. "Z/4 as CommRing"
  long apply(const std::string& op, const std::vector<long>& args) const;

 private:
  TheoryPresentation theory_;
  long size_;
  std::map<std::string, std::vector<long>> tables_;
  std::string label_;
};

// Reference models over the canonical carriers.
FiniteAlgebra make_ring_model(const FiniteRing& R);         // CommRing
FiniteAlgebra make_add_group_model(const FiniteRing& R);    // AbGroup on (R,+)
FiniteAlgebra make_mult_monoid_model(const FiniteRing& R);  // Monoid on (R,*)
FiniteAlgebra make_cyclic_group_monoid(long n);             // C_n as a Monoid model

long eval_term(const Term& t, const FiniteAlgebra& A, const std::map<std::string, long>& env);

struct ModelVerdict {
  bool ok = false;
  std::string counterexample;  // "identity ... fails under {...}" when !ok
};
ModelVerdict is_model(const FiniteAlgebra& A, long carrier_cap = 8);

// Tagged copy s<i> of a generator, the i-th coproduct inclusion's image.
std::string tagged(const std::string& generator, long tag);

// The co-operation on the free algebra F(S) determined on generators:
// s maps to op(s<1>, ..., s<n>). Nullary operations give s -> (op).
std::map<std::string, Term> co_operation_on_free(const TheoryPresentation& T,
                                                 const std::string& op,
                                                 const std::vector<std::string>& S);

// All terms over the given variables with depth at most `depth`, deduplicated,
// in deterministic generation order (variables first, then level by level with
// operations in declaration order). Throws cap_exceeded past `term_cap`.
std::vector<Term> enumerate_terms(const TheoryPresentation& T,
                                  const std::vector<std::string>& vars, long depth,
                                  long term_cap = 100000);

struct LawvereCaps {
  long carrier = 8;
  long generators = 3;
  long depth = 3;
  long term_cap = 100000;
};

// Exhaustive check of the defining diagram of the co-operation: for every
// tuple (f_1..f_n) of maps S -> |A| and every term t of depth <= d, applying
// the extended co-operation to t and evaluating under s<i> -> f_i(s) agrees
// with evaluating t under the pointwise operation s -> op_A(f_1(s)..f_n(s)).
Report verify_coop_property(const TheoryPresentation& T, const std::string& op,
                            const std::vector<std::string>& S, const FiniteAlgebra& A,
                            long depth, const LawvereCaps& caps = {});

// Generator-level agreement of the pointwise structure on maps S -> |A| with
// the structure induced by the co-operations plus copairing, for every
// operation of T and every argument tuple.
Report hom_structures_agree(const TheoryPresentation& T, const std::vector<std::string>& S,
                            const FiniteAlgebra& A, const LawvereCaps& caps = {});

}  // namespace twlab
