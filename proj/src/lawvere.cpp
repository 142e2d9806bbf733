#include "twlab/lawvere.hpp"

#include <algorithm>
#include <cctype>

namespace twlab {

// --- Term ---

Term Term::var(std::string name) {
  Term t;
  t.is_var_ = true;
  t.head_ = std::move(name);
  return t;
}

Term Term::app(std::string symbol, std::vector<Term> args) {
  Term t;
  t.is_var_ = false;
  t.head_ = std::move(symbol);
  t.args_ = std::move(args);
  return t;
}

long Term::depth() const {
  if (is_var_) return 0;
  long d = 0;
  for (const auto& a : args_) d = std::max(d, a.depth());
  return 1 + d;
}

std::set<std::string> Term::variables() const {
  std::set<std::string> out;
  if (is_var_) {
    out.insert(head_);
    return out;
  }
  for (const auto& a : args_) {
    auto sub = a.variables();
    out.insert(sub.begin(), sub.end());
  }
  return out;
}

Term Term::substitute(const std::map<std::string, Term>& bindings) const {
  if (is_var_) {
    auto it = bindings.find(head_);
    return it == bindings.end() ? *this : it->second;
  }
  std::vector<Term> na;
  na.reserve(args_.size());
  for (const auto& a : args_) na.push_back(a.substitute(bindings));
  return app(head_, std::move(na));
}

std::string Term::text() const {
  if (is_var_) return head_;
  std::string out = "(" + head_;
  for (const auto& a : args_) out += " " + a.text();
  return out + ")";
}

bool Term::operator==(const Term& o) const {
  return is_var_ == o.is_var_ && head_ == o.head_ && args_ == o.args_;
}

namespace {

bool atom_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != '=' &&
         c != '#';
}

struct SexpParser {
  std::string_view s;
  size_t i = 0;
  long base = 0;  // added to offsets in errors

  [[noreturn]] void fail(const std::string& msg, size_t at) const {
    throw error(errc::parse_error, msg, base + static_cast<long>(at));
  }
  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  std::string atom() {
    size_t b = i;
    while (i < s.size() && atom_char(s[i])) ++i;
    if (i == b) fail("expected name", i);
    return std::string(s.substr(b, i - b));
  }
  Term term() {
    ws();
    if (i >= s.size()) fail("unexpected end of term", i);
    if (s[i] == ')') fail("unexpected ')'", i);
    if (s[i] != '(') return Term::var(atom());
    ++i;
    ws();
    std::string sym = atom();
    std::vector<Term> args;
    for (;;) {
      ws();
      if (i >= s.size()) fail("unterminated application", i);
      if (s[i] == ')') {
        ++i;
        return Term::app(std::move(sym), std::move(args));
      }
      args.push_back(term());
    }
  }
};

}  // namespace

Term Term::parse(std::string_view s) {
  SexpParser p{s, 0, 0};
  Term t = p.term();
  p.ws();
  if (p.i != s.size()) p.fail("trailing text after term", p.i);
  return t;
}

// --- TheoryPresentation ---

namespace {

void check_identity_side(const TheoryPresentation& t, const Term& side) {
  if (side.is_var()) return;
  auto ar = t.arity_of(side.head());
  if (!ar)
    throw error(errc::unknown_operation,
                "identity uses undeclared operation " + side.head() + " in theory " + t.name());
  if (*ar != static_cast<long>(side.args().size()))
    throw error(errc::arity_mismatch, "operation " + side.head() + " has arity " +
                                          std::to_string(*ar) + ", applied to " +
                                          std::to_string(side.args().size()) + " arguments");
  for (const auto& a : side.args()) check_identity_side(t, a);
}

}  // namespace

TheoryPresentation::TheoryPresentation(std::string name, std::vector<OpDecl> ops,
                                       std::vector<std::pair<Term, Term>> identities)
    : name_(std::move(name)), ops_(std::move(ops)), ids_(std::move(identities)) {
  for (size_t i = 0; i < ops_.size(); ++i) {
    if (ops_[i].arity < 0)
      throw error(errc::arity_mismatch, "operation " + ops_[i].symbol + " has negative arity");
    for (size_t j = i + 1; j < ops_.size(); ++j)
      if (ops_[i].symbol == ops_[j].symbol)
        throw error(errc::usage_error, "operation " + ops_[i].symbol + " declared twice");
  }
  for (const auto& [lhs, rhs] : ids_) {
    check_identity_side(*this, lhs);
    check_identity_side(*this, rhs);
  }
}

std::optional<long> TheoryPresentation::arity_of(const std::string& symbol) const {
  for (const auto& op : ops_)
    if (op.symbol == symbol) return op.arity;
  return std::nullopt;
}

TheoryPresentation TheoryPresentation::parse(std::string_view text, std::string name) {
  std::vector<OpDecl> ops;
  std::vector<std::pair<Term, Term>> ids;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    long line_base = static_cast<long>(pos);
    if (size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    size_t b = 0, e = line.size();
    while (b < e && std::isspace(static_cast<unsigned char>(line[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(line[e - 1]))) --e;
    std::string_view body = line.substr(b, e - b);
    long body_base = line_base + static_cast<long>(b);
    if (!body.empty()) {
      if (body.substr(0, 3) == "op ") {
        SexpParser p{body, 3, body_base};
        p.ws();
        std::string sym = p.atom();
        p.ws();
        size_t nb = p.i;
        while (p.i < body.size() && std::isdigit(static_cast<unsigned char>(body[p.i]))) ++p.i;
        if (p.i == nb) p.fail("expected arity", p.i);
        long arity = std::stol(std::string(body.substr(nb, p.i - nb)));
        p.ws();
        if (p.i != body.size()) p.fail("trailing text after op declaration", p.i);
        ops.push_back({std::move(sym), arity});
      } else if (body.substr(0, 3) == "id ") {
        // split at the top-level '='
        size_t depth = 0, cut = std::string_view::npos;
        for (size_t j = 3; j < body.size(); ++j) {
          if (body[j] == '(') ++depth;
          else if (body[j] == ')') --depth;
          else if (body[j] == '=' && depth == 0) {
            cut = j;
            break;
          }
        }
        if (cut == std::string_view::npos)
          throw error(errc::parse_error, "identity needs a top-level '='",
                      body_base + static_cast<long>(body.size()));
        SexpParser lp{body.substr(0, cut), 3, body_base};
        Term lhs = lp.term();
        lp.ws();
        if (lp.i != cut) lp.fail("trailing text before '='", lp.i);
        SexpParser rp{body, cut + 1, body_base};
        Term rhs = rp.term();
        rp.ws();
        if (rp.i != body.size()) rp.fail("trailing text after identity", rp.i);
        ids.emplace_back(std::move(lhs), std::move(rhs));
      } else {
        throw error(errc::parse_error, "expected an 'op' or 'id' line", body_base);
      }
    }
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  return TheoryPresentation(std::move(name), std::move(ops), std::move(ids));
}

const TheoryPresentation& TheoryPresentation::monoid() {
  static const TheoryPresentation t = parse(R"(
op * 2
op e 0
id (* (* x y) z) = (* x (* y z))
id (* (e) x) = x
id (* x (e)) = x
)",
                                            "Monoid");
  return t;
}

const TheoryPresentation& TheoryPresentation::abgroup() {
  static const TheoryPresentation t = parse(R"(
op + 2
op neg 1
op 0 0
id (+ (+ x y) z) = (+ x (+ y z))
id (+ x y) = (+ y x)
id (+ (0) x) = x
id (+ x (neg x)) = (0)
)",
                                            "AbGroup");
  return t;
}

const TheoryPresentation& TheoryPresentation::commring() {
  static const TheoryPresentation t = parse(R"(
op + 2
op * 2
op neg 1
op 0 0
op 1 0
id (+ (+ x y) z) = (+ x (+ y z))
id (+ x y) = (+ y x)
id (+ (0) x) = x
id (+ x (neg x)) = (0)
id (* (* x y) z) = (* x (* y z))
id (* x y) = (* y x)
id (* (1) x) = x
id (* x (+ y z)) = (+ (* x y) (* x z))
)",
                                            "CommRing");
  return t;
}

// --- FiniteAlgebra ---

FiniteAlgebra::FiniteAlgebra(TheoryPresentation theory, long carrier_size,
                             std::map<std::string, std::vector<long>> tables, std::string label)
    : theory_(std::move(theory)),
      size_(carrier_size),
      tables_(std::move(tables)),
      label_(std::move(label)) {
  if (size_ < 1) throw error(errc::zero_size, "carrier must be nonempty");
  for (const auto& op : theory_.operations()) {
    auto it = tables_.find(op.symbol);
    if (it == tables_.end())
      throw error(errc::usage_error, "missing table for operation " + op.symbol);
    size_t want = 1;
    for (long i = 0; i < op.arity; ++i) want *= static_cast<size_t>(size_);
    if (it->second.size() != want)
      throw error(errc::usage_error, "table for " + op.symbol + " has " +
                                         std::to_string(it->second.size()) + " entries, expected " +
                                         std::to_string(want));
    for (long v : it->second)
      if (v < 0 || v >= size_)
        throw error(errc::foreign_element, "table for " + op.symbol + " maps outside the carrier");
  }
  for (const auto& kv : tables_)
    if (!theory_.arity_of(kv.first))
      throw error(errc::unknown_operation, "table for undeclared operation " + kv.first);
  if (label_.empty()) label_ = theory_.name() + " model of size " + std::to_string(size_);
}

long FiniteAlgebra::apply(const std::string& op, const std::vector<long>& args) const {
  auto ar = theory_.arity_of(op);
  if (!ar) throw error(errc::unknown_operation, "no operation " + op + " in " + theory_.name());
  if (*ar != static_cast<long>(args.size()))
    throw error(errc::arity_mismatch, op + " expects " + std::to_string(*ar) + " arguments, got " +
                                          std::to_string(args.size()));
  size_t idx = 0, stride = 1;
  for (long a : args) {
    if (a < 0 || a >= size_)
      throw error(errc::foreign_element, "argument " + std::to_string(a) + " outside the carrier");
    idx += static_cast<size_t>(a) * stride;
    stride *= static_cast<size_t>(size_);
  }
  return tables_.at(op)[idx];
}

FiniteAlgebra make_ring_model(const FiniteRing& R) {
  const long n = R.size();
  std::vector<long> add(n * n), mul(n * n), neg(n);
  for (long a = 0; a < n; ++a) {
    neg[a] = R.neg(static_cast<int>(a));
    for (long b = 0; b < n; ++b) {
      add[a + b * n] = R.add(static_cast<int>(a), static_cast<int>(b));
      mul[a + b * n] = R.mul(static_cast<int>(a), static_cast<int>(b));
    }
  }
  return FiniteAlgebra(TheoryPresentation::commring(), n,
                       {{"+", add},
                        {"*", mul},
                        {"neg", neg},
                        {"0", {R.zero()}},
                        {"1", {R.one()}}},
                       R.spec().text() + " as CommRing");
}

FiniteAlgebra make_add_group_model(const FiniteRing& R) {
  const long n = R.size();
  std::vector<long> add(n * n), neg(n);
  for (long a = 0; a < n; ++a) {
    neg[a] = R.neg(static_cast<int>(a));
    for (long b = 0; b < n; ++b) add[a + b * n] = R.add(static_cast<int>(a), static_cast<int>(b));
  }
  return FiniteAlgebra(TheoryPresentation::abgroup(), n,
                       {{"+", add}, {"neg", neg}, {"0", {R.zero()}}},
                       R.spec().text() + " as AbGroup");
}

FiniteAlgebra make_mult_monoid_model(const FiniteRing& R) {
  const long n = R.size();
  std::vector<long> mul(n * n);
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) mul[a + b * n] = R.mul(static_cast<int>(a), static_cast<int>(b));
  return FiniteAlgebra(TheoryPresentation::monoid(), n, {{"*", mul}, {"e", {R.one()}}},
                       R.spec().text() + " as multiplicative Monoid");
}

FiniteAlgebra make_cyclic_group_monoid(long n) {
  if (n < 1) throw error(errc::zero_size, "cyclic monoid needs n >= 1");
  std::vector<long> tab(n * n);
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) tab[a + b * n] = (a + b) % n;
  return FiniteAlgebra(TheoryPresentation::monoid(), n, {{"*", tab}, {"e", {0}}},
                       "C" + std::to_string(n));
}

// --- evaluation and model checking ---

long eval_term(const Term& t, const FiniteAlgebra& A, const std::map<std::string, long>& env) {
  if (t.is_var()) {
    auto it = env.find(t.head());
    if (it == env.end())
      throw error(errc::unbound_variable, "no value for variable " + t.head());
    if (it->second < 0 || it->second >= A.size())
      throw error(errc::foreign_element, "environment value outside the carrier");
    return it->second;
  }
  std::vector<long> vals;
  vals.reserve(t.args().size());
  for (const auto& a : t.args()) vals.push_back(eval_term(a, A, env));
  return A.apply(t.head(), vals);
}

ModelVerdict is_model(const FiniteAlgebra& A, long carrier_cap) {
  if (A.size() > carrier_cap)
    throw error(errc::carrier_too_large, "carrier size " + std::to_string(A.size()) +
                                             " exceeds the cap " + std::to_string(carrier_cap));
  for (const auto& [lhs, rhs] : A.theory().identities()) {
    std::set<std::string> vset = lhs.variables();
    auto rv = rhs.variables();
    vset.insert(rv.begin(), rv.end());
    std::vector<std::string> vars(vset.begin(), vset.end());
    std::vector<long> assign(vars.size(), 0);
    for (;;) {
      std::map<std::string, long> env;
      for (size_t i = 0; i < vars.size(); ++i) env[vars[i]] = assign[i];
      if (eval_term(lhs, A, env) != eval_term(rhs, A, env)) {
        std::string e = "{";
        for (size_t i = 0; i < vars.size(); ++i)
          e += (i ? ", " : "") + vars[i] + "->" + std::to_string(assign[i]);
        e += "}";
        return {false, "identity " + lhs.text() + " = " + rhs.text() + " fails under " + e};
      }
      size_t i = 0;
      while (i < assign.size() && ++assign[i] == A.size()) assign[i++] = 0;
      if (i == assign.size()) break;
    }
  }
  return {true, ""};
}

// --- co-operations on free algebras ---

std::string tagged(const std::string& generator, long tag) {
  return generator + "@" + std::to_string(tag);
}

std::map<std::string, Term> co_operation_on_free(const TheoryPresentation& T,
                                                 const std::string& op,
                                                 const std::vector<std::string>& S) {
  auto ar = T.arity_of(op);
  if (!ar) throw error(errc::unknown_operation, "no operation " + op + " in " + T.name());
  std::map<std::string, Term> out;
  for (const auto& s : S) {
    std::vector<Term> args;
    for (long i = 1; i <= *ar; ++i) args.push_back(Term::var(tagged(s, i)));
    out.emplace(s, Term::app(op, std::move(args)));
  }
  return out;
}

std::vector<Term> enumerate_terms(const TheoryPresentation& T,
                                  const std::vector<std::string>& vars, long depth,
                                  long term_cap) {
  std::vector<Term> out;
  std::set<std::string> seen;
  auto add = [&](Term t) {
    if (seen.insert(t.text()).second) {
      out.push_back(std::move(t));
      if (static_cast<long>(out.size()) > term_cap)
        throw error(errc::cap_exceeded, "term enumeration exceeds the cap of " +
                                            std::to_string(term_cap) + " terms");
    }
  };
  for (const auto& v : vars) add(Term::var(v));
  for (long lvl = 1; lvl <= depth; ++lvl) {
    size_t level_end = out.size();  // argument candidates: every term of depth < lvl
    for (const auto& op : T.operations()) {
      if (op.arity == 0) {
        add(Term::app(op.symbol));
        continue;
      }
      if (level_end == 0) continue;  // no argument candidates yet
      std::vector<size_t> pick(op.arity, 0);
      for (;;) {
        std::vector<Term> args;
        args.reserve(op.arity);
        for (long i = 0; i < op.arity; ++i) args.push_back(out[pick[i]]);
        add(Term::app(op.symbol, std::move(args)));
        long i = op.arity - 1;
        while (i >= 0 && ++pick[i] == level_end) pick[i--] = 0;
        if (i < 0) break;
      }
    }
  }
  return out;
}

namespace {

// odometer over n*k base-m digits; digit (i*k + j) holds f_i(S[j])
struct TupleIter {
  long n, k, m;
  std::vector<long> digits;
  bool done = false;
  TupleIter(long n_, long k_, long m_) : n(n_), k(k_), m(m_), digits(n_ * k_, 0) {}
  long f(long i, long j) const { return digits[i * k + j]; }
  void next() {
    size_t i = 0;
    while (i < digits.size() && ++digits[i] == m) digits[i++] = 0;
    if (i == digits.size()) done = true;
  }
  std::string show(const std::vector<std::string>& S) const {
    std::string out;
    for (long i = 0; i < n; ++i) {
      out += (i ? " f" : "f") + std::to_string(i + 1) + "={";
      for (long j = 0; j < k; ++j)
        out += (j ? ", " : "") + S[j] + "->" + std::to_string(f(i, j));
      out += "}";
    }
    return out.empty() ? "()" : out;
  }
};

double case_count(long n, long k, long m, double per_tuple) {
  double total = per_tuple;
  for (long i = 0; i < n * k; ++i) total *= m;
  return total;
}

}  // namespace

Report verify_coop_property(const TheoryPresentation& T, const std::string& op,
                            const std::vector<std::string>& S, const FiniteAlgebra& A,
                            long depth, const LawvereCaps& caps) {
  if (A.theory().name() != T.name())
    throw error(errc::instance_mismatch,
                "algebra models " + A.theory().name() + ", expected " + T.name());
  if (A.size() > caps.carrier)
    throw error(errc::carrier_too_large, "carrier size " + std::to_string(A.size()) +
                                             " exceeds the cap " + std::to_string(caps.carrier));
  if (static_cast<long>(S.size()) > caps.generators)
    throw error(errc::cap_exceeded, "generator set larger than the cap");
  if (depth > caps.depth)
    throw error(errc::depth_too_large, "depth " + std::to_string(depth) + " exceeds the cap " +
                                           std::to_string(caps.depth));
  auto ar = T.arity_of(op);
  if (!ar) throw error(errc::unknown_operation, "no operation " + op + " in " + T.name());
  const long n = *ar, k = static_cast<long>(S.size()), m = A.size();

  Report rep;
  ModelVerdict mv = is_model(A, caps.carrier);
  rep.add({"model-check", A.label(), "model of " + T.name(),
           mv.ok ? "model of " + T.name() : mv.counterexample, mv.ok});
  if (!mv.ok) return rep;

  auto coop = co_operation_on_free(T, op, S);
  auto terms = enumerate_terms(T, S, depth, caps.term_cap);
  if (case_count(n, k, m, static_cast<double>(terms.size())) > 5e6)
    throw error(errc::cap_exceeded, "diagram case count exceeds the cap");
  std::vector<Term> coop_images;
  coop_images.reserve(terms.size());
  for (const auto& t : terms) coop_images.push_back(t.substitute(coop));

  long failures = 0, cases = 0;
  std::vector<Check> details;
  for (TupleIter it(n, k, m); !it.done; it.next()) {
    std::map<std::string, long> env_tagged, env_point;
    for (long j = 0; j < k; ++j) {
      std::vector<long> vals;
      vals.reserve(n);
      for (long i = 0; i < n; ++i) {
        env_tagged[tagged(S[j], i + 1)] = it.f(i, j);
        vals.push_back(it.f(i, j));
      }
      env_point[S[j]] = A.apply(op, vals);
    }
    for (size_t ti = 0; ti < terms.size(); ++ti) {
      long lhs = eval_term(coop_images[ti], A, env_tagged);
      long rhs = eval_term(terms[ti], A, env_point);
      ++cases;
      if (lhs != rhs) {
        ++failures;
        if (details.size() < 10)
          details.push_back({"coop-diagram-case", terms[ti].text() + " under " + it.show(S),
                             std::to_string(rhs), std::to_string(lhs), false});
      }
    }
  }
  rep.add({"coop-diagram",
           "op=" + op + " |S|=" + std::to_string(k) + " A=" + A.label() +
               " depth=" + std::to_string(depth),
           "0 failures", std::to_string(failures) + " failures in " + std::to_string(cases) +
                             " cases",
           failures == 0});
  for (auto& d : details) rep.add(std::move(d));
  return rep;
}

Report hom_structures_agree(const TheoryPresentation& T, const std::vector<std::string>& S,
                            const FiniteAlgebra& A, const LawvereCaps& caps) {
  if (A.theory().name() != T.name())
    throw error(errc::instance_mismatch,
                "algebra models " + A.theory().name() + ", expected " + T.name());
  if (A.size() > caps.carrier)
    throw error(errc::carrier_too_large, "carrier size " + std::to_string(A.size()) +
                                             " exceeds the cap " + std::to_string(caps.carrier));
  if (static_cast<long>(S.size()) > caps.generators)
    throw error(errc::cap_exceeded, "generator set larger than the cap");
  const long k = static_cast<long>(S.size()), m = A.size();

  Report rep;
  ModelVerdict mv = is_model(A, caps.carrier);
  rep.add({"model-check", A.label(), "model of " + T.name(),
           mv.ok ? "model of " + T.name() : mv.counterexample, mv.ok});
  if (!mv.ok) return rep;

  for (const auto& op : T.operations()) {
    const long n = op.arity;
    if (case_count(n, k, m, static_cast<double>(std::max(k, 1L))) > 5e6)
      throw error(errc::cap_exceeded, "hom-structure case count exceeds the cap");
    auto coop = co_operation_on_free(T, op.symbol, S);
    long tuples = 0, disagreements = 0;
    for (TupleIter it(n, k, m); !it.done; it.next()) {
      ++tuples;
      std::map<std::string, long> env_tagged;
      for (long j = 0; j < k; ++j)
        for (long i = 0; i < n; ++i) env_tagged[tagged(S[j], i + 1)] = it.f(i, j);
      for (long j = 0; j < k; ++j) {
        std::vector<long> vals;
        vals.reserve(n);
        for (long i = 0; i < n; ++i) vals.push_back(it.f(i, j));
        long pointwise = A.apply(op.symbol, vals);
        long induced = eval_term(coop.at(S[j]), A, env_tagged);
        if (pointwise != induced) ++disagreements;
      }
    }
    rep.add({"hom-structure", "op=" + op.symbol + " |S|=" + std::to_string(k) + " A=" + A.label(),
             "agreement on all " + std::to_string(tuples) + " tuples",
             disagreements == 0
                 ? "agreement on all " + std::to_string(tuples) + " tuples"
                 : std::to_string(disagreements) + " disagreements",
             disagreements == 0});
  }
  return rep;
}

}  // namespace twlab
