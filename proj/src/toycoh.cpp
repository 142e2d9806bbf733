#include "twlab/toycoh.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace twlab {

namespace {

long checked_int(long size, long a) {
  if (a < 0 || a >= size) throw error(errc::foreign_element, "carrier index out of range");
  return a;
}

}  // namespace

// ---------------------------------------------------------------------------
// FunctionElement

FunctionElement::FunctionElement(FiniteRing ring, std::vector<FiniteRing::Elem> table)
    : ring_(std::move(ring)), table_(std::move(table)) {
  if (static_cast<long>(table_.size()) != ring_.size())
    throw error(errc::index_mismatch, "function table must cover the whole carrier");
  for (FiniteRing::Elem v : table_) checked_int(ring_.size(), v);
}

FunctionElement FunctionElement::identity(const FiniteRing& R) {
  std::vector<FiniteRing::Elem> t(R.size());
  for (long r = 0; r < R.size(); ++r) t[r] = static_cast<FiniteRing::Elem>(r);
  return FunctionElement(R, std::move(t));
}

FunctionElement FunctionElement::constant(const FiniteRing& R, FiniteRing::Elem c) {
  checked_int(R.size(), c);
  return FunctionElement(R, std::vector<FiniteRing::Elem>(R.size(), c));
}

FiniteRing::Elem FunctionElement::operator()(FiniteRing::Elem r) const {
  return table_[checked_int(ring_.size(), r)];
}

const FiniteRing& FunctionElement::check_same(const FunctionElement& o) const {
  if (!ring_.same_ring(o.ring_))
    throw error(errc::ring_mismatch, "function elements over different rings");
  return ring_;
}

FunctionElement FunctionElement::operator+(const FunctionElement& o) const {
  check_same(o);
  std::vector<FiniteRing::Elem> t(table_.size());
  for (size_t r = 0; r < table_.size(); ++r) t[r] = ring_.add(table_[r], o.table_[r]);
  return FunctionElement(ring_, std::move(t));
}

FunctionElement FunctionElement::operator*(const FunctionElement& o) const {
  check_same(o);
  std::vector<FiniteRing::Elem> t(table_.size());
  for (size_t r = 0; r < table_.size(); ++r) t[r] = ring_.mul(table_[r], o.table_[r]);
  return FunctionElement(ring_, std::move(t));
}

FunctionElement FunctionElement::operator-() const {
  std::vector<FiniteRing::Elem> t(table_.size());
  for (size_t r = 0; r < table_.size(); ++r) t[r] = ring_.neg(table_[r]);
  return FunctionElement(ring_, std::move(t));
}

FunctionElement FunctionElement::compose(const FunctionElement& g) const {
  check_same(g);
  std::vector<FiniteRing::Elem> t(table_.size());
  for (size_t r = 0; r < table_.size(); ++r) t[r] = table_[g.table_[r]];
  return FunctionElement(ring_, std::move(t));
}

bool FunctionElement::operator==(const FunctionElement& o) const {
  return ring_.same_ring(o.ring_) && table_ == o.table_;
}

bool FunctionElement::operator<(const FunctionElement& o) const { return table_ < o.table_; }

std::string FunctionElement::text() const {
  std::string out = "(";
  for (size_t r = 0; r < table_.size(); ++r) {
    if (r) out += ",";
    out += ring_.show(table_[r]);
  }
  return out + ")";
}

std::vector<FiniteRing::Elem> coadd_fn(const FunctionElement& f) {
  const FiniteRing& R = f.ring();
  long n = R.size();
  std::vector<FiniteRing::Elem> t(n * n);
  for (long r1 = 0; r1 < n; ++r1)
    for (long r2 = 0; r2 < n; ++r2)
      t[r1 * n + r2] =
          f(R.add(static_cast<FiniteRing::Elem>(r1), static_cast<FiniteRing::Elem>(r2)));
  return t;
}

std::vector<FiniteRing::Elem> comul_fn(const FunctionElement& f) {
  const FiniteRing& R = f.ring();
  long n = R.size();
  std::vector<FiniteRing::Elem> t(n * n);
  for (long r1 = 0; r1 < n; ++r1)
    for (long r2 = 0; r2 < n; ++r2)
      t[r1 * n + r2] =
          f(R.mul(static_cast<FiniteRing::Elem>(r1), static_cast<FiniteRing::Elem>(r2)));
  return t;
}

FunctionElement eta(const FiniteRing& R, const Polynomial& P) {
  auto vars = P.variables();
  if (vars.size() > 1)
    throw error(errc::foreign_variable, "eta needs a univariate polynomial");
  std::string v = vars.empty() ? std::string("x") : *vars.begin();
  std::vector<FiniteRing::Elem> t(R.size());
  for (long r = 0; r < R.size(); ++r)
    t[r] = P.evaluate({{v, static_cast<FiniteRing::Elem>(r)}}, R);
  return FunctionElement(R, std::move(t));
}

bool kernel_is_principal(const FiniteRing& R, unsigned long long seed, int lifts) {
  if (!R.is_field()) throw error(errc::not_a_field, "kernel check needs a finite field");
  long q = R.size();
  Biring BR(R, q);
  const FunctionElement zero = FunctionElement::zero_fn(R);
  for (const Polynomial& P : BR.canonical_elements())
    if ((eta(R, P) == zero) != P.is_zero()) return false;

  const CoeffRing C = CoeffRing::of(R);
  const Polynomial x = Polynomial::variable(C, "x");
  std::mt19937_64 rng(seed);
  for (int i = 0; i < lifts; ++i) {
    Polynomial P = Polynomial::zero(C);
    for (long e = 0; e < 3 * q; ++e) {
      auto c = static_cast<FiniteRing::Elem>(rng() % static_cast<unsigned long long>(q));
      P = P + x.pow(e).scaled(c);
    }
    Polynomial red = BR.canon(P);
    if (eta(R, P) != eta(R, red)) return false;
    if ((eta(R, P) == zero) != red.is_zero()) return false;
  }
  return true;
}

std::vector<FiniteRing::Elem> module_action(const FunctionElement& f,
                                            const std::vector<FiniteRing::Elem>& g) {
  std::vector<FiniteRing::Elem> out(g.size());
  for (size_t x = 0; x < g.size(); ++x) out[x] = f(g[x]);
  return out;
}

// ---------------------------------------------------------------------------
// RingView

std::vector<long> RingView::idempotents() const {
  std::vector<long> out;
  for (long a = 0; a < size(); ++a)
    if (is_idempotent(a)) out.push_back(a);
  return out;
}

long FiniteRingView::add(long a, long b) const {
  return r_.add(static_cast<FiniteRing::Elem>(checked_int(size(), a)),
                static_cast<FiniteRing::Elem>(checked_int(size(), b)));
}

long FiniteRingView::mul(long a, long b) const {
  return r_.mul(static_cast<FiniteRing::Elem>(checked_int(size(), a)),
                static_cast<FiniteRing::Elem>(checked_int(size(), b)));
}

long FiniteRingView::neg(long a) const {
  return r_.neg(static_cast<FiniteRing::Elem>(checked_int(size(), a)));
}

std::string FiniteRingView::show(long a) const {
  return r_.show(static_cast<FiniteRing::Elem>(checked_int(size(), a)));
}

// ---------------------------------------------------------------------------
// Decompositions

bool is_decomposition(const RingView& base, const Decomp& parts) {
  if (parts.empty()) return false;
  for (long e : parts) {
    if (e < 0 || e >= base.size()) throw error(errc::foreign_element, "part outside the base ring");
    if (!base.is_idempotent(e)) return false;
  }
  for (size_t i = 0; i < parts.size(); ++i)
    for (size_t j = i + 1; j < parts.size(); ++j)
      if (base.mul(parts[i], parts[j]) != base.zero()) return false;
  long sum = base.zero();
  for (long e : parts) sum = base.add(sum, e);
  return sum == base.one();
}

std::string show_decomp(const RingView& base, const Decomp& parts) {
  std::string out = "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += base.show(parts[i]);
  }
  return out + ")";
}

std::vector<Decomp> decompositions(const RingView& base, long slots, const ToycohCaps& caps) {
  if (slots < 1) throw error(errc::usage_error, "need at least one slot");
  if (base.size() > caps.base_cap)
    throw error(errc::base_too_large, "base ring too large for decomposition enumeration");
  const std::vector<long> idems = base.idempotents();
  std::vector<Decomp> out;
  Decomp parts;
  parts.reserve(slots);

  // Walk slot by slot; a candidate is admissible iff its product with the
  // running sum vanishes, and the final slot is forced to 1 - sum.
  auto walk = [&](auto&& self, long sum) -> void {
    if (static_cast<long>(parts.size()) == slots - 1) {
      parts.push_back(base.sub(base.one(), sum));
      if (!is_decomposition(base, parts))
        throw error(errc::internal_error, "enumerated tuple is not a decomposition");
      if (static_cast<long>(out.size()) >= caps.decomp_cap)
        throw error(errc::cap_exceeded, "too many decompositions");
      out.push_back(parts);
      parts.pop_back();
      return;
    }
    for (long e : idems) {
      if (base.mul(e, sum) != base.zero()) continue;
      parts.push_back(e);
      self(self, base.add(sum, e));
      parts.pop_back();
    }
  };
  walk(walk, base.zero());
  return out;
}

// ---------------------------------------------------------------------------
// SequenceRing

SequenceRing::SequenceRing(const RingView& base, FiniteRing index_ring, const ToycohCaps& caps)
    : base_(base), idx_(std::move(index_ring)) {
  ToycohCaps eager = caps;
  eager.decomp_cap = std::min(caps.decomp_cap, caps.sequence_cap);
  try {
    carrier_ = decompositions(base_, idx_.size(), eager);
    materialized_ = true;
  } catch (const error& e) {
    if (e.code() != errc::cap_exceeded) throw;
    carrier_.clear();
    materialized_ = false;
  }
  if (materialized_) {
    zero_ = index_of(delta(idx_.zero()));
    one_ = index_of(delta(idx_.one()));
    long n = size();
    if (n <= caps.table_cap) {
      addtab_.resize(n * n);
      multab_.resize(n * n);
      negtab_.resize(n);
      for (long a = 0; a < n; ++a) {
        negtab_[a] = index_of(conv_neg(carrier_[a]));
        for (long b = 0; b < n; ++b) {
          addtab_[a * n + b] = index_of(conv_add(carrier_[a], carrier_[b]));
          multab_[a * n + b] = index_of(conv_mul(carrier_[a], carrier_[b]));
        }
      }
    }
  }
}

const std::vector<Decomp>& SequenceRing::carrier() const {
  if (!materialized_)
    throw error(errc::cap_exceeded, "sequence ring carrier is not materialized");
  return carrier_;
}

long SequenceRing::index_of(const Decomp& d) const {
  const auto& c = carrier();  // enforces materialization
  auto it = std::lower_bound(c.begin(), c.end(), d);
  if (it == c.end() || *it != d)
    throw error(errc::foreign_element, "not a member of the sequence ring");
  return static_cast<long>(it - c.begin());
}

bool SequenceRing::contains(const Decomp& d) const {
  if (static_cast<long>(d.size()) != idx_.size()) return false;
  for (long e : d)
    if (e < 0 || e >= base_.size()) return false;
  return is_decomposition(base_, d);
}

Decomp SequenceRing::delta(FiniteRing::Elem r) const {
  checked_int(idx_.size(), r);
  Decomp d(idx_.size(), base_.zero());
  d[r] = base_.one();
  return d;
}

const Decomp& SequenceRing::check_member(const Decomp& d) const {
  if (static_cast<long>(d.size()) != idx_.size())
    throw error(errc::index_mismatch, "decomposition index must match the index ring carrier");
  for (long e : d) checked_int(base_.size(), e);
  if (!is_decomposition(base_, d))
    throw error(errc::foreign_element, "not a decomposition of the base ring");
  return d;
}

Decomp SequenceRing::checked(Decomp d, const char* op) const {
  if (!is_decomposition(base_, d))
    throw error(errc::internal_error,
                std::string("sequence ring ") + op + " left the decomposition carrier");
  return d;
}

Decomp SequenceRing::conv_add(const Decomp& a, const Decomp& b) const {
  check_member(a);
  check_member(b);
  long k = idx_.size();
  Decomp out(k, base_.zero());
  for (long r1 = 0; r1 < k; ++r1)
    for (long r2 = 0; r2 < k; ++r2) {
      long r0 = idx_.add(static_cast<FiniteRing::Elem>(r1), static_cast<FiniteRing::Elem>(r2));
      out[r0] = base_.add(out[r0], base_.mul(a[r1], b[r2]));
    }
  return checked(std::move(out), "addition");
}

Decomp SequenceRing::conv_mul(const Decomp& a, const Decomp& b) const {
  check_member(a);
  check_member(b);
  long k = idx_.size();
  Decomp out(k, base_.zero());
  for (long r1 = 0; r1 < k; ++r1)
    for (long r2 = 0; r2 < k; ++r2) {
      long r0 = idx_.mul(static_cast<FiniteRing::Elem>(r1), static_cast<FiniteRing::Elem>(r2));
      out[r0] = base_.add(out[r0], base_.mul(a[r1], b[r2]));
    }
  return checked(std::move(out), "multiplication");
}

Decomp SequenceRing::conv_neg(const Decomp& a) const {
  check_member(a);
  long k = idx_.size();
  Decomp out(k, base_.zero());
  for (long r = 0; r < k; ++r) out[idx_.neg(static_cast<FiniteRing::Elem>(r))] = a[r];
  return checked(std::move(out), "negation");
}

Decomp SequenceRing::scalar_action(FiniteRing::Elem r1, const Decomp& a) const {
  checked_int(idx_.size(), r1);
  check_member(a);
  long k = idx_.size();
  Decomp out(k, base_.zero());
  for (long r2 = 0; r2 < k; ++r2) {
    long r0 = idx_.mul(r1, static_cast<FiniteRing::Elem>(r2));
    out[r0] = base_.add(out[r0], a[r2]);
  }
  return checked(std::move(out), "scalar action");
}

long SequenceRing::size() const { return static_cast<long>(carrier().size()); }

long SequenceRing::member_index(long a) const { return checked_int(size(), a); }

long SequenceRing::add(long a, long b) const {
  member_index(a);
  member_index(b);
  if (!addtab_.empty()) return addtab_[a * size() + b];
  return index_of(conv_add(carrier_[a], carrier_[b]));
}

long SequenceRing::mul(long a, long b) const {
  member_index(a);
  member_index(b);
  if (!multab_.empty()) return multab_[a * size() + b];
  return index_of(conv_mul(carrier_[a], carrier_[b]));
}

long SequenceRing::neg(long a) const {
  member_index(a);
  if (!negtab_.empty()) return negtab_[a];
  return index_of(conv_neg(carrier_[a]));
}

std::string SequenceRing::show(long a) const {
  return show_decomp(base_, carrier_[member_index(a)]);
}

// ---------------------------------------------------------------------------
// mu and the idempotent-support criterion

Decomp mu_image(const SequenceRing& sr, const Decomp& alpha) {
  const RingView& base = sr.base();
  long k = sr.index_ring().size();
  if (k < 2) throw error(errc::usage_error, "mu needs an index ring with 0 != 1");
  if (static_cast<long>(alpha.size()) != k)
    throw error(errc::index_mismatch, "decomposition index must match the index ring carrier");
  if (!is_decomposition(base, alpha))
    throw error(errc::foreign_element, "not a decomposition of the base ring");
  Decomp out(k);
  for (long s = 0; s < k; ++s) {
    Decomp part(k, base.zero());
    part[0] = base.sub(base.one(), alpha[s]);
    part[1] = alpha[s];
    out[s] = sr.index_of(part);
  }
  if (!is_decomposition(sr, out))
    throw error(errc::internal_error, "mu image is not a decomposition of the sequence ring");
  return out;
}

bool idempotent_support(const SequenceRing& sr, const Decomp& alpha) {
  bool by_square = sr.conv_mul(alpha, alpha) == alpha;
  const FiniteRing& R = sr.index_ring();
  bool by_support = true;
  for (long r = 0; r < R.size(); ++r) {
    auto e = static_cast<FiniteRing::Elem>(r);
    if (R.mul(e, e) != e && alpha[r] != sr.base().zero()) by_support = false;
  }
  if (by_square != by_support)
    throw error(errc::internal_error, "idempotent-support criterion out of step");
  return by_square;
}

bool mu_is_bijection(const FiniteRing& R, const FiniteRing& B, const ToycohCaps& caps) {
  FiniteRingView vb(B);
  SequenceRing sr(vb, R, caps);
  if (!sr.materialized())
    throw error(errc::base_too_large, "sequence ring too large to materialize");
  std::vector<Decomp> all = decompositions(sr, R.size(), caps);
  std::set<Decomp> image;
  for (const Decomp& alpha : sr.carrier()) image.insert(mu_image(sr, alpha));
  if (image.size() != sr.carrier().size())
    throw error(errc::internal_error, "mu is not injective");
  if (!std::includes(all.begin(), all.end(), image.begin(), image.end()))
    throw error(errc::internal_error, "mu image escapes the decomposition set");
  bool result = image.size() == all.size();
  bool trivial = R.idempotents().size() == 2;
  if (result != trivial)
    throw error(errc::internal_error, "mu verdict contradicts the idempotent criterion");
  return result;
}

// ---------------------------------------------------------------------------
// tw_iso_check

Report tw_iso_check(const FiniteRing& R, const ToycohCaps& caps) {
  if (!R.is_field()) throw error(errc::not_a_field, "isomorphism report needs a finite field");
  long q = R.size();
  long qq = 1;
  for (long i = 0; i < q; ++i) {
    if (qq > caps.field_cap / q + 1) throw error(errc::field_too_large, "q^q exceeds the cap");
    qq *= q;
  }
  if (qq > caps.field_cap) throw error(errc::field_too_large, "q^q exceeds the cap");
  const bool full = qq <= caps.full_cap;
  const std::string label = R.spec().text();

  Biring BR(R, q);
  std::vector<Polynomial> polys = BR.canonical_elements();
  std::vector<FunctionElement> imgs;
  imgs.reserve(polys.size());
  for (const Polynomial& P : polys) imgs.push_back(eta(R, P));

  Report rep;
  auto count_row = [&](std::string name, long expected_n, long got_n, const std::string& unit) {
    rep.add_eq(std::move(name), label, std::to_string(expected_n) + " " + unit,
               std::to_string(got_n) + " " + unit);
  };

  {
    std::set<std::vector<FiniteRing::Elem>> distinct;
    for (const FunctionElement& f : imgs) distinct.insert(f.table());
    count_row("eta-bijection", qq, static_cast<long>(distinct.size()), "distinct function tables");
  }

  const CoeffRing C = CoeffRing::of(R);
  const Polynomial x = Polynomial::variable(C, "x");
  rep.add_eq("unit-to-identity", label, FunctionElement::identity(R).text(),
             eta(R, x).text());
  {
    Polynomial d0 = Polynomial::constant(C, 1) - x.pow(q - 1);
    std::vector<FiniteRing::Elem> ind(q, R.zero());
    ind[0] = R.one();
    rep.add_eq("delta-zero", label, FunctionElement(R, ind).text(), eta(R, BR.canon(d0)).text());
  }
  {
    long bad = 0;
    for (size_t i = 0; i < polys.size(); ++i)
      for (long r = 0; r < q; ++r)
        if (BR.counit(polys[i], static_cast<FiniteRing::Elem>(r)) !=
            imgs[i](static_cast<FiniteRing::Elem>(r)))
          ++bad;
    count_row("counits", 0, bad, "mismatches among " + std::to_string(qq * q) + " evaluations");
  }

  if (!full) return rep;

  {
    long bad = 0;
    for (size_t i = 0; i < polys.size(); ++i) {
      const Polynomial co = BR.coadd(polys[i]).value;
      const Polynomial cm = BR.comul(polys[i]).value;
      std::vector<FiniteRing::Elem> coT(q * q), cmT(q * q);
      for (long r1 = 0; r1 < q; ++r1)
        for (long r2 = 0; r2 < q; ++r2) {
          std::map<std::string, FiniteRing::Elem> env = {
              {"x", static_cast<FiniteRing::Elem>(r1)}, {"y", static_cast<FiniteRing::Elem>(r2)}};
          coT[r1 * q + r2] = co.evaluate(env, R);
          cmT[r1 * q + r2] = cm.evaluate(env, R);
        }
      if (coT != coadd_fn(imgs[i])) ++bad;
      if (cmT != comul_fn(imgs[i])) ++bad;
    }
    count_row("co-operations", 0, bad,
              "table mismatches among " + std::to_string(2 * qq) + " elements");
  }
  {
    long bad = 0;
    for (size_t i = 0; i < polys.size(); ++i)
      for (size_t j = 0; j < polys.size(); ++j) {
        if (eta(R, polys[i] + polys[j]) != imgs[i] + imgs[j]) ++bad;
        if (eta(R, BR.canon(polys[i] * polys[j])) != imgs[i] * imgs[j]) ++bad;
      }
    count_row("ring-morphism", 0, bad,
              "mismatches among " + std::to_string(2 * qq * qq) + " pairs");
  }
  {
    long bad = 0;
    for (size_t i = 0; i < polys.size(); ++i)
      for (size_t j = 0; j < polys.size(); ++j) {
        Polynomial comp = BR.canon(polys[i].substitute({{"x", polys[j]}}));
        if (eta(R, comp) != imgs[i].compose(imgs[j])) ++bad;
      }
    count_row("composition", 0, bad, "mismatches among " + std::to_string(qq * qq) + " pairs");
  }
  return rep;
}

}  // namespace twlab
