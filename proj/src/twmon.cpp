#include "twlab/twmon.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace twlab {

// ---------------------------------------------------------------------------
// FiniteMonoid

FiniteMonoid::FiniteMonoid(std::string name, std::vector<std::string> labels,
                           std::vector<int> table)
    : name_(std::move(name)), labels_(std::move(labels)), table_(std::move(table)) {
  long n = size();
  if (n == 0) throw error(errc::zero_size, "monoid carrier is empty");
  if (static_cast<long>(table_.size()) != n * n)
    throw error(errc::usage_error, "monoid table must have size^2 entries");
  for (int v : table_)
    if (v < 0 || v >= n) throw error(errc::foreign_element, "monoid table entry out of range");
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (static_cast<long>(seen.size()) != n)
    throw error(errc::usage_error, "monoid labels must be distinct");
  for (int a = 0; a < n; ++a)
    if (mul(0, a) != a || mul(a, 0) != a)
      throw error(errc::usage_error, "element 0 is not a two-sided identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw error(errc::usage_error, "monoid table is not associative");
}

FiniteMonoid FiniteMonoid::cyclic(long n) {
  if (n < 1) throw error(errc::zero_size, "cyclic monoid needs n >= 1");
  std::vector<std::string> labels;
  for (long i = 0; i < n; ++i)
    labels.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g" + std::to_string(i)));
  std::vector<int> table(n * n);
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) table[a * n + b] = static_cast<int>((a + b) % n);
  return FiniteMonoid("C" + std::to_string(n), std::move(labels), std::move(table));
}

int FiniteMonoid::mul(int a, int b) const {
  long n = size();
  if (a < 0 || a >= n || b < 0 || b >= n)
    throw error(errc::foreign_element, "monoid element out of range");
  return table_[a * n + b];
}

const std::string& FiniteMonoid::label(int a) const {
  if (a < 0 || a >= size()) throw error(errc::foreign_element, "monoid element out of range");
  return labels_[a];
}

// ---------------------------------------------------------------------------
// PolyTW

PolyTW::PolyTW(Biring biring) : biring_(std::move(biring)) {}

std::string PolyTW::name() const {
  std::string base = biring_.base().spec().text();
  if (auto q = biring_.modulus_q()) return "PolyTW(" + base + ", q=" + std::to_string(*q) + ")";
  return "PolyTW(" + base + ", free)";
}

const Polynomial& PolyTW::check(const Polynomial& a) const {
  if (a.coeff_ring() != biring_.coeffs())
    throw error(errc::instance_mismatch, "polynomial is not over this instance's base ring");
  for (const auto& v : a.variables())
    if (v != "x")
      throw error(errc::instance_mismatch, "instance elements are univariate in x");
  return a;
}

Polynomial PolyTW::unit() const { return Polynomial::variable(biring_.coeffs(), "x"); }

Polynomial PolyTW::ring_one() const { return Polynomial::constant(biring_.coeffs(), 1); }

Polynomial PolyTW::add(const Polynomial& a, const Polynomial& b) const {
  return biring_.canon(check(a) + check(b));
}

Polynomial PolyTW::mul(const Polynomial& a, const Polynomial& b) const {
  return biring_.canon(check(a) * check(b));
}

Polynomial PolyTW::compose(const Polynomial& a, const Polynomial& b) const {
  check(b);
  return biring_.canon(check(a).substitute({{"x", b}}));
}

std::vector<FiniteRing::Elem> PolyTW::rho_values() const {
  std::vector<FiniteRing::Elem> out(biring_.base().size());
  for (long r = 0; r < biring_.base().size(); ++r) out[r] = static_cast<FiniteRing::Elem>(r);
  return out;
}

Polynomial PolyTW::constant_of(FiniteRing::Elem rho) const {
  return Polynomial::monomial(biring_.coeffs(), Monomial(), rho);
}

Polynomial PolyTW::counit_constant(const Polynomial& a, FiniteRing::Elem rho) const {
  return constant_of(biring_.counit(check(a), rho));
}

Polynomial PolyTW::fold_add(const Polynomial& a, const Polynomial& b,
                            const Polynomial& c) const {
  check(b);
  check(c);
  Polynomial w = biring_.coadd(check(a)).value;
  return biring_.canon(w.substitute({{"x", b}, {"y", c}}));
}

Polynomial PolyTW::fold_mul(const Polynomial& a, const Polynomial& b,
                            const Polynomial& c) const {
  check(b);
  check(c);
  Polynomial w = biring_.comul(check(a)).value;
  return biring_.canon(w.substitute({{"x", b}, {"y", c}}));
}

std::vector<Polynomial> PolyTW::sample_carrier(const TwmonCaps& caps, std::string* policy) const {
  long n = biring_.base().size();
  if (auto q = biring_.modulus_q()) {
    long total = 1;
    bool fits = true;
    for (long i = 0; i < *q; ++i) {
      total *= n;
      if (total > caps.exhaustive_cap) {
        fits = false;
        break;
      }
    }
    if (fits) {
      if (policy) *policy = "exhaustive over " + std::to_string(total) + " elements";
      return biring_.canonical_elements();
    }
  }
  std::mt19937_64 rng(caps.seed);
  long deg = biring_.modulus_q() ? *biring_.modulus_q() - 1 : caps.max_degree;
  const Polynomial x = unit();
  std::vector<Polynomial> out = {unit(), ring_one()};
  while (static_cast<long>(out.size()) < caps.sample_count + 2) {
    Polynomial P = Polynomial::zero(biring_.coeffs());
    for (long e = 0; e <= deg; ++e)
      P = P + x.pow(e).scaled(static_cast<long>(rng() % static_cast<unsigned long long>(n)));
    out.push_back(biring_.canon(P));
  }
  if (policy)
    *policy = "seeded (seed=" + std::to_string(caps.seed) + ", " +
              std::to_string(out.size()) + " samples)";
  return out;
}

// ---------------------------------------------------------------------------
// FunTW

FunTW::FunTW(FiniteRing ring) : ring_(std::move(ring)) {}

std::string FunTW::name() const { return "FunTW(" + ring_.spec().text() + ")"; }

const FunctionElement& FunTW::check(const FunctionElement& a) const {
  if (!a.ring().same_ring(ring_))
    throw error(errc::instance_mismatch, "function is not over this instance's ring");
  return a;
}

FunctionElement FunTW::unit() const { return FunctionElement::identity(ring_); }

FunctionElement FunTW::ring_one() const { return FunctionElement::one_fn(ring_); }

FunctionElement FunTW::add(const FunctionElement& a, const FunctionElement& b) const {
  return check(a) + check(b);
}

FunctionElement FunTW::mul(const FunctionElement& a, const FunctionElement& b) const {
  return check(a) * check(b);
}

FunctionElement FunTW::compose(const FunctionElement& a, const FunctionElement& b) const {
  return check(a).compose(check(b));
}

std::vector<FiniteRing::Elem> FunTW::rho_values() const {
  std::vector<FiniteRing::Elem> out(ring_.size());
  for (long r = 0; r < ring_.size(); ++r) out[r] = static_cast<FiniteRing::Elem>(r);
  return out;
}

FunctionElement FunTW::constant_of(FiniteRing::Elem rho) const {
  return FunctionElement::constant(ring_, rho);
}

FunctionElement FunTW::counit_constant(const FunctionElement& a, FiniteRing::Elem rho) const {
  return FunctionElement::constant(ring_, check(a)(rho));
}

FunctionElement FunTW::fold_add(const FunctionElement& a, const FunctionElement& b,
                                const FunctionElement& c) const {
  check(b);
  check(c);
  auto table = coadd_fn(check(a));
  long n = ring_.size();
  std::vector<FiniteRing::Elem> t(n);
  for (long r = 0; r < n; ++r)
    t[r] = table[b(static_cast<FiniteRing::Elem>(r)) * n + c(static_cast<FiniteRing::Elem>(r))];
  return FunctionElement(ring_, std::move(t));
}

FunctionElement FunTW::fold_mul(const FunctionElement& a, const FunctionElement& b,
                                const FunctionElement& c) const {
  check(b);
  check(c);
  auto table = comul_fn(check(a));
  long n = ring_.size();
  std::vector<FiniteRing::Elem> t(n);
  for (long r = 0; r < n; ++r)
    t[r] = table[b(static_cast<FiniteRing::Elem>(r)) * n + c(static_cast<FiniteRing::Elem>(r))];
  return FunctionElement(ring_, std::move(t));
}

std::vector<FunctionElement> FunTW::sample_carrier(const TwmonCaps& caps,
                                                   std::string* policy) const {
  long n = ring_.size();
  long total = 1;
  bool fits = true;
  for (long i = 0; i < n; ++i) {
    total *= n;
    if (total > caps.exhaustive_cap) {
      fits = false;
      break;
    }
  }
  if (fits) {
    std::vector<FunctionElement> out;
    for (long k = 0; k < total; ++k) {
      std::vector<FiniteRing::Elem> t(n);
      long acc = k;
      for (long i = 0; i < n; ++i) {
        t[i] = static_cast<FiniteRing::Elem>(acc % n);
        acc /= n;
      }
      out.emplace_back(ring_, std::move(t));
    }
    if (policy) *policy = "exhaustive over " + std::to_string(total) + " elements";
    return out;
  }
  std::mt19937_64 rng(caps.seed);
  std::vector<FunctionElement> out = {unit(), constant_of(ring_.zero()), ring_one()};
  while (static_cast<long>(out.size()) < caps.sample_count + 3) {
    std::vector<FiniteRing::Elem> t(n);
    for (long i = 0; i < n; ++i)
      t[i] = static_cast<FiniteRing::Elem>(rng() % static_cast<unsigned long long>(n));
    out.emplace_back(ring_, std::move(t));
  }
  if (policy)
    *policy = "seeded (seed=" + std::to_string(caps.seed) + ", " +
              std::to_string(out.size()) + " samples)";
  return out;
}

// ---------------------------------------------------------------------------
// MonoidPlethory

MonoidPlethory::MonoidPlethory(FiniteMonoid m)
    : monoid_(std::move(m)), ints_(CoeffRing::integers()) {}

std::string MonoidPlethory::name() const { return "MonoidPlethory(" + monoid_.name() + ")"; }

std::string MonoidPlethory::var_of(int m) const { return "x_" + monoid_.label(m); }

Polynomial MonoidPlethory::generator(int m) const {
  return Polynomial::variable(ints_, var_of(m));
}

const Polynomial& MonoidPlethory::check(const Polynomial& a) const {
  if (!a.coeff_ring().is_integers())
    throw error(errc::instance_mismatch, "monoid plethory elements have integer coefficients");
  std::set<std::string> allowed;
  for (int m = 0; m < monoid_.size(); ++m) allowed.insert(var_of(m));
  for (const auto& v : a.variables())
    if (!allowed.count(v))
      throw error(errc::instance_mismatch, "unknown generator " + v);
  return a;
}

Polynomial MonoidPlethory::sigma(int m, const Polynomial& P) const {
  std::map<std::string, std::string> ren;
  for (int l = 0; l < monoid_.size(); ++l) ren[var_of(l)] = var_of(monoid_.mul(m, l));
  return check(P).rename(ren);
}

Polynomial MonoidPlethory::ring_one() const { return Polynomial::constant(ints_, 1); }

Polynomial MonoidPlethory::add(const Polynomial& a, const Polynomial& b) const {
  return check(a) + check(b);
}

Polynomial MonoidPlethory::mul(const Polynomial& a, const Polynomial& b) const {
  return check(a) * check(b);
}

Polynomial MonoidPlethory::compose(const Polynomial& a, const Polynomial& b) const {
  check(b);
  std::map<std::string, Polynomial> bind;
  for (int m = 0; m < monoid_.size(); ++m) bind.emplace(var_of(m), sigma(m, b));
  return check(a).substitute(bind);
}

std::vector<long> MonoidPlethory::rho_values() const { return {-2, -1, 0, 1, 2}; }

Polynomial MonoidPlethory::constant_of(long rho) const {
  return Polynomial::constant(ints_, rho);
}

Polynomial MonoidPlethory::counit_constant(const Polynomial& a, long rho) const {
  std::map<std::string, Polynomial> bind;
  for (int m = 0; m < monoid_.size(); ++m) bind.emplace(var_of(m), constant_of(rho));
  return check(a).substitute(bind);
}

Polynomial MonoidPlethory::fold_add(const Polynomial& a, const Polynomial& b,
                                    const Polynomial& c) const {
  check(b);
  check(c);
  std::map<std::string, Polynomial> spread, legs;
  for (int m = 0; m < monoid_.size(); ++m) {
    std::string xm = var_of(m), ym = "y_" + monoid_.label(m);
    spread.emplace(xm, Polynomial::variable(ints_, xm) + Polynomial::variable(ints_, ym));
    legs.emplace(xm, sigma(m, b));
    legs.emplace(ym, sigma(m, c));
  }
  return check(a).substitute(spread).substitute(legs);
}

Polynomial MonoidPlethory::fold_mul(const Polynomial& a, const Polynomial& b,
                                    const Polynomial& c) const {
  check(b);
  check(c);
  std::map<std::string, Polynomial> spread, legs;
  for (int m = 0; m < monoid_.size(); ++m) {
    std::string xm = var_of(m), ym = "y_" + monoid_.label(m);
    spread.emplace(xm, Polynomial::variable(ints_, xm) * Polynomial::variable(ints_, ym));
    legs.emplace(xm, sigma(m, b));
    legs.emplace(ym, sigma(m, c));
  }
  return check(a).substitute(spread).substitute(legs);
}

std::vector<Polynomial> MonoidPlethory::sample_carrier(const TwmonCaps& caps,
                                                       std::string* policy) const {
  std::vector<Polynomial> out = {unit(), ring_one()};
  for (int m = 1; m < monoid_.size(); ++m) out.push_back(generator(m));
  std::mt19937_64 rng(caps.seed);
  auto rnd = [&](long span) { return static_cast<long>(rng() % static_cast<unsigned long long>(span)); };
  while (static_cast<long>(out.size()) < caps.sample_count + 2) {
    Polynomial P = Polynomial::zero(ints_);
    long terms = 1 + rnd(3);
    for (long t = 0; t < terms; ++t) {
      long c = rnd(2 * caps.coeff_bound + 1) - caps.coeff_bound;
      if (c == 0) c = 1;
      Polynomial term = Polynomial::constant(ints_, c);
      long d = rnd(caps.max_degree + 1);
      for (long i = 0; i < d; ++i) term = term * generator(static_cast<int>(rnd(monoid_.size())));
      P = P + term;
    }
    out.push_back(P);
  }
  if (policy)
    *policy = "seeded (seed=" + std::to_string(caps.seed) + ", " +
              std::to_string(out.size()) + " samples)";
  return out;
}

// ---------------------------------------------------------------------------
// tw_compose and the axiom suite

Polynomial tw_compose(const PolyTW& T, const Polynomial& a, const Polynomial& b) {
  return T.compose(a, b);
}
FunctionElement tw_compose(const FunTW& T, const FunctionElement& a, const FunctionElement& b) {
  return T.compose(a, b);
}
Polynomial tw_compose(const MonoidPlethory& T, const Polynomial& a, const Polynomial& b) {
  return T.compose(a, b);
}

namespace {

struct LawStat {
  long cases = 0;
  long fails = 0;
  std::vector<Check> detail;  // at most three failing cases
};

template <class Inst>
Report run_axioms(const Inst& T, const TwmonCaps& caps) {
  Report rep;
  std::string policy;
  const auto S = T.sample_carrier(caps, &policy);
  rep.add_eq("sampling-policy", T.name(), policy, policy);

  const char* law_order[] = {"compose-assoc", "unit-left", "unit-right",
                             "left-add",      "left-mul",  "left-one",
                             "right-add",     "right-mul", "right-const"};
  std::map<std::string, LawStat> stats;
  for (const char* l : law_order) stats[l];

  auto tally = [&](const char* law, const auto& lhs, const auto& rhs, auto&& text) {
    LawStat& st = stats[law];
    ++st.cases;
    if (!(lhs == rhs)) {
      ++st.fails;
      if (st.detail.size() < 3)
        st.detail.push_back({std::string(law) + "-case", text(), T.show(rhs), T.show(lhs), false});
    }
  };

  const auto u = T.unit();
  const auto one = T.ring_one();
  for (const auto& a : S) {
    tally("unit-left", T.compose(u, a), a, [&] { return T.show(a); });
    tally("unit-right", T.compose(a, u), a, [&] { return T.show(a); });
    tally("left-one", T.compose(one, a), one, [&] { return T.show(a); });
    for (auto rho : T.rho_values())
      tally("right-const", T.compose(a, T.constant_of(rho)), T.counit_constant(a, rho),
            [&] { return T.show(a) + " at " + T.show(T.constant_of(rho)); });
  }

  const size_t n = S.size();
  std::vector<std::vector<decltype(T.unit())>> comp, plus, times;
  comp.reserve(n);
  plus.reserve(n);
  times.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    comp.emplace_back();
    plus.emplace_back();
    times.emplace_back();
    for (size_t j = 0; j < n; ++j) {
      comp[i].push_back(T.compose(S[i], S[j]));
      plus[i].push_back(T.add(S[i], S[j]));
      times[i].push_back(T.mul(S[i], S[j]));
    }
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        auto text = [&] {
          return "(" + T.show(S[i]) + ", " + T.show(S[j]) + ", " + T.show(S[k]) + ")";
        };
        tally("compose-assoc", T.compose(comp[i][j], S[k]), T.compose(S[i], comp[j][k]), text);
        tally("left-add", T.compose(plus[i][j], S[k]), T.add(comp[i][k], comp[j][k]), text);
        tally("left-mul", T.compose(times[i][j], S[k]), T.mul(comp[i][k], comp[j][k]), text);
        tally("right-add", T.compose(S[i], plus[j][k]), T.fold_add(S[i], S[j], S[k]), text);
        tally("right-mul", T.compose(S[i], times[j][k]), T.fold_mul(S[i], S[j], S[k]), text);
      }

  for (const char* l : law_order) {
    const LawStat& st = stats[l];
    rep.add({l, T.name(), "0 failures",
             std::to_string(st.fails) + " failures in " + std::to_string(st.cases) + " cases",
             st.fails == 0});
    for (const Check& c : st.detail) rep.add(c);
  }
  return rep;
}

}  // namespace

Report verify_tw_axioms(const TWInstance& T, const TwmonCaps& caps) {
  return std::visit([&](const auto& inst) { return run_axioms(inst, caps); }, T);
}

// ---------------------------------------------------------------------------
// descent_check

Report descent_check(const PolyTW& T, long q, const TwmonCaps& caps) {
  const Biring& BR = T.biring();
  if (BR.modulus_q())
    throw error(errc::usage_error, "descent starts from the instance without a modulus");
  Report rep;
  const std::string label = "base " + BR.base().spec().text() + ", q=" + std::to_string(q);

  Biring::CoidealResult cr = BR.is_coideal(q);  // validates q >= 2
  rep.add({"ideal-coideal", label, "coideal",
           cr.ok ? "coideal" : cr.witness->text() + " (" + cr.detail + ")", cr.ok});

  const CoeffRing& C = BR.coeffs();
  const Polynomial x = Polynomial::variable(C, "x");
  const Polynomial gen = x.pow(q) - x;
  long n = BR.base().size();
  std::mt19937_64 rng(caps.seed);
  auto random_poly = [&](long deg) {
    Polynomial P = Polynomial::zero(C);
    for (long e = 0; e <= deg; ++e)
      P = P + x.pow(e).scaled(static_cast<long>(rng() % static_cast<unsigned long long>(n)));
    return P;
  };
  std::vector<Polynomial> ps, ms;
  for (long e = 0; e <= q + 2; ++e) ps.push_back(x.pow(e));
  for (long e = 0; e <= q; ++e) ms.push_back(x.pow(e));
  for (long i = 0; i < caps.sample_count; ++i) {
    ps.push_back(random_poly(q + 2));
    ms.push_back(random_poly(q));
  }

  long cases = 0, fails = 0;
  const Polynomial zero = Polynomial::zero(C);
  for (const Polynomial& P : ps)
    for (const Polynomial& M : ms) {
      ++cases;
      Polynomial t2 = M * gen;
      Polynomial diff = P.substitute({{"x", t2}}) - P.substitute({{"x", zero}});
      if (!diff.reduce_xq(q).is_zero()) ++fails;
    }
  rep.add({"translation", label, "0 failures",
           std::to_string(fails) + " failures in " + std::to_string(cases) + " cases",
           fails == 0});

  bool ok = cr.ok && fails == 0;
  rep.add({"quotient-tw-structure", label, "inherits", ok ? "inherits" : "obstructed", ok});
  return rep;
}

// ---------------------------------------------------------------------------
// currying_iso

namespace {

long checked_power(long base, long exp, long cap, const char* what) {
  long out = 1;
  for (long i = 0; i < exp; ++i) {
    out *= base;
    if (out > cap) throw error(errc::cap_exceeded, what);
  }
  return out;
}

}  // namespace

Report currying_iso(long s1, long s2, const FiniteRing& A,
                    const std::vector<FiniteRing>& roster, const TwmonCaps& caps) {
  if (s1 < 0 || s2 < 0) throw error(errc::usage_error, "set sizes must be nonnegative");
  long n = A.size();
  long count = checked_power(n, s1 * s2, caps.curry_cap, "currying carrier too large");
  long inner = checked_power(n, s2, caps.curry_cap, "currying carrier too large");
  long outer = checked_power(inner, s1, caps.curry_cap, "currying carrier too large");
  const std::string label =
      "S1=" + std::to_string(s1) + " S2=" + std::to_string(s2) + " A=" + A.spec().text();
  Report rep;

  using Flat = std::vector<FiniteRing::Elem>;
  using Nested = std::vector<std::vector<FiniteRing::Elem>>;
  std::vector<Flat> flats;
  flats.reserve(count);
  for (long k = 0; k < count; ++k) {
    Flat f(s1 * s2);
    long acc = k;
    for (long i = 0; i < s1 * s2; ++i) {
      f[i] = static_cast<FiniteRing::Elem>(acc % n);
      acc /= n;
    }
    flats.push_back(std::move(f));
  }
  auto curry = [&](const Flat& f) {
    Nested g(s1, std::vector<FiniteRing::Elem>(s2));
    for (long i1 = 0; i1 < s1; ++i1)
      for (long i2 = 0; i2 < s2; ++i2) g[i1][i2] = f[i1 * s2 + i2];
    return g;
  };

  {
    std::set<Nested> images;
    for (const Flat& f : flats) images.insert(curry(f));
    rep.add_eq("currying-bijection", label,
               std::to_string(outer) + " distinct curried tables",
               std::to_string(images.size()) + " distinct curried tables");
  }
  {
    auto flat_zip = [&](const Flat& f, const Flat& g, bool add) {
      Flat out(f.size());
      for (size_t i = 0; i < f.size(); ++i) out[i] = add ? A.add(f[i], g[i]) : A.mul(f[i], g[i]);
      return out;
    };
    auto nested_zip = [&](const Nested& f, const Nested& g, bool add) {
      Nested out(f.size());
      for (size_t i = 0; i < f.size(); ++i) {
        out[i].resize(f[i].size());
        for (size_t j = 0; j < f[i].size(); ++j)
          out[i][j] = add ? A.add(f[i][j], g[i][j]) : A.mul(f[i][j], g[i][j]);
      }
      return out;
    };
    long cases = 1, fails = 0;
    if (curry(Flat(s1 * s2, A.one())) != Nested(s1, std::vector<FiniteRing::Elem>(s2, A.one())))
      ++fails;
    for (const Flat& f : flats)
      for (const Flat& g : flats) {
        cases += 2;
        if (curry(flat_zip(f, g, true)) != nested_zip(curry(f), curry(g), true)) ++fails;
        if (curry(flat_zip(f, g, false)) != nested_zip(curry(f), curry(g), false)) ++fails;
      }
    rep.add({"currying-ring", label, "0 failures",
             std::to_string(fails) + " failures in " + std::to_string(cases) + " cases",
             fails == 0});
  }
  for (const FiniteRing& A2 : roster) {
    auto homs = ring_homs(A, A2);
    long cases = 0, fails = 0;
    for (const auto& h : homs)
      for (const Flat& f : flats) {
        ++cases;
        Flat hf(f.size());
        for (size_t i = 0; i < f.size(); ++i) hf[i] = h[f[i]];
        Nested lhs = curry(hf);
        Nested rhs = curry(f);
        for (auto& row : rhs)
          for (auto& v : row) v = h[v];
        if (lhs != rhs) ++fails;
      }
    rep.add({"currying-naturality", label + " -> " + A2.spec().text(),
             "0 mismatches", std::to_string(fails) + " mismatches in " + std::to_string(cases) +
                                 " cases (" + std::to_string(homs.size()) + " homs)",
             fails == 0});
  }
  return rep;
}

// ---------------------------------------------------------------------------
// cogroup_uniqueness

long cogroup_uniqueness(long n, const TwmonCaps& caps) {
  if (n < 1) throw error(errc::zero_size, "the group must be nonempty");
  if (n > caps.cogroup_cap) throw error(errc::cap_exceeded, "cogroup carrier too large");
  long count = 0;
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) {
      // co-associativity: (a^2, ab, b) == (a, ab, b^2) componentwise
      if ((a * a) % n != a || (b * b) % n != b) continue;
      // co-unit (the unique map to the trivial group): both collapses are the identity
      if (a != 1 % n || b != 1 % n) continue;
      // co-inverse: fold of (v (+) id) and (id (+) v) against the co-addition
      for (long v = 0; v < n; ++v)
        if ((v * a + b) % n == 0 && (a + v * b) % n == 0) ++count;
    }
  return count;
}

}  // namespace twlab
