#include "twlab/poly.hpp"

#include <algorithm>
#include <cctype>

namespace twlab {

// --- CoeffRing ---

CoeffRing CoeffRing::integers() { return CoeffRing{}; }

CoeffRing CoeffRing::of(FiniteRing R) {
  CoeffRing c;
  c.ring_ = std::move(R);
  return c;
}

const FiniteRing& CoeffRing::ring() const {
  if (!ring_) throw error(errc::usage_error, "integer coefficient ring has no carrier");
  return *ring_;
}

bool CoeffRing::operator==(const CoeffRing& o) const {
  if (is_integers() != o.is_integers()) return false;
  return is_integers() || ring_->same_ring(*o.ring_);
}

mpz_class CoeffRing::add(const mpz_class& a, const mpz_class& b) const {
  if (is_integers()) return a + b;
  return ring_->add(static_cast<int>(a.get_si()), static_cast<int>(b.get_si()));
}

mpz_class CoeffRing::mul(const mpz_class& a, const mpz_class& b) const {
  if (is_integers()) return a * b;
  return ring_->mul(static_cast<int>(a.get_si()), static_cast<int>(b.get_si()));
}

mpz_class CoeffRing::neg(const mpz_class& a) const {
  if (is_integers()) return -a;
  return ring_->neg(static_cast<int>(a.get_si()));
}

mpz_class CoeffRing::from_int(const mpz_class& v) const {
  if (is_integers()) return v;
  mpz_class r = v % ring_->characteristic();
  if (r < 0) r += ring_->characteristic();
  return ring_->from_int(r.get_si());
}

bool CoeffRing::is_valid(const mpz_class& c) const {
  if (is_integers()) return true;
  return c >= 0 && c < ring_->size();
}

std::string CoeffRing::show(const mpz_class& c) const {
  if (is_integers()) return c.get_str();
  return ring_->show(static_cast<int>(c.get_si()));
}

std::string CoeffRing::text() const { return is_integers() ? "Z" : ring_->spec().text(); }

// --- Monomial ---

Monomial::Monomial(std::map<std::string, long> exps) : e_(std::move(exps)) {
  for (auto it = e_.begin(); it != e_.end();) {
    if (it->second < 0) throw error(errc::usage_error, "negative exponent in monomial");
    it = it->second == 0 ? e_.erase(it) : std::next(it);
  }
}

long Monomial::exponent(const std::string& var) const {
  auto it = e_.find(var);
  return it == e_.end() ? 0 : it->second;
}

long Monomial::degree() const {
  long d = 0;
  for (const auto& [v, e] : e_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  std::map<std::string, long> r = e_;
  for (const auto& [v, e] : o.e_) r[v] += e;
  return Monomial(std::move(r));
}

bool Monomial::operator<(const Monomial& o) const {
  long da = degree(), db = o.degree();
  if (da != db) return da < db;
  // walk the union of variables alphabetically; the first difference decides
  auto a = e_.begin(), b = o.e_.begin();
  while (a != e_.end() && b != o.e_.end()) {
    if (a->first == b->first) {
      if (a->second != b->second) return a->second < b->second;
      ++a;
      ++b;
    } else if (a->first < b->first) {
      return false;  // this monomial holds the alphabetically first variable
    } else {
      return true;
    }
  }
  return b != o.e_.end();
}

std::string Monomial::text() const {
  if (e_.empty()) return "1";
  std::string out;
  for (const auto& [v, e] : e_) {
    if (!out.empty()) out += "*";
    out += v;
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

// --- Polynomial ---

Polynomial::Polynomial(CoeffRing ring) : ring_(std::move(ring)) {}

Polynomial Polynomial::constant(const CoeffRing& ring, const mpz_class& c) {
  Polynomial p(ring);
  p.add_term(Monomial(), ring.from_int(c));
  return p;
}

Polynomial Polynomial::variable(const CoeffRing& ring, const std::string& name) {
  Polynomial p(ring);
  mpz_class one = ring.is_integers() ? mpz_class(1) : mpz_class(ring.ring().one());
  p.add_term(Monomial({{name, 1}}), one);
  return p;
}

Polynomial Polynomial::monomial(const CoeffRing& ring, const Monomial& m, const mpz_class& coeff) {
  Polynomial p(ring);
  p.add_term(m, coeff);
  return p;
}

void Polynomial::add_term(const Monomial& m, const mpz_class& c) {
  if (!ring_.is_valid(c))
    throw error(errc::foreign_element, "coefficient " + c.get_str() + " is not canonical");
  auto it = terms_.find(m);
  mpz_class sum = it == terms_.end() ? c : ring_.add(it->second, c);
  bool zero = ring_.is_integers() ? sum == 0 : sum == mpz_class(0);
  if (it != terms_.end()) terms_.erase(it);
  if (!zero) terms_.emplace(m, std::move(sum));
}

void Polynomial::check_same_ring(const Polynomial& o) const {
  if (ring_ != o.ring_)
    throw error(errc::mixed_coefficient_rings,
                "coefficient rings differ: " + ring_.text() + " vs " + o.ring_.text());
}

long Polynomial::degree() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
}

long Polynomial::degree_in(const std::string& var) const {
  long d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(var));
  return d;
}

std::set<std::string> Polynomial::variables() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.exponents()) out.insert(v);
  return out;
}

mpz_class Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_ring(o);
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) r.add_term(m, ring_.neg(c));
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ring(o);
  Polynomial r(ring_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ring_.mul(ca, cb));
  return r;
}

Polynomial Polynomial::scaled(const mpz_class& c) const {
  Polynomial r(ring_);
  for (const auto& [m, k] : terms_) r.add_term(m, ring_.mul(k, c));
  return r;
}

Polynomial Polynomial::pow(long e) const {
  if (e < 0) throw error(errc::usage_error, "negative polynomial power");
  Polynomial acc = constant(ring_, 1), base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return ring_ == o.ring_ && terms_ == o.terms_;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& bindings) const {
  for (const auto& [v, p] : bindings) check_same_ring(p);
  Polynomial out(ring_);
  for (const auto& [m, c] : terms_) {
    Polynomial acc(ring_);
    acc.add_term(Monomial(), c);
    for (const auto& [v, e] : m.exponents()) {
      auto it = bindings.find(v);
      if (it == bindings.end())
        throw error(errc::unbound_variable, "no binding for variable " + v);
      acc = acc * it->second.pow(e);
    }
    out = out + acc;
  }
  return out;
}

Polynomial Polynomial::rename(const std::map<std::string, std::string>& vars) const {
  Polynomial out(ring_);
  for (const auto& [m, c] : terms_) {
    std::map<std::string, long> exps;
    for (const auto& [v, e] : m.exponents()) {
      auto it = vars.find(v);
      exps[it == vars.end() ? v : it->second] += e;
    }
    out.add_term(Monomial(std::move(exps)), c);
  }
  return out;
}

FiniteRing::Elem Polynomial::evaluate(const std::map<std::string, FiniteRing::Elem>& env,
                                      const FiniteRing& R) const {
  if (!ring_.is_integers() && !ring_.ring().same_ring(R))
    throw error(errc::ring_mismatch, "polynomial is over " + ring_.text() +
                                         ", evaluation ring is " + R.spec().text());
  FiniteRing::Elem sum = R.zero();
  for (const auto& [m, c] : terms_) {
    FiniteRing::Elem val;
    if (ring_.is_integers()) {
      mpz_class r = c % R.characteristic();
      if (r < 0) r += R.characteristic();
      val = R.from_int(r.get_si());
    } else {
      val = static_cast<FiniteRing::Elem>(c.get_si());
    }
    for (const auto& [v, e] : m.exponents()) {
      auto it = env.find(v);
      if (it == env.end()) throw error(errc::unbound_variable, "no value for variable " + v);
      val = R.mul(val, R.pow(it->second, e));
    }
    sum = R.add(sum, val);
  }
  return sum;
}

Polynomial Polynomial::reduce_xq(long q, const std::set<std::string>& vars) const {
  if (q < 2) throw error(errc::invalid_modulus_degree, "reduction needs q >= 2");
  Polynomial out(ring_);
  for (const auto& [m, c] : terms_) {
    std::map<std::string, long> exps;
    for (const auto& [v, e] : m.exponents())
      exps[v] = vars.count(v) && e >= 1 ? 1 + ((e - 1) % (q - 1)) : e;
    out.add_term(Monomial(std::move(exps)), c);
  }
  return out;
}

Polynomial Polynomial::reduce_xq(long q) const { return reduce_xq(q, variables()); }

Polynomial Polynomial::into_ring(const FiniteRing& R) const {
  if (!ring_.is_integers())
    throw error(errc::usage_error, "into_ring expects integer coefficients");
  CoeffRing target = CoeffRing::of(R);
  Polynomial out(target);
  for (const auto& [m, c] : terms_) out.add_term(m, target.from_int(c));
  return out;
}

std::string Polynomial::text() const {
  if (terms_.empty()) return "0";
  std::string out;
  // descending graded-lex order
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Monomial& m = it->first;
    mpz_class c = it->second;
    bool negative = ring_.is_integers() && c < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    bool unit = ring_.is_integers() ? c == 1 : c == mpz_class(ring_.ring().one());
    std::string cs = ring_.show(c);
    bool plain_int = std::all_of(cs.begin(), cs.end(), [](unsigned char ch) {
      return std::isdigit(ch) != 0;
    });
    bool wrapped = cs.size() >= 2 && cs.front() == '(' && cs.back() == ')';
    if (!plain_int && !wrapped) cs = "(" + cs + ")";
    if (m.is_constant()) {
      out += cs;
    } else {
      if (!unit) out += cs + "*";
      out += m.text();
    }
  }
  return out;
}

Polynomial Polynomial::parse(const CoeffRing& ring, std::string_view s) {
  size_t i = 0;
  auto fail = [&](size_t at, const std::string& msg) {
    throw error(errc::parse_error, msg, static_cast<long>(at));
  };
  auto skip_ws = [&] {
    while (i < s.size() && s[i] == ' ') ++i;
  };
  auto at_var_start = [&] {
    return i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_');
  };
  auto read_uint = [&]() -> mpz_class {
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return mpz_class(std::string(s.substr(start, i - start)));
  };

  Polynomial out(ring);
  mpz_class ring_one = ring.from_int(1);
  bool first = true;
  for (;;) {
    skip_ws();
    if (i >= s.size()) {
      if (first) fail(i, "empty polynomial");
      break;
    }
    bool negate = false;
    if (!first) {
      if (s[i] == '+') ++i;
      else if (s[i] == '-') {
        negate = true;
        ++i;
      } else {
        fail(i, "expected '+' or '-'");
      }
    } else if (s[i] == '-') {
      negate = true;
      ++i;
    }
    first = false;

    mpz_class coeff = ring_one;
    Monomial mono;
    bool expect_factor = true;
    while (expect_factor) {
      skip_ws();
      if (i >= s.size()) fail(i, "expected factor");
      if (std::isdigit(static_cast<unsigned char>(s[i]))) {
        coeff = ring.mul(coeff, ring.from_int(read_uint()));
      } else if (s[i] == '(') {
        if (ring.is_integers()) fail(i, "unexpected '('");
        size_t start = ++i;
        long depth = 0;
        while (i < s.size() && (s[i] != ')' || depth > 0)) {
          if (s[i] == '(') ++depth;
          if (s[i] == ')') --depth;
          ++i;
        }
        if (i >= s.size()) fail(i, "unterminated coefficient");
        std::string inner(s.substr(start, i - start));
        ++i;
        try {
          coeff = ring.mul(coeff, ring.ring().parse_element(inner));
        } catch (const error& e) {
          fail(start, std::string("bad coefficient: ") + e.what());
        }
      } else if (at_var_start()) {
        size_t start = i;
        while (i < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
          ++i;
        std::string name(s.substr(start, i - start));
        long exp = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            fail(i, "expected exponent");
          exp = read_uint().get_si();
        }
        mono = mono * Monomial({{name, exp}});
      } else {
        fail(i, "expected factor");
      }
      skip_ws();
      if (i < s.size() && s[i] == '*') {
        ++i;
      } else {
        expect_factor = false;
      }
    }
    out.add_term(mono, negate ? ring.neg(coeff) : coeff);
  }
  return out;
}

}  // namespace twlab
