#include "twlab/finring.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace twlab {

const char* errc_name(errc c) {
  switch (c) {
    case errc::parse_error: return "ParseError";
    case errc::zero_size: return "ZeroSize";
    case errc::non_prime_modulus: return "NonPrimeModulus";
    case errc::reducible_modulus: return "ReducibleModulus";
    case errc::foreign_element: return "ForeignElement";
    case errc::mixed_coefficient_rings: return "MixedCoefficientRings";
    case errc::unbound_variable: return "UnboundVariable";
    case errc::invalid_modulus_degree: return "InvalidModulusDegree";
    case errc::foreign_variable: return "ForeignVariable";
    case errc::arity_mismatch: return "ArityMismatch";
    case errc::unknown_operation: return "UnknownOperation";
    case errc::carrier_too_large: return "CarrierTooLarge";
    case errc::depth_too_large: return "DepthTooLarge";
    case errc::index_mismatch: return "IndexMismatch";
    case errc::base_too_large: return "BaseTooLarge";
    case errc::not_a_field: return "NotAField";
    case errc::field_too_large: return "FieldTooLarge";
    case errc::ring_mismatch: return "RingMismatch";
    case errc::instance_mismatch: return "InstanceMismatch";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::usage_error: return "UsageError";
    case errc::internal_error: return "InternalError";
  }
  return "Error";
}

namespace {

long imod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// --- dense univariate polynomials over Z/p (modulus handling, GF arithmetic) ---

using ZpPoly = std::vector<long>;  // c0, c1, ... with no trailing zeros

void zp_norm(ZpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int zp_deg(const ZpPoly& f) { return static_cast<int>(f.size()) - 1; }

// remainder of a modulo a monic m
ZpPoly zp_rem(ZpPoly a, const ZpPoly& m, long p) {
  zp_norm(a);
  int dm = zp_deg(m);
  while (zp_deg(a) >= dm) {
    long lead = a.back();
    int shift = zp_deg(a) - dm;
    for (int i = 0; i <= dm; ++i) a[i + shift] = imod(a[i + shift] - lead * m[i], p);
    zp_norm(a);
  }
  return a;
}

// trial division by every monic polynomial of degree 1..deg/2
bool zp_is_irreducible(const ZpPoly& m, long p) {
  int d = zp_deg(m);
  if (d <= 0) return false;
  for (int e = 1; e <= d / 2; ++e) {
    long count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (long v = 0; v < count; ++v) {
      ZpPoly div(e + 1, 0);
      long t = v;
      for (int i = 0; i < e; ++i) {
        div[i] = t % p;
        t /= p;
      }
      div[e] = 1;
      if (zp_rem(m, div, p).empty()) return false;
    }
  }
  return true;
}

std::string zp_show(const ZpPoly& f, char var) {
  if (f.empty()) return "0";
  std::string out;
  for (int e = zp_deg(f); e >= 0; --e) {
    if (f[e] == 0) continue;
    if (!out.empty()) out += "+";
    if (e == 0) {
      out += std::to_string(f[e]);
    } else {
      if (f[e] != 1) out += std::to_string(f[e]) + "*";
      out += var;
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

// Parses sums of terms like "2*x^3", "x", "5" over Z/p. Offsets in thrown
// errors are relative to the enclosing input via base_off.
ZpPoly parse_zp_poly(std::string_view s, long p, char var, long base_off) {
  ZpPoly acc;
  size_t i = 0;
  auto fail = [&](size_t at, const std::string& msg) {
    throw error(errc::parse_error, msg, base_off + static_cast<long>(at));
  };
  auto skip_ws = [&] {
    while (i < s.size() && s[i] == ' ') ++i;
  };
  auto read_int = [&]() -> long {
    long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      v = v * 10 + (s[i++] - '0');
    return v;
  };
  auto add_term = [&](long coeff, long exp) {
    if (static_cast<long>(acc.size()) <= exp) acc.resize(exp + 1, 0);
    acc[exp] = imod(acc[exp] + coeff, p);
  };

  bool first = true;
  for (;;) {
    skip_ws();
    if (i >= s.size()) {
      if (first) fail(i, "empty polynomial");
      break;
    }
    long sign = 1;
    if (!first) {
      if (s[i] == '+') {
        ++i;
      } else if (s[i] == '-') {
        sign = -1;
        ++i;
      } else {
        fail(i, "expected '+' or '-'");
      }
    } else if (s[i] == '-') {
      sign = -1;
      ++i;
    }
    first = false;
    skip_ws();
    long coeff = 1;
    bool saw_coeff = false;
    bool need_var = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      coeff = read_int();
      saw_coeff = true;
      skip_ws();
      if (i < s.size() && s[i] == '*') {
        ++i;
        skip_ws();
        need_var = true;
      }
    }
    long exp = 0;
    if (i < s.size() && s[i] == var) {
      ++i;
      exp = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
          fail(i, "expected exponent");
        exp = read_int();
      }
    } else if (need_var || !saw_coeff) {
      fail(i, "expected term");
    }
    add_term(sign * coeff, exp);
  }
  zp_norm(acc);
  return acc;
}

}  // namespace

// --- RingSpec ---

struct RingSpec::Node {
  Kind kind;
  long n = 0;                 // Zmod
  long p = 0, k = 0;          // GF
  std::vector<long> modulus;  // GF: c0..ck, monic
  std::shared_ptr<const RingSpec> l, r;
};

RingSpec RingSpec::zmod(long n) {
  if (n < 1) throw error(errc::zero_size, "ring size must be positive, got Z/" + std::to_string(n));
  auto node = std::make_shared<Node>();
  node->kind = Kind::Zmod;
  node->n = n;
  return RingSpec(node);
}

RingSpec RingSpec::gf(long p, long k) { return gf(p, k, find_irreducible(p, k)); }

RingSpec RingSpec::gf(long p, long k, std::vector<long> modulus) {
  if (!is_prime(p))
    throw error(errc::non_prime_modulus, "GF characteristic must be prime, got " + std::to_string(p));
  if (k < 1) throw error(errc::usage_error, "GF degree must be >= 1, got " + std::to_string(k));
  for (long& c : modulus) c = imod(c, p);
  zp_norm(modulus);
  if (zp_deg(modulus) != k || modulus.back() != 1)
    throw error(errc::usage_error, "GF modulus must be monic of degree " + std::to_string(k));
  if (!zp_is_irreducible(modulus, p))
    throw error(errc::reducible_modulus,
                "modulus " + zp_show(modulus, 'x') + " is reducible over Z/" + std::to_string(p));
  auto node = std::make_shared<Node>();
  node->kind = Kind::GF;
  node->p = p;
  node->k = k;
  node->modulus = std::move(modulus);
  return RingSpec(node);
}

RingSpec RingSpec::product(RingSpec left, RingSpec right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Product;
  node->l = std::make_shared<RingSpec>(std::move(left));
  node->r = std::make_shared<RingSpec>(std::move(right));
  return RingSpec(node);
}

RingSpec::Kind RingSpec::kind() const { return node_->kind; }
long RingSpec::n() const { return node_->n; }
long RingSpec::p() const { return node_->p; }
long RingSpec::k() const { return node_->k; }
const std::vector<long>& RingSpec::modulus() const { return node_->modulus; }
const RingSpec& RingSpec::left() const { return *node_->l; }
const RingSpec& RingSpec::right() const { return *node_->r; }

bool RingSpec::operator==(const RingSpec& o) const {
  if (node_ == o.node_) return true;
  if (node_->kind != o.node_->kind) return false;
  switch (node_->kind) {
    case Kind::Zmod:
      return node_->n == o.node_->n;
    case Kind::GF:
      return node_->p == o.node_->p && node_->k == o.node_->k &&
             node_->modulus == o.node_->modulus;
    case Kind::Product:
      return left() == o.left() && right() == o.right();
  }
  return false;
}

std::string RingSpec::text() const {
  switch (node_->kind) {
    case Kind::Zmod:
      return "Z/" + std::to_string(node_->n);
    case Kind::GF: {
      std::string base = "GF(" + std::to_string(node_->p) + "," + std::to_string(node_->k);
      if (node_->modulus == find_irreducible(node_->p, node_->k)) return base + ")";
      return base + ";" + zp_show(node_->modulus, 'x') + ")";
    }
    case Kind::Product:
      return left().text() + "x" + right().text();
  }
  return "";
}

std::vector<long> find_irreducible(long p, long k) {
  if (!is_prime(p))
    throw error(errc::non_prime_modulus, "GF characteristic must be prime, got " + std::to_string(p));
  if (k < 1) throw error(errc::usage_error, "degree must be >= 1");
  long count = 1;
  for (long i = 0; i < k; ++i) count *= p;
  // candidates in increasing big-endian coefficient order (x^k, x^k+1, ...)
  for (long v = 0; v < count; ++v) {
    ZpPoly m(k + 1, 0);
    long t = v;
    for (long i = 0; i < k; ++i) {
      m[i] = t % p;
      t /= p;
    }
    m[k] = 1;
    if (zp_is_irreducible(m, p)) return m;
  }
  throw error(errc::internal_error, "no irreducible polynomial found");  // unreachable
}

// --- ring-spec grammar ---

RingSpec parse_ring_spec(std::string_view s) {
  size_t i = 0;
  auto fail = [&](size_t at, const std::string& msg) -> RingSpec {
    throw error(errc::parse_error, msg, static_cast<long>(at));
  };
  auto read_int = [&](const char* what) -> long {
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      fail(i, std::string("expected ") + what);
    long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      v = v * 10 + (s[i++] - '0');
    return v;
  };

  auto parse_atom = [&]() -> RingSpec {
    size_t start = i;
    if (s.compare(i, 2, "Z/") == 0) {
      i += 2;
      size_t at = i;
      long n = read_int("modulus after Z/");
      if (n < 1) fail(at, "ring size must be positive");
      return RingSpec::zmod(n);
    }
    if (s.compare(i, 3, "GF(") == 0) {
      i += 3;
      long p = read_int("prime");
      if (i >= s.size() || s[i] != ',') fail(i, "expected ','");
      ++i;
      long k = read_int("extension degree");
      std::vector<long> modulus;
      bool have_modulus = false;
      if (i < s.size() && s[i] == ';') {
        ++i;
        size_t mstart = i;
        size_t depth = 0;
        while (i < s.size() && (s[i] != ')' || depth > 0)) {
          if (s[i] == '(') ++depth;
          if (s[i] == ')') --depth;
          ++i;
        }
        if (i >= s.size()) fail(i, "unterminated GF modulus");
        if (!is_prime(p)) fail(start, "GF characteristic must be prime");
        modulus = parse_zp_poly(s.substr(mstart, i - mstart), p, 'x',
                                static_cast<long>(mstart));
        have_modulus = true;
      }
      if (i >= s.size() || s[i] != ')') fail(i, "expected ')'");
      ++i;
      try {
        return have_modulus ? RingSpec::gf(p, k, std::move(modulus)) : RingSpec::gf(p, k);
      } catch (const error& e) {
        if (e.offset() >= 0) throw;
        throw error(e.code(), e.what(), static_cast<long>(start));
      }
    }
    return fail(i, "expected ring atom (Z/n or GF(p,k))");
  };

  RingSpec spec = parse_atom();
  while (i < s.size()) {
    if (s[i] != 'x') fail(i, "expected 'x' or end of spec");
    ++i;
    spec = RingSpec::product(std::move(spec), parse_atom());
  }
  return spec;
}

// --- encoding-level arithmetic (recursive over the ring-spec tree) ---

namespace {

size_t enc_width(const RingSpec& s) {
  switch (s.kind()) {
    case RingSpec::Kind::Zmod: return 1;
    case RingSpec::Kind::GF: return static_cast<size_t>(s.k());
    case RingSpec::Kind::Product: return enc_width(s.left()) + enc_width(s.right());
  }
  return 0;
}

void enc_add(const RingSpec& s, const long* a, const long* b, long* out) {
  switch (s.kind()) {
    case RingSpec::Kind::Zmod:
      out[0] = imod(a[0] + b[0], s.n());
      return;
    case RingSpec::Kind::GF:
      for (long i = 0; i < s.k(); ++i) out[i] = imod(a[i] + b[i], s.p());
      return;
    case RingSpec::Kind::Product: {
      size_t w = enc_width(s.left());
      enc_add(s.left(), a, b, out);
      enc_add(s.right(), a + w, b + w, out + w);
      return;
    }
  }
}

void enc_neg(const RingSpec& s, const long* a, long* out) {
  switch (s.kind()) {
    case RingSpec::Kind::Zmod:
      out[0] = imod(-a[0], s.n());
      return;
    case RingSpec::Kind::GF:
      for (long i = 0; i < s.k(); ++i) out[i] = imod(-a[i], s.p());
      return;
    case RingSpec::Kind::Product: {
      size_t w = enc_width(s.left());
      enc_neg(s.left(), a, out);
      enc_neg(s.right(), a + w, out + w);
      return;
    }
  }
}

void enc_mul(const RingSpec& s, const long* a, const long* b, long* out) {
  switch (s.kind()) {
    case RingSpec::Kind::Zmod:
      out[0] = imod(a[0] * b[0], s.n());
      return;
    case RingSpec::Kind::GF: {
      long k = s.k(), p = s.p();
      ZpPoly prod(2 * k - 1, 0);
      for (long i = 0; i < k; ++i)
        for (long j = 0; j < k; ++j) prod[i + j] = imod(prod[i + j] + a[i] * b[j], p);
      ZpPoly red = zp_rem(std::move(prod), s.modulus(), p);
      red.resize(k, 0);
      for (long i = 0; i < k; ++i) out[i] = red[i];
      return;
    }
    case RingSpec::Kind::Product: {
      size_t w = enc_width(s.left());
      enc_mul(s.left(), a, b, out);
      enc_mul(s.right(), a + w, b + w, out + w);
      return;
    }
  }
}

void enc_one(const RingSpec& s, long* out) {
  switch (s.kind()) {
    case RingSpec::Kind::Zmod:
      out[0] = s.n() == 1 ? 0 : 1;
      return;
    case RingSpec::Kind::GF:
      out[0] = 1;
      for (long i = 1; i < s.k(); ++i) out[i] = 0;
      return;
    case RingSpec::Kind::Product: {
      size_t w = enc_width(s.left());
      enc_one(s.left(), out);
      enc_one(s.right(), out + w);
      return;
    }
  }
}

void enc_from_int(const RingSpec& s, long v, long* out) {
  switch (s.kind()) {
    case RingSpec::Kind::Zmod:
      out[0] = imod(v, s.n());
      return;
    case RingSpec::Kind::GF:
      out[0] = imod(v, s.p());
      for (long i = 1; i < s.k(); ++i) out[i] = 0;
      return;
    case RingSpec::Kind::Product: {
      size_t w = enc_width(s.left());
      enc_from_int(s.left(), v, out);
      enc_from_int(s.right(), v, out + w);
      return;
    }
  }
}

// per-position radixes of the encoding vector, used to enumerate the carrier
void enc_radixes(const RingSpec& s, std::vector<long>& out) {
  switch (s.kind()) {
    case RingSpec::Kind::Zmod:
      out.push_back(s.n());
      return;
    case RingSpec::Kind::GF:
      for (long i = 0; i < s.k(); ++i) out.push_back(s.p());
      return;
    case RingSpec::Kind::Product:
      enc_radixes(s.left(), out);
      enc_radixes(s.right(), out);
      return;
  }
}

std::string enc_show(const RingSpec& s, const long* a) {
  switch (s.kind()) {
    case RingSpec::Kind::Zmod:
      return std::to_string(a[0]);
    case RingSpec::Kind::GF: {
      if (s.k() == 1) return std::to_string(a[0]);
      ZpPoly f(a, a + s.k());
      zp_norm(f);
      return zp_show(f, 'g');
    }
    case RingSpec::Kind::Product: {
      size_t w = enc_width(s.left());
      return "(" + enc_show(s.left(), a) + "," + enc_show(s.right(), a + w) + ")";
    }
  }
  return "";
}

void enc_parse(const RingSpec& s, std::string_view text, long* out) {
  // strip surrounding spaces
  size_t b = 0, e = text.size();
  while (b < e && text[b] == ' ') ++b;
  while (e > b && text[e - 1] == ' ') --e;
  text = text.substr(b, e - b);
  if (text.empty()) throw error(errc::parse_error, "empty element text", 0);

  auto is_plain_int = [&] {
    size_t j = text[0] == '-' ? 1 : 0;
    if (j >= text.size()) return false;
    for (; j < text.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(text[j]))) return false;
    return true;
  };
  if (is_plain_int()) {
    enc_from_int(s, std::stol(std::string(text)), out);
    return;
  }
  switch (s.kind()) {
    case RingSpec::Kind::Zmod:
      throw error(errc::parse_error, "expected integer for Z/n element", 0);
    case RingSpec::Kind::GF: {
      ZpPoly f = parse_zp_poly(text, s.p(), 'g', 0);
      f = zp_rem(std::move(f), s.modulus(), s.p());
      f.resize(s.k(), 0);
      for (long i = 0; i < s.k(); ++i) out[i] = f[i];
      return;
    }
    case RingSpec::Kind::Product: {
      if (text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
      // split at the top-level comma
      size_t depth = 0, cut = std::string_view::npos;
      for (size_t j = 0; j < text.size(); ++j) {
        if (text[j] == '(') ++depth;
        else if (text[j] == ')') --depth;
        else if (text[j] == ',' && depth == 0) {
          cut = j;
          break;
        }
      }
      if (cut == std::string_view::npos)
        throw error(errc::parse_error, "expected (left,right) pair", 0);
      size_t w = enc_width(s.left());
      enc_parse(s.left(), text.substr(0, cut), out);
      enc_parse(s.right(), text.substr(cut + 1), out + w);
      return;
    }
  }
}

constexpr long kOpTableCap = 512;   // cache full op tables up to this size
constexpr long kCarrierCap = 1 << 20;  // refuse to materialize anything bigger

}  // namespace

// --- FiniteRing ---

struct FiniteRing::Impl {
  RingSpec spec;
  long size = 0;
  size_t width = 0;
  std::vector<std::vector<long>> carrier;  // canonical order: 0, 1, rest lex
  std::map<std::vector<long>, int> index;
  long characteristic = 1;
  bool field = false;
  std::vector<int> add_tab, mul_tab, neg_tab;  // populated when size <= kOpTableCap

  explicit Impl(RingSpec s) : spec(std::move(s)) {}

  int lookup(const std::vector<long>& enc) const {
    auto it = index.find(enc);
    if (it == index.end())
      throw error(errc::foreign_element, "encoding is not canonical for " + spec.text());
    return it->second;
  }
};

FiniteRing build_ring(const RingSpec& spec) {
  auto impl = std::make_shared<FiniteRing::Impl>(spec);
  std::vector<long> radixes;
  enc_radixes(spec, radixes);
  impl->width = radixes.size();

  long size = 1;
  for (long r : radixes) {
    if (size > kCarrierCap / r)
      throw error(errc::cap_exceeded, "carrier too large to materialize: " + spec.text());
    size *= r;
  }
  impl->size = size;

  // all encodings in lexicographic order (last position varies fastest)
  std::vector<std::vector<long>> all;
  all.reserve(size);
  std::vector<long> cur(impl->width, 0);
  for (long c = 0; c < size; ++c) {
    all.push_back(cur);
    for (size_t pos = impl->width; pos-- > 0;) {
      if (++cur[pos] < radixes[pos]) break;
      cur[pos] = 0;
    }
  }
  // zero (all-zero vector) is lexicographically least already; pull one to slot 1
  std::vector<long> one_enc(impl->width);
  enc_one(spec, one_enc.data());
  impl->carrier = std::move(all);
  if (size >= 2) {
    auto it = std::find(impl->carrier.begin(), impl->carrier.end(), one_enc);
    std::rotate(impl->carrier.begin() + 1, it, it + 1);
  }
  for (long c = 0; c < size; ++c) impl->index[impl->carrier[c]] = static_cast<int>(c);

  // characteristic = additive order of 1
  {
    std::vector<long> acc(impl->width, 0), next(impl->width);
    long ch = 0;
    do {
      enc_add(spec, acc.data(), one_enc.data(), next.data());
      acc = next;
      ++ch;
    } while (std::any_of(acc.begin(), acc.end(), [](long v) { return v != 0; }));
    impl->characteristic = ch;
  }

  if (size <= kOpTableCap) {
    impl->add_tab.resize(size * size);
    impl->mul_tab.resize(size * size);
    impl->neg_tab.resize(size);
    std::vector<long> out(impl->width);
    for (long a = 0; a < size; ++a) {
      enc_neg(spec, impl->carrier[a].data(), out.data());
      impl->neg_tab[a] = impl->lookup(out);
      for (long b = 0; b < size; ++b) {
        enc_add(spec, impl->carrier[a].data(), impl->carrier[b].data(), out.data());
        impl->add_tab[a * size + b] = impl->lookup(out);
        enc_mul(spec, impl->carrier[a].data(), impl->carrier[b].data(), out.data());
        impl->mul_tab[a * size + b] = impl->lookup(out);
      }
    }
  }

  {
    // is_field: every nonzero element invertible
    auto mul_idx = [&](long a, long b) -> long {
      if (!impl->mul_tab.empty()) return impl->mul_tab[a * size + b];
      std::vector<long> out(impl->width);
      enc_mul(spec, impl->carrier[a].data(), impl->carrier[b].data(), out.data());
      return impl->lookup(out);
    };
    bool field = size >= 2;
    for (long a = 1; field && a < size; ++a) {
      bool inv = false;
      for (long b = 1; !inv && b < size; ++b)
        if (mul_idx(a, b) == 1) inv = true;
      field = inv;
    }
    impl->field = field;
  }

  FiniteRing R(std::move(impl));

  if (R.size() <= 64) {
    if (auto failure = check_ring_axioms(R))
      throw error(errc::internal_error, "ring axioms violated for " + spec.text() + ": " + *failure);
  }
  return R;
}

FiniteRing build_ring(std::string_view spec_text) { return build_ring(parse_ring_spec(spec_text)); }

long FiniteRing::size() const { return impl_->size; }

FiniteRing::Elem FiniteRing::one() const { return impl_->size >= 2 ? 1 : 0; }

FiniteRing::Elem FiniteRing::add(Elem a, Elem b) const {
  if (a < 0 || a >= impl_->size || b < 0 || b >= impl_->size)
    throw error(errc::foreign_element, "element index out of range");
  if (!impl_->add_tab.empty()) return impl_->add_tab[static_cast<long>(a) * impl_->size + b];
  std::vector<long> out(impl_->width);
  enc_add(impl_->spec, impl_->carrier[a].data(), impl_->carrier[b].data(), out.data());
  return impl_->lookup(out);
}

FiniteRing::Elem FiniteRing::mul(Elem a, Elem b) const {
  if (a < 0 || a >= impl_->size || b < 0 || b >= impl_->size)
    throw error(errc::foreign_element, "element index out of range");
  if (!impl_->mul_tab.empty()) return impl_->mul_tab[static_cast<long>(a) * impl_->size + b];
  std::vector<long> out(impl_->width);
  enc_mul(impl_->spec, impl_->carrier[a].data(), impl_->carrier[b].data(), out.data());
  return impl_->lookup(out);
}

FiniteRing::Elem FiniteRing::neg(Elem a) const {
  if (a < 0 || a >= impl_->size)
    throw error(errc::foreign_element, "element index out of range");
  if (!impl_->neg_tab.empty()) return impl_->neg_tab[a];
  std::vector<long> out(impl_->width);
  enc_neg(impl_->spec, impl_->carrier[a].data(), out.data());
  return impl_->lookup(out);
}

FiniteRing::Elem FiniteRing::sub(Elem a, Elem b) const { return add(a, neg(b)); }

FiniteRing::Elem FiniteRing::pow(Elem a, long e) const {
  if (e < 0) throw error(errc::usage_error, "negative exponent");
  Elem acc = one(), base = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::optional<FiniteRing::Elem> FiniteRing::inverse(Elem a) const {
  for (long b = 0; b < impl_->size; ++b)
    if (mul(a, static_cast<Elem>(b)) == one()) return static_cast<Elem>(b);
  return std::nullopt;
}

long FiniteRing::characteristic() const { return impl_->characteristic; }

FiniteRing::Elem FiniteRing::from_int(long v) const {
  std::vector<long> out(impl_->width);
  enc_from_int(impl_->spec, v, out.data());
  return impl_->lookup(out);
}

const std::vector<long>& FiniteRing::encoding(Elem a) const {
  if (a < 0 || a >= impl_->size)
    throw error(errc::foreign_element, "element index out of range");
  return impl_->carrier[a];
}

FiniteRing::Elem FiniteRing::from_encoding(const std::vector<long>& enc) const {
  return impl_->lookup(enc);
}

std::string FiniteRing::show(Elem a) const {
  return enc_show(impl_->spec, encoding(a).data());
}

FiniteRing::Elem FiniteRing::parse_element(std::string_view text) const {
  std::vector<long> out(impl_->width);
  enc_parse(impl_->spec, text, out.data());
  return impl_->lookup(out);
}

std::vector<FiniteRing::Elem> FiniteRing::idempotents() const {
  std::vector<Elem> out;
  for (long e = 0; e < impl_->size; ++e)
    if (mul(static_cast<Elem>(e), static_cast<Elem>(e)) == static_cast<Elem>(e))
      out.push_back(static_cast<Elem>(e));
  return out;
}

bool FiniteRing::is_field() const { return impl_->field; }

const RingSpec& FiniteRing::spec() const { return impl_->spec; }

bool FiniteRing::same_ring(const FiniteRing& o) const {
  return impl_ == o.impl_ || impl_->spec == o.impl_->spec;
}

std::vector<FiniteRing::Elem> enumerate_with_prefix(
    const FiniteRing& R, const std::vector<FiniteRing::Elem>& prefix) {
  std::vector<bool> seen(R.size(), false);
  std::vector<FiniteRing::Elem> out;
  for (FiniteRing::Elem e : prefix) {
    if (e < 0 || e >= R.size()) throw error(errc::foreign_element, "prefix element out of range");
    if (seen[e]) throw error(errc::usage_error, "duplicate element in prefix");
    seen[e] = true;
    out.push_back(e);
  }
  for (long e = 0; e < R.size(); ++e)
    if (!seen[e]) out.push_back(static_cast<FiniteRing::Elem>(e));
  return out;
}

std::optional<std::string> check_ring_axioms(const FiniteRing& R) {
  const long n = R.size();
  auto name = [&](long a) { return R.show(static_cast<int>(a)); };
  for (long a = 0; a < n; ++a) {
    if (R.add(a, 0) != a) return "a + 0 != a at a=" + name(a);
    if (R.mul(a, R.one()) != a) return "a * 1 != a at a=" + name(a);
    if (R.add(a, R.neg(a)) != 0) return "a + (-a) != 0 at a=" + name(a);
  }
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) {
      if (R.add(a, b) != R.add(b, a)) return "addition not commutative at " + name(a) + "," + name(b);
      if (R.mul(a, b) != R.mul(b, a))
        return "multiplication not commutative at " + name(a) + "," + name(b);
    }
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      for (long c = 0; c < n; ++c) {
        if (R.add(R.add(a, b), c) != R.add(a, R.add(b, c)))
          return "addition not associative at " + name(a) + "," + name(b) + "," + name(c);
        if (R.mul(R.mul(a, b), c) != R.mul(a, R.mul(b, c)))
          return "multiplication not associative at " + name(a) + "," + name(b) + "," + name(c);
        if (R.mul(a, R.add(b, c)) != R.add(R.mul(a, b), R.mul(a, c)))
          return "distributivity fails at " + name(a) + "," + name(b) + "," + name(c);
      }
  return std::nullopt;
}

std::vector<std::vector<FiniteRing::Elem>> ring_homs(const FiniteRing& A, const FiniteRing& B) {
  const long na = A.size(), nb = B.size();
  double est = 1;
  for (long i = 0; i < na; ++i) {
    est *= nb;
    if (est > 1e7) throw error(errc::cap_exceeded, "hom search space exceeds 10^7 candidates");
  }
  std::vector<std::vector<FiniteRing::Elem>> homs;
  std::vector<FiniteRing::Elem> f(na, 0);
  for (;;) {
    bool ok = f[A.zero()] == B.zero() && f[A.one()] == B.one();
    for (long a = 0; ok && a < na; ++a)
      for (long b = a; ok && b < na; ++b) {
        if (f[A.add(a, b)] != B.add(f[a], f[b])) ok = false;
        else if (f[A.mul(a, b)] != B.mul(f[a], f[b])) ok = false;
      }
    if (ok) homs.push_back(f);
    long pos = na - 1;
    while (pos >= 0 && ++f[pos] == nb) f[pos--] = 0;
    if (pos < 0) break;
  }
  return homs;
}

}  // namespace twlab
