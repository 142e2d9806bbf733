#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <random>
#include <vector>

#include "twlab/poly.hpp"

using namespace twlab;

namespace {

const CoeffRing KZ = CoeffRing::integers();

Polynomial var(const CoeffRing& K, const std::string& n) {
  return Polynomial::variable(K, n);
}

Polynomial cst(const CoeffRing& K, long c) { return Polynomial::constant(K, c); }

// deterministic small random polynomial in the given variables
Polynomial rand_poly(std::mt19937_64& rng, const CoeffRing& K,
                     const std::vector<std::string>& vars, int max_terms, long max_exp) {
  Polynomial p(K);
  int nterms = 1 + static_cast<int>(rng() % max_terms);
  for (int t = 0; t < nterms; ++t) {
    std::map<std::string, long> exps;
    for (const auto& v : vars) exps[v] = static_cast<long>(rng() % (max_exp + 1));
    mpz_class c = K.is_integers() ? mpz_class(static_cast<long>(rng() % 7) - 3)
                                  : mpz_class(static_cast<long>(rng() % K.ring().size()));
    p = p + Polynomial::monomial(K, Monomial(std::move(exps)), c);
  }
  return p;
}

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  return errc::internal_error;
}

}  // namespace

TEST_CASE("monomial basics and graded-lex order") {
  Monomial one;
  CHECK(one.is_constant());
  CHECK(one.text() == "1");
  CHECK(one.degree() == 0);

  Monomial x2y(std::map<std::string, long>{{"x", 2}, {"y", 1}});
  CHECK(x2y.text() == "x^2*y");
  CHECK(x2y.degree() == 3);
  CHECK(x2y.exponent("x") == 2);
  CHECK(x2y.exponent("z") == 0);

  Monomial dropped(std::map<std::string, long>{{"x", 1}, {"y", 0}});
  CHECK(dropped == Monomial(std::map<std::string, long>{{"x", 1}}));
  CHECK_THROWS_AS(Monomial(std::map<std::string, long>{{"x", -1}}), error);

  Monomial x2(std::map<std::string, long>{{"x", 2}});
  Monomial xy(std::map<std::string, long>{{"x", 1}, {"y", 1}});
  Monomial y2(std::map<std::string, long>{{"y", 2}});
  Monomial x1(std::map<std::string, long>{{"x", 1}});
  // degree dominates; ties broken so that x^2 > x*y > y^2
  CHECK(x1 < y2);
  CHECK(y2 < xy);
  CHECK(xy < x2);
  CHECK_FALSE(x2 < x2);
  CHECK((x2 * y2) == Monomial(std::map<std::string, long>{{"x", 2}, {"y", 2}}));
}

TEST_CASE("ring arithmetic oracles") {
  auto R2 = build_ring("Z/2");
  CoeffRing K2 = CoeffRing::of(R2);
  Polynomial x = var(K2, "x");
  Polynomial p = (x + cst(K2, 1)) * (x + cst(K2, 1));
  CHECK(p.text() == "x^2 + 1");  // cross term 2xy vanishes in characteristic 2
  CHECK(p == Polynomial::parse(K2, "x^2 + 1"));

  Polynomial zx = var(KZ, "x"), zy = var(KZ, "y");
  Polynomial sq = (zx + zy).pow(2);
  CHECK(sq.text() == "x^2 + 2*x*y + y^2");
  CHECK(sq.degree() == 2);
  CHECK(sq.coefficient(Monomial(std::map<std::string, long>{{"x", 1}, {"y", 1}})) == 2);

  CHECK((sq + Polynomial::zero(KZ)) == sq);
  CHECK((sq - sq).is_zero());
  CHECK(Polynomial::zero(KZ).degree() == -1);

  Polynomial cube = (zx + cst(KZ, 1)).pow(3);
  CHECK(cube.text() == "x^3 + 3*x^2 + 3*x + 1");
  CHECK(zx.pow(0) == cst(KZ, 1));

  CHECK(sq.scaled(-2).text() == "-2*x^2 - 4*x*y - 2*y^2");
  CHECK((zx * zy - zy * zx).is_zero());

  // full display ordering: graded-lex descending
  Polynomial full = (zx + zy + cst(KZ, 1)).pow(2);
  CHECK(full.text() == "x^2 + 2*x*y + y^2 + 2*x + 2*y + 1");
}

TEST_CASE("mixed coefficient rings are rejected") {
  CoeffRing K2 = CoeffRing::of(build_ring("Z/2"));
  CoeffRing K3 = CoeffRing::of(build_ring("Z/3"));
  Polynomial a = var(K2, "x"), b = var(K3, "x"), z = var(KZ, "x");
  CHECK(code_of([&] { (void)(a + b); }) == errc::mixed_coefficient_rings);
  CHECK(code_of([&] { (void)(a * z); }) == errc::mixed_coefficient_rings);
  CHECK(code_of([&] { (void)z.substitute({{"x", a}}); }) == errc::mixed_coefficient_rings);
}

TEST_CASE("substitution oracles") {
  CoeffRing K2 = CoeffRing::of(build_ring("Z/2"));
  Polynomial x2 = var(K2, "x").pow(2);
  Polynomial img = x2.substitute({{"x", var(K2, "x") + var(K2, "y")}});
  CHECK(img.text() == "x^2 + y^2");  // Frobenius in characteristic 2

  Polynomial zx = var(KZ, "x"), zy = var(KZ, "y");
  CHECK(zx.pow(3).substitute({{"x", zx * zy}}).text() == "x^3*y^3");

  Polynomial p = (zx + zy).pow(2) + zx;
  CHECK(p.substitute({{"x", zx}, {"y", zy}}) == p);  // identity substitution

  CHECK(code_of([&] { (void)p.substitute({{"x", zx}}); }) == errc::unbound_variable);
  // constants need no bindings
  CHECK(cst(KZ, 5).substitute({}) == cst(KZ, 5));
}

TEST_CASE("substitute is associative (randomized over Z/2 and Z/3)") {
  std::vector<std::string> vars = {"x", "y"};
  for (long n : {2L, 3L}) {
    CoeffRing K = CoeffRing::of(build_ring(RingSpec::zmod(n)));
    std::mt19937_64 rng(0x5eed0000 + static_cast<unsigned long>(n));
    for (int trial = 0; trial < 40; ++trial) {
      Polynomial p = rand_poly(rng, K, vars, 4, 3);
      std::map<std::string, Polynomial> sigma, tau, comp;
      for (const auto& v : vars) {
        sigma.emplace(v, rand_poly(rng, K, vars, 3, 2));
        tau.emplace(v, rand_poly(rng, K, vars, 3, 2));
      }
      for (const auto& v : vars) comp.emplace(v, sigma.at(v).substitute(tau));
      CHECK(p.substitute(sigma).substitute(tau) == p.substitute(comp));
    }
  }
}

TEST_CASE("evaluation oracles") {
  auto R6 = build_ring("Z/6");
  auto R5 = build_ring("Z/5");
  CoeffRing K6 = CoeffRing::of(R6), K5 = CoeffRing::of(R5);

  CHECK(var(K6, "x").evaluate({{"x", 5}}, R6) == 5);
  CHECK(Polynomial::zero(K5).evaluate({}, R5) == R5.zero());
  Polynomial p = (var(K5, "x") + var(K5, "y")) * var(K5, "x");
  CHECK(p.evaluate({{"x", 2}, {"y", 3}}, R5) == R5.zero());  // 5*2 = 0 mod 5

  // integer polynomials evaluate through the canonical map Z -> R
  Polynomial zp = (var(KZ, "x") + var(KZ, "y")).pow(2);
  auto R2 = build_ring("Z/2");
  CHECK(zp.evaluate({{"x", 1}, {"y", 1}}, R2) == R2.zero());
  CHECK(cst(KZ, -1).evaluate({}, R6) == 5);

  CHECK(code_of([&] { (void)p.evaluate({{"x", 2}}, R5); }) == errc::unbound_variable);
  CHECK(code_of([&] { (void)p.evaluate({{"x", 7}, {"y", 0}}, R5); }) == errc::foreign_element);
  CHECK(code_of([&] { (void)p.evaluate({{"x", 1}, {"y", 0}}, R6); }) == errc::ring_mismatch);
}

TEST_CASE("reduce_xq oracles") {
  Polynomial x = var(KZ, "x"), y = var(KZ, "y");
  CHECK(x.pow(4).reduce_xq(3, {"x"}) == x.pow(2));
  // divisibility witness: x^4 - x^2 = x * (x^3 - x)
  CHECK(x.pow(4) - x.pow(2) == x * (x.pow(3) - x));
  CHECK(x.reduce_xq(7, {"x"}) == x);
  CHECK((x.pow(2) * y.pow(6)).reduce_xq(3, {"x", "y"}) == x.pow(2) * y.pow(2));
  // only listed variables are touched
  CHECK((x.pow(4) * y.pow(6)).reduce_xq(3, {"x"}) == x.pow(2) * y.pow(6));
  // all-variable overload
  CHECK((x.pow(4) * y.pow(6)).reduce_xq(3) == x.pow(2) * y.pow(2));
  // constants and exponent-0 variables untouched; q = 2 sends everything to degree <= 1
  CHECK(cst(KZ, 9).reduce_xq(2) == cst(KZ, 9));
  CHECK(x.pow(5).reduce_xq(2) == x);
  CHECK(code_of([&] { (void)x.reduce_xq(1); }) == errc::invalid_modulus_degree);

  // collapsing exponents recombine coefficients: x^4 + x^2 -> 2*x^2 (q = 3)
  CHECK((x.pow(4) + x.pow(2)).reduce_xq(3) == x.pow(2).scaled(2));
}

TEST_CASE("reduce_xq is idempotent and a homomorphism onto its image") {
  std::vector<std::string> vars = {"x", "y"};
  for (const char* spec : {"Z/6", "Z/5"}) {
    CoeffRing K = CoeffRing::of(build_ring(spec));
    std::mt19937_64 rng(0xabcde);
    for (int trial = 0; trial < 40; ++trial) {
      long q = 2 + static_cast<long>(rng() % 4);
      Polynomial p = rand_poly(rng, K, vars, 4, 9);
      Polynomial r = rand_poly(rng, K, vars, 4, 9);
      Polynomial pq = p.reduce_xq(q), rq = r.reduce_xq(q);
      CHECK(pq.reduce_xq(q) == pq);
      CHECK((p + r).reduce_xq(q) == (pq + rq).reduce_xq(q));
      CHECK((p * r).reduce_xq(q) == (pq * rq).reduce_xq(q));
    }
  }
}

TEST_CASE("ideal-membership soundness of reduce_xq") {
  std::vector<std::string> vars = {"x", "y"};
  CoeffRing K5 = CoeffRing::of(build_ring("Z/5"));
  std::mt19937_64 rng(0x1dea1);
  for (int trial = 0; trial < 40; ++trial) {
    long q = 2 + static_cast<long>(rng() % 4);
    Polynomial p = rand_poly(rng, K5, vars, 4, 8);
    Polynomial m = rand_poly(rng, K5, vars, 3, 4);
    const std::string v = (rng() % 2) ? "x" : "y";
    Polynomial gen = var(K5, v).pow(q) - var(K5, v);
    CHECK((p + m * gen).reduce_xq(q) == p.reduce_xq(q));
  }
}

TEST_CASE("evaluate agrees with reduce_xq over finite fields, exhaustively") {
  for (const char* spec : {"Z/2", "Z/3", "GF(2,2)", "Z/5"}) {
    auto R = build_ring(spec);
    long q = R.size();
    CoeffRing K = CoeffRing::of(R);
    std::mt19937_64 rng(0xf1e1d + static_cast<unsigned long>(q));
    for (int trial = 0; trial < 25; ++trial) {
      Polynomial p = rand_poly(rng, K, {"x", "y"}, 4, 2 * q + 1);
      Polynomial pr = p.reduce_xq(q);
      for (FiniteRing::Elem a = 0; a < R.size(); ++a)
        for (FiniteRing::Elem b = 0; b < R.size(); ++b) {
          std::map<std::string, FiniteRing::Elem> env = {{"x", a}, {"y", b}};
          CHECK(p.evaluate(env, R) == pr.evaluate(env, R));
        }
    }
  }
}

TEST_CASE("rename merges colliding variables") {
  Polynomial x = var(KZ, "x"), y = var(KZ, "y");
  CHECK((x * y).rename({{"x", "z"}, {"y", "z"}}) == var(KZ, "z").pow(2));
  CHECK((x + y).rename({{"x", "y"}}) == y.scaled(2));
  CHECK((x + y).rename({{"x", "u"}, {"y", "v"}}).text() == "u + v");
  // untouched variables pass through
  CHECK((x * y).rename({{"x", "t"}}).text() == "t*y");
}

TEST_CASE("into_ring maps integer coefficients canonically") {
  Polynomial zx = var(KZ, "x"), zy = var(KZ, "y");
  auto R2 = build_ring("Z/2");
  CoeffRing K2 = CoeffRing::of(R2);
  CHECK((zx + zy).pow(2).into_ring(R2) == var(K2, "x").pow(2) + var(K2, "y").pow(2));
  CHECK((zx.scaled(-1)).into_ring(R2) == var(K2, "x"));
  CHECK(code_of([&] { (void)var(K2, "x").into_ring(R2); }) == errc::usage_error);
}

TEST_CASE("printer and parser round-trip bit-exactly") {
  SUBCASE("integers") {
    for (const char* s : {"3*x^2*y + 1", "x^2 + 2*x*y + y^2", "-x^2 + 2*x - 3", "0", "-7",
                          "x", "x*y*z", "2*x_3^2 - x_3"}) {
      Polynomial p = Polynomial::parse(KZ, s);
      CHECK(p.text() == s);
      CHECK(Polynomial::parse(KZ, p.text()) == p);
    }
    // non-canonical input still parses to the canonical form
    CHECK(Polynomial::parse(KZ, "x + x").text() == "2*x");
    CHECK(Polynomial::parse(KZ, "2*2*x^1*x^2").text() == "4*x^3");
    CHECK(Polynomial::parse(KZ, " - x + 0 ").text() == "-x");
  }
  SUBCASE("Z/6") {
    CoeffRing K6 = CoeffRing::of(build_ring("Z/6"));
    Polynomial p = Polynomial::parse(K6, "3*x^2*y + 1");
    CHECK(p.text() == "3*x^2*y + 1");
    CHECK(Polynomial::parse(K6, "4*x + 3*x").text() == "x");
    CHECK(Polynomial::parse(K6, "-2*x + 7").text() == "4*x + 1");
  }
  SUBCASE("GF(4) coefficients carry parentheses") {
    auto R4 = build_ring("GF(2,2)");
    CoeffRing K4 = CoeffRing::of(R4);
    // carrier order: 0, 1, g, g+1
    Polynomial p = Polynomial::monomial(K4, Monomial(std::map<std::string, long>{{"x", 1}}), 3) +
                   Polynomial::monomial(K4, Monomial(), 2);
    CHECK(p.text() == "(g+1)*x + (g)");
    CHECK(Polynomial::parse(K4, p.text()) == p);
    CHECK(Polynomial::parse(K4, "(g)*x + (g+1)*x").text() == "x");  // g + (g+1) = 1
  }
  SUBCASE("GF(9) coefficients that start with a digit still wrap") {
    auto R9 = build_ring("GF(3,2)");
    CoeffRing K9 = CoeffRing::of(R9);
    FiniteRing::Elem two_g_plus_one = R9.parse_element("2*g+1");
    Polynomial p =
        Polynomial::monomial(K9, Monomial(std::map<std::string, long>{{"x", 2}}), two_g_plus_one);
    CHECK(p.text() == "(2*g+1)*x^2");
    CHECK(Polynomial::parse(K9, p.text()) == p);
  }
  SUBCASE("product-ring coefficients") {
    auto R = build_ring("Z/2xZ/3");
    CoeffRing K = CoeffRing::of(R);
    FiniteRing::Elem e = R.parse_element("(1,2)");
    Polynomial p = Polynomial::monomial(K, Monomial(std::map<std::string, long>{{"x", 1}}), e) +
                   Polynomial::constant(K, 1);
    CHECK(p.text() == "(1,2)*x + (1,1)");
    CHECK(Polynomial::parse(K, p.text()) == p);
  }
}

TEST_CASE("parse rejects malformed input with positions") {
  auto offset_of = [](const CoeffRing& K, std::string_view s) -> long {
    try {
      (void)Polynomial::parse(K, s);
    } catch (const error& e) {
      CHECK(e.code() == errc::parse_error);
      return e.offset();
    }
    return -2;
  };
  CHECK(offset_of(KZ, "") == 0);
  CHECK(offset_of(KZ, "x +") == 3);
  CHECK(offset_of(KZ, "x ^2") == 2);
  CHECK(offset_of(KZ, "2**x") == 2);
  CHECK(offset_of(KZ, "x^") == 2);
  CHECK(offset_of(KZ, "(1)*x") == 0);  // no parenthesized coefficients over Z
  CHECK(offset_of(KZ, "x y") == 2);
  CoeffRing K4 = CoeffRing::of(build_ring("GF(2,2)"));
  CHECK(offset_of(K4, "(g+2h)*x") == 1);
  CHECK(offset_of(K4, "(g+1") == 4);  // unterminated coefficient
}

TEST_CASE("degree and variable accessors") {
  Polynomial p = Polynomial::parse(KZ, "3*x^2*y + y^3 + 1");
  CHECK(p.degree() == 3);
  CHECK(p.degree_in("x") == 2);
  CHECK(p.degree_in("y") == 3);
  CHECK(p.degree_in("z") == 0);
  CHECK(p.variables() == std::set<std::string>{"x", "y"});
  CHECK(Polynomial::zero(KZ).variables().empty());
}
