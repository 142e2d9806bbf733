#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "twlab/twmon.hpp"

using namespace twlab;

namespace {

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  return errc::internal_error;
}

const Check& row(const Report& rep, const std::string& name) {
  for (const Check& c : rep.checks())
    if (c.name == name) return c;
  static Check missing;
  REQUIRE_MESSAGE(false, ("missing report row " + name));
  return missing;
}

bool same_report(const Report& a, const Report& b) {
  if (a.total() != b.total()) return false;
  for (size_t i = 0; i < a.total(); ++i) {
    const Check &x = a.checks()[i], &y = b.checks()[i];
    if (x.name != y.name || x.input != y.input || x.expected != y.expected || x.got != y.got ||
        x.pass != y.pass)
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("finite monoid construction and validation") {
  FiniteMonoid c3 = FiniteMonoid::cyclic(3);
  CHECK(c3.name() == "C3");
  CHECK(c3.size() == 3);
  CHECK(c3.label(0) == "e");
  CHECK(c3.label(1) == "g");
  CHECK(c3.label(2) == "g2");
  CHECK(c3.mul(1, 2) == 0);
  CHECK(c3.mul(2, 2) == 1);
  CHECK(FiniteMonoid::trivial().size() == 1);
  CHECK(FiniteMonoid::trivial().name() == "C1");

  // a 2-element monoid given by hand
  FiniteMonoid flip("F", {"e", "a"}, {0, 1, 1, 0});
  CHECK(flip.mul(1, 1) == 0);

  CHECK(code_of([] { FiniteMonoid::cyclic(0); }) == errc::zero_size);
  CHECK(code_of([] { FiniteMonoid m("bad", {}, {}); }) == errc::zero_size);
  CHECK(code_of([] { FiniteMonoid m("bad", {"e", "a"}, {0, 1, 1}); }) == errc::usage_error);
  CHECK(code_of([] { FiniteMonoid m("bad", {"e", "a"}, {0, 1, 1, 5}); }) ==
        errc::foreign_element);
  CHECK(code_of([] { FiniteMonoid m("bad", {"e", "a"}, {1, 0, 0, 1}); }) == errc::usage_error);
  CHECK(code_of([] { FiniteMonoid m("bad", {"e", "e"}, {0, 1, 1, 0}); }) == errc::usage_error);
  // (a.a).a = b.a = a but a.(a.a) = a.b = e
  CHECK(code_of([] { FiniteMonoid m("bad", {"e", "a", "b"}, {0, 1, 2, 1, 2, 0, 2, 1, 1}); }) ==
        errc::usage_error);
  CHECK(code_of([&] { (void)c3.mul(3, 0); }) == errc::foreign_element);
  CHECK(code_of([&] { (void)c3.label(-1); }) == errc::foreign_element);
}

TEST_CASE("substitution instance basics over GF(2)") {
  PolyTW T(Biring(build_ring("GF(2,1)"), 2));
  CHECK(T.name() == "PolyTW(GF(2,1), q=2)");
  const Polynomial x = T.unit();
  const Polynomial one = T.ring_one();

  CHECK(T.compose(T.mul(x, x), T.add(x, one)).text() == "x + 1");
  CHECK(T.mul(x, x) == x);  // x^2 reduces to x
  for (const Polynomial& a : T.biring().canonical_elements()) {
    CHECK(T.compose(x, a) == a);
    CHECK(T.compose(a, x) == a);
    CHECK(T.compose(one, a) == one);
    CHECK(tw_compose(T, a, x) == a);
  }
  CHECK(T.counit_constant(T.add(x, one), 1) == Polynomial::zero(T.biring().coeffs()));
  CHECK(T.constant_of(1) == one);

  CHECK(code_of([&] {
          (void)T.compose(Polynomial::variable(CoeffRing::integers(), "x"), T.unit());
        }) == errc::instance_mismatch);
  CHECK(code_of([&] {
          (void)T.compose(Polynomial::variable(T.biring().coeffs(), "y"), T.unit());
        }) == errc::instance_mismatch);
}

TEST_CASE("substitution folds agree with direct composition on GF(3)") {
  PolyTW T(Biring(build_ring("GF(3,1)"), 3));
  const Polynomial x = T.unit();
  const Polynomial one = T.ring_one();
  Polynomial a = T.mul(x, x);
  CHECK(T.compose(a, T.add(x, one)).text() == "x^2 + 2*x + 1");
  CHECK(T.fold_add(a, x, one) == T.compose(a, T.add(x, one)));
  CHECK(T.fold_mul(a, T.add(x, one), x) == T.compose(a, T.mul(T.add(x, one), x)));
}

TEST_CASE("function instance over Z/3") {
  FunTW F(build_ring("Z/3"));
  CHECK(F.name() == "FunTW(Z/3)");
  const FunctionElement u = F.unit();
  CHECK(u.table() == std::vector<int>{0, 1, 2});
  CHECK(F.ring_one().table() == std::vector<int>{1, 1, 1});

  FunctionElement d0(build_ring("Z/3"), {1, 0, 0});
  CHECK(F.compose(d0, u) == d0);
  CHECK(F.fold_add(d0, u, u).table() == std::vector<int>{1, 0, 0});  // r -> d0(2r)
  CHECK(F.fold_mul(u, d0, u).table() == std::vector<int>{0, 0, 0});  // r -> d0(r)*r
  CHECK(F.fold_add(d0, u, u) == F.compose(d0, F.add(u, u)));
  CHECK(F.fold_mul(u, d0, u) == F.compose(u, F.mul(d0, u)));
  CHECK(F.counit_constant(d0, 0).table() == std::vector<int>{1, 1, 1});
  CHECK(tw_compose(F, d0, d0).table() == std::vector<int>{0, 1, 1});

  CHECK(code_of([&] { (void)F.compose(FunctionElement::identity(build_ring("Z/2")), u); }) ==
        errc::instance_mismatch);
}

TEST_CASE("monoid plethory composition") {
  MonoidPlethory M(FiniteMonoid::cyclic(2));
  CHECK(M.name() == "MonoidPlethory(C2)");
  const Polynomial xe = M.generator(0);
  const Polynomial xg = M.generator(1);
  CHECK(xe.text() == "x_e");
  CHECK(xg.text() == "x_g");

  CHECK(M.compose(xg, xg) == xe);
  CHECK(M.compose(xg, xe) == xg);
  CHECK(M.compose(xe, xg) == xg);
  CHECK(M.compose(xg, M.mul(xe, xg)).text() == "x_e*x_g");
  CHECK(M.sigma(1, M.add(xe, M.mul(xg, xg))).text() == "x_e^2 + x_g");
  CHECK(tw_compose(M, xg, xg) == xe);

  Polynomial b = M.add(xe, xg);
  CHECK(M.compose(M.add(xe, xg), b) == M.add(M.compose(xe, b), M.compose(xg, b)));
  CHECK(M.fold_add(xg, xe, xg) == M.compose(xg, M.add(xe, xg)));
  CHECK(M.fold_mul(xg, b, b) == M.compose(xg, M.mul(b, b)));

  // the one-element monoid collapses to plain substitution in x_e
  MonoidPlethory M1(FiniteMonoid::trivial());
  Polynomial ye = M1.generator(0);
  Polynomial a = M1.add(M1.mul(ye, ye), M1.ring_one());
  Polynomial arg = M1.add(ye, M1.constant_of(2));
  CHECK(M1.compose(a, arg).text() == "x_e^2 + 4*x_e + 5");
  CHECK(M1.compose(a, arg) == a.substitute({{"x_e", arg}}));
  CHECK(M1.counit_constant(a, 2).text() == "5");
  CHECK(M1.counit_constant(a, -2).text() == "5");

  CHECK(code_of([&] {
          (void)M.compose(Polynomial::variable(CoeffRing::of(build_ring("Z/2")), "x_e"), xe);
        }) == errc::instance_mismatch);
  CHECK(code_of([&] {
          (void)M.compose(Polynomial::variable(CoeffRing::integers(), "x_g2"), xe);
        }) == errc::instance_mismatch);
}

TEST_CASE("axiom suite is exhaustive and green on small quotients") {
  Report rep2 = verify_tw_axioms(TWInstance{PolyTW(Biring(build_ring("GF(2,1)"), 2))});
  CHECK(rep2.all_pass());
  CHECK(rep2.total() == 10);
  CHECK(row(rep2, "sampling-policy").got == "exhaustive over 4 elements");
  CHECK(row(rep2, "compose-assoc").got == "0 failures in 64 cases");
  CHECK(row(rep2, "unit-left").got == "0 failures in 4 cases");
  CHECK(row(rep2, "unit-right").got == "0 failures in 4 cases");
  CHECK(row(rep2, "left-one").got == "0 failures in 4 cases");
  CHECK(row(rep2, "right-const").got == "0 failures in 8 cases");
  CHECK(row(rep2, "right-add").got == "0 failures in 64 cases");

  Report rep3 = verify_tw_axioms(TWInstance{PolyTW(Biring(build_ring("GF(3,1)"), 3))});
  CHECK(rep3.all_pass());
  CHECK(row(rep3, "sampling-policy").got == "exhaustive over 27 elements");
  CHECK(row(rep3, "compose-assoc").got == "0 failures in 19683 cases");

  Report repf2 = verify_tw_axioms(TWInstance{FunTW(build_ring("GF(2,1)"))});
  CHECK(repf2.all_pass());
  CHECK(row(repf2, "sampling-policy").got == "exhaustive over 4 elements");

  Report repf3 = verify_tw_axioms(TWInstance{FunTW(build_ring("Z/3"))});
  CHECK(repf3.all_pass());
  CHECK(row(repf3, "sampling-policy").got == "exhaustive over 27 elements");
  CHECK(row(repf3, "right-mul").got == "0 failures in 19683 cases");
}

TEST_CASE("axiom suite with sampled carriers") {
  // free substitution instance over a non-field base
  Report repz6 = verify_tw_axioms(TWInstance{PolyTW(Biring(build_ring("Z/6")))});
  CHECK(repz6.all_pass());
  CHECK(row(repz6, "sampling-policy").got == "seeded (seed=0, 10 samples)");
  CHECK(row(repz6, "compose-assoc").got == "0 failures in 1000 cases");

  // a function instance too large to enumerate
  Report repf6 = verify_tw_axioms(TWInstance{FunTW(build_ring("Z/6"))});
  CHECK(repf6.all_pass());
  CHECK(row(repf6, "sampling-policy").got == "seeded (seed=0, 11 samples)");

  TwmonCaps caps;
  caps.seed = 42;
  Report repm2 = verify_tw_axioms(TWInstance{MonoidPlethory(FiniteMonoid::cyclic(2))}, caps);
  CHECK(repm2.all_pass());
  CHECK(row(repm2, "sampling-policy").got == "seeded (seed=42, 10 samples)");

  Report repm3 = verify_tw_axioms(TWInstance{MonoidPlethory(FiniteMonoid::cyclic(3))});
  CHECK(repm3.all_pass());
  CHECK(row(repm3, "sampling-policy").got == "seeded (seed=0, 10 samples)");

  // identical configuration reproduces the identical report
  Report again = verify_tw_axioms(TWInstance{MonoidPlethory(FiniteMonoid::cyclic(2))}, caps);
  CHECK(same_report(repm2, again));
}

TEST_CASE("eta transports composition onto functions") {
  for (long q : {2L, 3L}) {
    FiniteRing R = build_ring("Z/" + std::to_string(q));
    PolyTW T(Biring(R, q));
    auto elems = T.biring().canonical_elements();
    long checked = 0;
    for (const Polynomial& a : elems)
      for (const Polynomial& b : elems) {
        CHECK(eta(R, T.compose(a, b)) == eta(R, a).compose(eta(R, b)));
        ++checked;
      }
    CHECK(checked == (q == 2 ? 16 : 729));
  }
}

TEST_CASE("descent verdicts") {
  Report d2 = descent_check(PolyTW(Biring(build_ring("GF(2,1)"))), 2);
  CHECK(d2.all_pass());
  CHECK(d2.total() == 3);
  CHECK(d2.checks()[0].name == "ideal-coideal");
  CHECK(d2.checks()[0].got == "coideal");
  CHECK(d2.checks()[1].name == "translation");
  CHECK(d2.checks()[1].got == "0 failures in 143 cases");
  CHECK(d2.checks()[2].name == "quotient-tw-structure");
  CHECK(d2.checks()[2].got == "inherits");

  CHECK(descent_check(PolyTW(Biring(build_ring("GF(3,1)"))), 3).all_pass());
  CHECK(descent_check(PolyTW(Biring(build_ring("GF(2,2)"))), 4).all_pass());

  Report d6 = descent_check(PolyTW(Biring(build_ring("Z/6"))), 6);
  CHECK_FALSE(d6.all_pass());
  CHECK(d6.failed() == 2);
  CHECK_FALSE(d6.checks()[0].pass);
  CHECK(d6.checks()[0].got.find("3*x^4*y^2 + 2*x^3*y^3 + 3*x^2*y^4") != std::string::npos);
  CHECK(d6.checks()[1].pass);  // translation itself holds
  CHECK(d6.checks()[2].got == "obstructed");

  CHECK(code_of([] { descent_check(PolyTW(Biring(build_ring("Z/2"), 2)), 2); }) ==
        errc::usage_error);
  CHECK(code_of([] { descent_check(PolyTW(Biring(build_ring("Z/2"))), 1); }) ==
        errc::invalid_modulus_degree);
}

TEST_CASE("currying bijection and ring transport") {
  FiniteRing Z2 = build_ring("Z/2"), Z3 = build_ring("Z/3"), Z4 = build_ring("Z/4");

  Report small = currying_iso(1, 1, Z2);
  CHECK(small.all_pass());
  CHECK(row(small, "currying-bijection").got == "2 distinct curried tables");
  CHECK(row(small, "currying-ring").got == "0 failures in 9 cases");

  Report med = currying_iso(2, 2, Z3);
  CHECK(med.all_pass());
  CHECK(row(med, "currying-bijection").got == "81 distinct curried tables");
  CHECK(row(med, "currying-ring").got == "0 failures in 13123 cases");

  Report empty = currying_iso(2, 0, Z4);
  CHECK(empty.all_pass());
  CHECK(row(empty, "currying-bijection").got == "1 distinct curried tables");

  Report nat = currying_iso(2, 2, Z2, {Z2, Z3, Z4});
  CHECK(nat.all_pass());
  long nat_rows = 0;
  for (const Check& c : nat.checks())
    if (c.name == "currying-naturality") ++nat_rows;
  CHECK(nat_rows == 3);
  CHECK(nat.checks()[2].input == "S1=2 S2=2 A=Z/2 -> Z/2");
  CHECK(nat.checks()[2].got.find("(1 homs)") != std::string::npos);
  CHECK(nat.checks()[3].got.find("(0 homs)") != std::string::npos);

  // the exhaustive matrix used by the verification gate
  for (long s1 = 0; s1 <= 2; ++s1)
    for (long s2 = 0; s2 <= 2; ++s2)
      for (const FiniteRing& A : {Z2, Z3, Z4})
        CHECK(currying_iso(s1, s2, A, {Z2, Z3, Z4}).all_pass());

  CHECK(code_of([&] { currying_iso(2, 2, build_ring("Z/9")); }) == errc::cap_exceeded);
  CHECK(code_of([&] { currying_iso(-1, 1, Z2); }) == errc::usage_error);
}

TEST_CASE("cogroup structures are unique") {
  for (long n : {1L, 2L, 3L, 4L, 5L, 6L, 9L, 12L, 100L}) CHECK(cogroup_uniqueness(n) == 1);
  TwmonCaps caps;
  caps.cogroup_cap = 10;
  CHECK(code_of([&] { cogroup_uniqueness(12, caps); }) == errc::cap_exceeded);
  CHECK(code_of([] { cogroup_uniqueness(0); }) == errc::zero_size);
}
