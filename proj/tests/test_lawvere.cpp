#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "twlab/lawvere.hpp"

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

const Check* row_named(const Report& rep, const std::string& name, const std::string& needle) {
  for (const auto& c : rep.checks())
    if (c.name == name && c.input.find(needle) != std::string::npos) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("term basics") {
  Term t = Term::parse("(* (+ s1 s2) s1)");
  CHECK(t.text() == "(* (+ s1 s2) s1)");
  CHECK(t.depth() == 2);
  CHECK(t.variables() == std::set<std::string>{"s1", "s2"});
  CHECK(Term::parse("x").is_var());
  CHECK(Term::parse("x").depth() == 0);
  CHECK(Term::parse("(e)").depth() == 1);
  CHECK(Term::parse("( + x  y )").text() == "(+ x y)");

  Term sub = t.substitute({{"s1", Term::parse("(neg a)")}});
  CHECK(sub.text() == "(* (+ (neg a) s2) (neg a))");  // unbound s2 stays

  CHECK(t == Term::parse("(* (+ s1 s2) s1)"));
  CHECK(t != Term::parse("(* s1 (+ s1 s2))"));

  auto offset_of = [](std::string_view s) -> long {
    try {
      (void)Term::parse(s);
    } catch (const error& e) {
      CHECK(e.code() == errc::parse_error);
      return e.offset();
    }
    return -2;
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of("(+ x") == 4);
  CHECK(offset_of(")x") == 0);
  CHECK(offset_of("x y") == 2);
  CHECK(offset_of("(+ x) y") == 6);
}

TEST_CASE("built-in presentations hold in reference models") {
  for (long n = 2; n <= 6; ++n) {
    auto R = build_ring(RingSpec::zmod(n));
    CHECK(is_model(make_ring_model(R)).ok);
    CHECK(is_model(make_add_group_model(R)).ok);
    CHECK(is_model(make_mult_monoid_model(R)).ok);
    CHECK(is_model(make_cyclic_group_monoid(n)).ok);
  }
  CHECK(is_model(make_ring_model(build_ring("GF(2,2)"))).ok);
  CHECK(TheoryPresentation::monoid().operations().size() == 2);
  CHECK(TheoryPresentation::abgroup().identities().size() == 4);
  CHECK(TheoryPresentation::commring().operations().size() == 5);
}

TEST_CASE("term evaluation oracles") {
  auto A5 = make_ring_model(build_ring("Z/5"));
  CHECK(eval_term(Term::parse("(* (+ s1 s2) s1)"), A5, {{"s1", 2}, {"s2", 3}}) == 0);
  CHECK(eval_term(Term::parse("s"), A5, {{"s", 4}}) == 4);
  auto G4 = make_add_group_model(build_ring("Z/4"));
  CHECK(eval_term(Term::parse("(neg (0))"), G4, {}) == 0);
  CHECK(eval_term(Term::parse("(+ x (neg y))"), G4, {{"x", 1}, {"y", 3}}) == 2);

  CHECK(code_of([&] { (void)eval_term(Term::parse("(+ x y)"), G4, {{"x", 0}}); }) ==
        errc::unbound_variable);
  CHECK(code_of([&] { (void)eval_term(Term::parse("(neg x y)"), G4, {{"x", 0}, {"y", 0}}); }) ==
        errc::arity_mismatch);
  CHECK(code_of([&] { (void)eval_term(Term::parse("(foo x)"), G4, {{"x", 0}}); }) ==
        errc::unknown_operation);
  CHECK(code_of([&] { (void)eval_term(Term::parse("x"), G4, {{"x", 9}}); }) ==
        errc::foreign_element);
}

TEST_CASE("model checking") {
  SUBCASE("broken multiplication is caught with a commutativity counterexample") {
    auto R3 = build_ring("Z/3");
    auto good = make_ring_model(R3);
    std::vector<long> add(9), neg(3), proj(9);
    for (long a = 0; a < 3; ++a) {
      neg[a] = R3.neg(static_cast<int>(a));
      for (long b = 0; b < 3; ++b) {
        add[a + 3 * b] = R3.add(static_cast<int>(a), static_cast<int>(b));
        proj[a + 3 * b] = a;  // a*b := a
      }
    }
    FiniteAlgebra bad(TheoryPresentation::commring(), 3,
                      {{"+", add}, {"*", proj}, {"neg", neg}, {"0", {0}}, {"1", {1}}},
                      "Z/3 with projection product");
    CHECK(is_model(good).ok);
    auto verdict = is_model(bad);
    CHECK_FALSE(verdict.ok);
    CHECK(verdict.counterexample.find("(* x y) = (* y x)") != std::string::npos);
  }
  SUBCASE("the one-element algebra models everything") {
    for (const auto* T : {&TheoryPresentation::monoid(), &TheoryPresentation::abgroup(),
                          &TheoryPresentation::commring()}) {
      std::map<std::string, std::vector<long>> tables;
      for (const auto& op : T->operations()) {
        size_t entries = 1;
        for (long i = 0; i < op.arity; ++i) entries *= 1;
        tables[op.symbol] = std::vector<long>(entries, 0);
      }
      CHECK(is_model(FiniteAlgebra(*T, 1, tables)).ok);
    }
  }
  SUBCASE("carrier cap") {
    CHECK(code_of([&] { (void)is_model(make_ring_model(build_ring("Z/12"))); }) ==
          errc::carrier_too_large);
    CHECK(is_model(make_ring_model(build_ring("Z/12")), 12).ok);
  }
}

TEST_CASE("co-operation construction on generators") {
  auto plus = co_operation_on_free(TheoryPresentation::abgroup(), "+", {"s"});
  CHECK(plus.at("s").text() == "(+ s@1 s@2)");

  auto one = co_operation_on_free(TheoryPresentation::commring(), "1", {"s"});
  CHECK(one.at("s").text() == "(1)");  // nullary: lands in the initial algebra

  auto mul = co_operation_on_free(TheoryPresentation::monoid(), "*", {"s", "t"});
  CHECK(mul.at("s").text() == "(* s@1 s@2)");
  CHECK(mul.at("t").text() == "(* t@1 t@2)");

  CHECK(code_of([&] {
          (void)co_operation_on_free(TheoryPresentation::monoid(), "+", {"s"});
        }) == errc::unknown_operation);
}

TEST_CASE("term enumeration is deterministic and capped") {
  auto terms1 = enumerate_terms(TheoryPresentation::monoid(), {"s"}, 1);
  REQUIRE(terms1.size() == 3);
  CHECK(terms1[0].text() == "s");
  CHECK(terms1[1].text() == "(* s s)");
  CHECK(terms1[2].text() == "(e)");

  auto terms2 = enumerate_terms(TheoryPresentation::monoid(), {"s"}, 2);
  CHECK(terms2.size() == 11);
  // the depth-1 prefix is preserved
  for (size_t i = 0; i < terms1.size(); ++i) CHECK(terms2[i] == terms1[i]);

  CHECK(enumerate_terms(TheoryPresentation::commring(), {}, 1).size() == 2);  // (0), (1)
  CHECK(code_of([&] {
          (void)enumerate_terms(TheoryPresentation::commring(), {"a", "b", "c"}, 3, 1000);
        }) == errc::cap_exceeded);
}

TEST_CASE("co-operation diagram verification") {
  SUBCASE("commutative ring multiplication over Z/3") {
    Report rep = verify_coop_property(TheoryPresentation::commring(), "*", {"s"},
                                      make_ring_model(build_ring("Z/3")), 2);
    CHECK(rep.all_pass());
    REQUIRE(rep.total() == 2);
    CHECK(rep.checks()[0].name == "model-check");
    CHECK(rep.checks()[1].name == "coop-diagram");
    CHECK(rep.checks()[1].got.substr(0, 10) == "0 failures");
  }
  SUBCASE("abelian group addition over Z/2 with two generators") {
    Report rep = verify_coop_property(TheoryPresentation::abgroup(), "+", {"s", "t"},
                                      make_add_group_model(build_ring("Z/2")), 2);
    CHECK(rep.all_pass());
  }
  SUBCASE("nullary constants land in the initial algebra") {
    for (const char* op : {"0", "1"}) {
      Report rep = verify_coop_property(TheoryPresentation::commring(), op, {"s"},
                                        make_ring_model(build_ring("Z/3")), 2);
      CHECK(rep.all_pass());
    }
  }
  SUBCASE("a non-model is rejected before the property runs") {
    FiniteAlgebra leftzero(TheoryPresentation::monoid(), 2, {{"*", {0, 1, 0, 1}}, {"e", {0}}},
                           "two-element left-zero");
    Report rep = verify_coop_property(TheoryPresentation::monoid(), "*", {"s"}, leftzero, 2);
    REQUIRE(rep.total() == 1);
    CHECK(rep.checks()[0].name == "model-check");
    CHECK_FALSE(rep.checks()[0].pass);
    CHECK_FALSE(rep.all_pass());
  }
  SUBCASE("caps and mismatches") {
    auto A3 = make_ring_model(build_ring("Z/3"));
    CHECK(code_of([&] {
            (void)verify_coop_property(TheoryPresentation::commring(), "*", {"s"}, A3, 5);
          }) == errc::depth_too_large);
    CHECK(code_of([&] {
            (void)verify_coop_property(TheoryPresentation::commring(), "*", {"s"},
                                       make_ring_model(build_ring("Z/12")), 2);
          }) == errc::carrier_too_large);
    CHECK(code_of([&] {
            (void)verify_coop_property(TheoryPresentation::monoid(), "*", {"s"}, A3, 2);
          }) == errc::instance_mismatch);
    CHECK(code_of([&] {
            (void)verify_coop_property(TheoryPresentation::commring(), "*",
                                       {"a", "b", "c", "d"}, A3, 2);
          }) == errc::cap_exceeded);
  }
}

TEST_CASE("full built-in matrix at acceptance scale") {
  // every operation of every built-in theory, |S| up to 2, models Z/2, Z/3, Z/4
  for (const char* spec : {"Z/2", "Z/3", "Z/4"}) {
    auto R = build_ring(spec);
    const std::vector<std::pair<const TheoryPresentation*, FiniteAlgebra>> table = {
        {&TheoryPresentation::monoid(), make_mult_monoid_model(R)},
        {&TheoryPresentation::abgroup(), make_add_group_model(R)},
        {&TheoryPresentation::commring(), make_ring_model(R)},
    };
    for (const auto& [T, A] : table)
      for (const auto& op : T->operations())
        for (const std::vector<std::string>& S :
             {std::vector<std::string>{"s"}, std::vector<std::string>{"s", "t"}}) {
          Report rep = verify_coop_property(*T, op.symbol, S, A, 2);
          CHECK(rep.all_pass());
        }
  }
}

TEST_CASE("hom structures agree") {
  SUBCASE("single generator over Z/2") {
    Report rep =
        hom_structures_agree(TheoryPresentation::commring(), {"s"}, make_ring_model(build_ring("Z/2")));
    CHECK(rep.all_pass());
    const Check* plus = row_named(rep, "hom-structure", "op=+");
    REQUIRE(plus != nullptr);
    CHECK(plus->expected == "agreement on all 4 tuples");
  }
  SUBCASE("two generators over Z/3") {
    Report rep = hom_structures_agree(TheoryPresentation::abgroup(), {"s", "t"},
                                      make_add_group_model(build_ring("Z/3")));
    CHECK(rep.all_pass());
    const Check* plus = row_named(rep, "hom-structure", "op=+");
    REQUIRE(plus != nullptr);
    CHECK(plus->expected == "agreement on all 81 tuples");
  }
  SUBCASE("empty generator set is trivially consistent") {
    Report rep = hom_structures_agree(TheoryPresentation::monoid(), {},
                                      make_mult_monoid_model(build_ring("Z/4")));
    CHECK(rep.all_pass());
    CHECK(rep.total() == 1 + TheoryPresentation::monoid().operations().size());
  }
  SUBCASE("acceptance roster") {
    for (const char* spec : {"Z/2", "Z/3", "Z/4"}) {
      auto R = build_ring(spec);
      CHECK(hom_structures_agree(TheoryPresentation::monoid(), {"s"}, make_mult_monoid_model(R))
                .all_pass());
      CHECK(hom_structures_agree(TheoryPresentation::abgroup(), {"s", "t"},
                                 make_add_group_model(R))
                .all_pass());
      CHECK(hom_structures_agree(TheoryPresentation::commring(), {"s", "t"}, make_ring_model(R))
                .all_pass());
    }
  }
}

TEST_CASE("theory file format") {
  SUBCASE("custom theory with comments") {
    TheoryPresentation T = TheoryPresentation::parse(R"(
# an idempotent commutative magma
op v 2
id (v x x) = x      # idempotency
id (v x y) = (v y x)
)",
                                                     "Band");
    CHECK(T.name() == "Band");
    CHECK(T.operations().size() == 1);
    CHECK(T.identities().size() == 2);
    CHECK(T.arity_of("v") == 2);
    // max and min on a two-element chain are models
    std::vector<long> maxtab = {0, 1, 1, 1};
    CHECK(is_model(FiniteAlgebra(T, 2, {{"v", maxtab}})).ok);
    std::vector<long> xortab = {0, 1, 1, 0};
    CHECK_FALSE(is_model(FiniteAlgebra(T, 2, {{"v", xortab}})).ok);
  }
  SUBCASE("declaration errors") {
    CHECK(code_of([&] {
            (void)TheoryPresentation::parse("op f 1\nid (f x y) = x", "Bad");
          }) == errc::arity_mismatch);
    CHECK(code_of([&] {
            (void)TheoryPresentation::parse("op f 1\nid (g x) = x", "Bad");
          }) == errc::unknown_operation);
    CHECK(code_of([&] { (void)TheoryPresentation::parse("op f 1\nop f 2", "Bad"); }) ==
          errc::usage_error);
    CHECK(code_of([&] { (void)TheoryPresentation::parse("nonsense", "Bad"); }) ==
          errc::parse_error);
    CHECK(code_of([&] { (void)TheoryPresentation::parse("op f 1\nid (f x) x", "Bad"); }) ==
          errc::parse_error);
  }
  SUBCASE("parse error offsets are absolute") {
    try {
      (void)TheoryPresentation::parse("op f 1\nid (f x = x", "Bad");
      CHECK(false);
    } catch (const error& e) {
      CHECK(e.code() == errc::parse_error);
      CHECK(e.offset() > 7);  // beyond the first line
    }
  }
}

TEST_CASE("algebra construction guards") {
  auto& T = TheoryPresentation::monoid();
  CHECK(code_of([&] { FiniteAlgebra A(T, 0, {}); }) == errc::zero_size);
  CHECK(code_of([&] { FiniteAlgebra A(T, 2, {{"*", {0, 1, 0, 1}}}); }) == errc::usage_error);
  CHECK(code_of([&] {
          FiniteAlgebra A(T, 2, {{"*", {0, 1, 0}}, {"e", {0}}});
        }) == errc::usage_error);
  CHECK(code_of([&] {
          FiniteAlgebra A(T, 2, {{"*", {0, 1, 0, 5}}, {"e", {0}}});
        }) == errc::foreign_element);
  CHECK(code_of([&] {
          FiniteAlgebra A(T, 2, {{"*", {0, 1, 0, 1}}, {"e", {0}}, {"zz", {0}}});
        }) == errc::unknown_operation);
  auto A4 = make_mult_monoid_model(build_ring("Z/4"));
  CHECK(code_of([&] { (void)A4.apply("*", {1}); }) == errc::arity_mismatch);
  CHECK(code_of([&] { (void)A4.apply("nope", {}); }) == errc::unknown_operation);
  CHECK(code_of([&] { (void)A4.apply("*", {1, 7}); }) == errc::foreign_element);
  CHECK(A4.apply("*", {3, 3}) == 1);
}
