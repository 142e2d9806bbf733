#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "twlab/biring.hpp"
#include "twlab/finring.hpp"
#include "twlab/lawvere.hpp"
#include "twlab/poly.hpp"
#include "twlab/report.hpp"
#include "twlab/suite.hpp"
#include "twlab/toycoh.hpp"
#include "twlab/twmon.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

using twlab::Check;
using twlab::Report;

std::string join_args(int argc, char** argv) {
  std::string out = "twlab";
  for (int i = 1; i < argc; ++i) {
    out += ' ';
    out += argv[i];
  }
  return out;
}

nlohmann::json envelope(const std::string& command, unsigned long long seed,
                        const Report& rep) {
  nlohmann::json cases = nlohmann::json::array();
  for (const Check& c : rep.checks())
    cases.push_back({{"name", c.name},
                     {"inputs", c.input},
                     {"expected", c.expected},
                     {"got", c.got},
                     {"pass", c.pass}});
  return {{"schema", 1},
          {"tool", "twlab"},
          {"version", kVersion},
          {"command", command},
          {"seed", seed},
          {"cases", std::move(cases)},
          {"summary",
           {{"total", rep.total()}, {"passed", rep.passed()}, {"failed", rep.failed()}}}};
}

std::string show_set(const std::vector<int>& xs) {
  std::string out = "{";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out + "}";
}

twlab::Polynomial parse_poly(const twlab::CoeffRing& C, const std::string& text) {
  return twlab::Polynomial::parse(C, text);
}

const twlab::TheoryPresentation& theory_by_name(const std::string& name) {
  if (name == "monoid") return twlab::TheoryPresentation::monoid();
  if (name == "abgroup") return twlab::TheoryPresentation::abgroup();
  if (name == "commring") return twlab::TheoryPresentation::commring();
  throw twlab::error(twlab::errc::usage_error,
                     "unknown theory \"" + name + "\" (monoid, abgroup, commring)");
}

twlab::FiniteAlgebra model_for(const twlab::TheoryPresentation& T, const twlab::FiniteRing& R) {
  if (T.name() == "Monoid") return twlab::make_mult_monoid_model(R);
  if (T.name() == "AbGroup") return twlab::make_add_group_model(R);
  return twlab::make_ring_model(R);
}

std::vector<std::string> generator_set(long n) {
  if (n < 0 || n > 3)
    throw twlab::error(twlab::errc::usage_error, "generator count must be between 0 and 3");
  std::vector<std::string> names = {"s", "t", "u"};
  return {names.begin(), names.begin() + n};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twlab: exact-arithmetic workbench for Tall-Wraith monoid structures"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string expect = "pass";
  unsigned long long seed = 0;
  long cap_carrier = 0;
  std::string json_path;
  long jobs = 1;

  app.add_option("--expect", expect,
                 "exit 0 when the verification passes (pass) or when the expected "
                 "failure is confirmed (fail)")
      ->check(CLI::IsMember({"pass", "fail"}))
      ->capture_default_str();
  app.add_option("--seed", seed, "seed for all sampled checks; recorded in the report")
      ->capture_default_str();
  app.add_option("--cap-carrier", cap_carrier,
                 "override the enumeration caps (0 keeps the module defaults)")
      ->capture_default_str();
  app.add_option("--json", json_path, "write the JSON report to this path instead of stdout");
  app.add_option("--jobs", jobs, "criterion-level parallelism for the suite")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.set_version_flag("--version", std::string("twlab ") + kVersion);

  auto toycaps = [&] {
    twlab::ToycohCaps c;
    if (cap_carrier > 0) {
      c.base_cap = cap_carrier;
      c.sequence_cap = cap_carrier;
      c.field_cap = cap_carrier;
    }
    return c;
  };
  auto twcaps = [&] {
    twlab::TwmonCaps c;
    c.seed = seed;
    if (cap_carrier > 0) {
      c.exhaustive_cap = cap_carrier;
      c.curry_cap = cap_carrier;
      c.cogroup_cap = cap_carrier;
    }
    return c;
  };
  auto lawcaps = [&] {
    twlab::LawvereCaps c;
    if (cap_carrier > 0) c.carrier = cap_carrier;
    return c;
  };

  std::function<Report()> action;

  // ---- ring ----------------------------------------------------------------
  auto* ring = app.add_subcommand("ring", "finite ring queries");
  ring->require_subcommand(1);
  ring->fallthrough();
  {
    static std::string spec;
    auto* idem = ring->add_subcommand("idempotents", "list the idempotent elements");
    idem->fallthrough();
    idem->add_option("spec", spec, "ring spec, e.g. Z/6 or GF(2,2)")->required();
    idem->callback([&] {
      action = [&] {
        twlab::FiniteRing R = twlab::build_ring(spec);
        std::string got = show_set(R.idempotents());
        Report rep;
        rep.add_eq("idempotents", R.spec().text(), got, got);
        return rep;
      };
    });
  }
  {
    static std::string spec;
    auto* ax = ring->add_subcommand("axioms", "re-verify the ring axioms on the carrier");
    ax->fallthrough();
    ax->add_option("spec", spec, "ring spec")->required();
    ax->callback([&] {
      action = [&] {
        twlab::FiniteRing R = twlab::build_ring(spec);
        auto violation = twlab::check_ring_axioms(R);
        Report rep;
        rep.add({"ring-axioms", R.spec().text(), "all ring axioms hold",
                 violation ? *violation : "all ring axioms hold", !violation});
        return rep;
      };
    });
  }
  {
    static std::string spec_a, spec_b;
    auto* homs = ring->add_subcommand("homs", "count unital ring homomorphisms A -> B");
    homs->fallthrough();
    homs->add_option("A", spec_a, "source ring spec")->required();
    homs->add_option("B", spec_b, "target ring spec")->required();
    homs->callback([&] {
      action = [&] {
        twlab::FiniteRing A = twlab::build_ring(spec_a);
        twlab::FiniteRing B = twlab::build_ring(spec_b);
        auto hs = twlab::ring_homs(A, B);
        std::string got = std::to_string(hs.size()) + " unital homomorphisms";
        Report rep;
        rep.add_eq("ring-homs", A.spec().text() + " -> " + B.spec().text(), got, got);
        return rep;
      };
    });
  }

  // ---- poly ----------------------------------------------------------------
  auto* poly = app.add_subcommand("poly", "exact polynomial arithmetic");
  poly->require_subcommand(1);
  poly->fallthrough();
  {
    static std::string spec, text;
    auto* parse = poly->add_subcommand("parse", "parse and print the canonical form");
    parse->fallthrough();
    parse->add_option("coeffs", spec, "coefficient domain: Z or a ring spec")->required();
    parse->add_option("poly", text, "polynomial text")->required();
    parse->callback([&] {
      action = [&] {
        twlab::CoeffRing C = spec == "Z" ? twlab::CoeffRing::integers()
                                         : twlab::CoeffRing::of(twlab::build_ring(spec));
        twlab::Polynomial P = parse_poly(C, text);
        Report rep;
        rep.add_eq("normal-form", text, P.text(), P.text());
        bool stable = parse_poly(C, P.text()) == P;
        rep.add({"round-trip", P.text(), "stable", stable ? "stable" : "unstable", stable});
        return rep;
      };
    });
  }
  {
    static std::string spec, text;
    static long q = 2;
    auto* reduce = poly->add_subcommand("reduce", "normal form modulo x^q - x");
    reduce->fallthrough();
    reduce->add_option("spec", spec, "coefficient ring spec")->required();
    reduce->add_option("q", q, "modulus exponent (q >= 2)")->required();
    reduce->add_option("poly", text, "polynomial text")->required();
    reduce->callback([&] {
      action = [&] {
        twlab::CoeffRing C = twlab::CoeffRing::of(twlab::build_ring(spec));
        twlab::Polynomial P = parse_poly(C, text).reduce_xq(q);
        Report rep;
        rep.add_eq("reduced", text + " mod x^" + std::to_string(q) + " - x", P.text(),
                   P.text());
        return rep;
      };
    });
  }
  {
    static std::string spec, text;
    static std::vector<std::string> assigns;
    auto* ev = poly->add_subcommand("eval", "evaluate at ring elements");
    ev->fallthrough();
    ev->add_option("spec", spec, "coefficient ring spec")->required();
    ev->add_option("poly", text, "polynomial text")->required();
    ev->add_option("assignments", assigns, "bindings var=element, e.g. x=3");
    ev->callback([&] {
      action = [&] {
        twlab::FiniteRing R = twlab::build_ring(spec);
        twlab::CoeffRing C = twlab::CoeffRing::of(R);
        twlab::Polynomial P = parse_poly(C, text);
        std::map<std::string, twlab::FiniteRing::Elem> env;
        std::string shown;
        for (const std::string& a : assigns) {
          auto eq = a.find('=');
          if (eq == std::string::npos)
            throw twlab::error(twlab::errc::usage_error,
                               "assignment \"" + a + "\" is not var=element");
          env[a.substr(0, eq)] = R.parse_element(a.substr(eq + 1));
          if (!shown.empty()) shown += ", ";
          shown += a;
        }
        auto v = P.evaluate(env, R);
        Report rep;
        rep.add_eq("evaluate", text + " at {" + shown + "}", R.show(v), R.show(v));
        return rep;
      };
    });
  }

  // ---- biring --------------------------------------------------------------
  auto* biring = app.add_subcommand("biring", "co-ring structure on R<x>");
  biring->require_subcommand(1);
  biring->fallthrough();
  {
    static std::string spec, text;
    static long modulus = 0;
    for (const char* verb : {"coadd", "comul"}) {
      auto* co = biring->add_subcommand(
          verb, std::string(verb) == "coadd" ? "image P(x+y) in the tensor square"
                                             : "image P(x*y) in the tensor square");
      co->fallthrough();
      co->add_option("spec", spec, "base ring spec")->required();
      co->add_option("poly", text, "element of R<x>")->required();
      co->add_option("--modulus", modulus, "reduce modulo x^q - x (0 = free)")
          ->capture_default_str();
      std::string v = verb;
      co->callback([&, v] {
        action = [&, v] {
          twlab::FiniteRing R = twlab::build_ring(spec);
          twlab::Biring B = modulus >= 2 ? twlab::Biring(R, modulus) : twlab::Biring(R);
          twlab::Polynomial P = B.canon(parse_poly(B.coeffs(), text));
          std::string got = v == "coadd" ? B.coadd(P).text() : B.comul(P).text();
          Report rep;
          rep.add_eq(v, P.text() + " over " + R.spec().text(), got, got);
          return rep;
        };
      });
    }
  }
  {
    static std::string spec;
    static long q = 2;
    auto* coideal = biring->add_subcommand("coideal", "is (x^q - x) a coideal?");
    coideal->fallthrough();
    coideal->add_option("spec", spec, "base ring spec")->required();
    coideal->add_option("q", q, "modulus exponent (q >= 2)")->required();
    coideal->callback([&] {
      action = [&] {
        twlab::FiniteRing R = twlab::build_ring(spec);
        auto res = twlab::Biring(R).is_coideal(q);
        Report rep;
        rep.add({"coideal", R.spec().text() + ", q=" + std::to_string(q), "coideal",
                 res.ok ? "coideal" : res.witness->text() + " (" + res.detail + ")", res.ok});
        return rep;
      };
    });
  }
  {
    static std::string spec;
    static long modulus = 0;
    auto* colaws = biring->add_subcommand("colaws", "co-operation bookkeeping laws");
    colaws->fallthrough();
    colaws->add_option("spec", spec, "base ring spec")->required();
    colaws->add_option("--modulus", modulus, "work in R<x>/(x^q - x) (0 = free)")
        ->capture_default_str();
    colaws->callback([&] {
      action = [&] {
        twlab::FiniteRing R = twlab::build_ring(spec);
        twlab::Biring B = modulus >= 2 ? twlab::Biring(R, modulus) : twlab::Biring(R);
        twlab::Polynomial x = twlab::Polynomial::variable(B.coeffs(), "x");
        std::vector<twlab::Polynomial> sample;
        long top = modulus >= 2 && modulus - 1 < 3 ? modulus - 1 : 3;
        for (long e = 0; e <= top; ++e) sample.push_back(B.canon(x.pow(e)));
        sample.push_back(B.canon(x + twlab::Polynomial::constant(B.coeffs(), 1)));
        return B.verify_colaws(sample);
      };
    });
  }

  // ---- lawvere ---------------------------------------------------------------
  auto* lawvere = app.add_subcommand("lawvere", "equational theories and free algebras");
  lawvere->require_subcommand(1);
  lawvere->fallthrough();
  {
    static std::string theory, spec;
    static long gens = 2, depth = 2;
    auto* coop = lawvere->add_subcommand("coop", "verify the co-operation diagram");
    coop->fallthrough();
    coop->add_option("theory", theory, "monoid, abgroup, or commring")->required();
    coop->add_option("spec", spec, "model ring spec")->required();
    coop->add_option("--generators", gens, "number of generators (0..3)")
        ->capture_default_str();
    coop->add_option("--depth", depth, "term depth bound")->capture_default_str();
    coop->callback([&] {
      action = [&] {
        const auto& T = theory_by_name(theory);
        twlab::FiniteRing R = twlab::build_ring(spec);
        twlab::FiniteAlgebra A = model_for(T, R);
        auto S = generator_set(gens);
        Report rep;
        for (const twlab::OpDecl& op : T.operations())
          rep.merge(twlab::verify_coop_property(T, op.symbol, S, A, depth, lawcaps()));
        return rep;
      };
    });
  }
  {
    static std::string theory, spec;
    static long gens = 2;
    auto* agree = lawvere->add_subcommand("homs", "pointwise vs co-operation structure");
    agree->fallthrough();
    agree->add_option("theory", theory, "monoid, abgroup, or commring")->required();
    agree->add_option("spec", spec, "model ring spec")->required();
    agree->add_option("--generators", gens, "number of generators (0..3)")
        ->capture_default_str();
    agree->callback([&] {
      action = [&] {
        const auto& T = theory_by_name(theory);
        twlab::FiniteRing R = twlab::build_ring(spec);
        twlab::FiniteAlgebra A = model_for(T, R);
        return twlab::hom_structures_agree(T, generator_set(gens), A, lawcaps());
      };
    });
  }

  // ---- toy -------------------------------------------------------------------
  auto* toy = app.add_subcommand("toy", "the toy cohomology theory of a finite ring");
  toy->require_subcommand(1);
  toy->fallthrough();
  {
    static std::string spec;
    auto* iso = toy->add_subcommand("iso", "polynomials-to-functions isomorphism check");
    iso->fallthrough();
    iso->add_option("spec", spec, "finite field spec")->required();
    iso->callback([&] {
      action = [&] { return twlab::tw_iso_check(twlab::build_ring(spec), toycaps()); };
    });
  }
  {
    static std::string spec_r, spec_b;
    auto* mu = toy->add_subcommand("mu", "is mu a bijection onto the decompositions?");
    mu->fallthrough();
    mu->add_option("R", spec_r, "index ring spec")->required();
    mu->add_option("B", spec_b, "base ring spec (defaults to R)");
    mu->callback([&] {
      action = [&] {
        twlab::FiniteRing R = twlab::build_ring(spec_r);
        twlab::FiniteRing B = spec_b.empty() ? R : twlab::build_ring(spec_b);
        bool b = twlab::mu_is_bijection(R, B, toycaps());
        Report rep;
        rep.add({"mu-bijection", "R = " + R.spec().text() + ", B = " + B.spec().text(),
                 "bijective", b ? "bijective" : "not bijective", b});
        return rep;
      };
    });
  }
  {
    static std::string spec;
    static long slots = 2;
    auto* dec = toy->add_subcommand("decomps", "enumerate idempotent decompositions");
    dec->fallthrough();
    dec->add_option("spec", spec, "base ring spec")->required();
    dec->add_option("slots", slots, "number of ordered slots")->required();
    dec->callback([&] {
      action = [&] {
        twlab::FiniteRing R = twlab::build_ring(spec);
        twlab::FiniteRingView view(R);
        auto ds = twlab::decompositions(view, slots, toycaps());
        Report rep;
        std::string count = std::to_string(ds.size()) + " decompositions";
        rep.add_eq("decomposition-count",
                   R.spec().text() + ", " + std::to_string(slots) + " slots", count, count);
        if (ds.size() <= 12) {
          std::string listing;
          for (const auto& d : ds) {
            if (!listing.empty()) listing += ' ';
            listing += twlab::show_decomp(view, d);
          }
          rep.add_eq("decompositions", R.spec().text(), listing, listing);
        }
        return rep;
      };
    });
  }
  {
    static std::string spec, text;
    auto* et = toy->add_subcommand("eta", "evaluate a polynomial to its function table");
    et->fallthrough();
    et->add_option("spec", spec, "finite ring spec")->required();
    et->add_option("poly", text, "univariate polynomial")->required();
    et->callback([&] {
      action = [&] {
        twlab::FiniteRing R = twlab::build_ring(spec);
        twlab::Polynomial P = parse_poly(twlab::CoeffRing::of(R), text);
        std::string got = twlab::eta(R, P).text();
        Report rep;
        rep.add_eq("eta", P.text() + " over " + R.spec().text(), got, got);
        return rep;
      };
    });
  }
  {
    static std::string spec;
    auto* ker = toy->add_subcommand("kernel", "is the kernel of eta principal on samples?");
    ker->fallthrough();
    ker->add_option("spec", spec, "finite field spec")->required();
    ker->callback([&] {
      action = [&] {
        twlab::FiniteRing R = twlab::build_ring(spec);
        bool ok = twlab::kernel_is_principal(R, seed);
        Report rep;
        rep.add({"kernel-principal", R.spec().text(), "principal",
                 ok ? "principal" : "not principal", ok});
        return rep;
      };
    });
  }

  // ---- tw --------------------------------------------------------------------
  auto* tw = app.add_subcommand("tw", "Tall-Wraith monoid instances and laws");
  tw->require_subcommand(1);
  tw->fallthrough();
  {
    auto* axioms = tw->add_subcommand("axioms", "run the plethory axiom suite");
    axioms->require_subcommand(1);
    axioms->fallthrough();
    {
      static std::string spec;
      static long modulus = 0;
      auto* p = axioms->add_subcommand("poly", "polynomials under substitution");
      p->fallthrough();
      p->add_option("spec", spec, "base ring spec")->required();
      p->add_option("--modulus", modulus, "work modulo x^q - x (0 = free)")
          ->capture_default_str();
      p->callback([&] {
        action = [&] {
          twlab::FiniteRing R = twlab::build_ring(spec);
          twlab::Biring B = modulus >= 2 ? twlab::Biring(R, modulus) : twlab::Biring(R);
          return twlab::verify_tw_axioms(twlab::TWInstance{twlab::PolyTW(B)}, twcaps());
        };
      });
    }
    {
      static std::string spec;
      auto* f = axioms->add_subcommand("fun", "functions |R| -> |R| under composition");
      f->fallthrough();
      f->add_option("spec", spec, "finite ring spec")->required();
      f->callback([&] {
        action = [&] {
          return twlab::verify_tw_axioms(
              twlab::TWInstance{twlab::FunTW(twlab::build_ring(spec))}, twcaps());
        };
      });
    }
    {
      static long n = 2;
      auto* m = axioms->add_subcommand("mono", "the monoid plethory of a cyclic monoid");
      m->fallthrough();
      m->add_option("n", n, "order of the cyclic monoid")->required();
      m->callback([&] {
        action = [&] {
          return twlab::verify_tw_axioms(
              twlab::TWInstance{twlab::MonoidPlethory(twlab::FiniteMonoid::cyclic(n))},
              twcaps());
        };
      });
    }
  }
  {
    static std::string spec;
    static long q = 2;
    auto* desc = tw->add_subcommand("descent", "does the structure descend to the quotient?");
    desc->fallthrough();
    desc->add_option("spec", spec, "base ring spec")->required();
    desc->add_option("q", q, "modulus exponent (q >= 2)")->required();
    desc->callback([&] {
      action = [&] {
        return twlab::descent_check(
            twlab::PolyTW(twlab::Biring(twlab::build_ring(spec))), q, twcaps());
      };
    });
  }
  {
    static long s1 = 1, s2 = 1;
    static std::string spec;
    static std::vector<std::string> nat;
    auto* curry = tw->add_subcommand("curry", "the currying ring isomorphism");
    curry->fallthrough();
    curry->add_option("s1", s1, "|S1|")->required();
    curry->add_option("s2", s2, "|S2|")->required();
    curry->add_option("spec", spec, "coefficient ring spec")->required();
    curry->add_option("--nat", nat, "naturality target ring specs (repeatable)");
    curry->callback([&] {
      action = [&] {
        twlab::FiniteRing A = twlab::build_ring(spec);
        std::vector<twlab::FiniteRing> roster;
        for (const std::string& s : nat) roster.push_back(twlab::build_ring(s));
        return twlab::currying_iso(s1, s2, A, roster, twcaps());
      };
    });
  }
  {
    static long n = 2;
    auto* cg = tw->add_subcommand("cogroup", "count co-group structures on Z/n");
    cg->fallthrough();
    cg->add_option("n", n, "group order")->required();
    cg->callback([&] {
      action = [&] {
        long count = twlab::cogroup_uniqueness(n, twcaps());
        Report rep;
        rep.add({"cogroup-count", "Z/" + std::to_string(n), "1", std::to_string(count),
                 count == 1});
        return rep;
      };
    });
  }

  // ---- suite -----------------------------------------------------------------
  {
    static std::string config_path;
    auto* suite = app.add_subcommand("suite", "run the full verification matrix");
    suite->fallthrough();
    suite->add_option("config", config_path, "JSON config {roster, seed, jobs}");
    suite->callback([&] {
      action = [&] {
        twlab::SuiteConfig cfg;
        if (!config_path.empty()) {
          std::ifstream in(config_path);
          if (!in)
            throw twlab::error(twlab::errc::usage_error,
                               "cannot read config file " + config_path);
          std::stringstream buf;
          buf << in.rdbuf();
          cfg = twlab::parse_suite_config(buf.str());
        }
        if (app.count("--seed")) cfg.seed = seed;
        if (app.count("--jobs")) cfg.jobs = jobs;
        Report rep;
        for (const twlab::CriterionResult& cr : twlab::run_acceptance(cfg)) {
          rep.add({"criterion", cr.name, "all rows pass",
                   std::to_string(cr.report.passed()) + "/" +
                       std::to_string(cr.report.total()) + " rows pass",
                   cr.report.all_pass()});
          rep.merge(cr.report);
        }
        return rep;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (!action) {
    std::cerr << "twlab: no command selected\n";
    return 2;
  }

  try {
    Report rep = action();
    std::string out = envelope(join_args(argc, argv), seed, rep).dump(2) + "\n";
    if (!json_path.empty()) {
      std::ofstream f(json_path, std::ios::binary);
      if (!f)
        throw twlab::error(twlab::errc::usage_error, "cannot write report to " + json_path);
      f << out;
      std::cerr << "report written to " << json_path << "\n";
    } else {
      std::cout << out;
    }
    for (const Check& c : rep.checks())
      std::cerr << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.got << "\n";
    bool ok = rep.failed() == 0;
    std::cerr << "[twlab] " << rep.passed() << "/" << rep.total() << " cases passed";
    if (expect == "fail") {
      ok = rep.failed() > 0;
      std::cerr << (ok ? "; expected failure confirmed" : "; expected a failure, saw none");
    }
    std::cerr << "\n";
    return ok ? 0 : 1;
  } catch (const twlab::error& e) {
    std::cerr << "twlab: error: " << e.what();
    if (e.offset() >= 0) std::cerr << " (at byte offset " << e.offset() << ")";
    std::cerr << "\n";
    return 2;
  }
}
