#include "twlab/biring.hpp"

namespace twlab {

namespace {
constexpr long kEnumerationCap = 1L << 20;
}

Biring::Biring(FiniteRing base) : base_(std::move(base)), coeffs_(CoeffRing::of(base_)) {}

Biring::Biring(FiniteRing base, long modulus_q)
    : base_(std::move(base)), coeffs_(CoeffRing::of(base_)), q_(modulus_q) {
  if (modulus_q < 2)
    throw error(errc::invalid_modulus_degree,
                "quotient modulus degree must be at least 2, got " + std::to_string(modulus_q));
}

const Polynomial& Biring::check_element(const Polynomial& P) const {
  if (P.coeff_ring() != coeffs_)
    throw error(errc::ring_mismatch, "element is over " + P.coeff_ring().text() +
                                         ", biring base is " + coeffs_.text());
  for (const auto& v : P.variables())
    if (v != "x")
      throw error(errc::foreign_variable, "biring elements are univariate in x, found " + v);
  return P;
}

Polynomial Biring::canon(const Polynomial& P) const { return q_ ? P.reduce_xq(*q_) : P; }

CoPair Biring::coadd(const Polynomial& P) const {
  Polynomial sum = Polynomial::variable(coeffs_, "x") + Polynomial::variable(coeffs_, "y");
  return {canon(canon(check_element(P)).substitute({{"x", sum}}))};
}

CoPair Biring::comul(const Polynomial& P) const {
  Polynomial prod = Polynomial::variable(coeffs_, "x") * Polynomial::variable(coeffs_, "y");
  return {canon(canon(check_element(P)).substitute({{"x", prod}}))};
}

FiniteRing::Elem Biring::counit(const Polynomial& P, FiniteRing::Elem r) const {
  if (r < 0 || r >= base_.size())
    throw error(errc::foreign_element, "counit point " + std::to_string(r) + " is outside the carrier");
  return canon(check_element(P)).evaluate({{"x", r}}, base_);
}

Polynomial Biring::coinverse(const Polynomial& P) const {
  Polynomial neg_x = -Polynomial::variable(coeffs_, "x");
  return canon(canon(check_element(P)).substitute({{"x", neg_x}}));
}

Biring::CoidealResult Biring::is_coideal(long q) const {
  if (q < 2)
    throw error(errc::invalid_modulus_degree,
                "coideal test needs q >= 2, got " + std::to_string(q));
  Polynomial x = Polynomial::variable(coeffs_, "x");
  Polynomial y = Polynomial::variable(coeffs_, "y");
  Polynomial gen = x.pow(q) - x;

  Polynomial add_form = gen.substitute({{"x", x + y}}).reduce_xq(q);
  if (!add_form.is_zero())
    return {false, add_form, "coadd image of x^" + std::to_string(q) +
                                 " - x has nonzero normal form"};
  Polynomial mul_form = gen.substitute({{"x", x * y}}).reduce_xq(q);
  if (!mul_form.is_zero())
    return {false, mul_form, "comul image of x^" + std::to_string(q) +
                                 " - x has nonzero normal form"};
  for (FiniteRing::Elem r = 0; r < base_.size(); ++r) {
    FiniteRing::Elem v = gen.evaluate({{"x", r}}, base_);
    if (v != base_.zero())
      return {false, Polynomial::monomial(coeffs_, Monomial(), v),
              "counit at r = " + base_.show(r) + " is nonzero"};
  }
  return {true, std::nullopt, ""};
}

Report Biring::verify_colaws(const std::vector<Polynomial>& sample) const {
  Report rep;
  const Polynomial X = Polynomial::variable(coeffs_, "x");
  const Polynomial Y = Polynomial::variable(coeffs_, "y");
  const Polynomial Z = Polynomial::variable(coeffs_, "z");
  const Polynomial Zero = Polynomial::zero(coeffs_);
  const Polynomial One = Polynomial::constant(coeffs_, 1);
  const std::map<std::string, std::string> swap_xy = {{"x", "y"}, {"y", "x"}};

  if (q_) {
    CoidealResult res = is_coideal(*q_);
    rep.add({"quotient-coideal", "x^" + std::to_string(*q_) + " - x", "0",
             res.ok ? "0" : res.witness->text() + " (" + res.detail + ")", res.ok});
  }

  for (const Polynomial& sample_elem : sample) {
    Polynomial P = canon(check_element(sample_elem));
    const std::string in = P.text();

    Polynomial W0 = P.substitute({{"x", X + Y}});  // unreduced P(x+y)
    rep.add_eq("coadd-coassoc", in,
               canon(W0.substitute({{"x", X}, {"y", Y + Z}})).text(),
               canon(W0.substitute({{"x", X + Y}, {"y", Z}})).text());

    Polynomial W = coadd(P).value;
    rep.add_eq("coadd-cocomm", in, W.text(), canon(W.rename(swap_xy)).text());
    rep.add_eq("coadd-counit-left", in, P.text(),
               canon(W.substitute({{"x", Zero}, {"y", X}})).text());
    rep.add_eq("coadd-counit-right", in, P.text(),
               canon(W.substitute({{"x", X}, {"y", Zero}})).text());

    Polynomial M0 = P.substitute({{"x", X * Y}});  // unreduced P(x*y)
    rep.add_eq("comul-coassoc", in,
               canon(M0.substitute({{"x", X}, {"y", Y * Z}})).text(),
               canon(M0.substitute({{"x", X * Y}, {"y", Z}})).text());

    Polynomial M = comul(P).value;
    rep.add_eq("comul-cocomm", in, M.text(), canon(M.rename(swap_xy)).text());
    rep.add_eq("comul-counit-left", in, P.text(),
               canon(M.substitute({{"x", One}, {"y", X}})).text());
    rep.add_eq("comul-counit-right", in, P.text(),
               canon(M.substitute({{"x", X}, {"y", One}})).text());

    rep.add_eq("interchange", in,
               canon(M0.substitute({{"x", X + Y}, {"y", Z}})).text(),
               canon(W0.substitute({{"x", X * Z}, {"y", Y * Z}})).text());
  }
  return rep;
}

std::vector<Polynomial> Biring::canonical_elements() const {
  if (!q_)
    throw error(errc::usage_error, "canonical enumeration needs a quotient modulus");
  const long q = *q_;
  const long n = base_.size();
  long total = 1;
  for (long i = 0; i < q; ++i) {
    if (total > kEnumerationCap / n)
      throw error(errc::cap_exceeded, "canonical element count " + std::to_string(n) + "^" +
                                          std::to_string(q) + " exceeds the enumeration cap");
    total *= n;
  }
  std::vector<Polynomial> out;
  out.reserve(total);
  std::vector<FiniteRing::Elem> digits(q, 0);
  for (long k = 0; k < total; ++k) {
    Polynomial p(coeffs_);
    for (long i = 0; i < q; ++i)
      if (digits[i] != 0)
        p = p + Polynomial::monomial(coeffs_, Monomial(std::map<std::string, long>{{"x", i}}),
                                     digits[i]);
    out.push_back(std::move(p));
    for (long i = 0; i < q; ++i) {
      if (++digits[i] < n) break;
      digits[i] = 0;
    }
  }
  return out;
}

}  // namespace twlab
