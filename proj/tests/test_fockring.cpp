#include <doctest.h>

#include "fock_oracle.hpp"
#include "lagcorr/error.hpp"
#include "lagcorr/fockring.hpp"
#include "lagcorr/sampling.hpp"

using namespace lagcorr;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Parse;
}

const IntVector v{1, 0};
const IntVector w{0, 1};

CurveClass energy(long e) { return CurveClass({}, mpq_class(e)); }

HSeries constant(long c, const FockElement& x, const CurveClass& beta) {
  return HSeries(GaussianRational(c), x.term_order(beta));
}

FockElement single(const CurveClass& beta, const ContactData& p, const std::string& label, long c,
                   long cutoff = 4, long order = 4) {
  FockElement out(cutoff, order);
  out.add(beta, p, {label}, constant(c, out, beta));
  return out;
}

}  // namespace

TEST_CASE("products") {
  const FockElement x = single(energy(1), ContactData({{v, 1}}), "A", 3);
  CHECK(fock_mul(FockElement::unit(4, 4), x) == x);
  CHECK(fock_mul(x, FockElement::unit(4, 4)) == x);

  // p = q = {v:1}: factor C(2,1) = 2.
  const FockElement sq = fock_mul(x, x);
  const FockKey key{energy(2), ContactData({{v, 2}}), {"A", "A"}};
  CHECK(sq.terms().size() == 1);
  CHECK(sq.coefficient(key) == constant(18, sq, key.beta));

  // Disjoint supports: factor 1.
  const FockElement y = single(energy(1), ContactData({{w, 1}}), "B", 5);
  const FockElement xy = fock_mul(x, y);
  CHECK(xy.coefficient({energy(2), ContactData({{v, 1}, {w, 1}}), {"A", "B"}}) == constant(15, xy, energy(2)));
  CHECK(symmetrization_factor(ContactData({{v, 1}}), ContactData({{w, 1}})) == 1);
  CHECK(symmetrization_factor(ContactData({{v, 2}}), ContactData({{v, 1}})) == 3);

  // Above the cutoff.
  const FockElement big = single(energy(3), ContactData(), "A", 1);
  CHECK(fock_mul(big, big).is_zero());
}

TEST_CASE("symmetrization factor equals the orbit sum") {
  const IntVector u{1, 1};
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      for (int c = 0; c <= 2; ++c) {
        ContactData::Support sp, sq;
        if (a) sp[v] = a;
        if (b) sq[v] = b;
        if (c) sq[u] = c;
        if (c && a) sp[u] = 1;
        const ContactData p(sp), q(sq);
        CHECK(symmetrization_factor(p, q) == symmetrization_orbit_sum(p, q));
      }
    }
  }
}

TEST_CASE("ring laws on random elements") {
  sampling::Rng rng(21);
  for (int t = 0; t < 30; ++t) {
    const FockElement a = sampling::eta(rng, 4, 4, 3);
    const FockElement b = sampling::eta(rng, 4, 4, 3);
    const FockElement c = sampling::eta(rng, 4, 4, 3);
    CHECK(fock_mul(a, b) == fock_mul(b, a));
    CHECK(fock_mul(fock_mul(a, b), c) == fock_mul(a, fock_mul(b, c)));
    CHECK(fock_mul(a, b + c) == fock_mul(a, b) + fock_mul(a, c));
    CHECK(fock_exp(a + b) == fock_mul(fock_exp(a), fock_exp(b)));
  }
}

TEST_CASE("exp of a single term") {
  // Cutoff below 2E: exp(x) = 1 + x.
  const FockElement x = single(energy(2), ContactData({{v, 1}}), "A", 7, 3, 4);
  CHECK(fock_exp(x) == FockElement::unit(3, 4) + x);
  CHECK(fock_log(FockElement::unit(3, 4) + x) == x);
}

TEST_CASE("log inverts exp") {
  sampling::Rng rng(8);
  for (int t = 0; t < 40; ++t) {
    const FockElement eta = sampling::eta(rng, 5, 6, 4);
    CHECK(fock_log(fock_exp(eta)) == eta);
  }
}

TEST_CASE("exp agrees with the exponential formula") {
  sampling::Rng rng(13);
  for (int t = 0; t < 25; ++t) {
    const FockElement eta = sampling::eta(rng, 4, 4, 3, true);
    const FockElement z = fock_exp(eta);
    const auto keys = oracle::reachable_keys(eta, 6);
    for (const auto& [key, c] : z.terms()) {
      if (size(key.p) <= 6) CHECK(keys.count(key) == 1);
    }
    for (const auto& key : keys) {
      const HSeries expected = oracle::exp_coefficient(eta, key);
      CHECK_MESSAGE(z.coefficient(key).agrees_with(expected, z.term_order(key.beta)), key.to_string());
    }
  }
}

TEST_CASE("errors") {
  FockElement bad(3, 4);
  bad.add(FockKey{}, HSeries(GaussianRational(2), 10));
  CHECK(code_of([&] { fock_exp(bad); }) == ErrorCode::ConstantTermInExp);
  CHECK(code_of([&] { fock_log(bad); }) == ErrorCode::NonUnitalLog);
  CHECK(code_of([] { fock_log(FockElement(3, 4)); }) == ErrorCode::NonUnitalLog);
  CHECK(code_of([] { fock_mul(FockElement(3, 4), FockElement(3, 5)); }) == ErrorCode::CutoffMismatch);
  CHECK(code_of([] { FockElement(3, 4) + FockElement(2, 4); }) == ErrorCode::CutoffMismatch);

  FockElement x(3, 4);
  CHECK(code_of([&] { x.add(energy(1), ContactData(), {"A"}, HSeries::monomial(GaussianRational(1), -3, 8)); }) ==
        ErrorCode::ValuationBound);
  CHECK(code_of([&] { x.add(CurveClass(), ContactData({{v, 1}}), {}, HSeries(GaussianRational(1), 4)); }) ==
        ErrorCode::InvalidCurveClass);
  // Above the cutoff: silently dropped.
  x.add(energy(4), ContactData(), {"A"}, HSeries(GaussianRational(1), 4));
  CHECK(x.is_zero());
}

TEST_CASE("truncation bookkeeping") {
  const FockElement x(2, 3);
  CHECK(x.term_order(CurveClass()) == 7);
  CHECK(x.term_order(energy(1)) == 5);
  CHECK(x.term_order(energy(2)) == 3);
  const FockElement half(mpq_class(5, 2), 3);
  CHECK(half.term_order(energy(1)) == 6);
}

TEST_CASE("assemble_eta") {
  const IntVector a{1, 0}, b{0, 1}, c{-1, -1};
  const CurveClass beta({{a, 1}, {b, 1}, {c, 1}});
  const ContactData p = ContactData::indicator({a, b, c});
  const FockElement eta =
      assemble_eta({{0, beta, p, "V", GaussianRational(5)}, {1, energy(1), ContactData(), "W", GaussianRational(2)}},
                   4, 4);
  const FockKey k1{beta, p, {"V"}};
  CHECK(eta.coefficient(k1) == HSeries::monomial(GaussianRational(5), 1, eta.term_order(beta)));
  const FockKey k2{energy(1), ContactData(), {"W"}};
  CHECK(eta.coefficient(k2) == HSeries(GaussianRational(2), eta.term_order(energy(1))));

  const IntVector two{2, 0};
  const CurveClass beta2({{a, 1}});
  const FockElement doubled = assemble_eta({{0, beta2, ContactData({{two, 1}}), "X", GaussianRational(1)}}, 4, 4);
  CHECK(doubled.coefficient({beta2, ContactData({{two, 1}}), {"X"}}) ==
        HSeries::monomial(GaussianRational(2), -1, doubled.term_order(beta2)));

  CHECK(code_of([&] { assemble_eta({{0, beta2, ContactData({{b, 1}}), "X", GaussianRational(1)}}, 4, 4); }) ==
        ErrorCode::IncompatibleContact);
  CHECK(code_of([&] { assemble_eta({{0, CurveClass(), ContactData(), "X", GaussianRational(1)}}, 4, 4); }) ==
        ErrorCode::InvalidCurveClass);
}
