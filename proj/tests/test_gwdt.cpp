#include <doctest.h>

#include "lagcorr/error.hpp"
#include "lagcorr/gwdt.hpp"
#include "lagcorr/sampling.hpp"
#include "oracles.hpp"

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

const GaussianRational I = GaussianRational::i();

QLaurent x(long k) { return QLaurent::monomial(1, k); }

bool all_real(const QLaurent& f) {
  for (const auto& [e, c] : f.terms()) {
    if (!c.is_real()) return false;
  }
  return true;
}

bool all_imaginary(const QLaurent& f) {
  for (const auto& [e, c] : f.terms()) {
    if (!c.is_imaginary()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("q_integer examples") {
  CHECK(quantum_integer_laurent(1) == -x(1) - x(-1));
  CHECK(quantum_integer_laurent(2) == I * x(2) - I * x(-2));
  CHECK(quantum_integer_laurent(0).is_zero());
  CHECK(quantum_integer_laurent(-3) == -quantum_integer_laurent(3));
  const QInteger two = q_integer(2, 6);
  CHECK(two.hbar.to_string() == "2*h - 1/3*h^3 + 1/60*h^5 + O(h^7)");
  CHECK(q_integer(1, 3).hbar.coefficient(1) == GaussianRational(1));
}

TEST_CASE("substitution identity against the sine Taylor series") {
  for (long n = 1; n <= 12; ++n) {
    const QInteger q = q_integer(n, 20);
    const HSeries direct = q_substitute_hbar(q.laurent, 20);
    CHECK(direct == q.hbar);
    CHECK(direct == sine_series(n, 20));
    const auto expected = oracle::sine_taylor(n, 20);
    for (long k = 0; k <= 20; ++k) {
      const auto it = expected.find(k);
      const GaussianRational want(it == expected.end() ? mpq_class(0) : it->second);
      CHECK(direct.coefficient(k) == want);
    }
  }
}

TEST_CASE("vertex_invariant") {
  const LabeledInvariant a = vertex_invariant({1, 0}, {0, 1});
  CHECK(a.n == 1);
  CHECK(a.label == "V");
  CHECK(a.value == quantum_integer_laurent(1));
  CHECK(a.p == ContactData::indicator({{1, 0}, {0, 1}, {-1, -1}}));
  const LabeledInvariant b = vertex_invariant({1, 1}, {1, -1});
  CHECK(b.n == 2);
  CHECK(b.p.multiplicity({-2, 0}) == 1);
  CHECK(phase_exponent(b.p) == 1);
  CHECK(code_of([] { vertex_invariant({1, 2}, {2, 4}); }) == ErrorCode::DegeneratePair);
}

TEST_CASE("parity of the vertex invariant") {
  sampling::Rng rng(31);
  int counted[2] = {0, 0};
  for (int t = 0; t < 400; ++t) {
    const IntVector v1 = sampling::nonzero_vector(rng, 2, 4);
    const IntVector v2 = sampling::nonzero_vector(rng, 2, 4);
    if (wedge(v1, v2) == 0) continue;
    const LabeledInvariant inv = vertex_invariant(v1, v2);
    if (inv.n > 10) continue;
    ++counted[inv.n % 2];
    // Unadjusted: real for odd n, imaginary for even n.
    if (inv.n % 2 == 1) {
      CHECK(all_real(inv.value));
    } else {
      CHECK(all_imaginary(inv.value));
    }
    // The phase makes every vertex real.
    CHECK(all_real(phase(inv.p) * inv.value));
  }
  CHECK(counted[0] > 10);
  CHECK(counted[1] > 10);
}

TEST_CASE("wall invariant") {
  const WallInvariant w1 = wall_invariant(1, 9);
  CHECK(w1.series.terms == -x(1) + x(3) - x(5) + x(7) - x(9));
  CHECK(w1.label == "z3=0");
  CHECK(w1.p == ContactData({{IntVector{1, 0}, 1}, {IntVector{-1, 0}, 1}}));
  CHECK(w1.closed_form == QRational(-x(1), QLaurent(1) + x(2)));

  const WallInvariant w2 = wall_invariant(2, 10);
  CHECK(w2.series.terms == -I * x(2) - I * x(6) - I * x(10));

  for (long n = 1; n <= 5; ++n) {
    const WallInvariant w = wall_invariant(n, 59 * n);
    CHECK(w.series.terms.terms().size() == 30);
    CHECK(w.closed_form.expand(59 * n).terms == w.series.terms);
    // closed form times [n]_q is (-1)^{n+1}
    const GaussianRational sign(n % 2 == 1 ? 1 : -1);
    CHECK(QRational(w.closed_form.numerator() * quantum_integer_laurent(n), w.closed_form.denominator()) ==
          QRational(QLaurent(sign)));
  }
}

TEST_CASE("wall reconstruction from few terms") {
  for (long n = 1; n <= 5; ++n) {
    // 3n+4 nonzero terms.
    const WallInvariant w = wall_invariant(n, n + 2 * n * (3 * n + 3));
    CHECK(static_cast<long>(w.series.terms.terms().size()) == 3 * n + 4);
    const auto r = rational_reconstruct(w.series, 2 * n);
    REQUIRE(r);
    CHECK(*r == w.closed_form);
  }
}

TEST_CASE("multicover") {
  const MulticoverSeries one = multicover_series(1, 4, 4);
  CHECK(one.hbar.coefficient(-2) == GaussianRational(1));
  CHECK(one.hbar.coefficient(0) == GaussianRational(mpq_class(1, 12)));
  CHECK(one.hbar.coefficient(2) == GaussianRational(mpq_class(1, 240)));
  CHECK(one.hbar.order() == 4);

  const MulticoverSeries two = multicover_series(2, 6, 4);
  CHECK(two.sign == -1);
  for (long k = 1; k <= 4; ++k) {
    CHECK(two.q_series.coefficient(4 * k) == GaussianRational(mpq_class(-k, 2)));
    CHECK(two.q_series.coefficient(4 * k - 2).is_zero());
  }
  CHECK(two.hbar.coefficient(-2) == GaussianRational(mpq_class(1, 8)));
  // The hbar side is the substitution of the closed form.
  const HSeries qd = q_substitute_hbar(quantum_integer_laurent(2), 12);
  CHECK((qd * qd * two.hbar * GaussianRational(2)).agrees_with(HSeries(GaussianRational(1), 6), 6));

  // (1 - q^2)^2 in the denominator: degree 8 in q^{1/2}.
  const MulticoverSeries longer = multicover_series(2, 6, 6);
  const IntegralityReport r = integrality_check(longer.q_series, ContactData(), 8);
  CHECK(r.rational);
  CHECK_FALSE(r.gaussian_integral);
  REQUIRE(r.reconstruction);
  CHECK(*r.reconstruction == two.closed_form);
}

TEST_CASE("integrality_check") {
  const WallInvariant w = wall_invariant(1, 20);
  const IntegralityReport r = integrality_check(w.series, w.p, 3);
  CHECK(r.phase_exponent == 0);
  CHECK(r.rational);
  CHECK(r.symmetric);
  CHECK(r.gaussian_integral);
  CHECK_FALSE(r.literal_symmetric);

  for (long n = 1; n <= 6; ++n) {
    const LabeledInvariant v = vertex_invariant({1, 0}, {0, n});
    const IntegralityReport q = integrality_check(QSeries{v.value, v.value.max_exponent(), true}, v.p, 2);
    CHECK(q.rational);
    CHECK(q.symmetric);
    CHECK(q.gaussian_integral);
  }

  QLaurent e;
  mpq_class c = 1;
  for (long k = 0; k < 12; ++k) {
    if (k > 0) c /= k;
    e += QLaurent::monomial(GaussianRational(c), 2 * k);
  }
  const IntegralityReport bad = integrality_check(QSeries{e, 22, false}, ContactData(), 4);
  CHECK_FALSE(bad.rational);
  CHECK_FALSE(bad.gaussian_integral);
  CHECK(code_of([&] { integrality_check(QSeries{e, 4, false}, ContactData(), 4); }) ==
        ErrorCode::InsufficientTerms);
}

TEST_CASE("phases") {
  CHECK(phase(ContactData({{IntVector{3, 0}, 1}})) == GaussianRational(-1));
  CHECK(phase(ContactData({{IntVector{2, 0}, 1}})) == I);
  CHECK(phase(ContactData({{IntVector{2, 2}, 3}})) == -I);
  CHECK(phase(ContactData({{IntVector{1, 0}, 5}})) == GaussianRational(1));
  CHECK(phase_exponent(ContactData({{IntVector{2, 0}, 2}, {IntVector{0, 3}, 1}})) == 4);
}

TEST_CASE("l_transform") {
  const CurveClass beta({{IntVector{1, 0}, 1}});
  const ContactData p3({{IntVector{3, 0}, 1}});
  const ContactData p1({{IntVector{1, 0}, 1}});
  PtSide pt;
  pt[beta]["V"] = quantum_integer_laurent(1);
  const PairingTable table{{p3, "V", "A", GaussianRational(2)}, {p1, "V", "B", GaussianRational(1)}};
  const GwSide gw = l_transform(pt, table);
  CHECK(gw.size() == 2);
  CHECK(gw.at(GwKey{beta, p3}).at("A") == quantum_integer_laurent(1) * GaussianRational(-2));
  CHECK(gw.at(GwKey{beta, p1}).at("B") == quantum_integer_laurent(1));

  const auto h = substitute_hbar(gw, 5);
  CHECK(h.at(GwKey{beta, p1}).at("B") == sine_series(1, 5));

  PtSide missing;
  missing[beta]["W"] = QLaurent(1);
  CHECK(code_of([&] { l_transform(missing, table); }) == ErrorCode::MissingPairing);

  // Cancelling contributions disappear.
  const PairingTable cancel{{p1, "V", "B", GaussianRational(1)}, {p1, "V", "B", GaussianRational(-1)}};
  CHECK(l_transform(pt, cancel).empty());
}

TEST_CASE("sine bracket examples") {
  const IntVector n{1, 2};
  const auto W = [&](IntVector v) { return SineGenerator::wall(std::move(v), "l", n); };
  const SineCombination ab = sine_bracket(W({1, 0}), W({0, 1}));
  CHECK(ab.size() == 1);
  CHECK(ab.at(W({1, 1})) == quantum_integer_laurent(1));

  const SineCombination opposite = sine_bracket(W({2, 1}), W({-2, -1}));
  CHECK(opposite.size() == 1);
  CHECK(opposite.at(SineGenerator::central_element()) == QLaurent(GaussianRational(wedge(n, {2, 1}))));

  CHECK(sine_bracket(W({1, 1}), W({2, 2})).empty());
  CHECK(sine_bracket(W({1, 0}), SineGenerator::central_element()).empty());
  CHECK(code_of([&] { sine_bracket(W({1, 0}), SineGenerator::wall({0, 1}, "m", n)); }) == ErrorCode::LevelMismatch);
  CHECK(code_of([] { SineGenerator::wall({1, 0, 0}, "l", {0, 0, 0}); }) == ErrorCode::ObjectMismatch);
}

TEST_CASE("sine bracket is a Lie bracket") {
  sampling::Rng rng(77);
  const IntVector n{1, -1};
  for (int t = 0; t < 150; ++t) {
    const SineGenerator a = sampling::sine_generator(rng, 3, n);
    const SineGenerator b = sampling::sine_generator(rng, 3, n);
    const SineGenerator c = sampling::sine_generator(rng, 3, n);
    SineCombination sum = sine_bracket(a, b);
    accumulate(sum, sine_bracket(b, a));
    CHECK(sum.empty());

    const SineCombination A{{a, QLaurent(1)}}, B{{b, QLaurent(1)}}, C{{c, QLaurent(1)}};
    SineCombination jacobi = sine_bracket(A, sine_bracket(B, C));
    accumulate(jacobi, sine_bracket(B, sine_bracket(C, A)));
    accumulate(jacobi, sine_bracket(C, sine_bracket(A, B)));
    CHECK_MESSAGE(jacobi.empty(), to_string(jacobi));
  }
}
