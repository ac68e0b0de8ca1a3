// Copyright 2026 The hgalg Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "hgalg/envelope.hpp"
#include "hgalg/errors.hpp"
#include "support/algebras.hpp"

using namespace hgalg;
using namespace hgalg::testing;

namespace {

PoissonStructure xy_bracket(const PresentationPtr& t) {
  return PoissonStructure(t, {{{L(t, "x"), L(t, "y")}, E(t, {"x"})}}, "xy");
}

PoissonHopfGaloisStructure z2_phg(const PresentationPtr& c) {
  return PoissonHopfGaloisStructure{PoissonStructure(c, {}), grouplike_hg(c, "g")};
}

}  // namespace

TEST_CASE("envelope of the zero-bracket group algebra of Z/2") {
  auto c = cyclic(2);
  const Envelope u = Envelope::build(PoissonStructure(c, {}));
  REQUIRE(u.size() == 2);
  CHECK(u.cap() == kEnvelopeCap);
  CHECK(u.confluence().confluent());
  CHECK(u.side_relation_rank() > 0);
  const Word g = W(c, {"g"});
  CHECK(u.beta(g).is_zero());
  CHECK(u.beta(Word{}).is_zero());
  CHECK(u.alpha(g) * u.alpha(g) == Element::one(u.algebra()));
  CHECK(!u.alpha(g).is_zero());
  const Report r = check_envelope_relations(u);
  CHECK(r.passed());
  CHECK(r.entries().size() == 1 + 4 * 12);

  // xi(g ⊗ g ⊗ g) vanishes since every term carries beta(g).
  const TensorSpace s3 = alternating_space(c, 3);
  CHECK(xi(u, T(s3, q(1), {{"g"}, {"g"}, {"g"}})).is_zero());
  CHECK(alpha3(u, T(s3, q(1), {{"g"}, {"g"}, {"g"}})) ==
        Tensor::pure(triple_space(u), {u.alpha(g).terms(), u.alpha(g).terms(), u.alpha(g).terms()}, q(1)));
}

TEST_CASE("envelope of the ground field") {
  PresentationOptions o;
  o.name = "k";
  auto k = Presentation::create(o);
  const Envelope u = Envelope::build(PoissonStructure(k, {}));
  CHECK(u.size() == 1);
  CHECK(u.algebra()->basis().has_value());
  CHECK(u.algebra()->basis()->size() == 1);
  CHECK(u.beta(Word{}).is_zero());
  CHECK(check_envelope_relations(u).passed());
}

TEST_CASE("envelope rules on truncated k[x,y] with {x,y} = x") {
  auto t = truncated_xy();
  const Envelope u = Envelope::build(xy_bracket(t), 4);
  const auto& alphabet = u.algebra()->alphabet();
  const Word lhs = alphabet.parse({"beta(x)", "alpha(y)"});
  bool found = false;
  for (const Rule& r : u.algebra()->rules()) {
    if (r.lhs != lhs) continue;
    found = true;
    CHECK(r.rhs == terms({{alphabet.parse({"alpha(y)", "beta(x)"}), q(1)}, {alphabet.parse({"alpha(x)"}), q(1)}}));
  }
  CHECK(found);
  CHECK(u.confluence().confluent());
  CHECK(check_envelope_relations(u).passed());

  // [beta(x), beta(y)] = beta({x, y}) = beta(x).
  const Element bx = u.beta(W(t, {"x"})), by = u.beta(W(t, {"y"}));
  CHECK(bx * by - by * bx == bx);
  CHECK(!by.is_zero());
  CHECK(!(bx * by).is_zero());
  // beta(x^2) = 2 alpha(x) beta(x).
  CHECK(u.beta(W(t, {"x^2"})) == (u.alpha(W(t, {"x"})) * bx).scaled(q(2)));
  CHECK_THROWS_AS(u.index_of(W(t, {"x^3"})), InputError);
}

TEST_CASE("triple laws on truncated k[x,y]") {
  auto t = truncated_xy();
  const Envelope u = Envelope::build(xy_bracket(t), 4);
  const TensorSpace s3 = alternating_space(t, 3);
  const TensorSpace u3 = triple_space(u);
  const Element bx = u.beta(W(t, {"x"}));
  const Element one = Element::one(u.algebra());

  // xi({x⊗1⊗1, y⊗1⊗1}) = beta(x)⊗1⊗1.
  const Tensor br = triple_bracket(u.source(), T(s3, q(1), {{"x"}, {}, {}}), T(s3, q(1), {{"y"}, {}, {}}));
  CHECK(xi(u, br) == Tensor::pure(u3, {bx.terms(), one.terms(), one.terms()}, q(1)));
  // Middle slot: the bracket picks up a sign.
  const Tensor mid = triple_bracket(u.source(), T(s3, q(1), {{}, {"x"}, {}}), T(s3, q(1), {{}, {"y"}, {}}));
  CHECK(xi(u, mid) == Tensor::pure(u3, {one.terms(), bx.terms(), one.terms()}, q(-1)));

  const std::vector<Word> gens{Word{}, W(t, {"x"}), W(t, {"y"})};
  const auto sample = word_triples(gens);
  CHECK(sample.size() == 27);
  const Report r = check_lemma55(u, sample);
  CHECK(r.entries().size() == 4 * 729);
  CHECK(r.passed());
}

TEST_CASE("induced maps") {
  auto t = truncated_xy();
  const PoissonStructure p = xy_bracket(t);
  const Envelope u = Envelope::build(p, 4);
  const GeneratorMap id = induced_map(GeneratorMap::identity(t), u, u);
  for (Letter l : u.algebra()->alphabet().letters()) CHECK(id.apply(Word{l}).as_element() == Element::word(u.algebra(), Word{l}));

  // k[x,y]/(x,y)^3 -> k[x]/(x^3), y -> 0, with zero bracket downstairs.
  PresentationOptions o;
  o.name = "k[x]/(x^3)";
  o.generators = {{"x", false}};
  o.rules = {{Word(3, make_letter(0, false)), {}, {}}};
  auto kx = Presentation::create(o);
  // {x, y} = x forces x to map to 0 when y does; use the quotient by x and y's bracket image.
  const PoissonStructure zero(kx, {});
  const Envelope ub = Envelope::build(zero, 4);
  const TensorSpace s1{Factor{kx, false}};
  const GeneratorMap kill_y(t, s1, {{L(t, "x"), Tensor(s1, kx->field())}, {L(t, "y"), T(s1, q(1), {{"x"}})}}, "phi");
  const GeneratorMap uphi = induced_map(kill_y, u, ub);
  CHECK(uphi.apply(u.beta(W(t, {"y"}))).as_element() == ub.beta(W(kx, {"x"})));
  CHECK(uphi.apply(u.alpha(W(t, {"x"}))).is_zero());

  // Swapping x and y is an algebra map but reverses the bracket.
  const TensorSpace st{Factor{t, false}};
  const GeneratorMap swap(t, st, {{L(t, "x"), T(st, q(1), {{"y"}})}, {L(t, "y"), T(st, q(1), {{"x"}})}}, "swap");
  CHECK_THROWS_AS(induced_map(swap, u, u), InputError);
}

TEST_CASE("Hopf-Galois criterion for envelopes") {
  auto c = cyclic(2);
  const auto ph = z2_phg(c);
  const Envelope u = Envelope::build(ph.poisson);
  const Report r = check_thm59(ph, u);
  CHECK(r.passed());
  std::size_t holds = 0;
  for (const auto& e : r.entries()) {
    if (e.check == "condition (5.17)") {
      CHECK(e.detail == "condition (5.17) holds");
      ++holds;
    }
  }
  CHECK(holds == 2);
  CHECK(r.entries().back().detail == "U(A) is Hopf-Galois");

  auto t = truncated_xy();
  const PoissonHopfStructure phs{xy_bracket(t), truncated_primitive_hopf(t)};
  const auto tphg = PoissonHopfGaloisStructure{phs.poisson, hopf_to_galois(phs.hopf)};
  const Envelope ut = Envelope::build(phs.poisson, 4);
  const Report rt = check_thm59(tphg, ut);
  std::size_t verdicts = 0;
  for (const auto& e : rt.entries())
    if (e.check == "condition (5.17)") ++verdicts;
  CHECK(verdicts == 6);
  CHECK(rt.entries().back().check == "Hopf-Galois verdict");
}
