#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "qlogic/presheaf.hpp"
#include "support.hpp"

using namespace qlogic;

namespace {

std::vector<QuantumEventAlgebra> targets() {
  return {qtest::boolean(1), qtest::boolean(2), qtest::boolean(3), qtest::mo2(), qtest::mo3()};
}

}  // namespace

TEST_CASE("quantum homs agree with brute force") {
  std::vector<QuantumEventAlgebra> sources{qtest::boolean(1), qtest::boolean(2), qtest::boolean(3), qtest::mo2(),
                                           qtest::mo3()};
  for (const auto& s : sources)
    for (const auto& t : targets()) {
      CAPTURE(s.label());
      CAPTURE(t.label());
      const bool full = std::pow(static_cast<double>(t.size()), static_cast<double>(s.size())) <= 2e6;
      auto expected = qtest::brute_force_homs(s, t, full);
      std::sort(expected.begin(), expected.end());
      const auto got = enumerate_quantum_homs(s, t);
      CHECK(qtest::maps_of(got) == expected);
      for (const auto& h : got) CHECK(is_quantum_hom(s, t, h));
    }
}

TEST_CASE("hom counts from the examples") {
  for (const auto& t : targets()) CHECK(enumerate_quantum_homs(qtest::boolean(1), t).size() == 1);
  CHECK(enumerate_quantum_homs(qtest::boolean(2), qtest::mo2()).size() == 6);
  CHECK(enumerate_quantum_homs(qtest::boolean(2), qtest::boolean(2)).size() == 4);
}

TEST_CASE("from a Boolean source, injective quantum homs are those with trivial kernel") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& t : targets())
      for (const auto& h : enumerate_quantum_homs(qtest::boolean(n), t))
        CHECK(h.injective() == kernel_trivial(qtest::boolean(n), t, h));
}

TEST_CASE("from MO2, a trivial kernel does not force injectivity") {
  const auto l = qtest::mo2();
  const auto four = qtest::boolean(2);
  std::size_t witnesses = 0;
  for (const auto& h : enumerate_quantum_homs(l, four)) {
    if (h.injective()) CHECK(kernel_trivial(l, four, h));
    if (kernel_trivial(l, four, h) && !h.injective()) ++witnesses;
  }
  // a and b both go to one atom, or to different atoms: 2 x 2 maps.
  CHECK(witnesses == 4);
}

TEST_CASE("the hom search respects its size bound") {
  HomSearchLimits tight;
  tight.max_source = 4;
  try {
    enumerate_quantum_homs(qtest::boolean(3), qtest::mo2(), tight);
    FAIL("expected SizeBound");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SizeBound);
  }
}

TEST_CASE("base categories") {
  const auto full = full_base(2);
  CHECK(full->object_count() == 2);
  // 1 + 1 + 2 + 4 homs among 2 and 2^2.
  CHECK(full->arrow_count() == 8);
  const auto inj = injective_base(2);
  CHECK(inj->arrow_count() == 3);
  for (int a = 0; a < static_cast<int>(full->arrow_count()); ++a)
    for (int b = 0; b < static_cast<int>(full->arrow_count()); ++b) {
      const auto& f = full->arrow(a);
      const auto& g = full->arrow(b);
      if (g.source != f.target) continue;
      const auto c = full->compose(b, a);
      REQUIRE(c.has_value());
      CHECK(full->arrow(*c).hom == compose(g.hom, f.hom));
    }
}

TEST_CASE("the frames functor") {
  const auto base = full_base(2);
  const auto l = qtest::mo2();
  const auto r = frames_functor(l, base);
  CHECK_FALSE(r.presheaf.functoriality_violation().has_value());
  const int two = *base->find_object(1), four = *base->find_object(2);
  CHECK(r.homs[two].size() == 1);
  CHECK(r.homs[four].size() == 6);

  SUBCASE("restriction along an identity is the identity") {
    for (int o = 0; o < static_cast<int>(base->object_count()); ++o)
      for (int p = 0; p < static_cast<int>(r.presheaf.size(o)); ++p) CHECK(r.presheaf.restrict(base->identity(o), p) == p);
  }
  SUBCASE("restriction is precomposition") {
    for (int a = 0; a < static_cast<int>(base->arrow_count()); ++a) {
      const auto& x = base->arrow(a);
      for (int p = 0; p < static_cast<int>(r.homs[x.target].size()); ++p) {
        const auto v = compose(r.homs[x.target][p], modeling_arrow(x.hom));
        CHECK(r.homs[x.source][r.presheaf.restrict(a, p)] == v);
      }
    }
  }
  SUBCASE("along 2 -> 2^2 all six frames restrict to the single frame of 2") {
    for (int a : base->arrows_between(two, four))
      for (int p = 0; p < 6; ++p) CHECK(r.presheaf.restrict(a, p) == 0);
  }
}

TEST_CASE("representable presheaves") {
  const auto base = full_base(2);
  const int two = *base->find_object(1), four = *base->find_object(2);
  const auto y2 = yoneda_presheaf(base, two);
  CHECK(y2.presheaf.size(two) == 1);
  const auto y4 = yoneda_presheaf(base, four);
  CHECK(y4.presheaf.size(four) == 4);
  CHECK_FALSE(y4.presheaf.functoriality_violation().has_value());

  SUBCASE("Yoneda: Nat(y[B], P) has |P(B)| elements") {
    for (const auto& l : {qtest::boolean(1), qtest::boolean(2), qtest::mo2()}) {
      const auto r = frames_functor(l, base);
      for (int o : {two, four}) {
        const auto nats = enumerate_natural_transformations(yoneda_presheaf(base, o).presheaf, r.presheaf);
        CHECK(nats.size() == r.presheaf.size(o));
        for (const auto& phi : nats) CHECK(is_natural(yoneda_presheaf(base, o).presheaf, r.presheaf, phi));
      }
    }
    CHECK(enumerate_natural_transformations(y4.presheaf, frames_functor(qtest::mo2(), base).presheaf).size() == 6);
  }
}

TEST_CASE("naturality squares commute for every enumerated transformation") {
  const auto base = full_base(2);
  const auto p = frames_functor(qtest::boolean(2), base).presheaf;
  const auto q = frames_functor(qtest::mo2(), base).presheaf;
  const auto nats = enumerate_natural_transformations(p, q);
  CHECK_FALSE(nats.empty());
  for (const auto& phi : nats) {
    CHECK(is_natural(p, q, phi));
    for (int a = 0; a < static_cast<int>(base->arrow_count()); ++a) {
      const auto& x = base->arrow(a);
      for (int e = 0; e < static_cast<int>(p.size(x.target)); ++e)
        CHECK(phi[x.source][p.restrict(a, e)] == q.restrict(a, phi[x.target][e]));
    }
  }
}

TEST_CASE("categories of elements") {
  SUBCASE("a constant singleton over one object") {
    const auto base = full_base(1);
    const auto e = category_of_elements(constant_presheaf(base, 1));
    CHECK(e.objects.size() == 1);
    CHECK(e.arrows.size() == 1);
  }
  SUBCASE("frames of MO2 over 2 and 2^2 with the inclusion") {
    const auto base = injective_base(2);
    const auto r = frames_functor(qtest::mo2(), base);
    const auto e = category_of_elements(r.presheaf);
    CHECK(e.objects.size() == 7);
    const int two = *base->find_object(1);
    int into_two = 0;
    for (const auto& a : e.arrows)
      if (base->arrow(a.arrow).source != base->arrow(a.arrow).target && e.objects[a.source].object == two) ++into_two;
    CHECK(into_two == 6);
    CHECK(e.arrows.size() == 7 + 6);
  }
  SUBCASE("an arrow exists exactly when p . u = p'") {
    const auto base = full_base(2);
    const auto r = frames_functor(qtest::mo2(), base);
    const auto e = category_of_elements(r.presheaf);
    for (int u = 0; u < static_cast<int>(base->arrow_count()); ++u) {
      const auto& x = base->arrow(u);
      for (int p = 0; p < static_cast<int>(r.presheaf.size(x.target)); ++p)
        for (int q = 0; q < static_cast<int>(r.presheaf.size(x.source)); ++q) {
          const bool listed = std::any_of(e.arrows.begin(), e.arrows.end(), [&](const ElementArrow& a) {
            return a.arrow == u && a.source == e.index_of(x.source, q) && a.target == e.index_of(x.target, p);
          });
          CHECK(listed == (r.presheaf.restrict(u, p) == q));
        }
    }
  }
}
