#include <doctest.h>

#include <algorithm>

#include "qlogic/truth.hpp"
#include "support.hpp"

using namespace qlogic;

namespace {

// Subsets of 2^n containing 0 and 1 that are closed under complement and
// under unions of disjoint members, found by scanning every bitmask.
std::vector<std::vector<Element>> brute_subobject_images(int n) {
  const auto b = boolean_from_atoms(n);
  const Element top = b.top();
  const std::uint32_t size = b.size();
  std::vector<std::vector<Element>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size); ++mask) {
    auto in = [&](Element x) { return (mask >> x & 1) != 0; };
    if (!in(0) || !in(top)) continue;
    bool closed = true;
    for (Element x = 0; x <= top && closed; ++x) {
      if (!in(x)) continue;
      if (!in(top & ~x)) closed = false;
      for (Element y = 0; y <= top && closed; ++y)
        if (in(y) && (x & y) == 0 && !in(x | y)) closed = false;
    }
    if (!closed) continue;
    std::vector<Element> image;
    for (Element x = 0; x <= top; ++x)
      if (in(x)) image.push_back(x);
    out.push_back(image);
  }
  return out;
}

}  // namespace

TEST_CASE("subobjects of M(2^n) agree with a subset scan") {
  const std::size_t expected_counts[] = {0, 1, 2, 5};
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    const auto subs = subobjects_of(boolean_from_atoms(n));
    CHECK(subs.size() == expected_counts[n]);
    auto brute = brute_subobject_images(n);
    std::vector<std::vector<Element>> got;
    for (const auto& s : subs) {
      got.push_back(s.image);
      CHECK(is_subobject_image(s.object, s.image));
      CHECK(check_axioms(s.domain()).passed());
      CHECK(is_quantum_hom(s.domain(), modeling_object(s.object), s.monic()));
      CHECK(s.monic().injective());
    }
    CHECK(subs.back().is_identity());
    std::sort(got.begin(), got.end());
    std::sort(brute.begin(), brute.end());
    CHECK(got == brute);
  }
}

TEST_CASE("pullback of subobjects is functorial") {
  std::vector<BooleanAlgebra> objs{boolean_from_atoms(1), boolean_from_atoms(2), boolean_from_atoms(3)};
  for (const auto& b : objs)
    for (const auto& lambda : subobjects_of(b)) {
      CHECK(pullback(lambda, identity_hom(b)) == lambda);
      for (const auto& c : objs)
        for (const auto& v : enumerate_boolean_homs(c, b)) {
          const auto once = pullback(lambda, v);
          CHECK(is_subobject_image(c, once.image));
          for (const auto& d : objs)
            for (const auto& u : enumerate_boolean_homs(d, c)) CHECK(pullback(once, u) == pullback(lambda, compose(v, u)));
        }
    }
}

TEST_CASE("the identity subobject pulls back to the identity") {
  const auto four = boolean_from_atoms(2);
  const auto id = subobjects_of(four).back();
  for (const auto& v : enumerate_boolean_homs(boolean_from_atoms(1), four)) CHECK(pullback(id, v).is_identity());
}

TEST_CASE("Omega over 2 and 2^2 with the inclusions") {
  const auto omega = build_omega();
  const auto& a = omega.algebra();
  CHECK_FALSE(omega.quotient.collapsed);
  CHECK(a.size() == 6);
  CHECK(check_axioms(a).passed());
  CHECK(omega.true_class == a.top());
  CHECK(omega.false_class == a.bottom());

  SUBCASE("the ortho of lambda (x) b is lambda (x) b'") {
    const auto& base = omega.base();
    for (int o = 0; o < static_cast<int>(base.object_count()); ++o) {
      const auto b = base.object(o);
      for (int s = 0; s < static_cast<int>(omega.upsilon.sets[o].size()); ++s)
        for (Element x = 0; x <= b.top(); ++x)
          CHECK(a.ortho(omega.class_of(o, s, x)) == omega.class_of(o, s, b.complement(x)));
    }
  }
  SUBCASE("moving an arrow across the tensor does not change the class") {
    const auto& p = omega.upsilon.presheaf;
    const auto& base = p.base();
    for (int arrow = 0; arrow < static_cast<int>(base.arrow_count()); ++arrow) {
      const auto& v = base.arrow(arrow);
      for (int s = 0; s < static_cast<int>(p.size(v.target)); ++s)
        for (Element c = 0; c <= v.hom.source.top(); ++c)
          CHECK(omega.class_of(v.source, p.restrict(arrow, s), c) == omega.class_of(v.target, s, v.hom(c)));
    }
  }
}

TEST_CASE("the truth criterion holds on 8 of the 10 pairs") {
  const auto omega = build_omega();
  const auto& base = omega.base();
  int total = 0, holds = 0;
  std::vector<std::string> failures;
  for (int o = 0; o < static_cast<int>(base.object_count()); ++o) {
    const auto b = base.object(o);
    for (int s = 0; s < static_cast<int>(omega.upsilon.sets[o].size()); ++s)
      for (Element x = 0; x <= b.top(); ++x) {
        const auto t = truth_value(omega, o, s, x);
        ++total;
        CHECK(t.in_image == omega.upsilon.sets[o][s].contains(x));
        if (t.criterion_holds)
          ++holds;
        else
          failures.push_back(omega.upsilon.sets[o][s].label() + " " + b.element_name(x));
      }
  }
  CHECK(total == 10);
  CHECK(holds == 8);
  // The identity subobject of 2^2 tensored with an atom is not identified
  // with the unit.
  CHECK(failures == std::vector<std::string>{"id a1", "id a2"});
}

TEST_CASE("lambda (x) 0 is false") {
  const auto omega = build_omega();
  const auto& base = omega.base();
  for (int o = 0; o < static_cast<int>(base.object_count()); ++o)
    for (int s = 0; s < static_cast<int>(omega.upsilon.sets[o].size()); ++s) {
      const auto t = truth_value(omega, o, s, 0);
      CHECK(t.omega_class == omega.false_class);
      CHECK_FALSE(t.is_true);
      CHECK(t.classified);
    }
}

TEST_CASE("Omega over 2 alone is the two-element algebra") {
  const auto omega = build_omega(injective_base(1));
  CHECK(omega.algebra().size() == 2);
  CHECK(check_axioms(omega.algebra()).passed());
}

TEST_CASE("Omega over a base with non-injective arrows collapses") {
  const auto omega = build_omega(full_base(2));
  CHECK(omega.quotient.collapsed);
  CHECK(omega.algebra().size() == 1);
}

TEST_CASE("Omega over the inclusions up to 2^3 is not a partial order") {
  try {
    build_omega(injective_base(3));
    FAIL("expected NotAPartialOrder");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAPartialOrder);
  }
}

TEST_CASE("classifying a block of MO2 over its block ideal") {
  const auto l = qtest::mo2();
  const auto ideal = block_ideal(block_frames(l));
  const auto blocks = enumerate_blocks(l);
  const auto cover = block_cover(ideal.frames(), blocks[0]);
  const auto k = modeling_object(ideal.presheaf().base().object(cover.object));
  const auto& inclusion = ideal.hom(cover);
  const auto omega = build_omega();
  const auto c = classify_subobject(k, inclusion, ideal, omega);
  CHECK(c.family.size() == ideal.covers().size());
  CHECK(c.overlap_compatible);
  for (const auto& m : c.family) {
    // The block of a pulls back along the frame of b to {0, 1}.
    const auto& sub = omega.upsilon.sets[m.omega_object][m.subobject];
    const auto& frame = ideal.hom(m.cover);
    for (Element x = 0; x < static_cast<Element>(frame.map.size()); ++x)
      CHECK(sub.contains(x) == std::binary_search(blocks[0].begin(), blocks[0].end(), frame(x)));
  }
  // Only 0 and 1 are classified true: the atoms of a cover land on
  // id (x) a1, which is not the unit of Omega.
  CHECK(c.recovered == std::vector<Element>{l.bottom(), l.top()});
  CHECK_FALSE(c.reconstructs);
}

TEST_CASE("classification needs a localizing ideal") {
  const auto l = qtest::mo2();
  const auto frames = block_frames(l);
  const auto blocks = enumerate_blocks(l);
  const auto single = block_ideal(frames, {blocks[0]});
  const auto cover = block_cover(*frames, blocks[0]);
  try {
    classify_subobject(modeling_object(frames->presheaf.base().object(cover.object)), frames->homs[cover.object][cover.frame],
                       single, build_omega());
    FAIL("expected NotLocalized");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotLocalized);
  }
}

TEST_CASE("the slit and counter scenario") {
  const auto omega = build_omega();
  const auto sc = slit_counter();
  CHECK(sc.v(sc.c) == sc.b);
  SUBCASE("c is the unit") {
    const auto r = measurement_scenario(omega, sc.v, sc.c, sc.b);
    CHECK(r.restriction_is_identity);
    CHECK(r.chain_holds);
    CHECK(r.value);
    CHECK(r.id_c == r.lambda_b);
    CHECK(r.lambda_b == r.id_b);
    CHECK(r.id_b == r.true_class);
  }
  SUBCASE("c = 0 gives false") {
    const auto r = measurement_scenario(omega, sc.v, 0, sc.v(0));
    CHECK(r.chain_holds);
    CHECK_FALSE(r.value);
  }
  SUBCASE("b must be v(c)") {
    try {
      measurement_scenario(omega, sc.v, sc.c, 1);
      FAIL("expected ScenarioMismatch");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ScenarioMismatch);
    }
  }
}
