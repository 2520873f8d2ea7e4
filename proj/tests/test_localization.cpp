#include <doctest.h>

#include <algorithm>

#include "qlogic/localization.hpp"
#include "support.hpp"

using namespace qlogic;

namespace {

std::vector<Element> image_of(const CoveringIdeal& ideal) {
  std::vector<Element> out;
  for (const auto& c : ideal.covers())
    for (Element e : ideal.hom(c).map) out.push_back(e);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Every ideal generated by a single frame of R(L).
std::vector<CoveringIdeal> principal_ideals(const std::shared_ptr<const FramesFunctor>& frames) {
  std::vector<CoveringIdeal> out;
  for (int o = 0; o < static_cast<int>(frames->homs.size()); ++o)
    for (int f = 0; f < static_cast<int>(frames->homs[o].size()); ++f) out.emplace_back(frames, std::vector<CoverRef>{{o, f}});
  return out;
}

}  // namespace

TEST_CASE("sieve closure") {
  const auto frames = block_frames(qtest::mo2());
  for (const auto& ideal : principal_ideals(frames)) {
    CHECK(ideal.is_sieve_closed());
    CHECK(CoveringIdeal(frames, ideal.covers()) == ideal);
  }
  const auto empty = CoveringIdeal::empty(frames);
  const auto all = CoveringIdeal::all(frames);
  CHECK(empty.is_sieve_closed());
  CHECK(all.is_sieve_closed());
  for (const auto& ideal : principal_ideals(frames)) {
    CHECK(ideal.includes(empty));
    CHECK(all.includes(ideal));
  }
  CHECK(block_ideal(frames).is_sieve_closed());
}

TEST_CASE("overlaps") {
  const auto l = qtest::mo2();
  const auto frames = block_frames(l);
  const auto ideal = block_ideal(frames);
  const auto blocks = enumerate_blocks(l);
  const auto a = block_cover(*frames, blocks[0]);
  const auto b = block_cover(*frames, blocks[1]);

  SUBCASE("a cover overlapping itself is its diagonal") {
    const auto ov = pullback_overlap(ideal, a, a);
    CHECK(ov.valid);
    CHECK(ov.carrier.size() == 4);
    for (auto [x, y] : ov.carrier) CHECK(x == y);
    CHECK(find_isomorphism(ov.algebra, qtest::boolean(2)).has_value());
  }
  SUBCASE("the two blocks of MO2 overlap in {0, 1}") {
    const auto ov = pullback_overlap(ideal, a, b);
    CHECK(ov.valid);
    CHECK(ov.commutes);
    CHECK(ov.trivial);
    CHECK(ov.carrier.size() == 2);
    CHECK(ov.image_in_l(ideal) == std::vector<Element>{l.bottom(), l.top()});
  }
  SUBCASE("every square commutes") {
    for (const auto& c1 : ideal.covers())
      for (const auto& c2 : ideal.covers()) {
        const auto ov = pullback_overlap(ideal, c1, c2);
        CHECK(ov.commutes);
        for (std::size_t i = 0; i < ov.carrier.size(); ++i) {
          CHECK(ideal.hom(c1)(ov.to_first(static_cast<Element>(i))) == ideal.hom(c2)(ov.to_second(static_cast<Element>(i))));
          CHECK(is_quantum_hom(ov.algebra, modeling_object(frames->presheaf.base().object(c1.object)), ov.to_first));
        }
      }
  }
}

TEST_CASE("cocycles on the block ideals of the corpus") {
  for (const auto& l : qtest::corpus()) {
    CAPTURE(l.label());
    const auto ideal = block_ideal(block_frames(l));
    const auto r = check_cocycles(ideal);
    CHECK(r.passed());
    CHECK(r.covers_checked > 0);
    CHECK(r.pairs == r.covers_checked * r.covers_checked);
  }
}

TEST_CASE("the unit cocycle is the identity pasting map") {
  const auto ideal = block_ideal(block_frames(qtest::mo3()));
  for (const auto& c : ideal.covers()) {
    if (!ideal.hom(c).injective()) continue;
    const auto ov = pullback_overlap(ideal, c, c);
    const auto w = pasting_map(ov, ideal.hom(c).map.size());
    for (Element x = 0; x < static_cast<Element>(w.size()); ++x) CHECK(w[x] == x);
  }
}

TEST_CASE("a non-injective generator is rejected by the cocycle check") {
  const auto l = qtest::mo2();
  const auto frames = block_frames(l);
  std::optional<CoverRef> constant;
  for (int o = 0; o < static_cast<int>(frames->homs.size()); ++o)
    for (int f = 0; f < static_cast<int>(frames->homs[o].size()); ++f)
      if (!frames->homs[o][f].injective() && !constant) constant = CoverRef{o, f};
  REQUIRE(constant.has_value());
  try {
    check_cocycles(CoveringIdeal(frames, {*constant}));
    FAIL("expected NonInjectiveCover");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonInjectiveCover);
  }
}

TEST_CASE("epimorphic families") {
  const auto l = qtest::mo2();
  const auto frames = block_frames(l);
  CHECK(is_epimorphic_family(block_ideal(frames)));
  CHECK_FALSE(is_epimorphic_family(CoveringIdeal::empty(frames)));
  const int two = *frames->presheaf.base().find_object(1);
  CHECK_FALSE(is_epimorphic_family(CoveringIdeal(frames, {{two, 0}})));
}

TEST_CASE("counit examples") {
  const auto l = qtest::mo2();
  const auto frames = block_frames(l);
  SUBCASE("all blocks of MO2") {
    const auto r = counit_eval(block_ideal(frames));
    CHECK(r.isomorphism());
    CHECK(r.quotient.algebra.size() == 6);
  }
  SUBCASE("one block of MO2 misses b and b*") {
    const auto blocks = enumerate_blocks(l);
    const auto r = counit_eval(block_ideal(frames, {blocks[0]}));
    CHECK_FALSE(r.isomorphism());
    CHECK_FALSE(r.surjective);
    CHECK(r.injective);
    std::vector<std::string> missed;
    for (Element x : r.missed) missed.push_back(l.name(x));
    CHECK(missed == std::vector<std::string>{"b", "b*"});
  }
  SUBCASE("a Boolean algebra localized by its identity cover") {
    for (int n = 1; n <= 3; ++n) {
      const auto b = qtest::boolean(n);
      const auto f = block_frames(b);
      const int top = *f->presheaf.base().find_object(n);
      const auto id = f->find(top, identity_hom(b));
      REQUIRE(id.has_value());
      CHECK(counit_eval(CoveringIdeal(f, {{top, *id}})).isomorphism());
    }
  }
}

TEST_CASE("the counit on every block ideal of the corpus is an isomorphism") {
  for (const auto& l : qtest::corpus()) {
    CAPTURE(l.label());
    CHECK(counit_eval(block_ideal(block_frames(l))).isomorphism());
  }
}

TEST_CASE("counit properties over all principal ideals of MO2 and 2^2") {
  for (const auto& l : {qtest::mo2(), qtest::boolean(2)}) {
    const auto frames = block_frames(l);
    const auto ideals = principal_ideals(frames);
    for (const auto& ideal : ideals) {
      const auto r = counit_eval(ideal);
      CHECK(r.preserves_structure);
      if (r.isomorphism()) {
        CHECK(is_epimorphic_family(ideal));
        CHECK(check_cocycles(ideal).passed());
      }
      // Enlarging an ideal never shrinks the image.
      for (const auto& bigger : ideals)
        if (bigger.includes(ideal)) {
          const auto small = image_of(ideal), large = image_of(bigger);
          CHECK(std::includes(large.begin(), large.end(), small.begin(), small.end()));
        }
    }
  }
}
