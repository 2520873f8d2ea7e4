#include <doctest.h>

#include <algorithm>

#include "qlogic/valuations.hpp"
#include "support.hpp"

using namespace qlogic;

namespace {

std::vector<Valuation> brute_valuations(const QuantumEventAlgebra& l) {
  const auto two = qtest::boolean(1);
  REQUIRE(two.bottom() == 0);
  std::vector<Valuation> out;
  for (const auto& h : qtest::brute_force_homs(l, two, true)) out.emplace_back(h.begin(), h.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_of(const std::string& name) { return scenario_valuations(parse_scenario(read_file(qtest::fixture(name)))); }

}  // namespace

TEST_CASE("valuations agree with brute force over all 0/1 maps") {
  std::vector<QuantumEventAlgebra> inputs{qtest::boolean(1), qtest::boolean(2), qtest::boolean(3), qtest::boolean(4),
                                          qtest::mo2(), qtest::mo3(), qtest::g12()};
  for (const auto& l : inputs) {
    CAPTURE(l.label());
    const auto got = enumerate_valuations(l);
    CHECK(std::is_sorted(got.begin(), got.end()));
    CHECK(got == brute_valuations(l));
    for (const auto& v : got) CHECK(is_valuation(l, v));
  }
}

TEST_CASE("valuation counts") {
  for (int n = 1; n <= 4; ++n) CHECK(enumerate_valuations(qtest::boolean(n)).size() == static_cast<std::size_t>(n));
  CHECK(enumerate_valuations(qtest::mo2()).size() == 4);
  CHECK(enumerate_valuations(qtest::mo3()).size() == 8);
  // Pick one atom per block; the shared atom c either carries both or neither.
  CHECK(enumerate_valuations(qtest::g12()).size() == 1 + 2 * 2);
}

TEST_CASE("a valuation restricts to an ultrafilter on every block") {
  for (const auto& l : qtest::corpus()) {
    CAPTURE(l.label());
    for (const auto& v : enumerate_valuations(l))
      for (const auto& block : enumerate_blocks(l)) {
        int true_atoms = 0;
        for (Element x : block)
          if (x != l.bottom() && v[x] == 1) {
            bool atom = true;
            for (Element y : block)
              if (y != l.bottom() && y != x && l.leq(y, x)) atom = false;
            if (atom) ++true_atoms;
          }
        CHECK(true_atoms == 1);
      }
  }
}

TEST_CASE("is_valuation rejects maps that are not homs") {
  const auto l = qtest::mo2();
  Valuation all_one(l.size(), 1);
  CHECK_FALSE(is_valuation(l, all_one));
  Valuation wrong_size(l.size() - 1, 0);
  CHECK_FALSE(is_valuation(l, wrong_size));
}

TEST_CASE("scenario fixtures") {
  CHECK(count_of("cabello18.scenario") == 0);
  CHECK(count_of("peres_mermin24.scenario") == 0);
  CHECK(count_of("single_context.scenario") == 3);
  CHECK(count_of("two_contexts.scenario") == 9);
}

TEST_CASE("one context of d rays has d assignments") {
  for (int d = 1; d <= 6; ++d) {
    std::string text = "dim " + std::to_string(d) + "\n";
    std::string ctx = "context";
    for (int i = 0; i < d; ++i) {
      text += "ray r" + std::to_string(i) + "\n";
      ctx += " r" + std::to_string(i);
    }
    CHECK(scenario_valuations(parse_scenario(text + ctx + "\n")) == static_cast<std::uint64_t>(d));
  }
}

TEST_CASE("the fixture contexts are exactly the orthogonal bases they list") {
  for (const char* name : {"cabello18.scenario", "peres_mermin24.scenario"}) {
    CAPTURE(name);
    const auto s = parse_scenario(read_file(qtest::fixture(name)));
    REQUIRE(s.has_coordinates());
    validate_scenario(s);
    for (const auto& ctx : s.contexts) CHECK(static_cast<int>(ctx.size()) == s.dim);
    // Every ray of Cabello's set lies in exactly two contexts.
    if (std::string(name) == "cabello18.scenario") {
      CHECK(s.rays.size() == 18);
      CHECK(s.contexts.size() == 9);
      std::vector<int> seen(s.rays.size(), 0);
      for (const auto& ctx : s.contexts)
        for (int r : ctx) ++seen[r];
      CHECK(std::all_of(seen.begin(), seen.end(), [](int k) { return k == 2; }));
    } else {
      CHECK(s.rays.size() == 24);
      auto derived = orthogonal_contexts(s.coords, s.dim);
      auto listed = s.contexts;
      for (auto& c : listed) std::sort(c.begin(), c.end());
      std::sort(listed.begin(), listed.end());
      CHECK(derived == listed);
    }
  }
}

TEST_CASE("orthogonal_contexts finds the standard basis") {
  std::vector<std::vector<Rational>> coords{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}};
  CHECK(orthogonal_contexts(coords, 3) == std::vector<std::vector<int>>{{0, 1, 2}});
}

TEST_CASE("scenario parse errors") {
  auto kind_of = [](const std::string& text) {
    try {
      validate_scenario(parse_scenario(text));
    } catch (const Error& e) {
      return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::UsageError;
  };
  CHECK(kind_of("ray a\ncontext a\n") == ErrorKind::ParseError);
  CHECK(kind_of("dim x\n") == ErrorKind::ParseError);
  CHECK(kind_of("dim 2\nray a\nray a\n") == ErrorKind::ParseError);
  CHECK(kind_of("dim 2\nray a\ncontext a b\n") == ErrorKind::ParseError);
  CHECK(kind_of("dim 2\nbogus\n") == ErrorKind::ParseError);
  CHECK(kind_of("dim 2\nray a 1 0\nray b\n") == ErrorKind::ParseError);
  CHECK(kind_of("dim 2\nray a\nray b\ncontext a\n") == ErrorKind::ValidationError);
  CHECK(kind_of("dim 2\nray a\nray b\ncontext a a\n") == ErrorKind::ValidationError);
  CHECK(kind_of("dim 2\nray a 1 0\nray b 1 1\ncontext a b\n") == ErrorKind::ValidationError);
  CHECK(kind_of("dim 2\nray a 0 0\nray b 0 1\ncontext a b\n") == ErrorKind::ValidationError);
}

TEST_CASE("scenario files round trip") {
  for (const char* name : {"cabello18.scenario", "peres_mermin24.scenario", "single_context.scenario",
                           "two_contexts.scenario"}) {
    CAPTURE(name);
    const auto text = read_file(qtest::fixture(name));
    const auto s = parse_scenario(text);
    CHECK(serialize_scenario(s) == text);
    const auto again = parse_scenario(serialize_scenario(s));
    CHECK(again.rays == s.rays);
    CHECK(again.coords == s.coords);
    CHECK(again.contexts == s.contexts);
  }
}
