#include "qlogic/truth.hpp"

#include <algorithm>

namespace qlogic {

bool Subobject::contains(Element x) const { return std::binary_search(image.begin(), image.end(), x); }

std::string Subobject::label() const {
  if (is_identity()) return "id";
  std::string s = "{";
  for (std::size_t i = 0; i < image.size(); ++i) s += (i ? "," : "") + object.element_name(image[i]);
  return s + "}";
}

QuantumEventAlgebra Subobject::domain() const {
  std::vector<std::string> names;
  std::vector<Element> ortho;
  std::vector<std::pair<Element, Element>> leq;
  auto index = [&](Element x) {
    return static_cast<Element>(std::lower_bound(image.begin(), image.end(), x) - image.begin());
  };
  for (std::size_t i = 0; i < image.size(); ++i) {
    names.push_back(object.element_name(image[i]));
    ortho.push_back(index(object.complement(image[i])));
    for (std::size_t j = 0; j < image.size(); ++j)
      if (i != j && (image[i] & ~image[j]) == 0) leq.emplace_back(static_cast<Element>(i), static_cast<Element>(j));
  }
  return QuantumEventAlgebra::from_relation("Dom" + label(), std::move(names), leq, std::move(ortho),
                                            index(object.top()));
}

QuantumHom Subobject::monic() const { return QuantumHom{image}; }

bool is_subobject_image(const BooleanAlgebra& b, const std::vector<Element>& image) {
  std::vector<bool> in(b.size(), false);
  for (Element x : image) {
    if (x < 0 || x > b.top()) return false;
    in[x] = true;
  }
  if (!in[0] || !in[b.top()]) return false;
  for (Element x : image) {
    if (!in[b.complement(x)]) return false;
    for (Element y : image)
      if ((x & y) == 0 && !in[x | y]) return false;
  }
  return true;
}

std::vector<Subobject> subobjects_of(const BooleanAlgebra& b) {
  // Candidates are unions of complement pairs {x, x*} with x below x*'s index.
  std::vector<Element> halves;
  for (Element x = 1; x < b.top(); ++x)
    if (x < b.complement(x)) halves.push_back(x);
  std::vector<Subobject> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << halves.size()); ++mask) {
    std::vector<Element> image{0, b.top()};
    for (std::size_t i = 0; i < halves.size(); ++i)
      if (mask >> i & 1) {
        image.push_back(halves[i]);
        image.push_back(b.complement(halves[i]));
      }
    std::sort(image.begin(), image.end());
    if (is_subobject_image(b, image)) out.push_back({b, std::move(image)});
  }
  std::sort(out.begin(), out.end(), [](const Subobject& x, const Subobject& y) {
    return x.image.size() != y.image.size() ? x.image.size() < y.image.size() : x.image < y.image;
  });
  return out;
}

Subobject pullback(const Subobject& lambda, const BooleanHom& v) {
  Subobject out{v.source, {}};
  for (Element x = 0; x <= v.source.top(); ++x)
    if (lambda.contains(v(x))) out.image.push_back(x);
  return out;
}

std::optional<int> SubobjectFunctor::find(int object, const std::vector<Element>& image) const {
  const auto& list = sets[object];
  for (std::size_t i = 0; i < list.size(); ++i)
    if (list[i].image == image) return static_cast<int>(i);
  return std::nullopt;
}

SubobjectFunctor subobject_functor(const BasePtr& base) {
  const auto& c = *base;
  std::vector<std::vector<Subobject>> sets;
  std::vector<std::vector<std::string>> labels;
  for (int o = 0; o < static_cast<int>(c.object_count()); ++o) {
    sets.push_back(subobjects_of(c.object(o)));
    labels.emplace_back();
    for (const auto& s : sets.back()) labels.back().push_back(s.label());
  }
  std::vector<std::vector<int>> restrictions(c.arrow_count());
  for (int a = 0; a < static_cast<int>(c.arrow_count()); ++a) {
    const auto& arr = c.arrow(a);
    for (const auto& s : sets[arr.target]) {
      const auto r = pullback(s, arr.hom);
      const auto& dom = sets[arr.source];
      const auto it = std::find(dom.begin(), dom.end(), r);
      if (it == dom.end()) throw Error(ErrorKind::InconsistentInput, "pullback is not a subobject");
      restrictions[a].push_back(static_cast<int>(it - dom.begin()));
    }
  }
  Presheaf presheaf(base, std::move(labels), std::move(restrictions));
  return SubobjectFunctor{std::move(sets), std::move(presheaf)};
}

OmegaAlgebra build_omega(const BasePtr& base) {
  auto upsilon = subobject_functor(base);
  auto quotient = left_adjoint(upsilon.presheaf);
  quotient.algebra = quotient.algebra.relabeled("Omega");
  const Element t = quotient.algebra.top();
  const Element f = quotient.algebra.bottom();
  return OmegaAlgebra{std::move(upsilon), std::move(quotient), t, f};
}

TruthValue truth_value(const OmegaAlgebra& omega, int object, int subobject, Element b) {
  const auto& lambda = omega.upsilon.sets[object][subobject];
  TruthValue out;
  out.omega_class = omega.class_of(object, subobject, b);
  out.in_image = lambda.contains(b);
  out.is_true = out.omega_class == omega.true_class;
  out.classified = out.is_true || out.omega_class == omega.false_class;
  out.criterion_holds = out.is_true == (out.in_image && b != 0);
  return out;
}

Classification classify_subobject(const QuantumEventAlgebra& k, const QuantumHom& l, const CoveringIdeal& ideal,
                                  const OmegaAlgebra& omega) {
  const auto& target = ideal.algebra();
  if (!l.injective() || !is_quantum_hom(k, target, l))
    throw Error(ErrorKind::InconsistentInput, "classified map is not a monic quantum hom into " + target.label());
  if (!counit_eval(ideal).isomorphism())
    throw Error(ErrorKind::NotLocalized, "the ideal is not a Boolean localization of " + target.label());

  std::vector<bool> in_k(target.size(), false);
  for (Element x : l.map) in_k[x] = true;

  Classification out;
  const auto& frames_base = ideal.frames().presheaf.base();
  for (const auto& cover : ideal.covers()) {
    const auto b = frames_base.object(cover.object);
    const auto o = omega.base().find_object(b.atoms);
    if (!o) throw Error(ErrorKind::InconsistentInput, "Omega has no object " + b.label());
    std::vector<Element> image;
    const auto& e = ideal.hom(cover);
    for (Element x = 0; x <= b.top(); ++x)
      if (in_k[e(x)]) image.push_back(x);
    const auto s = omega.upsilon.find(*o, image);
    if (!s) throw Error(ErrorKind::InconsistentInput, "pullback along " + ideal.cover_name(cover) + " is not a subobject");
    CharacteristicMember m{cover, *o, *s, {}};
    for (Element x = 0; x <= b.top(); ++x) m.chi.push_back(omega.class_of(*o, *s, x));
    out.family.push_back(std::move(m));
  }

  auto classified = [&](Element cls) { return cls == omega.true_class || cls == omega.false_class; };
  for (std::size_t i = 0; i < out.family.size(); ++i)
    for (std::size_t j = i + 1; j < out.family.size(); ++j) {
      const auto& a = out.family[i];
      const auto& c = out.family[j];
      if (!ideal.hom(a.cover).injective() || !ideal.hom(c.cover).injective()) continue;
      for (auto [x, y] : pullback_overlap(ideal, a.cover, c.cover).carrier)
        if (classified(a.chi[x]) != classified(c.chi[y]) ||
            (a.chi[x] == omega.true_class) != (c.chi[y] == omega.true_class))
          out.overlap_compatible = false;
    }

  std::vector<bool> hit(target.size(), false);
  for (const auto& m : out.family)
    for (Element x = 0; x < static_cast<Element>(m.chi.size()); ++x)
      if (classified(m.chi[x])) hit[ideal.hom(m.cover)(x)] = true;
  for (Element x = 0; x < static_cast<Element>(target.size()); ++x)
    if (hit[x]) out.recovered.push_back(x);
  std::vector<Element> image = l.map;
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  out.reconstructs = out.recovered == image;
  return out;
}

MeasurementReport measurement_scenario(const OmegaAlgebra& omega, const BooleanHom& v, Element c, Element b) {
  if (!v.injective()) throw Error(ErrorKind::InconsistentInput, "the apparatus context must embed");
  if (c < 0 || c > v.source.top() || b < 0 || b > v.target.top())
    throw Error(ErrorKind::InconsistentInput, "proposition outside its context");
  if (v(c) != b)
    throw Error(ErrorKind::ScenarioMismatch, v.source.element_name(c) + " is sent to " +
                                                 v.target.element_name(v(c)) + ", not " + v.target.element_name(b));
  const auto& base = omega.base();
  const auto oc = base.find_object(v.source.atoms);
  const auto ob = base.find_object(v.target.atoms);
  if (!oc || !ob || !base.find_arrow(v))
    throw Error(ErrorKind::InconsistentInput, "the embedding is not an arrow of Omega's base");

  Subobject lambda{v.target, {}};
  for (Element x = 0; x <= v.source.top(); ++x) lambda.image.push_back(v(x));
  std::sort(lambda.image.begin(), lambda.image.end());
  const auto& sets = omega.upsilon.sets;
  const int lam = *omega.upsilon.find(*ob, lambda.image);
  const int id_c = static_cast<int>(sets[*oc].size()) - 1;
  const int id_b = static_cast<int>(sets[*ob].size()) - 1;

  MeasurementReport out;
  out.restriction_is_identity = pullback(lambda, v).is_identity();
  out.id_c = omega.class_of(*oc, id_c, c);
  out.lambda_b = omega.class_of(*ob, lam, b);
  out.id_b = omega.class_of(*ob, id_b, b);
  out.true_class = omega.true_class;
  out.chain_holds = out.id_c == out.lambda_b && out.lambda_b == out.id_b;
  out.value = out.chain_holds && out.id_b == out.true_class;
  return out;
}

SlitCounter slit_counter() {
  const auto c = boolean_from_atoms(1);
  const auto b = boolean_from_atoms(2);
  SlitCounter s{hom_from_atom_images(c, b, {b.top()}), 0, 0, {"click"}, {"click&pass", "silent"}};
  s.c = c.top();
  s.b = s.v(s.c);
  return s;
}

}  // namespace qlogic
