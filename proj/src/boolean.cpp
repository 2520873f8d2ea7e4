#include "qlogic/boolean.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace qlogic {

int configured_max_atoms() {
  if (const char* env = std::getenv("QLOGIC_MAX_ATOMS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 16) return static_cast<int>(v);
  }
  return kDefaultMaxAtoms;
}

std::string BooleanAlgebra::label() const {
  return atoms == 1 ? std::string("2") : "2^" + std::to_string(atoms);
}

std::string BooleanAlgebra::element_name(Element x) const {
  if (x == 0) return "0";
  if (x == top()) return "1";
  std::string out;
  for (int i = 0; i < atoms; ++i) {
    if (!(x & (1 << i))) continue;
    if (!out.empty()) out += "+";
    out += "a" + std::to_string(i + 1);
  }
  return out;
}

BooleanAlgebra boolean_from_atoms(int n, int max_atoms) {
  if (n < 1) throw Error(ErrorKind::MalformedInput, "a Boolean algebra needs at least one atom");
  if (n > max_atoms)
    throw Error(ErrorKind::SizeBound,
                std::to_string(n) + " atoms exceeds the bound of " + std::to_string(max_atoms));
  return BooleanAlgebra{n};
}

bool BooleanHom::injective() const {
  std::vector<bool> seen(target.size(), false);
  for (Element y : map) {
    if (seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

BooleanHom identity_hom(const BooleanAlgebra& b) {
  BooleanHom h{b, b, std::vector<Element>(b.size())};
  for (std::size_t x = 0; x < b.size(); ++x) h.map[x] = static_cast<Element>(x);
  return h;
}

BooleanHom compose(const BooleanHom& g, const BooleanHom& f) {
  if (!(f.target == g.source)) throw Error(ErrorKind::InconsistentInput, "composing non-composable homs");
  BooleanHom h{f.source, g.target, std::vector<Element>(f.source.size())};
  for (std::size_t x = 0; x < f.source.size(); ++x) h.map[x] = g.map[f.map[x]];
  return h;
}

BooleanHom hom_from_atom_images(const BooleanAlgebra& source, const BooleanAlgebra& target,
                                const std::vector<Element>& atom_images) {
  if (atom_images.size() != static_cast<std::size_t>(source.atoms))
    throw Error(ErrorKind::InconsistentInput, "need one image per source atom");
  Element seen = 0;
  for (Element img : atom_images) {
    if (img < 0 || img > target.top() || (seen & img))
      throw Error(ErrorKind::InconsistentInput, "atom images must be pairwise disjoint elements");
    seen |= img;
  }
  if (seen != target.top()) throw Error(ErrorKind::InconsistentInput, "atom images must cover the top");
  BooleanHom h{source, target, std::vector<Element>(source.size(), 0)};
  for (std::size_t x = 0; x < source.size(); ++x) {
    Element img = 0;
    for (int i = 0; i < source.atoms; ++i)
      if (x & (std::size_t{1} << i)) img |= atom_images[i];
    h.map[x] = img;
  }
  return h;
}

bool preserves_boolean_structure(const BooleanHom& f) {
  const auto& s = f.source;
  const auto& t = f.target;
  if (f.map.size() != s.size()) return false;
  if (f(0) != 0 || f(s.top()) != t.top()) return false;
  for (Element x = 0; x <= s.top(); ++x) {
    if (f(s.complement(x)) != t.complement(f(x))) return false;
    for (Element y = 0; y <= s.top(); ++y) {
      if (f(x | y) != (f(x) | f(y))) return false;
      if (f(x & y) != (f(x) & f(y))) return false;
    }
  }
  return true;
}

std::vector<BooleanHom> enumerate_boolean_homs(const BooleanAlgebra& c, const BooleanAlgebra& b) {
  // Each atom of B lies under the image of exactly one atom of C, so a hom is
  // a function atoms(B) -> atoms(C). Enumerate those, then order by images.
  std::vector<BooleanHom> out;
  std::vector<int> owner(b.atoms, 0);
  while (true) {
    std::vector<Element> images(c.atoms, 0);
    for (int j = 0; j < b.atoms; ++j) images[owner[j]] |= Element{1} << j;
    out.push_back(hom_from_atom_images(c, b, images));
    int j = 0;
    while (j < b.atoms && ++owner[j] == c.atoms) owner[j++] = 0;
    if (j == b.atoms) break;
  }
  auto key = [&](const BooleanHom& h) {
    std::vector<Element> k;
    for (int i = 0; i < c.atoms; ++i) k.push_back(h.map[Element{1} << i]);
    return k;
  };
  std::sort(out.begin(), out.end(), [&](const BooleanHom& x, const BooleanHom& y) { return key(x) < key(y); });
  return out;
}

QuantumEventAlgebra modeling_object(const BooleanAlgebra& b) {
  const auto n = b.size();
  std::vector<std::string> names(n);
  std::vector<Element> ortho(n);
  std::vector<std::pair<Element, Element>> covers;
  for (Element x = 0; x <= b.top(); ++x) {
    names[x] = b.element_name(x);
    ortho[x] = b.complement(x);
    for (int i = 0; i < b.atoms; ++i)
      if (!(x & (1 << i))) covers.emplace_back(x, x | (1 << i));
  }
  return QuantumEventAlgebra::from_relation(b.label(), std::move(names), covers, std::move(ortho), b.top());
}

}  // namespace qlogic
