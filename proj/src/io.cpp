#include "qlogic/io.hpp"

#include <algorithm>
#include <fstream>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qlogic/boolean.hpp"
#include "qlogic/disjoint_set.hpp"

namespace qlogic {

namespace {

QuantumEventAlgebra build_checked(std::string label, std::vector<std::string> names,
                                  const std::vector<std::pair<Element, Element>>& leq, std::vector<Element> ortho,
                                  Element top) {
  try {
    return QuantumEventAlgebra::from_relation(std::move(label), std::move(names), leq, std::move(ortho), top);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::MalformedInput) throw Error(ErrorKind::ValidationError, e.what());
    throw;
  }
}

}  // namespace

QuantumEventAlgebra read_lattice_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::ParseError, "lattice JSON must be an object");
  static const std::set<std::string> known{"label", "elements", "top", "ortho", "covers", "leq"};
  for (const auto& [key, value] : doc.items())
    if (!known.count(key)) throw Error(ErrorKind::ParseError, "unknown field '" + key + "'");
  for (const char* key : {"elements", "top", "ortho"})
    if (!doc.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing field '") + key + "'");
  if (doc.contains("covers") == doc.contains("leq"))
    throw Error(ErrorKind::ParseError, "exactly one of 'covers' and 'leq' is required");

  auto expect_string = [](const nlohmann::json& j, const std::string& what) {
    if (!j.is_string()) throw Error(ErrorKind::ParseError, what + " must be a string");
    return j.get<std::string>();
  };
  std::string label = doc.contains("label") ? expect_string(doc["label"], "label") : "L";
  if (!doc["elements"].is_array()) throw Error(ErrorKind::ParseError, "'elements' must be an array");
  std::vector<std::string> names;
  std::map<std::string, Element> index;
  for (const auto& e : doc["elements"]) {
    names.push_back(expect_string(e, "element name"));
    if (!index.emplace(names.back(), static_cast<Element>(names.size() - 1)).second)
      throw Error(ErrorKind::ValidationError, "duplicate element '" + names.back() + "'");
  }
  auto lookup = [&](const nlohmann::json& j, const std::string& what) {
    const auto name = expect_string(j, what);
    auto it = index.find(name);
    if (it == index.end()) throw Error(ErrorKind::ValidationError, what + " '" + name + "' is not an element");
    return it->second;
  };
  const Element top = lookup(doc["top"], "top");
  if (!doc["ortho"].is_object()) throw Error(ErrorKind::ParseError, "'ortho' must be an object");
  std::vector<Element> ortho(names.size(), -1);
  for (const auto& [key, value] : doc["ortho"].items()) ortho[lookup(key, "ortho key")] = lookup(value, "ortho value");
  for (std::size_t i = 0; i < names.size(); ++i)
    if (ortho[i] < 0) throw Error(ErrorKind::ValidationError, "ortho is undefined at '" + names[i] + "'");
  const auto& rel = doc.contains("covers") ? doc["covers"] : doc["leq"];
  if (!rel.is_array()) throw Error(ErrorKind::ParseError, "order relation must be an array of pairs");
  std::vector<std::pair<Element, Element>> leq;
  for (const auto& pair : rel) {
    if (!pair.is_array() || pair.size() != 2) throw Error(ErrorKind::ParseError, "order relation entries are pairs");
    leq.emplace_back(lookup(pair[0], "order entry"), lookup(pair[1], "order entry"));
  }
  return build_checked(std::move(label), std::move(names), leq, std::move(ortho), top);
}

// One field per line with compact lists, so that hand-written files can be
// canonical too.
std::string write_lattice_json(const QuantumEventAlgebra& l) {
  auto quote = [](const std::string& s) { return nlohmann::json(s).dump(); };
  std::string out = "{\n  \"label\": " + quote(l.label()) + ",\n  \"elements\": [";
  for (Element x = 0; x < static_cast<Element>(l.size()); ++x) out += (x ? ", " : "") + quote(l.name(x));
  out += "],\n  \"top\": " + quote(l.name(l.top())) + ",\n  \"ortho\": {";
  for (Element x = 0; x < static_cast<Element>(l.size()); ++x)
    out += (x ? ", " : "") + quote(l.name(x)) + ": " + quote(l.name(l.ortho(x)));
  out += "},\n  \"covers\": [";
  bool first = true;
  for (auto [x, y] : l.covers()) {
    out += (first ? "[" : ", [") + quote(l.name(x)) + ", " + quote(l.name(y)) + "]";
    first = false;
  }
  return out + "]\n}\n";
}

namespace {

bool valid_atom_name(const std::string& s) {
  return !s.empty() && s != "0" && s != "1" && s.find_first_of("~+;#") == std::string::npos;
}

}  // namespace

QuantumEventAlgebra read_greechie(const std::string& text) {
  std::string label = "L";
  std::vector<std::string> atoms;
  std::map<std::string, int> atom_index;
  std::vector<std::vector<int>> blocks;
  bool have_label = false;

  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream parts(line);
    for (std::string directive; std::getline(parts, directive, ';');) {
      std::istringstream words(directive);
      std::string head;
      if (!(words >> head)) continue;
      std::vector<std::string> rest;
      for (std::string w; words >> w;) rest.push_back(w);
      if (head == "label") {
        if (rest.size() != 1 || have_label) throw Error(ErrorKind::ParseError, "expected a single 'label <name>'");
        label = rest[0];
        have_label = true;
      } else if (head == "block") {
        if (rest.size() < 2) throw Error(ErrorKind::ParseError, "a block needs at least two atoms");
        std::vector<int> block;
        for (const auto& a : rest) {
          if (!valid_atom_name(a)) throw Error(ErrorKind::ParseError, "invalid atom name '" + a + "'");
          auto [it, inserted] = atom_index.emplace(a, static_cast<int>(atoms.size()));
          if (inserted) atoms.push_back(a);
          if (std::find(block.begin(), block.end(), it->second) != block.end())
            throw Error(ErrorKind::ParseError, "atom '" + a + "' repeated in a block");
          block.push_back(it->second);
        }
        blocks.push_back(std::move(block));
      } else {
        throw Error(ErrorKind::ParseError, "unknown directive '" + head + "'");
      }
    }
  }
  if (blocks.empty()) throw Error(ErrorKind::ParseError, "no blocks");

  // Representations (block, mask) of the elements strictly between 0 and 1.
  struct Rep {
    int block;
    unsigned mask;
    std::vector<int> set;  // sorted atom indices
    std::vector<int> complement;
  };
  std::vector<Rep> reps;
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
    const auto& blk = blocks[b];
    const unsigned full = (1u << blk.size()) - 1;
    for (unsigned m = 1; m < full; ++m) {
      Rep r{b, m, {}, {}};
      for (std::size_t i = 0; i < blk.size(); ++i) (m >> i & 1 ? r.set : r.complement).push_back(blk[i]);
      std::sort(r.set.begin(), r.set.end());
      std::sort(r.complement.begin(), r.complement.end());
      reps.push_back(std::move(r));
    }
  }
  DisjointSet ds(reps.size());
  std::map<std::vector<int>, std::size_t> by_set, by_complement;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (auto [it, fresh] = by_set.emplace(reps[i].set, i); !fresh) ds.unite(it->second, i);
    if (auto [it, fresh] = by_complement.emplace(reps[i].complement, i); !fresh) ds.unite(it->second, i);
  }

  // Element order: 0, atoms by first appearance, remaining classes by first
  // representation, 1.
  std::map<std::size_t, Element> class_element;
  std::vector<std::size_t> order;
  std::vector<std::pair<int, std::size_t>> atom_roots;
  for (std::size_t i = 0; i < reps.size(); ++i)
    if (reps[i].set.size() == 1) atom_roots.emplace_back(reps[i].set[0], ds.find(i));
  std::sort(atom_roots.begin(), atom_roots.end());
  for (auto [atom, root] : atom_roots)
    if (!class_element.count(root)) {
      class_element[root] = static_cast<Element>(order.size() + 1);
      order.push_back(root);
    }
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const std::size_t root = ds.find(i);
    if (!class_element.count(root)) {
      class_element[root] = static_cast<Element>(order.size() + 1);
      order.push_back(root);
    }
  }
  const auto n = order.size() + 2;
  const Element top = static_cast<Element>(n - 1);

  auto join_name = [&](const Rep& r) {
    std::string s;
    for (int a : r.set) s += (s.empty() ? "" : "+") + atoms[a];
    return s;
  };
  std::vector<std::string> names(n);
  names[0] = "0";
  names[top] = "1";
  std::vector<int> name_rank(n, 3);
  for (const auto& r : reps) {
    const Element e = class_element[ds.find(&r - reps.data())];
    int rank = r.set.size() == 1 ? 0 : r.complement.size() == 1 ? 1 : 2;
    if (rank >= name_rank[e]) continue;
    name_rank[e] = rank;
    names[e] = rank == 0 ? atoms[r.set[0]] : rank == 1 ? "~" + atoms[r.complement[0]] : join_name(r);
  }

  std::vector<Element> ortho(n, -1);
  ortho[0] = top;
  ortho[top] = 0;
  std::vector<std::pair<Element, Element>> leq;
  std::map<std::pair<int, unsigned>, Element> rep_element;
  for (std::size_t i = 0; i < reps.size(); ++i) rep_element[{reps[i].block, reps[i].mask}] = class_element[ds.find(i)];
  for (const auto& r : reps) {
    const Element e = rep_element[{r.block, r.mask}];
    const unsigned full = (1u << blocks[r.block].size()) - 1;
    const Element c = rep_element[{r.block, full ^ r.mask}];
    if (ortho[e] >= 0 && ortho[e] != c)
      throw Error(ErrorKind::ValidationError, "pasting gives '" + names[e] + "' two orthocomplements");
    ortho[e] = c;
    leq.emplace_back(0, e);
    leq.emplace_back(e, top);
    for (unsigned m = r.mask + 1; m < full; ++m)
      if ((r.mask & ~m) == 0) leq.emplace_back(e, rep_element[{r.block, m}]);
  }
  return build_checked(label, std::move(names), leq, std::move(ortho), top);
}

std::string write_greechie(const QuantumEventAlgebra& l) {
  std::string out = "label " + l.label() + "\n";
  for (const auto& b : enumerate_blocks(l)) {
    out += "block";
    for (Element a : block_atoms(l, b)) {
      if (!valid_atom_name(l.name(a)) || l.name(a).find_first_of(" \t") != std::string::npos)
        throw Error(ErrorKind::InconsistentInput, "atom '" + l.name(a) + "' cannot be written in Greechie form");
      out += " " + l.name(a);
    }
    out += "\n";
  }
  return out;
}

void require_valid(const QuantumEventAlgebra& l) {
  const auto report = check_axioms(l);
  if (report.passed()) return;
  std::string msg = l.label() + " fails";
  for (char c : report.failed()) msg += " [" + std::string(1, c) + "] " + report.condition(c).detail + ";";
  msg.pop_back();
  throw Error(ErrorKind::ValidationError, msg);
}

QuantumEventAlgebra read_lattice(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string::npos && text[first] == '{' ? read_lattice_json(text) : read_greechie(text);
}

QuantumEventAlgebra parse_lattice(const std::string& text) {
  auto l = read_lattice(text);
  require_valid(l);
  return l;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

const std::map<std::string, std::string>& greechie_builtins() {
  static const std::map<std::string, std::string> table{
      {"mo2", "label MO2\nblock a a*\nblock b b*\n"},
      {"mo3", "label MO3\nblock a a*\nblock b b*\nblock c c*\n"},
      {"greechie", "label G12\nblock a b c\nblock c d e\n"},
  };
  return table;
}

std::optional<int> power_of_two_label(const std::string& name) {
  if (name == "2") return 1;
  if (name.size() > 2 && name.compare(0, 2, "2^") == 0 &&
      std::all_of(name.begin() + 2, name.end(), [](unsigned char c) { return std::isdigit(c); }) &&
      name.size() < 5)
    return std::stoi(name.substr(2));
  return std::nullopt;
}

}  // namespace

bool is_builtin_lattice(const std::string& name) {
  return greechie_builtins().count(name) || power_of_two_label(name).has_value();
}

std::vector<std::string> builtin_lattice_names() {
  std::vector<std::string> out{"2", "2^n"};
  for (const auto& [name, text] : greechie_builtins()) out.push_back(name);
  return out;
}

std::string lattice_source(const std::string& name_or_path) {
  if (auto it = greechie_builtins().find(name_or_path); it != greechie_builtins().end()) return it->second;
  if (auto n = power_of_two_label(name_or_path)) return write_lattice_json(modeling_object(boolean_from_atoms(*n)));
  return read_file(name_or_path);
}

QuantumEventAlgebra load_lattice(const std::string& name_or_path) { return parse_lattice(lattice_source(name_or_path)); }

}  // namespace qlogic
