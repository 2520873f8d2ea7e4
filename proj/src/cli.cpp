#include "qlogic/cli.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "qlogic/colimit.hpp"
#include "qlogic/io.hpp"
#include "qlogic/localization.hpp"
#include "qlogic/lueders.hpp"
#include "qlogic/states.hpp"
#include "qlogic/truth.hpp"
#include "qlogic/valuations.hpp"

namespace qlogic {

using ordered_json = nlohmann::ordered_json;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UsageError:
      return kExitUsage;
    case ErrorKind::ParseError:
      return kExitParse;
    case ErrorKind::ValidationError:
    case ErrorKind::MalformedInput:
      return kExitValidation;
    case ErrorKind::SizeBound:
      return kExitSizeBound;
    default:
      return kExitSemantic;
  }
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

// Collected while a command runs; turned into the report at the end.
struct Run {
  std::string command;
  std::string material;  // argv and every input text, for the digest
  std::optional<bool> verdict;
  ordered_json result = ordered_json::object();
  ordered_json counterexamples = ordered_json::array();
  std::ostringstream out;

  QuantumEventAlgebra lattice(const std::string& arg, bool validate = true) {
    const auto text = lattice_source(arg);
    material += '\0' + text;
    return validate ? parse_lattice(text) : read_lattice(text);
  }
  std::string file(const std::string& path) {
    auto text = read_file(path);
    material += '\0' + text;
    return text;
  }
};

ordered_json names_of(const QuantumEventAlgebra& l, const std::vector<Element>& xs) {
  ordered_json j = ordered_json::array();
  for (Element x : xs) j.push_back(l.name(x));
  return j;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::vector<std::string> names_vec(const QuantumEventAlgebra& l, const std::vector<Element>& xs) {
  std::vector<std::string> v;
  for (Element x : xs) v.push_back(l.name(x));
  return v;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int parse_atoms_flag(int m) {
  if (m < 1) throw Error(ErrorKind::UsageError, "--atoms must be at least 1");
  return m;
}

CoveringIdeal make_ideal(const std::shared_ptr<const FramesFunctor>& frames, const std::string& spec) {
  if (spec == "blocks") return block_ideal(frames);
  if (spec == "all") return CoveringIdeal::all(frames);
  if (spec == "empty") return CoveringIdeal::empty(frames);
  if (spec.rfind("block:", 0) == 0) {
    const auto blocks = enumerate_blocks(frames->algebra);
    std::size_t i = 0;
    try {
      i = std::stoul(spec.substr(6));
    } catch (const std::exception&) {
      throw Error(ErrorKind::UsageError, "bad ideal '" + spec + "'");
    }
    if (i >= blocks.size())
      throw Error(ErrorKind::UsageError, "block index " + std::to_string(i) + " out of range (" +
                                             std::to_string(blocks.size()) + " blocks)");
    return block_ideal(frames, {blocks[i]});
  }
  throw Error(ErrorKind::UsageError, "ideal must be blocks, all, empty or block:<i>");
}

BasePtr make_base(const std::string& kind, int atoms) {
  if (kind == "injective") return injective_base(atoms);
  if (kind == "full") return full_base(atoms);
  throw Error(ErrorKind::UsageError, "--base must be injective or full");
}

std::string map_text(const QuantumEventAlgebra& source, const QuantumEventAlgebra& target, const QuantumHom& h) {
  std::vector<std::string> parts;
  for (Element x = 0; x < static_cast<Element>(source.size()); ++x)
    parts.push_back(source.name(x) + "->" + target.name(h(x)));
  return join(parts, " ");
}

ordered_json map_json(const QuantumEventAlgebra& source, const QuantumEventAlgebra& target, const QuantumHom& h) {
  ordered_json j = ordered_json::object();
  for (Element x = 0; x < static_cast<Element>(source.size()); ++x) j[source.name(x)] = target.name(h(x));
  return j;
}

// ---- subcommands ---------------------------------------------------------

void cmd_check(Run& run, const std::string& lattice) {
  const auto l = run.lattice(lattice, false);
  const auto report = check_axioms(l);
  ordered_json conditions = ordered_json::array();
  run.out << l.label() << " (" << l.size() << " elements)\n";
  for (const auto& c : report.checks) {
    ordered_json entry;
    entry["condition"] = std::string(1, c.condition);
    entry["passed"] = c.passed;
    if (c.witness) entry["witness"] = {l.name(c.witness->first), l.name(c.witness->second)};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    run.out << "  [" << c.condition << "] " << (c.passed ? "pass" : "FAIL");
    if (c.witness) run.out << "  witness (" << l.name(c.witness->first) << ", " << l.name(c.witness->second) << ")";
    if (!c.detail.empty()) run.out << "  " << c.detail;
    run.out << "\n";
    if (!c.passed) run.counterexamples.push_back(entry);
    conditions.push_back(std::move(entry));
  }
  run.result["label"] = l.label();
  run.result["size"] = l.size();
  run.result["conditions"] = std::move(conditions);
  run.verdict = report.passed();
  if (!report.passed()) {
    std::string failed;
    for (char c : report.failed()) failed += std::string(failed.empty() ? "" : ", ") + "[" + c + "]";
    throw Error(ErrorKind::ValidationError, l.label() + " fails " + failed);
  }
}

void cmd_blocks(Run& run, const std::string& lattice) {
  const auto l = run.lattice(lattice);
  const auto blocks = enumerate_blocks(l);
  ordered_json list = ordered_json::array();
  run.out << l.label() << ": " << blocks.size() << " blocks\n";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto atoms = block_atoms(l, blocks[i]);
    list.push_back({{"index", i}, {"atoms", names_of(l, atoms)}, {"elements", names_of(l, blocks[i])}});
    run.out << "  " << i << ": {" << join(names_vec(l, atoms), ", ") << "}  " << blocks[i].size() << " elements\n";
  }
  run.result["label"] = l.label();
  run.result["count"] = blocks.size();
  run.result["blocks"] = std::move(list);
  run.verdict = true;
}

void cmd_homs(Run& run, const std::string& source, const std::string& target, bool list) {
  const auto s = run.lattice(source);
  const auto t = run.lattice(target);
  const auto homs = enumerate_quantum_homs(s, t);
  run.out << "Hom(" << s.label() << ", " << t.label() << ") = " << homs.size() << "\n";
  run.result["source"] = s.label();
  run.result["target"] = t.label();
  run.result["count"] = homs.size();
  if (list) {
    ordered_json maps = ordered_json::array();
    for (const auto& h : homs) {
      maps.push_back(map_json(s, t, h));
      run.out << "  " << map_text(s, t, h) << "\n";
    }
    run.result["homs"] = std::move(maps);
  }
  run.verdict = true;
}

void cmd_frames(Run& run, const std::string& lattice, int atoms, bool list) {
  const auto l = run.lattice(lattice);
  const auto base = full_base(parse_atoms_flag(atoms));
  const auto frames = frames_functor(l, base);
  ordered_json objects = ordered_json::array();
  run.out << "R(" << l.label() << ")\n";
  for (int o = 0; o < static_cast<int>(base->object_count()); ++o) {
    const auto b = base->object(o);
    ordered_json entry{{"object", b.label()}, {"count", frames.homs[o].size()}};
    run.out << "  " << b.label() << ": " << frames.homs[o].size() << " frames\n";
    if (list) {
      const auto mb = modeling_object(b);
      ordered_json maps = ordered_json::array();
      for (const auto& h : frames.homs[o]) {
        maps.push_back(map_json(mb, l, h));
        run.out << "    " << map_text(mb, l, h) << "\n";
      }
      entry["frames"] = std::move(maps);
    }
    objects.push_back(std::move(entry));
  }
  const auto elements = category_of_elements(frames.presheaf);
  run.out << "  category of elements: " << elements.objects.size() << " objects, " << elements.arrows.size()
          << " arrows\n";
  run.result["label"] = l.label();
  run.result["objects"] = std::move(objects);
  run.result["elements"] = {{"objects", elements.objects.size()}, {"arrows", elements.arrows.size()}};
  run.verdict = true;
}

ordered_json class_table(const QuotientAlgebra& q, const Presheaf& p) {
  ordered_json table = ordered_json::array();
  for (std::size_t c = 0; c < q.partition.class_count(); ++c) {
    const auto& members = q.partition.members[c];
    table.push_back({{"class", q.algebra.name(static_cast<Element>(c))},
                     {"members", members.size()},
                     {"representative", q.tensor_name(members.front(), p)}});
  }
  return table;
}

void cmd_colimit(Run& run, int representable, const std::string& lattice, int atoms) {
  if ((representable > 0) == !lattice.empty())
    throw Error(ErrorKind::UsageError, "give exactly one of --representable and --lattice");
  std::optional<Presheaf> p;
  QuantumEventAlgebra expected = modeling_object(boolean_from_atoms(1));
  if (representable > 0) {
    const auto b = boolean_from_atoms(representable);
    const auto base = full_base(representable);
    p = yoneda_presheaf(base, *base->find_object(representable)).presheaf;
    expected = modeling_object(b);
    run.result["diagram"] = "y[" + b.label() + "]";
  } else {
    expected = run.lattice(lattice);
    p = frames_functor(expected, full_base(parse_atoms_flag(atoms))).presheaf;
    run.result["diagram"] = "R(" + expected.label() + ")";
  }
  const auto q = left_adjoint(*p);
  const auto iso = find_isomorphism(q.algebra, expected);
  run.out << "L(" << run.result["diagram"].get<std::string>() << "): " << q.algebra.size() << " classes from "
          << q.points.size() << " pointed elements\n";
  for (std::size_t c = 0; c < q.partition.class_count(); ++c)
    run.out << "  " << q.algebra.name(static_cast<Element>(c)) << "  (" << q.partition.members[c].size()
            << " members)\n";
  run.out << "isomorphic to " << expected.label() << ": " << yes_no(iso.has_value()) << "\n";
  run.result["points"] = q.points.size();
  run.result["classes"] = q.algebra.size();
  run.result["collapsed"] = q.collapsed;
  run.result["class_table"] = class_table(q, *p);
  run.result["compared_with"] = expected.label();
  run.result["isomorphic"] = iso.has_value();
  if (iso) run.result["isomorphism"] = map_json(q.algebra, expected, *iso);
  run.verdict = iso.has_value();
}

void cmd_counit(Run& run, const std::string& lattice, const std::string& ideal_spec) {
  const auto l = run.lattice(lattice);
  const auto ideal = make_ideal(block_frames(l), ideal_spec);
  const auto r = counit_eval(ideal);
  run.out << "counit on " << l.label() << " / " << ideal_spec << ": " << r.quotient.algebra.size() << " classes\n"
          << "  structure preserved: " << yes_no(r.preserves_structure) << "\n"
          << "  injective: " << yes_no(r.injective) << "\n"
          << "  surjective: " << yes_no(r.surjective) << "\n";
  if (!r.missed.empty()) run.out << "  missed: " << join(names_vec(l, r.missed), ", ") << "\n";
  run.out << "isomorphism: " << yes_no(r.isomorphism()) << "\n";
  run.result["label"] = l.label();
  run.result["ideal"] = ideal_spec;
  run.result["covers"] = ideal.covers().size();
  run.result["classes"] = r.quotient.algebra.size();
  run.result["preserves_structure"] = r.preserves_structure;
  run.result["injective"] = r.injective;
  run.result["surjective"] = r.surjective;
  run.result["counit"] = map_json(r.quotient.algebra, l, r.counit);
  run.result["isomorphism"] = r.isomorphism();
  for (Element x : r.missed) run.counterexamples.push_back({{"kind", "not surjective"}, {"missed", l.name(x)}});
  if (r.collision)
    run.counterexamples.push_back({{"kind", "not injective"},
                                   {"classes",
                                    {r.quotient.algebra.name(r.collision->first),
                                     r.quotient.algebra.name(r.collision->second)}}});
  run.verdict = r.isomorphism();
}

void cmd_cocycles(Run& run, const std::string& lattice, const std::string& ideal_spec) {
  const auto l = run.lattice(lattice);
  const auto ideal = make_ideal(block_frames(l), ideal_spec);
  const auto r = check_cocycles(ideal);
  run.out << "cocycles on " << l.label() << " / " << ideal_spec << "\n"
          << "  covers checked: " << r.covers_checked << " (skipped " << r.skipped_noninjective
          << " non-injective)\n"
          << "  pairs: " << r.pairs << "  triples: " << r.triples << "\n"
          << "  failures: " << r.failures.size() << "\n";
  run.result["label"] = l.label();
  run.result["ideal"] = ideal_spec;
  run.result["covers_checked"] = r.covers_checked;
  run.result["skipped_noninjective"] = r.skipped_noninjective;
  run.result["pairs"] = r.pairs;
  run.result["triples"] = r.triples;
  run.result["epimorphic"] = is_epimorphic_family(ideal);
  for (const auto& f : r.failures) {
    ordered_json covers = ordered_json::array();
    for (auto c : f.covers) covers.push_back(ideal.cover_name(c));
    ordered_json entry{{"identity", f.identity}, {"covers", covers}};
    if (f.witness >= 0) entry["witness"] = f.witness;
    run.counterexamples.push_back(std::move(entry));
  }
  run.verdict = r.passed();
}

void describe_omega(Run& run, const OmegaAlgebra& omega) {
  const auto& a = omega.algebra();
  const auto axioms = check_axioms(a);
  ordered_json elements = ordered_json::array();
  for (Element x = 0; x < static_cast<Element>(a.size()); ++x)
    elements.push_back({{"name", a.name(x)}, {"ortho", a.name(a.ortho(x))}});
  run.result["size"] = a.size();
  run.result["collapsed"] = omega.quotient.collapsed;
  run.result["true"] = a.name(omega.true_class);
  run.result["false"] = a.name(omega.false_class);
  run.result["elements"] = std::move(elements);
  ordered_json failed = ordered_json::array();
  for (char c : axioms.failed()) failed.push_back(std::string(1, c));
  run.result["axioms_failed"] = std::move(failed);
  run.out << "Omega: " << a.size() << " classes" << (omega.quotient.collapsed ? " (collapsed)" : "") << "\n";
  for (Element x = 0; x < static_cast<Element>(a.size()); ++x)
    run.out << "  " << a.name(x) << "  ortho " << a.name(a.ortho(x)) << "\n";
  run.out << "axioms: " << (axioms.passed() ? "pass" : "FAIL") << "\n";
  run.verdict = axioms.passed() && !omega.quotient.collapsed;
}

void cmd_omega(Run& run, const std::string& base, int atoms) {
  const auto omega = build_omega(make_base(base, parse_atoms_flag(atoms)));
  run.result["base"] = base;
  run.result["atoms"] = atoms;
  describe_omega(run, omega);
}

void cmd_truth(Run& run, const std::string& base_kind, int atoms) {
  const auto omega = build_omega(make_base(base_kind, parse_atoms_flag(atoms)));
  const auto& a = omega.algebra();
  const auto& base = omega.base();
  ordered_json rows = ordered_json::array();
  std::size_t holds = 0, total = 0;
  for (int o = 0; o < static_cast<int>(base.object_count()); ++o) {
    const auto b = base.object(o);
    for (int s = 0; s < static_cast<int>(omega.upsilon.sets[o].size()); ++s) {
      const auto& lambda = omega.upsilon.sets[o][s];
      for (Element x = 0; x <= b.top(); ++x) {
        const auto t = truth_value(omega, o, s, x);
        ordered_json row{{"object", b.label()},
                         {"subobject", lambda.label()},
                         {"b", b.element_name(x)},
                         {"class", a.name(t.omega_class)},
                         {"in_image", t.in_image},
                         {"true", t.is_true},
                         {"criterion_holds", t.criterion_holds}};
        run.out << "  " << lambda.label() << " (x) " << b.element_name(x) << " @" << b.label() << " = "
                << a.name(t.omega_class) << (t.criterion_holds ? "" : "   criterion fails") << "\n";
        ++total;
        if (t.criterion_holds)
          ++holds;
        else
          run.counterexamples.push_back(row);
        rows.push_back(std::move(row));
      }
    }
  }
  run.out << "criterion holds on " << holds << " of " << total << " pairs\n";
  run.result["base"] = base_kind;
  run.result["atoms"] = atoms;
  run.result["true"] = a.name(omega.true_class);
  run.result["pairs"] = total;
  run.result["criterion_holds"] = holds;
  run.result["table"] = std::move(rows);
  run.verdict = holds == total;
}

void cmd_classify(Run& run, const std::string& lattice, int block, const std::string& ideal_spec, int atoms) {
  const auto l = run.lattice(lattice);
  const auto frames = block_frames(l);
  const auto blocks = enumerate_blocks(l);
  if (block < 0 || block >= static_cast<int>(blocks.size()))
    throw Error(ErrorKind::UsageError, "--block out of range (" + std::to_string(blocks.size()) + " blocks)");
  const auto cover = block_cover(*frames, blocks[block]);
  const auto k = modeling_object(frames->presheaf.base().object(cover.object));
  const auto& inclusion = frames->homs[cover.object][cover.frame];
  const auto ideal = make_ideal(frames, ideal_spec);
  const auto omega = build_omega(injective_base(parse_atoms_flag(atoms)));
  const auto c = classify_subobject(k, inclusion, ideal, omega);
  const auto& a = omega.algebra();
  ordered_json family = ordered_json::array();
  run.out << "classifying block " << block << " of " << l.label() << " over " << ideal_spec << "\n";
  for (const auto& m : c.family) {
    const auto& sub = omega.upsilon.sets[m.omega_object][m.subobject];
    ordered_json chi = ordered_json::array();
    std::vector<std::string> chi_names;
    for (Element cls : m.chi) {
      chi.push_back(a.name(cls));
      chi_names.push_back(a.name(cls));
    }
    family.push_back({{"cover", ideal.cover_name(m.cover)}, {"subobject", sub.label()}, {"chi", chi}});
    run.out << "  " << ideal.cover_name(m.cover) << "  pullback " << sub.label() << "  chi [" << join(chi_names, ", ")
            << "]\n";
  }
  run.out << "overlap compatible: " << yes_no(c.overlap_compatible) << "\n"
          << "recovered: {" << join(names_vec(l, c.recovered), ", ") << "}\n"
          << "reconstructs the block: " << yes_no(c.reconstructs) << "\n";
  run.result["label"] = l.label();
  run.result["block"] = names_of(l, blocks[block]);
  run.result["ideal"] = ideal_spec;
  run.result["family"] = std::move(family);
  run.result["overlap_compatible"] = c.overlap_compatible;
  run.result["recovered"] = names_of(l, c.recovered);
  run.result["reconstructs"] = c.reconstructs;
  if (!c.reconstructs) {
    std::vector<Element> missing;
    for (Element x : blocks[block])
      if (!std::binary_search(c.recovered.begin(), c.recovered.end(), x)) missing.push_back(x);
    run.counterexamples.push_back({{"kind", "not recovered"}, {"elements", names_of(l, missing)}});
  }
  run.verdict = c.reconstructs;
}

void cmd_scenario(Run& run, std::optional<int> c_flag, std::optional<int> b_flag) {
  const auto sc = slit_counter();
  const Element c = c_flag.value_or(sc.c);
  const Element b = b_flag.value_or(sc.v(c));
  if (c < 0 || c > sc.v.source.top()) throw Error(ErrorKind::UsageError, "--c is not an element of the context");
  if (b < 0 || b > sc.v.target.top()) throw Error(ErrorKind::UsageError, "--b is not an element of the context");
  const auto omega = build_omega(injective_base(2));
  const auto r = measurement_scenario(omega, sc.v, c, b);
  const auto& a = omega.algebra();
  run.out << "apparatus context " << sc.v.source.label() << " {" << join(sc.apparatus_atoms, ", ") << "}"
          << " -> coupled context " << sc.v.target.label() << " {" << join(sc.coupled_atoms, ", ") << "}\n"
          << "  id (x) c = " << a.name(r.id_c) << "\n"
          << "  lambda (x) b = " << a.name(r.lambda_b) << "\n"
          << "  id (x) b = " << a.name(r.id_b) << "\n"
          << "  true = " << a.name(r.true_class) << "\n"
          << "chain holds: " << yes_no(r.chain_holds) << "; value " << (r.value ? "true" : "false") << "\n";
  run.result["c"] = sc.v.source.element_name(c);
  run.result["b"] = sc.v.target.element_name(b);
  run.result["id_c"] = a.name(r.id_c);
  run.result["lambda_b"] = a.name(r.lambda_b);
  run.result["id_b"] = a.name(r.id_b);
  run.result["true"] = a.name(r.true_class);
  run.result["restriction_is_identity"] = r.restriction_is_identity;
  run.result["chain_holds"] = r.chain_holds;
  run.result["value"] = r.value;
  run.verdict = r.chain_holds && r.value;
}

void cmd_ks(Run& run, const std::string& path) {
  const auto s = parse_scenario(run.file(path));
  const auto count = scenario_valuations(s);
  run.out << s.rays.size() << " rays, " << s.contexts.size() << " contexts, dimension " << s.dim << "\n"
          << "two-valued assignments: " << count << "\n";
  run.result["dim"] = s.dim;
  run.result["rays"] = s.rays.size();
  run.result["contexts"] = s.contexts.size();
  run.result["count"] = count;
  run.verdict = count == 0;
}

StateConstraint parse_constraint(const QuantumEventAlgebra& l, const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  StateConstraint c;
  std::size_t i = 0;
  int sign = 1;
  bool expect_term = true;
  for (; i < tokens.size(); ++i) {
    const auto& t = tokens[i];
    if (t == "=" || t == "<=" || t == ">=") break;
    if (!expect_term && (t == "+" || t == "-")) {
      sign = t == "+" ? 1 : -1;
      expect_term = true;
      continue;
    }
    if (!expect_term) throw Error(ErrorKind::ParseError, "expected '+' or '-' before '" + t + "'");
    std::string name = t;
    Rational coef = sign;
    if (auto star = t.find('*'); star != std::string::npos && star > 0) {
      try {
        coef *= parse_rational(t.substr(0, star));
        name = t.substr(star + 1);
      } catch (const Error&) {
      }
    }
    if (name.size() > 1 && name[0] == '-' && !l.find(name)) {
      coef = -coef;
      name.erase(0, 1);
    }
    const auto x = l.find(name);
    if (!x) throw Error(ErrorKind::ValidationError, "'" + name + "' is not an element of " + l.label());
    c.terms.emplace_back(*x, coef);
    expect_term = false;
    sign = 1;
  }
  if (expect_term || i + 2 != tokens.size())
    throw Error(ErrorKind::ParseError, "constraint must read 'term [+|- term ...] (=|<=|>=) rational': " + text);
  c.relation = tokens[i] == "=" ? Relation::Equal : tokens[i] == "<=" ? Relation::LessEqual : Relation::GreaterEqual;
  c.rhs = parse_rational(tokens[i + 1]);
  return c;
}

void cmd_states(Run& run, const std::string& lattice, const std::vector<std::string>& constraint_texts) {
  const auto l = run.lattice(lattice);
  std::vector<StateConstraint> constraints;
  for (const auto& t : constraint_texts) constraints.push_back(parse_constraint(l, t));
  const auto r = state_feasibility(l, constraints);
  run.result["label"] = l.label();
  run.result["constraints"] = constraint_texts;
  run.result["rows"] = r.rows.size();
  run.result["feasible"] = r.feasible;
  if (r.feasible) {
    ordered_json state = ordered_json::object();
    run.out << "feasible; state:\n";
    for (Element x = 0; x < static_cast<Element>(l.size()); ++x) {
      state[l.name(x)] = to_string(r.state[x]);
      run.out << "  p(" << l.name(x) << ") = " << to_string(r.state[x]) << "\n";
    }
    run.result["state"] = std::move(state);
  } else {
    ordered_json cert = ordered_json::array();
    run.out << "infeasible; Farkas certificate over " << r.rows.size() << " rows:\n";
    for (std::size_t i = 0; i < r.certificate.size(); ++i) {
      if (r.certificate[i] == 0) continue;
      cert.push_back({{"row", r.rows[i].origin}, {"multiplier", to_string(r.certificate[i])}});
      run.out << "  " << to_string(r.certificate[i]) << " x [" << r.rows[i].origin << "]\n";
    }
    run.counterexamples.push_back({{"kind", "farkas"}, {"certificate", cert}});
    run.result["certificate"] = std::move(cert);
  }
  run.verdict = r.feasible;
}

struct OperatorTriple {
  bool exact = true;
  std::vector<RationalMatrix> rational;
  std::vector<Eigen::MatrixXcd> complex;
};

OperatorTriple read_operators(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::ParseError, "operator file must be an object");
  for (const auto& [key, value] : doc.items())
    if (key != "D" && key != "PA" && key != "PE") throw Error(ErrorKind::ParseError, "unknown field '" + key + "'");
  OperatorTriple ops;
  for (const char* key : {"D", "PA", "PE"}) {
    if (!doc.contains(key) || !doc[key].is_array()) throw Error(ErrorKind::ParseError, std::string("missing matrix ") + key);
    for (const auto& row : doc[key])
      for (const auto& v : row)
        if (!v.is_string()) ops.exact = false;
  }
  for (const char* key : {"D", "PA", "PE"}) {
    const auto& m = doc[key];
    const int n = static_cast<int>(m.size());
    if (n == 0 || n > kMaxMatrixDimension)
      throw Error(ErrorKind::SizeBound, std::string(key) + " must have between 1 and " +
                                            std::to_string(kMaxMatrixDimension) + " rows");
    RationalMatrix r(n);
    Eigen::MatrixXcd c(n, n);
    for (int i = 0; i < n; ++i) {
      if (!m[i].is_array() || static_cast<int>(m[i].size()) != n)
        throw Error(ErrorKind::ParseError, std::string(key) + " is not square");
      for (int j = 0; j < n; ++j) {
        const auto& v = m[i][j];
        if (v.is_string()) {
          const auto q = parse_rational(v.get<std::string>());
          r(i, j) = q;
          c(i, j) = static_cast<double>(q);
        } else if (v.is_number()) {
          c(i, j) = v.get<double>();
        } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
          c(i, j) = {v[0].get<double>(), v[1].get<double>()};
        } else {
          throw Error(ErrorKind::ParseError, std::string("bad entry in ") + key);
        }
      }
    }
    ops.rational.push_back(std::move(r));
    ops.complex.push_back(std::move(c));
  }
  return ops;
}

void cmd_lueders(Run& run, const std::string& path, bool example) {
  if (path.empty() == !example) throw Error(ErrorKind::UsageError, "give exactly one of --file and --example");
  OperatorTriple ops;
  if (example) {
    const Rational h(1, 2);
    ops.rational = {RationalMatrix(2, {h, h, h, h}), RationalMatrix(2, {1, 0, 0, 0}), RationalMatrix(2, {h, h, h, h})};
    run.result["input"] = "example";
  } else {
    ops = read_operators(run.file(path));
    run.result["input"] = "file";
  }
  run.result["mode"] = ops.exact ? "exact" : "complex";
  if (ops.exact) {
    const auto v = lueders_conditional(ops.rational[0], ops.rational[1], ops.rational[2]);
    run.result["value"] = to_string(v);
    run.out << "P(E | A) = " << to_string(v) << " (exact)\n";
  } else {
    const double v = lueders_conditional(ops.complex[0], ops.complex[1], ops.complex[2]);
    std::ostringstream s;
    s << std::setprecision(12) << v;
    run.result["value"] = s.str();
    run.result["tolerance"] = kLuedersTolerance;
    run.out << "P(E | A) = " << s.str() << "\n";
  }
  run.verdict = true;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  CLI::App app{"Finite quantum event algebras, Boolean frames and their colimits", "qlogic"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  std::string json_path;
  bool assert_verdict = false;
  app.add_option("--json", json_path, "Also write the JSON report to this path");
  app.add_flag("--assert", assert_verdict, "Exit with code 5 when the verdict is negative");

  Run run;
  run.material = join(args, std::string(1, '\0'));
  std::function<void()> action;

  // Shared option storage; each subcommand binds what it needs.
  std::string lattice, source, target, ideal = "blocks", base = "injective", file, builtin;
  int atoms = 2, representable = 0, block = 0;
  bool list = false, example = false;
  std::optional<int> c_flag, b_flag;
  std::vector<std::string> constraints;

  auto sub = [&](const char* name, const char* help, std::function<void()> f) {
    auto* s = app.add_subcommand(name, help);
    s->callback([&run, &action, name, f] {
      run.command = name;
      action = f;
    });
    return s;
  };

  auto* check = sub("check", "Check conditions [a]-[f]", [&] { cmd_check(run, lattice); });
  check->add_option("--lattice", lattice, "Lattice name or file")->required();

  auto* blocks = sub("blocks", "List the maximal Boolean subalgebras", [&] { cmd_blocks(run, lattice); });
  blocks->add_option("--lattice", lattice)->required();

  auto* homs = sub("homs", "Count quantum homomorphisms", [&] { cmd_homs(run, source, target, list); });
  homs->add_option("--source", source)->required();
  homs->add_option("--target", target)->required();
  homs->add_flag("--list", list);

  auto* frames = sub("frames", "Boolean frames R(L) over 2^1..2^m", [&] { cmd_frames(run, lattice, atoms, list); });
  frames->add_option("--lattice", lattice)->required();
  frames->add_option("--atoms", atoms);
  frames->add_flag("--list", list);

  auto* colimit = sub("colimit", "Left adjoint of a presheaf",
                      [&] { cmd_colimit(run, representable, lattice, atoms); });
  colimit->add_option("--representable", representable, "Atoms k of the representable y[2^k]");
  colimit->add_option("--lattice", lattice, "Compute L(R(L))");
  colimit->add_option("--atoms", atoms);

  auto* counit = sub("counit", "Evaluate the counit on a covering ideal", [&] { cmd_counit(run, lattice, ideal); });
  counit->add_option("--lattice", lattice)->required();
  counit->add_option("--ideal", ideal, "blocks, all, empty or block:<i>");

  auto* cocycles = sub("cocycles", "Check the pasting cocycle identities", [&] { cmd_cocycles(run, lattice, ideal); });
  cocycles->add_option("--lattice", lattice)->required();
  cocycles->add_option("--ideal", ideal);

  auto* omega = sub("omega", "Build the truth-value algebra", [&] { cmd_omega(run, base, atoms); });
  omega->add_option("--base", base, "injective or full");
  omega->add_option("--atoms", atoms);

  auto* truth = sub("truth", "Tabulate the truth criterion", [&] { cmd_truth(run, base, atoms); });
  truth->add_option("--base", base);
  truth->add_option("--atoms", atoms);

  auto* classify = sub("classify", "Classify a block inclusion",
                       [&] { cmd_classify(run, lattice, block, ideal, atoms); });
  classify->add_option("--lattice", lattice)->required();
  classify->add_option("--block", block);
  classify->add_option("--ideal", ideal);
  classify->add_option("--atoms", atoms, "Atoms of the largest base object for Omega");

  auto* scenario = sub("scenario", "Slit and counter measurement", [&] { cmd_scenario(run, c_flag, b_flag); });
  scenario->add_option("--c", c_flag, "Apparatus proposition (element index of 2)");
  scenario->add_option("--b", b_flag, "Coupled proposition (element index of 2^2)");

  auto* ks = sub("ks", "Count two-valued assignments of a ray scenario", [&] { cmd_ks(run, file); });
  ks->add_option("--file", file)->required();

  auto* states = sub("states", "Decide existence of a state", [&] { cmd_states(run, lattice, constraints); });
  states->add_option("--lattice", lattice)->required();
  states->add_option("--constraint", constraints, "e.g. \"2*a + b <= 1/2\"");

  auto* lueders = sub("lueders", "Lueders conditional probability", [&] { cmd_lueders(run, file, example); });
  lueders->add_option("--file", file, "JSON with matrices D, PA, PE");
  lueders->add_flag("--example", example);

  CommandResult result;
  std::optional<Error> failure;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.human = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    failure.emplace(ErrorKind::UsageError, e.what());
  }

  if (!failure) {
    try {
      action();
    } catch (const Error& e) {
      failure = e;
    } catch (const std::exception& e) {
      failure.emplace(ErrorKind::InconsistentInput, e.what());
    }
  }

  auto& report = result.report;
  report["schema"] = kReportSchema;
  report["command"] = run.command.empty() ? nullptr : ordered_json(run.command);
  report["inputs"] = {{"args", args}, {"digest", fnv1a_hex(run.material)}};
  report["verdict"] = run.verdict ? ordered_json(*run.verdict) : ordered_json(nullptr);
  report["result"] = std::move(run.result);
  report["counterexamples"] = std::move(run.counterexamples);
  result.human = run.out.str();
  if (failure) {
    report["error"] = {{"kind", std::string(to_string(failure->kind()))}, {"message", failure->what()}};
    result.exit_code = exit_code_for(failure->kind());
    result.diagnostics = std::string(failure->what()) + "\n";
    if (failure->kind() == ErrorKind::UsageError) result.diagnostics += "run 'qlogic --help' for usage\n";
  } else {
    result.human += std::string("verdict: ") + (run.verdict.value_or(false) ? "true" : "false") + "\n";
    if (assert_verdict && !run.verdict.value_or(false)) result.exit_code = kExitAssert;
  }

  if (!json_path.empty()) {
    std::ofstream f(json_path, std::ios::binary);
    if (!f) {
      result.diagnostics += "cannot write " + json_path + "\n";
      if (result.exit_code == kExitOk) result.exit_code = kExitSemantic;
    } else {
      f << result.report_text();
    }
  }
  return result;
}

}  // namespace qlogic
