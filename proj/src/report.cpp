#include "gradedproj/report.hpp"

#include <sstream>

namespace gradedproj {

namespace {

using nlohmann::ordered_json;

struct Verdicts {
  ordered_json list = ordered_json::array();
  ordered_json warnings = ordered_json::array();
  bool failed = false;
  bool inconclusive = false;

  void add(const std::string& name, const std::string& status, const std::string& detail = "") {
    ordered_json v;
    v["name"] = name;
    v["status"] = status;
    if (!detail.empty()) v["detail"] = detail;
    list.push_back(v);
    if (status == "fail") failed = true;
    if (status == "inconclusive") inconclusive = true;
  }
  void warn(const std::string& message) { warnings.push_back(message); }
  int exit_code() const { return failed ? 1 : inconclusive ? 2 : 0; }
};

const ordered_json& params(const ProblemDescription& doc, const std::string& command) {
  if (!doc.raw.contains(command))
    throw SchemaError("document has no '" + command + "' parameter block");
  return doc.raw.at(command);
}

std::string need_name(const ordered_json& block, const std::string& key,
                      const std::string& command) {
  if (!block.contains(key))
    throw SchemaError("'" + command + "' block is missing field '" + key + "'");
  return block.at(key).get<std::string>();
}

void cmd_check_relevance(const ProblemDescription& doc, Verdicts& out, ordered_json& info) {
  const ordered_json& block = params(doc, "check-relevance");
  std::string name = need_name(block, "submonoid", "check-relevance");
  const SubmonoidHandle& s = doc.submonoid(name);
  bool relevant = is_relevant(*s);
  bool maximal = relevant && is_maximally_relevant(*s);
  out.add("relevant(" + name + ")", relevant ? "pass" : "fail",
          relevant ? (maximal ? "maximally relevant" : "relevant, not maximal")
                   : "quotient by deg(bar S) is not torsion");
  info["relevant"] = relevant;
  info["maximally_relevant"] = maximal;
  if (s->uses_trusted_irreducibility())
    out.warn("submonoid " + name + " relies on an unverified irreducibility claim");
}

void cmd_potion_eq(const ProblemDescription& doc, Verdicts& out, ordered_json& info) {
  const ordered_json& block = params(doc, "potion-eq");
  const SubmonoidHandle& s = doc.submonoid(need_name(block, "submonoid", "potion-eq"));
  PotionElement a = parse_potion(block.at("a"), s);
  PotionElement b = parse_potion(block.at("b"), s);
  bool equal = potion_eq(a, b);
  out.add("potion-eq", equal ? "pass" : "fail", describe(a) + (equal ? " = " : " != ") + describe(b));
  info["equal"] = equal;
}

void cmd_magic2(const ProblemDescription& doc, Verdicts& out, ordered_json& info) {
  const ordered_json& block = params(doc, "magic2");
  const SubmonoidHandle& s = doc.submonoid(need_name(block, "s", "magic2"));
  const SubmonoidHandle& t = doc.submonoid(need_name(block, "t", "magic2"));
  LocalizationEquiv eq(find_potion_gen(s, t));

  ordered_json gens = ordered_json::array();
  for (std::size_t i = 0; i < eq.potion_gen().entries.size(); ++i) {
    const PotionGenEntry& e = eq.potion_gen().entries[i];
    ordered_json g;
    g["t"] = s->ring()->print(t->generators()[e.t_gen].poly);
    g["n"] = e.n;
    g["e"] = describe(eq.loc_generators()[i]);
    gens.push_back(g);
  }
  info["generators"] = gens;

  Sampler rng(doc.seed);
  bool ok = true;
  for (unsigned k = 0; k < doc.samples && ok; ++k) {
    PotionElement q = rng.potion(eq.st());
    if (!potion_eq(eq.forward(eq.backward(q)), q)) ok = false;
    PotionElement p = rng.potion(s);
    LocalizationElement lp = eq.embed(p);
    if (!eq.loc_eq(eq.backward(eq.forward(lp)), lp)) ok = false;
  }
  out.add("localization round trips", ok ? "pass" : "fail",
          std::to_string(doc.samples) + " samples each way");
}

void cmd_magic4(const ProblemDescription& doc, Verdicts& out, ordered_json& info) {
  const ordered_json& block = params(doc, "magic4");
  std::vector<HomogeneousElement> elements;
  for (const auto& text : block.at("elements")) {
    Polynomial p = doc.ring->parse(text.get<std::string>());
    Homogeneity h = doc.ring->homogeneity(p);
    if (h.kind != Homogeneity::Kind::homogeneous)
      throw SchemaError("magic4: element '" + text.get<std::string>() + "' is not homogeneous");
    elements.push_back({std::move(p), h.degree});
  }
  SumCoverReport rep = sum_cover_check(doc.ring, elements, doc.seed, doc.samples);
  if (!rep.error.empty()) throw SchemaError("magic4: " + rep.error);
  ordered_json pairs = ordered_json::array();
  for (const SumCoverPairVerdict& p : rep.pairs) {
    out.add("pair (" + std::to_string(p.i) + "," + std::to_string(p.j) + ")",
            p.compatible ? "pass" : "fail", std::to_string(p.samples) + " samples");
    ordered_json e;
    e["i"] = p.i;
    e["j"] = p.j;
    e["compatible"] = p.compatible;
    pairs.push_back(e);
  }
  info["pairs"] = pairs;
}

void cmd_atlas(const ProblemDescription& doc, Verdicts& out, ordered_json& info) {
  ChartAtlas atlas = build_atlas(doc.family_of(), doc.seed, doc.samples);
  info["charts"] = doc.family;
  ordered_json overlaps = ordered_json::array();
  for (const OverlapData& o : atlas.overlaps) {
    ordered_json e;
    e["from"] = doc.family[o.i];
    e["to"] = doc.family[o.j];
    ordered_json elems = ordered_json::array();
    for (const PotionElement& p : o.cert.elements) elems.push_back(describe(p));
    e["transition"] = elems;
    overlaps.push_back(e);
  }
  info["overlaps"] = overlaps;
  out.add("overlap symmetry", atlas.symmetry_ok ? "pass" : "fail");
  for (const TripleVerdict& t : atlas.cocycles)
    out.add("cocycle (" + doc.family[t.i] + "," + doc.family[t.j] + "," + doc.family[t.k] + ")",
            t.ok ? "pass" : "fail", std::to_string(t.samples) + " samples");
}

void cmd_functorial(const ProblemDescription& doc, Verdicts& out, ordered_json& info) {
  if (!doc.hom) throw SchemaError("functorial: document has no 'hom' block");
  FunctorialityReport rep = functoriality_map(*doc.hom, doc.family_of(), doc.seed, doc.samples);
  ordered_json entries = ordered_json::array();
  for (const FunctorialityEntry& e : rep.entries) {
    const std::string& name = doc.family[e.member];
    ordered_json je;
    je["member"] = name;
    je["mapped"] = e.ok;
    if (!e.ok) {
      je["warning"] = e.warning;
      out.warn("member " + name + " dropped: " + e.warning);
    } else {
      out.add("overlap compatibility (" + name + ")", e.overlaps_compatible ? "pass" : "fail");
    }
    entries.push_back(je);
  }
  info["members"] = entries;
}

void cmd_closed_immersion(const ProblemDescription& doc, Verdicts& out, ordered_json& info) {
  if (!doc.hom) throw SchemaError("closed-immersion: document has no 'hom' block");
  std::vector<std::string> names;
  if (doc.raw.contains("closed-immersion") &&
      doc.raw.at("closed-immersion").contains("submonoid"))
    names.push_back(doc.raw.at("closed-immersion").at("submonoid").get<std::string>());
  else
    names = doc.family;
  if (names.empty()) throw SchemaError("closed-immersion: no submonoid or family given");
  ordered_json entries = ordered_json::array();
  for (const std::string& name : names) {
    ClosedImmersionResult r = closed_immersion_check(*doc.hom, doc.submonoid(name), doc.seed,
                                                     doc.samples, doc.degree_bound);
    out.add("chart " + name, r.verdict == "surjective" ? "pass" : "inconclusive",
            std::to_string(r.lifted) + "/" + std::to_string(r.samples) + " lifts found");
    ordered_json e;
    e["chart"] = name;
    e["verdict"] = r.verdict;
    entries.push_back(e);
  }
  info["charts"] = entries;
}

void cmd_product_check(const ProblemDescription& doc, Verdicts& out, ordered_json& info) {
  const ordered_json& block = params(doc, "product-check");
  if (!doc.second_ring) throw SchemaError("product-check: document has no 'product' block");
  ProductGrading pg(doc.ring, doc.second_ring);
  const SubmonoidHandle& s = doc.submonoid(need_name(block, "s", "product-check"));
  const SubmonoidHandle& t = doc.second_submonoid(need_name(block, "t", "product-check"));
  ProductChartResult r = product_chart_check(pg, s, t, doc.seed, doc.samples, doc.degree_bound);
  out.add("product chart generation", r.verdict == "pass" ? "pass" : "inconclusive",
          std::to_string(r.decomposed) + "/" + std::to_string(r.samples) + " samples decomposed");
  ordered_json renames = ordered_json::array();
  for (const auto& [from, to] : pg.renames()) renames.push_back(from + " -> " + to);
  info["renamed_variables"] = renames;
  info["verdict"] = r.verdict;
}

void cmd_twist(const ProblemDescription& doc, Verdicts& out, ordered_json& info) {
  const ordered_json& block = params(doc, "twist");
  std::string name = need_name(block, "submonoid", "twist");
  const SubmonoidHandle& s = doc.submonoid(name);
  std::vector<Int> coords;
  for (const auto& c : block.at("alpha")) coords.push_back(Int(c.get<long long>()));
  GroupElement alpha = doc.ring->group().element(coords);
  try {
    TwistGenerator u = twist_generator(s, alpha);
    std::string text = doc.ring->print(u.num.poly) + " / " + doc.ring->print(u.den.poly);
    out.add("twist generator", "pass", "u = " + text);
    info["u"] = text;
  } catch (const std::invalid_argument& e) {
    out.add("twist generator", "fail", e.what());
  }
}

void cmd_negligible(const ProblemDescription& doc, Verdicts& out, ordered_json& info) {
  const ordered_json& block = params(doc, "negligible");
  std::string name = need_name(block, "module", "negligible");
  auto it = doc.modules.find(name);
  if (it == doc.modules.end()) throw SchemaError("unknown module '" + name + "'");
  NegligibilityReport rep = is_negligible_on_family(it->second, doc.family_of());
  for (const NegligibilityEntry& e : rep.entries)
    out.add("vanishes on chart " + doc.family[e.member], e.vanishes ? "pass" : "fail");
  info["negligible_over_family"] = rep.negligible;
}

}  // namespace

Report run_command(const std::string& command, const ProblemDescription& doc) {
  Verdicts verdicts;
  ordered_json info;

  if (command == "check-relevance") cmd_check_relevance(doc, verdicts, info);
  else if (command == "potion-eq") cmd_potion_eq(doc, verdicts, info);
  else if (command == "magic2") cmd_magic2(doc, verdicts, info);
  else if (command == "magic4") cmd_magic4(doc, verdicts, info);
  else if (command == "atlas") cmd_atlas(doc, verdicts, info);
  else if (command == "functorial") cmd_functorial(doc, verdicts, info);
  else if (command == "closed-immersion") cmd_closed_immersion(doc, verdicts, info);
  else if (command == "product-check") cmd_product_check(doc, verdicts, info);
  else if (command == "twist") cmd_twist(doc, verdicts, info);
  else if (command == "negligible") cmd_negligible(doc, verdicts, info);
  else throw SchemaError("unknown command '" + command + "'");

  Report report;
  report.machine["command"] = command;
  report.machine["input_digest"] = doc.digest;
  report.machine["seed"] = doc.seed;
  report.machine["samples"] = doc.samples;
  report.machine["degree_bound"] = doc.degree_bound;
  report.machine["note"] = "results are relative to the declared family and submonoids";
  report.machine["verdicts"] = verdicts.list;
  report.machine["warnings"] = verdicts.warnings;
  report.machine["info"] = info.is_null() ? ordered_json::object() : info;
  report.exit_code = verdicts.exit_code();

  std::ostringstream human;
  human << command << " (seed " << doc.seed << ", " << doc.samples << " samples)\n";
  for (const auto& v : verdicts.list) {
    std::string status = v.at("status").get<std::string>();
    std::string label = status == "pass" ? "PASS" : status == "fail" ? "FAIL" : "INCONCLUSIVE";
    human << "  [" << label << "] " << v.at("name").get<std::string>();
    if (v.contains("detail")) human << " -- " << v.at("detail").get<std::string>();
    human << "\n";
  }
  for (const auto& w : verdicts.warnings)
    human << "  [WARN] " << w.get<std::string>() << "\n";
  report.human = human.str();
  return report;
}

}  // namespace gradedproj
