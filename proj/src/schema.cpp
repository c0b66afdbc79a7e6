#include "gradedproj/schema.hpp"

#include <sstream>

namespace gradedproj {

namespace {

using nlohmann::ordered_json;

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

const ordered_json& need(const ordered_json& j, const std::string& key,
                         const std::string& context) {
  if (!j.is_object() || !j.contains(key))
    throw SchemaError(context + ": missing required field '" + key + "'");
  return j.at(key);
}

std::vector<Int> int_list(const ordered_json& j, const std::string& context) {
  if (!j.is_array()) throw SchemaError(context + ": expected an array of integers");
  std::vector<Int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw SchemaError(context + ": expected an integer entry");
    out.push_back(Int(v.get<long long>()));
  }
  return out;
}

FgAbelianGroup parse_group(const ordered_json& j, const std::string& context) {
  std::size_t rank = need(j, "rank", context).get<std::size_t>();
  std::vector<Int> invariants;
  if (j.contains("invariants")) invariants = int_list(j.at("invariants"), context);
  try {
    return FgAbelianGroup(rank, std::move(invariants));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(context + ": " + e.what());
  }
}

GroupElement parse_degree(const ordered_json& j, const FgAbelianGroup& group,
                          const std::string& context) {
  std::vector<Int> coords = int_list(j, context);
  if (coords.size() != group.dim())
    throw SchemaError(context + ": degree vector has length " + std::to_string(coords.size()) +
                      ", expected " + std::to_string(group.dim()));
  return group.element(coords);
}

RingHandle parse_ring(const ordered_json& j, const std::string& context) {
  FgAbelianGroup group = parse_group(need(j, "group", context), context + ".group");
  std::vector<std::string> names;
  std::vector<GroupElement> degrees;
  for (const auto& var : need(j, "variables", context)) {
    std::string name = need(var, "name", context + ".variables").get<std::string>();
    names.push_back(name);
    degrees.push_back(parse_degree(need(var, "degree", context + " variable " + name), group,
                                   context + " variable " + name));
  }
  std::vector<Polynomial> ideal;
  if (j.contains("ideal"))
    for (const auto& text : j.at("ideal")) {
      try {
        ideal.push_back(parse_polynomial(text.get<std::string>(), names));
      } catch (const std::runtime_error& e) {
        throw SchemaError(context + ": ideal generator '" + text.get<std::string>() +
                          "': " + e.what());
      }
    }
  try {
    return GradedRing::make(std::move(group), std::move(names), std::move(degrees),
                            std::move(ideal));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(context + ": " + e.what());
  }
}

SubmonoidHandle parse_submonoid(const ordered_json& j, const RingHandle& ring,
                                const std::string& name) {
  const std::string context = "submonoid " + name;
  std::vector<HomogeneousElement> gens;
  for (const auto& text : need(j, "generators", context)) {
    Polynomial p;
    try {
      p = ring->parse(text.get<std::string>());
    } catch (const std::runtime_error& e) {
      throw SchemaError(context + ": generator '" + text.get<std::string>() + "': " + e.what());
    }
    Homogeneity h = ring->homogeneity(p);
    if (h.kind != Homogeneity::Kind::homogeneous)
      throw SchemaError(context + ": generator '" + text.get<std::string>() +
                        "' is not homogeneous and nonzero");
    gens.push_back({std::move(p), h.degree});
  }

  std::vector<std::optional<Factorization>> facts;
  if (j.contains("factorizations")) {
    for (const auto& fj : j.at("factorizations")) {
      if (fj.is_null()) {
        facts.emplace_back(std::nullopt);
        continue;
      }
      Factorization f;
      if (fj.contains("unit")) {
        Polynomial u = ring->parse(fj.at("unit").get<std::string>());
        if (!u.is_constant() || u.is_zero())
          throw SchemaError(context + ": factorization unit must be a nonzero constant");
        f.unit = u.terms().begin()->second;
      }
      for (const auto& fp : need(fj, "factors", context)) {
        f.factors.push_back({ring->parse(fp.at(0).get<std::string>()), fp.at(1).get<unsigned>()});
      }
      facts.emplace_back(std::move(f));
    }
    if (facts.size() != gens.size())
      throw SchemaError(context + ": factorization list length does not match the generators");
  }
  try {
    return HomogeneousSubmonoid::make(ring, std::move(gens), std::move(facts));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(context + ": " + e.what());
  }
}

GradedModule parse_module(const ordered_json& j, const RingHandle& ring,
                          const std::string& name) {
  const std::string context = "module " + name;
  std::vector<GroupElement> degrees;
  for (const auto& d : need(j, "generator_degrees", context))
    degrees.push_back(parse_degree(d, ring->group(), context));
  std::vector<std::vector<Polynomial>> relations;
  if (j.contains("relations"))
    for (const auto& rel : j.at("relations")) {
      std::vector<Polynomial> row;
      for (const auto& text : rel) row.push_back(ring->parse(text.get<std::string>()));
      relations.push_back(std::move(row));
    }
  try {
    return GradedModule::make(ring, std::move(degrees), std::move(relations));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(context + ": " + e.what());
  }
}

}  // namespace

const SubmonoidHandle& ProblemDescription::submonoid(const std::string& name) const {
  auto it = submonoids.find(name);
  if (it == submonoids.end()) throw SchemaError("unknown submonoid '" + name + "'");
  return it->second;
}

const SubmonoidHandle& ProblemDescription::second_submonoid(const std::string& name) const {
  auto it = second_submonoids.find(name);
  if (it == second_submonoids.end())
    throw SchemaError("unknown submonoid '" + name + "' in the product block");
  return it->second;
}

RelevantFamily ProblemDescription::family_of() const {
  std::vector<SubmonoidHandle> members;
  for (const std::string& name : family) members.push_back(submonoid(name));
  try {
    return RelevantFamily::make(ring, std::move(members));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("family: ") + e.what());
  }
}

ProblemDescription parse_problem(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("syntax error: ") + e.what());
  }

  ProblemDescription doc;
  doc.raw = j;
  doc.digest = fnv1a_hex(json_text);
  doc.ring = parse_ring(need(j, "ring", "document"), "ring");

  if (j.contains("submonoids"))
    for (const auto& [name, body] : j.at("submonoids").items())
      doc.submonoids.emplace(name, parse_submonoid(body, doc.ring, name));

  if (j.contains("family"))
    for (const auto& name : j.at("family")) {
      std::string n = name.get<std::string>();
      if (!doc.submonoids.count(n)) throw SchemaError("family references unknown submonoid '" + n + "'");
      doc.family.push_back(n);
    }

  if (j.contains("modules"))
    for (const auto& [name, body] : j.at("modules").items())
      doc.modules.emplace(name, parse_module(body, doc.ring, name));

  if (j.contains("hom")) {
    const ordered_json& h = j.at("hom");
    RingHandle target = parse_ring(need(h, "target_ring", "hom"), "hom.target_ring");
    std::vector<Polynomial> images;
    for (const auto& text : need(h, "images", "hom"))
      images.push_back(target->parse(text.get<std::string>()));
    try {
      doc.hom = GradedRingHom::make(doc.ring, target, std::move(images));
    } catch (const std::invalid_argument& e) {
      throw SchemaError(std::string("hom: ") + e.what());
    }
  }

  if (j.contains("product")) {
    const ordered_json& p = j.at("product");
    doc.second_ring = parse_ring(need(p, "ring", "product"), "product.ring");
    if (p.contains("submonoids"))
      for (const auto& [name, body] : p.at("submonoids").items())
        doc.second_submonoids.emplace(name, parse_submonoid(body, doc.second_ring, name));
  }

  if (j.contains("options")) {
    const ordered_json& o = j.at("options");
    if (o.contains("seed")) doc.seed = o.at("seed").get<std::uint64_t>();
    if (o.contains("samples")) doc.samples = o.at("samples").get<unsigned>();
    if (o.contains("degree_bound")) doc.degree_bound = o.at("degree_bound").get<unsigned>();
  }
  return doc;
}

PotionElement parse_potion(const nlohmann::ordered_json& value, const SubmonoidHandle& sub) {
  Polynomial num = sub->ring()->parse(need(value, "num", "potion element").get<std::string>());
  std::vector<unsigned> witness;
  for (const auto& w : need(value, "witness", "potion element"))
    witness.push_back(w.get<unsigned>());
  if (witness.size() != sub->generators().size())
    throw SchemaError("potion element: witness length does not match the submonoid generators");
  HomogeneousElement den = sub->witness_product(witness);
  try {
    return make_potion(sub, den.degree, std::move(num), std::move(witness));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("potion element: ") + e.what());
  }
}

}  // namespace gradedproj
