#pragma once

#include <json.hpp>
#include <map>
#include <optional>
#include <string>

#include "gradedproj/graded_module.hpp"

namespace gradedproj {

// Raised for malformed or semantically invalid input documents; the message
// names the offending entity.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fully validated input document: the ring, named submonoids, the declared
// family, modules, an optional homomorphism and an optional second ring for
// product commands.
struct ProblemDescription {
  nlohmann::ordered_json raw;
  std::string digest;  // content hash of the input text

  RingHandle ring;
  std::map<std::string, SubmonoidHandle> submonoids;
  std::vector<std::string> family;
  std::map<std::string, GradedModule> modules;
  std::optional<GradedRingHom> hom;

  RingHandle second_ring;  // product block, null when absent
  std::map<std::string, SubmonoidHandle> second_submonoids;

  std::uint64_t seed = 0;
  unsigned samples = 20;
  unsigned degree_bound = 12;

  const SubmonoidHandle& submonoid(const std::string& name) const;
  const SubmonoidHandle& second_submonoid(const std::string& name) const;
  RelevantFamily family_of() const;
};

ProblemDescription parse_problem(const std::string& json_text);

// Builds a potion element from {"num": <poly>, "witness": [..]} over sub.
PotionElement parse_potion(const nlohmann::ordered_json& value, const SubmonoidHandle& sub);

}  // namespace gradedproj
