#include "rtac/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rtac {

using ordered_json = nlohmann::ordered_json;

std::string to_json(const CspInstance& inst, const std::optional<GenConfig>& gen) {
  ordered_json doc;
  doc["n"] = inst.n();
  doc["d"] = inst.d();
  ordered_json constraints = ordered_json::array();
  for (const Constraint& c : inst.constraints()) {
    ordered_json allowed = ordered_json::array();
    for (const ValuePair& p : c.allowed) allowed.push_back({p.a, p.b});
    constraints.push_back({{"x", c.x}, {"y", c.y}, {"allowed", std::move(allowed)}});
  }
  doc["constraints"] = std::move(constraints);
  if (gen) {
    doc["gen"] = {{"n", gen->n},
                  {"d", gen->d},
                  {"density", gen->density},
                  {"tightness", gen->tightness},
                  {"seed", gen->seed},
                  {"prng", kPrngName}};
  }
  return doc.dump() + "\n";
}

namespace {

std::size_t read_index(const ordered_json& node, const char* what) {
  if (!node.is_number_integer() || node.get<long long>() < 0) {
    throw FormatError(std::string("instance: ") + what + " must be a non-negative integer");
  }
  return node.get<std::size_t>();
}

const ordered_json& field(const ordered_json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw FormatError(std::string("instance: missing field \"") + key + "\"");
  return *it;
}

GenConfig read_gen(const ordered_json& node) {
  if (!node.is_object()) throw FormatError("instance: \"gen\" must be an object");
  GenConfig cfg;
  cfg.n = read_index(field(node, "n"), "gen.n");
  cfg.d = read_index(field(node, "d"), "gen.d");
  const auto& density = field(node, "density");
  const auto& tightness = field(node, "tightness");
  const auto& seed = field(node, "seed");
  if (!density.is_number() || !tightness.is_number()) throw FormatError("instance: gen probabilities must be numbers");
  if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<long long>() >= 0)) {
    throw FormatError("instance: gen.seed must be a non-negative integer");
  }
  cfg.density = density.get<double>();
  cfg.tightness = tightness.get<double>();
  cfg.seed = seed.get<std::uint64_t>();
  if (auto prng = node.find("prng"); prng != node.end() && *prng != kPrngName) {
    throw FormatError("instance: unsupported prng " + prng->dump());
  }
  return cfg;
}

}  // namespace

InstanceDocument parse_instance(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw FormatError(std::string("instance: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("instance: top level must be an object");

  const std::size_t n = read_index(field(doc, "n"), "n");
  const std::size_t d = read_index(field(doc, "d"), "d");
  const auto& list = field(doc, "constraints");
  if (!list.is_array()) throw FormatError("instance: \"constraints\" must be an array");

  std::vector<Constraint> constraints;
  constraints.reserve(list.size());
  for (const auto& item : list) {
    if (!item.is_object()) throw FormatError("instance: constraint must be an object");
    Constraint c{read_index(field(item, "x"), "x"), read_index(field(item, "y"), "y"), {}};
    const auto& allowed = field(item, "allowed");
    if (!allowed.is_array()) throw FormatError("instance: \"allowed\" must be an array");
    for (const auto& pair : allowed) {
      if (!pair.is_array() || pair.size() != 2) throw FormatError("instance: allowed entries must be [a, b]");
      c.allowed.push_back({read_index(pair[0], "a"), read_index(pair[1], "b")});
    }
    constraints.push_back(std::move(c));
  }

  std::optional<GenConfig> gen;
  if (auto it = doc.find("gen"); it != doc.end()) gen = read_gen(*it);

  try {
    return InstanceDocument{CspInstance(n, d, std::move(constraints)), gen};
  } catch (const UsageError& e) {
    throw FormatError(std::string("instance: ") + e.what());
  }
}

InstanceDocument read_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

void write_instance_file(const std::filesystem::path& path, const CspInstance& inst,
                         const std::optional<GenConfig>& gen) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << to_json(inst, gen);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace rtac
