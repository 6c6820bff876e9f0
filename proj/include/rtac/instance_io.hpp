#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rtac/csp.hpp"
#include "rtac/instance_gen.hpp"

namespace rtac {

/// Malformed instance document.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InstanceDocument {
  CspInstance instance;
  std::optional<GenConfig> gen;
};

/// Compact single-line JSON, newline-terminated:
///   {"n":..,"d":..,"constraints":[{"x":..,"y":..,"allowed":[[a,b],..]},..],"gen":{..}}
/// Constraints and pairs are in ascending order, so equal instances serialize
/// to identical bytes.
std::string to_json(const CspInstance& inst, const std::optional<GenConfig>& gen = std::nullopt);

/// Throws FormatError on malformed JSON or an invalid instance.
InstanceDocument parse_instance(std::string_view text);

InstanceDocument read_instance_file(const std::filesystem::path& path);
void write_instance_file(const std::filesystem::path& path, const CspInstance& inst,
                         const std::optional<GenConfig>& gen = std::nullopt);

}  // namespace rtac
