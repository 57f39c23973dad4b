#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gdstream/errors.hpp"

namespace gdstream {

enum class Method { gabe, maeve };

inline constexpr std::size_t kGabeDimension = 17;
inline constexpr std::size_t kMaeveDimension = 20;

constexpr std::size_t dimension(Method m) noexcept {
  return m == Method::gabe ? kGabeDimension : kMaeveDimension;
}

constexpr std::string_view to_string(Method m) noexcept { return m == Method::gabe ? "gabe" : "maeve"; }

inline std::optional<Method> parse_method(std::string_view s) {
  if (s == "gabe") return Method::gabe;
  if (s == "maeve") return Method::maeve;
  return std::nullopt;
}

struct DescriptorMeta {
  std::uint64_t graph_id = 0;
  std::uint64_t b = 0;  // budget used; 0 marks an exact (oracle) descriptor
  std::uint64_t seed = 0;
  std::uint64_t n = 0;
  std::uint64_t m = 0;

  friend bool operator==(const DescriptorMeta&, const DescriptorMeta&) = default;
};

// Fixed-length real vector summarising one graph.
struct Descriptor {
  Method method = Method::gabe;
  std::vector<double> values;
  DescriptorMeta meta;
  // Set when the graph was too small for the descriptor to carry
  // information (all-zero output). Not serialised.
  bool degenerate = false;

  void validate() const {
    if (values.size() != dimension(method)) {
      throw data_error(std::string(to_string(method)) + " descriptor must have " +
                       std::to_string(dimension(method)) + " values, got " + std::to_string(values.size()));
    }
  }
};

}  // namespace gdstream
