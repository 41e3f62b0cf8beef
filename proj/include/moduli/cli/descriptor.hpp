#pragma once

#include "moduli/integer.hpp"
#include "moduli/surface.hpp"

#include <map>
#include <optional>
#include <string>

namespace moduli::cli {

inline constexpr const char* kFormatVersion = "moduli-lab/1";

/// Flat key -> integer description of a surface. Files look like
///
///   moduli-lab/1
///   family = kod0
///   hsq = 4
///
/// with '#' comments and blank lines ignored.
struct SurfaceDescriptor {
  std::string family;
  std::map<std::string, Integer> params;
  std::optional<std::string> label;

  friend bool operator==(const SurfaceDescriptor&, const SurfaceDescriptor&) = default;
};

/// Strict decimal parse. Throws ModuliError(bad_input) naming `what`.
Integer parse_integer(const std::string& text, const std::string& what);

SurfaceDescriptor parse_descriptor(const std::string& text);
SurfaceDescriptor read_descriptor_file(const std::string& path);
std::string write_descriptor(const SurfaceDescriptor& d);

/// Checks the family tag and the key set, resolving the "k3" alias to kod0.
SurfaceDescriptor normalize(SurfaceDescriptor d);

SurfaceModel to_model(const SurfaceDescriptor& d);

}  // namespace moduli::cli
