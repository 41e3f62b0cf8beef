#pragma once

#include "moduli/admissibility.hpp"
#include "moduli/cli/descriptor.hpp"
#include "moduli/cli/output.hpp"
#include "moduli/moduli.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace moduli::cli {

using Json = nlohmann::ordered_json;

/// Everything `check` and `dims` print.
struct CollectionDocument {
  std::string command;
  SurfaceDescriptor surface;
  Integer r;
  Integer m;
  AdmissibilityReport admissibility;
  std::optional<DimensionReport> dimensions;

  friend bool operator==(const CollectionDocument&, const CollectionDocument&) = default;
};

Json to_json(const SurfaceDescriptor& d);
SurfaceDescriptor descriptor_from_json(const Json& j);

Json to_json(const AdmissibilityReport& rep);
AdmissibilityReport admissibility_from_json(const Json& j);

Json to_json(const DimensionReport& rep);
DimensionReport dimensions_from_json(const Json& j);

/// Carries "format": "moduli-lab/1"; parsing rejects any other version.
Json to_json(const CollectionDocument& doc);
CollectionDocument document_from_json(const Json& j);

/// Two-column (field, value) view used for markdown and csv.
OutputTable document_table(const CollectionDocument& doc);

}  // namespace moduli::cli
