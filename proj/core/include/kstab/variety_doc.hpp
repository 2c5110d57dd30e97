#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kstab/cone_variety.hpp"

namespace kstab {

/// Declarative description of a user-supplied polarized cone: variable
/// names, the r x N weight matrix, the monomial support of the defining
/// polynomial (empty for ambient space), optional degeneration weight
/// vectors, a normality assertion covering them, and an optional starting
/// point in the Reeb cone (required when the tool cannot find one by a small
/// lattice search).
struct VarietyDocument {
  std::string name;
  ConeVariety variety;
  std::vector<std::vector<BigInt>> degenerations;
  bool assume_normal = false;
  std::optional<ReebVector> reeb_point;
};

/// Parses the JSON document format. Throws PreconditionError with a message
/// naming the offending field.
VarietyDocument parse_variety_document(const std::string& json_text);

/// A point of the open Reeb cone found by searching a small integer box, or
/// nullopt. Rank <= 4 and coordinates up to +-8 are tried.
std::optional<ReebVector> find_reeb_vector(const ConeVariety& v);

}  // namespace kstab
