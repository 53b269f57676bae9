#pragma once

#include <string>
#include <vector>

#include "ecvet/curvefile.hpp"

namespace ecvet {

enum class Provenance { PaperFixture, UserSupplied };

struct RegistryEntry {
  CurveFile file;
  Provenance provenance = Provenance::PaperFixture;
};

// Built-in fixtures: KG256r1 and KG384r1 with their published orders, twist
// orders, attested embedding degrees and CM discriminants, partial n-1
// factorizations, and seed attestations; plus the three strength-trial
// curves, published parameters-only (no order).
const std::vector<RegistryEntry>& registry();

std::vector<std::string> registry_names();

// Throws std::out_of_range for unknown names.
const RegistryEntry& registry_get(const std::string& name);

}  // namespace ecvet
