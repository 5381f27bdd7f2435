#pragma once

#include <string>

#include "json.hpp"

#include "gevlab/field.hpp"
#include "gevlab/gevrey.hpp"
#include "gevlab/kernel.hpp"
#include "gevlab/quad.hpp"
#include "gevlab/stencil.hpp"

namespace gevlab {

using nlohmann::json;

// Shortest round-trip decimal formatting; the canonical float representation
// for CSV artifacts.
std::string format_double(double v);

// {"kind": "...", "params": {...}, "children": [...]}
ScalarField field_from_json(const json& descriptor);

// {"kind": "fractional"|"perturbed"|..., "n": int, "s": real, ...}
Kernel kernel_from_json(const json& descriptor);

json to_json(const Stencil& st);
json to_json(const OperatorValue& v);
json to_json(const NormLadder& lad);
json to_json(const GevreyFit& fit);
json to_json(const ProximityReport& rep);
json to_json(const EnvelopeGrowth& g);
json to_json(const KernelReport& rep);
json to_json(const ClosureResult& res);

}  // namespace gevlab
