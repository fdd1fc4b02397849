#pragma once

#include <string>

#include "json.hpp"
#include "locring/quotient.hpp"

namespace locring {

/// {"source": {"p", "n", "field"}, "target": {...}, "sigma", "q_image"} with
/// polynomials in the canonical text form.
nlohmann::json morphism_to_json(const StabilizingMorphism& f);

/// Rebuilds the rings and reads the X-image without checking that the map is
/// well defined, so broken files can still be inspected. ParseError on a
/// malformed document.
StabilizingMorphism morphism_from_json(const nlohmann::json& j);

std::string morphism_to_json_text(const StabilizingMorphism& f, int indent = 2);
StabilizingMorphism morphism_from_json_text(const std::string& text);

}  // namespace locring
