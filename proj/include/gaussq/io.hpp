#pragma once

// JSON documents exchanged with the command-line tool.

#include <json.hpp>

#include "gaussq/symplectic.hpp"
#include "gaussq/triangle.hpp"

namespace gaussq {

// {s, hbar, m: [...], alpha: [[...], ...]} over the canonical commutation
// matrix for s modes.
nlohmann::json state_to_json(const GaussianState& state);
// Throws InvalidArgument for malformed documents and whatever
// make_gaussian_state throws for invalid data.
GaussianState state_from_json(const nlohmann::json& doc);

// {N, k, entropies: {in, out, exch}, quantities: {mutual, loss, noise,
// coherent}, base}, values in t.base units.
nlohmann::json triangle_to_json(double n, double k, const InfoTriangle& t);

const char* base_name(LogBase base);

}  // namespace gaussq
