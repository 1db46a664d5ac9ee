#pragma once

// JSON and DOT encodings. Every number is written as a decimal string.
//
//   spectrum:   {"entries": [{"count": "...", "order": "..."}, ...],
//                "exponent": "...", "group": "<spec>" | null}
//   descriptor: {"edges": [["a", "b"], ...], "exponent": "...",
//                "nodes": [{"count": "...", "order": "..."}, ...]}
//
// Orders ascend; descriptor edges are the covering pairs of the Hasse diagram.

#include <string>
#include <string_view>

#include <json.hpp>

#include "ordlat/elattice.hpp"
#include "ordlat/reconstruct.hpp"
#include "ordlat/spectra.hpp"

namespace ordlat {

nlohmann::json to_json(const OrderSpectrum& s);
nlohmann::json to_json(const ELatticeDescriptor& d);

// Accepts the spectrum schema; `group` and `exponent` are optional. Throws
// ParseError on malformed JSON or schema violations.
SpectrumCandidate candidate_from_json(std::string_view text);

std::string to_dot(const ELatticeDescriptor& d, const std::string& title);

// Canonical rendering: two-space indent, trailing newline.
std::string dump(const nlohmann::json& j);

}  // namespace ordlat
