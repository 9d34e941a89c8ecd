#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "partialcramer/affine.hpp"
#include "partialcramer/cramer.hpp"
#include "partialcramer/models.hpp"

namespace cramer::io {

/// Parse one numeric literal under the given arithmetic. Rational mode
/// accepts integers and "p/q"; float mode accepts anything strtod does.
/// Throws Error (without a position; the file parsers attach one).
Scalar parse_scalar_literal(const std::string& token, ScalarKind kind);

std::string format_scalar(const Scalar& s);

/// System file, line oriented, '#' to end of line is a comment:
///
///   scalar rational      # optional: rational (default) | float
///   n 3
///   matrix
///   1 -1  0
///   0  1 -1
///   0  0  1
///   rhs 1/2 3 9
///
/// Throws ParseError with 1-based line/column on malformed input.
SystemSpec parse_system(const std::string& text);
SystemSpec load_system_file(const std::string& path);

/// Model file, JSON:
///
///   {"model": "chain", "masses": [1, 2, "7/2"], "acceleration": 2,
///    "scalar": "rational"}
ChainSpec parse_chain_model(const std::string& text);
ChainSpec load_model_file(const std::string& path);

/// One "xi = c·x'1 + ... + c·xk" line per map, 1-based labels, explicit
/// signs, zero terms omitted.
std::vector<std::string> format_affine(const AffineSolution& sol);

nlohmann::json scalar_to_json(const Scalar& s);
nlohmann::json affine_to_json(const AffineSolution& sol);
AffineSolution affine_from_json(const nlohmann::json& j);
nlohmann::json full_solution_to_json(const FullSolution& sol);
nlohmann::json trace_to_json(const EliminationTrace& trace);

}  // namespace cramer::io
