#pragma once

#include <string>
#include <vector>

#include "matspec/catalog.hpp"
#include "matspec/matrix.hpp"

namespace matspec {

// Matrices on the wire: either a row-major list of dim^2 [re, im] pairs,
// e.g. [[2,0]] for the 1x1 matrix 2, or {"dim": n, "entries": [[re, im], ...]}.
// A bare number is accepted as a 1x1 matrix. ParseError on anything else.
SquareMatrix parse_matrix(const std::string& json_text);
std::vector<SquareMatrix> parse_matrix_list(const std::string& json_text);
// Row-major [re, im] pairs, the shorthand form.
std::string matrix_to_json(const SquareMatrix& m);

// "re,im" or "re"
Complex parse_complex(const std::string& text);

// JSON object with any of seeds, dims, tolerances, truncationK, outputPath.
// Missing keys keep their defaults, unknown keys are rejected. ConfigError.
RunConfig parse_config(const std::string& json_text);
// Applies MATSPEC_SEED (if set) to the first seed. ConfigError when malformed.
void apply_seed_override(RunConfig& config, const char* env_value);

std::string read_file(const std::string& path);  // ConfigError if unreadable

}  // namespace matspec
