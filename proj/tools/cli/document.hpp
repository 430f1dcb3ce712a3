#pragma once

// JSON matrix documents: {"n": 2, "entries": [["0","1"],["1","0"]]} with
// every entry an exact rational string "p" or "p/q".

#include <string>
#include <string_view>

#include "tropsd/errors.hpp"
#include "tropsd/matrix.hpp"

namespace tropsd::cli {

class DocumentError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// Throws DocumentError on malformed JSON, a schema violation, a malformed
// rational or an asymmetric matrix.
SymMatrix parse_matrix_document(std::string_view json_text);

// Single-line canonical rendering (no trailing newline).
std::string render_matrix_document(const SymMatrix& a);

}  // namespace tropsd::cli
