#pragma once

#include <string>

#include "digspec/digraph.hpp"
#include "digspec/eigen.hpp"
#include "digspec/matrix.hpp"

namespace digspec {

// Text digraph format: first significant line is the vertex count, then one
// "u v" arc per line. Blank lines and '#' comments are ignored. Files whose
// first significant character is '{' are parsed as JSON
// {"n": int, "arcs": [[u, v], ...]}.
Digraph read_digraph_file(const std::string& path);
Digraph parse_digraph_text(const std::string& text, const std::string& origin);

void write_digraph_file(const std::string& path, const Digraph& g, const std::string& header_comment = "");
std::string digraph_to_text(const Digraph& g, const std::string& header_comment = "");

// Matrix format: "rows cols" then entries in row-major order, '#' comments.
Matrix read_matrix_file(const std::string& path);
Matrix parse_matrix_text(const std::string& text, const std::string& origin);

// Spectrum as a JSON array [{re, im, mult}, ...] string fragment and as CSV
// "re,im,mult" rows.
std::string spectrum_to_json(const Spectrum& s, int indent = -1);
std::string spectrum_to_csv(const Spectrum& s);

}  // namespace digspec
