#pragma once

// Text code files: '#' comment lines, then "n k", then k rows of n characters from {0,1}.

#include <iosfwd>
#include <string>
#include <string_view>

#include "framed/gf2.hpp"

namespace framed {

struct CodeFile {
    LinearCode code;
    std::size_t declared_rows = 0;  // k as written; code.dimension() is the true rank
};

CodeFile read_code(std::istream& in);
CodeFile read_code_file(const std::string& path);

/// Writes the canonical basis, with optional leading comment lines.
void write_code(std::ostream& out, const LinearCode& c, std::string_view comment = {});
void write_code_file(const std::string& path, const LinearCode& c, std::string_view comment = {});

}  // namespace framed
