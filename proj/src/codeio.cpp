#include "framed/codeio.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace framed {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Next line that is neither blank nor a comment.
bool next_data_line(std::istream& in, std::string& line, std::size_t& lineno) {
    std::string raw;
    while (std::getline(in, raw)) {
        ++lineno;
        line = trim(raw);
        if (!line.empty() && line[0] != '#') return true;
    }
    return false;
}

}  // namespace

CodeFile read_code(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    if (!next_data_line(in, line, lineno)) throw ParseError("code file has no header line");

    std::istringstream header(line);
    long long n = -1;
    long long k = -1;
    std::string extra;
    if (!(header >> n >> k) || (header >> extra) || n <= 0 || k < 0) {
        throw ParseError("line " + std::to_string(lineno) + ": expected \"n k\"");
    }
    if (static_cast<std::size_t>(n) > kMaxLength) {
        throw ParseError("line " + std::to_string(lineno) + ": length exceeds " + std::to_string(kMaxLength));
    }

    CodeFile out{LinearCode(static_cast<std::size_t>(n)), static_cast<std::size_t>(k)};
    for (long long i = 0; i < k; ++i) {
        if (!next_data_line(in, line, lineno)) {
            throw ParseError("expected " + std::to_string(k) + " rows, found " + std::to_string(i));
        }
        if (line.size() != static_cast<std::size_t>(n)) {
            throw ParseError("line " + std::to_string(lineno) + ": row has " + std::to_string(line.size()) +
                             " characters, expected " + std::to_string(n));
        }
        try {
            out.code.insert(Codeword::from_bits(line));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (next_data_line(in, line, lineno)) {
        throw ParseError("line " + std::to_string(lineno) + ": unexpected data after the last row");
    }
    return out;
}

CodeFile read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open code file " + path);
    try {
        return read_code(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_code(std::ostream& out, const LinearCode& c, std::string_view comment) {
    std::istringstream lines{std::string(comment)};
    std::string l;
    while (std::getline(lines, l)) out << "# " << l << '\n';
    out << c.length() << ' ' << c.dimension() << '\n';
    for (const auto& r : c.basis()) out << r.to_bits() << '\n';
}

void write_code_file(const std::string& path, const LinearCode& c, std::string_view comment) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write code file " + path);
    write_code(out, c, comment);
}

}  // namespace framed
