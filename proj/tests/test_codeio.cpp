#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "framed/codeio.hpp"
#include "oracle.hpp"

using namespace framed;

namespace {

CodeFile parse(const std::string& text) {
    std::istringstream in(text);
    return read_code(in);
}

}  // namespace

TEST_CASE("reading code files") {
    const CodeFile f = parse("# a comment\n\n4 3\n1100\n  1100  \n# between rows\n0011\n");
    CHECK(f.declared_rows == 3);
    CHECK(f.code.dimension() == 2);  // rank below the declared row count
    CHECK(f.code == LinearCode::from_generators(4, {Codeword::from_bits("1100"), Codeword::from_bits("0011")}));

    CHECK(parse("3 0\n").code.dimension() == 0);
}

TEST_CASE("malformed code files") {
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("# only comments\n"), ParseError);
    CHECK_THROWS_AS(parse("4\n1100\n"), ParseError);
    CHECK_THROWS_AS(parse("4 1 7\n1100\n"), ParseError);
    CHECK_THROWS_AS(parse("0 0\n"), ParseError);
    CHECK_THROWS_AS(parse("4 2\n1100\n"), ParseError);         // too few rows
    CHECK_THROWS_AS(parse("4 1\n110\n"), ParseError);          // short row
    CHECK_THROWS_AS(parse("4 1\n1120\n"), ParseError);         // bad character
    CHECK_THROWS_AS(parse("4 1\n1100\n0011\n"), ParseError);   // trailing data
    CHECK_THROWS_AS(parse("2000 0\n"), ParseError);            // beyond the length limit
    CHECK_THROWS_AS(read_code_file("/nonexistent/code/file"), ParseError);
    try {
        parse("4 2\n1100\n11x0\n");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("write then read round trip") {
    std::mt19937_64 rng(81);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 1 + rng() % 40;
        const LinearCode c = oracle::random_code(rng, n, rng() % (n + 1));
        std::ostringstream out;
        write_code(out, c, "random code\nsecond line");
        const std::string text = out.str();
        CHECK(text.rfind("# random code\n# second line\n", 0) == 0);
        const CodeFile back = parse(text);
        CHECK(back.code == c);
        CHECK(back.declared_rows == c.dimension());
    }
    const auto path = std::filesystem::temp_directory_path() / "framed_codeio_test.code";
    const LinearCode rm = reed_muller(1, 4);
    write_code_file(path.string(), rm);
    CHECK(read_code_file(path.string()).code == rm);
    std::filesystem::remove(path);
}
