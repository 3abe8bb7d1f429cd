#pragma once

#include <array>
#include <string>
#include <vector>

#include "ppforge/hireal.hpp"

namespace ppforge::appendix {

// One raw-table row:
//   P, k1, k2, [c0, c1, c2, c3, c4], approx
//   approx := ['-'] term (('+'|'-') term)* ;  term := int ['/' int] '/' Pi '^' int
struct ApproxTerm {
    BigRational u;  // signed coefficient
    long pi_exp;
};

struct AppendixRow {
    BigInt P;
    long k1 = 0, k2 = 0;
    std::array<BigInt, 5> vec;
    std::vector<ApproxTerm> approx;
    std::string approx_text;  // as printed (whitespace-normalized)
    long line_no = 0;
};

struct ParseDiagnostic {
    long line_no;
    std::string message;
};

struct ParseResult {
    std::vector<AppendixRow> rows;
    std::vector<ParseDiagnostic> errors;
};

// Parses corpus text; '#' starts a comment, blank lines ignored.
ParseResult parse_corpus(const std::string& text);
ParseResult parse_corpus_file(const std::string& path);

// Round-trips modulo whitespace with the corpus grammar.
std::string serialize_row(const AppendixRow& row);
std::string format_approx(const std::vector<ApproxTerm>& terms);

}  // namespace ppforge::appendix
