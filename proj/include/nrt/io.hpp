#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "nrt/codes.hpp"
#include "nrt/core.hpp"
#include "nrt/feasibility.hpp"

// On-disk code format and report rendering. A code file is one JSON document
//   {"codewords": [[digits...], ...], "format_version": 1, "q": .., "r": .., "s": ..}
// with each codeword a row-major list of s*r base-10 digits in [0, q-1],
// sorted lexicographically and duplicate-free. Serialization is canonical:
// reading and re-writing a valid file is the identity on bytes.

namespace nrt {

/// Malformed or non-canonical code file (usage-level error, CLI exit 2).
class CodeFileError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct CodeFile {
    int format_version = 1;
    int q = 2;
    int s = 1;
    int r = 1;
    std::vector<std::vector<int>> codewords;
};

CodeFile to_code_file(const Code& code);
/// Validates canonical form; R is supplied by the caller since radius is not
/// part of the file.
Code from_code_file(const CodeFile& file, int R);

std::string serialize_code_file(const CodeFile& file);
CodeFile parse_code_file(const std::string& text);

void write_code_file(const std::string& path, const CodeFile& file);
CodeFile read_code_file(const std::string& path);

/// "01/10/10" or "01 10 10" style: rows separated by '/' (or newlines), each
/// row either contiguous digits (q <= 10) or whitespace/comma-separated
/// numbers. Throws std::invalid_argument on shape or range errors.
NrtMatrix parse_matrix(const Params& params, const std::string& text);

/// One row as digits, contiguous when q <= 10, space-separated otherwise.
std::string format_row(std::span<const int> row, int q);
/// All rows joined with '/'.
std::string format_matrix(const NrtMatrix& x);

/// Fixed tab-separated verdict row: q s r R delta t outcome reason.
std::string render_verdict_machine(const Verdict& v);
/// Multi-line human report, including ball volume and divisibility.
std::string render_verdict_text(const Verdict& v);

/// Machine scan table: header line plus one render_verdict_machine row per
/// tuple. Byte-stable across runs.
std::string render_scan_machine(const std::vector<Verdict>& rows);
/// Aligned human-readable scan table.
std::string render_scan_text(const std::vector<Verdict>& rows);

}  // namespace nrt
