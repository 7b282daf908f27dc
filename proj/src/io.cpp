#include "nrt/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "nrt/enumerate.hpp"

namespace nrt {

using nlohmann::json;

CodeFile to_code_file(const Code& code) {
    CodeFile file;
    file.q = code.params().q;
    file.s = code.params().s;
    file.r = code.params().r;
    for (const auto& word : code.words())
        file.codewords.emplace_back(word.entries().begin(), word.entries().end());
    return file;
}

Code from_code_file(const CodeFile& file, int R) {
    const Params params(file.q, file.s, file.r, R);
    std::vector<NrtMatrix> words;
    words.reserve(file.codewords.size());
    for (const auto& digits : file.codewords) words.emplace_back(params, digits);
    return Code(params, std::move(words));
}

std::string serialize_code_file(const CodeFile& file) {
    json j;
    j["format_version"] = file.format_version;
    j["q"] = file.q;
    j["s"] = file.s;
    j["r"] = file.r;
    j["codewords"] = file.codewords;
    return j.dump() + "\n";
}

namespace {

int require_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw CodeFileError(std::string("code file: missing integer field '") + key + "'");
    return j[key].get<int>();
}

}  // namespace

CodeFile parse_code_file(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw CodeFileError(std::string("code file: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw CodeFileError("code file: top level must be an object");

    CodeFile file;
    file.format_version = require_int(j, "format_version");
    if (file.format_version != 1) throw CodeFileError("code file: unsupported format_version");
    file.q = require_int(j, "q");
    file.s = require_int(j, "s");
    file.r = require_int(j, "r");
    if (file.q < 2 || file.s < 1 || file.r < 1)
        throw CodeFileError("code file: q, s, r out of range");

    if (!j.contains("codewords") || !j["codewords"].is_array())
        throw CodeFileError("code file: missing codewords array");
    const size_t cells = static_cast<size_t>(file.s) * static_cast<size_t>(file.r);
    for (const auto& entry : j["codewords"]) {
        if (!entry.is_array()) throw CodeFileError("code file: codeword must be an array");
        std::vector<int> digits;
        for (const auto& d : entry) {
            if (!d.is_number_integer()) throw CodeFileError("code file: digit must be an integer");
            const int v = d.get<int>();
            if (v < 0 || v >= file.q) throw CodeFileError("code file: digit out of [0, q-1]");
            digits.push_back(v);
        }
        if (digits.size() != cells) throw CodeFileError("code file: codeword length is not s*r");
        file.codewords.push_back(std::move(digits));
    }
    if (file.codewords.empty()) throw CodeFileError("code file: no codewords");

    for (size_t k = 1; k < file.codewords.size(); ++k)
        if (file.codewords[k - 1] >= file.codewords[k])
            throw CodeFileError("code file: codewords must be sorted and duplicate-free");
    return file;
}

void write_code_file(const std::string& path, const CodeFile& file) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CodeFileError("cannot open for writing: " + path);
    out << serialize_code_file(file);
}

CodeFile read_code_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CodeFileError("cannot open: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_code_file(buffer.str());
}

NrtMatrix parse_matrix(const Params& params, const std::string& text) {
    std::vector<std::string> row_texts;
    std::string current;
    for (char c : text) {
        if (c == '/' || c == '\n') {
            row_texts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    if (!current.empty()) row_texts.push_back(current);
    if (row_texts.size() != static_cast<size_t>(params.s))
        throw std::invalid_argument("matrix: expected " + std::to_string(params.s) + " rows");

    std::vector<std::vector<int>> rows;
    for (const auto& rt : row_texts) {
        std::vector<int> row;
        if (rt.find(' ') != std::string::npos || rt.find(',') != std::string::npos) {
            std::string token;
            std::string normalized = rt;
            std::replace(normalized.begin(), normalized.end(), ',', ' ');
            std::istringstream tokens(normalized);
            while (tokens >> token) row.push_back(std::stoi(token));
        } else {
            for (char c : rt) {
                if (c < '0' || c > '9') throw std::invalid_argument("matrix: bad digit");
                row.push_back(c - '0');
            }
        }
        rows.push_back(std::move(row));
    }
    return NrtMatrix::from_rows(params, rows);  // range/shape checked there
}

std::string format_row(std::span<const int> row, int q) {
    std::string out;
    for (size_t k = 0; k < row.size(); ++k) {
        if (q > 10 && k > 0) out += ' ';
        out += std::to_string(row[k]);
    }
    return out;
}

std::string format_matrix(const NrtMatrix& x) {
    std::string out;
    for (int i = 0; i < x.rows(); ++i) {
        if (i > 0) out += '/';
        out += format_row(x.row(i), x.params().q);
    }
    return out;
}

std::string render_verdict_machine(const Verdict& v) {
    std::ostringstream out;
    out << v.params.q << '\t' << v.params.s << '\t' << v.params.r << '\t' << v.params.R << '\t'
        << v.params.delta() << '\t' << v.params.t() << '\t' << outcome_name(v.outcome) << '\t'
        << reason_name(v.reason);
    return out.str();
}

std::string render_verdict_text(const Verdict& v) {
    const Params& p = v.params;
    const BigInt volume = ball_volume(p);
    const BigInt total = space_size(p);
    std::ostringstream out;
    out << "parameters: q=" << p.q << " s=" << p.s << " r=" << p.r << " R=" << p.R << "\n"
        << "delta=" << p.delta() << " t=" << p.t() << "\n"
        << "ball volume |B(R)| = " << volume << ", space size q^(s*r) = " << total << "\n"
        << "divisibility: |B(R)| " << (total % volume == 0 ? "divides" : "does not divide")
        << " q^(s*r)\n"
        << "verdict: " << outcome_name(v.outcome) << " (" << reason_name(v.reason) << ")\n"
        << "  " << v.detail << "\n";
    if (v.nonexistence_reasons.size() > 1) {
        out << "  all applicable non-existence rules:";
        for (Reason reason : v.nonexistence_reasons) out << ' ' << reason_name(reason);
        out << "\n";
    }
    return out.str();
}

std::string render_scan_machine(const std::vector<Verdict>& rows) {
    std::string out = "q\ts\tr\tR\tdelta\tt\toutcome\treason\n";
    for (const auto& v : rows) out += render_verdict_machine(v) + "\n";
    return out;
}

std::string render_scan_text(const std::vector<Verdict>& rows) {
    std::ostringstream out;
    out << std::left << std::setw(4) << "q" << std::setw(4) << "s" << std::setw(4) << "r"
        << std::setw(4) << "R" << std::setw(7) << "delta" << std::setw(5) << "t" << std::setw(20)
        << "outcome" << "reason" << "\n";
    for (const auto& v : rows) {
        out << std::left << std::setw(4) << v.params.q << std::setw(4) << v.params.s
            << std::setw(4) << v.params.r << std::setw(4) << v.params.R << std::setw(7)
            << v.params.delta() << std::setw(5) << v.params.t() << std::setw(20)
            << outcome_name(v.outcome) << reason_name(v.reason) << "\n";
    }
    return out.str();
}

}  // namespace nrt
