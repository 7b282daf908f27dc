// nrtcodes: perfect codes in NRT spaces from the command line.
//
// Subcommands: verdict, scan, ball, decompose, sticky, search, verify, lift.
// Exit codes: 0 success / definite positive, 1 definite negative,
// 2 usage or malformed input, 3 aborted (budget exceeded).

#include <CLI11.hpp>
#include <iostream>
#include <random>
#include <string>

#include "nrt/certificates.hpp"
#include "nrt/codes.hpp"
#include "nrt/decompose.hpp"
#include "nrt/enumerate.hpp"
#include "nrt/feasibility.hpp"
#include "nrt/io.hpp"
#include "nrt/search.hpp"

namespace {

using namespace nrt;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitAborted = 3;

struct ParamFlags {
    int q = 2, s = 1, r = 1, R = 0;
    Params make() const { return Params(q, s, r, R); }
};

void add_param_flags(CLI::App* cmd, ParamFlags& flags, bool with_q = true) {
    if (with_q) cmd->add_option("--q", flags.q, "alphabet size (>= 2)")->required();
    cmd->add_option("--s", flags.s, "number of rows/chains")->required();
    cmd->add_option("--r", flags.r, "chain length (columns)")->required();
    cmd->add_option("--R", flags.R, "radius")->required();
}

int cmd_verdict(const ParamFlags& flags, const std::string& format) {
    const Verdict v = verdict(flags.make());
    if (format == "machine")
        std::cout << render_verdict_machine(v) << "\n";
    else
        std::cout << render_verdict_text(v);
    return kExitTrue;
}

int cmd_scan(int q, int s_max, int r_max, int R_max, const std::string& format) {
    const auto rows = scan(q, s_max, r_max, R_max);
    std::cout << (format == "machine" ? render_scan_machine(rows) : render_scan_text(rows));
    return kExitTrue;
}

int cmd_ball(const ParamFlags& flags) {
    std::cout << ball_volume(flags.make()) << "\n";
    return kExitTrue;
}

int cmd_decompose(const ParamFlags& flags, const std::string& matrix_text) {
    const Params params = flags.make();
    const NrtMatrix x = parse_matrix(params, matrix_text);
    const auto witness = decompose(x, params.R);
    if (!witness) {
        std::cout << "indecomposable\n";
        return kExitFalse;
    }
    auto show = [](const std::vector<int>& side) {
        std::string out = "{";
        for (size_t k = 0; k < side.size(); ++k)
            out += (k ? "," : "") + std::to_string(side[k] + 1);  // 1-based rows
        return out + "}";
    };
    int w_i = 0, w_j = 0;
    const auto profile = row_weight_profile(x);
    for (int i : witness->I) w_i += profile[static_cast<size_t>(i)];
    for (int j : witness->J) w_j += profile[static_cast<size_t>(j)];
    std::cout << "decomposable: I=" << show(witness->I) << " w=" << w_i << ", J="
              << show(witness->J) << " w=" << w_j << "\n";
    return kExitTrue;
}

int cmd_sticky(const ParamFlags& flags, bool verify, std::uint64_t budget) {
    const Params params = flags.make();
    const long long d = params.delta();
    if (d < 0) {
        std::cout << "no certificate: the ball B(R) is R-closed when delta <= 0 (delta=" << d
                  << ")\n";
        return kExitFalse;
    }

    if (d >= 1) {
        const auto cert = build_sticky_vector(params);
        std::cout << "sticky vector certificate (delta=" << d << ", t=" << params.t()
                  << ", ell=" << cert.ell << ", h=" << cert.h << ")\n"
                  << "m:\n";
        for (int i = 0; i < params.s; ++i)
            std::cout << format_row(cert.m.row(i), params.q) << "\n";
        if (verify) {
            const bool ok = verify_sticky_vector(cert, budget);
            std::cout << "exhaustive verification at q=" << params.q << ": "
                      << (ok ? "true" : "FALSE") << "\n";
            return ok ? kExitTrue : kExitFalse;
        }
        return kExitTrue;
    }

    const auto cert = build_sticky_set(params);
    std::cout << "sticky set certificate (delta=0, t=" << params.t() << ")\n" << "m:\n";
    for (int i = 0; i < params.s; ++i) std::cout << format_row(cert.m.row(i), params.q) << "\n";
    std::cout << "m' (cyclic row shift):\n";
    for (int i = 0; i < params.s; ++i)
        std::cout << format_row(cert.m_shift.row(i), params.q) << "\n";
    if (verify) {
        const bool ok = verify_sticky_set(cert, budget);
        std::cout << "exhaustive verification at q=" << params.q << ": "
                  << (ok ? "true" : "FALSE") << "\n";
        return ok ? kExitTrue : kExitFalse;
    }
    return kExitTrue;
}

int cmd_search(const ParamFlags& flags, std::uint64_t max_nodes, int threads,
               const std::string& out_path, bool ignore_verdict) {
    const Params params = flags.make();
    if (!ignore_verdict) {
        const Verdict v = verdict(params);
        if (v.outcome == Outcome::Nonexistent) {
            std::cout << "search skipped: verdict Nonexistent (" << reason_name(v.reason)
                      << "); pass --ignore-verdict to search anyway\n";
            return kExitFalse;
        }
    }

    SearchConfig config;
    config.max_nodes = max_nodes;
    config.parallel_width = threads;
    const SearchOutcome outcome = search_perfect(params, config);

    switch (outcome.status) {
        case SearchStatus::Found: {
            std::cout << "found perfect code, |C| = " << outcome.code->size()
                      << " (nodes explored: " << outcome.nodes_explored << ")\n";
            if (!out_path.empty()) {
                write_code_file(out_path, to_code_file(*outcome.code));
                std::cout << "wrote " << out_path << "\n";
            }
            return kExitTrue;
        }
        case SearchStatus::ExhaustedNone:
            std::cout << "no perfect code exists: search space exhausted (nodes explored: "
                      << outcome.nodes_explored << ")\n";
            return kExitFalse;
        case SearchStatus::Aborted:
            std::cout << "undecided: node budget exhausted after " << outcome.nodes_explored
                      << " nodes\n";
            return kExitAborted;
    }
    return kExitUsage;
}

int cmd_verify(const std::string& path, int R, bool full_covering, std::uint64_t budget) {
    const CodeFile file = read_code_file(path);
    const Code code = from_code_file(file, R);
    const Params& p = code.params();

    const bool packing = is_packing(code, R);
    const BigInt lhs = BigInt(code.size()) * ball_volume(p);
    const BigInt rhs = space_size(p);
    std::cout << "codewords: " << code.size() << "\n"
              << "packing at R=" << R << ": " << (packing ? "yes" : "NO") << "\n"
              << "counting: |C| * |B(R)| = " << lhs << " vs q^(s*r) = " << rhs << " ("
              << (lhs == rhs ? "equal" : "NOT equal") << ")\n";
    bool perfect = packing && lhs == rhs;
    if (full_covering) {
        const bool covering = is_covering(code, R, budget);
        std::cout << "covering (enumerated): " << (covering ? "yes" : "NO") << "\n";
        perfect = perfect && covering;
    }
    std::cout << "perfect: " << (perfect ? "yes" : "NO") << "\n";
    return perfect ? kExitTrue : kExitFalse;
}

int cmd_lift(const std::string& path, int R, int h, std::uint64_t seed,
             const std::string& out_path) {
    const CodeFile file = read_code_file(path);
    const Code base = from_code_file(file, R);
    const Params& bp = base.params();

    // A lift map over verified translates: each suffix gets the base code
    // shifted by a seeded pseudo-random offset (translates stay perfect).
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> digit(0, bp.q - 1);
    LiftMap map;
    map.h = h;
    const Params suffix_space(bp.q, bp.s, h, bp.R);
    for (const auto& suffix : space(suffix_space)) {
        std::vector<int> offset(static_cast<size_t>(bp.cells()));
        for (auto& e : offset) e = digit(rng);
        const NrtMatrix z(bp, offset);
        std::vector<NrtMatrix> shifted;
        shifted.reserve(base.size());
        for (const auto& word : base.words()) shifted.push_back(translate(word, z));
        map.assignment.emplace(suffix, Code(bp, std::move(shifted)));
    }

    const Code lifted = lift_general(bp, map);
    if (!is_perfect(lifted, bp.R)) {
        std::cout << "lift failed verification\n";
        return kExitFalse;
    }
    std::cout << "lifted code is perfect, |C| = " << lifted.size() << " in q=" << bp.q
              << " s=" << bp.s << " r=" << bp.r + h << "\n";
    if (!out_path.empty()) {
        write_code_file(out_path, to_code_file(lifted));
        std::cout << "wrote " << out_path << "\n";
    }
    return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"perfect codes in NRT metric spaces: verdicts, certificates, search"};
    app.require_subcommand(1);
    // keep -h free: the lift subcommand takes --h as the suffix width
    app.set_help_flag("--help", "print help");

    ParamFlags pf;
    std::string format = "text";
    std::string matrix_text;
    std::string code_path;
    std::string out_path;
    std::uint64_t budget = 10'000'000;
    std::uint64_t max_nodes = 10'000'000;
    std::uint64_t seed = 0;
    int threads = 1;
    int split_R = 0;
    int lift_h = 1;
    bool verify_flag = false;
    bool ignore_verdict = false;
    bool full_covering = false;

    auto* verdict_cmd = app.add_subcommand("verdict", "classify a parameter tuple");
    add_param_flags(verdict_cmd, pf);
    verdict_cmd->add_option("--format", format, "text|machine")
        ->check(CLI::IsMember({"text", "machine"}));

    int s_max = 1, r_max = 1, R_max = 1;
    auto* scan_cmd = app.add_subcommand("scan", "verdict table over a parameter box");
    scan_cmd->add_option("--q", pf.q)->required();
    scan_cmd->add_option("--s-max", s_max)->required();
    scan_cmd->add_option("--r-max", r_max)->required();
    scan_cmd->add_option("--R-max", R_max)->required();
    scan_cmd->add_option("--format", format, "text|machine")
        ->check(CLI::IsMember({"text", "machine"}));

    auto* ball_cmd = app.add_subcommand("ball", "exact ball volume |B(R)|");
    add_param_flags(ball_cmd, pf);

    auto* dec_cmd = app.add_subcommand("decompose", "R-decomposability witness for a matrix");
    add_param_flags(dec_cmd, pf);
    dec_cmd->add_option("--matrix", matrix_text, "rows separated by '/', e.g. 01/10/10")
        ->required();

    auto* sticky_cmd = app.add_subcommand("sticky", "non-existence certificate for delta >= 0");
    sticky_cmd->add_option("--s", pf.s)->required();
    sticky_cmd->add_option("--r", pf.r)->required();
    sticky_cmd->add_option("--R", pf.R)->required();
    sticky_cmd->add_option("--q", pf.q, "alphabet for verification (default 2)");
    sticky_cmd->add_flag("--verify", verify_flag, "exhaustively verify the certificate");
    sticky_cmd->add_option("--budget", budget, "max enumerated points during verification");

    auto* search_cmd = app.add_subcommand("search", "exhaustive perfect-code search");
    add_param_flags(search_cmd, pf);
    search_cmd->add_option("--max-nodes", max_nodes, "node budget");
    search_cmd->add_option("--threads", threads, "branch-parallel workers");
    search_cmd->add_option("--out", out_path, "write found code to this file");
    search_cmd->add_flag("--ignore-verdict", ignore_verdict,
                         "search even when the verdict says Nonexistent");

    auto* verify_cmd = app.add_subcommand("verify", "check a code file for perfection");
    verify_cmd->add_option("--code", code_path, "code file (JSON)")->required();
    verify_cmd->add_option("--R", split_R, "radius to verify at")->required();
    verify_cmd->add_flag("--full-covering", full_covering, "also enumerate the covering check");
    verify_cmd->add_option("--budget", budget, "max enumerated points for covering");

    auto* lift_cmd = app.add_subcommand("lift", "lift a perfect code to a wider space");
    lift_cmd->add_option("--code", code_path, "base code file (JSON)")->required();
    lift_cmd->add_option("--R", split_R, "radius of the base code")->required();
    lift_cmd->add_option("--h", lift_h, "suffix width to append")->required();
    lift_cmd->add_option("--seed", seed, "seed for the randomized lift map");
    lift_cmd->add_option("--out", out_path, "write lifted code to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(verdict_cmd)) return cmd_verdict(pf, format);
        if (app.got_subcommand(scan_cmd)) return cmd_scan(pf.q, s_max, r_max, R_max, format);
        if (app.got_subcommand(ball_cmd)) return cmd_ball(pf);
        if (app.got_subcommand(dec_cmd)) return cmd_decompose(pf, matrix_text);
        if (app.got_subcommand(sticky_cmd)) return cmd_sticky(pf, verify_flag, budget);
        if (app.got_subcommand(search_cmd))
            return cmd_search(pf, max_nodes, threads, out_path, ignore_verdict);
        if (app.got_subcommand(verify_cmd))
            return cmd_verify(code_path, split_R, full_covering, budget);
        if (app.got_subcommand(lift_cmd)) return cmd_lift(code_path, split_R, lift_h, seed, out_path);
    } catch (const BudgetExceeded& e) {
        std::cerr << "aborted: " << e.what() << "\n";
        return kExitAborted;
    } catch (const CodeFileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
