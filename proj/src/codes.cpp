#include "nrt/codes.hpp"

#include <algorithm>
#include <stdexcept>

#include "nrt/certificates.hpp"
#include "nrt/decompose.hpp"
#include "nrt/enumerate.hpp"

namespace nrt {

Code::Code(Params params, std::vector<NrtMatrix> words)
    : params_(params), words_(std::move(words)) {
    if (words_.empty()) throw std::invalid_argument("Code: must be non-empty");
    for (const auto& w : words_)
        if (!w.params().same_space(params_))
            throw std::invalid_argument("Code: codeword from a different space");
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool is_packing(const Code& code, int R) {
    const auto& words = code.words();
    for (size_t i = 0; i < words.size(); ++i)
        for (size_t j = i + 1; j < words.size(); ++j)
            if (balls_intersect(words[i], words[j], R)) return false;
    return true;
}

bool is_covering(const Code& code, int R, std::uint64_t budget) {
    if (space_size(code.params()) > budget)
        throw BudgetExceeded("is_covering: space larger than budget");
    for (const auto& point : space(code.params())) {
        bool covered = false;
        for (const auto& w : code.words()) {
            if (distance(point, w) <= R) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

bool is_perfect(const Code& code, int R) {
    const Params& p = code.params();
    if (BigInt(code.size()) * ball_volume(p.q, p.s, p.r, R) != space_size(p)) return false;
    return is_packing(code, R);
}

namespace {

// Odometer over Z_q^len in lexicographic order; returns false after the last.
bool advance(std::vector<int>& digits, int q) {
    for (size_t k = digits.size(); k-- > 0;) {
        if (++digits[k] < q) return true;
        digits[k] = 0;
    }
    return false;
}

}  // namespace

Code construct_s1(const Params& params,
                  const std::function<std::vector<int>(const std::vector<int>&)>& f) {
    if (params.s != 1) throw std::invalid_argument("construct_s1: needs s = 1");
    if (params.R <= 0 || params.R >= params.r)
        throw std::invalid_argument("construct_s1: needs 0 < R < r");

    const int suffix_len = params.r - params.R;
    std::vector<NrtMatrix> words;
    std::vector<int> suffix(static_cast<size_t>(suffix_len), 0);
    do {
        std::vector<int> prefix = f(suffix);
        if (prefix.size() != static_cast<size_t>(params.R))
            throw std::invalid_argument("construct_s1: f(y) must have length R");
        for (int e : prefix)
            if (e < 0 || e >= params.q)
                throw std::invalid_argument("construct_s1: f(y) entry out of [0, q-1]");
        prefix.insert(prefix.end(), suffix.begin(), suffix.end());
        words.emplace_back(params, std::move(prefix));
    } while (advance(suffix, params.q));
    return Code(params, std::move(words));
}

Code construct_repetition(int s) {
    if (s % 2 == 0) throw std::invalid_argument("construct_repetition: s must be odd");
    if (s < 3) throw std::invalid_argument("construct_repetition: s = 1 gives only the whole space");
    const Params params(2, s, 1, (s - 1) / 2);
    std::vector<NrtMatrix> words{NrtMatrix::zero(params),
                                 NrtMatrix(params, std::vector<int>(static_cast<size_t>(s), 1))};
    return Code(params, std::move(words));
}

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

Code construct_hamming(int q, int i) {
    if (!is_prime(q)) throw std::invalid_argument("construct_hamming: q must be prime");
    if (i < 2) throw std::invalid_argument("construct_hamming: needs i >= 2");

    long long s_ll = 0, power = 1;
    for (int k = 0; k < i; ++k) {
        s_ll += power;
        power *= q;
    }
    if (s_ll > 1 << 20) throw std::invalid_argument("construct_hamming: s too large");
    const int s = static_cast<int>(s_ll);  // (q^i - 1)/(q - 1)

    // Columns: all nonzero vectors of Z_q^i whose first nonzero entry is 1,
    // one representative per line through the origin.
    std::vector<std::vector<int>> columns;
    std::vector<int> v(static_cast<size_t>(i), 0);
    while (advance(v, q)) {
        auto first_nonzero = std::find_if(v.begin(), v.end(), [](int e) { return e != 0; });
        if (*first_nonzero == 1) columns.push_back(v);
    }

    // Row-reduce H = (columns) over Z_q to read off the kernel.
    std::vector<std::vector<int>> H(static_cast<size_t>(i), std::vector<int>(static_cast<size_t>(s)));
    for (int row = 0; row < i; ++row)
        for (int col = 0; col < s; ++col)
            H[static_cast<size_t>(row)][static_cast<size_t>(col)] =
                columns[static_cast<size_t>(col)][static_cast<size_t>(row)];

    auto inverse_mod = [q](int a) {
        for (int x = 1; x < q; ++x)
            if (a * x % q == 1) return x;
        throw std::logic_error("inverse_mod: not invertible");
    };

    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < s && rank < i; ++col) {
        int pivot = -1;
        for (int row = rank; row < i; ++row)
            if (H[static_cast<size_t>(row)][static_cast<size_t>(col)] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) continue;
        std::swap(H[static_cast<size_t>(pivot)], H[static_cast<size_t>(rank)]);
        const int inv = inverse_mod(H[static_cast<size_t>(rank)][static_cast<size_t>(col)]);
        for (int c = 0; c < s; ++c)
            H[static_cast<size_t>(rank)][static_cast<size_t>(c)] =
                H[static_cast<size_t>(rank)][static_cast<size_t>(c)] * inv % q;
        for (int row = 0; row < i; ++row) {
            if (row == rank) continue;
            const int factor = H[static_cast<size_t>(row)][static_cast<size_t>(col)];
            if (factor == 0) continue;
            for (int c = 0; c < s; ++c) {
                int& e = H[static_cast<size_t>(row)][static_cast<size_t>(c)];
                e = (e - factor * H[static_cast<size_t>(rank)][static_cast<size_t>(c)] % q + q) % q;
            }
        }
        pivot_col.push_back(col);
        ++rank;
    }
    if (rank != i) throw std::logic_error("construct_hamming: parity-check matrix not full rank");

    std::vector<int> free_cols;
    for (int col = 0; col < s; ++col)
        if (std::find(pivot_col.begin(), pivot_col.end(), col) == pivot_col.end())
            free_cols.push_back(col);

    // One kernel basis vector per free column.
    std::vector<std::vector<int>> basis;
    for (int f : free_cols) {
        std::vector<int> x(static_cast<size_t>(s), 0);
        x[static_cast<size_t>(f)] = 1;
        for (int row = 0; row < i; ++row)
            x[static_cast<size_t>(pivot_col[static_cast<size_t>(row)])] =
                (q - H[static_cast<size_t>(row)][static_cast<size_t>(f)]) % q;
        basis.push_back(std::move(x));
    }

    const Params params(q, s, 1, 1);
    std::vector<NrtMatrix> words;
    std::vector<int> coeff(basis.size(), 0);
    do {
        std::vector<int> x(static_cast<size_t>(s), 0);
        for (size_t b = 0; b < basis.size(); ++b) {
            if (coeff[b] == 0) continue;
            for (int k = 0; k < s; ++k)
                x[static_cast<size_t>(k)] =
                    (x[static_cast<size_t>(k)] + coeff[b] * basis[b][static_cast<size_t>(k)]) % q;
        }
        words.emplace_back(params, std::move(x));
    } while (advance(coeff, q));
    return Code(params, std::move(words));
}

namespace {

NrtMatrix concat_columns(const NrtMatrix& prefix, const NrtMatrix& suffix, const Params& out) {
    std::vector<int> e;
    e.reserve(static_cast<size_t>(out.cells()));
    for (int i = 0; i < out.s; ++i) {
        auto a = prefix.row(i);
        auto b = suffix.row(i);
        e.insert(e.end(), a.begin(), a.end());
        e.insert(e.end(), b.begin(), b.end());
    }
    return NrtMatrix(out, std::move(e));
}

}  // namespace

Code lift_trivial(const Code& base, int h) {
    const Params& bp = base.params();
    if (h < 0) throw std::invalid_argument("lift_trivial: h must be >= 0");
    if (bp.R > bp.r) throw std::invalid_argument("lift_trivial: needs R <= r");
    if (!is_perfect(base, bp.R)) throw std::invalid_argument("lift_trivial: base code is not perfect");
    if (h == 0) return base;

    const Params out(bp.q, bp.s, bp.r + h, bp.R);
    const Params suffix_space(bp.q, bp.s, h, bp.R);
    std::vector<NrtMatrix> words;
    for (const auto& suffix : space(suffix_space))
        for (const auto& word : base.words()) words.push_back(concat_columns(word, suffix, out));
    return Code(out, std::move(words));
}

Code lift_general(const Params& base_params, const LiftMap& f) {
    if (f.h < 1) throw std::invalid_argument("lift_general: needs h >= 1");
    if (base_params.R > base_params.r) throw std::invalid_argument("lift_general: needs R <= r");

    const Params suffix_space(base_params.q, base_params.s, f.h, base_params.R);
    const Params out(base_params.q, base_params.s, base_params.r + f.h, base_params.R);
    std::vector<NrtMatrix> words;
    for (const auto& suffix : space(suffix_space)) {
        const auto it = f.assignment.find(suffix);
        if (it == f.assignment.end())
            throw std::invalid_argument("lift_general: assignment misses a suffix");
        if (!it->second.params().same_space(base_params))
            throw std::invalid_argument("lift_general: assigned code in wrong space");
        if (!is_perfect(it->second, base_params.R))
            throw std::invalid_argument("lift_general: assigned code is not perfect");
        for (const auto& word : it->second.words())
            words.push_back(concat_columns(word, suffix, out));
    }
    return Code(out, std::move(words));
}

std::map<NrtMatrix, Code> project(const Code& code, int r_prefix) {
    const Params& p = code.params();
    if (r_prefix <= 0 || r_prefix >= p.r)
        throw std::invalid_argument("project: split must be inside [1, r-1]");
    if (p.R > r_prefix) throw std::invalid_argument("project: needs R <= split");
    if (!is_perfect(code, p.R)) throw std::invalid_argument("project: code is not perfect");

    const int h = p.r - r_prefix;
    const Params prefix_space(p.q, p.s, r_prefix, p.R);
    const Params suffix_space(p.q, p.s, h, p.R);

    std::map<NrtMatrix, std::vector<NrtMatrix>> groups;
    for (const auto& word : code.words()) {
        std::vector<int> pre, suf;
        pre.reserve(static_cast<size_t>(prefix_space.cells()));
        suf.reserve(static_cast<size_t>(suffix_space.cells()));
        for (int i = 0; i < p.s; ++i) {
            auto row = word.row(i);
            pre.insert(pre.end(), row.begin(), row.begin() + r_prefix);
            suf.insert(suf.end(), row.begin() + r_prefix, row.end());
        }
        groups[NrtMatrix(suffix_space, std::move(suf))].emplace_back(prefix_space, std::move(pre));
    }

    if (BigInt(groups.size()) != space_size(suffix_space))
        throw std::logic_error("project: some suffix has no codewords");

    std::map<NrtMatrix, Code> out;
    for (auto& [suffix, prefixes] : groups) {
        Code piece(prefix_space, std::move(prefixes));
        if (!is_perfect(piece, p.R))
            throw std::logic_error("project: a suffix class is not perfect");
        out.emplace(suffix, std::move(piece));
    }
    return out;
}

}  // namespace nrt
