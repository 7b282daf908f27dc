#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "nrt/core.hpp"

namespace nrt {

/// A non-empty set of matrices sharing one space, kept sorted and
/// deduplicated so equality and serialization are canonical.
class Code {
  public:
    Code(Params params, std::vector<NrtMatrix> words);

    const Params& params() const { return params_; }
    const std::vector<NrtMatrix>& words() const { return words_; }
    std::size_t size() const { return words_.size(); }

    friend bool operator==(const Code& a, const Code& b) {
        return a.params_.same_space(b.params_) && a.words_ == b.words_;
    }

  private:
    Params params_;
    std::vector<NrtMatrix> words_;
};

/// R-balls around distinct codewords are pairwise disjoint.
bool is_packing(const Code& code, int R);

/// Every point of the space lies within R of some codeword; checked by full
/// enumeration, throws BudgetExceeded beyond budget points.
bool is_covering(const Code& code, int R, std::uint64_t budget);

/// Packing plus the counting identity |C| * |B(R)| = q^{s*r}; equivalent to
/// packing + covering but needs no space enumeration.
bool is_perfect(const Code& code, int R);

/// The s=1 construction: codewords (f(y), y) where y runs over all suffixes
/// of length r-R and f prescribes the R-prefix. Perfect for every f.
/// Requires s = 1 and 0 < R < r.
Code construct_s1(const Params& params,
                  const std::function<std::vector<int>(const std::vector<int>&)>& f);

/// Binary repetition code {0...0, 1...1} in the s x 1 space, s odd and >= 3;
/// perfect at R = (s-1)/2.
Code construct_repetition(int s);

/// Hamming code over Z_q (q prime) of order i >= 2: the kernel of an
/// i x s parity-check matrix whose columns are the pairwise linearly
/// independent nonzero vectors, with s = (q^i - 1)/(q - 1). Perfect at R = 1.
Code construct_hamming(int q, int i);

/// C' x Z_q^{s x h}: appends every possible s x h suffix to each codeword.
/// Requires C' perfect at its own radius R with R <= r.
Code lift_trivial(const Code& base, int h);

/// Assignment of an R-perfect code in the s x r space to every s x h suffix.
struct LiftMap {
    int h;
    std::map<NrtMatrix, Code> assignment;
};

/// C_f = {(c', c'') : c'' a suffix, c' in f(c'')}. Every assigned code is
/// verified R-perfect; the result is R-perfect in s x (r+h).
Code lift_general(const Params& base_params, const LiftMap& f);

/// Inverse of lifting: split each codeword after column r_prefix and group
/// by suffix. The input must be R-perfect with R <= r_prefix; every returned
/// code is verified R-perfect in the s x r_prefix space.
std::map<NrtMatrix, Code> project(const Code& code, int r_prefix);

}  // namespace nrt
