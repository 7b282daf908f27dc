#include "nrt/search.hpp"

#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "nrt/decompose.hpp"
#include "nrt/enumerate.hpp"

namespace nrt {

namespace {

struct Problem {
    Params params;
    std::uint64_t n_points;
    std::uint64_t ball_points;
    std::uint64_t target_words;
    std::vector<NrtMatrix> offsets;  // B(R) around zero, deterministic order
};

enum class Step { Found, Exhausted, Aborted };

class Worker {
  public:
    Worker(const Problem& prob, const SearchConfig& config, std::atomic<std::uint64_t>& nodes,
           std::atomic<bool>& stop)
        : covered_(prob.n_points, 0), prob_(prob), config_(config), nodes_(nodes), stop_(stop) {}

    std::vector<std::uint8_t> covered_;
    std::vector<NrtMatrix> chosen_;
    std::uint64_t covered_count_ = 0;
    std::uint64_t scan_from_ = 0;

    void place(const NrtMatrix& center) {
        chosen_.push_back(center);
        for (const auto& off : prob_.offsets) {
            const std::uint64_t idx = encode_index(translate(center, off));
            if (!covered_[idx]) {
                covered_[idx] = 1;
                ++covered_count_;
            }
        }
        if (config_.validate_steps) validate_packing();
    }

    // Chosen balls are disjoint, so unmarking the whole ball is exact.
    void unplace(const NrtMatrix& center) {
        chosen_.pop_back();
        for (const auto& off : prob_.offsets) {
            covered_[encode_index(translate(center, off))] = 0;
            --covered_count_;
        }
    }

    bool disjoint_from_chosen(const NrtMatrix& center) const {
        for (const auto& word : chosen_)
            if (balls_intersect(center, word, prob_.params.R)) return false;
        return true;
    }

    Step solve() {
        if (stop_.load(std::memory_order_relaxed)) return Step::Aborted;
        if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > config_.max_nodes)
            return Step::Aborted;

        std::uint64_t point = scan_from_;
        while (point < prob_.n_points && covered_[point]) ++point;
        if (point == prob_.n_points) return Step::Found;

        const std::uint64_t remaining = prob_.target_words - chosen_.size();
        if (greedy_cover_lower_bound(prob_.n_points - covered_count_, prob_.ball_points) > remaining)
            return Step::Exhausted;

        const std::uint64_t saved_scan = scan_from_;
        scan_from_ = point;
        const NrtMatrix p = decode_index(prob_.params, point);
        bool aborted = false;
        for (const auto& off : prob_.offsets) {
            const NrtMatrix center = translate(p, off);
            if (!disjoint_from_chosen(center)) continue;
            place(center);
            const Step step = solve();
            if (step == Step::Found) return Step::Found;
            unplace(center);
            if (step == Step::Aborted) {
                aborted = true;
                break;
            }
        }
        scan_from_ = saved_scan;
        return aborted ? Step::Aborted : Step::Exhausted;
    }

  private:
    const Problem& prob_;
    const SearchConfig& config_;
    std::atomic<std::uint64_t>& nodes_;
    std::atomic<bool>& stop_;

    void validate_packing() const {
        for (size_t i = 0; i < chosen_.size(); ++i)
            for (size_t j = i + 1; j < chosen_.size(); ++j)
                if (balls_intersect(chosen_[i], chosen_[j], prob_.params.R))
                    throw std::logic_error("search invariant broken: chosen balls intersect");
    }
};

SearchOutcome finish(const Problem& prob, Step step, std::vector<NrtMatrix> words,
                     std::uint64_t nodes) {
    if (step == Step::Found) {
        Code code(prob.params, std::move(words));
        if (!is_perfect(code, prob.params.R))
            throw std::logic_error("search produced a non-perfect code");
        return {SearchStatus::Found, std::move(code), nodes};
    }
    return {step == Step::Aborted ? SearchStatus::Aborted : SearchStatus::ExhaustedNone,
            std::nullopt, nodes};
}

}  // namespace

std::uint64_t greedy_cover_lower_bound(std::uint64_t uncovered_points, std::uint64_t ball_points) {
    return (uncovered_points + ball_points - 1) / ball_points;
}

std::uint64_t greedy_cover_lower_bound(const Params& params) {
    return greedy_cover_lower_bound(space_size_u64(params),
                                    ball_volume(params).convert_to<std::uint64_t>());
}

SearchOutcome search_perfect(const Params& params, const SearchConfig& config) {
    if (config.max_nodes == 0 || config.parallel_width < 1)
        throw std::invalid_argument("search_perfect: budgets must be positive");

    const std::uint64_t n = space_size_u64(params);
    const BigInt volume_big = ball_volume(params);
    if (space_size(params) % volume_big != 0) return {SearchStatus::ExhaustedNone, std::nullopt, 0};

    Problem prob{params, n, volume_big.convert_to<std::uint64_t>(),
                 n / volume_big.convert_to<std::uint64_t>(), ball_offsets(params, params.R)};

    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};

    // Roots: either the normalized 0 in C, or every center covering point 0.
    std::vector<NrtMatrix> roots;
    if (config.use_symmetry) {
        roots.push_back(NrtMatrix::zero(params));
    } else {
        const NrtMatrix origin = NrtMatrix::zero(params);
        for (const auto& off : prob.offsets) roots.push_back(translate(origin, off));
    }

    if (config.parallel_width == 1) {
        Worker worker(prob, config, nodes, stop);
        Step last = Step::Exhausted;
        for (const auto& root : roots) {
            worker.place(root);
            last = worker.solve();
            if (last == Step::Found)
                return finish(prob, last, worker.chosen_, nodes.load());
            worker.unplace(root);
            if (last == Step::Aborted) break;
        }
        return finish(prob, last, {}, nodes.load());
    }

    // Branch-parallel mode: expand one level below each root, then shard the
    // resulting branches round-robin across workers. Status aggregation is
    // order-independent; which found code wins the race is not.
    struct Branch {
        std::vector<NrtMatrix> prefix;
    };
    std::vector<Branch> branches;
    {
        Worker probe(prob, config, nodes, stop);
        for (const auto& root : roots) {
            probe.place(root);
            std::uint64_t point = 0;
            while (point < prob.n_points && probe.covered_[point]) ++point;
            if (point == prob.n_points) {
                return finish(prob, Step::Found, {root}, nodes.load());
            }
            const NrtMatrix p = decode_index(params, point);
            for (const auto& off : prob.offsets) {
                NrtMatrix center = translate(p, off);
                if (probe.disjoint_from_chosen(center))
                    branches.push_back(Branch{{root, std::move(center)}});
            }
            probe.unplace(root);
        }
    }

    const int width =
        std::max(1, std::min<int>(config.parallel_width, static_cast<int>(branches.size())));
    std::mutex result_mutex;
    std::optional<std::vector<NrtMatrix>> found_words;
    std::atomic<bool> any_aborted{false};

    std::vector<std::thread> pool;
    for (int t = 0; t < width; ++t) {
        pool.emplace_back([&, t] {
            Worker worker(prob, config, nodes, stop);
            for (size_t b = static_cast<size_t>(t); b < branches.size();
                 b += static_cast<size_t>(width)) {
                if (stop.load(std::memory_order_relaxed)) return;
                for (const auto& word : branches[b].prefix) worker.place(word);
                const Step step = worker.solve();
                if (step == Step::Found) {
                    std::lock_guard<std::mutex> lock(result_mutex);
                    if (!found_words) found_words = worker.chosen_;
                    stop.store(true, std::memory_order_relaxed);
                    return;
                }
                if (step == Step::Aborted) {
                    any_aborted.store(true, std::memory_order_relaxed);
                    stop.store(true, std::memory_order_relaxed);
                    return;
                }
                for (auto it = branches[b].prefix.rbegin(); it != branches[b].prefix.rend(); ++it)
                    worker.unplace(*it);
            }
        });
    }
    for (auto& th : pool) th.join();

    if (found_words) return finish(prob, Step::Found, std::move(*found_words), nodes.load());
    if (any_aborted.load()) return {SearchStatus::Aborted, std::nullopt, nodes.load()};
    return {SearchStatus::ExhaustedNone, std::nullopt, nodes.load()};
}

}  // namespace nrt
