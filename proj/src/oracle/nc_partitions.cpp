#include "gforest/oracle.hpp"

#include <algorithm>

namespace gforest::oracle {

bool is_noncrossing(const NCPartition& p) {
    std::vector<int> block_of(static_cast<std::size_t>(p.n) + 1, -1);
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        for (int e : p.blocks[b]) block_of[e] = static_cast<int>(b);
    }
    for (int a = 1; a <= p.n; ++a) {
        for (int b = a + 1; b <= p.n; ++b) {
            if (block_of[b] == block_of[a]) continue;
            for (int c = b + 1; c <= p.n; ++c) {
                if (block_of[c] != block_of[a]) continue;
                for (int d = c + 1; d <= p.n; ++d) {
                    if (block_of[d] == block_of[b]) return false;
                }
            }
        }
    }
    return true;
}

namespace {

// The block containing the smallest element of an interval splits the rest
// of the interval into independent gaps.
class NCGenerator {
public:
    NCGenerator(int n, const std::function<void(const NCPartition&)>& visit) : n_(n), visit_(visit) {}

    void run() {
        pending_.emplace_back(1, n_);
        step();
    }

private:
    int n_;
    const std::function<void(const NCPartition&)>& visit_;
    std::vector<std::pair<int, int>> pending_;
    std::vector<std::vector<int>> blocks_;

    void emit() {
        NCPartition p{n_, blocks_};
        std::sort(p.blocks.begin(), p.blocks.end());
        visit_(p);
    }

    void step() {
        if (pending_.empty()) {
            emit();
            return;
        }
        auto [lo, hi] = pending_.back();
        pending_.pop_back();
        if (lo > hi) {
            step();
            pending_.emplace_back(lo, hi);
            return;
        }
        const int span = hi - lo;
        for (unsigned mask = 0; mask < (1U << span); ++mask) {
            std::vector<int> block{lo};
            for (int i = 0; i < span; ++i) {
                if (mask & (1U << i)) block.push_back(lo + 1 + i);
            }
            const std::size_t saved = pending_.size();
            for (std::size_t i = 0; i + 1 < block.size(); ++i) pending_.emplace_back(block[i] + 1, block[i + 1] - 1);
            pending_.emplace_back(block.back() + 1, hi);
            blocks_.push_back(std::move(block));
            step();
            blocks_.pop_back();
            pending_.resize(saved);
        }
        pending_.emplace_back(lo, hi);
    }
};

} // namespace

void for_each_nc_partition(int n, const std::function<void(const NCPartition&)>& visit) {
    if (n < 0) throw std::invalid_argument("negative n");
    NCGenerator(n, visit).run();
}

std::vector<NCPartition> enumerate_nc_partitions(int n) {
    std::vector<NCPartition> out;
    for_each_nc_partition(n, [&](const NCPartition& p) { out.push_back(p); });
    return out;
}

} // namespace gforest::oracle
