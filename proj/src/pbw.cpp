#include "voa/pbw.hpp"

#include <stdexcept>

namespace voa {

int GradedVector::weight() const {
    if (t_.empty()) return 0;
    int w = t_.begin()->first.weight();
    for (auto& [m, c] : t_)
        if (m.weight() != w) throw std::domain_error("GradedVector: not homogeneous");
    return w;
}

bool GradedVector::is_homogeneous() const {
    if (t_.empty()) return true;
    int w = t_.begin()->first.weight();
    for (auto& [m, c] : t_)
        if (m.weight() != w) return false;
    return true;
}

namespace {

// Extend `word` (already canonical) by letters whose (mode, gen) pair is
// >= the last letter, until the remaining weight is exhausted.
void extend(std::vector<PBWMonomial>& out, std::vector<GenMode>& word, int remaining,
            int min_mode_abs, int num_gens) {
    if (remaining == 0) {
        PBWMonomial m;
        m.word = word;
        out.push_back(std::move(m));
        return;
    }
    // next letter (g, -k): k <= remaining, k <= |last mode|; when k equals
    // the last |mode|, generator index must be >= the last one.
    int k_cap = word.empty() ? remaining : -word.back().mode;
    for (int k = std::min(remaining, k_cap); k >= min_mode_abs; --k) {
        int g_start = 0;
        if (!word.empty() && -word.back().mode == k) g_start = word.back().gen;
        for (int g = g_start; g < num_gens; ++g) {
            word.push_back({g, -k});
            extend(out, word, remaining - k, min_mode_abs, num_gens);
            word.pop_back();
        }
    }
}

}  // namespace

std::vector<PBWMonomial> enumerate_pbw_basis(int weight, int min_mode_abs, int num_gens) {
    if (weight < 0) throw std::invalid_argument("enumerate_pbw_basis: negative weight");
    std::vector<PBWMonomial> out;
    std::vector<GenMode> word;
    extend(out, word, weight, min_mode_abs, num_gens);
    return out;
}

}  // namespace voa
