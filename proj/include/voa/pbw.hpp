#ifndef VOA_PBW_HPP
#define VOA_PBW_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "voa/scalar.hpp"

namespace voa {

/// One letter of a PBW word: generator index and mode. For the Virasoro
/// algebra the generator index is always 0 (the letter is L_mode).
struct GenMode {
    int gen;
    int mode;
    auto operator<=>(const GenMode&) const = default;
};

/// Sorted word of negative-mode letters applied to the highest-weight
/// vector. Canonical order: modes ascending (most negative first, i.e.
/// |mode| descending), ties broken by generator index ascending.
struct PBWMonomial {
    std::vector<GenMode> word;

    int weight() const {
        int w = 0;
        for (auto& gm : word) w -= gm.mode;
        return w;
    }

    bool empty() const { return word.empty(); }
    size_t size() const { return word.size(); }

    /// True when prepending (gen, mode) keeps the word canonical.
    bool can_prepend(int gen, int mode) const {
        if (word.empty()) return true;
        const GenMode& head = word.front();
        return mode < head.mode || (mode == head.mode && gen <= head.gen);
    }

    PBWMonomial prepended(int gen, int mode) const {
        PBWMonomial m;
        m.word.reserve(word.size() + 1);
        m.word.push_back({gen, mode});
        m.word.insert(m.word.end(), word.begin(), word.end());
        return m;
    }

    PBWMonomial tail() const {
        PBWMonomial m;
        m.word.assign(word.begin() + 1, word.end());
        return m;
    }

    auto operator<=>(const PBWMonomial&) const = default;

    std::string str(const std::vector<std::string>& gen_names) const {
        if (word.empty()) return "1";
        std::string out;
        for (auto& gm : word) {
            out += gen_names.empty() ? "L" : gen_names[gm.gen];
            out += "(" + std::to_string(gm.mode) + ")";
        }
        return out;
    }
};

/// Sparse Scalar-linear combination of PBW monomials. No zero coefficients
/// are stored. Not tied to a fixed weight: decomposes into homogeneous
/// parts via by_weight().
class GradedVector {
  public:
    GradedVector() = default;

    static GradedVector unit() { return monomial(PBWMonomial{}); }

    static GradedVector monomial(const PBWMonomial& m, const Scalar& c = Scalar(1)) {
        GradedVector v;
        v.add(m, c);
        return v;
    }

    void add(const PBWMonomial& m, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = t_.find(m);
        if (it == t_.end()) {
            t_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    void axpy(const Scalar& a, const GradedVector& x) {
        if (a.is_zero()) return;
        for (auto& [m, c] : x.t_) add(m, a * c);
    }

    GradedVector operator+(const GradedVector& o) const {
        GradedVector r = *this;
        r.axpy(Scalar(1), o);
        return r;
    }

    GradedVector operator-(const GradedVector& o) const {
        GradedVector r = *this;
        r.axpy(Scalar(-1), o);
        return r;
    }

    GradedVector scaled(const Scalar& s) const {
        GradedVector r;
        r.axpy(s, *this);
        return r;
    }

    Scalar coeff(const PBWMonomial& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? Scalar() : it->second;
    }

    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }
    const std::map<PBWMonomial, Scalar>& terms() const { return t_; }

    bool operator==(const GradedVector& o) const { return t_ == o.t_; }
    bool operator!=(const GradedVector& o) const { return !(*this == o); }

    /// Split into weight-homogeneous parts.
    std::map<int, GradedVector> by_weight() const {
        std::map<int, GradedVector> parts;
        for (auto& [m, c] : t_) parts[m.weight()].add(m, c);
        return parts;
    }

    /// Weight when homogeneous; throws otherwise.
    int weight() const;

    bool is_homogeneous() const;

    std::string str(const std::vector<std::string>& gen_names = {}) const {
        if (t_.empty()) return "0";
        std::string out;
        for (auto& [m, c] : t_) {
            if (!out.empty()) out += " + ";
            out += "(" + c.str() + ")*" + m.str(gen_names);
        }
        return out;
    }

  private:
    std::map<PBWMonomial, Scalar> t_;
};

/// Complete, duplicate-free, canonically ordered PBW basis of one weight.
/// min_mode_abs: 2 for the Virasoro vacuum (parts >= 2), 1 otherwise.
/// num_gens: number of generator colors (1 for Virasoro/Heisenberg rank 1,
/// 3 for affine sl2).
std::vector<PBWMonomial> enumerate_pbw_basis(int weight, int min_mode_abs, int num_gens);

}  // namespace voa

#endif
