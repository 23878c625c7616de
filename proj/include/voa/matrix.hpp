#ifndef VOA_MATRIX_HPP
#define VOA_MATRIX_HPP

#include <map>
#include <optional>
#include <vector>

#include "voa/scalar.hpp"

namespace voa {

/// Sparse exact matrix over the Scalar field. Rows are sparse maps; blocks in
/// this library are small (graded components), so elimination works on a
/// copy of the rows with denominator clearing and content reduction to keep
/// entries polynomial and small.
class ExactMatrix {
  public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), r_(rows) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int i, int j, const Scalar& v) {
        if (v.is_zero())
            r_[i].erase(j);
        else
            r_[i][j] = v;
    }

    void add(int i, int j, const Scalar& v) {
        if (v.is_zero()) return;
        auto it = r_[i].find(j);
        if (it == r_[i].end()) {
            r_[i].emplace(j, v);
        } else {
            it->second += v;
            if (it->second.is_zero()) r_[i].erase(it);
        }
    }

    Scalar at(int i, int j) const {
        auto it = r_[i].find(j);
        return it == r_[i].end() ? Scalar() : it->second;
    }

    const std::map<int, Scalar>& row(int i) const { return r_[i]; }

    bool operator==(const ExactMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && r_ == o.r_;
    }
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix scale(const Scalar& s) const;
    ExactMatrix transpose() const;
    static ExactMatrix identity(int n);

    bool is_zero() const {
        for (auto& row : r_)
            if (!row.empty()) return false;
        return true;
    }

    int rank() const;

    /// Basis of the right kernel {x : Mx = 0}, exact coefficients.
    std::vector<std::vector<Scalar>> kernel_basis() const;

    /// Stack several matrices with a common column count and return a basis
    /// of the joint kernel.
    static std::vector<std::vector<Scalar>> joint_kernel(const std::vector<ExactMatrix>& blocks);

    /// Solve Mx = rhs; empty when inconsistent.
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& rhs) const;

  private:
    int rows_, cols_;
    std::vector<std::map<int, Scalar>> r_;
};

}  // namespace voa

#endif
