#include "voa/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace voa {

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("ExactMatrix: shape mismatch in product");
    ExactMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (auto& [k, a] : r_[i]) {
            for (auto& [j, b] : o.r_[k]) out.add(i, j, a * b);
        }
    }
    return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("ExactMatrix: shape mismatch");
    ExactMatrix out = *this;
    for (int i = 0; i < rows_; ++i)
        for (auto& [j, b] : o.r_[i]) out.add(i, j, b);
    return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    return *this + o.scale(Scalar(-1));
}

ExactMatrix ExactMatrix::scale(const Scalar& s) const {
    ExactMatrix out(rows_, cols_);
    if (s.is_zero()) return out;
    for (int i = 0; i < rows_; ++i)
        for (auto& [j, a] : r_[i]) out.set(i, j, a * s);
    return out;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (auto& [j, a] : r_[i]) out.set(j, i, a);
    return out;
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix out(n, n);
    for (int i = 0; i < n; ++i) out.set(i, i, Scalar(1));
    return out;
}

namespace {

using SparseRow = std::map<int, Scalar>;

// Scale a row so entries are polynomial with unit content: multiply by the
// lcm of coefficient denominators, divide by the gcd of numerator contents.
// Leaves the row's span unchanged; keeps elimination fraction-free.
void reduce_row(SparseRow& row) {
    if (row.empty()) return;
    mpz_class den_lcm(1), num_gcd(0);
    bool poly_content = true;
    for (auto& [j, v] : row) {
        // contents of the numerator/denominator polynomials
        const Poly& np = v.num();
        const Poly& dp = v.den();
        for (int d = 0; d <= np.degree(); ++d) {
            Rat c = np.coeff(d);
            if (c == 0) continue;
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        }
        if (dp.degree() > 0) poly_content = false;
        if (dp.degree() == 0 && dp.coeff(0) != 1) {
            // denominator polynomial is a constant != 1 — fold into lcm
            Rat c = dp.coeff(0);
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_num().get_mpz_t());
        }
    }
    if (!poly_content) return;  // rational-function entries: skip content step
    if (num_gcd == 0) return;
    Rat f(den_lcm, num_gcd);
    f.canonicalize();
    if (f == 1) return;
    for (auto& [j, v] : row) v *= Scalar(f);
}

struct Echelon {
    std::vector<SparseRow> rows;   // echelon rows, each with a pivot column
    std::vector<int> pivot_col;    // per stored row
};

Echelon eliminate(std::vector<SparseRow> work, int cols) {
    Echelon e;
    for (auto& row : work) reduce_row(row);
    for (int col = 0; col < cols; ++col) {
        // find a not-yet-used row with leading entry at `col`
        int found = -1;
        for (size_t i = 0; i < work.size(); ++i) {
            if (!work[i].empty() && work[i].begin()->first == col) {
                found = (int)i;
                break;
            }
        }
        if (found < 0) continue;
        SparseRow pivot_row = work[found];
        work.erase(work.begin() + found);
        const Scalar p = pivot_row.begin()->second;
        for (auto& row : work) {
            auto it = row.find(col);
            if (it == row.end()) continue;
            const Scalar f = it->second;
            // row <- row * p - pivot_row * f   (no divisions)
            SparseRow next;
            for (auto& [j, v] : row) {
                Scalar nv = v * p;
                if (!nv.is_zero()) next[j] = nv;
            }
            for (auto& [j, v] : pivot_row) {
                Scalar sub = v * f;
                auto jt = next.find(j);
                if (jt == next.end()) {
                    if (!sub.is_zero()) next[j] = -sub;
                } else {
                    jt->second -= sub;
                    if (jt->second.is_zero()) next.erase(jt);
                }
            }
            reduce_row(next);
            row = std::move(next);
        }
        e.pivot_col.push_back(col);
        e.rows.push_back(std::move(pivot_row));
    }
    return e;
}

}  // namespace

int ExactMatrix::rank() const {
    return (int)eliminate(r_, cols_).rows.size();
}

std::vector<std::vector<Scalar>> ExactMatrix::kernel_basis() const {
    Echelon e = eliminate(r_, cols_);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : e.pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Scalar> x(cols_, Scalar(0));
        x[free_col] = Scalar(1);
        // back-substitute pivot coordinates, bottom-up
        for (int i = (int)e.rows.size() - 1; i >= 0; --i) {
            const SparseRow& row = e.rows[i];
            int p = e.pivot_col[i];
            Scalar s(0);
            for (auto& [j, v] : row) {
                if (j == p) continue;
                if (!x[j].is_zero()) s += v * x[j];
            }
            x[p] = -s / row.at(p);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<std::vector<Scalar>> ExactMatrix::joint_kernel(const std::vector<ExactMatrix>& blocks) {
    if (blocks.empty()) return {};
    int cols = blocks[0].cols();
    int rows = 0;
    for (auto& b : blocks) {
        if (b.cols() != cols) throw std::invalid_argument("joint_kernel: column mismatch");
        rows += b.rows();
    }
    ExactMatrix stacked(rows, cols);
    int at = 0;
    for (auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (auto& [j, v] : b.row(i)) stacked.set(at + i, j, v);
        at += b.rows();
    }
    return stacked.kernel_basis();
}

std::optional<std::vector<Scalar>> ExactMatrix::solve(const std::vector<Scalar>& rhs) const {
    if ((int)rhs.size() != rows_) throw std::invalid_argument("solve: rhs size mismatch");
    // Augment with the rhs as an extra column and eliminate.
    std::vector<SparseRow> work = r_;
    for (int i = 0; i < rows_; ++i)
        if (!rhs[i].is_zero()) work[i][cols_] = rhs[i];
    Echelon e = eliminate(std::move(work), cols_ + 1);
    std::vector<Scalar> x(cols_, Scalar(0));
    for (int i = (int)e.rows.size() - 1; i >= 0; --i) {
        int p = e.pivot_col[i];
        const SparseRow& row = e.rows[i];
        if (p == cols_) return std::nullopt;  // 0 = nonzero
        Scalar s(0);
        for (auto& [j, v] : row) {
            if (j == p) continue;
            Scalar xj = (j == cols_) ? Scalar(-1) : x[j];
            if (!xj.is_zero()) s += v * xj;
        }
        x[p] = -s / row.at(p);
    }
    // verify (cheap at these sizes, and guards the free-variable choice x=0)
    for (int i = 0; i < rows_; ++i) {
        Scalar s(0);
        for (auto& [j, v] : r_[i]) s += v * x[j];
        if (s != rhs[i]) return std::nullopt;
    }
    return x;
}

}  // namespace voa
