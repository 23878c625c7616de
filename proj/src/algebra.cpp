#include "voa/algebra.hpp"

#include <stdexcept>

#include "voa/matrix.hpp"

namespace voa {

std::string kind_name(AlgebraKind k) {
    switch (k) {
        case AlgebraKind::Virasoro: return "virasoro";
        case AlgebraKind::Heisenberg: return "heisenberg";
        case AlgebraKind::AffineSl2: return "affine-sl2";
    }
    return "?";
}

AlgebraInstance AlgebraInstance::virasoro(const Scalar& central_charge) {
    AlgebraInstance a;
    a.kind_ = AlgebraKind::Virasoro;
    a.c_ = central_charge;
    a.hvee_ = Scalar(0);
    a.gen_names_ = {"L"};
    return a;
}

AlgebraInstance AlgebraInstance::heisenberg(const Scalar& level) {
    AlgebraInstance a;
    a.kind_ = AlgebraKind::Heisenberg;
    a.level_ = level;
    a.hvee_ = Scalar(0);
    a.gen_names_ = {"X"};
    a.bracket_ = {{{Scalar(0)}}};
    a.form_ = {{Scalar(1)}};
    a.omega_ = {{Scalar(1)}};
    a.validate();
    a.compute_duals();
    return a;
}

AlgebraInstance AlgebraInstance::affine_sl2(const Scalar& level) {
    AlgebraInstance a;
    a.kind_ = AlgebraKind::AffineSl2;
    a.level_ = level;
    a.hvee_ = Scalar(2);
    a.gen_names_ = {"e", "h", "f"};
    const Scalar z(0);
    auto vec = [&](long ce, long ch, long cf) {
        return std::vector<Scalar>{Scalar(ce), Scalar(ch), Scalar(cf)};
    };
    // [e,h] = -2e, [e,f] = h, [h,f] = -2f
    a.bracket_.assign(3, std::vector<std::vector<Scalar>>(3, vec(0, 0, 0)));
    a.bracket_[0][1] = vec(-2, 0, 0);
    a.bracket_[1][0] = vec(2, 0, 0);
    a.bracket_[0][2] = vec(0, 1, 0);
    a.bracket_[2][0] = vec(0, -1, 0);
    a.bracket_[1][2] = vec(0, 0, -2);
    a.bracket_[2][1] = vec(0, 0, 2);
    // (e,f) = 1, (h,h) = 2
    a.form_ = {{z, z, Scalar(1)}, {z, Scalar(2), z}, {Scalar(1), z, z}};
    // Chevalley involution: e -> -f, h -> -h, f -> -e
    a.omega_ = {{z, z, Scalar(-1)}, {z, Scalar(-1), z}, {Scalar(-1), z, z}};
    a.validate();
    a.compute_duals();
    return a;
}

Scalar AlgebraInstance::central_charge() const {
    if (is_virasoro()) return c_;
    return level_ * Scalar(dim()) / (level_ + hvee_);
}

Scalar AlgebraInstance::gamma() const {
    Scalar g = Scalar(2) * (level_ + hvee_);
    if (g.is_zero()) throw std::domain_error("algebra: level + dual Coxeter number is zero");
    return g;
}

void AlgebraInstance::validate() const {
    const int n = dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (form_[i][j] != form_[j][i]) throw std::invalid_argument("algebra: form not symmetric");
            // antisymmetry of the bracket
            for (int k = 0; k < n; ++k)
                if (bracket_[i][j][k] != -bracket_[j][i][k])
                    throw std::invalid_argument("algebra: bracket not antisymmetric");
        }
    // invariance ([X,Y],Z) = -(Y,[X,Z])
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int zi = 0; zi < n; ++zi) {
                Scalar lhs(0), rhs(0);
                for (int k = 0; k < n; ++k) {
                    lhs += bracket_[x][y][k] * form_[k][zi];
                    rhs += bracket_[x][zi][k] * form_[y][k];
                }
                if (lhs != -rhs) throw std::invalid_argument("algebra: form not invariant");
            }
    if ((level_ + hvee_).is_zero())
        throw std::invalid_argument("algebra: level + dual Coxeter number must be nonzero");
}

void AlgebraInstance::compute_duals() {
    const int n = dim();
    // Solve (dual_i, X_j) = delta_ij: dual_coef = G^{-1} with G the form.
    ExactMatrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.set(i, j, form_[i][j]);
    dual_coef_.assign(n, std::vector<Scalar>(n, Scalar(0)));
    for (int i = 0; i < n; ++i) {
        std::vector<Scalar> e(n, Scalar(0));
        e[i] = Scalar(1);
        auto x = g.solve(e);
        if (!x) throw std::invalid_argument("algebra: form is degenerate");
        dual_coef_[i] = *x;
    }
}

Scalar AlgebraInstance::virasoro_central_term(int m) const {
    Scalar term = c_ * Scalar(rat((long)m * m * m - m, 12));
    // An even perturbation of the odd cocycle makes the "bracket" fail
    // antisymmetry, so straightening gives order-dependent answers.
    if (corrupt_) term += Scalar(1);
    return term;
}

void AlgebraInstance::corrupt_bracket_for_tests() {
    corrupt_ = true;
    if (!is_virasoro()) bracket_[0][0][0] += Scalar(1);
}

}  // namespace voa
