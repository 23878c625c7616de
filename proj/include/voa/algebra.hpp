#ifndef VOA_ALGEBRA_HPP
#define VOA_ALGEBRA_HPP

#include <memory>
#include <string>
#include <vector>

#include "voa/pbw.hpp"
#include "voa/scalar.hpp"

namespace voa {

enum class AlgebraKind { Virasoro, Heisenberg, AffineSl2 };

std::string kind_name(AlgebraKind k);

/// Structure data of one algebra: bracket tables, invariant form, central
/// charge or level, dual Coxeter number. Immutable after construction.
class AlgebraInstance {
  public:
    static AlgebraInstance virasoro(const Scalar& central_charge);
    /// Rank-1 Heisenberg with (X, X) = 1.
    static AlgebraInstance heisenberg(const Scalar& level);
    /// sl2 with basis e, h, f normalized so the longest root has length
    /// sqrt(2): (e,f) = 1, (h,h) = 2, dual Coxeter number 2.
    static AlgebraInstance affine_sl2(const Scalar& level);

    AlgebraKind kind() const { return kind_; }
    bool is_virasoro() const { return kind_ == AlgebraKind::Virasoro; }
    int dim() const { return (int)gen_names_.size(); }
    const std::vector<std::string>& gen_names() const { return gen_names_; }

    /// Central charge: the Virasoro parameter, or l*dim(g)/(l+h_vee) through
    /// the Sugawara construction.
    Scalar central_charge() const;
    const Scalar& level() const { return level_; }
    const Scalar& dual_coxeter() const { return hvee_; }

    /// [X_i, X_j] expanded over the generator basis.
    const std::vector<Scalar>& bracket(int i, int j) const { return bracket_[i][j]; }
    const Scalar& form(int i, int j) const { return form_[i][j]; }

    /// Dual basis with respect to the form: dual(i) = sum_j dual_coef(i,j) X_j.
    const std::vector<std::vector<Scalar>>& dual_coef() const { return dual_coef_; }

    /// gamma = 2(l + h_vee). Throws when zero (excluded level).
    Scalar gamma() const;

    /// Smallest |mode| allowed in vacuum PBW words: 2 for Virasoro, 1 else.
    int vacuum_min_mode() const { return is_virasoro() ? 2 : 1; }

    /// Chevalley involution on generators: omega(X_i) = sum_j omega_coef(i,j) X_j.
    /// Identity for Heisenberg; e -> -f, h -> -h, f -> -e for sl2.
    const std::vector<std::vector<Scalar>>& omega_coef() const { return omega_; }

    /// Central term of [L_m, L_n] at n = -m, i.e. c (m^3 - m)/12, with the
    /// deliberate corruption applied when the falsification fixture is on.
    Scalar virasoro_central_term(int m) const;

    /// Test fixture: corrupt the bracket data so rewriting becomes
    /// order-dependent and verification must fail with a counterexample.
    void corrupt_bracket_for_tests();
    bool corrupted() const { return corrupt_; }

  private:
    AlgebraInstance() = default;
    void validate() const;
    void compute_duals();

    bool corrupt_ = false;
    AlgebraKind kind_;
    Scalar level_;                                     // unused for Virasoro
    Scalar c_;                                         // Virasoro central charge
    Scalar hvee_;
    std::vector<std::string> gen_names_;
    std::vector<std::vector<std::vector<Scalar>>> bracket_;
    std::vector<std::vector<Scalar>> form_;
    std::vector<std::vector<Scalar>> dual_coef_;
    std::vector<std::vector<Scalar>> omega_;
};

}  // namespace voa

#endif
