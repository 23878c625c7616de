#ifndef VOA_MODULE_HPP
#define VOA_MODULE_HPP

#include <map>
#include <memory>
#include <optional>
#include <tuple>
#include <vector>

#include "voa/algebra.hpp"
#include "voa/matrix.hpp"
#include "voa/pbw.hpp"

namespace voa {

/// Result of an operation that clips to a weight window: the surviving part
/// plus a flag recording whether anything beyond the window was discarded.
struct Clipped {
    GradedVector vec;
    bool truncated = false;
};

/// Common interface of every graded module the library acts on: induced
/// (vacuum or Verma), simple quotient, and contragredient. Vectors are
/// coordinates over a per-weight basis indexed by PBW monomials; for the
/// contragredient the same monomials index the dual basis.
///
/// Mode applications are exact at every weight; the truncation bound only
/// governs which weights enumeration-style APIs range over. Instances are
/// immutable after construction up to internal memo caches, which are
/// filled single-threaded and read-only afterwards.
class VertexModule {
  public:
    virtual ~VertexModule() = default;

    const AlgebraInstance& algebra() const { return *alg_; }
    std::shared_ptr<const AlgebraInstance> algebra_ptr() const { return alg_; }
    int truncation() const { return trunc_; }

    virtual int dim(int weight) const = 0;
    virtual const std::vector<PBWMonomial>& basis(int weight) const = 0;

    /// Generator mode action, exact: L_n for Virasoro, X_n for affine.
    virtual GradedVector gen_apply(int gen, int mode, const GradedVector& w) const = 0;

    /// Y_W(v)_n w for v in the vacuum algebra-module, exact. Default: write
    /// v over generator words and apply the normal-ordered product modes of
    /// the generating fields. The contragredient overrides this with the
    /// graded-dual formula.
    virtual GradedVector field_apply(const GradedVector& v, int n, const GradedVector& w) const;

    /// Virasoro mode on W: the generator action for Virasoro modules, the
    /// normalized quadratic sum over dual generator pairs (Sugawara) for
    /// affine ones. The contragredient overrides via its own fields.
    virtual GradedVector l_apply(int mode, const GradedVector& w) const;

    /// L0 eigenvalue offset of the generating vector (h for Verma modules);
    /// the integer grading itself always starts at 0.
    virtual Scalar l0_offset() const { return Scalar(0); }

    /// Index of a monomial within basis(weight); -1 when absent.
    int basis_index(int weight, const PBWMonomial& m) const;

    /// Coordinates of a homogeneous vector in basis(weight).
    std::vector<Scalar> coords(int weight, const GradedVector& v) const;

    GradedVector from_coords(int weight, const std::vector<Scalar>& c) const;

    /// Clip to weights in [0, truncation()], flagging discards.
    Clipped clip(const GradedVector& v) const;

    /// Graded dimensions [dim(0), ..., dim(N)].
    std::vector<int> graded_dims() const;

  protected:
    VertexModule(std::shared_ptr<const AlgebraInstance> alg, int trunc)
        : alg_(std::move(alg)), trunc_(trunc) {}

    /// Mode k of the normal-ordered generator-word field of `vword` applied
    /// to one basis monomial; memoized.
    const GradedVector& nop_apply(const PBWMonomial& vword, int k, const PBWMonomial& w) const;

    std::shared_ptr<const AlgebraInstance> alg_;
    int trunc_;
    mutable std::map<std::tuple<PBWMonomial, int, PBWMonomial>, GradedVector> nop_memo_;
};

/// PBW-induced module: the vacuum module of the algebra, or a Virasoro
/// Verma module with highest weight h. Generator modes act by recursive
/// bracket straightening with memoization.
class InducedModule : public VertexModule {
  public:
    static std::shared_ptr<InducedModule> vacuum(std::shared_ptr<const AlgebraInstance> alg, int trunc);
    static std::shared_ptr<InducedModule> verma(std::shared_ptr<const AlgebraInstance> alg,
                                                const Scalar& h, int trunc);

    int dim(int weight) const override;
    const std::vector<PBWMonomial>& basis(int weight) const override;
    GradedVector gen_apply(int gen, int mode, const GradedVector& w) const override;
    Scalar l0_offset() const override { return h_; }

    bool is_vacuum() const { return vacuum_; }

    /// Contravariant (Shapovalov) Gram matrix of one weight component:
    /// adjoint L_n <-> L_{-n}, X_n <-> omega(X)_{-n}, <hw, hw> = 1.
    ExactMatrix gram(int weight) const;

    /// <a, b> under the contravariant form (a, b arbitrary).
    Scalar pairing(const GradedVector& a, const GradedVector& b) const;

  private:
    InducedModule(std::shared_ptr<const AlgebraInstance> alg, bool vac, const Scalar& h, int trunc)
        : VertexModule(std::move(alg), trunc), vacuum_(vac), h_(h) {}

    const GradedVector& gen_apply_monomial(int gen, int mode, const PBWMonomial& m) const;

    int min_mode_abs() const { return vacuum_ ? alg_->vacuum_min_mode() : 1; }

    bool vacuum_;
    Scalar h_;
    mutable std::map<int, std::vector<PBWMonomial>> basis_;
    mutable std::map<std::tuple<int, int, PBWMonomial>, GradedVector> apply_memo_;
};

/// Quotient of an induced module by the radical of its contravariant form
/// (the maximal proper graded submodule for vacuum-type and Verma modules).
/// Basis: parent monomials at non-pivot columns of the reduced radical.
/// Requires the algebra parameter to be specialized to a rational.
class QuotientModule : public VertexModule {
  public:
    QuotientModule(std::shared_ptr<const InducedModule> parent, int trunc);

    int dim(int weight) const override;
    const std::vector<PBWMonomial>& basis(int weight) const override;
    GradedVector gen_apply(int gen, int mode, const GradedVector& w) const override;
    Scalar l0_offset() const override { return parent_->l0_offset(); }

    const InducedModule& parent() const { return *parent_; }
    int radical_dim(int weight) const;

    /// Radical vectors at one weight, as vectors in the parent module.
    std::vector<GradedVector> radical_basis(int weight) const;

    /// Reduce a parent vector modulo the radical, expressed on coset
    /// representatives.
    GradedVector reduce(const GradedVector& v) const;

  private:
    struct WeightData {
        std::vector<PBWMonomial> cosets;
        // reduced radical rows over parent basis indices, monic at pivot
        std::vector<std::map<int, Scalar>> rows;
        std::vector<int> pivot;
    };
    const WeightData& weight_data(int w) const;

    std::shared_ptr<const InducedModule> parent_;
    mutable std::map<int, WeightData> wd_;
};

/// Lie-algebra structure carried by the weight-1 component of a CFT-type
/// vacuum module: bracket [u,v] = Y(u)_0 v and form <u,v> 1 = Y(u)_1 v.
struct Weight1Structure {
    std::vector<PBWMonomial> basis;
    // bracket[i][j] = coordinates of [u_i, u_j] over basis
    std::vector<std::vector<std::vector<Scalar>>> bracket;
    std::vector<std::vector<Scalar>> form;
};

Weight1Structure weight1_lie_structure(const VertexModule& vacuum_module);

/// The conformal vector as a vector of the vacuum module: L_{-2}1 for
/// Virasoro, the normalized quadratic expression over dual generator pairs
/// for affine algebras.
GradedVector conformal_vector(const VertexModule& vacuum_module);

}  // namespace voa

#endif
