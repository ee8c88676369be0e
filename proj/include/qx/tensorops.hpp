#ifndef QX_TENSOROPS_HPP
#define QX_TENSOROPS_HPP

#include "qx/ncalg.hpp"

namespace qx {

/// Multi-index over tensor factors; each component in [1, N].
using MultiIdx = std::vector<int>;

/// Sparse vector in (C^N)^{tensor m} with Element coefficients.
using SparseVec = std::map<MultiIdx, Element>;

enum class Case { O, Sp };

/// Sparse linear operator on (C^N)^{tensor m} with Element entries (scalars
/// are Elements without a presentation). Immutable in use; composition and
/// application multiply coefficients in operator order, left factors leftmost.
class TensorOp {
public:
    TensorOp(int N, int m) : N_(N), m_(m) {}

    int dim() const { return N_; }
    int factors() const { return m_; }
    /// column -> (row -> entry)
    const std::map<MultiIdx, std::map<MultiIdx, Element>>& columns() const {
        return cols_;
    }

    static TensorOp identity(int N, int m, VarSetPtr vars);

    void add_entry(const MultiIdx& row, const MultiIdx& col, const Element& e);
    Element entry(const MultiIdx& row, const MultiIdx& col) const;

    /// this followed (on the right) by o: (this*o)v = this(o(v)).
    TensorOp operator*(const TensorOp& o) const;
    TensorOp operator+(const TensorOp& o) const;
    TensorOp operator-(const TensorOp& o) const;
    TensorOp operator-() const;
    TensorOp scaled(const Scalar& s) const;
    bool operator==(const TensorOp& o) const;
    bool operator!=(const TensorOp& o) const { return !(*this == o); }

    /// Operator entries multiply to the left of the vector's coefficients.
    SparseVec apply(const SparseVec& v) const;
    SparseVec apply_basis(const MultiIdx& col) const;

    /// Place the factors of this operator at `positions` (1-based, strictly
    /// increasing not required) inside an m_total-factor space.
    TensorOp embed(int m_total, const std::vector<int>& positions) const;

    Element trace() const;

private:
    int N_, m_;
    std::map<MultiIdx, std::map<MultiIdx, Element>> cols_;
};

/// Scalar coefficient as a presentation-free Element.
Element scalar_entry(const Scalar& s);

// -- builders (m = 2 unless noted) -------------------------------------------

TensorOp op_P(int N, VarSetPtr vars);
TensorOp op_R(int N, VarSetPtr vars);
TensorOp op_Rplus(int N, VarSetPtr vars);
TensorOp op_Rminus(int N, VarSetPtr vars);
TensorOp op_Rt1(int N, VarSetPtr vars);
TensorOp op_Rlambda(int N, const Scalar& lambda);             // lambda R+ - lambda^{-1} R-
TensorOp op_Rhat(int N, const Scalar& lambda);                // R(lambda) P
TensorOp op_Ja(Case c, int N, const std::vector<Scalar>& a);  // m = 1
TensorOp op_Qdiag(int N, VarSetPtr vars);                     // m = 1, (-q)^i
TensorOp op_antidiag(int N, VarSetPtr vars);                  // m = 1

/// [m]_{q^2}! A_m, built from the double sum; integer Laurent entries.
TensorOp antisymmetrizer_tilde(int N, int m, VarSetPtr vars);
/// Normalized idempotent A_m.
TensorOp antisymmetrizer(int N, int m, VarSetPtr vars);
/// S_m via the recursion; S_1 = A_1 = identity.
TensorOp symmetrizer(int N, int m, VarSetPtr vars);

/// <X_{i_1} ... X_{i_m}> as a chain of one-site X's and R^t's, leftmost first.
/// The chain is meant to be applied right to left to a column vector.
std::vector<TensorOp> bracket_chain(const std::vector<std::vector<Element>>& Xmat,
                                    const std::vector<int>& order, VarSetPtr vars);
/// Materialized bracket operator (m <= 3 only).
TensorOp bracket(const std::vector<std::vector<Element>>& Xmat,
                 const std::vector<int>& order, VarSetPtr vars);

/// Apply a chain of operators to a vector, rightmost op first.
SparseVec apply_chain(const std::vector<TensorOp>& ops, SparseVec v);

/// Coefficient of basis row I in Atilde_m applied to v, where I is strictly
/// increasing; uses the permutation structure of Atilde instead of the
/// operator. Scalars multiply from the left.
Element project_row_tilde(const MultiIdx& I, const SparseVec& v, VarSetPtr vars);

/// Full trace of the operator product encoded by a chain.
Element chain_trace(const std::vector<TensorOp>& ops, int N, int m,
                    const Presentation* pres);

/// Generator matrix of a presentation (x_entry for XO/XSp, t_entry for MatN).
std::vector<std::vector<Element>> generator_matrix(const Presentation* p);

int inversions(const std::vector<int>& p);

}  // namespace qx

#endif
