#ifndef QX_MATRIX_ALGEBRA_HPP
#define QX_MATRIX_ALGEBRA_HPP

#include "qx/tensorops.hpp"

namespace qx {

/// Strictly increasing index list in [1, N].
using IndexSet = std::vector<int>;

IndexSet complement(const IndexSet& I, int N);
bool is_index_set(const IndexSet& I, int N);

/// Quantum minor over an arbitrary matrix of entries; `I`, `J` need not be
/// sorted here (antisymmetry checks feed permuted lists).
Element quantum_minor(const std::vector<std::vector<Element>>& T, const IndexSet& I,
                      const IndexSet& J, VarSetPtr vars, bool column_first = false);

/// Row-form minor of the generator matrix of a MatN presentation.
Element quantum_minor(const Presentation* mat, const IndexSet& I, const IndexSet& J,
                      bool column_first = false);

Element det_q(const Presentation* mat);

/// Algebra map into the tensor-square presentation over the same variables.
Element coproduct(const Element& e);

/// phi: A_q(X_N) -> A_q(Mat_N), generator images from T J(a) T^t.
Element phi_embed(const Element& e, Case c, const std::vector<Scalar>& a);
Element phi_image_gen(const Presentation* mat, Case c, int i, int j,
                      const std::vector<Scalar>& a);

bool coideal_check(Case c, int N, const std::vector<Scalar>& a, VarSetPtr vars);

/// Symbolic parameter vector a_1..a_k over with_params(k).
std::vector<Scalar> symbolic_params(VarSetPtr vars, int k);
std::vector<Scalar> unit_params(VarSetPtr vars, int k);

}  // namespace qx

#endif
