#include "qx/matrix_algebra.hpp"

#include <algorithm>

namespace qx {

bool is_index_set(const IndexSet& I, int N) {
    for (size_t k = 0; k < I.size(); ++k) {
        if (I[k] < 1 || I[k] > N) return false;
        if (k > 0 && I[k] <= I[k - 1]) return false;
    }
    return true;
}

IndexSet complement(const IndexSet& I, int N) {
    IndexSet out;
    size_t k = 0;
    for (int i = 1; i <= N; ++i) {
        if (k < I.size() && I[k] == i) {
            ++k;
            continue;
        }
        out.push_back(i);
    }
    return out;
}

Element quantum_minor(const std::vector<std::vector<Element>>& T, const IndexSet& I,
                      const IndexSet& J, VarSetPtr vars, bool column_first) {
    if (I.size() != J.size()) throw NcError("quantum_minor: size mismatch");
    const int m = static_cast<int>(I.size());
    std::vector<int> perm(m);
    for (int k = 0; k < m; ++k) perm[k] = k;
    Element out;
    do {
        Scalar c = sc_neg_q(vars, inversions(perm));
        Element prod;
        bool first = true;
        for (int k = 0; k < m; ++k) {
            const Element& f = column_first ? T[I[perm[k]] - 1][J[k] - 1]
                                            : T[I[k] - 1][J[perm[k]] - 1];
            prod = first ? f : prod * f;
            first = false;
        }
        out += prod * c;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

Element quantum_minor(const Presentation* mat, const IndexSet& I, const IndexSet& J,
                      bool column_first) {
    return quantum_minor(generator_matrix(mat), I, J, mat->vars(), column_first);
}

Element det_q(const Presentation* mat) {
    IndexSet full(mat->n());
    for (int i = 0; i < mat->n(); ++i) full[i] = i + 1;
    return quantum_minor(mat, full, full);
}

namespace {

/// Multiplicative extension of a generator map, applied term by term.
template <class F>
Element map_words(const Element& e, const Presentation* target, F&& gen_image) {
    Element out(target);
    for (const auto& [w, c] : e.terms()) {
        Element prod = target->one();
        for (const Gen& g : w) prod = prod * gen_image(g);
        out += prod * c;
    }
    return out;
}

}  // namespace

Element coproduct(const Element& e) {
    const Presentation* src = e.pres();
    if (!src || src->kind() != PresKind::MatN)
        throw NcError("coproduct: matrix-algebra element required");
    const int N = src->n();
    const Presentation* sq = Presentation::make(PresKind::MatTensorSquare, N, src->vars());
    return map_words(e, sq, [&](const Gen& g) {
        Element s = sq->zero();
        for (int k = 1; k <= N; ++k)
            s += sq->tensor_entry(Family::U, g.i, k) * sq->tensor_entry(Family::V, k, g.j);
        return s;
    });
}

Element phi_image_gen(const Presentation* mat, Case c, int i, int j,
                      const std::vector<Scalar>& a) {
    const int N = mat->n();
    if (c == Case::O) {
        if (static_cast<int>(a.size()) != N) throw NcError("phi: need N parameters");
        Element s = mat->zero();
        for (int k = 1; k <= N; ++k)
            s += mat->t_entry(i, k) * mat->t_entry(j, k) * a[k - 1];
        return s;
    }
    const int n = N / 2;
    if (N % 2 != 0 || static_cast<int>(a.size()) != n)
        throw NcError("phi: need N even and N/2 parameters");
    if (i == j) return mat->zero();
    if (i > j) return phi_image_gen(mat, c, j, i, a) * (-sc_q(mat->vars()));
    Scalar q = sc_q(mat->vars());
    Element s = mat->zero();
    for (int k = 1; k <= n; ++k) {
        Element minor = mat->t_entry(i, 2 * k - 1) * mat->t_entry(j, 2 * k) -
                        mat->t_entry(i, 2 * k) * mat->t_entry(j, 2 * k - 1) * q;
        s += minor * a[k - 1];
    }
    return s;
}

Element phi_embed(const Element& e, Case c, const std::vector<Scalar>& a) {
    const Presentation* src = e.pres();
    if (!src) throw NcError("phi_embed: element has no presentation");
    const Presentation* mat = Presentation::make(PresKind::MatN, src->n(), src->vars());
    return map_words(e, mat, [&](const Gen& g) {
        return phi_image_gen(mat, c, g.i, g.j, a);
    });
}

bool coideal_check(Case c, int N, const std::vector<Scalar>& a, VarSetPtr vars) {
    const Presentation* mat = Presentation::make(PresKind::MatN, N, vars);
    const Presentation* sq = Presentation::make(PresKind::MatTensorSquare, N, vars);
    auto into_v = [&](const Element& e) {
        return map_words(e, sq, [&](const Gen& g) {
            return sq->tensor_entry(Family::V, g.i, g.j);
        });
    };
    Scalar q = sc_q(vars);
    auto image = [&](int i, int j) { return phi_image_gen(mat, c, i, j, a); };
    for (int i = 1; i <= N; ++i)
        for (int j = (c == Case::O ? i : i + 1); j <= N; ++j) {
            Element lhs = coproduct(image(i, j));
            Element rhs = sq->zero();
            if (c == Case::O) {
                for (int r = 1; r <= N; ++r)
                    for (int s = 1; s <= N; ++s)
                        rhs += sq->tensor_entry(Family::U, i, r) *
                               sq->tensor_entry(Family::U, j, s) * into_v(image(r, s));
            } else {
                for (int r = 1; r <= N; ++r)
                    for (int s = r + 1; s <= N; ++s) {
                        Element minor = sq->tensor_entry(Family::U, i, r) *
                                            sq->tensor_entry(Family::U, j, s) -
                                        sq->tensor_entry(Family::U, i, s) *
                                            sq->tensor_entry(Family::U, j, r) * q;
                        rhs += minor * into_v(image(r, s));
                    }
            }
            if (lhs != rhs) return false;
        }
    return true;
}

std::vector<Scalar> symbolic_params(VarSetPtr vars, int k) {
    std::vector<Scalar> a;
    for (int i = 1; i <= k; ++i) {
        int idx = vars->index_of("a" + std::to_string(i));
        if (idx < 0) throw NcError("symbolic_params: variable a" + std::to_string(i) +
                                   " not in var set");
        a.push_back(Scalar::variable(vars, idx));
    }
    return a;
}

std::vector<Scalar> unit_params(VarSetPtr vars, int k) {
    return std::vector<Scalar>(k, Scalar(vars, 1));
}

}  // namespace qx
