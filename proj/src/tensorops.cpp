#include "qx/tensorops.hpp"

#include <algorithm>
#include <functional>

namespace qx {

Element scalar_entry(const Scalar& s) {
    std::map<Word, Scalar> t;
    if (!s.is_zero()) t.emplace(Word{}, s);
    return Element::from_terms(nullptr, std::move(t), true);
}

int inversions(const std::vector<int>& p) {
    int l = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++l;
    return l;
}

namespace {

void for_each_multi(int N, int m, const std::function<void(const MultiIdx&)>& f) {
    MultiIdx idx(m, 1);
    for (;;) {
        f(idx);
        int k = m - 1;
        while (k >= 0 && idx[k] == N) idx[k--] = 1;
        if (k < 0) return;
        ++idx[k];
    }
}

}  // namespace

TensorOp TensorOp::identity(int N, int m, VarSetPtr vars) {
    TensorOp t(N, m);
    Element one = scalar_entry(Scalar(vars, 1));
    for_each_multi(N, m, [&](const MultiIdx& idx) { t.add_entry(idx, idx, one); });
    return t;
}

void TensorOp::add_entry(const MultiIdx& row, const MultiIdx& col, const Element& e) {
    if (e.is_zero()) return;
    auto& cell = cols_[col][row];
    cell += e;
    if (cell.is_zero()) {
        cols_[col].erase(row);
        if (cols_[col].empty()) cols_.erase(col);
    }
}

Element TensorOp::entry(const MultiIdx& row, const MultiIdx& col) const {
    auto c = cols_.find(col);
    if (c == cols_.end()) return Element();
    auto r = c->second.find(row);
    return r == c->second.end() ? Element() : r->second;
}

TensorOp TensorOp::operator*(const TensorOp& o) const {
    TensorOp out(N_, m_);
    for (const auto& [c, rows] : o.cols_) {
        for (const auto& [k, be] : rows) {
            auto mid = cols_.find(k);
            if (mid == cols_.end()) continue;
            for (const auto& [r, ae] : mid->second) out.add_entry(r, c, ae * be);
        }
    }
    return out;
}

TensorOp TensorOp::operator+(const TensorOp& o) const {
    TensorOp out = *this;
    for (const auto& [c, rows] : o.cols_)
        for (const auto& [r, e] : rows) out.add_entry(r, c, e);
    return out;
}

TensorOp TensorOp::operator-() const {
    TensorOp out(N_, m_);
    for (const auto& [c, rows] : cols_)
        for (const auto& [r, e] : rows) out.add_entry(r, c, -e);
    return out;
}

TensorOp TensorOp::operator-(const TensorOp& o) const { return *this + (-o); }

TensorOp TensorOp::scaled(const Scalar& s) const {
    TensorOp out(N_, m_);
    for (const auto& [c, rows] : cols_)
        for (const auto& [r, e] : rows) out.add_entry(r, c, e * s);
    return out;
}

bool TensorOp::operator==(const TensorOp& o) const {
    if (N_ != o.N_ || m_ != o.m_) return false;
    auto covered = [](const TensorOp& a, const TensorOp& b) {
        for (const auto& [c, rows] : a.cols_)
            for (const auto& [r, e] : rows)
                if (e != b.entry(r, c)) return false;
        return true;
    };
    return covered(*this, o) && covered(o, *this);
}

SparseVec TensorOp::apply(const SparseVec& v) const {
    SparseVec out;
    for (const auto& [col, coeff] : v) {
        auto c = cols_.find(col);
        if (c == cols_.end()) continue;
        for (const auto& [row, e] : c->second) {
            auto& cell = out[row];
            cell += e * coeff;
            if (cell.is_zero()) out.erase(row);
        }
    }
    return out;
}

SparseVec TensorOp::apply_basis(const MultiIdx& col) const {
    SparseVec out;
    auto c = cols_.find(col);
    if (c != cols_.end())
        for (const auto& [row, e] : c->second) out.emplace(row, e);
    return out;
}

TensorOp TensorOp::embed(int m_total, const std::vector<int>& positions) const {
    TensorOp out(N_, m_total);
    std::vector<int> rest;
    for (int p = 1; p <= m_total; ++p)
        if (std::find(positions.begin(), positions.end(), p) == positions.end())
            rest.push_back(p);
    for (const auto& [col, rows] : cols_) {
        for (const auto& [row, e] : rows) {
            for_each_multi(N_, int(rest.size()), [&](const MultiIdx& fill) {
                MultiIdx r(m_total), c(m_total);
                for (size_t k = 0; k < positions.size(); ++k) {
                    r[positions[k] - 1] = row[k];
                    c[positions[k] - 1] = col[k];
                }
                for (size_t k = 0; k < rest.size(); ++k) {
                    r[rest[k] - 1] = fill[k];
                    c[rest[k] - 1] = fill[k];
                }
                out.add_entry(r, c, e);
            });
        }
    }
    return out;
}

Element TensorOp::trace() const {
    Element t;
    for (const auto& [c, rows] : cols_) {
        auto r = rows.find(c);
        if (r != rows.end()) t += r->second;
    }
    return t;
}

// ---------------------------------------------------------------------------
// builders

TensorOp op_P(int N, VarSetPtr vars) {
    TensorOp t(N, 2);
    Element one = scalar_entry(Scalar(vars, 1));
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) t.add_entry({j, i}, {i, j}, one);
    return t;
}

namespace {

TensorOp r_like(int N, VarSetPtr vars, const Scalar& diag, const Scalar& off,
                bool lower) {
    // diag e_ii x e_ii + sum_{i != j} e_ii x e_jj + off * sum e_ij x e_ji
    // with the last sum over i > j (lower) or i < j
    TensorOp t(N, 2);
    Element one = scalar_entry(Scalar(vars, 1));
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            t.add_entry({i, j}, {i, j}, i == j ? scalar_entry(diag) : one);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            if (lower ? i > j : i < j)
                t.add_entry({i, j}, {j, i}, scalar_entry(off));
    return t;
}

}  // namespace

TensorOp op_R(int N, VarSetPtr vars) {
    return r_like(N, vars, sc_q(vars), sc_q_minus_qinv(vars), true);
}

TensorOp op_Rplus(int N, VarSetPtr vars) {
    return r_like(N, vars, sc_q(vars), sc_q_minus_qinv(vars), false);
}

TensorOp op_Rminus(int N, VarSetPtr vars) {
    return r_like(N, vars, sc_q(vars, -1), -sc_q_minus_qinv(vars), true);
}

TensorOp op_Rt1(int N, VarSetPtr vars) {
    TensorOp t(N, 2);
    Element one = scalar_entry(Scalar(vars, 1));
    Scalar qq = sc_q_minus_qinv(vars);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            t.add_entry({i, j}, {i, j}, i == j ? scalar_entry(sc_q(vars)) : one);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j < i; ++j) t.add_entry({j, j}, {i, i}, scalar_entry(qq));
    return t;
}

TensorOp op_Rlambda(int N, const Scalar& lambda) {
    auto vars = lambda.vars();
    Scalar li = Scalar(vars, 1) / lambda;
    return op_Rplus(N, vars).scaled(lambda) - op_Rminus(N, vars).scaled(li);
}

TensorOp op_Rhat(int N, const Scalar& lambda) {
    return op_Rlambda(N, lambda) * op_P(N, lambda.vars());
}

TensorOp op_Ja(Case c, int N, const std::vector<Scalar>& a) {
    TensorOp t(N, 1);
    if (c == Case::O) {
        for (int i = 1; i <= N; ++i) t.add_entry({i}, {i}, scalar_entry(a[i - 1]));
    } else {
        auto vars = a[0].vars();
        for (int i = 1; i <= N / 2; ++i) {
            t.add_entry({2 * i - 1}, {2 * i}, scalar_entry(a[i - 1]));
            t.add_entry({2 * i}, {2 * i - 1}, scalar_entry(-(a[i - 1] * sc_q(vars))));
        }
    }
    return t;
}

TensorOp op_Qdiag(int N, VarSetPtr vars) {
    TensorOp t(N, 1);
    for (int i = 1; i <= N; ++i) t.add_entry({i}, {i}, scalar_entry(sc_neg_q(vars, i)));
    return t;
}

TensorOp op_antidiag(int N, VarSetPtr vars) {
    TensorOp t(N, 1);
    Element one = scalar_entry(Scalar(vars, 1));
    for (int i = 1; i <= N; ++i) t.add_entry({i}, {N + 1 - i}, one);
    return t;
}

TensorOp antisymmetrizer_tilde(int N, int m, VarSetPtr vars) {
    TensorOp t(N, m);
    if (m == 1) {
        Element one = scalar_entry(Scalar(vars, 1));
        for (int i = 1; i <= N; ++i) t.add_entry({i}, {i}, one);
        return t;
    }
    std::vector<int> sel(m);
    std::vector<int> perm(m);
    std::function<void(int, int)> choose = [&](int start, int k) {
        if (k == m) {
            std::vector<int> sigma(m), tau(m);
            for (int i = 0; i < m; ++i) sigma[i] = i;
            do {
                for (int i = 0; i < m; ++i) tau[i] = i;
                int ls = inversions(sigma);
                do {
                    MultiIdx row(m), col(m);
                    for (int i = 0; i < m; ++i) {
                        row[i] = sel[sigma[i]];
                        col[i] = sel[tau[i]];
                    }
                    t.add_entry(row, col,
                                scalar_entry(sc_neg_q(vars, ls + inversions(tau))));
                } while (std::next_permutation(tau.begin(), tau.end()));
            } while (std::next_permutation(sigma.begin(), sigma.end()));
            return;
        }
        for (int c = start; c <= N; ++c) {
            sel[k] = c;
            choose(c + 1, k + 1);
        }
    };
    choose(1, 0);
    return t;
}

TensorOp antisymmetrizer(int N, int m, VarSetPtr vars) {
    Scalar fact = q_factorial(m, sc_q(vars, 2));
    return antisymmetrizer_tilde(N, m, vars).scaled(Scalar(vars, 1) / fact);
}

TensorOp symmetrizer(int N, int m, VarSetPtr vars) {
    TensorOp s = TensorOp::identity(N, 1, vars);
    for (int k = 1; k < m; ++k) {
        // S_{k+1} = (q^{k+1} - q^{-k-1})^{-1} S_k Rhat_{k,k+1}(q^k) S_k
        Scalar den = sc_q(vars, k + 1) - sc_q(vars, -k - 1);
        TensorOp sk = s.embed(k + 1, [&] {
            std::vector<int> pos(k);
            for (int i = 0; i < k; ++i) pos[i] = i + 1;
            return pos;
        }());
        TensorOp rh = op_Rhat(N, sc_q(vars, k)).embed(k + 1, {k, k + 1});
        s = (sk * rh * sk).scaled(Scalar(vars, 1) / den);
    }
    return s;
}

std::vector<TensorOp> bracket_chain(const std::vector<std::vector<Element>>& Xmat,
                                    const std::vector<int>& order, VarSetPtr vars) {
    int m = int(order.size());
    int N = int(Xmat.size());
    std::vector<TensorOp> chain;
    TensorOp rt = op_Rt1(N, vars);
    for (int k = 0; k < m; ++k) {
        TensorOp x(N, 1);
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j) x.add_entry({i}, {j}, Xmat[i - 1][j - 1]);
        chain.push_back(x.embed(m, {order[k]}));
        for (int l = k + 1; l < m; ++l)
            chain.push_back(rt.embed(m, {order[k], order[l]}));
    }
    return chain;
}

TensorOp bracket(const std::vector<std::vector<Element>>& Xmat,
                 const std::vector<int>& order, VarSetPtr vars) {
    auto chain = bracket_chain(Xmat, order, vars);
    TensorOp out = chain.back();
    for (int k = int(chain.size()) - 2; k >= 0; --k) out = chain[k] * out;
    return out;
}

SparseVec apply_chain(const std::vector<TensorOp>& ops, SparseVec v) {
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) v = it->apply(v);
    return v;
}

Element project_row_tilde(const MultiIdx& I, const SparseVec& v, VarSetPtr vars) {
    Element out;
    int m = int(I.size());
    for (const auto& [K, coeff] : v) {
        // K must be a rearrangement of the distinct entries of I
        std::vector<int> tau(m);
        bool ok = true;
        std::vector<bool> used(m, false);
        for (int i = 0; i < m && ok; ++i) {
            ok = false;
            for (int j = 0; j < m; ++j)
                if (!used[j] && I[j] == K[i]) {
                    used[j] = true;
                    tau[i] = j;
                    ok = true;
                    break;
                }
        }
        if (!ok) continue;
        out += coeff * sc_neg_q(vars, inversions(tau));
    }
    return out;
}

Element chain_trace(const std::vector<TensorOp>& ops, int N, int m,
                    const Presentation* pres) {
    Element t = pres ? pres->zero() : Element();
    for_each_multi(N, m, [&](const MultiIdx& K) {
        SparseVec v{{K, scalar_entry(Scalar(pres ? pres->vars() : VarSet::base(), 1))}};
        v = apply_chain(ops, v);
        auto it = v.find(K);
        if (it != v.end()) t += it->second;
    });
    return t.normal_form();
}

std::vector<std::vector<Element>> generator_matrix(const Presentation* p) {
    int N = p->n();
    std::vector<std::vector<Element>> X(N, std::vector<Element>(N));
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            X[i - 1][j - 1] =
                p->kind() == PresKind::MatN ? p->t_entry(i, j) : p->x_entry(i, j);
    return X;
}

}  // namespace qx
