#include "qx/sklyanin.hpp"

#include <mutex>

namespace qx {

Element sklyanin_minor(const Presentation* p, const MultiIdx& I, const MultiIdx& J) {
    return sklyanin_minor_generic(generator_matrix(p), I, J, p->vars(), false,
                                  p->one());
}

Element aux_minor(const Presentation* p, const MultiIdx& I, const MultiIdx& J, int c) {
    return aux_minor_generic(generator_matrix(p), I, J, c, p->vars(), false,
                             p->one());
}

Element aux_expansion_formula(const Presentation* p, const MultiIdx& I,
                              const MultiIdx& J, int sign) {
    const int m = static_cast<int>(I.size());
    Element sum;
    for (int r = 1; r <= m - 1; ++r) {
        MultiIdx rows, cols(J.begin() + 1, J.end());
        for (int k = 0; k < m - 1; ++k)
            if (k != r - 1) rows.push_back(I[k]);
        sum += p->x_entry(J[0], I[r - 1]) *
               sklyanin_minor(p, rows, cols) * sc_neg_q(p->vars(), r - sign);
    }
    return sum * sc_neg_q(p->vars(), 2 * inversions(I)) * Scalar(p->vars(), sign);
}

Element sdet(const Presentation* p) {
    static std::mutex mu;
    static std::map<const Presentation*, Element> cache;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(p);
        if (it != cache.end()) return it->second;
    }
    Element d = sdet_of_matrix(generator_matrix(p), p->vars(), false, p->one());
    std::lock_guard<std::mutex> lk(mu);
    return cache.emplace(p, std::move(d)).first->second;
}

std::vector<int> pi_map(const std::vector<int>& p, const std::vector<int>& ground) {
    const int N = static_cast<int>(p.size());
    if (static_cast<int>(ground.size()) != N || N < 2)
        throw NcError("pi_map: ground set mismatch");
    std::vector<int> out(N);
    out[N - 1] = ground[N - 1];
    std::vector<int> avail = ground;
    auto pos_of = [](const std::vector<int>& v, int x) {
        for (size_t k = 0; k < v.size(); ++k)
            if (v[k] == x) return static_cast<int>(k) + 1;
        throw NcError("pi_map: not a permutation of the ground set");
    };
    for (int i = 1; i <= N - i; ++i) {
        if (i == N - i) {
            out[i - 1] = avail.front();
            break;
        }
        const int a = p[i - 1], b = p[N - i];
        const int M = static_cast<int>(avail.size());
        const int k = pos_of(avail, a), l = pos_of(avail, b);
        int x, y;
        if (k < M && l < M) {
            x = avail[l - 1];
            y = avail[k - 1];
        } else if (l == M && k < M - 1) {
            x = avail[M - 2];
            y = avail[k - 1];
        } else if (k == M && l < M - 1) {
            x = avail[l - 1];
            y = avail[M - 2];
        } else {  // {k, l} = {M-1, M}
            x = avail[M - 2];
            y = avail[M - 3];
        }
        out[i - 1] = x;
        out[N - i - 1] = y;
        std::erase(avail, a);
        std::erase(avail, b);
    }
    return out;
}

Element sdet_explicit(const Presentation* p) {
    const int N = p->n();
    if (N == 1) return p->x_entry(1, 1);
    const int n = N / 2;
    VarSetPtr vars = p->vars();
    std::vector<int> ground(N);
    for (int i = 0; i < N; ++i) ground[i] = i + 1;
    Scalar gamma = p->symplectic()
                       ? sc_q(vars, 2 * n) * Scalar(vars, n % 2 == 0 ? 1 : -1)
                       : Scalar(vars, 1);
    std::vector<int> perm = ground;
    Element out;
    do {
        std::vector<int> pp = pi_map(perm, ground);
        Element prod = p->one();
        for (int k = 1; k <= N; ++k) {
            int i = perm[k - 1], j = pp[k - 1];
            prod = prod * (k <= n ? p->x_entry(j, i) : p->x_entry(i, j));
        }
        out += prod * sc_neg_q(vars, inversions(perm) - inversions(pp));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out * gamma;
}

EMat sklyanin_comatrix(const Presentation* p) {
    return comatrix_of_matrix(generator_matrix(p), p->vars(), false, p->one());
}

std::shared_ptr<const CentralTag> sdet_tag(const Presentation* p) {
    if (p->symplectic()) return pf_tag(p);
    static std::mutex mu;
    static std::map<const Presentation*, std::shared_ptr<const CentralTag>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    auto tag = std::make_shared<const CentralTag>("sdet", sdet(p));
    cache.emplace(p, tag);
    return tag;
}

LocalElement sdet_inverse(const Presentation* p) {
    auto tag = sdet_tag(p);
    if (!p->symplectic()) return LocalElement(p->one(), 1, tag);
    const int n = p->n() / 2;
    return LocalElement(p->one() * sc_q(p->vars(), -3 * n), 2, tag);
}

LocalElement local_of(const Presentation* p, const Element& e) {
    return LocalElement(e, 0, sdet_tag(p));
}

std::vector<std::vector<LocalElement>> y_matrix(const Presentation* p) {
    static std::mutex mu;
    static std::map<const Presentation*, std::vector<std::vector<LocalElement>>> cache;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(p);
        if (it != cache.end()) return it->second;
    }
    const int N = p->n();
    EMat hat = sklyanin_comatrix(p);
    LocalElement dinv = sdet_inverse(p);
    std::vector<std::vector<LocalElement>> out(N, std::vector<LocalElement>(N));
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            out[i - 1][j - 1] =
                local_of(p, hat[i - 1][j - 1] * sc_neg_q(p->vars(), j - i)) * dinv;
    std::lock_guard<std::mutex> lk(mu);
    return cache.emplace(p, std::move(out)).first->second;
}

LocalElement omega_gen(const Presentation* p, int i, int j) {
    const int N = p->n();
    return y_matrix(p)[N - i][N - j];
}

LocalElement omega_apply(const Presentation* p, const Element& e) {
    const int N = p->n();
    auto Y = y_matrix(p);
    LocalElement out;
    for (const auto& [w, c] : e.terms()) {
        LocalElement prod = local_of(p, p->one());
        for (const Gen& g : w) prod = prod * Y[N - g.i][N - g.j];
        out = out + prod * c;
    }
    return out;
}

}  // namespace qx
