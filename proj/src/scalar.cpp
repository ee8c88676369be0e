#include "qx/scalar.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace qx {

// ---------------------------------------------------------------------------
// VarSet

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty() || names_[0] != "q")
        throw ScalarError("variable set must start with q");
}

std::shared_ptr<const VarSet> VarSet::base() {
    static auto v = std::make_shared<const VarSet>(std::vector<std::string>{"q"});
    return v;
}

std::shared_ptr<const VarSet> VarSet::spectral() {
    static auto v = std::make_shared<const VarSet>(std::vector<std::string>{"q", "l", "m"});
    return v;
}

std::shared_ptr<const VarSet> VarSet::with_params(int count) {
    std::vector<std::string> n{"q"};
    for (int i = 1; i <= count; ++i) n.push_back("a" + std::to_string(i));
    return std::make_shared<const VarSet>(std::move(n));
}

std::shared_ptr<const VarSet> VarSet::spectral_with_params(int count) {
    std::vector<std::string> n{"q", "l", "m"};
    for (int i = 1; i <= count; ++i) n.push_back("a" + std::to_string(i));
    return std::make_shared<const VarSet>(std::move(n));
}

int VarSet::index_of(const std::string& n) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == n) return static_cast<int>(i);
    return -1;
}

// ---------------------------------------------------------------------------
// polynomial helpers

namespace poly {

TermMap add(const TermMap& a, const TermMap& b) {
    TermMap r = a;
    for (const auto& [m, c] : b) {
        auto it = r.find(m);
        if (it == r.end()) {
            r.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) r.erase(it);
        }
    }
    return r;
}

TermMap neg(const TermMap& a) {
    TermMap r;
    for (const auto& [m, c] : a) r.emplace(m, -c);
    return r;
}

TermMap mul(const TermMap& a, const TermMap& b) {
    TermMap r;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            Mono m(ma.size());
            for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            auto it = r.find(m);
            if (it == r.end()) {
                r.emplace(std::move(m), ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.erase(it);
            }
        }
    }
    return r;
}

static TermMap scale(const TermMap& a, const mpq_class& c) {
    TermMap r;
    if (c == 0) return r;
    for (const auto& [m, v] : a) r.emplace(m, v * c);
    return r;
}

// Shift so the minimum exponent in each variable is zero; returns the shift.
static Mono make_ordinary(TermMap& p, int nvars) {
    Mono shift(nvars, 0);
    if (p.empty()) return shift;
    bool first = true;
    for (const auto& [m, c] : p) {
        for (int i = 0; i < nvars; ++i)
            shift[i] = first ? m[i] : std::min(shift[i], m[i]);
        first = false;
    }
    if (std::all_of(shift.begin(), shift.end(), [](int e) { return e == 0; })) return shift;
    TermMap q;
    for (const auto& [m, c] : p) {
        Mono mm(m);
        for (int i = 0; i < nvars; ++i) mm[i] -= shift[i];
        q.emplace(std::move(mm), c);
    }
    p = std::move(q);
    return shift;
}

static int total_degree(const Mono& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

// Leading term by total degree, then lex: canonical normalization anchor.
static TermMap::const_iterator lead_term(const TermMap& p) {
    auto best = p.begin();
    for (auto it = p.begin(); it != p.end(); ++it) {
        int di = total_degree(it->first), db = total_degree(best->first);
        if (di > db || (di == db && best->first < it->first)) best = it;
    }
    return best;
}

std::optional<TermMap> divide_exact(const TermMap& a, const TermMap& b, int nvars) {
    if (b.empty()) return std::nullopt;
    TermMap r = a, out;
    auto lb = b.rbegin();  // lex-leading term of divisor
    while (!r.empty()) {
        auto lr = r.rbegin();
        Mono m(nvars);
        for (int i = 0; i < nvars; ++i) {
            m[i] = lr->first[i] - lb->first[i];
            if (m[i] < 0) return std::nullopt;
        }
        mpq_class c = lr->second / lb->second;
        out[m] += c;
        TermMap piece;
        piece.emplace(std::move(m), c);
        r = add(r, neg(mul(piece, b)));
    }
    return out;
}

// univariate view in the main variable
using UniView = std::map<int, TermMap>;

static UniView to_uni(const TermMap& p, int v, int nvars) {
    UniView u;
    for (const auto& [m, c] : p) {
        Mono mm(m);
        int e = mm[v];
        mm[v] = 0;
        u[e][mm] += c;
        (void)nvars;
    }
    return u;
}

static TermMap from_uni(const UniView& u, int v) {
    TermMap p;
    for (const auto& [e, coeff] : u) {
        for (const auto& [m, c] : coeff) {
            Mono mm(m);
            mm[v] = e;
            p[mm] += c;
        }
    }
    return p;
}

static TermMap monic(TermMap p) {
    if (p.empty()) return p;
    mpq_class lc = lead_term(p)->second;
    if (lc == 1) return p;
    return scale(p, mpq_class(1) / lc);
}

static int max_deg_in(const TermMap& p, int v) {
    int d = 0;
    for (const auto& [m, c] : p) d = std::max(d, m[v]);
    return d;
}

TermMap gcd(const TermMap& a_in, const TermMap& b_in, int nvars) {
    TermMap a = a_in, b = b_in;
    make_ordinary(a, nvars);
    make_ordinary(b, nvars);
    if (a.empty()) return monic(b);
    if (b.empty()) return monic(a);

    int v = -1;
    for (int i = nvars - 1; i >= 0; --i) {
        if (max_deg_in(a, i) > 0 || max_deg_in(b, i) > 0) {
            v = i;
            break;
        }
    }
    if (v < 0) {
        TermMap one;
        one.emplace(Mono(nvars, 0), 1);
        return one;
    }

    UniView ua = to_uni(a, v, nvars), ub = to_uni(b, v, nvars);

    auto content = [&](const UniView& u) {
        TermMap c;
        for (const auto& [e, coeff] : u) c = gcd(c, coeff, nvars);
        return c;
    };
    auto divide_uni = [&](const UniView& u, const TermMap& d) {
        UniView r;
        for (const auto& [e, coeff] : u) {
            auto q = divide_exact(coeff, d, nvars);
            assert(q.has_value());
            r[e] = *q;
        }
        return r;
    };

    TermMap ca = content(ua), cb = content(ub);
    UniView pa = divide_uni(ua, ca), pb = divide_uni(ub, cb);
    TermMap cg = gcd(ca, cb, nvars);

    // primitive pseudo-remainder sequence
    while (true) {
        if (pb.empty()) break;
        int da = pa.empty() ? -1 : pa.rbegin()->first;
        int db = pb.rbegin()->first;
        if (da < db) {
            std::swap(pa, pb);
            std::swap(da, db);
        }
        // pseudo remainder of pa by pb
        UniView r = pa;
        const TermMap& lcb = pb.rbegin()->second;
        while (!r.empty() && r.rbegin()->first >= db) {
            int dr = r.rbegin()->first;
            TermMap lcr = r.rbegin()->second;
            UniView t;
            for (const auto& [e, coeff] : r) t[e] = mul(coeff, lcb);
            for (const auto& [e, coeff] : pb) {
                TermMap prod = mul(coeff, lcr);
                auto it = t.find(e + dr - db);
                if (it == t.end())
                    t[e + dr - db] = neg(prod);
                else
                    it->second = add(it->second, neg(prod));
            }
            for (auto it = t.begin(); it != t.end();)
                it = it->second.empty() ? t.erase(it) : std::next(it);
            r = std::move(t);
        }
        pa = std::move(pb);
        if (r.empty()) {
            pb.clear();
            break;
        }
        TermMap cr = content(r);
        pb = divide_uni(r, cr);
    }

    TermMap cpa = content(pa);
    TermMap prim = from_uni(divide_uni(pa, cpa), v);
    TermMap g = mul(prim, cg);
    make_ordinary(g, nvars);
    return monic(g);
}

}  // namespace poly

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(VarSetPtr vars, long value) : vars_(std::move(vars)) {
    if (value != 0) num_.emplace(Mono(vars_->size(), 0), value);
    den_.emplace(Mono(vars_->size(), 0), 1);
}

Scalar::Scalar(VarSetPtr vars, const mpq_class& value) : vars_(std::move(vars)) {
    if (value != 0) num_.emplace(Mono(vars_->size(), 0), value);
    den_.emplace(Mono(vars_->size(), 0), 1);
    normalize();
}

Scalar::Scalar(VarSetPtr vars, TermMap num, TermMap den)
    : vars_(std::move(vars)), num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

Scalar Scalar::zero(VarSetPtr vars) { return Scalar(std::move(vars), 0L); }
Scalar Scalar::one(VarSetPtr vars) { return Scalar(std::move(vars), 1L); }

Scalar Scalar::variable(VarSetPtr vars, int index, int exponent) {
    if (index < 0 || index >= vars->size()) throw ScalarError("variable index out of range");
    TermMap n;
    Mono m(vars->size(), 0);
    m[index] = exponent;
    n.emplace(std::move(m), 1);
    TermMap d;
    d.emplace(Mono(vars->size(), 0), 1);
    return Scalar(std::move(vars), std::move(n), std::move(d));
}

Scalar Scalar::from_terms(VarSetPtr vars, TermMap num) {
    TermMap d;
    d.emplace(Mono(vars->size(), 0), 1);
    return Scalar(std::move(vars), std::move(num), std::move(d));
}

bool Scalar::is_one() const {
    return num_.size() == 1 && num_.begin()->second == 1 &&
           std::all_of(num_.begin()->first.begin(), num_.begin()->first.end(),
                       [](int e) { return e == 0; }) &&
           denominator_is_one();
}

bool Scalar::denominator_is_one() const {
    return den_.size() == 1 && den_.begin()->second == 1 &&
           std::all_of(den_.begin()->first.begin(), den_.begin()->first.end(),
                       [](int e) { return e == 0; });
}

void Scalar::normalize() {
    const int nv = vars_->size();
    if (den_.empty()) throw ScalarError("zero denominator");
    if (num_.empty()) {
        den_.clear();
        den_.emplace(Mono(nv, 0), 1);
        return;
    }
    TermMap g = poly::gcd(num_, den_, nv);
    bool g_trivial = g.size() == 1 && g.begin()->second == 1 &&
                     std::all_of(g.begin()->first.begin(), g.begin()->first.end(),
                                 [](int e) { return e == 0; });
    if (!g_trivial) {
        TermMap n = num_, d = den_;
        Mono sn = poly::make_ordinary(n, nv), sd = poly::make_ordinary(d, nv);
        auto qn = poly::divide_exact(n, g, nv);
        auto qd = poly::divide_exact(d, g, nv);
        assert(qn && qd);
        num_.clear();
        for (const auto& [m, c] : *qn) {
            Mono mm(m);
            for (int i = 0; i < nv; ++i) mm[i] += sn[i];
            num_.emplace(std::move(mm), c);
        }
        den_.clear();
        for (const auto& [m, c] : *qd) {
            Mono mm(m);
            for (int i = 0; i < nv; ++i) mm[i] += sd[i];
            den_.emplace(std::move(mm), c);
        }
    }
    // move the denominator's monomial-unit factor into the numerator
    {
        TermMap d = den_;
        Mono sd = poly::make_ordinary(d, nv);
        if (std::any_of(sd.begin(), sd.end(), [](int e) { return e != 0; })) {
            TermMap n;
            for (const auto& [m, c] : num_) {
                Mono mm(m);
                for (int i = 0; i < nv; ++i) mm[i] -= sd[i];
                n.emplace(std::move(mm), c);
            }
            num_ = std::move(n);
            den_ = std::move(d);
        }
    }
    // leading coefficient of the denominator = 1
    mpq_class lc = poly::lead_term(den_)->second;
    if (lc != 1) {
        mpq_class inv = mpq_class(1) / lc;
        num_ = poly::scale(num_, inv);
        den_ = poly::scale(den_, inv);
    }
}

static void check_compat(const VarSetPtr& a, const VarSetPtr& b) {
    if (a && b && a != b && a->size() != b->size())
        throw ScalarError("scalar variable sets differ");
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (!vars_) return o;
    if (!o.vars_) return *this;
    check_compat(vars_, o.vars_);
    if (denominator_is_one() && o.denominator_is_one())
        return from_terms(vars_, poly::add(num_, o.num_));
    TermMap n = poly::add(poly::mul(num_, o.den_), poly::mul(o.num_, den_));
    return Scalar(vars_, std::move(n), poly::mul(den_, o.den_));
}

Scalar Scalar::operator-() const {
    if (!vars_) return *this;
    Scalar r = *this;
    r.num_ = poly::neg(r.num_);
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (!vars_) return *this;  // zero
    if (!o.vars_) return o;
    check_compat(vars_, o.vars_);
    if (denominator_is_one() && o.denominator_is_one())
        return from_terms(vars_, poly::mul(num_, o.num_));
    return Scalar(vars_, poly::mul(num_, o.num_), poly::mul(den_, o.den_));
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw ScalarError("division by zero scalar");
    if (!vars_) return *this;
    check_compat(vars_, o.vars_);
    return Scalar(vars_, poly::mul(num_, o.den_), poly::mul(den_, o.num_));
}

bool Scalar::operator==(const Scalar& o) const {
    if (!vars_ || !o.vars_) return is_zero() == o.is_zero() && (is_zero() || false);
    return num_ == o.num_ && den_ == o.den_;
}

bool Scalar::operator<(const Scalar& o) const {
    if (num_ != o.num_) return num_ < o.num_;
    return den_ < o.den_;
}

Scalar Scalar::pow(int e) const {
    if (!vars_) {
        if (e <= 0) throw ScalarError("0^e with e <= 0");
        return *this;
    }
    if (e == 0) return one(vars_);
    Scalar b = e > 0 ? *this : one(vars_) / *this;
    int n = e > 0 ? e : -e;
    Scalar r = one(vars_);
    for (int i = 0; i < n; ++i) r = r * b;
    return r;
}

Scalar Scalar::bar() const {
    if (!vars_) return *this;
    auto flip = [&](const TermMap& p) {
        TermMap r;
        for (const auto& [m, c] : p) {
            Mono mm(m);
            mm[0] = -mm[0];
            r.emplace(std::move(mm), c);
        }
        return r;
    };
    return Scalar(vars_, flip(num_), flip(den_));
}

Scalar Scalar::substitute(int index, const Scalar& value) const {
    if (!vars_) return *this;
    auto eval = [&](const TermMap& p) {
        Scalar acc = zero(value.vars() ? value.vars() : vars_);
        for (const auto& [m, c] : p) {
            Scalar term(acc.vars(), mpq_class(c));
            for (int i = 0; i < vars_->size(); ++i) {
                if (m[i] == 0) continue;
                Scalar v = (i == index) ? value : variable(acc.vars(), i);
                term = term * v.pow(m[i]);
            }
            acc = acc + term;
        }
        return acc;
    };
    return eval(num_) / eval(den_);
}

static std::string term_str(const VarSet& vars, const Mono& m, const mpq_class& c,
                            bool leading) {
    std::ostringstream os;
    mpq_class a = c > 0 ? c : mpq_class(-c);
    if (!leading) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    bool all_zero = std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
    bool coeff_one = (a == 1);
    if (!coeff_one || all_zero) os << a.get_str();
    bool printed = !coeff_one || all_zero;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (printed) os << "*";
        os << vars.name(static_cast<int>(i));
        if (m[i] != 1) os << "^" << m[i];
        printed = true;
    }
    return os.str();
}

static std::string poly_str(const VarSet& vars, const TermMap& p) {
    if (p.empty()) return "0";
    std::vector<std::pair<Mono, mpq_class>> terms(p.begin(), p.end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        int da = 0, db = 0;
        for (int e : a.first) da += e;
        for (int e : b.first) db += e;
        if (da != db) return da < db;
        return a.first < b.first;
    });
    std::string s;
    for (size_t i = 0; i < terms.size(); ++i)
        s += term_str(vars, terms[i].first, terms[i].second, i == 0);
    return s;
}

std::string Scalar::str() const {
    if (!vars_ || is_zero()) return "0";
    std::string n = poly_str(*vars_, num_);
    if (denominator_is_one()) return n;
    std::string d = poly_str(*vars_, den_);
    return "(" + n + ")/(" + d + ")";
}

// ---------------------------------------------------------------------------
// q-combinatorics

Scalar q_number(int n, const Scalar& base) {
    if (n < 0) throw ScalarError("q_number of negative n");
    VarSetPtr v = base.vars() ? base.vars() : VarSet::base();
    Scalar r = Scalar::zero(v), p = Scalar::one(v);
    for (int k = 0; k < n; ++k) {
        r = r + p;
        p = p * base;
    }
    return r;
}

Scalar q_factorial(int n, const Scalar& base) {
    VarSetPtr v = base.vars() ? base.vars() : VarSet::base();
    Scalar r = Scalar::one(v);
    for (int k = 1; k <= n; ++k) r = r * q_number(k, base);
    return r;
}

Scalar gauss_number(int n, VarSetPtr vars) {
    Scalar q = Scalar::variable(vars, 0);
    return (q.pow(n) - q.pow(-n)) / (q - q.pow(-1));
}

Scalar sc_q(VarSetPtr vars, int exponent) { return Scalar::variable(std::move(vars), 0, exponent); }

Scalar sc_neg_q(VarSetPtr vars, int exponent) {
    Scalar r = Scalar::variable(vars, 0, exponent);
    return (exponent % 2 == 0) ? r : -r;
}

Scalar sc_q_minus_qinv(VarSetPtr vars) {
    return Scalar::variable(vars, 0, 1) - Scalar::variable(vars, 0, -1);
}

}  // namespace qx
