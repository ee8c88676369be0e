#include "qx/ncalg.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>

namespace qx {

namespace {
thread_local long g_steps = 0;
constexpr long kStepBudget = 10'000'000;
}  // namespace

// ---------------------------------------------------------------------------
// Presentation registry

Presentation::Presentation(PresKind kind, int N, VarSetPtr vars)
    : kind_(kind), N_(N), vars_(vars ? std::move(vars) : VarSet::base()) {
    if (N < 1) throw NcError("presentation size must be >= 1");
    if ((kind == PresKind::XSp || kind == PresKind::XSpWithExt) && N % 2 != 0)
        throw NcError("symplectic presentation requires even N");
    build_generators();
}

const Presentation* Presentation::make(PresKind kind, int N, VarSetPtr vars) {
    struct Key {
        PresKind k;
        int n;
        const VarSet* v;
        auto operator<=>(const Key&) const = default;
    };
    static std::mutex mu;
    static std::map<Key, std::unique_ptr<Presentation>> registry;
    if (!vars) vars = VarSet::base();
    std::lock_guard<std::mutex> lock(mu);
    Key key{kind, N, vars.get()};
    auto it = registry.find(key);
    if (it == registry.end())
        it = registry.emplace(key, std::unique_ptr<Presentation>(
                                       new Presentation(kind, N, vars)))
                 .first;
    return it->second.get();
}

void Presentation::build_generators() {
    auto push_matrix = [&](Family f) {
        for (int i = 1; i <= N_; ++i)
            for (int j = 1; j <= N_; ++j)
                gens_.push_back({f, uint8_t(i), uint8_t(j)});
    };
    switch (kind_) {
        case PresKind::MatN:
            push_matrix(Family::T);
            break;
        case PresKind::XO:
            for (int i = 1; i <= N_; ++i)
                for (int j = i; j <= N_; ++j)
                    gens_.push_back({Family::X, uint8_t(i), uint8_t(j)});
            break;
        case PresKind::XSp:
        case PresKind::XSpWithExt:
            for (int i = 1; i <= N_; ++i)
                for (int j = i + 1; j <= N_; ++j)
                    gens_.push_back({Family::X, uint8_t(i), uint8_t(j)});
            if (kind_ == PresKind::XSpWithExt)
                for (int i = 1; i <= N_; ++i) gens_.push_back({Family::Y, uint8_t(i), 0});
            break;
        case PresKind::Ext:
            for (int i = 1; i <= N_; ++i) gens_.push_back({Family::Y, uint8_t(i), 0});
            break;
        case PresKind::MatTensorSquare:
            push_matrix(Family::U);
            push_matrix(Family::V);
            break;
    }
}

int Presentation::rank(const Gen& g) const {
    switch (g.fam) {
        case Family::T:
        case Family::U:
            return (g.i - 1) * N_ + (g.j - 1);
        case Family::V:
            return N_ * N_ + (g.i - 1) * N_ + (g.j - 1);
        case Family::X:
            if (kind_ == PresKind::XO) {
                // row blocks of decreasing length
                int base = (g.i - 1) * N_ - (g.i - 1) * (g.i - 2) / 2;
                return base + (g.j - g.i);
            } else {
                int base = (g.i - 1) * (N_ - 1) - (g.i - 1) * (g.i - 2) / 2;
                return base + (g.j - g.i - 1);
            }
        case Family::Y: {
            int off = (kind_ == PresKind::XSpWithExt) ? N_ * (N_ - 1) / 2 : 0;
            return off + (g.i - 1);
        }
    }
    return 0;
}

bool Presentation::needs_rewrite(const Gen& g, const Gen& h) const {
    if (g.fam == Family::Y && h.fam == Family::Y && g.i == h.i) return true;  // y^2 = 0
    return rank(g) > rank(h);
}

// ---------------------------------------------------------------------------
// swap rules

namespace {
struct RuleBuilder {
    const VarSetPtr& vars;
    std::vector<Presentation::SwapTerm> terms;

    void add(Scalar c, Gen a, Gen b) { terms.push_back({std::move(c), a, b}); }
};
}  // namespace

std::vector<Presentation::SwapTerm> Presentation::make_rule(const Gen& g, const Gen& h) const {
    const Scalar q = sc_q(vars_);
    const Scalar qi = sc_q(vars_, -1);
    const Scalar qq = sc_q_minus_qinv(vars_);  // q - q^-1
    RuleBuilder rb{vars_, {}};

    auto X = [](int i, int j) { return Gen{Family::X, uint8_t(i), uint8_t(j)}; };

    // cross-family and cross-copy pairs commute
    if (g.fam != h.fam) {
        bool commuting = (g.fam == Family::V && h.fam == Family::U) ||
                         (g.fam == Family::Y && h.fam == Family::X);
        if (!commuting) throw NcError("unexpected generator pair");
        rb.add(Scalar::one(vars_), h, g);
        return rb.terms;
    }

    if (g.fam == Family::Y) {
        if (g.i == h.i) return {};  // y^2 = 0
        rb.add(-q, h, g);
        return rb.terms;
    }

    if (g.fam == Family::T || g.fam == Family::U || g.fam == Family::V) {
        int a = g.i, b = g.j, c = h.i, d = h.j;
        if (a == c) {
            rb.add(qi, h, g);
        } else if (b == d) {
            rb.add(qi, h, g);
        } else if (b < d) {
            rb.add(Scalar::one(vars_), h, g);
        } else {
            rb.add(Scalar::one(vars_), h, g);
            rb.add(-qq, Gen{g.fam, uint8_t(c), uint8_t(b)}, Gen{g.fam, uint8_t(a), uint8_t(d)});
        }
        return rb.terms;
    }

    // Family::X
    int a = g.i, b = g.j, c = h.i, d = h.j;
    if (kind_ == PresKind::XO) {
        const Scalar w = qi * (q * q - qi * qi);  // q^-1 (q^2 - q^-2)
        if (c == a) {
            // same row; h is x[a,d] with d < b
            rb.add(c == d ? qi * qi : qi, h, g);
        } else if (d == b) {
            rb.add(a == b ? qi * qi : qi, h, g);
        } else if (c == d) {
            // h diagonal x[c,c], c < a
            rb.add(Scalar::one(vars_), h, g);
            if (a == b)
                rb.add(-w, X(c, a), X(c, a));
            else
                rb.add(-w, X(c, a), X(c, b));
        } else if (a == b) {
            // g diagonal x[a,a], h = x[c,d] off-diagonal, c < a
            if (d < a) {
                rb.add(Scalar::one(vars_), h, g);
                rb.add(-w, X(c, a), X(d, a));
            } else if (d == a) {
                rb.add(qi * qi, h, g);
            } else {
                rb.add(Scalar::one(vars_), h, g);
            }
        } else {
            // both off-diagonal, c < a < b, c < d
            if (d == a) {
                rb.add(qi, h, g);
                rb.add(-qq, X(a, a), X(c, b));
            } else if (d < a) {
                rb.add(Scalar::one(vars_), h, g);
                rb.add(-qq, X(c, a), X(d, b));
                rb.add(-qq * qi, X(c, b), X(d, a));
            } else if (d < b) {
                rb.add(Scalar::one(vars_), h, g);
                rb.add(-qq, X(c, b), X(a, d));
            } else {
                rb.add(Scalar::one(vars_), h, g);
            }
        }
        return rb.terms;
    }

    // symplectic
    if (c == a || d == b || d == a) {
        rb.add(qi, h, g);
    } else if (d < a) {
        // separated: c < d < a < b
        rb.add(Scalar::one(vars_), h, g);
        rb.add(-qq, X(c, a), X(d, b));
        rb.add(qq * q, X(c, b), X(d, a));
    } else if (d < b) {
        // crossing: c < a < d < b
        rb.add(Scalar::one(vars_), h, g);
        rb.add(-qq, X(c, b), X(a, d));
    } else {
        // nested: c < a < b < d
        rb.add(Scalar::one(vars_), h, g);
    }
    return rb.terms;
}

const std::vector<Presentation::SwapTerm>& Presentation::swap_rule(const Gen& g,
                                                                   const Gen& h) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(g, h);
    auto it = rule_cache_.find(key);
    if (it == rule_cache_.end()) it = rule_cache_.emplace(key, make_rule(g, h)).first;
    return it->second;
}

// ---------------------------------------------------------------------------
// straightening

std::map<Word, Scalar> Presentation::mul_gen(const Word& ordered, const Gen& g) const {
    if (++g_steps > kStepBudget)
        throw NcError("rewrite budget exceeded: swap table may be broken");
    if (ordered.empty() || !needs_rewrite(ordered.back(), g)) {
        Word w = ordered;
        w.push_back(g);
        return {{std::move(w), Scalar::one(vars_)}};
    }
    Word key = ordered;
    key.push_back(g);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = nf_cache_.find(key);
        if (it != nf_cache_.end()) return it->second;
    }
    Word head(ordered.begin(), ordered.end() - 1);
    const Gen last = ordered.back();
    std::map<Word, Scalar> result;
    for (const SwapTerm& t : swap_rule(last, g)) {
        std::map<Word, Scalar> m1 = mul_gen(head, t.a);
        for (const auto& [w1, c1] : m1) {
            std::map<Word, Scalar> m2 = mul_gen(w1, t.b);
            for (const auto& [w2, c2] : m2) {
                Scalar add = t.coeff * c1 * c2;
                auto it = result.find(w2);
                if (it == result.end()) {
                    if (!add.is_zero()) result.emplace(w2, std::move(add));
                } else {
                    it->second += add;
                    if (it->second.is_zero()) result.erase(it);
                }
            }
        }
    }
    {
        std::lock_guard<std::mutex> lock(mu_);
        nf_cache_.emplace(std::move(key), result);
    }
    return result;
}

std::map<Word, Scalar> Presentation::straighten(const Word& w) const {
    g_steps = 0;
    std::map<Word, Scalar> acc{{Word{}, Scalar::one(vars_)}};
    for (const Gen& g : w) {
        std::map<Word, Scalar> next;
        for (const auto& [word, c] : acc) {
            for (auto& [w2, c2] : mul_gen(word, g)) {
                Scalar add = c * c2;
                auto it = next.find(w2);
                if (it == next.end()) {
                    if (!add.is_zero()) next.emplace(w2, std::move(add));
                } else {
                    it->second += add;
                    if (it->second.is_zero()) next.erase(it);
                }
            }
        }
        acc = std::move(next);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// element constructors on the presentation

Element Presentation::gen_element(const Gen& g) const {
    std::map<Word, Scalar> t;
    t.emplace(Word{g}, Scalar::one(vars_));
    return Element::from_terms(this, std::move(t), true);
}

Element Presentation::scalar_element(const Scalar& s) const {
    std::map<Word, Scalar> t;
    if (!s.is_zero()) t.emplace(Word{}, s);
    return Element::from_terms(this, std::move(t), true);
}

Element Presentation::zero() const { return Element(this); }
Element Presentation::one() const { return scalar_element(Scalar::one(vars_)); }

Element Presentation::x_entry(int i, int j) const {
    if (i < 1 || j < 1 || i > N_ || j > N_) throw NcError("x index out of range");
    if (kind_ == PresKind::XO) {
        if (i <= j) return gen_element({Family::X, uint8_t(i), uint8_t(j)});
        return gen_element({Family::X, uint8_t(j), uint8_t(i)}) * sc_q(vars_, -1);
    }
    if (kind_ == PresKind::XSp || kind_ == PresKind::XSpWithExt) {
        if (i == j) return zero();
        if (i < j) return gen_element({Family::X, uint8_t(i), uint8_t(j)});
        return gen_element({Family::X, uint8_t(j), uint8_t(i)}) * (-sc_q(vars_));
    }
    throw NcError("presentation has no x generators");
}

Element Presentation::t_entry(int i, int j) const {
    if (kind_ != PresKind::MatN) throw NcError("presentation has no t generators");
    return gen_element({Family::T, uint8_t(i), uint8_t(j)});
}

Element Presentation::tensor_entry(Family copy, int i, int j) const {
    if (kind_ != PresKind::MatTensorSquare || (copy != Family::U && copy != Family::V))
        throw NcError("tensor entry only in the tensor-square presentation");
    return gen_element({copy, uint8_t(i), uint8_t(j)});
}

Element Presentation::y_entry(int i) const {
    if (kind_ != PresKind::Ext && kind_ != PresKind::XSpWithExt)
        throw NcError("presentation has no y generators");
    return gen_element({Family::Y, uint8_t(i), 0});
}

std::string Presentation::gen_str(const Gen& g) const {
    std::ostringstream os;
    switch (g.fam) {
        case Family::T: os << "t"; break;
        case Family::X: os << "x"; break;
        case Family::Y: os << "y"; break;
        case Family::U: os << "u"; break;
        case Family::V: os << "v"; break;
    }
    os << "[" << int(g.i);
    if (g.fam != Family::Y) os << "," << int(g.j);
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------------------
// Element

Element Element::from_terms(const Presentation* p, std::map<Word, Scalar> terms,
                            bool normalized) {
    Element e(p);
    for (auto it = terms.begin(); it != terms.end();)
        it = it->second.is_zero() ? terms.erase(it) : std::next(it);
    e.terms_ = std::move(terms);
    e.normalized_ = normalized;
    return e;
}

static const Presentation* common_pres(const Element& a, const Element& b) {
    if (a.pres() && b.pres() && a.pres() != b.pres())
        throw NcError("elements belong to different presentations");
    return a.pres() ? a.pres() : b.pres();
}

Element Element::operator+(const Element& o) const {
    const Presentation* p = common_pres(*this, o);
    std::map<Word, Scalar> t = terms_;
    for (const auto& [w, c] : o.terms_) {
        auto it = t.find(w);
        if (it == t.end()) {
            t.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t.erase(it);
        }
    }
    return from_terms(p, std::move(t), normalized_ && o.normalized_);
}

Element Element::operator-() const {
    Element e(pres_);
    for (const auto& [w, c] : terms_) e.terms_.emplace(w, -c);
    e.normalized_ = normalized_;
    return e;
}

Element Element::operator-(const Element& o) const { return *this + (-o); }

Element Element::operator*(const Scalar& s) const {
    if (s.is_zero()) return Element(pres_);
    Element e(pres_);
    for (const auto& [w, c] : terms_) {
        Scalar cc = c * s;
        if (!cc.is_zero()) e.terms_.emplace(w, std::move(cc));
    }
    e.normalized_ = normalized_;
    return e;
}

Element Element::operator*(const Element& o) const {
    const Presentation* p = common_pres(*this, o);
    std::map<Word, Scalar> t;
    for (const auto& [w1, c1] : terms_) {
        for (const auto& [w2, c2] : o.terms_) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            if (!p && !w.empty())
                throw NcError("product of words without a presentation");
            Scalar c = c1 * c2;
            std::map<Word, Scalar> nf =
                p ? p->straighten(w)
                  : std::map<Word, Scalar>{{Word{}, Scalar(c.vars(), 1)}};
            for (auto& [wn, cn] : nf) {
                Scalar add = c * cn;
                auto it = t.find(wn);
                if (it == t.end()) {
                    if (!add.is_zero()) t.emplace(wn, std::move(add));
                } else {
                    it->second += add;
                    if (it->second.is_zero()) t.erase(it);
                }
            }
        }
    }
    return from_terms(p, std::move(t), true);
}

Element Element::normal_form() const {
    if (normalized_ || !pres_) {
        Element e = *this;
        e.normalized_ = true;
        return e;
    }
    std::map<Word, Scalar> t;
    for (const auto& [w, c] : terms_) {
        for (auto& [wn, cn] : pres_->straighten(w)) {
            Scalar add = c * cn;
            auto it = t.find(wn);
            if (it == t.end()) {
                if (!add.is_zero()) t.emplace(wn, std::move(add));
            } else {
                it->second += add;
                if (it->second.is_zero()) t.erase(it);
            }
        }
    }
    return from_terms(pres_, std::move(t), true);
}

bool Element::operator==(const Element& o) const {
    if (normalized_ && o.normalized_) return terms_ == o.terms_;
    return normal_form().terms() == o.normal_form().terms();
}

Element Element::divide_exact(const Scalar& s, bool require_poly) const {
    if (s.is_zero()) throw NcError("division of element by zero scalar");
    Element e(pres_);
    for (const auto& [w, c] : terms_) {
        Scalar q = c / s;
        if (require_poly && !q.denominator_is_one())
            throw NcError("inexact scalar division of element coefficient");
        e.terms_.emplace(w, std::move(q));
    }
    e.normalized_ = normalized_;
    return e;
}

Element Element::bar_coeffs() const {
    Element e(pres_);
    for (const auto& [w, c] : terms_) e.terms_.emplace(w, c.bar());
    e.normalized_ = normalized_;
    return e;
}

int Element::max_degree() const {
    int d = 0;
    for (const auto& [w, c] : terms_) d = std::max(d, int(w.size()));
    return d;
}

std::string Element::str() const {
    if (terms_.empty()) return "0";
    const Presentation* p = pres_;
    std::vector<std::pair<Word, Scalar>> ts(terms_.begin(), terms_.end());
    std::stable_sort(ts.begin(), ts.end(), [&](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        if (!p) return a.first < b.first;
        for (size_t k = 0; k < a.first.size(); ++k) {
            int ra = p->rank(a.first[k]), rb = p->rank(b.first[k]);
            if (ra != rb) return ra < rb;
        }
        return false;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : ts) {
        // inline single-monomial coefficients, parenthesize the rest;
        // in both cases pull a leading minus out of the parentheses
        bool simple = c.denominator_is_one() && c.numerator().size() == 1;
        auto lead = c.numerator().begin();
        for (auto it = c.numerator().begin(); it != c.numerator().end(); ++it) {
            int da = 0, db = 0;
            for (int e : it->first) da += e;
            for (int e : lead->first) db += e;
            if (da > db || (da == db && it->first > lead->first)) lead = it;
        }
        bool neg = lead->second < 0;
        std::string cs = (neg ? -c : c).str();
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        bool coeff_one = simple && cs == "1";
        if (!simple)
            os << "(" << cs << ")";
        else if (!coeff_one || w.empty())
            os << cs;
        bool printed = !coeff_one || w.empty() || !simple;
        for (size_t k = 0; k < w.size();) {
            size_t e = k;
            while (e < w.size() && w[e] == w[k]) ++e;
            if (printed) os << "*";
            os << (p ? p->gen_str(w[k]) : std::string("?"));
            if (e - k > 1) os << "^" << (e - k);
            printed = true;
            k = e;
        }
    }
    return os.str();
}

Element make_word(const Presentation* p, std::initializer_list<Gen> gens) {
    std::map<Word, Scalar> t;
    t.emplace(Word(gens), Scalar::one(p->vars()));
    return Element::from_terms(p, std::move(t), false).normal_form();
}

bool is_central(const Element& c, const std::vector<Gen>& gens) {
    const Presentation* p = c.pres();
    if (!p) return true;
    const std::vector<Gen>& gs = gens.empty() ? p->generators() : gens;
    for (const Gen& g : gs) {
        Element ge = p->gen_element(g);
        if (c * ge != ge * c) return false;
    }
    return true;
}

std::vector<Word> basis_enumerate(const Presentation* p, int d) {
    std::vector<Word> out;
    const auto& gens = p->generators();
    Word cur;
    // words with nondecreasing generator rank, by total degree then lex
    std::function<void(size_t, int)> rec = [&](size_t start, int remaining) {
        out.push_back(cur);
        if (remaining == 0) return;
        for (size_t k = start; k < gens.size(); ++k) {
            if (gens[k].fam == Family::Y && !cur.empty() && cur.back() == gens[k])
                continue;  // y^2 = 0
            cur.push_back(gens[k]);
            rec(k, remaining - 1);
            cur.pop_back();
        }
    };
    rec(0, d);
    std::stable_sort(out.begin(), out.end(), [&](const Word& a, const Word& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t k = 0; k < a.size(); ++k) {
            int ra = p->rank(a[k]), rb = p->rank(b[k]);
            if (ra != rb) return ra < rb;
        }
        return false;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// CentralTag / LocalElement

CentralTag::CentralTag(std::string name, Element den)
    : name_(std::move(name)), den_(std::move(den)) {}

const Element& CentralTag::power(int k) const {
    if (k < 0) throw NcError("negative central power");
    std::lock_guard<std::mutex> lock(mu_);
    if (pows_.empty()) {
        pows_.push_back(den_.pres() ? den_.pres()->one() : Element());
        pows_.push_back(den_);
    }
    while (int(pows_.size()) <= k) pows_.push_back(pows_.back() * den_);
    return pows_[k];
}

LocalElement::LocalElement(Element num, int denpow, std::shared_ptr<const CentralTag> tag)
    : num_(std::move(num)), denpow_(denpow), tag_(std::move(tag)) {
    if (denpow_ < 0) throw NcError("negative denominator power");
}

static void check_tags(const LocalElement& a, const LocalElement& b) {
    if (a.tag() && b.tag() && a.tag() != b.tag())
        throw NcError("mismatched localization denominators");
}

LocalElement LocalElement::operator+(const LocalElement& o) const {
    check_tags(*this, o);
    auto tg = tag_ ? tag_ : o.tag();
    int k = std::max(denpow_, o.denpow());
    Element n = num_ * tg->power(k - denpow_) + o.num() * tg->power(k - o.denpow());
    return LocalElement(std::move(n), k, tg);
}

LocalElement LocalElement::operator-() const { return LocalElement(-num_, denpow_, tag_); }

LocalElement LocalElement::operator-(const LocalElement& o) const { return *this + (-o); }

LocalElement LocalElement::operator*(const LocalElement& o) const {
    check_tags(*this, o);
    auto tg = tag_ ? tag_ : o.tag();
    return LocalElement(num_ * o.num(), denpow_ + o.denpow(), tg);
}

LocalElement LocalElement::operator*(const Scalar& s) const {
    return LocalElement(num_ * s, denpow_, tag_);
}

bool LocalElement::operator==(const LocalElement& o) const {
    check_tags(*this, o);
    auto tg = tag_ ? tag_ : o.tag();
    if (!tg) return num_ == o.num();
    return num_ * tg->power(o.denpow()) == o.num() * tg->power(denpow_);
}

}  // namespace qx
