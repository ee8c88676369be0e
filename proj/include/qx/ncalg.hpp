#ifndef QX_NCALG_HPP
#define QX_NCALG_HPP

#include "qx/scalar.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace qx {

enum class Family : uint8_t { T, X, Y, U, V };

/// One generator of a presentation. The y family uses only `i`;
/// u/v are the two commuting copies of t in the tensor-square presentation.
struct Gen {
    Family fam;
    uint8_t i;
    uint8_t j;

    friend bool operator==(const Gen& a, const Gen& b) {
        return a.fam == b.fam && a.i == b.i && a.j == b.j;
    }
    friend auto operator<=>(const Gen& a, const Gen& b) = default;
};

using Word = std::vector<Gen>;

struct WordHash {
    size_t operator()(const Word& w) const {
        size_t h = 1469598103934665603ull;
        for (const Gen& g : w) {
            h ^= (size_t(g.fam) << 16) | (size_t(g.i) << 8) | size_t(g.j);
            h *= 1099511628211ull;
        }
        return h;
    }
};

enum class PresKind { MatN, XO, XSp, Ext, MatTensorSquare, XSpWithExt };

class Element;

class NcError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A generator alphabet with a total order and a complete swap-rule table;
/// defines the PBW normal form of one algebra. Immutable after construction;
/// internal caches are guarded for shared use.
class Presentation {
public:
    static const Presentation* make(PresKind kind, int N, VarSetPtr vars = nullptr);

    PresKind kind() const { return kind_; }
    int n() const { return N_; }
    const VarSetPtr& vars() const { return vars_; }
    bool symplectic() const { return kind_ == PresKind::XSp || kind_ == PresKind::XSpWithExt; }

    /// Total generator order, as a sortable rank.
    int rank(const Gen& g) const;

    /// All generators, in order.
    const std::vector<Gen>& generators() const { return gens_; }

    /// Matrix entry as an Element, applying the symmetry canonicalization:
    /// case O with i > j gives q^{-1} x[j,i]; case Sp gives -q x[j,i] (i > j)
    /// and 0 on the diagonal.
    Element x_entry(int i, int j) const;
    Element t_entry(int i, int j) const;  // t, or u/v via copy argument below
    Element tensor_entry(Family copy, int i, int j) const;
    Element y_entry(int i) const;
    Element gen_element(const Gen& g) const;
    Element scalar_element(const Scalar& s) const;
    Element zero() const;
    Element one() const;

    /// Expansion of the product g*h when it is out of order (rank(g) > rank(h),
    /// or the square of an exterior generator). Terms are (coefficient, pair of
    /// generators) with an empty pair meaning the product vanishes.
    struct SwapTerm {
        Scalar coeff;
        Gen a, b;
    };
    const std::vector<SwapTerm>& swap_rule(const Gen& g, const Gen& h) const;
    bool needs_rewrite(const Gen& g, const Gen& h) const;

    /// Normal form of a single raw word, as term map over ordered words.
    std::map<Word, Scalar> straighten(const Word& w) const;

    std::string gen_str(const Gen& g) const;

private:
    Presentation(PresKind kind, int N, VarSetPtr vars);
    void build_generators();
    std::vector<SwapTerm> make_rule(const Gen& g, const Gen& h) const;
    std::map<Word, Scalar> mul_gen(const Word& ordered, const Gen& g) const;

    PresKind kind_;
    int N_;
    VarSetPtr vars_;
    std::vector<Gen> gens_;
    std::map<std::pair<Gen, Gen>, int> rank_pairs_;  // unused; rank is computed

    mutable std::mutex mu_;
    mutable std::map<std::pair<Gen, Gen>, std::vector<SwapTerm>> rule_cache_;
    mutable std::unordered_map<Word, std::map<Word, Scalar>, WordHash> nf_cache_;
    mutable long steps_ = 0;
};

/// Finite linear combination of words with Scalar coefficients.  Elements
/// produced by the arithmetic operators are always in PBW normal form.
class Element {
public:
    Element() : pres_(nullptr) {}
    explicit Element(const Presentation* p) : pres_(p) {}

    static Element from_terms(const Presentation* p, std::map<Word, Scalar> terms,
                              bool normalized);

    const Presentation* pres() const { return pres_; }
    const std::map<Word, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_normalized() const { return normalized_; }

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator*(const Element& o) const;  // normal-formed product
    Element operator-() const;
    Element operator*(const Scalar& s) const;
    Element& operator+=(const Element& o) { return *this = *this + o; }
    Element& operator-=(const Element& o) { return *this = *this - o; }

    bool operator==(const Element& o) const;
    bool operator!=(const Element& o) const { return !(*this == o); }

    Element normal_form() const;

    /// Exact division of every coefficient by a scalar; throws NcError if any
    /// quotient fails to be polynomial (denominator-free) when `require_poly`.
    Element divide_exact(const Scalar& s, bool require_poly = true) const;

    /// Apply the bar involution q -> q^{-1} to every coefficient.
    Element bar_coeffs() const;

    int max_degree() const;
    size_t term_count() const { return terms_.size(); }
    std::string str() const;

private:
    const Presentation* pres_;
    std::map<Word, Scalar> terms_;
    bool normalized_ = true;
};

/// gen^1 convenience constructors
Element make_word(const Presentation* p, std::initializer_list<Gen> gens);

/// True iff c commutes with every generator in `gens` (empty = all generators).
bool is_central(const Element& c, const std::vector<Gen>& gens = {});

/// All PBW monomials of total degree <= d, in monomial order.
std::vector<Word> basis_enumerate(const Presentation* p, int d);

/// A declared central denominator (sdet, Pf, or a submatrix sdet).
class CentralTag {
public:
    CentralTag(std::string name, Element den);
    const std::string& name() const { return name_; }
    const Element& den() const { return den_; }
    const Element& power(int k) const;  // cached k-th power, k >= 0

private:
    std::string name_;
    Element den_;
    mutable std::mutex mu_;
    mutable std::vector<Element> pows_;
};

/// Pair (numerator, denominator power) over a declared central element.
class LocalElement {
public:
    LocalElement() = default;
    LocalElement(Element num, int denpow, std::shared_ptr<const CentralTag> tag);

    const Element& num() const { return num_; }
    int denpow() const { return denpow_; }
    const std::shared_ptr<const CentralTag>& tag() const { return tag_; }
    bool is_zero() const { return num_.is_zero(); }

    LocalElement operator+(const LocalElement& o) const;
    LocalElement operator-(const LocalElement& o) const;
    LocalElement operator*(const LocalElement& o) const;
    LocalElement operator-() const;
    LocalElement operator*(const Scalar& s) const;

    /// Equality by cross-multiplication of normal forms.
    bool operator==(const LocalElement& o) const;
    bool operator!=(const LocalElement& o) const { return !(*this == o); }

private:
    Element num_;
    int denpow_ = 0;
    std::shared_ptr<const CentralTag> tag_;
};

}  // namespace qx

#endif
