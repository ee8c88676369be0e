#ifndef QX_SCALAR_HPP
#define QX_SCALAR_HPP

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qx {

/// Fixed, ordered set of commuting variables. Index 0 is always `q`.
class VarSet {
public:
    explicit VarSet(std::vector<std::string> names);

    static std::shared_ptr<const VarSet> base();      // {q}
    static std::shared_ptr<const VarSet> spectral();  // {q, l, m}
    static std::shared_ptr<const VarSet> with_params(int count);            // {q, a1..ak}
    static std::shared_ptr<const VarSet> spectral_with_params(int count);   // {q, l, m, a1..ak}

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_[i]; }
    int index_of(const std::string& n) const;  // -1 if absent

private:
    std::vector<std::string> names_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

/// Exponent vector over a VarSet; entries may be negative (Laurent).
using Mono = std::vector<int>;

struct MonoLex {
    bool operator()(const Mono& a, const Mono& b) const { return a < b; }
};

/// Laurent polynomial as a sparse term map with exact rational coefficients.
using TermMap = std::map<Mono, mpq_class, MonoLex>;

class ScalarError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact rational function in the variables of a VarSet, kept in a unique
/// canonical form: denominator free of monomial units and of content, with
/// its leading (total degree, then lex) coefficient equal to 1, and coprime
/// to the numerator.
class Scalar {
public:
    Scalar() = default;  // zero with no var set; adopts one on first combine
    Scalar(VarSetPtr vars, long value);
    Scalar(VarSetPtr vars, const mpq_class& value);

    static Scalar zero(VarSetPtr vars);
    static Scalar one(VarSetPtr vars);
    static Scalar variable(VarSetPtr vars, int index, int exponent = 1);
    static Scalar from_terms(VarSetPtr vars, TermMap num);

    const VarSetPtr& vars() const { return vars_; }
    bool is_zero() const { return num_.empty(); }
    bool is_one() const;
    bool denominator_is_one() const;
    const TermMap& numerator() const { return num_; }
    const TermMap& denominator() const { return den_; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws ScalarError on zero divisor
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const;  // arbitrary total order, for map keys

    Scalar pow(int e) const;

    /// q -> q^{-1}; all other variables fixed.
    Scalar bar() const;

    /// Substitute variable `index` by a value (must not appear in denominators
    /// with cancellation issues; result is re-canonicalized).
    Scalar substitute(int index, const Scalar& value) const;

    /// Canonical text form: terms by total degree then lex, `^` powers,
    /// explicit `/ (...)` when the denominator is non-trivial.
    std::string str() const;

private:
    Scalar(VarSetPtr vars, TermMap num, TermMap den);
    void normalize();

    VarSetPtr vars_;
    TermMap num_;
    TermMap den_;  // {0-mono: 1} for polynomials
};

// -- q-combinatorics ---------------------------------------------------------

/// [n]_v = 1 + v + ... + v^{n-1}
Scalar q_number(int n, const Scalar& base);
/// [n]_v! = [1]_v [2]_v ... [n]_v, with [0]! = 1
Scalar q_factorial(int n, const Scalar& base);
/// (q^n - q^{-n}) / (q - q^{-1})
Scalar gauss_number(int n, VarSetPtr vars);

/// Convenience: q, q^{-1}, -q, (q - q^{-1}) over a var set.
Scalar sc_q(VarSetPtr vars, int exponent = 1);
Scalar sc_neg_q(VarSetPtr vars, int exponent = 1);  // (-q)^e
Scalar sc_q_minus_qinv(VarSetPtr vars);

// -- polynomial internals exposed for tests ---------------------------------
namespace poly {
TermMap add(const TermMap& a, const TermMap& b);
TermMap mul(const TermMap& a, const TermMap& b);
TermMap neg(const TermMap& a);
/// gcd of the ordinary (shifted) parts, lex-leading coefficient 1.
TermMap gcd(const TermMap& a, const TermMap& b, int nvars);
/// exact division; nullopt if not divisible.
std::optional<TermMap> divide_exact(const TermMap& a, const TermMap& b, int nvars);
}  // namespace poly

}  // namespace qx

#endif
