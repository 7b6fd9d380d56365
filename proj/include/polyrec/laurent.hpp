#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "polyrec/rational.hpp"

namespace polyrec {

// Exponent vector of a Laurent monomial x^m = x_1^{m_1}...x_n^{m_n}.
// Entries may be negative.
using Expo = std::vector<int64_t>;

int64_t total_degree(const Expo& e);
Expo expo_add(const Expo& a, const Expo& b);
Expo expo_scale(const Expo& a, int64_t k);

// Term order used everywhere: total degree first, then lexicographic.
struct GradedLexLess {
    bool operator()(const Expo& a, const Expo& b) const;
};

/// Sparse multivariate Laurent polynomial with exact integer coefficients.
/// Terms are kept in graded-lex order and never store a zero coefficient.
class Laurent {
public:
    using TermMap = std::map<Expo, Int, GradedLexLess>;

    explicit Laurent(int dim = 0) : dim_(dim) {}

    static Laurent zero(int dim) { return Laurent(dim); }
    static Laurent constant(int dim, const Int& c);
    static Laurent monomial(const Expo& e, const Int& c = 1);

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Int coeff(const Expo& e) const;

    // Accumulates c*x^e, dropping the term if the sum cancels.
    Laurent& add_term(const Expo& e, const Int& c);

    Laurent operator-() const;
    friend Laurent operator+(const Laurent& p, const Laurent& q);
    friend Laurent operator-(const Laurent& p, const Laurent& q);
    friend Laurent operator*(const Laurent& p, const Laurent& q);
    Laurent& operator+=(const Laurent& q);
    Laurent& operator-=(const Laurent& q);

    bool operator==(const Laurent& o) const;
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    // x^v * p
    Laurent shifted(const Expo& v) const;

    // Canonical text form, bit-exact for golden files: terms ascending in
    // graded-lex order, joined by " + "/" - ", coefficient 1 omitted on
    // non-constant terms, zero exponents omitted, zero polynomial is "0".
    std::string str() const;
    static Laurent parse(const std::string& text, int dim);

private:
    int dim_;
    TermMap terms_;
};

// e_j evaluated at the monomials x^{v} for v in `monomials`.
Laurent elementary_symmetric(const std::vector<Expo>& monomials, int j);

}  // namespace polyrec
