#include "polyrec/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace polyrec {

Rat parse_rat(const std::string& s) {
    auto bad = [&]() { throw std::invalid_argument("not a rational: '" + s + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    auto check_int = [&](const std::string& t) {
        if (t.empty()) bad();
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) bad();
        for (; i < t.size(); ++i)
            if (!isdigit(static_cast<unsigned char>(t[i]))) bad();
    };
    if (slash == std::string::npos) {
        check_int(s);
        return Rat(Int(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check_int(num);
    check_int(den);
    Int d(den);
    if (d == 0) bad();
    return make_rat(Int(num), d);
}

std::string rat_str(const Rat& r) {
    if (rat_is_integer(r)) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

long long to_ll(const Int& v) {
    if (!v.fits_slong_p())
        throw std::overflow_error("integer out of machine range: " + v.get_str());
    return v.get_si();
}

Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

int64_t total_degree(const Expo& e) {
    int64_t d = 0;
    for (auto v : e) d += v;
    return d;
}

Expo expo_add(const Expo& a, const Expo& b) {
    if (a.size() != b.size()) throw std::invalid_argument("exponent dimension mismatch");
    Expo r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Expo expo_scale(const Expo& a, int64_t k) {
    Expo r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
    return r;
}

bool GradedLexLess::operator()(const Expo& a, const Expo& b) const {
    int64_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    // Within a degree class, x1-heavier monomials come first, so that
    // degree-1 terms read x1, x2, ... in ascending order.
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

Laurent Laurent::constant(int dim, const Int& c) {
    Laurent p(dim);
    p.add_term(Expo(dim, 0), c);
    return p;
}

Laurent Laurent::monomial(const Expo& e, const Int& c) {
    Laurent p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

Int Laurent::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

Laurent& Laurent::add_term(const Expo& e, const Int& c) {
    if (static_cast<int>(e.size()) != dim_)
        throw std::invalid_argument("term dimension mismatch");
    if (c == 0) return *this;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

Laurent Laurent::operator-() const {
    Laurent r(dim_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Laurent& Laurent::operator+=(const Laurent& q) {
    if (dim_ != q.dim_) throw std::invalid_argument("polynomial dimension mismatch");
    for (const auto& [e, c] : q.terms_) add_term(e, c);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& q) {
    if (dim_ != q.dim_) throw std::invalid_argument("polynomial dimension mismatch");
    for (const auto& [e, c] : q.terms_) add_term(e, -c);
    return *this;
}

Laurent operator+(const Laurent& p, const Laurent& q) {
    Laurent r = p;
    r += q;
    return r;
}

Laurent operator-(const Laurent& p, const Laurent& q) {
    Laurent r = p;
    r -= q;
    return r;
}

Laurent operator*(const Laurent& p, const Laurent& q) {
    if (p.dim_ != q.dim_) throw std::invalid_argument("polynomial dimension mismatch");
    Laurent r(p.dim_);
    for (const auto& [ea, ca] : p.terms_)
        for (const auto& [eb, cb] : q.terms_)
            r.add_term(expo_add(ea, eb), ca * cb);
    return r;
}

bool Laurent::operator==(const Laurent& o) const {
    if (dim_ != o.dim_ || terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin(), jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (it->first != jt->first || it->second != jt->second) return false;
    return true;
}

Laurent Laurent::shifted(const Expo& v) const {
    if (static_cast<int>(v.size()) != dim_)
        throw std::invalid_argument("shift dimension mismatch");
    Laurent r(dim_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(expo_add(e, v), c);
    return r;
}

std::string Laurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int ac = abs(c);
        std::string mono;
        for (int i = 0; i < dim_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        std::string term;
        if (mono.empty())
            term = ac.get_str();
        else if (ac == 1)
            term = mono;
        else
            term = ac.get_str() + "*" + mono;
        if (first) {
            out << (c < 0 ? "-" : "") << term;
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ") << term;
        }
    }
    return out.str();
}

namespace {

// One term of the canonical form: [coeff *] factor [* factor ...],
// factor = x<idx>[^<exp>].
void parse_term(const std::string& term, bool negative, int dim, Laurent& into) {
    if (term.empty()) throw std::invalid_argument("empty term in polynomial text");
    Int coeff = 1;
    Expo e(dim, 0);
    size_t pos = 0;
    bool any = false;
    while (pos < term.size()) {
        size_t star = term.find('*', pos);
        std::string factor = term.substr(pos, star == std::string::npos ? star : star - pos);
        pos = star == std::string::npos ? term.size() : star + 1;
        if (factor.empty()) throw std::invalid_argument("empty factor in term '" + term + "'");
        if (factor[0] == 'x') {
            size_t caret = factor.find('^');
            std::string idx_s = factor.substr(1, caret == std::string::npos ? caret : caret - 1);
            int64_t exp = 1;
            if (caret != std::string::npos) {
                std::string e_s = factor.substr(caret + 1);
                if (e_s.empty()) throw std::invalid_argument("missing exponent in '" + factor + "'");
                exp = std::stoll(e_s);
            }
            if (idx_s.empty()) throw std::invalid_argument("missing variable index in '" + factor + "'");
            int idx = std::stoi(idx_s);
            if (idx < 1 || idx > dim)
                throw std::invalid_argument("variable x" + idx_s + " out of range for dimension " +
                                            std::to_string(dim));
            e[idx - 1] += exp;
        } else {
            coeff *= Int(factor);
        }
        any = true;
    }
    if (!any) throw std::invalid_argument("empty term");
    if (negative) coeff = -coeff;
    into.add_term(e, coeff);
}

}  // namespace

Laurent Laurent::parse(const std::string& text, int dim) {
    Laurent p(dim);
    std::string s = text;
    if (s == "0") return p;
    bool neg = false;
    if (!s.empty() && s[0] == '-') {
        neg = true;
        s = s.substr(1);
    }
    size_t pos = 0;
    while (true) {
        size_t plus = s.find(" + ", pos);
        size_t minus = s.find(" - ", pos);
        size_t sep = std::min(plus, minus);
        std::string term = s.substr(pos, sep == std::string::npos ? sep : sep - pos);
        parse_term(term, neg, dim, p);
        if (sep == std::string::npos) break;
        neg = (sep == minus);
        pos = sep + 3;
    }
    return p;
}

Laurent elementary_symmetric(const std::vector<Expo>& monomials, int j) {
    if (monomials.empty() && j == 0) return Laurent::constant(0, 1);
    if (j < 0 || j > static_cast<int>(monomials.size()))
        throw std::invalid_argument("elementary_symmetric: index out of range");
    int dim = monomials.empty() ? 0 : static_cast<int>(monomials[0].size());
    // e[t] accumulates over a growing prefix of the monomial list.
    std::vector<Laurent> e(j + 1, Laurent::zero(dim));
    e[0] = Laurent::constant(dim, 1);
    for (const auto& m : monomials) {
        Laurent xm = Laurent::monomial(m);
        for (int t = j; t >= 1; --t) e[t] += xm * e[t - 1];
    }
    return e[j];
}

}  // namespace polyrec
