#include "dsolid/poly.hpp"

#include <algorithm>
#include <sstream>

namespace dsolid {

SparsePoly SparsePoly::constant(int nv, const Rat& c) {
    SparsePoly p(nv);
    p.add_term(Monomial(nv, 0), c);
    return p;
}

SparsePoly SparsePoly::variable(int nv, int var) {
    SparsePoly p(nv);
    Monomial m(nv, 0);
    m[var] = 1;
    p.add_term(std::move(m), Rat(1));
    return p;
}

SparsePoly SparsePoly::monomial(int nv, Monomial m, const Rat& c) {
    SparsePoly p(nv);
    p.add_term(std::move(m), c);
    return p;
}

void SparsePoly::add_term(Monomial m, const Rat& c) {
    if (static_cast<int>(m.size()) != nv_)
        throw validation_error("monomial arity does not match the polynomial");
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int SparsePoly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int s = 0;
        for (int e : m) s += e;
        d = std::max(d, s);
    }
    return d;
}

bool SparsePoly::is_homogeneous(int* degree_out) const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int s = 0;
        for (int e : m) s += e;
        if (d == -1) d = s;
        if (s != d) return false;
    }
    if (degree_out) *degree_out = d;
    return true;
}

Rat SparsePoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    if (nv_ != o.nv_) throw validation_error("polynomial arity mismatch");
    SparsePoly r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
    if (nv_ != o.nv_) throw validation_error("polynomial arity mismatch");
    SparsePoly r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly r(nv_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    if (nv_ != o.nv_) throw validation_error("polynomial arity mismatch");
    SparsePoly r(nv_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m(nv_);
            for (int i = 0; i < nv_; ++i) m[i] = ma[i] + mb[i];
            r.add_term(std::move(m), ca * cb);
        }
    }
    return r;
}

SparsePoly SparsePoly::operator*(const Rat& s) const {
    SparsePoly r(nv_);
    if (s == 0) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
    return r;
}

SparsePoly SparsePoly::substituted(int var, const SparsePoly& rep) const {
    if (rep.nvars() != nv_) throw validation_error("substitution arity mismatch");
    SparsePoly out(nv_);
    std::vector<SparsePoly> powers{SparsePoly::constant(nv_, Rat(1))};
    for (const auto& [m, c] : terms_) {
        const int e = m[var];
        while (static_cast<int>(powers.size()) <= e)
            powers.push_back(powers.back() * rep);
        Monomial rest = m;
        rest[var] = 0;
        out = out + powers[e] * SparsePoly::monomial(nv_, std::move(rest), c);
    }
    return out;
}

SparsePoly SparsePoly::projected(const std::vector<int>& keep) const {
    SparsePoly out(static_cast<int>(keep.size()));
    for (const auto& [m, c] : terms_) {
        Monomial mm(keep.size(), 0);
        int used = 0;
        for (size_t i = 0; i < keep.size(); ++i) {
            mm[i] = m[keep[i]];
            used += mm[i];
        }
        int total = 0;
        for (int e : m) total += e;
        if (used != total)
            throw validation_error("projection drops a variable still in use");
        out.add_term(std::move(mm), c);
    }
    return out;
}

std::optional<Rat> SparsePoly::ratio_to(const SparsePoly& o) const {
    if (is_zero() || o.is_zero()) return std::nullopt;
    if (terms_.size() != o.terms_.size()) return std::nullopt;
    std::optional<Rat> lambda;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first) return std::nullopt;
        const Rat r = jt->second / it->second;
        if (!lambda) lambda = r;
        else if (*lambda != r) return std::nullopt;
    }
    return lambda;
}

int SparsePoly::divisibility_order(int var) const {
    if (terms_.empty()) return 0;
    int ord = -1;
    for (const auto& [m, c] : terms_) ord = (ord < 0) ? m[var] : std::min(ord, m[var]);
    return ord;
}

std::string SparsePoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c << ")";
        for (int i = 0; i < nv_; ++i) {
            if (m[i] == 0) continue;
            os << "*";
            if (static_cast<size_t>(i) < names.size()) os << names[i];
            else os << "z" << i;
            if (m[i] > 1) os << "^" << m[i];
        }
        first = false;
    }
    return os.str();
}

bool proportional(const SparsePoly& a, const SparsePoly& b) {
    auto r = a.ratio_to(b);
    return r.has_value() && *r != 0;
}

}  // namespace dsolid
