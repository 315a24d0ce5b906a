#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dsolid/picard.hpp"

namespace dsolid {

/// Sparse multivariate polynomial with exact rational coefficients.
/// Monomials are exponent vectors ordered lexicographically; zero
/// coefficients are never stored.
class SparsePoly {
public:
    using Monomial = std::vector<int>;

    SparsePoly() : nv_(0) {}
    explicit SparsePoly(int nv) : nv_(nv) {}
    static SparsePoly constant(int nv, const Rat& c);
    static SparsePoly variable(int nv, int var);
    static SparsePoly monomial(int nv, Monomial m, const Rat& c);

    int nvars() const { return nv_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;
    bool is_homogeneous(int* degree_out = nullptr) const;
    const std::map<Monomial, Rat>& terms() const { return terms_; }

    Rat coefficient(const Monomial& m) const;

    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const;
    SparsePoly operator-() const;
    SparsePoly operator*(const SparsePoly& o) const;
    SparsePoly operator*(const Rat& s) const;
    bool operator==(const SparsePoly& o) const { return nv_ == o.nv_ && terms_ == o.terms_; }
    bool operator!=(const SparsePoly& o) const { return !(*this == o); }

    /// Substitute `rep` for variable `var`.
    SparsePoly substituted(int var, const SparsePoly& rep) const;

    /// Keep only the listed variables (every term must use no others) and
    /// reindex them in the given order.
    SparsePoly projected(const std::vector<int>& keep) const;

    /// The ratio o / this when o is a constant multiple; nullopt otherwise.
    std::optional<Rat> ratio_to(const SparsePoly& o) const;

    /// Maximal power of `var` dividing every term (0 for the zero poly).
    int divisibility_order(int var) const;

    void add_term(Monomial m, const Rat& c);

    std::string str(const std::vector<std::string>& names = {}) const;

private:
    int nv_;
    std::map<Monomial, Rat> terms_;
};

/// True when b == lambda * a for some nonzero rational lambda (both nonzero).
bool proportional(const SparsePoly& a, const SparsePoly& b);

}  // namespace dsolid
