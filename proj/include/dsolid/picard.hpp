#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <initializer_list>
#include <string>
#include <vector>

#include "dsolid/errors.hpp"

namespace dsolid {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Basis of the Picard lattice of a 2n-point blow-up of P1 x P1.
///
/// Generators are ordered (H1, H2, e_1..e_n, ebar_1..ebar_n), rank 2n+2.
/// The form is H1.H2 = 1, H1^2 = H2^2 = 0, e_i.e_j = -delta_ij,
/// ebar_i.ebar_j = -delta_ij, all cross terms zero; signature (1, 2n+1).
class LatticeBasis {
public:
    explicit LatticeBasis(int n) : n_(n) {
        if (n < 0) throw validation_error("lattice basis needs n >= 0");
    }
    int n() const { return n_; }
    int rank() const { return 2 * n_ + 2; }
    bool operator==(const LatticeBasis& o) const { return n_ == o.n_; }
    bool operator!=(const LatticeBasis& o) const { return !(*this == o); }

private:
    int n_;
};

/// An integer divisor class (a, b, m_1..m_n, mbar_1..mbar_n), stored with the
/// signs as written: the class a*H1 + b*H2 + sum c_i e_i + sum cbar_i ebar_i.
/// Immutable value type; all operations return fresh values.
class CurveClass {
public:
    explicit CurveClass(const LatticeBasis& basis)
        : n_(basis.n()), c_(basis.rank(), Int(0)) {}
    CurveClass(const LatticeBasis& basis, std::vector<Int> coeffs)
        : n_(basis.n()), c_(std::move(coeffs)) {
        if (static_cast<int>(c_.size()) != basis.rank())
            throw validation_error("coefficient vector does not match lattice rank");
    }

    int n() const { return n_; }
    LatticeBasis basis() const { return LatticeBasis(n_); }
    const std::vector<Int>& coeffs() const { return c_; }

    const Int& h1() const { return c_[0]; }
    const Int& h2() const { return c_[1]; }
    const Int& e(int i) const { return c_[1 + i]; }         // 1-based
    const Int& ebar(int i) const { return c_[1 + n_ + i]; } // 1-based

    CurveClass operator+(const CurveClass& o) const;
    CurveClass operator-(const CurveClass& o) const;
    CurveClass operator-() const;
    CurveClass operator*(const Int& s) const;
    bool operator==(const CurveClass& o) const { return n_ == o.n_ && c_ == o.c_; }
    bool operator!=(const CurveClass& o) const { return !(*this == o); }

    /// Re-embed into the lattice of a larger blow-up (new coefficients zero).
    CurveClass extended(const LatticeBasis& larger) const;

    std::string str() const;

private:
    int n_;
    std::vector<Int> c_;
};

/// Symmetric bilinear intersection pairing. Throws on basis mismatch.
Int intersect(const CurveClass& a, const CurveClass& b);

/// The involution induced by (c.c.) x (a.p.): swaps e_i with ebar_i.
CurveClass conjugate(const CurveClass& c);

/// -K = 2H1 + 2H2 - sum e_i - sum ebar_i; self-intersection 8 - 2n.
CurveClass anticanonical(const LatticeBasis& basis);

/// Convenience constructors for basis vectors.
CurveClass class_h1(const LatticeBasis&);
CurveClass class_h2(const LatticeBasis&);
CurveClass class_e(const LatticeBasis&, int i);
CurveClass class_ebar(const LatticeBasis&, int i);

}  // namespace dsolid
