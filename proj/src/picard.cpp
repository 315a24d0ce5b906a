#include "dsolid/picard.hpp"

#include <sstream>

namespace dsolid {

CurveClass CurveClass::operator+(const CurveClass& o) const {
    if (n_ != o.n_) throw validation_error("curve classes live in different lattices");
    std::vector<Int> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] + o.c_[i];
    return CurveClass(LatticeBasis(n_), std::move(r));
}

CurveClass CurveClass::operator-(const CurveClass& o) const {
    if (n_ != o.n_) throw validation_error("curve classes live in different lattices");
    std::vector<Int> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] - o.c_[i];
    return CurveClass(LatticeBasis(n_), std::move(r));
}

CurveClass CurveClass::operator-() const {
    std::vector<Int> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return CurveClass(LatticeBasis(n_), std::move(r));
}

CurveClass CurveClass::operator*(const Int& s) const {
    std::vector<Int> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
    return CurveClass(LatticeBasis(n_), std::move(r));
}

CurveClass CurveClass::extended(const LatticeBasis& larger) const {
    if (larger.n() < n_) throw validation_error("cannot shrink a curve class");
    std::vector<Int> r(larger.rank(), Int(0));
    r[0] = c_[0];
    r[1] = c_[1];
    for (int i = 1; i <= n_; ++i) {
        r[1 + i] = c_[1 + i];
        r[1 + larger.n() + i] = c_[1 + n_ + i];
    }
    return CurveClass(larger, std::move(r));
}

std::string CurveClass::str() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Int& v, const std::string& name) {
        if (v == 0) return;
        if (!first) os << (v > 0 ? "+" : "-");
        else if (v < 0) os << "-";
        Int a = abs(v);
        if (a != 1) os << a << "*";
        os << name;
        first = false;
    };
    emit(c_[0], "H1");
    emit(c_[1], "H2");
    for (int i = 1; i <= n_; ++i) emit(c_[1 + i], "e" + std::to_string(i));
    for (int i = 1; i <= n_; ++i) emit(c_[1 + n_ + i], "eb" + std::to_string(i));
    if (first) os << "0";
    return os.str();
}

Int intersect(const CurveClass& a, const CurveClass& b) {
    if (a.n() != b.n()) throw validation_error("intersection of classes over different lattices");
    Int v = a.h1() * b.h2() + a.h2() * b.h1();
    for (int i = 1; i <= a.n(); ++i) v -= a.e(i) * b.e(i) + a.ebar(i) * b.ebar(i);
    return v;
}

CurveClass conjugate(const CurveClass& c) {
    const int n = c.n();
    std::vector<Int> r(c.coeffs());
    for (int i = 1; i <= n; ++i) std::swap(r[1 + i], r[1 + n + i]);
    return CurveClass(LatticeBasis(n), std::move(r));
}

CurveClass anticanonical(const LatticeBasis& basis) {
    std::vector<Int> r(basis.rank(), Int(-1));
    r[0] = 2;
    r[1] = 2;
    return CurveClass(basis, std::move(r));
}

CurveClass class_h1(const LatticeBasis& b) {
    CurveClass c(b);
    std::vector<Int> r(b.rank(), Int(0));
    r[0] = 1;
    return CurveClass(b, std::move(r));
}

CurveClass class_h2(const LatticeBasis& b) {
    std::vector<Int> r(b.rank(), Int(0));
    r[1] = 1;
    return CurveClass(b, std::move(r));
}

CurveClass class_e(const LatticeBasis& b, int i) {
    if (i < 1 || i > b.n()) throw validation_error("exceptional index out of range");
    std::vector<Int> r(b.rank(), Int(0));
    r[1 + i] = 1;
    return CurveClass(b, std::move(r));
}

CurveClass class_ebar(const LatticeBasis& b, int i) {
    if (i < 1 || i > b.n()) throw validation_error("exceptional index out of range");
    std::vector<Int> r(b.rank(), Int(0));
    r[1 + b.n() + i] = 1;
    return CurveClass(b, std::move(r));
}

}  // namespace dsolid
