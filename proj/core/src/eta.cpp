#include "frieze/eta.hpp"

namespace frieze {

Matrix2::Matrix2(RingElement a11, RingElement a12, RingElement a21, RingElement a22)
    : a11_(std::move(a11)), a12_(std::move(a12)), a21_(std::move(a21)), a22_(std::move(a22)) {
    if (a11_.domain() != a12_.domain() || a11_.domain() != a21_.domain() ||
        a11_.domain() != a22_.domain())
        throw DomainError("matrix entries live in different domains");
}

Matrix2 Matrix2::identity(const Domain& domain) {
    RingElement one = RingElement::one(domain);
    RingElement zero = RingElement::zero(domain);
    return Matrix2(one, zero, zero, one);
}

RingElement Matrix2::det() const {
    return a11_ * a22_ - a12_ * a21_;
}

Matrix2 Matrix2::adjugate() const {
    return Matrix2(a22_, -a12_, -a21_, a11_);
}

Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
    if (x.domain() != y.domain())
        throw DomainError("matrix product across domains");
    return Matrix2(x.a11_ * y.a11_ + x.a12_ * y.a21_,
                   x.a11_ * y.a12_ + x.a12_ * y.a22_,
                   x.a21_ * y.a11_ + x.a22_ * y.a21_,
                   x.a21_ * y.a12_ + x.a22_ * y.a22_);
}

Matrix2 Matrix2::operator-() const {
    return Matrix2(-a11_, -a12_, -a21_, -a22_);
}

bool Matrix2::operator==(const Matrix2& other) const {
    return a11_ == other.a11_ && a12_ == other.a12_ &&
           a21_ == other.a21_ && a22_ == other.a22_;
}

std::string Matrix2::str() const {
    return "[[" + a11_.str() + "," + a12_.str() + "],[" + a21_.str() + "," + a22_.str() + "]]";
}

Matrix2 eta(const RingElement& c) {
    const Domain& d = c.domain();
    return Matrix2(c, -RingElement::one(d), RingElement::one(d), RingElement::zero(d));
}

Matrix2 eta_inv(const RingElement& c) {
    const Domain& d = c.domain();
    return Matrix2(RingElement::zero(d), RingElement::one(d), -RingElement::one(d), c);
}

Matrix2 eta_product(std::span<const RingElement> entries) {
    if (entries.empty())
        throw LengthError("eta_product over an empty range");
    Matrix2 p = eta(entries[0]);
    for (size_t i = 1; i < entries.size(); ++i)
        p = p * eta(entries[i]);
    return p;
}

std::optional<int> scalar_id_sign(const Matrix2& m) {
    if (!m.a12().is_zero() || !m.a21().is_zero()) return std::nullopt;
    if (m.a11().is_one() && m.a22().is_one()) return +1; // covers Id = -Id in Z/2
    if ((-m.a11()).is_one() && (-m.a22()).is_one()) return -1;
    return std::nullopt;
}

Matrix2 eta_power_closed(int base, unsigned long l, const Domain& domain) {
    if (base != 2 && base != -2)
        throw RangeError("eta_power_closed: base must be +2 or -2");
    if (l < 1)
        throw RangeError("eta_power_closed: exponent must be >= 1");
    mpz_class ell(static_cast<unsigned long>(l));
    auto lift = [&](const mpz_class& v) { return RingElement::from_mpz(domain, v); };
    if (base == 2)
        return Matrix2(lift(ell + 1), lift(-ell), lift(ell), lift(1 - ell));
    Matrix2 m(lift(ell + 1), lift(ell), lift(-ell), lift(1 - ell));
    return (l % 2 == 0) ? m : -m;
}

} // namespace frieze
