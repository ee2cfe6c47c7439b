#pragma once

#include <optional>
#include <span>
#include <string>

#include "frieze/ring.hpp"

namespace frieze {

/// 2x2 matrix over one coefficient domain. Everything this library
/// multiplies has determinant 1 (eta matrices and their products), but the
/// type itself does not assume it.
class Matrix2 {
public:
    Matrix2(RingElement a11, RingElement a12, RingElement a21, RingElement a22);

    static Matrix2 identity(const Domain& domain);

    const RingElement& a11() const { return a11_; }
    const RingElement& a12() const { return a12_; }
    const RingElement& a21() const { return a21_; }
    const RingElement& a22() const { return a22_; }
    const Domain& domain() const { return a11_.domain(); }

    RingElement det() const;

    /// Exact inverse of a det-1 matrix (the adjugate).
    Matrix2 adjugate() const;

    friend Matrix2 operator*(const Matrix2& x, const Matrix2& y);
    Matrix2 operator-() const;

    bool operator==(const Matrix2& other) const;
    bool operator!=(const Matrix2& other) const { return !(*this == other); }

    /// Debug form "[[a,b],[c,d]]".
    std::string str() const;

private:
    RingElement a11_, a12_, a21_, a22_;
};

/// eta(c) = [[c, -1], [1, 0]]; the building block of every product here.
Matrix2 eta(const RingElement& c);

/// eta(c)^-1 = [[0, 1], [-1, c]].
Matrix2 eta_inv(const RingElement& c);

/// Ordered left-to-right product of eta matrices over a run of entries.
Matrix2 eta_product(std::span<const RingElement> entries);

/// +1 if M = Id, -1 if M = -Id, nothing otherwise. Where Id = -Id (Z/2)
/// returns +1; this is the single point deciding cycle closure.
std::optional<int> scalar_id_sign(const Matrix2& m);

/// Closed form for eta(2)^l and eta(-2)^l:
///   eta(2)^l  = [[l+1, -l], [l, 1-l]]
///   eta(-2)^l = (-1)^l [[l+1, l], [-l, 1-l]]
/// `base` selects the sign (+2 or -2); l >= 1.
Matrix2 eta_power_closed(int base, unsigned long l, const Domain& domain = Domain::integers());

} // namespace frieze
