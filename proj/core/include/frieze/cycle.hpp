#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "frieze/eta.hpp"
#include "frieze/ring.hpp"

namespace frieze {

/// Element of the dihedral group D_m acting on cycle positions 0..m-1.
/// The index map is j -> (j + rotation) mod m, followed by the reversal
/// j -> m-1-j when `reflected` is set. The group operations below spell
/// out the resulting composition law.
struct DihedralElement {
    size_t rotation = 0;
    bool reflected = false;

    static DihedralElement identity() { return {}; }
    static DihedralElement rotate(size_t t) { return {t, false}; }

    /// Source index feeding position j under this element, for length m.
    size_t source_index(size_t j, size_t m) const;

    /// Element equal to applying *this first, then `next`.
    DihedralElement then(const DihedralElement& next, size_t m) const;
    DihedralElement inverse(size_t m) const;

    bool operator==(const DihedralElement& other) const = default;

    /// "r3" for a rotation, "r3s" when reflected.
    std::string str() const;
};

/// All 2m elements of D_m: rotations 0..m-1 first, then the reflected ones.
std::vector<DihedralElement> dihedral_elements(size_t m);

/// A lambda-quiddity cycle: entries (c_0,...,c_{m-1}) whose ordered eta
/// product is lambda * Id. Verification happens at construction and is
/// never assumed afterwards.
class QuiddityCycle {
public:
    /// Throws LengthError (m < 2), DomainError, or NotACycleError.
    explicit QuiddityCycle(std::vector<RingElement> entries);

    const std::vector<RingElement>& entries() const { return entries_; }
    const RingElement& entry(size_t i) const { return entries_[i]; }
    size_t length() const { return entries_.size(); }
    int lambda() const { return lambda_; }
    const Domain& domain() const { return entries_.front().domain(); }

    bool operator==(const QuiddityCycle& other) const;
    bool operator!=(const QuiddityCycle& other) const { return !(*this == other); }

    /// Comma-joined entries, e.g. "2,0,-3,-1,-1".
    std::string str() const;

private:
    std::vector<RingElement> entries_;
    int lambda_;
};

/// The sign lambda if the sequence satisfies the eta-product identity,
/// nothing otherwise. Throws LengthError below length 2 and DomainError
/// on mixed domains.
std::optional<int> verify_cycle(const std::vector<RingElement>& entries);

/// Permuted cycle; lambda is preserved (and re-verified).
QuiddityCycle apply_dihedral(const QuiddityCycle& c, const DihedralElement& sigma);

/// The sum of a lambda'-cycle of length k and a lambda''-cycle of length l:
/// glue along one seam, adding the seam entries. The result has length
/// k+l-2 and sign -lambda'*lambda''.
QuiddityCycle cycle_sum(const QuiddityCycle& a, const QuiddityCycle& b);

/// Remove a zero entry and add its two neighbours; flips lambda.
/// Requires entries[pos] = 0 and length >= 4.
QuiddityCycle zero_contract(const QuiddityCycle& c, size_t pos);

/// Lexicographically least sequence over the dihedral orbit, under the
/// per-domain total order of compare().
std::vector<RingElement> canonical_entries(const std::vector<RingElement>& entries);
QuiddityCycle canonical_form(const QuiddityCycle& c);

/// Number of distinct sequences in the dihedral orbit (divides 2m).
size_t orbit_size(const std::vector<RingElement>& entries);

} // namespace frieze
