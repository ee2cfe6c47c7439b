#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frieze/errors.hpp"

namespace frieze {

enum class DomainKind { Integer, Rational, GaussianInteger, Modular };

/// One of the four supported coefficient domains. All arithmetic over any
/// of them is exact; there is no floating point anywhere in the library.
class Domain {
public:
    static Domain integers() { return Domain(DomainKind::Integer); }
    static Domain rationals() { return Domain(DomainKind::Rational); }
    static Domain gaussian_integers() { return Domain(DomainKind::GaussianInteger); }
    static Domain modular(const mpz_class& n);

    /// Accepts the CLI spellings "Z", "Q", "Z[i]" and "Z/<n>" (e.g. "Z/7").
    static Domain parse(std::string_view text);

    DomainKind kind() const { return kind_; }
    bool is_modular() const { return kind_ == DomainKind::Modular; }
    const mpz_class& modulus() const;

    /// JSON tag: "Z", "Q", "Z[i]" or "Z/n" (the modulus travels separately).
    std::string tag() const;
    /// Human-readable name, e.g. "Z/7".
    std::string str() const;

    bool operator==(const Domain& other) const;
    bool operator!=(const Domain& other) const { return !(*this == other); }

private:
    explicit Domain(DomainKind kind) : kind_(kind) {}

    DomainKind kind_;
    mpz_class modulus_; // 0 unless Modular
};

/// An exact value in one coefficient domain.
///
/// Canonical forms are maintained at all times so equality of values is
/// equality of representations: rationals are in lowest terms with a
/// positive denominator, modular values are residues in [0, n).
///
/// Literal grammar (make/parse):
///   integer   -?[0-9]+
///   rational  int(/int)?
///   gaussian  a, bi, a+bi, a-bi (either term order; "i" and "-i" allowed)
///   modular   any integer literal, reduced mod n
class RingElement {
public:
    /// Parse a literal in the domain's grammar.
    static RingElement make(const Domain& domain, std::string_view literal);

    /// Lift an integer into any domain.
    static RingElement from_int(const Domain& domain, long value);
    static RingElement from_mpz(const Domain& domain, const mpz_class& value);

    static RingElement zero(const Domain& domain) { return from_int(domain, 0); }
    static RingElement one(const Domain& domain) { return from_int(domain, 1); }

    static RingElement integer(const mpz_class& v);
    static RingElement rational(const mpz_class& num, const mpz_class& den);
    static RingElement gaussian(const mpz_class& re, const mpz_class& im);
    static RingElement modular(const mpz_class& v, const mpz_class& n);

    const Domain& domain() const { return domain_; }

    bool is_zero() const;
    bool is_one() const;

    /// First component: the integer itself, the rational numerator, the
    /// Gaussian real part, or the modular residue.
    const mpz_class& num() const { return a_; }
    /// Rational denominator (1 for integers embedded in Q).
    const mpz_class& den() const;
    const mpz_class& re() const;
    const mpz_class& im() const;

    /// |x| over Z, the field norm re^2+im^2 over Z[i].
    mpz_class norm() const;

    std::string str() const;

    friend RingElement operator+(const RingElement& x, const RingElement& y);
    friend RingElement operator-(const RingElement& x, const RingElement& y);
    friend RingElement operator*(const RingElement& x, const RingElement& y);
    RingElement operator-() const;

    bool operator==(const RingElement& other) const;
    bool operator!=(const RingElement& other) const { return !(*this == other); }

private:
    RingElement(Domain domain, mpz_class a, mpz_class b);
    void canonicalize();

    Domain domain_;
    mpz_class a_; // integer value / rational numerator / gaussian re / residue
    mpz_class b_; // rational denominator / gaussian im; unused otherwise
};

/// Returns +1 if x is the ring's 1, -1 if x is -1, nothing otherwise.
/// In rings where 1 = -1 (Z/2) returns +1.
std::optional<int> is_pm_one(const RingElement& x);

/// Total order used for orbit canonicalization and dedup. Integers and
/// residues numerically, rationals by value, Gaussian integers by
/// (norm, re, im). Not compatible with the ring structure.
int compare(const RingElement& x, const RingElement& y);

/// A subset R of a coefficient domain, the universe over which
/// reducibility questions are posed.
class SubsetSpec {
public:
    enum class Kind { WholeRing, NonNegativeIntegers, PositiveIntegers, FiniteList, NormBounded };

    static SubsetSpec whole_ring(const Domain& domain);
    static SubsetSpec nonnegative_integers();
    static SubsetSpec positive_integers();
    /// Elements are deduplicated; they must all share `domain`.
    static SubsetSpec finite_list(const Domain& domain, std::vector<RingElement> elements);
    /// Over Z: |x| <= bound. Over Z[i]: re^2+im^2 <= bound.
    static SubsetSpec norm_bounded(const Domain& domain, const mpz_class& bound);

    Kind kind() const { return kind_; }
    const Domain& domain() const { return domain_; }
    const std::vector<RingElement>& elements() const { return elements_; }
    const mpz_class& bound() const { return bound_; }

    std::string str() const;

private:
    SubsetSpec(Kind kind, Domain domain) : kind_(kind), domain_(std::move(domain)) {}

    Kind kind_;
    Domain domain_;
    std::vector<RingElement> elements_; // FiniteList only
    mpz_class bound_;                   // NormBounded only
};

/// Membership test; throws DomainError if x lives in a different domain.
bool is_member(const SubsetSpec& subset, const RingElement& x);

} // namespace frieze
