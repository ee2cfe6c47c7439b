#include "frieze/ring.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace frieze {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

mpz_class parse_integer(std::string_view s, std::string_view what) {
    if (!is_integer_literal(s))
        throw ParseError("bad " + std::string(what) + " literal: '" + std::string(s) + "'");
    return mpz_class(std::string(s), 10);
}

// One additive term of a Gaussian literal: either c or c*i.
struct GaussTerm {
    mpz_class coeff;
    bool imaginary;
};

GaussTerm parse_gauss_term(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw ParseError("empty term in Gaussian literal");
    GaussTerm term{0, false};
    if (s.back() == 'i') {
        term.imaginary = true;
        s.remove_suffix(1);
        term.coeff = s.empty() ? mpz_class(1) : parse_integer(s, "Gaussian");
    } else {
        term.coeff = parse_integer(s, "Gaussian");
    }
    if (negative) term.coeff = -term.coeff;
    return term;
}

// Accepts "a", "bi", "a+bi", "a-bi" and the mirrored orders "bi+a", "bi-a".
RingElement parse_gaussian(std::string_view s) {
    if (s.empty()) throw ParseError("empty Gaussian literal");
    size_t split = std::string_view::npos;
    for (size_t pos = 1; pos < s.size(); ++pos) {
        if (s[pos] == '+' || s[pos] == '-') {
            if (split != std::string_view::npos)
                throw ParseError("too many terms in Gaussian literal: '" + std::string(s) + "'");
            split = pos;
        }
    }
    if (split == std::string_view::npos) {
        GaussTerm t = parse_gauss_term(s);
        return t.imaginary ? RingElement::gaussian(0, t.coeff) : RingElement::gaussian(t.coeff, 0);
    }
    GaussTerm first = parse_gauss_term(s.substr(0, split));
    GaussTerm second = parse_gauss_term(s.substr(split));
    if (first.imaginary == second.imaginary)
        throw ParseError("Gaussian literal repeats a term kind: '" + std::string(s) + "'");
    const GaussTerm& real = first.imaginary ? second : first;
    const GaussTerm& imag = first.imaginary ? first : second;
    return RingElement::gaussian(real.coeff, imag.coeff);
}

mpz_class canonical_residue(const mpz_class& v, const mpz_class& n) {
    mpz_class r = v % n;
    if (r < 0) r += n;
    return r;
}

} // namespace

// ---------------------------------------------------------------------------
// Domain

Domain Domain::modular(const mpz_class& n) {
    if (n < 2) throw DomainError("modular domain requires n >= 2");
    Domain d(DomainKind::Modular);
    d.modulus_ = n;
    return d;
}

Domain Domain::parse(std::string_view text) {
    std::string_view s = trim(text);
    if (s == "Z") return integers();
    if (s == "Q") return rationals();
    if (s == "Z[i]") return gaussian_integers();
    if (s.size() > 2 && s.substr(0, 2) == "Z/")
        return modular(parse_integer(s.substr(2), "modulus"));
    throw ParseError("unknown domain: '" + std::string(text) + "' (expected Z, Q, Z[i] or Z/<n>)");
}

const mpz_class& Domain::modulus() const {
    if (!is_modular()) throw DomainError("modulus() on a non-modular domain");
    return modulus_;
}

std::string Domain::tag() const {
    switch (kind_) {
        case DomainKind::Integer: return "Z";
        case DomainKind::Rational: return "Q";
        case DomainKind::GaussianInteger: return "Z[i]";
        case DomainKind::Modular: return "Z/n";
    }
    return {};
}

std::string Domain::str() const {
    if (is_modular()) return "Z/" + modulus_.get_str();
    return tag();
}

bool Domain::operator==(const Domain& other) const {
    return kind_ == other.kind_ && modulus_ == other.modulus_;
}

// ---------------------------------------------------------------------------
// RingElement

RingElement::RingElement(Domain domain, mpz_class a, mpz_class b)
    : domain_(std::move(domain)), a_(std::move(a)), b_(std::move(b)) {
    canonicalize();
}

void RingElement::canonicalize() {
    switch (domain_.kind()) {
        case DomainKind::Integer:
        case DomainKind::GaussianInteger:
            break;
        case DomainKind::Rational: {
            if (b_ == 0) throw ParseError("rational with zero denominator");
            if (b_ < 0) { a_ = -a_; b_ = -b_; }
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), a_.get_mpz_t(), b_.get_mpz_t());
            if (g > 1) { a_ /= g; b_ /= g; }
            break;
        }
        case DomainKind::Modular:
            a_ = canonical_residue(a_, domain_.modulus());
            break;
    }
}

RingElement RingElement::integer(const mpz_class& v) {
    return RingElement(Domain::integers(), v, 0);
}

RingElement RingElement::rational(const mpz_class& num, const mpz_class& den) {
    return RingElement(Domain::rationals(), num, den);
}

RingElement RingElement::gaussian(const mpz_class& re, const mpz_class& im) {
    return RingElement(Domain::gaussian_integers(), re, im);
}

RingElement RingElement::modular(const mpz_class& v, const mpz_class& n) {
    return RingElement(Domain::modular(n), v, 0);
}

RingElement RingElement::from_int(const Domain& domain, long value) {
    return from_mpz(domain, mpz_class(value));
}

RingElement RingElement::from_mpz(const Domain& domain, const mpz_class& value) {
    switch (domain.kind()) {
        case DomainKind::Integer: return integer(value);
        case DomainKind::Rational: return rational(value, 1);
        case DomainKind::GaussianInteger: return gaussian(value, 0);
        case DomainKind::Modular: return RingElement(domain, value, 0);
    }
    throw DomainError("unknown domain kind");
}

RingElement RingElement::make(const Domain& domain, std::string_view literal) {
    std::string_view s = trim(literal);
    if (s.empty()) throw ParseError("empty literal");
    switch (domain.kind()) {
        case DomainKind::Integer: {
            if (s.find('/') != std::string_view::npos || s.find('i') != std::string_view::npos)
                throw DomainError("literal '" + std::string(s) + "' is not an integer");
            return integer(parse_integer(s, "integer"));
        }
        case DomainKind::Rational: {
            size_t slash = s.find('/');
            if (slash == std::string_view::npos)
                return rational(parse_integer(s, "rational"), 1);
            mpz_class num = parse_integer(s.substr(0, slash), "rational");
            mpz_class den = parse_integer(s.substr(slash + 1), "rational");
            return rational(num, den);
        }
        case DomainKind::GaussianInteger:
            return parse_gaussian(s);
        case DomainKind::Modular:
            return RingElement(domain, parse_integer(s, "modular"), 0);
    }
    throw DomainError("unknown domain kind");
}

const mpz_class& RingElement::den() const {
    if (domain_.kind() != DomainKind::Rational)
        throw DomainError("den() on a non-rational element");
    return b_;
}

const mpz_class& RingElement::re() const {
    if (domain_.kind() != DomainKind::GaussianInteger)
        throw DomainError("re() on a non-Gaussian element");
    return a_;
}

const mpz_class& RingElement::im() const {
    if (domain_.kind() != DomainKind::GaussianInteger)
        throw DomainError("im() on a non-Gaussian element");
    return b_;
}

mpz_class RingElement::norm() const {
    switch (domain_.kind()) {
        case DomainKind::Integer: return abs(a_);
        case DomainKind::GaussianInteger: return a_ * a_ + b_ * b_;
        default: throw DomainError("norm() is defined over Z and Z[i] only");
    }
}

bool RingElement::is_zero() const {
    if (domain_.kind() == DomainKind::GaussianInteger) return a_ == 0 && b_ == 0;
    return a_ == 0;
}

bool RingElement::is_one() const {
    switch (domain_.kind()) {
        case DomainKind::Integer: return a_ == 1;
        case DomainKind::Rational: return a_ == 1 && b_ == 1;
        case DomainKind::GaussianInteger: return a_ == 1 && b_ == 0;
        case DomainKind::Modular: return a_ == 1 % domain_.modulus();
    }
    return false;
}

std::string RingElement::str() const {
    switch (domain_.kind()) {
        case DomainKind::Integer:
        case DomainKind::Modular:
            return a_.get_str();
        case DomainKind::Rational:
            return b_ == 1 ? a_.get_str() : a_.get_str() + "/" + b_.get_str();
        case DomainKind::GaussianInteger: {
            if (b_ == 0) return a_.get_str();
            std::string imag;
            if (b_ == 1) imag = "i";
            else if (b_ == -1) imag = "-i";
            else imag = b_.get_str() + "i";
            if (a_ == 0) return imag;
            return a_.get_str() + (b_ > 0 ? "+" : "") + imag;
        }
    }
    return {};
}

namespace {

void require_same_domain(const RingElement& x, const RingElement& y) {
    if (x.domain() != y.domain())
        throw DomainError("mixed domains: " + x.domain().str() + " vs " + y.domain().str());
}

} // namespace

RingElement operator+(const RingElement& x, const RingElement& y) {
    require_same_domain(x, y);
    switch (x.domain().kind()) {
        case DomainKind::Integer: return RingElement::integer(x.a_ + y.a_);
        case DomainKind::Rational:
            return RingElement::rational(x.a_ * y.b_ + y.a_ * x.b_, x.b_ * y.b_);
        case DomainKind::GaussianInteger:
            return RingElement::gaussian(x.a_ + y.a_, x.b_ + y.b_);
        case DomainKind::Modular:
            return RingElement(x.domain(), x.a_ + y.a_, 0);
    }
    throw DomainError("unknown domain kind");
}

RingElement operator-(const RingElement& x, const RingElement& y) {
    return x + (-y);
}

RingElement operator*(const RingElement& x, const RingElement& y) {
    require_same_domain(x, y);
    switch (x.domain().kind()) {
        case DomainKind::Integer: return RingElement::integer(x.a_ * y.a_);
        case DomainKind::Rational:
            return RingElement::rational(x.a_ * y.a_, x.b_ * y.b_);
        case DomainKind::GaussianInteger:
            return RingElement::gaussian(x.a_ * y.a_ - x.b_ * y.b_,
                                         x.a_ * y.b_ + x.b_ * y.a_);
        case DomainKind::Modular:
            return RingElement(x.domain(), x.a_ * y.a_, 0);
    }
    throw DomainError("unknown domain kind");
}

RingElement RingElement::operator-() const {
    switch (domain_.kind()) {
        case DomainKind::Integer: return integer(-a_);
        case DomainKind::Rational: return rational(-a_, b_);
        case DomainKind::GaussianInteger: return gaussian(-a_, -b_);
        case DomainKind::Modular: return RingElement(domain_, -a_, 0);
    }
    throw DomainError("unknown domain kind");
}

bool RingElement::operator==(const RingElement& other) const {
    require_same_domain(*this, other);
    return a_ == other.a_ && b_ == other.b_;
}

std::optional<int> is_pm_one(const RingElement& x) {
    if (x.is_one()) return +1; // covers 1 = -1 in Z/2
    if ((-x).is_one()) return -1;
    return std::nullopt;
}

int compare(const RingElement& x, const RingElement& y) {
    if (x.domain() != y.domain())
        throw DomainError("compare() across domains");
    auto sign = [](int c) { return c < 0 ? -1 : c > 0 ? 1 : 0; };
    switch (x.domain().kind()) {
        case DomainKind::Integer:
        case DomainKind::Modular:
            return sign(cmp(x.num(), y.num()));
        case DomainKind::Rational:
            // denominators are positive, so cross-multiplication preserves order
            return sign(cmp(x.num() * y.den(), y.num() * x.den()));
        case DomainKind::GaussianInteger: {
            if (int c = sign(cmp(x.norm(), y.norm())); c != 0) return c;
            if (int c = sign(cmp(x.re(), y.re())); c != 0) return c;
            return sign(cmp(x.im(), y.im()));
        }
    }
    throw DomainError("unknown domain kind");
}

// ---------------------------------------------------------------------------
// SubsetSpec

SubsetSpec SubsetSpec::whole_ring(const Domain& domain) {
    return SubsetSpec(Kind::WholeRing, domain);
}

SubsetSpec SubsetSpec::nonnegative_integers() {
    return SubsetSpec(Kind::NonNegativeIntegers, Domain::integers());
}

SubsetSpec SubsetSpec::positive_integers() {
    return SubsetSpec(Kind::PositiveIntegers, Domain::integers());
}

SubsetSpec SubsetSpec::finite_list(const Domain& domain, std::vector<RingElement> elements) {
    SubsetSpec s(Kind::FiniteList, domain);
    for (const auto& e : elements) {
        if (e.domain() != domain)
            throw DomainError("finite-list element outside the subset's domain");
        if (std::find(s.elements_.begin(), s.elements_.end(), e) == s.elements_.end())
            s.elements_.push_back(e);
    }
    return s;
}

SubsetSpec SubsetSpec::norm_bounded(const Domain& domain, const mpz_class& bound) {
    if (domain.kind() != DomainKind::Integer && domain.kind() != DomainKind::GaussianInteger)
        throw DomainError("norm-bounded subsets exist over Z and Z[i] only");
    if (bound < 0) throw DomainError("norm bound must be non-negative");
    SubsetSpec s(Kind::NormBounded, domain);
    s.bound_ = bound;
    return s;
}

std::string SubsetSpec::str() const {
    switch (kind_) {
        case Kind::WholeRing: return "ring";
        case Kind::NonNegativeIntegers: return "nonneg";
        case Kind::PositiveIntegers: return "pos";
        case Kind::FiniteList: {
            std::string out = "list:";
            for (size_t i = 0; i < elements_.size(); ++i) {
                if (i) out += ',';
                out += elements_[i].str();
            }
            return out;
        }
        case Kind::NormBounded: return "norm:" + bound_.get_str();
    }
    return {};
}

bool is_member(const SubsetSpec& subset, const RingElement& x) {
    if (x.domain() != subset.domain())
        throw DomainError("membership test across domains");
    switch (subset.kind()) {
        case SubsetSpec::Kind::WholeRing:
            return true;
        case SubsetSpec::Kind::NonNegativeIntegers:
            return x.num() >= 0;
        case SubsetSpec::Kind::PositiveIntegers:
            return x.num() > 0;
        case SubsetSpec::Kind::FiniteList:
            return std::find(subset.elements().begin(), subset.elements().end(), x) !=
                   subset.elements().end();
        case SubsetSpec::Kind::NormBounded:
            return x.norm() <= subset.bound();
    }
    return false;
}

} // namespace frieze
