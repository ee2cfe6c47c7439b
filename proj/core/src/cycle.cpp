#include "frieze/cycle.hpp"

#include <algorithm>

namespace frieze {

size_t DihedralElement::source_index(size_t j, size_t m) const {
    if (reflected) return (m - 1 - j + rotation) % m;
    return (j + rotation) % m;
}

DihedralElement DihedralElement::then(const DihedralElement& next, size_t m) const {
    // Index maps compose as sigma_this o sigma_next.
    DihedralElement out;
    out.reflected = reflected != next.reflected;
    long t = static_cast<long>(rotation) +
             (reflected ? -static_cast<long>(next.rotation) : static_cast<long>(next.rotation));
    out.rotation = static_cast<size_t>(((t % static_cast<long>(m)) + static_cast<long>(m)) %
                                       static_cast<long>(m));
    return out;
}

DihedralElement DihedralElement::inverse(size_t m) const {
    if (reflected) return *this; // reflections are involutions
    return {(m - rotation % m) % m, false};
}

std::string DihedralElement::str() const {
    std::string s = "r" + std::to_string(rotation);
    if (reflected) s += "s";
    return s;
}

std::vector<DihedralElement> dihedral_elements(size_t m) {
    std::vector<DihedralElement> out;
    out.reserve(2 * m);
    for (size_t t = 0; t < m; ++t) out.push_back({t, false});
    for (size_t t = 0; t < m; ++t) out.push_back({t, true});
    return out;
}

std::optional<int> verify_cycle(const std::vector<RingElement>& entries) {
    if (entries.size() < 2)
        throw LengthError("a cycle has length at least 2");
    for (const auto& e : entries)
        if (e.domain() != entries.front().domain())
            throw DomainError("cycle entries live in different domains");
    return scalar_id_sign(eta_product(entries));
}

QuiddityCycle::QuiddityCycle(std::vector<RingElement> entries) : entries_(std::move(entries)) {
    auto lambda = verify_cycle(entries_);
    if (!lambda)
        throw NotACycleError("eta product is not +/-Id");
    lambda_ = *lambda;
}

bool QuiddityCycle::operator==(const QuiddityCycle& other) const {
    return lambda_ == other.lambda_ && entries_ == other.entries_;
}

std::string QuiddityCycle::str() const {
    std::string out;
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ',';
        out += entries_[i].str();
    }
    return out;
}

namespace {

std::vector<RingElement> permute(const std::vector<RingElement>& in, const DihedralElement& sigma) {
    const size_t m = in.size();
    std::vector<RingElement> out;
    out.reserve(m);
    for (size_t j = 0; j < m; ++j)
        out.push_back(in[sigma.source_index(j, m)]);
    return out;
}

} // namespace

QuiddityCycle apply_dihedral(const QuiddityCycle& c, const DihedralElement& sigma) {
    if (sigma.rotation >= c.length())
        throw RangeError("dihedral rotation out of range for this length");
    return QuiddityCycle(permute(c.entries(), sigma));
}

QuiddityCycle cycle_sum(const QuiddityCycle& a, const QuiddityCycle& b) {
    if (a.domain() != b.domain())
        throw DomainError("cycle_sum across domains");
    const size_t k = a.length();
    const size_t l = b.length();
    std::vector<RingElement> out;
    out.reserve(k + l - 2);
    out.push_back(a.entry(0) + b.entry(l - 1));
    for (size_t i = 1; i + 1 < k; ++i) out.push_back(a.entry(i));
    out.push_back(a.entry(k - 1) + b.entry(0));
    for (size_t i = 1; i + 1 < l; ++i) out.push_back(b.entry(i));
    return QuiddityCycle(std::move(out));
}

QuiddityCycle zero_contract(const QuiddityCycle& c, size_t pos) {
    const size_t m = c.length();
    if (pos >= m)
        throw RangeError("zero_contract position out of range");
    if (!c.entry(pos).is_zero())
        throw NotZeroError("zero_contract at a nonzero entry");
    if (m < 4)
        throw LengthError("zero_contract needs length >= 4");
    std::vector<RingElement> out;
    out.reserve(m - 2);
    out.push_back(c.entry((pos + m - 1) % m) + c.entry((pos + 1) % m));
    for (size_t i = 2; i + 1 < m; ++i)
        out.push_back(c.entry((pos + i) % m));
    return QuiddityCycle(std::move(out));
}

std::vector<RingElement> canonical_entries(const std::vector<RingElement>& entries) {
    const size_t m = entries.size();
    auto lex_less = [](const std::vector<RingElement>& x, const std::vector<RingElement>& y) {
        for (size_t i = 0; i < x.size(); ++i) {
            int c = compare(x[i], y[i]);
            if (c != 0) return c < 0;
        }
        return false;
    };
    std::vector<RingElement> best = entries;
    for (const auto& sigma : dihedral_elements(m)) {
        std::vector<RingElement> image = permute(entries, sigma);
        if (lex_less(image, best)) best = std::move(image);
    }
    return best;
}

QuiddityCycle canonical_form(const QuiddityCycle& c) {
    return QuiddityCycle(canonical_entries(c.entries()));
}

size_t orbit_size(const std::vector<RingElement>& entries) {
    const size_t m = entries.size();
    std::vector<std::vector<RingElement>> seen;
    for (const auto& sigma : dihedral_elements(m)) {
        std::vector<RingElement> image = permute(entries, sigma);
        if (std::find(seen.begin(), seen.end(), image) == seen.end())
            seen.push_back(std::move(image));
    }
    return seen.size();
}

} // namespace frieze
