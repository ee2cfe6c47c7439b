#include "frieze/frieze.hpp"

#include <algorithm>

namespace frieze {

FriezePattern::FriezePattern(const QuiddityCycle& c)
    : quiddity_(c.entries()), lambda_(c.lambda()) {
    const size_t m = quiddity_.size();
    rows_.reserve(m + 1);
    std::vector<RingElement> zeros(m, RingElement::zero(c.domain()));
    std::vector<RingElement> ones(m, RingElement::one(c.domain()));
    rows_.push_back(zeros);
    rows_.push_back(ones);
    for (size_t d = 2; d <= m; ++d) {
        std::vector<RingElement> row;
        row.reserve(m);
        for (size_t i = 0; i < m; ++i) {
            // x[i, i+d] = c_{i+d-2} * x[i, i+d-1] - x[i, i+d-2]
            const RingElement& cj = quiddity_[(i + d - 2) % m];
            row.push_back(cj * rows_[d - 1][i] - rows_[d - 2][i]);
        }
        rows_.push_back(std::move(row));
    }
}

FriezePattern::FriezePattern(std::vector<RingElement> quiddity, int lambda,
                             std::vector<std::vector<RingElement>> rows)
    : quiddity_(std::move(quiddity)), lambda_(lambda), rows_(std::move(rows)) {}

FriezePattern FriezePattern::from_rows(std::vector<RingElement> quiddity, int lambda,
                                       std::vector<std::vector<RingElement>> rows) {
    const size_t m = quiddity.size();
    if (m < 2) throw LengthError("a frieze needs m >= 2");
    if (lambda != 1 && lambda != -1) throw RangeError("lambda must be +1 or -1");
    if (rows.size() != m + 1) throw RangeError("expected m+1 rows");
    const Domain& dom = quiddity.front().domain();
    for (const auto& q : quiddity)
        if (q.domain() != dom) throw DomainError("quiddity entries in different domains");
    for (const auto& row : rows) {
        if (row.size() != m) throw RangeError("each row must have m entries");
        for (const auto& x : row)
            if (x.domain() != dom) throw DomainError("grid entry outside the quiddity domain");
    }
    return FriezePattern(std::move(quiddity), lambda, std::move(rows));
}

const RingElement& FriezePattern::at(long i, long j) const {
    const long m = static_cast<long>(size());
    long d = j - i;
    if (d < 0 || d > m)
        throw RangeError("frieze access outside the strip i <= j <= i+m");
    long ii = i % m;
    if (ii < 0) ii += m;
    return rows_[static_cast<size_t>(d)][static_cast<size_t>(ii)];
}

FriezePattern make_frieze(const QuiddityCycle& c) {
    return FriezePattern(c);
}

namespace {

RingElement det3(const FriezePattern& f, long i, long j) {
    auto x = [&](long r, long c) -> const RingElement& { return f.at(i + r, j + c); };
    return x(0, 0) * (x(1, 1) * x(2, 2) - x(1, 2) * x(2, 1)) -
           x(0, 1) * (x(1, 0) * x(2, 2) - x(1, 2) * x(2, 0)) +
           x(0, 2) * (x(1, 0) * x(2, 1) - x(1, 1) * x(2, 0));
}

} // namespace

bool is_tame(const FriezePattern& f) {
    const long m = static_cast<long>(f.size());
    // A 3x3 block with rows i..i+2 and columns j..j+2 stays inside the
    // strip exactly when i+2 <= j <= i+m-2; vacuous for m < 4.
    for (long i = 0; i < m; ++i)
        for (long j = i + 2; j <= i + m - 2; ++j)
            if (!det3(f, i, j).is_zero()) return false;
    return true;
}

std::vector<FriezeEntry> frieze_entries(const FriezePattern& f) {
    const size_t m = f.size();
    std::vector<FriezeEntry> out;
    if (m < 4) return out;
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 2; j + 2 <= i + m; ++j)
            out.push_back({i, j, f.at(static_cast<long>(i), static_cast<long>(j))});
    return out;
}

std::vector<FriezeEntry> frieze_entries_outside(const FriezePattern& f, const SubsetSpec& subset) {
    std::vector<FriezeEntry> out;
    for (auto& e : frieze_entries(f))
        if (!is_member(subset, e.value)) out.push_back(std::move(e));
    return out;
}

std::string render_text(const FriezePattern& f) {
    const size_t m = f.size();
    size_t width = 1;
    for (size_t d = 0; d <= m; ++d)
        for (size_t i = 0; i < m; ++i)
            width = std::max(width, f.at(static_cast<long>(i), static_cast<long>(i + d)).str().size());
    if (width % 2 == 0) ++width; // keep the half-column stagger integral
    const size_t half = (width + 1) / 2;
    std::string out;
    for (size_t d = 0; d <= m; ++d) {
        std::string line(d * half, ' ');
        for (size_t i = 0; i < m; ++i) {
            std::string cell = f.at(static_cast<long>(i), static_cast<long>(i + d)).str();
            line += std::string(width - cell.size(), ' ') + cell;
            if (i + 1 < m) line += ' ';
        }
        out += line;
        out += '\n';
    }
    return out;
}

} // namespace frieze
