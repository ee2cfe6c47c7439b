#pragma once

#include <string>
#include <vector>

#include "frieze/cycle.hpp"

namespace frieze {

struct FriezeEntry {
    size_t i;
    size_t j;
    RingElement value;
};

/// The array x[i,j] generated by a quiddity cycle, stored over one
/// fundamental domain 0 <= i < m, i <= j <= i+m and extended everywhere
/// else by the periodicity x[i+m, j+m] = x[i, j].
///
/// Border rows: x[i,i] = 0, x[i,i+1] = 1, x[i,i+2] = c_i,
/// x[i,i+m-1] = -lambda, x[i,i+m] = 0.
class FriezePattern {
public:
    explicit FriezePattern(const QuiddityCycle& c);

    /// Adopt an explicit grid, rows[d][i] = x[i, i+d] for d in [0, m].
    /// Shape and domains are validated; the frieze identities are not, so
    /// is_tame can genuinely reject foreign or edited arrays.
    static FriezePattern from_rows(std::vector<RingElement> quiddity, int lambda,
                                   std::vector<std::vector<RingElement>> rows);

    size_t size() const { return quiddity_.size(); } // m
    int lambda() const { return lambda_; }
    const Domain& domain() const { return quiddity_.front().domain(); }
    const std::vector<RingElement>& quiddity() const { return quiddity_; }

    /// x[i,j] for any integers with i <= j <= i+m (periodic in i).
    const RingElement& at(long i, long j) const;

private:
    FriezePattern(std::vector<RingElement> quiddity, int lambda,
                  std::vector<std::vector<RingElement>> rows);

    std::vector<RingElement> quiddity_;
    int lambda_;
    // rows_[d][i] = x[i, i+d] for d in [0, m], i in [0, m)
    std::vector<std::vector<RingElement>> rows_;
};

/// Generate the frieze of a verified cycle via the continuant recurrence
/// x[i,j+1] = c_{j-1} * x[i,j] - x[i,j-1].
FriezePattern make_frieze(const QuiddityCycle& c);

/// True iff every adjacent 3x3 determinant inside the bordered strip
/// vanishes. Every frieze produced by make_frieze is tame.
bool is_tame(const FriezePattern& f);

/// The interior entries x[i,j], i+2 <= j <= i+m-2, over one period.
/// Empty for m <= 3.
std::vector<FriezeEntry> frieze_entries(const FriezePattern& f);

/// Interior entries that fall outside a subset of the ambient domain.
/// (Entries always live in the ambient domain; when R is not a ring some
/// of them may leave R.)
std::vector<FriezeEntry> frieze_entries_outside(const FriezePattern& f, const SubsetSpec& subset);

/// Diagonal text layout: row r holds x[i, i+r] for i in [0, m), entries
/// right-aligned in fixed-width columns, each row shifted by half a column.
std::string render_text(const FriezePattern& f);

} // namespace frieze
