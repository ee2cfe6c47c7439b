#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "frieze/frieze.hpp"
#include "frieze/reduce.hpp"

namespace frieze {

/// Search box for exhaustive cycle generation: all sequences of the given
/// length over a finite candidate set whose eta product closes to +/-Id.
class EnumerationTask {
public:
    /// Candidates are deduplicated (first occurrence kept); they must be
    /// nonempty and share `domain`. length >= 2.
    EnumerationTask(Domain domain, std::vector<RingElement> candidates, size_t length,
                    std::optional<int> lambda_filter = std::nullopt, bool dedup = true);

    const Domain& domain() const { return domain_; }
    const std::vector<RingElement>& candidates() const { return candidates_; }
    size_t length() const { return length_; }
    std::optional<int> lambda_filter() const { return lambda_filter_; }
    bool dedup() const { return dedup_; }

private:
    Domain domain_;
    std::vector<RingElement> candidates_;
    size_t length_;
    std::optional<int> lambda_filter_;
    bool dedup_;
};

struct EnumerationStats {
    std::uint64_t nodes_visited = 0;
    std::uint64_t cycles_found = 0;
};

/// Depth-first enumeration with prefix eta products. The last entry is
/// never searched: the product of the first m-1 etas pins it, so the final
/// step solves for it and checks candidate membership. With dedup on, only
/// the lexicographically least member of each dihedral orbit is emitted.
///
/// Cycles are passed to `sink` in candidate order; `progress`, when given,
/// is invoked periodically with the running counters.
void enumerate_cycles(const EnumerationTask& task,
                      const std::function<void(const QuiddityCycle&)>& sink,
                      EnumerationStats* stats = nullptr,
                      const std::function<void(const EnumerationStats&)>& progress = {});

/// Collect the whole stream. With jobs > 1 the search is partitioned by
/// first entry across that many workers; the merged output order is the
/// same for every job count.
std::vector<QuiddityCycle> enumerate_all(const EnumerationTask& task, unsigned jobs = 1,
                                         EnumerationStats* stats = nullptr);

/// Orbit-level reducibility census over a subset.
struct ClassificationReport {
    EnumerationTask task;
    SubsetSpec subset;
    size_t total_cycles; // dihedral orbits classified
    std::vector<QuiddityCycle> irreducible_orbits;
    size_t reducible_count;
};

/// Enumerate orbits (dedup is forced) and partition them by is_reducible.
/// Throws MembershipError if a candidate lies outside the subset.
ClassificationReport classify(const EnumerationTask& task, const SubsetSpec& subset,
                              unsigned jobs = 1);

/// The length-(4k+6) cycle over Z[i]
///   (2i, -i+1, 2 x 2k, i+1, -2i, i-1, -2 x 2k, -i-1),
/// a (-1)-cycle for every k >= 1.
QuiddityCycle gauss_family(unsigned long k);

struct GaussFamilyReport {
    QuiddityCycle cycle;
    bool irreducible; // no interior frieze entry is 1 or -1
    std::vector<FriezeEntry> entries;
};

/// Compute the full frieze of gauss_family(k) and scan every interior
/// entry for +/-1; the entry list is returned for inspection.
GaussFamilyReport verify_gauss_irreducible(unsigned long k);

} // namespace frieze
