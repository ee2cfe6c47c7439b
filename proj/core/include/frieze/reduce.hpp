#pragma once

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "frieze/frieze.hpp"

namespace frieze {

/// Certificate that a cycle splits: applying `sigma` to the original cycle
/// yields cycle_sum(summand_a, summand_b). summand_a has length k; its two
/// boundary entries derived_a1 and derived_ak are the values produced by
/// the split (the interior entries come from the original cycle).
struct SplitWitness {
    DihedralElement sigma;
    size_t k;
    QuiddityCycle summand_a;
    QuiddityCycle summand_b;
    RingElement derived_a1;
    RingElement derived_ak;
};

struct UnitEntry {
    size_t i;
    size_t j;
    int eps; // +1 or -1
};

/// First interior entry equal to 1 or -1, scanning i ascending then j
/// ascending; nothing if the frieze has no unit entry.
std::optional<UnitEntry> find_unit_entry(const FriezePattern& f);

/// Constructive split at a unit interior entry x[i,j] = eps, valid when the
/// governing subset is the whole ring. With M the eta product over
/// positions i..j-2, the derived boundary entries are a = eps*M21 and
/// b = -eps*M12; summand_a = (a, c_i, ..., c_{j-2}, b) is a (-eps)-cycle
/// and summand_b closes the complement as a (lambda*eps)-cycle.
SplitWitness split_at_unit(const QuiddityCycle& c, size_t i, size_t j, int eps);

/// Decide reducibility over a subset; returns the first witness in scan
/// order, or nothing if the cycle is irreducible. Cycles of length 3 are
/// irreducible (no admissible summand lengths).
///
/// Over the whole ring this reduces to the unit-entry criterion; over a
/// proper subset it runs the exhaustive (sigma, k) search with forced
/// boundary entries.
std::optional<SplitWitness> is_reducible(const QuiddityCycle& c, const SubsetSpec& subset);

/// The exhaustive (sigma, k) search route, usable with any subset
/// including the whole ring. is_reducible delegates to it for proper
/// subsets; keeping it public lets callers cross-check the unit-entry
/// shortcut against the definition directly.
std::optional<SplitWitness> is_reducible_by_search(const QuiddityCycle& c,
                                                   const SubsetSpec& subset);

/// Binary tree recording how a cycle decomposes into irreducible summands.
class DecompositionTree {
public:
    struct Leaf {
        QuiddityCycle cycle;
        bool irreducible;
    };

    static DecompositionTree leaf(QuiddityCycle cycle, bool irreducible);
    static DecompositionTree node(SplitWitness witness, DecompositionTree left,
                                  DecompositionTree right);

    bool is_leaf() const { return std::holds_alternative<Leaf>(v_); }
    const Leaf& as_leaf() const;
    const SplitWitness& witness() const;
    const DecompositionTree& left() const;
    const DecompositionTree& right() const;

    /// Leaves in left-to-right order.
    std::vector<const Leaf*> leaves() const;

private:
    struct Node {
        SplitWitness witness;
        std::unique_ptr<DecompositionTree> left;
        std::unique_ptr<DecompositionTree> right;
    };

    explicit DecompositionTree(std::variant<Leaf, Node> v) : v_(std::move(v)) {}

    std::variant<Leaf, Node> v_;
};

/// Split recursively until every leaf is irreducible over the subset.
/// Deterministic given the fixed scan order.
DecompositionTree decompose(const QuiddityCycle& c, const SubsetSpec& subset);

/// Recombine bottom-up: sum the children of every node and undo its
/// dihedral element. Returns the root cycle exactly; throws
/// MalformedTreeError if the tree is inconsistent.
QuiddityCycle resum(const DecompositionTree& t);

} // namespace frieze
