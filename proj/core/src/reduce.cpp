#include "frieze/reduce.hpp"

namespace frieze {

std::optional<UnitEntry> find_unit_entry(const FriezePattern& f) {
    const size_t m = f.size();
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 2; j + 2 <= i + m; ++j) {
            auto eps = is_pm_one(f.at(static_cast<long>(i), static_cast<long>(j)));
            if (eps) return UnitEntry{i, j, *eps};
        }
    return std::nullopt;
}

namespace {

Matrix2 eta_run(const std::vector<RingElement>& c, size_t first, size_t count) {
    const size_t m = c.size();
    Matrix2 p = eta(c[first % m]);
    for (size_t t = 1; t < count; ++t)
        p = p * eta(c[(first + t) % m]);
    return p;
}

SplitWitness make_witness(const QuiddityCycle& original, DihedralElement sigma,
                          QuiddityCycle summand_a, QuiddityCycle summand_b) {
    // An internally produced witness must recombine; anything else is a bug.
    QuiddityCycle target = apply_dihedral(original, sigma);
    QuiddityCycle glued = cycle_sum(summand_a, summand_b);
    if (glued != target)
        throw Error("internal: split witness does not recombine");
    size_t k = summand_a.length();
    RingElement a1 = summand_a.entry(0);
    RingElement ak = summand_a.entry(k - 1);
    return SplitWitness{sigma, k, std::move(summand_a), std::move(summand_b),
                        std::move(a1), std::move(ak)};
}

} // namespace

SplitWitness split_at_unit(const QuiddityCycle& c, size_t i, size_t j, int eps) {
    const size_t m = c.length();
    if (eps != 1 && eps != -1)
        throw RangeError("eps must be +1 or -1");
    if (i >= m || j < i + 2 || j + 2 > i + m)
        throw RangeError("(i,j) is not an interior frieze position");
    const Domain& dom = c.domain();
    const RingElement one = RingElement::one(dom);

    Matrix2 mprod = eta_run(c.entries(), i, j - i - 1); // eta(c_i)...eta(c_{j-2})
    RingElement eps_elem = eps > 0 ? one : -one;
    if (mprod.a11() != eps_elem)
        throw NotUnitError("frieze entry x[" + std::to_string(i) + "," + std::to_string(j) +
                           "] is not " + eps_elem.str());

    RingElement a = eps > 0 ? mprod.a21() : -mprod.a21();
    RingElement b = eps > 0 ? -mprod.a12() : mprod.a12();

    std::vector<RingElement> left;
    left.reserve(j - i + 1);
    left.push_back(a);
    for (size_t t = i; t + 2 <= j; ++t) left.push_back(c.entry(t % m));
    left.push_back(b);

    std::vector<RingElement> right;
    right.reserve(m - (j - i) + 1);
    right.push_back(c.entry((j - 1) % m) - b);
    for (size_t t = j; t + 2 <= i + m; ++t) right.push_back(c.entry(t % m));
    right.push_back(c.entry((i + m - 1) % m) - a);

    DihedralElement sigma{(i + m - 1) % m, false};
    return make_witness(c, sigma, QuiddityCycle(std::move(left)), QuiddityCycle(std::move(right)));
}

namespace {

// For fixed (sigma, k) the interior of the left summand pins
// M = eta(d_1)...eta(d_{k-2}), which forces the boundary entries up to the
// choice of lambda'; only membership remains to be checked.
std::optional<SplitWitness> subset_search(const QuiddityCycle& c, const SubsetSpec& subset) {
    const size_t m = c.length();
    const Domain& dom = c.domain();
    const RingElement one = RingElement::one(dom);
    const bool sign_collapse = (one == -one); // Z/2
    const int lambda = c.lambda();

    for (const auto& sigma : dihedral_elements(m)) {
        QuiddityCycle d = apply_dihedral(c, sigma);
        Matrix2 mprod = eta(d.entry(1)); // M for k = 3
        for (size_t k = 3; k + 1 <= m; ++k) {
            if (k > 3) mprod = mprod * eta(d.entry(k - 2));
            for (int lp : {+1, -1}) {
                if (lp == -1 && sign_collapse) break;
                RingElement lp_elem = lp > 0 ? one : -one;
                if (mprod.a11() != -lp_elem) continue;
                RingElement ak = lp_elem * mprod.a12();
                RingElement a1 = -(lp_elem * mprod.a21());
                if (mprod.a22() != lp_elem * (a1 * ak - one)) continue;
                RingElement b1 = d.entry(k - 1) - ak;
                RingElement bl = d.entry(0) - a1;
                if (!is_member(subset, a1) || !is_member(subset, ak) ||
                    !is_member(subset, b1) || !is_member(subset, bl))
                    continue;

                std::vector<RingElement> left;
                left.reserve(k);
                left.push_back(a1);
                bool interior_ok = true;
                for (size_t t = 1; t + 1 < k; ++t) {
                    if (!is_member(subset, d.entry(t))) { interior_ok = false; break; }
                    left.push_back(d.entry(t));
                }
                if (!interior_ok) continue;
                left.push_back(ak);

                std::vector<RingElement> right;
                right.reserve(m - k + 2);
                right.push_back(b1);
                for (size_t t = k; t < m; ++t) {
                    if (!is_member(subset, d.entry(t))) { interior_ok = false; break; }
                    right.push_back(d.entry(t));
                }
                if (!interior_ok) continue;
                right.push_back(bl);

                QuiddityCycle summand_a{std::move(left)};
                QuiddityCycle summand_b{std::move(right)};
                if (!sign_collapse &&
                    (summand_a.lambda() != lp ||
                     lambda != -summand_a.lambda() * summand_b.lambda()))
                    throw Error("internal: subset search sign law violated");
                return make_witness(c, sigma, std::move(summand_a), std::move(summand_b));
            }
        }
    }
    return std::nullopt;
}

} // namespace

namespace {

void check_reducibility_pre(const QuiddityCycle& c, const SubsetSpec& subset) {
    if (c.length() < 3)
        throw LengthError("reducibility is defined for length > 2");
    if (c.domain() != subset.domain())
        throw DomainError("subset domain differs from the cycle's domain");
}

} // namespace

std::optional<SplitWitness> is_reducible(const QuiddityCycle& c, const SubsetSpec& subset) {
    check_reducibility_pre(c, subset);
    if (c.length() == 3)
        return std::nullopt; // summand lengths k, l > 2 cannot reach k+l-2 = 3

    if (subset.kind() == SubsetSpec::Kind::WholeRing) {
        FriezePattern f = make_frieze(c);
        auto unit = find_unit_entry(f);
        if (!unit) return std::nullopt;
        return split_at_unit(c, unit->i, unit->j, unit->eps);
    }
    return subset_search(c, subset);
}

std::optional<SplitWitness> is_reducible_by_search(const QuiddityCycle& c,
                                                   const SubsetSpec& subset) {
    check_reducibility_pre(c, subset);
    if (c.length() == 3)
        return std::nullopt;
    return subset_search(c, subset);
}

// ---------------------------------------------------------------------------
// DecompositionTree

DecompositionTree DecompositionTree::leaf(QuiddityCycle cycle, bool irreducible) {
    return DecompositionTree(Leaf{std::move(cycle), irreducible});
}

DecompositionTree DecompositionTree::node(SplitWitness witness, DecompositionTree left,
                                          DecompositionTree right) {
    return DecompositionTree(Node{std::move(witness),
                                  std::make_unique<DecompositionTree>(std::move(left)),
                                  std::make_unique<DecompositionTree>(std::move(right))});
}

const DecompositionTree::Leaf& DecompositionTree::as_leaf() const {
    if (!is_leaf()) throw MalformedTreeError("not a leaf");
    return std::get<Leaf>(v_);
}

const SplitWitness& DecompositionTree::witness() const {
    if (is_leaf()) throw MalformedTreeError("leaf has no witness");
    return std::get<Node>(v_).witness;
}

const DecompositionTree& DecompositionTree::left() const {
    if (is_leaf()) throw MalformedTreeError("leaf has no children");
    return *std::get<Node>(v_).left;
}

const DecompositionTree& DecompositionTree::right() const {
    if (is_leaf()) throw MalformedTreeError("leaf has no children");
    return *std::get<Node>(v_).right;
}

std::vector<const DecompositionTree::Leaf*> DecompositionTree::leaves() const {
    std::vector<const Leaf*> out;
    if (is_leaf()) {
        out.push_back(&std::get<Leaf>(v_));
        return out;
    }
    for (const auto* leaf : left().leaves()) out.push_back(leaf);
    for (const auto* leaf : right().leaves()) out.push_back(leaf);
    return out;
}

DecompositionTree decompose(const QuiddityCycle& c, const SubsetSpec& subset) {
    auto witness = is_reducible(c, subset);
    if (!witness)
        return DecompositionTree::leaf(c, true);
    DecompositionTree left = decompose(witness->summand_a, subset);
    DecompositionTree right = decompose(witness->summand_b, subset);
    return DecompositionTree::node(std::move(*witness), std::move(left), std::move(right));
}

QuiddityCycle resum(const DecompositionTree& t) {
    if (t.is_leaf())
        return t.as_leaf().cycle;
    QuiddityCycle left = resum(t.left());
    QuiddityCycle right = resum(t.right());
    const SplitWitness& w = t.witness();
    if (left != w.summand_a || right != w.summand_b)
        throw MalformedTreeError("child subtree does not resum to the recorded summand");
    if (w.k != left.length())
        throw MalformedTreeError("witness length k disagrees with the left summand");
    QuiddityCycle glued = cycle_sum(left, right);
    if (w.sigma.rotation >= glued.length())
        throw MalformedTreeError("witness sigma out of range for the glued length");
    return apply_dihedral(glued, w.sigma.inverse(glued.length()));
}

} // namespace frieze
