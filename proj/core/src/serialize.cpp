#include "frieze/serialize.hpp"

#include <json.hpp>

namespace frieze {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json domain_fields(const Domain& d) {
    ordered_json out;
    out["domain"] = d.tag();
    if (d.is_modular()) out["n"] = d.modulus().get_str();
    return out;
}

Domain domain_from_fields(const json& j) {
    std::string tag = j.at("domain").get<std::string>();
    if (tag == "Z") return Domain::integers();
    if (tag == "Q") return Domain::rationals();
    if (tag == "Z[i]") return Domain::gaussian_integers();
    if (tag == "Z/n") {
        if (!j.contains("n")) throw ParseError("modular document without an \"n\" field");
        const auto& n = j.at("n");
        mpz_class modulus = n.is_string() ? mpz_class(n.get<std::string>(), 10)
                                          : mpz_class(n.get<long>());
        return Domain::modular(modulus);
    }
    throw ParseError("unknown domain tag: '" + tag + "'");
}

ordered_json cycle_doc(const QuiddityCycle& c) {
    ordered_json out = domain_fields(c.domain());
    out["lambda"] = c.lambda();
    ordered_json entries = ordered_json::array();
    for (const auto& e : c.entries()) entries.push_back(e.str());
    out["entries"] = std::move(entries);
    return out;
}

QuiddityCycle cycle_from_doc(const json& j) {
    Domain domain = domain_from_fields(j);
    std::vector<RingElement> entries;
    for (const auto& item : j.at("entries"))
        entries.push_back(RingElement::make(domain, item.get<std::string>()));
    QuiddityCycle cycle{std::move(entries)};
    if (j.contains("lambda") && j.at("lambda").get<int>() != cycle.lambda())
        throw NotACycleError("document lambda " + j.at("lambda").dump() +
                             " disagrees with the verified sign");
    return cycle;
}

ordered_json witness_doc(const SplitWitness& w) {
    ordered_json out;
    out["sigma"] = {{"rotation", w.sigma.rotation}, {"reflected", w.sigma.reflected}};
    out["k"] = w.k;
    out["derived_a1"] = w.derived_a1.str();
    out["derived_ak"] = w.derived_ak.str();
    return out;
}

ordered_json tree_doc(const DecompositionTree& t) {
    if (t.is_leaf()) {
        const auto& leaf = t.as_leaf();
        ordered_json out;
        out["type"] = "leaf";
        out["cycle"] = cycle_doc(leaf.cycle);
        out["irreducible"] = leaf.irreducible;
        return out;
    }
    ordered_json out;
    out["type"] = "node";
    out["witness"] = witness_doc(t.witness());
    out["cycle"] = cycle_doc(resum(t));
    out["left"] = tree_doc(t.left());
    out["right"] = tree_doc(t.right());
    return out;
}

ordered_json subset_doc(const SubsetSpec& s) {
    ordered_json out;
    switch (s.kind()) {
        case SubsetSpec::Kind::WholeRing: out["kind"] = "ring"; break;
        case SubsetSpec::Kind::NonNegativeIntegers: out["kind"] = "nonneg"; break;
        case SubsetSpec::Kind::PositiveIntegers: out["kind"] = "pos"; break;
        case SubsetSpec::Kind::FiniteList: {
            out["kind"] = "list";
            ordered_json elems = ordered_json::array();
            for (const auto& e : s.elements()) elems.push_back(e.str());
            out["elements"] = std::move(elems);
            break;
        }
        case SubsetSpec::Kind::NormBounded:
            out["kind"] = "norm";
            out["bound"] = s.bound().get_str();
            break;
    }
    return out;
}

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

// Index of the leftmost leaf of each subtree, numbering leaves in order.
size_t dot_edges(const DecompositionTree& t, size_t first_leaf, std::string& edges) {
    if (t.is_leaf()) return 1;
    size_t left_count = dot_edges(t.left(), first_leaf, edges);
    size_t right_count = dot_edges(t.right(), first_leaf + left_count, edges);
    const SplitWitness& w = t.witness();
    edges += "  L" + std::to_string(first_leaf) + " -- L" +
             std::to_string(first_leaf + left_count) + " [label=" +
             dot_quote("k=" + std::to_string(w.k) + ", sigma=" + w.sigma.str()) + "];\n";
    return left_count + right_count;
}

void tree_text(const DecompositionTree& t, size_t indent, std::string& out) {
    std::string pad(indent * 2, ' ');
    if (t.is_leaf()) {
        const auto& leaf = t.as_leaf();
        out += pad + "leaf: " + leaf.cycle.str() + " (lambda = " +
               std::to_string(leaf.cycle.lambda()) + ")" +
               (leaf.irreducible ? " irreducible" : "") + "\n";
        return;
    }
    const SplitWitness& w = t.witness();
    QuiddityCycle whole = resum(t);
    out += pad + "sum: " + whole.str() + " (lambda = " + std::to_string(whole.lambda()) +
           ") [k=" + std::to_string(w.k) + ", sigma=" + w.sigma.str() + "]\n";
    tree_text(t.left(), indent + 1, out);
    tree_text(t.right(), indent + 1, out);
}

} // namespace

std::string cycle_to_json(const QuiddityCycle& c) {
    return cycle_doc(c).dump();
}

QuiddityCycle cycle_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    try {
        return cycle_from_doc(j);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad cycle document: ") + e.what());
    }
}

std::string frieze_to_json(const FriezePattern& f) {
    ordered_json out = domain_fields(f.domain());
    out["lambda"] = f.lambda();
    out["m"] = f.size();
    ordered_json rows = ordered_json::array();
    for (size_t d = 0; d <= f.size(); ++d) {
        ordered_json row = ordered_json::array();
        for (size_t i = 0; i < f.size(); ++i)
            row.push_back(f.at(static_cast<long>(i), static_cast<long>(i + d)).str());
        rows.push_back(std::move(row));
    }
    out["rows"] = std::move(rows);
    out["tame"] = is_tame(f);
    return out.dump();
}

std::string tree_to_json(const DecompositionTree& t) {
    return tree_doc(t).dump();
}

std::string tree_to_dot(const DecompositionTree& t) {
    std::string nodes;
    auto leaves = t.leaves();
    for (size_t idx = 0; idx < leaves.size(); ++idx) {
        const auto& leaf = *leaves[idx];
        nodes += "  L" + std::to_string(idx) + " [label=" +
                 dot_quote(leaf.cycle.str() + " (lambda = " +
                           std::to_string(leaf.cycle.lambda()) + ")") +
                 ", shape=box];\n";
    }
    std::string edges;
    dot_edges(t, 0, edges);
    return "graph decomposition {\n" + nodes + edges + "}\n";
}

std::string tree_to_text(const DecompositionTree& t) {
    std::string out;
    tree_text(t, 0, out);
    out += "leaves:";
    for (const auto* leaf : t.leaves())
        out += " " + leaf->cycle.str() + " (lambda = " + std::to_string(leaf->cycle.lambda()) + ");";
    if (!out.empty() && out.back() == ';') out.pop_back();
    out += "\n";
    return out;
}

std::string report_to_json(const ClassificationReport& r) {
    ordered_json out = domain_fields(r.task.domain());
    out["m"] = r.task.length();
    ordered_json cands = ordered_json::array();
    for (const auto& c : r.task.candidates()) cands.push_back(c.str());
    out["candidates"] = std::move(cands);
    out["subset"] = subset_doc(r.subset);
    out["total_cycles"] = r.total_cycles;
    out["reducible_count"] = r.reducible_count;
    ordered_json irr = ordered_json::array();
    for (const auto& c : r.irreducible_orbits) irr.push_back(cycle_doc(c));
    out["irreducible_orbits"] = std::move(irr);
    return out.dump();
}

std::string report_to_text(const ClassificationReport& r) {
    std::string out = "domain " + r.task.domain().str() + ", m = " +
                      std::to_string(r.task.length()) + ", subset " + r.subset.str() + "\n";
    out += "candidates: ";
    for (size_t i = 0; i < r.task.candidates().size(); ++i) {
        if (i) out += ',';
        out += r.task.candidates()[i].str();
    }
    out += "\norbits: " + std::to_string(r.total_cycles) +
           "  reducible: " + std::to_string(r.reducible_count) +
           "  irreducible: " + std::to_string(r.irreducible_orbits.size()) + "\n";
    for (const auto& c : r.irreducible_orbits)
        out += "  irreducible: " + c.str() + " (lambda = " + std::to_string(c.lambda()) + ")\n";
    return out;
}

} // namespace frieze
