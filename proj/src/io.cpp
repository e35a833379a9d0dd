#include "mmq/io.hpp"

#include <limits>
#include <stdexcept>

namespace mmq {

namespace {

std::vector<std::string> string_list(const Json& j, const char* what)
{
    if (!j.is_array())
        throw std::invalid_argument(std::string(what) + ": expected an array");
    std::vector<std::string> out;
    for (const auto& x : j) {
        if (!x.is_string())
            throw std::invalid_argument(std::string(what) + ": expected strings");
        out.push_back(x.get<std::string>());
    }
    return out;
}

std::vector<std::vector<std::string>> string_lists(const Json& j, const char* what)
{
    if (!j.is_array())
        throw std::invalid_argument(std::string(what) + ": expected an array");
    std::vector<std::vector<std::string>> out;
    for (const auto& x : j)
        out.push_back(string_list(x, what));
    return out;
}

} // namespace

ObjectKind detect_kind(const Json& doc)
{
    if (!doc.is_object())
        throw std::invalid_argument("input: expected a JSON object");
    if (doc.contains("skew_classes"))
        return ObjectKind::Multimatroid;
    if (doc.contains("feasible"))
        return ObjectKind::DeltaMatroid;
    if (doc.contains("vertices") && doc.contains("edges"))
        return ObjectKind::RibbonGraph;
    if (doc.contains("elements") && doc.contains("bases"))
        return ObjectKind::Matroid;
    throw std::invalid_argument("input: cannot determine the object kind");
}

ObjectKind kind_from_name(const std::string& name)
{
    if (name == "multimatroid")
        return ObjectKind::Multimatroid;
    if (name == "matroid")
        return ObjectKind::Matroid;
    if (name == "delta-matroid")
        return ObjectKind::DeltaMatroid;
    if (name == "ribbon-graph")
        return ObjectKind::RibbonGraph;
    throw std::invalid_argument("unknown object kind '" + name + "'");
}

std::string kind_name(ObjectKind kind)
{
    switch (kind) {
    case ObjectKind::Multimatroid: return "multimatroid";
    case ObjectKind::Matroid: return "matroid";
    case ObjectKind::DeltaMatroid: return "delta-matroid";
    default: return "ribbon-graph";
    }
}

Multimatroid parse_multimatroid(const Json& doc)
{
    if (!doc.contains("skew_classes") || !doc.contains("bases"))
        throw std::invalid_argument("multimatroid: needs skew_classes and bases");
    return make_multimatroid(string_lists(doc["skew_classes"], "skew_classes"),
                             string_lists(doc["bases"], "bases"));
}

Matroid parse_matroid(const Json& doc)
{
    if (!doc.contains("elements") || !doc.contains("bases"))
        throw std::invalid_argument("matroid: needs elements and bases");
    std::vector<std::string> elements = string_list(doc["elements"], "elements");
    std::vector<Subset> bases;
    // Resolve labels before the Matroid exists.
    auto index_of = [&](const std::string& l) {
        for (std::size_t i = 0; i < elements.size(); ++i)
            if (elements[i] == l)
                return i;
        throw std::invalid_argument("matroid: unknown element '" + l + "'");
    };
    for (const auto& b : string_lists(doc["bases"], "bases")) {
        Subset s = 0;
        for (const auto& l : b)
            s |= Subset{1} << index_of(l);
        bases.push_back(s);
    }
    return Matroid(std::move(elements), std::move(bases));
}

DeltaMatroid parse_delta(const Json& doc)
{
    if (!doc.contains("elements") || !doc.contains("feasible"))
        throw std::invalid_argument("delta-matroid: needs elements and feasible");
    std::vector<std::string> elements = string_list(doc["elements"], "elements");
    auto index_of = [&](const std::string& l) {
        for (std::size_t i = 0; i < elements.size(); ++i)
            if (elements[i] == l)
                return i;
        throw std::invalid_argument("delta-matroid: unknown element '" + l + "'");
    };
    std::vector<Subset> feasible;
    for (const auto& f : string_lists(doc["feasible"], "feasible")) {
        Subset s = 0;
        for (const auto& l : f)
            s |= Subset{1} << index_of(l);
        feasible.push_back(s);
    }
    return DeltaMatroid(std::move(elements), std::move(feasible));
}

RibbonGraph parse_ribbon(const Json& doc)
{
    if (!doc.contains("vertices") || !doc.contains("edges"))
        throw std::invalid_argument("ribbon-graph: needs vertices and edges");
    auto rotations = string_lists(doc["vertices"], "vertices");
    if (!doc["edges"].is_object())
        throw std::invalid_argument("ribbon-graph: edges must be an object");
    std::vector<RibbonGraph::EdgeData> edges;
    for (const auto& [label, entry] : doc["edges"].items()) {
        if (!entry.is_object() || !entry.contains("halves"))
            throw std::invalid_argument("ribbon-graph: edge '" + label + "' needs halves");
        auto halves = string_list(entry["halves"], "halves");
        if (halves.size() != 2)
            throw std::invalid_argument("ribbon-graph: edge '" + label +
                                        "' needs exactly two halves");
        bool twisted = entry.value("twisted", false);
        edges.push_back({label, {halves[0], halves[1]}, twisted});
    }
    return RibbonGraph(std::move(rotations), std::move(edges));
}

Json to_json(const Multimatroid& z)
{
    const Carrier& c = z.carrier();
    Json classes = Json::array();
    for (int cls = 0; cls < c.num_classes(); ++cls)
        classes.push_back(c.class_labels(cls));
    Json bases = Json::array();
    for (ElementSet b : z.bases())
        bases.push_back(c.labels_of(b));
    return Json{{"skew_classes", classes}, {"bases", bases}};
}

Json to_json(const Matroid& m)
{
    Json bases = Json::array();
    for (Subset b : m.bases())
        bases.push_back(m.labels_of(b));
    return Json{{"elements", m.elements()}, {"bases", bases}};
}

Json to_json(const DeltaMatroid& d)
{
    Json feasible = Json::array();
    for (Subset f : d.feasible())
        feasible.push_back(d.labels_of(f));
    return Json{{"elements", d.elements()}, {"feasible", feasible}};
}

Json to_json(const RibbonGraph& g)
{
    Json edges = Json::object();
    for (const auto& e : g.edges())
        edges[e.label] = Json{{"halves", Json::array({e.halves[0], e.halves[1]})},
                              {"twisted", e.twisted}};
    return Json{{"vertices", g.rotations()}, {"edges", edges}};
}

namespace {

Json int_to_json(const Int& v)
{
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

} // namespace

Json poly_to_json(const Poly& p)
{
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json vars = Json::object();
        for (const auto& [v, e] : m.factors())
            vars[v.str()] = e;
        terms.push_back(Json{{"vars", vars},
                             {"coeff_num", int_to_json(numerator(c))},
                             {"coeff_den", int_to_json(denominator(c))}});
    }
    return terms;
}

} // namespace mmq
