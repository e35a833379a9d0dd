#include "mmq/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "mmq/expansions.hpp"
#include "mmq/io.hpp"
#include "mmq/verify.hpp"

namespace mmq::cli {

namespace {

struct CommonOpts {
    std::string input;  // path or "-" for stdin
    std::string kind;   // empty = detect
    std::string order;  // JSON array of labels
    std::string weights; // JSON object label -> rational
    std::string format = "text";
    std::uint64_t seed = 2024;
    bool strict = false;
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json load_document(const CommonOpts& opts, std::istream& in)
{
    std::string text;
    if (opts.input.empty() || opts.input == "-") {
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    } else {
        std::ifstream file(opts.input);
        if (!file)
            throw InputError("cannot open '" + opts.input + "'");
        std::ostringstream buffer;
        buffer << file.rdbuf();
        text = buffer.str();
    }
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

std::vector<std::string> parse_label_list(const std::string& text)
{
    std::vector<std::string> out;
    if (text.empty())
        return out;
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const std::exception&) {
        // Convenience fallback: comma-separated labels.
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ','))
            out.push_back(item);
        return out;
    }
    if (!doc.is_array())
        throw InputError("--order expects a JSON array of labels");
    for (const auto& x : doc)
        out.push_back(x.get<std::string>());
    return out;
}

std::map<std::string, Rational> parse_weight_map(const std::string& text)
{
    std::map<std::string, Rational> out;
    if (text.empty())
        return out;
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const std::exception& e) {
        throw InputError(std::string("--weights: invalid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw InputError("--weights expects a JSON object");
    for (const auto& [label, v] : doc.items()) {
        if (v.is_number_integer())
            out[label] = Rational(v.get<long long>());
        else if (v.is_string())
            out[label] = parse_rational(v.get<std::string>());
        else
            throw InputError("--weights: value for '" + label + "' must be an integer or "
                             "a rational string like \"3/2\"");
    }
    return out;
}

SkewClassOrdering multimatroid_order(const Carrier& c, const std::vector<std::string>& labels)
{
    if (labels.empty())
        return SkewClassOrdering::identity(c.num_classes());
    std::vector<int> order;
    std::vector<bool> seen(c.num_classes(), false);
    for (const auto& l : labels) {
        int cls = c.element(l).cls; // any member label identifies its class
        if (seen[cls])
            throw InputError("--order repeats skew class of '" + l + "'");
        seen[cls] = true;
        order.push_back(cls);
    }
    if (static_cast<int>(order.size()) != c.num_classes())
        throw InputError("--order must cover every skew class");
    return SkewClassOrdering::of(order);
}

template <typename Obj>
ElementOrder element_order(const Obj& m, const std::vector<std::string>& labels)
{
    if (labels.empty())
        return ElementOrder::identity(m.size());
    std::vector<int> order;
    std::vector<bool> seen(m.size(), false);
    for (const auto& l : labels) {
        Subset s = m.set_of_labels({l});
        int e = __builtin_ctzll(s);
        if (seen[e])
            throw InputError("--order repeats element '" + l + "'");
        seen[e] = true;
        order.push_back(e);
    }
    if (static_cast<int>(order.size()) != m.size())
        throw InputError("--order must cover every element");
    return ElementOrder::of(order);
}

EdgeOrder ribbon_order(const RibbonGraph& g, const std::vector<std::string>& labels)
{
    if (labels.empty())
        return default_edge_order(g);
    if (static_cast<int>(labels.size()) != g.num_edges())
        throw InputError("--order must cover every edge");
    for (const auto& l : labels)
        g.edge_index(l); // validates
    return labels;
}

Weights multimatroid_weights(const Carrier& c, const std::map<std::string, Rational>& given)
{
    Weights w = Weights::symbolic(c);
    for (const auto& [label, value] : given) {
        if (!c.has_label(label))
            throw InputError("--weights: unknown element '" + label + "'");
        w.w[c.index(c.element(label))] = Poly(value);
    }
    return w;
}

RibbonWeights ribbon_weights(const RibbonGraph& g, const std::map<std::string, Rational>& given)
{
    RibbonWeights w = RibbonWeights::symbolic(g);
    for (const auto& [label, value] : given) {
        bool found = false;
        for (const auto& e : g.edges())
            for (int slot = 0; slot < 3; ++slot) {
                std::string slot_label = e.label + (slot == 0 ? "." : slot == 1 ? "-" : "^");
                if (slot_label == label) {
                    w.w[e.label][slot] = Poly(value);
                    found = true;
                }
            }
        if (!found)
            throw InputError("--weights: unknown edge slot '" + label +
                             "' (use <edge>. <edge>- <edge>^)");
    }
    return w;
}

void emit_poly(const Poly& p, const CommonOpts& opts, std::ostream& out)
{
    if (opts.format == "json") {
        Json doc{{"polynomial", poly_to_json(p)}, {"text", p.text()}};
        out << doc.dump(2) << "\n";
    } else {
        out << p.text() << "\n";
    }
}

void emit_sets(const std::vector<std::vector<std::string>>& sets, const CommonOpts& opts,
               std::ostream& out)
{
    if (opts.format == "json") {
        Json doc = Json::array();
        for (const auto& s : sets)
            doc.push_back(s);
        out << doc.dump(2) << "\n";
        return;
    }
    for (const auto& s : sets) {
        out << "{";
        for (std::size_t i = 0; i < s.size(); ++i)
            out << (i ? "," : "") << s[i];
        out << "}\n";
    }
}

int run_compute(const CommonOpts& opts, const std::string& pipeline, std::istream& in,
                std::ostream& out)
{
    Json doc = load_document(opts, in);
    ObjectKind kind = opts.kind.empty() ? detect_kind(doc) : kind_from_name(opts.kind);
    std::vector<std::string> order_labels = parse_label_list(opts.order);
    std::map<std::string, Rational> weight_map = parse_weight_map(opts.weights);

    switch (kind) {
    case ObjectKind::Multimatroid: {
        Multimatroid z = parse_multimatroid(doc);
        if (opts.strict) {
            AxiomReport report = z.check_axioms();
            if (!report.ok())
                throw InputError("axiom check failed: (" + report.violations[0].axiom + ") " +
                                 report.violations[0].detail);
        }
        SkewClassOrdering ord = multimatroid_order(z.carrier(), order_labels);
        Weights w = multimatroid_weights(z.carrier(), weight_map);
        std::string p = pipeline.empty() ? "direct" : pipeline;
        Poly q;
        if (p == "direct")
            q = transition_direct(z, w);
        else if (p == "recursive")
            q = transition_recursive(z, w, ord);
        else if (p == "activities")
            q = activities_expansion(z, w, ord);
        else if (p == "cocompatible")
            q = cocompatible_expansion(z, w, ord);
        else if (p == "classes")
            q = class_expansion(z, ord);
        else
            throw InputError("unknown multimatroid pipeline '" + p + "'");
        emit_poly(q, opts, out);
        return 0;
    }
    case ObjectKind::Matroid: {
        Matroid m = parse_matroid(doc);
        ElementOrder ord = element_order(m, order_labels);
        std::string p = pipeline.empty() ? "tutte" : pipeline;
        Poly q;
        if (p == "tutte")
            q = tutte_rank_def(m);
        else if (p == "activities")
            q = tutte_activities(m, ord);
        else if (p == "kochol")
            q = kochol_expansion(m, ord);
        else
            throw InputError("unknown matroid pipeline '" + p + "'");
        emit_poly(q, opts, out);
        return 0;
    }
    case ObjectKind::DeltaMatroid: {
        DeltaMatroid d = parse_delta(doc);
        ElementOrder ord = element_order(d, order_labels);
        std::string p = pipeline.empty() ? "direct" : pipeline;
        Poly q;
        if (p == "direct")
            q = delta_transition(d);
        else if (p == "morse")
            q = morse_expansion(d, ord);
        else
            throw InputError("unknown delta-matroid pipeline '" + p + "'");
        emit_poly(q, opts, out);
        return 0;
    }
    default: {
        RibbonGraph g = parse_ribbon(doc);
        EdgeOrder ord = ribbon_order(g, order_labels);
        RibbonWeights w = ribbon_weights(g, weight_map);
        std::string p = pipeline.empty() ? "direct" : pipeline;
        Poly q;
        if (p == "direct")
            q = topo_transition_direct(g, w);
        else if (p == "recursive")
            q = topo_transition_recursive(g, w, ord);
        else if (p == "activities")
            q = ribbon_activities_expansion(g, w, ord);
        else
            throw InputError("unknown ribbon-graph pipeline '" + p + "'");
        emit_poly(q, opts, out);
        return 0;
    }
    }
}

int run_enumerate(const CommonOpts& opts, const std::string& what, std::istream& in,
                  std::ostream& out)
{
    Json doc = load_document(opts, in);
    ObjectKind kind = opts.kind.empty() ? detect_kind(doc) : kind_from_name(opts.kind);
    std::vector<std::string> order_labels = parse_label_list(opts.order);

    if (kind == ObjectKind::Multimatroid) {
        Multimatroid z = parse_multimatroid(doc);
        const Carrier& c = z.carrier();
        SkewClassOrdering ord = multimatroid_order(c, order_labels);
        std::vector<std::vector<std::string>> sets;
        if (what == "bases") {
            for (ElementSet b : z.bases())
                sets.push_back(c.labels_of(b));
        } else if (what == "circuits") {
            for (ElementSet s : z.circuits())
                sets.push_back(c.labels_of(s));
        } else if (what == "transversals") {
            for (ElementSet t : c.all_transversals())
                sets.push_back(c.labels_of(t));
        } else if (what == "singular") {
            for (Element e : z.singular_elements())
                sets.push_back({c.label(e)});
        } else if (what == "intervals") {
            if (opts.format == "json") {
                Json arr = Json::array();
                for (const IntervalHZ& h : interval_family(z, ord)) {
                    Json members = Json::array();
                    for (ElementSet t : h.members)
                        members.push_back(c.labels_of(t));
                    arr.push_back(Json{{"basis", c.labels_of(h.basis)}, {"members", members}});
                }
                out << arr.dump(2) << "\n";
            } else {
                for (const IntervalHZ& h : interval_family(z, ord)) {
                    out << "basis";
                    for (const auto& l : c.labels_of(h.basis))
                        out << " " << l;
                    out << " ->";
                    for (ElementSet t : h.members) {
                        out << " {";
                        auto ls = c.labels_of(t);
                        for (std::size_t i = 0; i < ls.size(); ++i)
                            out << (i ? "," : "") << ls[i];
                        out << "}";
                    }
                    out << "\n";
                }
            }
            return 0;
        } else if (what == "classes") {
            for (const BasisClass& g : basis_classes(z, ord)) {
                std::vector<std::string> row = c.labels_of(g.representative);
                row.push_back("size=" + std::to_string(g.members.size()));
                sets.push_back(row);
            }
        } else if (what == "cocompatible") {
            for (ElementSet t : c.all_transversals())
                if (is_cocompatible(z, t, ord))
                    sets.push_back(c.labels_of(t));
        } else {
            throw InputError("unknown enumeration '" + what + "' for a multimatroid");
        }
        emit_sets(sets, opts, out);
        return 0;
    }

    if (kind == ObjectKind::Matroid) {
        Matroid m = parse_matroid(doc);
        ElementOrder ord = element_order(m, order_labels);
        std::vector<std::vector<std::string>> sets;
        if (what == "bases") {
            for (Subset b : m.bases())
                sets.push_back(m.labels_of(b));
        } else if (what == "circuits") {
            for (Subset s : m.circuits())
                sets.push_back(m.labels_of(s));
        } else if (what == "cocircuits") {
            for (Subset s : m.cocircuits())
                sets.push_back(m.labels_of(s));
        } else if (what == "kochol") {
            for (Subset s : kochol_sets(m, ord))
                sets.push_back(m.labels_of(s));
        } else if (what == "intervals") {
            for (const BooleanInterval& iv : crapo_intervals(m, ord)) {
                std::vector<std::string> row;
                row.push_back("lo=" + Json(m.labels_of(iv.lo)).dump());
                row.push_back("hi=" + Json(m.labels_of(iv.hi)).dump());
                sets.push_back(row);
            }
        } else {
            throw InputError("unknown enumeration '" + what + "' for a matroid");
        }
        emit_sets(sets, opts, out);
        return 0;
    }

    if (kind == ObjectKind::DeltaMatroid) {
        DeltaMatroid d = parse_delta(doc);
        ElementOrder ord = element_order(d, order_labels);
        std::vector<std::vector<std::string>> sets;
        if (what == "feasible") {
            for (Subset f : d.feasible())
                sets.push_back(d.labels_of(f));
        } else if (what == "intervals") {
            for (const BooleanInterval& iv : delta_intervals(d, ord)) {
                std::vector<std::string> row;
                row.push_back("lo=" + Json(d.labels_of(iv.lo)).dump());
                row.push_back("hi=" + Json(d.labels_of(iv.hi)).dump());
                sets.push_back(row);
            }
        } else {
            throw InputError("unknown enumeration '" + what + "' for a delta-matroid");
        }
        emit_sets(sets, opts, out);
        return 0;
    }

    RibbonGraph g = parse_ribbon(doc);
    std::vector<std::vector<std::string>> sets;
    if (what == "quasitrees") {
        for (const auto& [x, y, z] : quasi_tree_states(g)) {
            std::vector<std::string> row;
            row.push_back("X=" + Json(g.labels_of(x)).dump());
            row.push_back("Y=" + Json(g.labels_of(y)).dump());
            row.push_back("Z=" + Json(g.labels_of(z)).dump());
            sets.push_back(row);
        }
    } else if (what == "feasible") {
        DeltaMatroid d = ribbon_delta(g);
        for (Subset f : d.feasible())
            sets.push_back(d.labels_of(f));
    } else {
        throw InputError("unknown enumeration '" + what + "' for a ribbon graph");
    }
    emit_sets(sets, opts, out);
    return 0;
}

int run_convert(const CommonOpts& opts, const std::string& target, std::istream& in,
                std::ostream& out)
{
    Json doc = load_document(opts, in);
    ObjectKind kind = opts.kind.empty() ? detect_kind(doc) : kind_from_name(opts.kind);

    Json result;
    if (kind == ObjectKind::Matroid) {
        if (target != "2-matroid")
            throw InputError("a matroid converts to: 2-matroid");
        result = to_json(lift_matroid(parse_matroid(doc)));
    } else if (kind == ObjectKind::DeltaMatroid) {
        if (target != "2-matroid")
            throw InputError("a delta-matroid converts to: 2-matroid");
        result = to_json(lift_delta(parse_delta(doc)));
    } else if (kind == ObjectKind::RibbonGraph) {
        RibbonGraph g = parse_ribbon(doc);
        if (target == "3-matroid")
            result = to_json(lift_ribbon(g));
        else if (target == "delta-matroid")
            result = to_json(ribbon_delta(g));
        else
            throw InputError("a ribbon graph converts to: 3-matroid, delta-matroid");
    } else {
        throw InputError("no conversions from a multimatroid");
    }
    out << result.dump(2) << "\n";
    return 0;
}

// Seeded random-rational-weight agreement between the direct sum and the
// recursive pipeline; the rest of the suites are exhaustive and need no
// randomness.
Check random_weight_check(const Multimatroid& z, const SkewClassOrdering& ord,
                          std::uint64_t seed)
{
    Check check{"random-weight-agreement"};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(1, 9), den(1, 4);
    for (int round = 0; round < 4; ++round) {
        Weights w;
        for (int i = 0; i < z.carrier().universe_size(); ++i)
            w.w.push_back(Poly(Rational(num(rng), den(rng))));
        if (transition_recursive(z, w, ord) != transition_direct(z, w)) {
            check.fail("pipelines disagree at seed " + std::to_string(seed) + " round " +
                       std::to_string(round));
            break;
        }
    }
    return check;
}

int run_verify(const CommonOpts& opts, std::istream& in, std::ostream& out)
{
    Json doc = load_document(opts, in);
    ObjectKind kind = opts.kind.empty() ? detect_kind(doc) : kind_from_name(opts.kind);
    std::vector<std::string> order_labels = parse_label_list(opts.order);

    std::vector<Check> checks;
    if (kind == ObjectKind::Multimatroid) {
        Multimatroid z = parse_multimatroid(doc);
        SkewClassOrdering ord = multimatroid_order(z.carrier(), order_labels);
        checks = verify_multimatroid(z, ord);
        if (all_pass(checks))
            checks.push_back(random_weight_check(z, ord, opts.seed));
    } else if (kind == ObjectKind::Matroid) {
        Matroid m = parse_matroid(doc);
        checks = verify_matroid(m, element_order(m, order_labels));
    } else if (kind == ObjectKind::DeltaMatroid) {
        DeltaMatroid d = parse_delta(doc);
        checks = verify_delta(d, element_order(d, order_labels));
    } else {
        RibbonGraph g = parse_ribbon(doc);
        checks = verify_ribbon(g, ribbon_order(g, order_labels));
    }

    if (opts.format == "json") {
        Json arr = Json::array();
        for (const Check& c : checks)
            arr.push_back(Json{{"suite", c.name}, {"pass", c.pass}, {"witnesses", c.witnesses}});
        out << arr.dump(2) << "\n";
    } else {
        for (const Check& c : checks) {
            out << (c.pass ? "PASS " : "FAIL ") << c.name << "\n";
            for (const auto& w : c.witnesses)
                out << "  " << w << "\n";
        }
    }
    return all_pass(checks) ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err)
{
    CLI::App app{"multimatroid transition polynomials and their expansions"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string pipeline, what, target;
    bool verify_all_flag = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("input", opts.input, "input file (default: stdin)");
        cmd->add_option("--kind", opts.kind,
                        "multimatroid | matroid | delta-matroid | ribbon-graph");
        cmd->add_option("--order", opts.order, "JSON array of labels, least first");
        cmd->add_option("--weights", opts.weights, "JSON object: label -> rational");
        cmd->add_option("--format", opts.format, "text | json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--seed", opts.seed, "seed for randomized suites");
        cmd->add_flag("--strict", opts.strict, "check axioms while loading");
    };

    CLI::App* compute = app.add_subcommand("compute", "print a transition polynomial");
    add_common(compute);
    compute->add_option("--pipeline", pipeline,
                        "direct | recursive | activities | classes | cocompatible | tutte | "
                        "kochol | morse");

    CLI::App* verify = app.add_subcommand("verify", "run the invariant suites");
    add_common(verify);
    verify->add_flag("--all", verify_all_flag, "run every suite (default)");

    CLI::App* enumerate = app.add_subcommand("enumerate", "list combinatorial data");
    add_common(enumerate);
    enumerate->add_option("--what", what,
                          "bases | circuits | cocircuits | transversals | intervals | classes | "
                          "cocompatible | singular | kochol | feasible | quasitrees")
        ->required();

    CLI::App* convert = app.add_subcommand("convert", "apply a lift");
    add_common(convert);
    convert->add_option("--to", target, "2-matroid | 3-matroid | delta-matroid")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream os;
        int code = app.exit(e, os, os);
        (code == 0 ? out : err) << os.str();
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed())
            return run_compute(opts, pipeline, in, out);
        if (verify->parsed())
            return run_verify(opts, in, out);
        if (enumerate->parsed())
            return run_enumerate(opts, what, in, out);
        return run_convert(opts, target, in, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace mmq::cli
