#include "ecj/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ecj/cg.hpp"
#include "ecj/wfs.hpp"
#include "ecj/wnp.hpp"

namespace ecj::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string file;
    std::string format = "text";
    std::string literal;
    std::string atom;
    std::string dot_path;
    std::size_t max_addends_cap = 4096;
    std::size_t max_atoms_enum = 16;
};

LabelledProgram load_program(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path, 0, 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_program(buf.str());
}

json addend_json(const Justification& e) {
    json vertices = json::array();
    for (const auto& v : e.vertices()) vertices.push_back({{"base", v}, {"sign", 0}});
    for (const auto& x : e.inhibitors()) vertices.push_back({{"base", x}, {"sign", 1}});
    for (const auto& x : e.enablers()) vertices.push_back({{"base", x}, {"sign", 2}});
    json edges = json::array();
    for (const auto& [u, v] : e.edges()) edges.push_back({u, v});
    JustificationClass cls = classify(e);
    return json{{"term", to_string(e)},
                {"vertices", vertices},
                {"edges", edges},
                {"causes", cls.causes},
                {"enablers", cls.enablers},
                {"inhibitors", cls.inhibitors},
                {"enabled", cls.enabled}};
}

json value_json(const QLiteral& lit, const CausalValue& v) {
    json addends = json::array();
    for (const auto& e : v.addends()) addends.push_back(addend_json(e));
    return json{{"literal", to_string(lit)}, {"value", to_string(v)}, {"addends", addends}};
}

void print_addend_text(std::ostream& out, const Justification& e) {
    JustificationClass cls = classify(e);
    auto join = [](const LabelSet& s) {
        std::string r;
        for (const auto& x : s) {
            if (!r.empty()) r += ",";
            r += x;
        }
        return r.empty() ? "-" : r;
    };
    out << "  " << to_string(e) << "  [" << (cls.enabled ? "enabled" : "inhibited")
        << "] causes=" << join(cls.causes) << " enablers=" << join(cls.enablers)
        << " inhibitors=" << join(cls.inhibitors) << "\n";
}

int cmd_wfm(const Options& opt, std::ostream& out) {
    LabelledProgram p = load_program(opt.file);
    CausalWfm w = causal_wfm(p);
    if (opt.format == "json") {
        json atoms = json::array();
        for (const auto& a : p.atoms)
            atoms.push_back({{"atom", a},
                             {"true_value", to_string(value_of(w.lfp, a))},
                             {"nonfalse_value", to_string(value_of(w.gfp, a))}});
        out << json{{"atoms", atoms}}.dump(2) << "\n";
    } else {
        for (const auto& a : p.atoms)
            out << a << " | " << to_string(value_of(w.lfp, a)) << " | "
                << to_string(value_of(w.gfp, a)) << "\n";
    }
    return 0;
}

int cmd_why(const Options& opt, std::ostream& out) {
    LabelledProgram p = load_program(opt.file);
    QLiteral lit = QLiteral::parse(opt.literal);
    CausalValue v = query(causal_wfm(p), lit);
    if (opt.format == "json") {
        out << value_json(lit, v).dump(2) << "\n";
    } else {
        out << to_string(lit) << " = " << to_string(v) << "\n";
        for (const auto& e : v.addends()) print_addend_text(out, e);
    }
    return 0;
}

int cmd_wnp(const Options& opt, std::ostream& out) {
    LabelledProgram p = load_program(opt.file);
    QLiteral lit = QLiteral::parse(opt.literal);
    ProvenanceValue v = why(p, lit);
    if (opt.format == "json") {
        json conjs = json::array();
        for (const auto& c : v.dnf()) {
            json lits = json::array();
            for (const auto& [var, pos] : c)
                lits.push_back({{"var", var}, {"positive", pos}});
            conjs.push_back({{"literals", lits}, {"hypothetical", hypothetical(c)}});
        }
        out << json{{"literal", to_string(lit)},
                    {"provenance", to_string(v)},
                    {"conjunctions", conjs}}
                   .dump(2)
            << "\n";
    } else {
        out << to_string(lit) << " = " << to_string(v) << "\n";
        for (const auto& c : v.dnf())
            if (hypothetical(c))
                out << "  hypothetical: " << to_string(ProvenanceValue::make({c})) << "\n";
    }
    return 0;
}

int cmd_cg_models(const Options& opt, std::ostream& out) {
    LabelledProgram p = load_program(opt.file);
    auto models = cg_stable_models(p, opt.max_atoms_enum);
    if (opt.format == "json") {
        json ms = json::array();
        for (const auto& m : models) {
            json atoms = json::object();
            for (const auto& [a, v] : m) atoms[a] = to_string(v);
            ms.push_back({{"atoms", atoms}});
        }
        out << json{{"models", ms}}.dump(2) << "\n";
    } else {
        int n = 0;
        for (const auto& m : models) {
            out << "model " << ++n << ":\n";
            for (const auto& [a, v] : m) out << "  " << a << " = " << to_string(v) << "\n";
        }
        if (models.empty()) out << "no CG stable models\n";
    }
    return 0;
}

int cmd_cg_just(const Options& opt, std::ostream& out) {
    LabelledProgram p = load_program(opt.file);
    auto models = cg_stable_models(p, opt.max_atoms_enum);
    if (models.empty()) {
        out << "no CG stable models\n";
        return 0;
    }
    // Justifications with respect to the first model in canonical order.
    auto graphs = cg_justifications(models.front(), opt.atom);
    std::string dot_text;
    for (const auto& g : graphs) dot_text += to_dot(g);
    if (!opt.dot_path.empty()) {
        std::ofstream dot(opt.dot_path);
        if (!dot) throw ParseError("cannot write file: " + opt.dot_path, 0, 0);
        dot << dot_text;
    }
    if (opt.format == "json") {
        json gs = json::array();
        for (const auto& g : graphs) {
            json edges = json::array();
            for (const auto& [u, v] : g.edges) edges.push_back({u, v});
            gs.push_back({{"term", to_string(term_of_graph(g))},
                          {"vertices", g.vertices},
                          {"edges", edges},
                          {"dot", to_dot(g)}});
        }
        out << json{{"atom", opt.atom}, {"graphs", gs}}.dump(2) << "\n";
    } else if (opt.format == "dot") {
        out << dot_text;
    } else {
        out << opt.atom << ": " << graphs.size() << " justification(s)\n";
        for (const auto& g : graphs) out << "  " << to_string(term_of_graph(g)) << "\n";
    }
    return 0;
}

int cmd_check(const Options& opt, std::ostream& out) {
    LabelledProgram p = load_program(opt.file);
    auto diags = validate(p);
    if (opt.format == "json") {
        json ds = json::array();
        for (const auto& d : diags)
            ds.push_back({{"code", d.code}, {"message", d.message}, {"line", d.line}});
        out << json{{"diagnostics", ds}}.dump(2) << "\n";
    } else {
        for (const auto& d : diags)
            out << opt.file << ":" << d.line << ": " << d.code << ": " << d.message
                << "\n";
        if (diags.empty()) out << "ok\n";
    }
    return diags.empty() ? 0 : 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"causal well-founded models and justifications for labelled logic programs"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json", "dot"}))
        ->capture_default_str();
    app.add_option("--max-addends", opt.max_addends_cap,
                   "abort when a value exceeds this many addends")
        ->capture_default_str();
    app.add_option("--max-atoms-enum", opt.max_atoms_enum,
                   "guard for stable-model enumeration")
        ->capture_default_str();

    auto add_file = [&](CLI::App* sub) {
        sub->add_option("file", opt.file, "program file")->required();
    };
    CLI::App* wfm = app.add_subcommand("wfm", "print the causal well-founded model");
    add_file(wfm);
    CLI::App* why_cmd = app.add_subcommand("why", "justifications of a query literal");
    add_file(why_cmd);
    why_cmd->add_option("-l,--literal", opt.literal, "q-literal: A, 'not A' or 'undef A'")
        ->required();
    CLI::App* wnp_cmd = app.add_subcommand("wnp", "why-not provenance of a query literal");
    add_file(wnp_cmd);
    wnp_cmd->add_option("-l,--literal", opt.literal, "q-literal: A, 'not A' or 'undef A'")
        ->required();
    CLI::App* cgm = app.add_subcommand("cg-models", "enumerate CG stable models");
    add_file(cgm);
    CLI::App* cgj = app.add_subcommand("cg-just", "causal graphs justifying an atom");
    add_file(cgj);
    cgj->add_option("-a,--atom", opt.atom, "atom to explain")->required();
    cgj->add_option("--dot", opt.dot_path, "write GraphViz output to this path");
    CLI::App* check = app.add_subcommand("check", "validate a program file");
    add_file(check);

    std::vector<const char*> argv;
    argv.push_back("ecj");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    set_max_addends(opt.max_addends_cap);
    try {
        if (wfm->parsed()) return cmd_wfm(opt, out);
        if (why_cmd->parsed()) return cmd_why(opt, out);
        if (wnp_cmd->parsed()) return cmd_wnp(opt, out);
        if (cgm->parsed()) return cmd_cg_models(opt, out);
        if (cgj->parsed()) return cmd_cg_just(opt, out);
        if (check->parsed()) return cmd_check(opt, out);
    } catch (const ResourceLimitError& e) {
        err << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        if (e.line > 0)
            err << opt.file << ":" << e.line << ":" << e.column << ": " << e.what()
                << "\n";
        else
            err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}

}  // namespace ecj::cli
