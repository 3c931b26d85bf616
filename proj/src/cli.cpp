#include "orepack/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "orepack/errors.hpp"
#include "orepack/extremal.hpp"
#include "orepack/packing.hpp"
#include "orepack/parameters.hpp"
#include "orepack/probe.hpp"
#include "orepack/serialize.hpp"

namespace orepack::cli {

namespace {

struct Io {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

std::string read_source(const std::string& path, Io& io) {
    std::ostringstream buf;
    if (path == "-") {
        buf << io.in.rdbuf();
        return buf.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot open '" + path + "'");
    buf << f.rdbuf();
    return buf.str();
}

Graph read_graph(const std::string& path, Io& io) { return parse_graph_auto(read_source(path, io)); }

void emit(Io& io, const Json& j) { io.out << j.dump(2) << "\n"; }

struct Options {
    std::string graph_path;
    std::string host_path;
    std::string pattern_path;
    std::string instance_path;
    bool find = false;
    std::uint64_t budget = kDefaultNodeBudget;
    int w = 0;

    std::string family;
    int r = 0;
    int m = 0;
    int k = 0;
    int h_order = 0;
    int t = 0;
    int n = 0;
    std::vector<int> sizes;

    std::string probe_family;
    int samples = 1;
    std::uint64_t seed = 0;
};

int cmd_params(const Options& o, Io& io) {
    Graph h = read_graph(o.graph_path, io);
    if (h.edge_count() == 0) {
        io.err << "params: H must have at least one edge\n";
        return kPrecondition;
    }
    emit(io, to_json(full_report(h)));
    return kOk;
}

int cmd_pack(const Options& o, Io& io) {
    Graph g = read_graph(o.host_path, io);
    Graph h = read_graph(o.pattern_path, io);
    if (h.order() == 0) {
        io.err << "pack: H must have at least one vertex\n";
        return kPrecondition;
    }
    PackingResult res = has_perfect_packing(g, h, o.budget);
    io.err << "nodes: " << res.stats.nodes << " (budget " << res.stats.budget << ")\n";
    if (res.verdict == Verdict::Yes && !verify_packing(g, h, res.certificate))
        throw std::logic_error("pack: certificate failed verification");
    io.out << to_string(res.verdict) << "\n";
    if (o.find && res.verdict == Verdict::Yes) io.out << to_json(res.certificate).dump() << "\n";
    switch (res.verdict) {
        case Verdict::Yes: return kOk;
        case Verdict::No: return kNegative;
        case Verdict::Unknown: return kBudget;
    }
    return kBudget;
}

int cmd_cover(const Options& o, Io& io) {
    Graph g = read_graph(o.host_path, io);
    Graph h = read_graph(o.pattern_path, io);
    if (o.w < 0 || o.w >= g.order()) {
        io.err << "cover: vertex " << o.w << " is not a vertex of G (order " << g.order() << ")\n";
        return kInputError;
    }
    CoverResult res = copy_covering_vertex(g, h, o.w, o.budget);
    io.err << "nodes: " << res.stats.nodes << " (budget " << res.stats.budget << ")\n";
    switch (res.verdict) {
        case Verdict::Yes:
            if (!is_valid_embedding(g, h, *res.embedding) || !res.embedding->image().contains(o.w))
                throw std::logic_error("cover: embedding failed verification");
            io.out << to_json(*res.embedding).dump() << "\n";
            return kOk;
        case Verdict::No: io.out << "NONE\n"; return kNegative;
        case Verdict::Unknown: io.out << "UNKNOWN\n"; return kBudget;
    }
    return kBudget;
}

int cmd_construct(const Options& o, Io& io) {
    const std::string& f = o.family;
    if (f == "prop1") {
        emit(io, to_json(construct_prop1(o.r, o.n)));
    } else if (f == "prop2") {
        emit(io, to_json(construct_prop2(o.r, o.m, o.h_order, o.t)));
    } else if (f == "prop2-padded") {
        emit(io, to_json(construct_prop2_padded(o.r, o.m, o.h_order, o.n)));
    } else if (f == "fdiamond") {
        Graph g = construct_fdiamond();
        Json j;
        j["graph6"] = to_graph6(g);
        j["family"] = f;
        j["order"] = g.order();
        j["edges"] = g.edge_count();
        j["z"] = kFDiamondZ;
        emit(io, j);
    } else if (f == "hdiamond") {
        Graph g = construct_hdiamond(o.k, o.r, o.sizes);
        Json j;
        j["graph6"] = to_graph6(g);
        j["family"] = f;
        j["params"] = Json{{"k", o.k}, {"r", o.r}, {"sizes", o.sizes}};
        j["order"] = g.order();
        j["edges"] = g.edge_count();
        j["x"] = g.order() - 1;
        emit(io, j);
    } else if (f == "multipartite") {
        auto [g, part] = complete_multipartite(o.sizes);
        Json j;
        j["graph6"] = to_graph6(g);
        j["family"] = f;
        j["params"] = Json{{"sizes", o.sizes}};
        j["order"] = g.order();
        j["edges"] = g.edge_count();
        j["classes"] = part.classes;
        emit(io, j);
    } else if (f == "blowup") {
        if (o.graph_path.empty()) throw PreconditionError("construct blowup: --graph is required");
        Graph g = blow_up(read_graph(o.graph_path, io), o.t);
        Json j;
        j["graph6"] = to_graph6(g);
        j["family"] = f;
        j["params"] = Json{{"t", o.t}};
        j["order"] = g.order();
        j["edges"] = g.edge_count();
        emit(io, j);
    } else {
        io.err << "construct: unknown family '" << f << "'\n";
        return kInputError;
    }
    return kOk;
}

int cmd_verify(const Options& o, Io& io) {
    Json doc;
    try {
        doc = Json::parse(read_source(o.instance_path, io));
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("instance: ") + e.what());
    }
    ExtremalInstance inst = instance_from_json(doc);
    Graph h = read_graph(o.pattern_path, io);
    LowerBoundReport rep = verify_lower_bound(inst, h, o.budget);
    emit(io, to_json(rep));
    if (rep.all_passed()) return kOk;
    if (rep.no_cover == Verdict::Unknown && rep.ore_ok && rep.divisibility_ok) return kBudget;
    return kNegative;
}

int cmd_probe(const Options& o, Io& io) {
    ProbeConfig cfg;
    cfg.family = probe_family_from_string(o.probe_family);
    cfg.n = o.n;
    cfg.r = o.r;
    cfg.samples = o.samples;
    cfg.seed = o.seed;
    cfg.budget = o.budget;
    ProbeSummary sum = run_probe(cfg);

    Json j;
    j["family"] = to_string(cfg.family);
    j["n"] = cfg.n;
    j["r"] = cfg.r;
    j["seed"] = cfg.seed;
    j["samples"] = sum.samples;
    j["condition_hits"] = sum.condition_hits;
    j["checks"] = sum.checks;
    j["unknown"] = sum.unknown;
    j["violations"] = static_cast<int>(sum.violations.size());
    Json details = Json::array();
    for (const auto& v : sum.violations)
        details.push_back(Json{{"sample", v.sample}, {"graph6", v.graph6}, {"detail", v.detail}});
    j["violation_graphs"] = details;
    emit(io, j);
    io.err << to_string(cfg.family) << ": " << sum.condition_hits << "/" << sum.samples << " samples met the hypothesis, "
           << sum.violations.size() << " violations\n";
    if (!sum.violations.empty()) return kNegative;
    if (sum.unknown > 0) return kBudget;
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Io io{in, out, err};
    Options o;

    CLI::App app{"Exact tools for perfect H-packings under Ore-type degree conditions", "orepack"};
    app.require_subcommand(1);

    auto* params = app.add_subcommand("params", "Print every parameter of H as JSON");
    params->add_option("graph", o.graph_path, "H (graph6 or edge list, '-' for stdin)")->required();

    auto* pack = app.add_subcommand("pack", "Decide whether G has a perfect H-packing");
    pack->add_option("G", o.host_path)->required();
    pack->add_option("H", o.pattern_path)->required();
    pack->add_flag("--find", o.find, "Print the verified certificate");
    pack->add_option("--budget", o.budget, "Search node limit");

    auto* cover = app.add_subcommand("cover", "Find a copy of H in G containing vertex w");
    cover->add_option("G", o.host_path)->required();
    cover->add_option("H", o.pattern_path)->required();
    cover->add_option("w", o.w)->required();
    cover->add_option("--budget", o.budget, "Search node limit");

    auto* construct = app.add_subcommand("construct", "Emit a named construction as JSON");
    construct->add_option("family", o.family, "prop1 | prop2 | prop2-padded | fdiamond | hdiamond | multipartite | blowup")
        ->required();
    construct->add_option("--r", o.r);
    construct->add_option("--m", o.m);
    construct->add_option("--k", o.k);
    construct->add_option("--h-order", o.h_order);
    construct->add_option("--t", o.t);
    construct->add_option("--n", o.n);
    construct->add_option("--sizes", o.sizes)->delimiter(',');
    construct->add_option("--graph", o.graph_path, "Input graph for blowup");

    auto* verify = app.add_subcommand("verify", "Machine-check a lower-bound instance against H");
    verify->add_option("instance", o.instance_path, "Instance JSON from 'construct'")->required();
    verify->add_option("H", o.pattern_path)->required();
    verify->add_option("--budget", o.budget, "Search node limit");

    auto* probe = app.add_subcommand("probe", "Seeded randomized check of a packing theorem");
    probe->add_option("--family", o.probe_family, "hajnal-szemeredi | kierstead-kostochka | average-degree")->required();
    probe->add_option("--n", o.n)->required();
    probe->add_option("--r", o.r);
    probe->add_option("--samples", o.samples);
    probe->add_option("--seed", o.seed);
    probe->add_option("--budget", o.budget, "Search node limit per sample");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kInputError;
    }

    try {
        if (params->parsed()) return cmd_params(o, io);
        if (pack->parsed()) return cmd_pack(o, io);
        if (cover->parsed()) return cmd_cover(o, io);
        if (construct->parsed()) return cmd_construct(o, io);
        if (verify->parsed()) return cmd_verify(o, io);
        if (probe->parsed()) return cmd_probe(o, io);
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const PreconditionError& e) {
        err << "precondition: " << e.what() << "\n";
        return kPrecondition;
    } catch (const EnumerationLimitError& e) {
        err << "limit: " << e.what() << "\n";
        return kBudget;
    }
    return kInputError;
}

}  // namespace orepack::cli
