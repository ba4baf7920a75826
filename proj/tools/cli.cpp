#include "cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <random>

#include <CLI11.hpp>

#include "uberhom/chain_complex.hpp"
#include "uberhom/complex.hpp"
#include "uberhom/corpus.hpp"
#include "uberhom/graph.hpp"
#include "uberhom/io.hpp"
#include "uberhom/mvss.hpp"
#include "uberhom/uber.hpp"
#include "uberhom/verify.hpp"

namespace uberhom::cli {

namespace {

struct Settings {
    std::string input = "-";
    std::string coeff = "z2";
    std::string format = "json";
    std::optional<std::size_t> max_vertices;
    unsigned jobs = 1;
    std::uint64_t seed = 1;
    bool reduced = false;
    bool trigraded = false;
    bool augmented = false;
    bool corpus = false;
    bool flag = false;
    int page = 0;
    std::string cover = "anti-star";
    std::string method = "pruned";
    std::string theorem;
    std::string family;
    std::vector<std::string> params;

    ComputeOptions options() const { return ComputeOptions{max_vertices, jobs}; }
    bool table() const { return format == "table"; }
};

Input load(const std::string& path, std::istream& in) {
    if (path == "-") return read_input(in);
    std::ifstream f(path);
    if (!f) throw InputError("cannot open '" + path + "'");
    return read_input(f);
}

FieldCoefficients field_of(const std::string& text) {
    const Coefficients c = parse_coefficients(text);
    if (const auto* p = std::get_if<PrimeField>(&c)) return *p;
    if (const auto* q = std::get_if<RationalField>(&c)) return *q;
    throw InputError("this command needs field coefficients (z2, q or p:<prime>)");
}

Coefficients widen(const FieldCoefficients& f) {
    return std::visit([](const auto& field) { return Coefficients{field}; }, f);
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_homology(const Settings& s, std::ostream& out, std::istream& in) {
    const Input x = load(s.input, in);
    const Coefficients c = parse_coefficients(s.coeff);
    const auto groups = simplicial_homology(x.complex, c, s.reduced);
    if (s.table()) out << homology_table(groups, s.reduced);
    else emit(out, homology_json(c, groups, s.reduced));
    return kOk;
}

int cmd_uber(const Settings& s, std::ostream& out, std::istream& in) {
    const Input x = load(s.input, in);
    if (s.trigraded) {
        const Coefficients c = parse_coefficients(s.coeff);
        const auto* p = std::get_if<PrimeField>(&c);
        if (!p || p->characteristic() != 2) throw InputError("the trigraded complex is only available over Z2");
        const auto dims = uberhomology(x.complex, s.options());
        if (s.table()) {
            for (const auto& [k, d] : dims.dims)
                out << "H^" << std::get<0>(k) << "_{" << std::get<1>(k) << "," << std::get<2>(k) << "} = " << d
                    << "\n";
        } else {
            emit(out, trigraded_json(dims));
        }
        return kOk;
    }
    const FieldCoefficients f = field_of(s.coeff);
    const auto dims = zero_degree_uber(x.complex, f, s.options());
    if (s.table()) out << bigraded_table(dims, x.complex.vertex_count(), std::max(x.complex.dimension(), 0));
    else emit(out, bigraded_json(widen(f), dims));
    return kOk;
}

int cmd_bold(const Settings& s, std::ostream& out, std::istream& in) {
    const Input x = load(s.input, in);
    const Coefficients c = parse_coefficients(s.coeff);
    const auto groups = bold_homology(x.graph, c, s.options());
    if (s.table()) out << bold_table(groups);
    else emit(out, bold_json(c, groups));
    return kOk;
}

int cmd_domination(const Settings& s, std::ostream& out, std::istream& in) {
    const Input x = load(s.input, in);
    DominationMethod method;
    if (s.method == "pruned") method = DominationMethod::pruned;
    else if (s.method == "exhaustive") method = DominationMethod::exhaustive;
    else throw InputError("unknown method '" + s.method + "'");
    const Polynomial p = connected_domination_polynomial(x.graph, s.options(), method);
    if (s.table()) {
        out << "D_c(t) = " << to_string(p) << "\nD_c(-1) = " << p.evaluate(-1) << "\n";
    } else {
        Json j;
        j["polynomial"] = to_string(p);
        j["coefficients"] = p.coefficients();
        j["value_at_minus_one"] = p.evaluate(-1);
        emit(out, j);
    }
    return kOk;
}

template <Field F>
int mvss_with(const Settings& s, const SimplicialComplex& x, const F& field, std::ostream& out) {
    Cover cover = [&] {
        if (s.cover == "anti-star") return anti_star_cover(x);
        if (s.cover == "star") return star_cover(x);
        throw InputError("unknown cover '" + s.cover + "'");
    }();
    const auto ss = run_to_convergence(DoubleComplex<F>(cover, field, s.augmented, s.options()), s.options());
    std::vector<const Page<F>*> pages;
    if (s.page > 0) pages.push_back(&ss.page(s.page));
    else
        for (const auto& p : ss.pages()) pages.push_back(&p);
    if (s.table()) {
        for (const auto* p : pages) out << page_table(*p, field) << "\n";
        out << "converged at E^" << ss.converged_at() << "\n";
        return kOk;
    }
    if (s.page > 0) {
        Json j = page_json(*pages.front(), field, ss.converged_at());
        j["page"] = s.page;
        emit(out, j);
        return kOk;
    }
    Json j;
    put_coefficients(j, Coefficients{field});
    j["cover"] = s.cover;
    j["augmented"] = s.augmented;
    j["converged_at"] = ss.converged_at();
    Json list = Json::array();
    for (const auto* p : pages) list.push_back(page_json(*p, field, ss.converged_at()));
    j["pages"] = list;
    emit(out, j);
    return kOk;
}

int cmd_mvss(const Settings& s, std::ostream& out, std::istream& in) {
    const Input x = load(s.input, in);
    if (s.page < 0) throw InputError("--page must be positive");
    return std::visit([&](const auto& f) { return mvss_with(s, x.complex, f, out); }, field_of(s.coeff));
}

std::vector<NamedComplex> verify_subjects(const Settings& s, Theorem t, std::istream& in) {
    if (!s.corpus) {
        const Input x = load(s.input, in);
        return {{s.input == "-" ? "stdin" : s.input, x.complex}};
    }
    std::vector<NamedComplex> out;
    if (t == Theorem::trianglefree || t == Theorem::categorification) {
        for (std::size_t m = 1; m <= 6; ++m) {
            const auto graphs = all_connected_graphs(m);
            for (std::size_t k = 0; k < graphs.size(); ++k)
                out.push_back({"graph-" + std::to_string(m) + "-" + std::to_string(k), graph_complex(graphs[k])});
        }
        return out;
    }
    out = standard_corpus(30, s.seed);
    if (t == Theorem::euler)
        for (auto& g : chordal_suite(20, s.seed)) out.push_back({"flag-" + g.name, flag_complex(g.graph)});
    return out;
}

int cmd_verify(const Settings& s, std::ostream& out, std::istream& in) {
    const Theorem t = parse_theorem(s.theorem);
    const FieldCoefficients f = field_of(s.coeff);
    std::size_t pass = 0, fail = 0, skip = 0;
    Json reports = Json::array();
    for (const auto& subject : verify_subjects(s, t, in)) {
        Report r = verify(t, subject.complex, f, s.options());
        r.subject = subject.name;
        (r.outcome == Outcome::pass ? pass : r.outcome == Outcome::fail ? fail : skip)++;
        if (s.table()) out << report_table(r);
        else reports.push_back(report_json(r));
    }
    if (s.table()) {
        out << "pass " << pass << ", fail " << fail << ", skip " << skip << "\n";
    } else {
        Json j;
        j["theorem"] = to_string(t);
        put_coefficients(j, widen(f));
        j["reports"] = reports;
        j["summary"] = {{"pass", pass}, {"fail", fail}, {"skip", skip}};
        emit(out, j);
    }
    return fail ? kVerificationFailed : kOk;
}

std::size_t count_param(const std::vector<std::string>& params, std::size_t i, const std::string& family) {
    if (i >= params.size()) throw InputError("'" + family + "' needs more parameters");
    try {
        std::size_t used = 0;
        const long v = std::stol(params[i], &used);
        if (used != params[i].size() || v < 0) throw InputError("");
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw InputError("'" + params[i] + "' is not a non-negative integer");
    }
}

int cmd_generate(const Settings& s, std::ostream& out, std::istream& in) {
    const auto& f = s.family;
    const auto& ps = s.params;
    auto n = [&](std::size_t i) { return count_param(ps, i, f); };
    auto graph = [&](const Graph& g) {
        emit(out, s.flag ? complex_to_json(flag_complex(g)) : graph_to_json(g));
        return kOk;
    };
    if (f == "path") return graph(path_graph(n(0)));
    if (f == "cycle") return graph(cycle_graph(n(0)));
    if (f == "complete") return graph(complete_graph(n(0)));
    if (f == "grid") return graph(grid_graph(n(0), n(1)));
    if (f == "simplex_boundary") {
        if (n(0) < 1) throw InputError("simplex_boundary needs n >= 1");
        emit(out, complex_to_json(simplex_boundary(n(0) - 1)));
        return kOk;
    }
    if (f == "cone_of" || f == "suspension_of") {
        if (ps.empty()) throw InputError("'" + f + "' needs an input file");
        const Input x = load(ps[0], in);
        emit(out, complex_to_json(f == "cone_of" ? cone(x.complex) : suspension(x.complex)));
        return kOk;
    }
    if (f == "random") {
        if (ps.size() < 2) throw InputError("random needs a vertex count and an edge probability");
        double p = 0;
        try {
            std::size_t used = 0;
            p = std::stod(ps[1], &used);
            if (used != ps[1].size()) throw InputError("");
        } catch (const std::exception&) {
            throw InputError("'" + ps[1] + "' is not a probability");
        }
        if (!(p >= 0 && p <= 1)) throw InputError("edge probability must lie in [0, 1]");
        const std::size_t m = n(0);
        if (m == 0 || m > kMaxVertices) throw InputError("vertex count out of range");
        if (p == 0 && m > 1) throw InputError("a connected graph needs a positive edge probability");
        std::mt19937_64 rng(s.seed);
        return graph(random_graph(m, p, rng, true));
    }
    throw InputError("unknown family '" + f + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
    Settings s;
    CLI::App app{"Ueberhomology, bold homology and Mayer-Vietoris spectral sequences of simplicial complexes",
                 "uberhom"};
    app.require_subcommand(1);
    app.add_option("--max-vertices", s.max_vertices, "vertex limit for exponential computations")
        ->envname("UBERHOM_MAX_VERTICES");
    app.add_option("--jobs", s.jobs, "worker threads")->check(CLI::Range(1u, 1024u));
    app.add_option("--format", s.format, "json or table")->check(CLI::IsMember({"json", "table"}));

    auto input = [&](CLI::App* c) { c->add_option("input", s.input, "complex or graph JSON, '-' for stdin"); };

    std::map<CLI::App*, std::function<int()>> handlers;

    auto* homology = app.add_subcommand("homology", "simplicial homology");
    input(homology);
    homology->add_option("--coeff", s.coeff, "z2, q, z or p:<prime>");
    homology->add_flag("--reduced", s.reduced, "reduced homology");
    handlers[homology] = [&] { return cmd_homology(s, out, in); };

    auto* uber = app.add_subcommand("uber", "0-degree ueberhomology, or the full trigraded version over Z2");
    input(uber);
    uber->add_option("--coeff", s.coeff, "z2, q or p:<prime>");
    uber->add_flag("--trigraded", s.trigraded, "full (j,k,i) ueberhomology over Z2");
    handlers[uber] = [&] { return cmd_uber(s, out, in); };

    auto* bold = app.add_subcommand("bold", "bold homology of the 1-skeleton");
    input(bold);
    bold->add_option("--coeff", s.coeff, "z2, q, z or p:<prime>");
    handlers[bold] = [&] { return cmd_bold(s, out, in); };

    auto* dom = app.add_subcommand("domination", "connected domination polynomial of the 1-skeleton");
    input(dom);
    dom->add_option("--method", s.method, "pruned or exhaustive");
    handlers[dom] = [&] { return cmd_domination(s, out, in); };

    auto* mvss = app.add_subcommand("mvss", "Mayer-Vietoris spectral sequence pages");
    input(mvss);
    mvss->add_option("--coeff", s.coeff, "z2, q or p:<prime>");
    mvss->add_flag("--augmented", s.augmented, "add the p = -1 column");
    mvss->add_option("--cover", s.cover, "anti-star or star");
    mvss->add_option("--page", s.page, "print only E^r");
    handlers[mvss] = [&] { return cmd_mvss(s, out, in); };

    auto* ver = app.add_subcommand("verify", "check a theorem on one input or on the built-in corpus");
    input(ver);
    ver->add_option("--coeff", s.coeff, "z2, q or p:<prime>");
    ver->add_option("--theorem", s.theorem, "identification, abutment, euler, cone, suspension, trianglefree, "
                                            "categorification")
        ->required();
    ver->add_flag("--corpus", s.corpus, "run on the built-in corpus instead of an input");
    ver->add_option("--seed", s.seed, "seed for the random part of the corpus");
    handlers[ver] = [&] { return cmd_verify(s, out, in); };

    auto* gen = app.add_subcommand("generate", "print a complex or graph from a named family");
    gen->add_option("family", s.family, "path, cycle, complete, grid, simplex_boundary, cone_of, suspension_of, random")
        ->required();
    gen->add_option("params", s.params, "family parameters");
    gen->add_option("--seed", s.seed, "random seed");
    gen->add_flag("--flag", s.flag, "print the flag complex instead of the graph");
    handlers[gen] = [&] { return cmd_generate(s, out, in); };

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kInputError;
    }

    try {
        for (auto& [sub, fn] : handlers)
            if (sub->parsed()) return fn();
        return kInputError;
    } catch (const SizeGuardExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kSizeGuard;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const StandardSimplexError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const NotConnectedError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const CoverError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
}

}  // namespace uberhom::cli
