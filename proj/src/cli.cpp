#include "gradedlie/cli.hpp"

#include "gradedlie/error.hpp"
#include "gradedlie/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

namespace gradedlie::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string family;
    std::optional<int> p, q, r, s, n, m1, m2, n1, n2;
    std::string partition;
    std::string set;
    std::string output = "json";
    std::string out;
};

void add_common(CLI::App* cmd, Options& o, bool with_set) {
    cmd->add_option("--family", o.family,
                    "gl_pqrs, sl_pqrs, so_pqrs, so_q, gl_super, sl_super, osp, parafermion "
                    "or paraboson")
        ->required();
    cmd->add_option("--p", o.p);
    cmd->add_option("--q", o.q, "block size for *_pqrs; ensemble split for so_q");
    cmd->add_option("--r", o.r);
    cmd->add_option("--s", o.s);
    cmd->add_option("--n", o.n);
    cmd->add_option("--m1", o.m1);
    cmd->add_option("--m2", o.m2);
    cmd->add_option("--n1", o.n1);
    cmd->add_option("--n2", o.n2);
    cmd->add_option("--partition", o.partition, "index degrees, e.g. 00,11,00,11,00,10,10");
    if (with_set)
        cmd->add_option("--set", o.set,
                        "pf_same, pb_same, rel_cross_so_q, rel_cross_osp, mixed_rel_pf or "
                        "mixed_rel_pb; default runs both sets of the family");
    cmd->add_option("--output", o.output, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
    cmd->add_option("--out", o.out, "write the document to this file");
}

int need(const std::optional<int>& v, const char* flag) {
    if (!v)
        throw UsageError(std::string("missing ") + flag);
    return *v;
}

AlgebraSpec spec_from(const Options& o) {
    std::string name = o.family;
    if (name == "parafermion")
        name = "so_q";
    else if (name == "paraboson")
        name = "osp";
    AlgebraSpec spec{parse_family(name), {}, std::nullopt};
    switch (spec.family) {
    case Family::GlPqrs:
    case Family::SlPqrs:
    case Family::SoPqrs:
        spec.params = {o.p.value_or(0), o.q.value_or(0), o.r.value_or(0), o.s.value_or(0)};
        break;
    case Family::SoQ:
        spec.params = {need(o.n, "--n"), need(o.q, "--q")};
        break;
    case Family::GlSuper:
    case Family::SlSuper:
    case Family::Osp:
        spec.params = {o.m1.value_or(0), o.m2.value_or(0), o.n1.value_or(0), o.n2.value_or(0)};
        break;
    }
    if (!o.partition.empty())
        spec.partition = DegreePartition::parse(o.partition);
    spec.validate();
    return spec;
}

GeneratorFamily generators_from(const Options& o) {
    if (o.family == "parafermion" || o.family == "so_q")
        return build_parafermions(need(o.n, "--n"), need(o.q, "--q"));
    if (o.family == "paraboson" || o.family == "osp") {
        if (o.m1.value_or(0) != 0 || o.m2.value_or(0) != 0)
            throw UsageError("parabosons live in osp with m1 = m2 = 0");
        return build_parabosons(need(o.n1, "--n1"), need(o.n2, "--n2"));
    }
    throw UsageError("family '" + o.family + "' has no generator realization; use "
                     "parafermion or paraboson");
}

std::string matrix_text(const Matrix& m) {
    std::string s;
    for (const auto& e : m.entries()) {
        if (!s.empty())
            s += ' ';
        s += "(" + std::to_string(e.row + 1) + "," + std::to_string(e.col + 1) + ")=" +
             e.value.to_string();
    }
    return s.empty() ? "0" : s;
}

std::string weight_text(const Weight& w) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i)
        s += (i ? "," : "") + std::to_string(w[i]);
    return s + "]";
}

void algebra_table(std::ostream& os, const AlgebraBasis& a) {
    os << "convention  " << to_string(a.convention()) << "\n"
       << "partition   " << a.partition().to_string() << "\n"
       << "dimension   " << a.dimension() << "\n"
       << "dims       ";
    for (Degree d : kAllDegrees)
        os << " " << d.to_string() << ":" << a.dim(d);
    os << "\n";
    for (std::size_t i = 0; i < a.dimension(); ++i)
        os << std::setw(5) << i + 1 << "  " << a.basis()[i].require_degree().to_string() << "  "
           << matrix_text(a.basis()[i].mat()) << "\n";
}

void relation_table(std::ostream& os, const RelationReport& rep) {
    os << std::left << std::setw(16) << to_string(rep.relation_set) << std::right
       << " checked " << std::setw(6) << rep.total_checked << "  failures "
       << rep.failures.size() << "\n";
    for (const auto& f : rep.failures)
        os << "  j=" << f.j + 1 << " k=" << f.k + 1 << " l=" << f.l + 1 << " signs " << f.xi
           << "," << f.eta << "," << f.eps << "\n";
}

struct Output {
    std::string text;
    int code = kExitOk;
};

Output do_build(const Options& o) {
    const auto a = build(spec_from(o));
    if (o.output == "json")
        return {dump(build_document(a))};
    std::ostringstream os;
    os << "algebra     " << to_string(a.spec()->family) << " " << weight_text(a.spec()->params)
       << "\n";
    algebra_table(os, a);
    return {os.str()};
}

Output do_verify(const Options& o) {
    const auto spec = spec_from(o);
    const auto rep = verify_algebra(spec);
    const int code = rep.passed() ? kExitOk : kExitVerificationFailed;
    if (o.output == "json")
        return {dump(to_json(spec, rep)), code};
    std::ostringstream os;
    for (const auto& c : rep.checks) {
        os << std::left << std::setw(24) << c.name << std::right << std::setw(10) << c.checked
           << std::setw(8) << c.failed << "  " << (c.passed() ? "ok" : "FAILED") << "\n";
        for (const auto& d : c.details)
            os << "    " << d << "\n";
    }
    for (const auto& f : rep.flags)
        os << "note: " << f << "\n";
    os << (rep.passed() ? "all checks passed" : "verification failed") << "\n";
    return {os.str(), code};
}

Output do_roots(const Options& o) {
    const auto a = build(spec_from(o));
    const auto dec = root_decomposition(a);
    const auto pos = positive_and_simple_roots(dec);
    if (o.output == "json")
        return {dump(roots_document(a, dec, pos))};
    std::ostringstream os;
    for (const auto& r : dec.roots)
        os << std::left << std::setw(20) << weight_text(r.root) << std::right << " "
           << r.degree.to_string() << "  " << matrix_text(r.vector.mat()) << "\n";
    os << "simple:";
    for (const auto& r : pos.simple)
        os << " " << weight_text(r.root) << "/" << r.degree.to_string();
    os << "\n";
    return {os.str()};
}

Output do_generate(const Options& o) {
    const auto fam = generators_from(o);
    const auto closure = generate_closure(fam.all(), fam.convention());
    const auto reference = build(fam.ambient_spec());
    const bool matches = closure.basis() == reference.basis();
    const int code = matches ? kExitOk : kExitVerificationFailed;
    Json header = Json::object();
    header["family"] = fam.kind == GeneratorKind::ParafermionSoQ ? "parafermion" : "paraboson";
    header["params"] = Json::array({fam.first, fam.second});
    header["generators"] = fam.all().size();
    if (o.output == "json") {
        Json doc = algebra_document(closure, "generated_from", header);
        doc["matches"] = to_json(fam.ambient_spec());
        doc["matches_build"] = matches;
        return {dump(doc), code};
    }
    std::ostringstream os;
    os << "generated   " << header["family"].get<std::string>() << " "
       << weight_text({fam.first, fam.second}) << " from " << fam.all().size()
       << " generators\n";
    algebra_table(os, closure);
    os << (matches ? "closure equals the built algebra" : "closure differs from the built algebra")
       << "\n";
    return {os.str(), code};
}

Output do_relations(const Options& o) {
    const auto fam = generators_from(o);
    std::vector<RelationSet> sets;
    if (!o.set.empty())
        sets.push_back(parse_relation_set(o.set));
    else if (fam.kind == GeneratorKind::ParafermionSoQ)
        sets = {RelationSet::PfSame, RelationSet::RelCrossSoQ};
    else
        sets = {RelationSet::PbSame, RelationSet::RelCrossOsp};
    std::vector<RelationReport> reports;
    bool ok = true;
    for (auto s : sets) {
        reports.push_back(verify_relations(fam, s));
        ok = ok && reports.back().passed();
    }
    const int code = ok ? kExitOk : kExitVerificationFailed;
    if (o.output == "json") {
        if (!o.set.empty())
            return {dump(to_json(fam, reports.front())), code};
        Json doc = Json::object();
        Json arr = Json::array();
        for (const auto& r : reports)
            arr.push_back(to_json(fam, r));
        doc["reports"] = std::move(arr);
        return {dump(doc), code};
    }
    std::ostringstream os;
    for (const auto& r : reports)
        relation_table(os, r);
    return {os.str(), code};
}

Output do_export(const Options& o) {
    const auto c = structure_constants(build(spec_from(o)));
    if (o.output == "json")
        return {dump(to_json(c))};
    std::ostringstream os;
    os << "dimension " << c.dimension << ", " << c.entries.size() << " nonzero constants\n";
    for (const auto& e : c.entries)
        os << std::setw(5) << e.alpha + 1 << std::setw(5) << e.beta + 1 << std::setw(5)
           << e.gamma + 1 << "  " << e.value.to_string() << "\n";
    return {os.str()};
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact construction and verification of Z2xZ2-graded Lie (super)algebras",
                 "gradedlie"};
    app.require_subcommand(1);
    Options o;
    struct Verb {
        const char* name;
        const char* help;
        bool with_set;
        Output (*fn)(const Options&);
    };
    const Verb verbs[] = {
        {"build", "build an algebra and print its graded basis", false, do_build},
        {"verify", "run the exhaustive verification suite", false, do_verify},
        {"roots", "root decomposition with positive and simple roots", false, do_roots},
        {"generate", "bracket closure of the parastatistics generators", false, do_generate},
        {"relations", "check the parastatistics triple relations", true, do_relations},
        {"export", "structure constants as sparse triplets", false, do_export},
    };
    std::vector<std::pair<CLI::App*, const Verb*>> subs;
    for (const auto& v : verbs) {
        auto* cmd = app.add_subcommand(v.name, v.help);
        add_common(cmd, o, v.with_set);
        subs.emplace_back(cmd, &v);
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitOk;
        }
        err << "gradedlie: " << e.what() << "\n";
        return kExitUsage;
    }

    const Verb* verb = nullptr;
    for (auto& [cmd, v] : subs)
        if (cmd->parsed())
            verb = v;

    Output result;
    try {
        result = verb->fn(o);
    } catch (const UsageError& e) {
        err << "gradedlie " << verb->name << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "gradedlie " << verb->name << ": " << to_string(e.kind()) << ": " << e.what()
            << "\n";
        return e.kind() == ErrorKind::SpanEscape ? kExitVerificationFailed : kExitUsage;
    }

    if (o.out.empty()) {
        out << result.text;
    } else {
        std::ofstream file(o.out, std::ios::binary);
        if (!(file << result.text) || !file.flush()) {
            err << "gradedlie " << verb->name << ": cannot write '" << o.out << "'\n";
            return kExitUsage;
        }
    }
    return result.code;
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
    return run(args, std::cout, std::cerr);
}

} // namespace gradedlie::cli
