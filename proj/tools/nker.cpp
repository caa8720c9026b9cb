// Command-line front end: analyze a single group, emit the catalog, or run
// an invariant suite.  Exit codes: 0 success, 1 usage or input error, 2
// mathematical mismatch or failed suite.

#include "nker/catalog.hpp"
#include "nker/errors.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace nker;

nlohmann::json verdict_json(const SchurVerdict& v) {
    nlohmann::json j;
    j["char_id"] = v.char_id;
    j["degree"] = v.degree;
    j["fs"] = v.fs;
    j["m_real"] = v.m_real;
    nlohmann::json loc = nlohmann::json::object();
    for (const auto& [p, m] : v.m_local) loc[std::to_string(p)] = m;
    j["m_local"] = std::move(loc);
    j["m_rational"] = v.m_rational;
    nlohmann::json verd = nlohmann::json::object();
    for (const auto& [f, vd] : v.skew_linear) verd[f] = verdict_str(vd);
    j["verdicts"] = std::move(verd);
    j["trace"] = v.trace;
    return j;
}

nlohmann::json report_json(const KernelReport& r) {
    nlohmann::json j;
    j["field"] = field_tag_str(r.field);
    j["def_lower_order"] = r.definitional.lower.size();
    j["def_upper_order"] = r.definitional.upper.size();
    j["def_exact"] = r.definitional.exact();
    j["def_elements"] = r.definitional.lower;
    j["classifier_order"] = r.classifier.predicted.size();
    j["classifier_exact"] = r.classifier.exact;
    j["tags"] = r.classifier.tags;
    j["match"] = r.match;
    j["comparable"] = r.comparable;
    return j;
}

std::vector<FieldTag> parse_fields(const std::string& fields) {
    std::vector<FieldTag> out;
    std::stringstream ss(fields);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "C") out.push_back(FieldTag::C);
        else if (tok == "R") out.push_back(FieldTag::R);
        else if (tok == "Q") out.push_back(FieldTag::Q);
        else throw InvalidParams("unknown field tag: " + tok);
    }
    if (out.empty()) throw InvalidParams("empty field list");
    return out;
}

int cmd_analyze(const std::string& spec, const std::string& fields, bool json_out) {
    std::vector<FieldTag> want = parse_fields(fields);
    GroupSpec ast = parse_spec(spec);
    std::string canonical = print_spec(ast);
    GroupPtr G = build_group(ast);
    VerdictEngine E(CharacterTable::compute(G));
    std::vector<KernelReport> reports = cross_check(E);

    if (json_out) {
        nlohmann::json j;
        j["v"] = 1;
        j["spec"] = canonical;
        j["order"] = G->order();
        j["classes"] = G->num_classes();
        j["fingerprint"] = group_fingerprint(*G);
        nlohmann::json rs = nlohmann::json::array();
        for (const auto& r : reports)
            for (FieldTag t : want)
                if (r.field == t) rs.push_back(report_json(r));
        j["kernels"] = std::move(rs);
        nlohmann::json vs = nlohmann::json::array();
        for (const auto& chi : E.table().irreducibles())
            vs.push_back(verdict_json(E.verdict(chi.id)));
        j["schur"] = std::move(vs);
        std::cout << j.dump() << "\n";
        return 0;
    }

    std::cout << canonical << ": order " << G->order() << ", " << G->num_classes()
              << " classes, fingerprint " << group_fingerprint(*G) << "\n";
    for (const auto& r : reports) {
        bool wanted = false;
        for (FieldTag t : want) wanted = wanted || r.field == t;
        if (!wanted) continue;
        std::cout << "  NKer over " << field_tag_str(r.field) << ": order "
                  << r.definitional.lower.size();
        if (!r.definitional.exact())
            std::cout << " (lower bound; upper " << r.definitional.upper.size() << ")";
        std::cout << "; classifier order " << r.classifier.predicted.size()
                  << (r.classifier.exact ? "" : " (lower bound)");
        if (!r.classifier.tags.empty()) {
            std::cout << " [";
            for (size_t i = 0; i < r.classifier.tags.size(); ++i)
                std::cout << (i ? "," : "") << r.classifier.tags[i];
            std::cout << "]";
        }
        std::cout << "; " << (r.comparable ? (r.match ? "match" : "MISMATCH")
                                           : "containment ok")
                  << "\n";
    }
    std::cout << "  characters (id deg fs m_R m_Q verdicts C/R/Q trace):\n";
    for (const auto& chi : E.table().irreducibles()) {
        const SchurVerdict& v = E.verdict(chi.id);
        std::cout << "    " << v.char_id << "\t" << v.degree << "\t" << v.fs << "\t"
                  << v.m_real << "\t" << v.m_rational << "\t"
                  << verdict_str(v.skew_linear.at("C")) << "/"
                  << verdict_str(v.skew_linear.at("R")) << "/"
                  << verdict_str(v.skew_linear.at("Q")) << "\t";
        for (size_t i = 0; i < v.trace.size(); ++i)
            std::cout << (i ? "," : "") << v.trace[i];
        std::cout << "\n";
    }
    return 0;
}

int cmd_catalog(const std::string& out_path, int max_order, int jobs) {
    const auto& cat = analyzed_catalog(jobs);
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "error: cannot open " << out_path << " for writing\n";
            return 1;
        }
        os = &file;
    }
    int entries = 0, unresolved = 0, mismatches = 0;
    for (const auto& a : cat) {
        if (max_order > 0 && a.group->order() > max_order) continue;
        *os << entry_json(a) << "\n";
        ++entries;
        unresolved += a.engine->unknown_count_over_q();
        for (const auto& r : a.reports)
            if (r.comparable && !r.match) ++mismatches;
    }
    std::cerr << entries << " entries, " << mismatches << " mismatches, " << unresolved
              << " unresolved rational verdicts\n";
    return 0;
}

int cmd_verify(const std::string& suite, int jobs) {
    SuiteResult r = run_suite(suite, jobs);
    std::cout << "TAP version 13\n";
    if (!r.note.empty()) std::cout << "# " << r.note << "\n";
    std::cout << "1.." << r.list.checks.size() << "\n";
    int i = 0;
    for (const auto& [ok, what] : r.list.checks)
        std::cout << (ok ? "ok " : "not ok ") << ++i << " - " << what << "\n";
    return r.list.ok() ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact nonideal-kernel computations for finite groups "
                 "(NKER_SEED overrides the splitting seed, default 0x5EED)"};
    app.require_subcommand(1);

    std::string spec, fields = "C,R,Q";
    bool json_out = false;
    CLI::App* analyze = app.add_subcommand("analyze", "analyze one group spec");
    analyze->add_option("spec", spec, "group spec, e.g. \"Q8 x C2^2 x C7\"")->required();
    analyze->add_option("--fields", fields, "comma-separated subset of C,R,Q");
    analyze->add_flag("--json", json_out, "machine-readable output");

    std::string out_path;
    int max_order = 0, jobs = 0;
    CLI::App* catalog = app.add_subcommand("catalog", "emit the curated catalog as JSON lines");
    catalog->add_option("--out", out_path, "output file (default stdout)");
    catalog->add_option("--max-order", max_order, "only groups up to this order");
    catalog->add_option("--jobs", jobs, "parallel workers (default: all cores)");

    std::string suite;
    int vjobs = 0;
    CLI::App* verify = app.add_subcommand("verify", "run an invariant suite (TAP output)");
    std::string suites_help;
    for (const auto& n : nker::suite_names()) suites_help += (suites_help.empty() ? "" : ", ") + n;
    verify->add_option("--suite", suite, "one of: " + suites_help)->required();
    verify->add_option("--jobs", vjobs, "parallel workers (default: all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*analyze) return cmd_analyze(spec, fields, json_out);
        if (*catalog) return cmd_catalog(out_path, max_order, jobs);
        if (*verify) return cmd_verify(suite, vjobs);
    } catch (const nker::MismatchDetected& e) {
        std::cerr << "mismatch: " << e.what() << "\n";
        return 2;
    } catch (const nker::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
