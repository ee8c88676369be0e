#include <CLI11.hpp>
#include <json.hpp>

#include "qx/parser.hpp"
#include "qx/verify.hpp"

#include <cstdlib>
#include <iostream>
#include <thread>

using namespace qx;

namespace {

PresKind kind_of(const std::string& cs) {
    if (cs == "O") return PresKind::XO;
    if (cs == "Sp") return PresKind::XSp;
    if (cs == "Mat") return PresKind::MatN;
    throw NcError("unknown case: " + cs);
}

IndexSet parse_indices(const std::string& s) {
    IndexSet out;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        out.push_back(std::stoi(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    return out;
}

nlohmann::ordered_json report_json(const Report& r) {
    nlohmann::ordered_json j;
    j["identity"] = r.identity;
    j["case"] = r.case_name;
    j["N"] = r.N;
    j["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) j["params"][k] = v;
    j["holds"] = r.holds;
    j["terms"] = r.terms;
    j["elapsed_ms"] = r.elapsed_ms;
    j["notes"] = r.notes;
    return j;
}

void print_reports(const std::vector<Report>& reports, const std::string& format) {
    if (format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const Report& r : reports) arr.push_back(report_json(r));
        std::cout << arr.dump(2) << "\n";
        return;
    }
    for (const Report& r : reports) {
        std::cout << (r.holds ? "PASS" : "FAIL") << " " << r.identity
                  << " case=" << r.case_name << " N=" << r.N;
        for (const auto& [k, v] : r.params) std::cout << " " << k << "=" << v;
        std::cout << " elapsed_ms=" << r.elapsed_ms;
        for (const std::string& n : r.notes) std::cout << " [" << n << "]";
        std::cout << "\n";
    }
}

int jobs_from_env(int cli_jobs) {
    if (cli_jobs > 0) return cli_jobs;
    if (const char* env = std::getenv("QX_JOBS")) {
        int j = std::atoi(env);
        if (j > 0) return j;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic engine for quantum coordinate algebras"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string cs = "O", expr, name, rows_s, cols_s, iset_s;
    int N = 2, degree = 2, max_n = 0, jobs = 0;
    bool symbolic_a = false;

    auto* cmd_nf = app.add_subcommand("normal-form", "normal form of an expression");
    cmd_nf->add_option("--case", cs, "O, Sp, or Mat");
    cmd_nf->add_option("--N", N, "size")->required();
    cmd_nf->add_option("expr", expr, "element expression")->required();

    auto* cmd_det = app.add_subcommand("det", "quantum determinant of Mat_N");
    cmd_det->add_option("--N", N, "size")->required();

    auto* cmd_sdet = app.add_subcommand("sdet", "Sklyanin determinant");
    cmd_sdet->add_option("--case", cs, "O or Sp");
    cmd_sdet->add_option("--N", N, "size")->required();

    auto* cmd_pf = app.add_subcommand("pf", "quantum Pfaffian (case Sp)");
    cmd_pf->add_option("--N", N, "size")->required();

    auto* cmd_minor = app.add_subcommand("minor", "quantum or Sklyanin minor");
    cmd_minor->add_option("--case", cs, "O, Sp, or Mat");
    cmd_minor->add_option("--N", N, "size")->required();
    cmd_minor->add_option("--rows", rows_s, "row list, e.g. 1,2")->required();
    cmd_minor->add_option("--cols", cols_s, "column list")->required();

    auto* cmd_basis = app.add_subcommand("basis", "PBW basis up to a degree");
    cmd_basis->add_option("--case", cs, "O, Sp, or Mat");
    cmd_basis->add_option("--N", N, "size")->required();
    cmd_basis->add_option("--degree", degree, "maximal total degree");

    bool list_names = false;
    auto* cmd_verify = app.add_subcommand("verify", "verify one named identity");
    cmd_verify->add_option("name", name, "identity name");
    cmd_verify->add_flag("--list", list_names, "list the registered names");
    cmd_verify->add_option("--case", cs, "restrict to one case");
    cmd_verify->add_option("--N", N, "restrict to one size");
    cmd_verify->add_option("--I", iset_s, "index set / sigma selector");
    cmd_verify->add_option("--max-N", max_n, "size cap override");
    cmd_verify->add_flag("--symbolic-a", symbolic_a, "formal a-parameters");

    auto* cmd_suite = app.add_subcommand("suite", "run every registered check");
    cmd_suite->add_option("--max-N", max_n, "size cap override (up to 6)");
    cmd_suite->add_option("--jobs", jobs, "worker count (default: QX_JOBS or cores)");
    cmd_suite->add_flag("--symbolic-a", symbolic_a, "formal a-parameters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_nf->parsed()) {
            const Presentation* p = Presentation::make(kind_of(cs), N);
            std::cout << parse_element(expr, p).str() << "\n";
        } else if (cmd_det->parsed()) {
            std::cout << det_q(Presentation::make(PresKind::MatN, N)).str() << "\n";
        } else if (cmd_sdet->parsed()) {
            if (cs == "Mat") throw NcError("sdet needs case O or Sp");
            std::cout << sdet(Presentation::make(kind_of(cs), N)).str() << "\n";
        } else if (cmd_pf->parsed()) {
            std::cout << pfaffian(Presentation::make(PresKind::XSp, N)).str() << "\n";
        } else if (cmd_minor->parsed()) {
            const Presentation* p = Presentation::make(kind_of(cs), N);
            IndexSet I = parse_indices(rows_s), J = parse_indices(cols_s);
            Element m = cs == "Mat" ? quantum_minor(p, I, J)
                                    : sklyanin_minor(p, I, J);
            std::cout << m.str() << "\n";
        } else if (cmd_basis->parsed()) {
            const Presentation* p = Presentation::make(kind_of(cs), N);
            for (const Word& w : basis_enumerate(p, degree)) {
                if (w.empty()) {
                    std::cout << "1\n";
                    continue;
                }
                std::string s;
                for (size_t k = 0; k < w.size(); ++k)
                    s += (k ? "*" : "") + p->gen_str(w[k]);
                std::cout << s << "\n";
            }
        } else if (cmd_verify->parsed() || cmd_suite->parsed()) {
            VerifyOptions opt;
            opt.max_n = max_n;
            opt.symbolic_a = symbolic_a;
            std::vector<Report> reports;
            if (cmd_verify->parsed() && list_names) {
                for (const std::string& n : verify_names()) std::cout << n << "\n";
                return 0;
            }
            if (cmd_verify->parsed()) {
                if (name.empty()) throw NcError("verify needs a name (or --list)");
                opt.case_filter = cmd_verify->count("--case") ? cs : "";
                opt.n_filter = cmd_verify->count("--N") ? N : 0;
                if (!iset_s.empty()) {
                    opt.index_set = parse_indices(iset_s);
                    opt.has_index_set = true;
                }
                reports = run_verify(name, opt);
            } else {
                reports = run_suite(opt, jobs_from_env(jobs));
            }
            print_reports(reports, format);
            for (const Report& r : reports)
                if (!r.holds) return 1;
            if (reports.empty()) throw NcError("no instance matches the filters");
        }
    } catch (const NcError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ScalarError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
