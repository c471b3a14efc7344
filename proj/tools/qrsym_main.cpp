// Command-line front end: deterministic verification runs plus interactive
// application/dumping of the operator families.  Exit codes: 0 pass,
// 1 suite failure, 2 usage or config error.

#include "qrsym/suites.hpp"
#include "qrsym/witt_family.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

namespace {

using namespace qrsym;

std::string now_stamp() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%F %T", std::gmtime(&t));
    return buf;
}

void load_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("config: cannot open '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s;
        for (char ch : line)
            if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
        if (s.empty() || s[0] == '#') continue;
        auto eq = s.find('=');
        if (eq == std::string::npos)
            throw std::domain_error("config: line " + std::to_string(lineno) +
                                    " is not key=value");
        cfg.apply_line(s.substr(0, eq), s.substr(eq + 1));
    }
}

GradedOp parse_operator(const std::string& name, const WeightParam& w) {
    auto sl2 = sl2_triple(w);
    if (name == "sl2.Lm1") return sl2[0];
    if (name == "sl2.L0") return sl2[1];
    if (name == "sl2.Lp1") return sl2[2];
    auto call = [&name](const std::string& fn) -> std::optional<int> {
        if (name.rfind(fn + "(", 0) != 0 || name.back() != ')') return std::nullopt;
        return std::stoi(name.substr(fn.size() + 1, name.size() - fn.size() - 2));
    };
    if (auto k = call("qr")) return qr_symmetry(w, *k);
    if (auto i = call("current")) return current(w, *i);
    throw std::domain_error("unknown operator '" + name +
                            "' (expected sl2.Lm1, sl2.L0, sl2.Lp1, qr(k), current(i))");
}

int cmd_run(const RunConfig& cfg_in) {
    RunConfig cfg = cfg_in;
    try {
        cfg.validate();
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "[" << now_stamp() << "] run start\n";
    RunReport rep = run_suites(cfg);
    std::string text = rep.render();
    if (cfg.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(cfg.out, std::ios::binary);
        if (!out) {
            std::cerr << "config error: cannot write '" << cfg.out << "'\n";
            return 2;
        }
        out << text;
    }
    for (const auto& r : rep.results)
        std::cerr << "[" << now_stamp() << "] suite " << r.name << ": " << r.status << "\n";
    std::cerr << "[" << now_stamp() << "] run end\n";
    return rep.all_must_pass_ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of the composed/overlay operator families"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");  // frees -h/--h for the weight

    auto* run = app.add_subcommand("run", "run verification suites, emit a report");
    run->set_help_flag("--help", "print help");
    std::string config_path, h_csv, suites_csv, out_path, format;
    int K = -1, N = -1;
    run->add_option("--config", config_path, "flat key=value config file");
    run->add_option("--h", h_csv, "comma-separated weights, e.g. 1/2,1,3/2");
    run->add_option("--K", K, "index window for the defect tables (>= 2)");
    run->add_option("--N", N, "truncation degree for window findings (>= 4)");
    run->add_option("--suites", suites_csv, "subset of sl2,thm1a,thm1b,octahedron,overlay,tensor,burnside");
    run->add_option("--out", out_path, "report path (default stdout)");
    run->add_option("--format", format, "json | csv");

    auto* apply = app.add_subcommand("apply", "apply a family operator to a polynomial");
    apply->set_help_flag("--help", "print help");
    std::string op_name, vec_text, h_text = "1/2";
    apply->add_option("--h", h_text, "weight h as p/q");
    apply->add_option("--op", op_name, "sl2.Lm1 | sl2.L0 | sl2.Lp1 | qr(k) | current(i)")
        ->required();
    apply->add_option("--vec", vec_text, "polynomial in z, e.g. \"1 + 2/3*z^2\"")->required();

    auto* dump = app.add_subcommand("dump", "print the shift components of an operator");
    dump->set_help_flag("--help", "print help");
    std::string dop_name, dh_text = "1/2";
    dump->add_option("--h", dh_text, "weight h as p/q");
    dump->add_option("--op", dop_name, "operator name as in apply")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (run->parsed()) {
            qrsym::RunConfig cfg;
            if (!config_path.empty()) load_config_file(config_path, cfg);
            if (!h_csv.empty()) cfg.apply_line("h", h_csv);
            if (K >= 0) cfg.K = K;
            if (N >= 0) cfg.N = N;
            if (!suites_csv.empty()) cfg.apply_line("suites", suites_csv);
            if (!out_path.empty()) cfg.out = out_path;
            if (!format.empty()) cfg.format = format;
            return cmd_run(cfg);
        }
        if (apply->parsed()) {
            qrsym::WeightParam w(qrsym::Rat::parse(h_text));
            qrsym::GradedOp op = parse_operator(op_name, w);
            qrsym::VermaVec v = qrsym::VermaVec::parse(vec_text);
            std::cout << op.apply(v).str() << "\n";
            return 0;
        }
        qrsym::WeightParam w(qrsym::Rat::parse(dh_text));
        std::cout << parse_operator(dop_name, w).dump() << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
