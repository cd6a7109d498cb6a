// Command-line front end: parse Ore polynomial matrices over Q(z), compute
// Hermite forms, GCRDs/LCLMs, Dieudonne determinant degrees, and verify
// certificates.  Exit codes: 0 ok, 1 parse error, 2 computation error,
// 3 cross-check mismatch.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "orehermite/orehermite.hpp"

namespace {

using namespace oreh;

struct Options {
    std::string verb;
    std::string input;   // path, or "-" for stdin
    std::string output;  // path, or "-" for stdout
    bool emit_u = false;
    bool report = false;
    std::string format = "text";
    bool oracle = false;
    bool cross_check = false;
};

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string kv_join(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

std::string report_str(const VerifyReport& rep, int rank, const std::vector<int>& diag,
                       const std::string& format) {
    bool kv = format == "kv";
    std::string eq = kv ? "=" : " = ";
    std::string s;
    s += "rank" + eq + std::to_string(rank) + "\n";
    s += "diag_degrees" + eq + kv_join(diag) + "\n";
    s += "verified" + eq + (rep.ok() ? "true" : "false") + "\n";
    for (const auto& c : rep.checks)
        s += "check." + c.name + eq + (c.pass ? "true" : "false") + "\n";
    return s;
}

int run_hermite(const Options& opt, std::ostream& out, bool force_naive) {
    auto [ring, a] = parse_matrix(read_input(opt.input));
    (void)ring;

    HermitePair hp;
    if (force_naive || opt.oracle) {
        hp = hermite_naive(a).pair;
    } else if (opt.cross_check) {
        hp = hermite(a);
        HermitePair np = hermite_naive(a).pair;
        if (!(hp.h == np.h)) {
            std::cerr << "cross-check mismatch: linear-system and naive Hermite forms differ\n";
            return 3;
        }
    } else {
        hp = hermite(a);
    }

    out << matrix_str(hp.h);
    if (opt.emit_u) out << "\n" << matrix_str(hp.u);
    if (opt.report) {
        VerifyReport rep = verify_hermite(a, hp.h, hp.u);
        out << "\n" << report_str(rep, hermite_rank(hp.h), diag_degrees(hp.h), opt.format);
    }
    return 0;
}

int run_gcrd(const Options& opt, std::ostream& out) {
    auto [ring, fg] = parse_ore_pair(read_input(opt.input));
    (void)ring;
    GcrdCertificate cert = gcrd_ext(fg.first, fg.second);
    bool kv = opt.format == "kv";
    std::string eq = kv ? "=" : " = ";
    if (kv)
        out << "gcrd" << eq << orepoly_str(cert.g) << "\n";
    else
        out << orepoly_str(cert.g) << "\n";
    out << "u" << eq << orepoly_str(cert.u) << "\n";
    out << "v" << eq << orepoly_str(cert.v) << "\n";
    return 0;
}

int run_lclm(const Options& opt, std::ostream& out) {
    auto [ring, fg] = parse_ore_pair(read_input(opt.input));
    (void)ring;
    GcrdCertificate cert = gcrd_ext(fg.first, fg.second);
    OrePoly m = (cert.s * fg.first).monic();
    bool kv = opt.format == "kv";
    std::string eq = kv ? "=" : " = ";
    if (kv)
        out << "lclm" << eq << orepoly_str(m) << "\n";
    else
        out << orepoly_str(m) << "\n";
    out << "s" << eq << orepoly_str(cert.s) << "\n";
    out << "t" << eq << orepoly_str(cert.t) << "\n";
    return 0;
}

int run_ddet_degree(const Options& opt, std::ostream& out) {
    auto [ring, a] = parse_matrix(read_input(opt.input));
    (void)ring;
    Deg d = ddet_degree(a);
    std::string eq = opt.format == "kv" ? "=" : " = ";
    out << "ddet_degree" << eq << d.str() << "\n";
    return 0;
}

int run_unimodular(const Options& opt, std::ostream& out) {
    auto [ring, a] = parse_matrix(read_input(opt.input));
    (void)ring;
    std::string eq = opt.format == "kv" ? "=" : " = ";
    out << "unimodular" << eq << (is_unimodular(a) ? "true" : "false") << "\n";
    return 0;
}

int run_verify(const Options& opt, std::ostream& out) {
    auto [ring, mats] = parse_matrices(read_input(opt.input), 3);
    (void)ring;
    const OreMatrix& a = mats[0];
    const OreMatrix& h = mats[1];
    const OreMatrix& u = mats[2];
    VerifyReport rep = verify_hermite(a, h, u);
    out << report_str(rep, hermite_rank(h), diag_degrees(h), opt.format);
    if (!rep.ok()) {
        for (const auto& c : rep.checks)
            if (!c.pass) {
                std::cerr << "verification failed: check '" << c.name << "' did not pass\n";
                break;
            }
        return 2;
    }
    return 0;
}

int dispatch(const Options& opt) {
    std::ostringstream buf;
    int rc;
    if (opt.verb == "hermite")
        rc = run_hermite(opt, buf, /*force_naive=*/false);
    else if (opt.verb == "hermite-naive")
        rc = run_hermite(opt, buf, /*force_naive=*/true);
    else if (opt.verb == "gcrd")
        rc = run_gcrd(opt, buf);
    else if (opt.verb == "lclm")
        rc = run_lclm(opt, buf);
    else if (opt.verb == "ddet-degree")
        rc = run_ddet_degree(opt, buf);
    else if (opt.verb == "unimodular")
        rc = run_unimodular(opt, buf);
    else if (opt.verb == "verify")
        rc = run_verify(opt, buf);
    else
        throw std::runtime_error("unknown verb: " + opt.verb);

    if (opt.output.empty() || opt.output == "-") {
        std::cout << buf.str();
    } else {
        std::ofstream f(opt.output);
        if (!f) throw std::runtime_error("cannot open output file: " + opt.output);
        f << buf.str();
    }
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hermite forms of Ore polynomial matrices over Q(z)"};
    app.require_subcommand(1);

    Options opt;
    for (const char* verb :
         {"hermite", "hermite-naive", "gcrd", "lclm", "ddet-degree", "unimodular", "verify"}) {
        CLI::App* sub = app.add_subcommand(verb);
        sub->add_option("input", opt.input, "input file (default: stdin)");
        sub->add_option("-o,--output", opt.output, "output file (default: stdout)");
        sub->add_flag("--emit-u", opt.emit_u, "also print the unimodular multiplier U");
        sub->add_flag("--report", opt.report, "append a verification report");
        sub->add_option("--format", opt.format, "report format")
            ->check(CLI::IsMember({"text", "kv"}));
        sub->add_flag("--oracle", opt.oracle, "force the naive Euclidean algorithm");
        sub->add_flag("--cross-check", opt.cross_check, "run both algorithms and compare");
        sub->callback([&opt, verb]() { opt.verb = verb; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        return dispatch(opt);
    } catch (const oreh::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
