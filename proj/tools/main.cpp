#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "cubeiso/antipodal.hpp"
#include "cubeiso/certificate.hpp"
#include "cubeiso/checkers.hpp"
#include "cubeiso/errors.hpp"
#include "cubeiso/family.hpp"
#include "cubeiso/reports.hpp"
#include "cubeiso/segments.hpp"

namespace {

using namespace cubeiso;

// Exit codes: 0 all checks passed, 1 violations or a failed certificate,
// 2 usage or capability errors.

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    out << content;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open file " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct VerifyConfig {
    std::string statement;
    int n = 3;
    std::string mode = "exhaustive";
    uint64_t budget = 0;
    uint64_t seed = kDefaultSeed;
    uint64_t range = 4096;
    bool force = false;
    bool serial = false;
    std::string out;
    std::string format = "text";
};

int run_verify(const VerifyConfig& cfg) {
    CheckOptions options;
    options.n = cfg.n;
    options.mode = cfg.mode == "sampled" ? Mode::Sampled : Mode::Exhaustive;
    options.budget = cfg.budget;
    options.seed = cfg.seed;
    options.force = cfg.force;

    VerificationReport report;
    const bool serial = cfg.serial;
    if (cfg.statement == "thm1")
        report = serial ? ref::check_theorem1(options) : check_theorem1(options);
    else if (cfg.statement == "thm2")
        report = serial ? ref::check_theorem2(options) : check_theorem2(options);
    else if (cfg.statement == "lemma3")
        report = serial ? ref::check_lemma3(cfg.range) : check_lemma3(cfg.range);
    else if (cfg.statement == "lemma4")
        report = serial ? ref::check_lemma4(cfg.n) : check_lemma4(cfg.n);
    else if (cfg.statement == "lemma5")
        report = serial ? ref::check_lemma5(options) : check_lemma5(options);
    else if (cfg.statement == "lemma6")
        report = serial ? ref::check_lemma6(options) : check_lemma6(options);
    else if (cfg.statement == "identities")
        report = serial ? ref::check_identities(options) : check_identities(options);
    else
        throw input_error("unknown statement " + cfg.statement);

    write_output(cfg.out, cfg.format == "csv" ? to_csv(report) : to_text(report));
    return report.pass() ? 0 : 1;
}

int run_profile(int n, const std::string& klass, const std::string& out) {
    const bool antipodal_only = klass == "antipodal";
    const bool oracle_feasible = antipodal_only ? (n >= 1 && n <= 5) : n <= 4;
    std::string csv = "m,rhs,oracle_min,tight\n";
    for (uint64_t m = 0; m <= (uint64_t{1} << n); m += 2) {
        const uint64_t rhs = extremal_boundary(n, m);
        csv += std::to_string(m) + "," + std::to_string(rhs) + ",";
        if (oracle_feasible) {
            const auto oracle = minimize_boundary(n, m, antipodal_only, 0);
            csv += std::to_string(oracle.min_boundary) + ",";
            csv += oracle.min_boundary == rhs ? "true" : "false";
        } else {
            csv += ",";
        }
        csv += "\n";
    }
    write_output(out, csv);
    return 0;
}

int run_extremal(int n, const std::string& out) {
    std::string csv = "m,boundary\n";
    for (uint64_t m = 0; m <= (uint64_t{1} << n); m += 2)
        csv += std::to_string(m) + "," + std::to_string(extremal_boundary(n, m)) + "\n";
    write_output(out, csv);
    return 0;
}

int run_ftable(uint64_t max_k, const std::string& out) {
    const SegmentEdgeTable& table = SegmentEdgeTable::shared();
    if (max_k > table.max_k()) throw capability_error("ftable supports k up to 2^20");
    std::string csv = "k,F\n";
    for (uint64_t k = 0; k <= max_k; ++k)
        csv += std::to_string(k) + "," + std::to_string(table(k)) + "\n";
    write_output(out, csv);
    return 0;
}

int run_trace(const std::string& family_path, const std::string& cert_path, bool check_only,
              bool force) {
    const Family fam = family_from_text(read_file(family_path));
    if (check_only) {
        if (cert_path.empty()) throw input_error("--check-only needs --cert");
        const Certificate cert = certificate_from_text(read_file(cert_path));
        const CertificateCheck check = verify_certificate(cert, fam);
        if (!check.ok) {
            std::cerr << "certificate rejected at " << check.locus << ": " << check.detail << "\n";
            return 1;
        }
        std::cerr << "certificate verified\n";
        return 0;
    }
    const Certificate cert = trace_induction(fam, force);
    write_output(cert_path, to_text(cert));
    const CertificateCheck check = verify_certificate(cert, fam);
    if (!check.ok) {
        std::cerr << "freshly traced certificate rejected at " << check.locus << ": "
                  << check.detail << "\n";
        return 1;
    }
    std::cerr << "certificate verified\n";
    return 0;
}

int run_serialize(const std::string& in, const std::string& kind, int n, uint64_t k, uint64_t m,
                  const std::string& out) {
    Family fam;
    if (!in.empty()) {
        fam = family_from_text(read_file(in));
    } else if (kind == "empty") {
        fam = Family(n);
    } else if (kind == "full") {
        fam = Family::full(n);
    } else if (kind == "segment") {
        fam = initial_segment(n, k);
    } else if (kind == "extremal") {
        fam = extremal_family(n, m);
    } else if (kind == "subcube") {
        if (k > uint64_t(n)) throw input_error("subcube dimension exceeds n");
        fam = initial_segment(n, uint64_t{1} << k);
    } else {
        throw input_error("unknown family kind " + kind);
    }
    write_output(out, to_text(fam) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for edge isoperimetry of antipodal families in the discrete cube"};
    app.require_subcommand(1);

    int max_n_override = -1;
    app.add_option("--max-n", max_n_override, "Override the ambient dimension cap (default 28)");
    int threads = 0;
    app.add_option("--threads", threads, "Worker thread count (default: all cores)");

    VerifyConfig vcfg;
    auto* verify = app.add_subcommand("verify", "Run a theorem or lemma checker");
    verify->add_option("--statement", vcfg.statement, "thm1|thm2|lemma3|lemma4|lemma5|lemma6|identities")
        ->required();
    verify->add_option("--n", vcfg.n, "Dimension (for lemma4: largest dimension swept)");
    verify->add_option("--mode", vcfg.mode, "exhaustive|sampled")
        ->check(CLI::IsMember({"exhaustive", "sampled"}));
    verify->add_option("--budget", vcfg.budget,
                       "Exhaustive: instance cap (0 = full space); sampled: sample count");
    verify->add_option("--seed", vcfg.seed, "Seed for sampled modes");
    verify->add_option("--range", vcfg.range, "lemma3 sweep bound (checks all x,y <= range)");
    verify->add_flag("--force", vcfg.force, "Lift the long-run gates where still representable");
    verify->add_flag("--serial", vcfg.serial, "Use the serial reference engine");
    verify->add_option("--out", vcfg.out, "Report path (default: stdout)");
    verify->add_option("--format", vcfg.format, "text|csv")
        ->check(CLI::IsMember({"text", "csv"}));

    int profile_n = 3;
    std::string profile_class = "antipodal";
    std::string profile_out;
    auto* profile = app.add_subcommand("profile", "Boundary bound vs brute-force minimum per size");
    profile->add_option("--n", profile_n, "Dimension")->required();
    profile->add_option("--class", profile_class, "antipodal|all (oracle search space)")
        ->check(CLI::IsMember({"antipodal", "all"}));
    profile->add_option("--out", profile_out, "CSV path (default: stdout)");

    int extremal_n = 3;
    std::string extremal_out;
    auto* extremal = app.add_subcommand("extremal", "Boundary of the extremal family per size");
    extremal->add_option("--n", extremal_n, "Dimension")->required();
    extremal->add_option("--out", extremal_out, "CSV path (default: stdout)");

    uint64_t ftable_max = 1 << 12;
    std::string ftable_out;
    auto* ftable = app.add_subcommand("ftable", "Dump the segment edge-count table as CSV");
    ftable->add_option("--max", ftable_max, "Largest k");
    ftable->add_option("--out", ftable_out, "CSV path (default: stdout)");

    std::string trace_family, trace_cert;
    bool trace_check_only = false, trace_force = false;
    auto* trace = app.add_subcommand("trace", "Trace the induction on a family, or re-check a certificate");
    trace->add_option("--family", trace_family, "Family file")->required();
    trace->add_option("--cert", trace_cert, "Certificate path (output, or input with --check-only)");
    trace->add_flag("--check-only", trace_check_only, "Verify an existing certificate");
    trace->add_flag("--force", trace_force, "Lift the trace dimension gate");

    std::string ser_in, ser_kind = "segment", ser_out;
    int ser_n = 3;
    uint64_t ser_k = 0, ser_m = 0;
    auto* serialize = app.add_subcommand("serialize", "Emit families in the text format");
    serialize->add_option("--in", ser_in, "Parse this family file and re-emit it canonically");
    serialize->add_option("--kind", ser_kind, "empty|full|segment|extremal|subcube");
    serialize->add_option("--n", ser_n, "Dimension");
    serialize->add_option("--k", ser_k, "Segment size, or subcube dimension");
    serialize->add_option("--m", ser_m, "Extremal family size (even)");
    serialize->add_option("--out", ser_out, "Output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (max_n_override >= 0) set_dimension_cap(max_n_override);
#ifdef _OPENMP
        if (threads > 0) omp_set_num_threads(threads);
#endif
        if (verify->parsed()) return run_verify(vcfg);
        if (profile->parsed()) return run_profile(profile_n, profile_class, profile_out);
        if (extremal->parsed()) return run_extremal(extremal_n, extremal_out);
        if (ftable->parsed()) return run_ftable(ftable_max, ftable_out);
        if (trace->parsed()) return run_trace(trace_family, trace_cert, trace_check_only, trace_force);
        if (serialize->parsed()) return run_serialize(ser_in, ser_kind, ser_n, ser_k, ser_m, ser_out);
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const capability_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
