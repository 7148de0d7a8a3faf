#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "json.hpp"
#include "pcr/binary_code.hpp"
#include "pcr/eigenbound.hpp"
#include "pcr/errors.hpp"
#include "pcr/matrix_io.hpp"
#include "pcr/properties.hpp"
#include "pcr/pseudoweight.hpp"
#include "pcr/redundancy.hpp"

using json = nlohmann::ordered_json;
using namespace pcr;

namespace {

struct Options {
    std::string in;
    std::string out;
    std::string channel;
    std::string format = "json";
    int nmax = 0;
    int threads = 0;
    std::uint64_t seed = 1;
    int d_budget = 24;
    std::uint64_t ray_cap = 0;
    int rho_cap = 0;
    int fixtures = 200;
};

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + opt.out);
    f << text;
}

std::vector<Channel> requested_channels(const Options& opt) {
    if (opt.channel.empty()) return {kAllChannels.begin(), kAllChannels.end()};
    auto ch = channel_from_string(opt.channel);
    if (!ch) throw CLI::ValidationError("--channel", "unknown channel " + opt.channel);
    return {*ch};
}

std::string witness_str(const Ray& ray) {
    std::string s;
    for (const auto& c : ray.coords) {
        if (!s.empty()) s += ' ';
        s += c.get_str();
    }
    return s;
}

json ray_json(const Ray& ray) {
    json arr = json::array();
    for (const auto& c : ray.coords) arr.push_back(c.get_str());
    return arr;
}

int cmd_pw(const Options& opt) {
    BitMatrix h = read_matrix_file(opt.in);
    if (opt.ray_cap > 0) {
        auto rays = extreme_rays(fundamental_cone_system(h));
        if (rays.size() > opt.ray_cap)
            throw BudgetExceeded("pw: " + std::to_string(rays.size()) +
                                 " extreme rays exceed --ray-cap " + std::to_string(opt.ray_cap));
    }
    auto rep = min_pseudoweights(h);
    if (opt.format == "json") {
        json doc;
        doc["n"] = rep.n;
        doc["num_rays"] = rep.num_rays;
        doc["d"] = rep.d ? json(*rep.d) : json(nullptr);
        json chans;
        for (Channel ch : kAllChannels) {
            const auto& m = rep.channel(ch);
            json entry;
            if (m) {
                entry["wmin"] = rat_to_string(m->wmin);
                entry["witness"] = ray_json(m->witness);
            } else {
                entry["wmin"] = "inf";
            }
            chans[channel_name(ch)] = entry;
        }
        doc["channels"] = chans;
        emit(opt, doc.dump(2) + "\n");
    } else {
        std::ostringstream csv;
        csv << "channel,wmin,witness\n";
        for (Channel ch : kAllChannels) {
            const auto& m = rep.channel(ch);
            csv << channel_name(ch) << ',';
            if (m)
                csv << rat_to_string(m->wmin) << ',' << witness_str(m->witness);
            else
                csv << "inf,";
            csv << '\n';
        }
        emit(opt, csv.str());
    }
    return 0;
}

json classify_json(const RedundancyResult& res) {
    json doc;
    doc["channel"] = channel_name(res.channel);
    doc["n"] = res.n;
    doc["k"] = res.k;
    doc["d"] = res.d;
    doc["rho"] = res.rho ? json(*res.rho) : json("inf");
    doc["class"] = res.code_class;
    doc["class_exact"] = res.class_exact;
    if (res.witness) doc["witness"] = res.witness->to_strings();
    if (res.attaining_count) doc["attaining_count"] = *res.attaining_count;
    if (res.cert_wmin) doc["cert_wmin"] = rat_to_string(*res.cert_wmin);
    if (res.cert_witness) doc["cert_witness"] = ray_json(*res.cert_witness);
    return doc;
}

int cmd_classify(const Options& opt) {
    BinaryCode code(read_matrix_file(opt.in));
    ClassifyBudgets budgets;
    if (opt.rho_cap > 0) budgets.rho_cap = opt.rho_cap;
    std::vector<RedundancyResult> results;
    for (Channel ch : requested_channels(opt)) results.push_back(classify(code, ch, budgets));
    if (opt.format == "json") {
        json arr = json::array();
        for (const auto& r : results) arr.push_back(classify_json(r));
        emit(opt, arr.dump(2) + "\n");
    } else {
        std::ostringstream csv;
        csv << "n,k,d,channel,rho,class,witness\n";
        for (const auto& r : results) {
            csv << r.n << ',' << r.k << ',' << r.d << ',' << channel_name(r.channel) << ',';
            if (r.rho)
                csv << *r.rho;
            else
                csv << "inf";
            csv << ',' << r.code_class << ',';
            if (r.witness) csv << to_base64(*r.witness);
            csv << '\n';
        }
        emit(opt, csv.str());
    }
    return 0;
}

int cmd_survey(const Options& opt) {
    if (opt.nmax < 3) throw CLI::ValidationError("--nmax", "survey needs --nmax >= 3");
    auto chans = requested_channels(opt);
    if (chans.size() != 1) throw CLI::ValidationError("--channel", "survey needs one channel");
    ClassifyBudgets budgets;
    if (opt.rho_cap > 0) budgets.rho_cap = opt.rho_cap;
    auto rows = survey(opt.nmax, chans[0], budgets);
    std::map<std::pair<int, int>, int> counts;  // (n, k) -> number of codes
    for (const auto& row : rows) ++counts[{row.n, row.k}];
    if (opt.format == "json") {
        json doc;
        json cj = json::array();
        for (const auto& [nk, c] : counts)
            cj.push_back({{"n", nk.first}, {"k", nk.second}, {"count", c}});
        doc["counts"] = cj;
        json rj = json::array();
        for (const auto& row : rows) {
            json r;
            r["n"] = row.n;
            r["k"] = row.k;
            r["d"] = row.d;
            r["channel"] = channel_name(row.channel);
            r["rho"] = row.rho ? json(*row.rho) : json("inf");
            r["class"] = row.code_class;
            r["class_exact"] = row.class_exact;
            if (row.witness) r["witness"] = row.witness->to_strings();
            rj.push_back(r);
        }
        doc["rows"] = rj;
        emit(opt, doc.dump(2) + "\n");
    } else {
        std::ostringstream csv;
        csv << "n,k,count\n";
        for (const auto& [nk, c] : counts) csv << nk.first << ',' << nk.second << ',' << c << '\n';
        csv << '\n' << survey_csv(rows);
        emit(opt, csv.str());
    }
    return 0;
}

int cmd_cyclic_scan(const Options& opt) {
    if (opt.nmax < 2) throw CLI::ValidationError("--nmax", "cyclic-scan needs --nmax >= 2");
    if (opt.format == "json") {
        json arr = json::array();
        scan_stream_omp(2, opt.nmax, opt.d_budget, [&](const ScanRecord& r) {
            json rec;
            rec["n"] = r.n;
            rec["h"] = r.h.to_exponent_string();
            rec["k"] = r.k;
            rec["w"] = r.w;
            rec["connected"] = r.connected;
            if (r.connected) {
                rec["mu2"] = r.mu2;
                rec["bound"] = r.bound;
            }
            if (r.d) rec["d"] = *r.d;
            rec["d_from_registry"] = r.d_from_registry;
            rec["flagged"] = r.flagged;
            rec["near_miss"] = r.near_miss;
            arr.push_back(rec);
        });
        emit(opt, arr.dump(2) + "\n");
    } else {
        std::ostringstream csv;
        csv << scan_csv_header() << '\n';
        scan_stream_omp(2, opt.nmax, opt.d_budget,
                        [&](const ScanRecord& r) { csv << scan_csv_row(r) << '\n'; });
        emit(opt, csv.str());
    }
    return 0;
}

int cmd_lemma_checks(const Options& opt) {
    auto results = run_property_suites(opt.seed, opt.fixtures);
    std::ostringstream out;
    bool all_ok = true;
    for (const auto& r : results) {
        out << r.name << ": " << (r.passed ? "pass" : "fail") << " (" << r.fixtures
            << " fixtures)";
        if (!r.passed) out << " -- " << r.detail;
        out << '\n';
        all_ok = all_ok && r.passed;
    }
    emit(opt, out.str());
    if (!all_ok) throw std::runtime_error("property suite failure");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"exact pseudoweight, pseudoredundancy and cyclic-scan toolkit"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", opt.out, "write the report to a file instead of stdout");
        sub->add_option("--threads", opt.threads, "worker thread count (default: all cores)")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* pw = app.add_subcommand("pw", "minimum pseudoweights of a parity-check matrix");
    pw->add_option("--in", opt.in, "matrix file (plain or alist)")->required();
    pw->add_option("--ray-cap", opt.ray_cap, "abort if the cone has more extreme rays")
        ->check(CLI::PositiveNumber);
    add_common(pw);

    CLI::App* cl = app.add_subcommand("classify", "pseudoredundancy and class of a code");
    cl->add_option("--in", opt.in, "parity-check matrix file")->required();
    cl->add_option("--channel", opt.channel, "bec|awgnc|bsc|maxfrac (default: all)");
    cl->add_option("--rho-cap", opt.rho_cap, "stop the search above this rho")
        ->check(CLI::PositiveNumber);
    add_common(cl);

    CLI::App* sv = app.add_subcommand("survey", "classify every short code");
    sv->add_option("--nmax", opt.nmax, "maximum code length")->required();
    sv->add_option("--channel", opt.channel, "bec|awgnc|bsc|maxfrac")->required();
    sv->add_option("--rho-cap", opt.rho_cap, "stop each search above this rho")
        ->check(CLI::PositiveNumber);
    add_common(sv);

    CLI::App* cs = app.add_subcommand("cyclic-scan", "eigenvalue bound scan of cyclic codes");
    cs->add_option("--nmax", opt.nmax, "maximum code length (<= 250)")->required();
    cs->add_option("--d-budget", opt.d_budget, "exhaustive distance search up to dimension");
    add_common(cs);

    CLI::App* lc = app.add_subcommand("lemma-checks", "randomized property suites");
    lc->add_option("--seed", opt.seed, "fixture generator seed");
    lc->add_option("--fixtures", opt.fixtures, "fixtures per suite")->check(CLI::PositiveNumber);
    add_common(lc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

#ifdef _OPENMP
    if (opt.threads > 0) omp_set_num_threads(opt.threads);
#endif

    try {
        if (pw->parsed()) return cmd_pw(opt);
        if (cl->parsed()) return cmd_classify(opt);
        if (sv->parsed()) return cmd_survey(opt);
        if (cs->parsed()) return cmd_cyclic_scan(opt);
        if (lc->parsed()) return cmd_lemma_checks(opt);
    } catch (const ParseError& e) {
        std::cerr << opt.in << ":" << e.line << ":" << e.column << ": " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
