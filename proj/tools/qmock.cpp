#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qmock/mocklib.hpp"
#include "qmock/radial.hpp"

using nlohmann::json;
using namespace qmock;

namespace {

constexpr const char* kVersion = "1.0.0";

std::string timestamp_utc() {
    auto now = std::chrono::system_clock::now();
    std::time_t tt = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&tt));
    return buf;
}

json report_to_json(const VerificationReport& r) {
    json j;
    j["id"] = r.id;
    j["specialization"] = r.specialization;
    j["order"] = r.order;
    j["pass"] = r.pass;
    if (r.mismatch_exponent) {
        j["mismatch_exponent"] = *r.mismatch_exponent;
        j["lhs_coefficient"] = r.lhs_coefficient;
        j["rhs_coefficient"] = r.rhs_coefficient;
    }
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

void print_report_text(const VerificationReport& r) {
    if (r.pass) {
        std::printf("ok    %-18s @ %s (order %lld)\n", r.id.c_str(),
                    r.specialization.c_str(), r.order);
    } else if (r.mismatch_exponent) {
        std::printf("FAIL  %-18s @ %s: first mismatch at q^%lld: lhs %s, rhs %s\n",
                    r.id.c_str(), r.specialization.c_str(), *r.mismatch_exponent,
                    r.lhs_coefficient.c_str(), r.rhs_coefficient.c_str());
    } else {
        std::printf("FAIL  %-18s @ %s: %s\n", r.id.c_str(), r.specialization.c_str(),
                    r.notes.c_str());
    }
    if (!r.pass && !r.notes.empty() && r.mismatch_exponent)
        std::printf("      note: %s\n", r.notes.c_str());
}

// entries checked at their default specializations, or discovered ones
std::vector<Specialization> specs_for(const IdentityEntry& e) {
    if (!e.default_specs.empty()) return e.default_specs;
    std::vector<Specialization> found = find_admissible_specializations(e, {});
    if (found.size() > 3) found.resize(3);
    return found;
}

struct CheckOutcome {
    std::vector<VerificationReport> reports;
    bool all_pass = true;
};

CheckOutcome run_check(const std::vector<std::string>& ids, long long order) {
    std::vector<const IdentityEntry*> entries;
    if (ids.empty())
        for (const IdentityEntry& e : registry()) entries.push_back(&e);
    else
        for (const std::string& id : ids) entries.push_back(&registry_entry(id));

    // parallel over entries; the merged report order is the registry order
    std::vector<std::vector<VerificationReport>> slots(entries.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(entries.size()); ++i) {
        const IdentityEntry& e = *entries[i];
        for (const Specialization& s : specs_for(e)) {
            VerificationReport r;
            try {
                r = check_identity(e, s, order);
            } catch (const QmockError& ex) {
                r.id = e.id;
                r.specialization = s.str();
                r.order = order;
                r.pass = false;
                r.notes = ex.what();
            }
            if (!e.discrepancy.empty())
                r.notes += (r.notes.empty() ? "" : "; ") + e.discrepancy;
            slots[i].push_back(std::move(r));
        }
    }
    CheckOutcome out;
    for (auto& v : slots)
        for (auto& r : v) {
            out.all_pass = out.all_pass && r.pass;
            out.reports.push_back(std::move(r));
        }
    return out;
}

const struct {
    RadialTheorem t;
    long long k, ell;
} kSmallestRadial[] = {
    {RadialTheorem::FOR, 1, 0},   {RadialTheorem::FOR, 2, 0},
    {RadialTheorem::W3, 0, 0},    {RadialTheorem::W3, 1, 0},
    {RadialTheorem::EX1, 1, 0},   {RadialTheorem::EX1, 3, 0},
    {RadialTheorem::EX2, 0, 0},   {RadialTheorem::EX2, 1, 0},
    {RadialTheorem::EX3, 1, 0},   {RadialTheorem::EX3, 2, 0},
    {RadialTheorem::EX4, 1, 0},   {RadialTheorem::EX4, 2, 0},
    {RadialTheorem::B2, 0, 0},    {RadialTheorem::B2, 1, 0},
    {RadialTheorem::PSI10, 0, 1}, {RadialTheorem::PSI10, 0, 3},
};

const char* radial_order_shape(RadialTheorem t) {
    switch (t) {
        case RadialTheorem::FOR: return "even order 2k, k >= 1";
        case RadialTheorem::W3: return "odd order 2k+1, k >= 0";
        case RadialTheorem::EX1: return "even order 2k with k odd";
        case RadialTheorem::EX2: return "odd order 2k+1, k >= 0";
        case RadialTheorem::EX3: return "order 4k, k >= 1";
        case RadialTheorem::EX4: return "even order 2k, k >= 1";
        case RadialTheorem::B2: return "odd order 2k+1, k >= 0";
        case RadialTheorem::PSI10: return "order 10k+ell, ell in {1,3,5,7,9}";
    }
    return "";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact q-series identity checker and radial-limit verifier"};
    app.set_version_flag("--version", std::string("qmock ") + kVersion);
    app.set_config("--config", "", "config file (key=value)");
    app.require_subcommand(1);

    long long order = 40;
    unsigned precision = 256;
    double tolerance = 1e-4;
    int jobs = 0;
    std::string format = "text";
    std::string f3_variant = "corrected";
    std::string rank_sign = "right-minus-left";

    app.add_option("--order", order, "truncation order for identity checks")
        ->envname("QMOCK_ORDER")
        ->check(CLI::Range(10ll, 100000ll));
    app.add_option("--precision", precision, "working precision in bits")
        ->envname("QMOCK_PRECISION")
        ->check(CLI::Range(64u, 1u << 20));
    app.add_option("--tolerance", tolerance, "radial pass tolerance")
        ->envname("QMOCK_TOLERANCE")
        ->check(CLI::PositiveNumber);
    app.add_option("--jobs", jobs, "parallelism degree (0 = library default)")
        ->envname("QMOCK_JOBS");
    app.add_option("--format", format, "output format")
        ->envname("QMOCK_FORMAT")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--f3-variant", f3_variant,
                   "reading of the PSI10 F(3) finite sum")
        ->envname("QMOCK_F3_VARIANT")
        ->check(CLI::IsMember({"paper", "corrected"}));
    app.add_option("--rank-sign", rank_sign, "unimodal rank orientation")
        ->envname("QMOCK_RANK_SIGN")
        ->check(CLI::IsMember({"right-minus-left", "left-minus-right"}));

    auto* list_cmd = app.add_subcommand("list", "list registry identities and radial theorems");
    auto* check_cmd = app.add_subcommand("check", "verify identities coefficientwise");
    std::vector<std::string> check_ids;
    check_cmd->add_option("ids", check_ids, "identity ids (default: all)");
    auto* radial_cmd = app.add_subcommand("radial", "verify one radial-limit theorem");
    std::string theorem_name;
    long long rk = 0, rell = 0, root_index = 1;
    radial_cmd->add_option("theorem", theorem_name, "FOR W3 EX1 EX2 EX3 EX4 B2 PSI10")
        ->required();
    radial_cmd->add_option("--k", rk, "order parameter k")->required();
    radial_cmd->add_option("--ell", rell, "residue ell (PSI10 only)");
    radial_cmd->add_option("--root-index", root_index, "which primitive root, exp(2 pi i j/n)");
    auto* report_cmd = app.add_subcommand("report", "full suite, single JSON document");
    std::string report_path;
    report_cmd->add_option("--output", report_path, "write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

#ifdef _OPENMP
    if (jobs > 0) omp_set_num_threads(jobs);
#endif
    F3Variant f3 = f3_variant == "paper" ? F3Variant::paper : F3Variant::corrected;

    if (list_cmd->parsed()) {
        if (format == "json") {
            json out;
            out["identities"] = json::array();
            for (const IdentityEntry& e : registry()) {
                json j{{"id", e.id},
                       {"citation", e.citation},
                       {"quote", e.quote},
                       {"spec_shape", e.spec_shape}};
                if (!e.discrepancy.empty()) j["discrepancy"] = e.discrepancy;
                out["identities"].push_back(j);
            }
            out["radial_theorems"] = json::array();
            for (auto& c : kSmallestRadial)
                if (c.ell <= 1)
                    out["radial_theorems"].push_back(
                        {{"id", radial_theorem_name(c.t)},
                         {"root_order_shape", radial_order_shape(c.t)}});
            std::cout << out.dump(2) << "\n";
        } else {
            for (const IdentityEntry& e : registry()) {
                std::printf("%-18s %s\n", e.id.c_str(), e.citation.c_str());
                std::printf("%-18s   %s   [spec: %s]\n", "", e.quote.c_str(),
                            e.spec_shape.c_str());
                if (!e.discrepancy.empty())
                    std::printf("%-18s   ! %s\n", "", e.discrepancy.c_str());
            }
            std::printf("\nradial theorems:\n");
            for (auto& c : kSmallestRadial)
                if (c.ell <= 1)
                    std::printf("%-8s root of unity of %s\n", radial_theorem_name(c.t),
                                radial_order_shape(c.t));
        }
        return 0;
    }

    if (check_cmd->parsed()) {
        CheckOutcome out;
        try {
            out = run_check(check_ids, order);
        } catch (const UnknownId& e) {
            std::fprintf(stderr, "error: %s\n", e.what());
            return 2;
        }
        if (format == "json") {
            json j{{"version", kVersion},
                   {"timestamp", timestamp_utc()},
                   {"order", order},
                   {"pass", out.all_pass},
                   {"identities", json::array()}};
            for (const VerificationReport& r : out.reports)
                j["identities"].push_back(report_to_json(r));
            std::cout << j.dump(2) << "\n";
        } else {
            for (const VerificationReport& r : out.reports) print_report_text(r);
            std::printf("%s: %zu records\n", out.all_pass ? "PASS" : "FAIL",
                        out.reports.size());
        }
        return out.all_pass ? 0 : 1;
    }

    if (radial_cmd->parsed()) {
        RadialOptions opt;
        opt.precision_bits = precision;
        opt.tolerance = tolerance;
        opt.f3 = f3;
        RadialResult r;
        try {
            RadialTheorem t = radial_theorem_from_name(theorem_name);
            r = radial_verify(t, rk, rell, root_index, opt);
        } catch (const InadmissibleOrder& e) {
            std::fprintf(stderr, "error: %s (%s requires %s)\n", e.what(),
                         theorem_name.c_str(),
                         radial_order_shape(radial_theorem_from_name(theorem_name)));
            return 2;
        } catch (const QmockError& e) {
            std::fprintf(stderr, "error: %s\n", e.what());
            return 2;
        }
        if (format == "json") {
            std::cout << json::parse(radial_result_json(r)).dump(2) << "\n";
        } else {
            std::string ell_part =
                r.theorem == RadialTheorem::PSI10 ? " ell=" + std::to_string(rell) : "";
            std::printf("%s k=%lld%s at root of order %lld (index %lld)\n",
                        theorem_name.c_str(), rk, ell_part.c_str(), r.root_order,
                        r.root_index);
            std::printf("  limit      = %s + %s i\n", r.limit.re.str(20).c_str(),
                        r.limit.im.str(20).c_str());
            std::printf("  exact rhs  = %s + %s i\n", r.exact_rhs.re.str(20).c_str(),
                        r.exact_rhs.im.str(20).c_str());
            std::printf("  |diff|     = %s (error estimate %s)\n",
                        r.difference.str(6).c_str(), r.error_estimate.str(6).c_str());
            if (!r.notes.empty()) std::printf("  %s\n", r.notes.c_str());
            std::printf("%s\n", r.pass ? "PASS" : "FAIL");
        }
        return r.pass ? 0 : 1;
    }

    // report: identity suite plus every radial theorem at its two smallest
    // admissible parameters
    json doc{{"version", kVersion},
             {"timestamp", timestamp_utc()},
             {"config",
              {{"order", order},
               {"precision_bits", precision},
               {"tolerance", tolerance},
               {"f3_variant", f3_variant},
               {"rank_sign", rank_sign}}}};
    CheckOutcome out = run_check({}, order);
    bool all = out.all_pass;
    doc["identities"] = json::array();
    for (const VerificationReport& r : out.reports)
        doc["identities"].push_back(report_to_json(r));
    doc["radial"] = json::array();
    RadialOptions opt;
    opt.precision_bits = precision;
    opt.tolerance = tolerance;
    opt.f3 = f3;
    for (auto& c : kSmallestRadial) {
        RadialResult r = radial_verify(c.t, c.k, c.ell, 1, opt);
        all = all && r.pass;
        doc["radial"].push_back(json::parse(radial_result_json(r)));
    }
    doc["pass"] = all;
    std::string body = doc.dump(2) + "\n";
    if (report_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(report_path);
        f << body;
    }
    return all ? 0 : 1;
}
