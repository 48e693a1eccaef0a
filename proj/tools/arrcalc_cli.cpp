// Command-line front end. Everything goes through the C API in arrcalc.h;
// this translation unit never touches the C++ core directly.

#include <cstdio>
#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "arrcalc.h"

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct CliError {
    int exit_code;
    std::string message;
};

[[noreturn]] void die(int code, const std::string& msg) { throw CliError{code, msg}; }

int exit_code_for(arrcalc_status st) {
    switch (st) {
        case ARRCALC_OK: return kExitOk;
        case ARRCALC_ERR_PARSE: return kExitUsage;
        case ARRCALC_ERR_INVALID: return kExitUsage;
        case ARRCALC_ERR_UNSUPPORTED: return kExitMismatch;
        case ARRCALC_ERR_GUARD: return kExitMismatch;
        default: return kExitInternal;
    }
}

void check(arrcalc_status st) {
    if (st != ARRCALC_OK) die(exit_code_for(st), arrcalc_last_error());
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    arrcalc_string_free(s);
    return out;
}

std::string fmt15(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

std::string fmt_dev(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

using SpecPtr = std::unique_ptr<arrcalc_spec, decltype(&arrcalc_spec_free)>;
using PolyPtr = std::unique_ptr<arrcalc_poly, decltype(&arrcalc_poly_free)>;
using ArrPtr = std::unique_ptr<arrcalc_arrangement, decltype(&arrcalc_arrangement_free)>;
using RiemannPtr = std::unique_ptr<arrcalc_riemann, decltype(&arrcalc_riemann_free)>;

SpecPtr parse_spec(const std::string& text) {
    arrcalc_spec* raw = nullptr;
    check(arrcalc_spec_parse(text.c_str(), &raw));
    return SpecPtr(raw, arrcalc_spec_free);
}

struct ChiResult {
    std::string method;
    std::string status;  // ok | unsupported | refused
    std::string provenance;
    std::string reason;
    PolyPtr poly{nullptr, arrcalc_poly_free};
};

ChiResult compute_chi(const arrcalc_spec* spec, const std::string& method, int threads,
                      bool tolerate_refusal) {
    ChiResult r;
    r.method = method;
    arrcalc_poly* poly = nullptr;
    char* prov = nullptr;
    arrcalc_status st = arrcalc_chi(spec, method.c_str(), threads, &poly, &prov);
    if (st == ARRCALC_OK) {
        r.status = "ok";
        r.poly = PolyPtr(poly, arrcalc_poly_free);
        r.provenance = take_string(prov);
        return r;
    }
    if (tolerate_refusal && (st == ARRCALC_ERR_UNSUPPORTED || st == ARRCALC_ERR_GUARD)) {
        r.status = st == ARRCALC_ERR_UNSUPPORTED ? "unsupported" : "refused";
        r.reason = arrcalc_last_error();
        return r;
    }
    die(exit_code_for(st), arrcalc_last_error());
}

std::vector<std::string> coeff_strings(const arrcalc_poly* poly) {
    std::vector<std::string> out;
    int deg = arrcalc_poly_degree(poly);
    for (int k = 0; k <= std::max(deg, 0); ++k) {
        char* s = nullptr;
        check(arrcalc_poly_coeff(poly, k, &s));
        out.push_back(take_string(s));
    }
    return out;
}

// constant term first, semicolon separated
std::string coeff_display(const arrcalc_poly* poly) {
    std::string joined;
    for (const auto& c : coeff_strings(poly)) {
        if (!joined.empty()) joined += ";";
        joined += c;
    }
    return joined;
}

std::string poly_display(const arrcalc_poly* poly) {
    char* s = nullptr;
    check(arrcalc_poly_to_string(poly, &s));
    return take_string(s);
}

ordered_json chi_json(const ChiResult& r) {
    ordered_json j;
    j["method"] = r.method;
    j["status"] = r.status;
    if (r.status == "ok") {
        j["provenance"] = r.provenance;
        j["degree"] = arrcalc_poly_degree(r.poly.get());
        j["coefficients"] = coeff_strings(r.poly.get());
    } else {
        j["reason"] = r.reason;
    }
    return j;
}

ordered_json roots_json(const std::vector<double>& re, const std::vector<double>& im) {
    ordered_json arr = ordered_json::array();
    for (size_t i = 0; i < re.size(); ++i) {
        ordered_json z;
        z["re"] = fmt15(re[i]);
        z["im"] = fmt15(im[i]);
        arr.push_back(z);
    }
    return arr;
}

void emit(const ordered_json& j, const std::string& output) {
    if (output == "json") std::printf("%s\n", j.dump(2).c_str());
}

std::vector<std::string> expand_methods(const std::string& method) {
    if (method == "all") return {"closed", "ff", "mobius"};
    return {method};
}

// ---------------------------------------------------------------- commands

struct CommonOpts {
    std::string spec;
    std::string method = "closed";
    std::string output = "text";
    int threads = 0;
    double tol = 1e-8;
};

int cmd_chi(const CommonOpts& opt) {
    SpecPtr spec = parse_spec(opt.spec);
    ordered_json j;
    j["command"] = "chi";
    j["spec"] = opt.spec;
    ordered_json results = ordered_json::array();
    std::vector<ChiResult> rs;
    bool many = opt.method == "all";
    for (const auto& m : expand_methods(opt.method))
        rs.push_back(compute_chi(spec.get(), m, opt.threads, many));
    for (const auto& r : rs) {
        results.push_back(chi_json(r));
        if (opt.output == "text") {
            if (r.status == "ok")
                std::printf("%-7s %-40s coeffs=%s  chi=%s\n", r.method.c_str(),
                            r.provenance.c_str(), coeff_display(r.poly.get()).c_str(),
                            poly_display(r.poly.get()).c_str());
            else
                std::printf("%-7s %s (%s)\n", r.method.c_str(), r.status.c_str(),
                            r.reason.c_str());
        }
    }
    j["results"] = results;
    emit(j, opt.output);
    return kExitOk;
}

int cmd_roots(const CommonOpts& opt) {
    SpecPtr spec = parse_spec(opt.spec);
    ChiResult r = compute_chi(spec.get(), opt.method == "all" ? "closed" : opt.method,
                              opt.threads, false);
    ArrPtr arr(nullptr, arrcalc_arrangement_free);
    arrcalc_arrangement* rawarr = nullptr;
    check(arrcalc_build(spec.get(), &rawarr));
    arr.reset(rawarr);
    long h = arrcalc_arrangement_distinct(arr.get());
    int l = arrcalc_spec_rank(spec.get());

    int deg = arrcalc_poly_degree(r.poly.get());
    std::vector<double> re(deg), im(deg);
    int count = 0;
    check(arrcalc_poly_roots(r.poly.get(), re.data(), im.data(), deg, &count));
    re.resize(count);
    im.resize(count);

    ordered_json j;
    j["command"] = "roots";
    j["spec"] = opt.spec;
    j["chi"] = chi_json(r);
    j["h"] = h;
    j["l"] = l;
    j["target"] = fmt15(static_cast<double>(h) / l);
    j["roots"] = roots_json(re, im);
    if (opt.output == "text") {
        std::printf("chi = %s  (%s)\n", poly_display(r.poly.get()).c_str(),
                    r.provenance.c_str());
        std::printf("h = %ld, l = %d, h/l = %s\n", h, l,
                    fmt15(static_cast<double>(h) / l).c_str());
        for (int i = 0; i < count; ++i)
            std::printf("root %d: %s %s %si\n", i, fmt15(re[i]).c_str(),
                        im[i] < 0 ? "-" : "+", fmt15(std::fabs(im[i])).c_str());
    }
    emit(j, opt.output);
    return kExitOk;
}

int cmd_regions(const CommonOpts& opt) {
    SpecPtr spec = parse_spec(opt.spec);
    ChiResult r = compute_chi(spec.get(), opt.method == "all" ? "closed" : opt.method,
                              opt.threads, false);
    char* s = nullptr;
    check(arrcalc_regions(r.poly.get(), arrcalc_spec_dim(spec.get()), &s));
    std::string regions = take_string(s);
    ordered_json j;
    j["command"] = "regions";
    j["spec"] = opt.spec;
    j["chi"] = chi_json(r);
    j["regions"] = regions;
    if (opt.output == "text") std::printf("%s\n", regions.c_str());
    emit(j, opt.output);
    return kExitOk;
}

int cmd_verify(const CommonOpts& opt) {
    SpecPtr spec = parse_spec(opt.spec);
    std::vector<ChiResult> rs;
    for (const auto& m : expand_methods(opt.method))
        rs.push_back(compute_chi(spec.get(), m, opt.threads, opt.method == "all"));

    const arrcalc_poly* reference = nullptr;
    std::string ref_method;
    bool agree = true;
    for (const auto& r : rs) {
        if (r.status != "ok") continue;
        if (!reference) {
            reference = r.poly.get();
            ref_method = r.method;
        } else if (!arrcalc_poly_equal(reference, r.poly.get())) {
            agree = false;
        }
    }
    if (!reference) die(kExitMismatch, "no method could produce a polynomial");

    ordered_json j;
    j["command"] = "verify";
    j["spec"] = opt.spec;
    ordered_json results = ordered_json::array();
    for (const auto& r : rs) results.push_back(chi_json(r));
    j["results"] = results;
    j["agree"] = agree;
    if (opt.output == "text") {
        for (const auto& r : rs) {
            if (r.status == "ok")
                std::printf("%-7s %-40s %s\n", r.method.c_str(), r.provenance.c_str(),
                            poly_display(r.poly.get()).c_str());
            else
                std::printf("%-7s %s (%s)\n", r.method.c_str(), r.status.c_str(),
                            r.reason.c_str());
        }
        std::printf("agreement: %s\n", agree ? "yes" : "NO");
    }
    emit(j, opt.output);
    return agree ? kExitOk : kExitMismatch;
}

struct TableOpts {
    std::string families = "A,B,C,D,BC";
    int max_n = 4;
    int max_b = 3;
    std::string output = "text";
    int threads = 0;
    double tol = 1e-8;
};

int cmd_table(const TableOpts& opt) {
    std::vector<std::string> families;
    std::string cur;
    for (char c : opt.families + ",") {
        if (c == ',') {
            if (!cur.empty()) families.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }

    bool all_pass = true;
    ordered_json rows = ordered_json::array();
    if (opt.output == "csv" || opt.output == "text")
        std::printf("family,n,lo,hi,h,l,chi_coeffs,regions,max_re_dev,pass\n");

    for (const auto& fam : families) {
        int n_min = (fam == "A" || fam == "D") ? 2 : 1;
        for (int n = n_min; n <= opt.max_n; ++n) {
            for (long b = 0; b <= opt.max_b; ++b) {
                for (long a = 0; a <= b; ++a) {
                    if (a == 0 && b == 0) continue;
                    arrcalc_riemann* raw = nullptr;
                    check(arrcalc_verify_riemann(fam.c_str(), n, a, b, opt.tol, opt.threads,
                                                 &raw));
                    RiemannPtr rep(raw, arrcalc_riemann_free);
                    arrcalc_poly* rawchi = nullptr;
                    check(arrcalc_riemann_chi(rep.get(), 0, &rawchi));
                    PolyPtr chi(rawchi, arrcalc_poly_free);
                    char* s = nullptr;
                    check(arrcalc_regions(chi.get(), n, &s));
                    std::string regions = take_string(s);
                    bool pass = arrcalc_riemann_pass(rep.get()) != 0;
                    all_pass = all_pass && pass;

                    std::vector<std::string> coeffs = coeff_strings(chi.get());
                    std::string joined;
                    for (size_t i = 0; i < coeffs.size(); ++i) {
                        if (i) joined += ";";
                        joined += coeffs[i];
                    }
                    long lo = -a + 1, hi = b;
                    if (opt.output == "csv" || opt.output == "text") {
                        std::printf("%s,%d,%ld,%ld,%ld,%d,%s,%s,%s,%s\n", fam.c_str(), n, lo,
                                    hi, arrcalc_riemann_hyperplanes(rep.get()),
                                    arrcalc_riemann_rank(rep.get()), joined.c_str(),
                                    regions.c_str(),
                                    fmt_dev(arrcalc_riemann_deviation(rep.get())).c_str(),
                                    pass ? "true" : "false");
                    } else {
                        ordered_json row;
                        row["family"] = fam;
                        row["n"] = n;
                        row["lo"] = lo;
                        row["hi"] = hi;
                        row["h"] = arrcalc_riemann_hyperplanes(rep.get());
                        row["l"] = arrcalc_riemann_rank(rep.get());
                        row["chi_coeffs"] = coeffs;
                        row["regions"] = regions;
                        row["max_re_dev"] = fmt_dev(arrcalc_riemann_deviation(rep.get()));
                        row["pass"] = pass;
                        rows.push_back(row);
                    }
                }
            }
        }
    }
    if (opt.output == "json") {
        ordered_json j;
        j["command"] = "table";
        j["rows"] = rows;
        j["all_pass"] = all_pass;
        std::printf("%s\n", j.dump(2).c_str());
    }
    return all_pass ? kExitOk : kExitMismatch;
}

void add_common(CLI::App* cmd, CommonOpts& opt, bool with_method = true) {
    cmd->add_option("--spec", opt.spec, "family spec, FAMILY:n:lo:hi or FAMILY:n:a")
        ->required();
    if (with_method)
        cmd->add_option("--method", opt.method, "closed, ff, mobius or all")
            ->check(CLI::IsMember({"closed", "ff", "mobius", "all"}));
    cmd->add_option("--threads", opt.threads, "worker threads (0 = hardware)");
    cmd->add_option("--tol", opt.tol, "numeric tolerance");
    cmd->add_option("--output", opt.output, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact characteristic polynomials of deformed reflection arrangements"};
    app.require_subcommand(1);

    CommonOpts chi_opt, roots_opt, regions_opt, verify_opt;
    TableOpts table_opt;

    CLI::App* chi = app.add_subcommand("chi", "characteristic polynomial of one arrangement");
    add_common(chi, chi_opt);
    CLI::App* roots = app.add_subcommand("roots", "chi plus its complex roots and h, l, h/l");
    add_common(roots, roots_opt);
    CLI::App* regions = app.add_subcommand("regions", "number of regions, (-1)^n chi(-1)");
    add_common(regions, regions_opt);
    CLI::App* verify =
        app.add_subcommand("verify", "compare chi across methods; nonzero exit on mismatch");
    add_common(verify, verify_opt);
    verify_opt.method = "all";

    CLI::App* table = app.add_subcommand("table", "sweep a grid and verify the root property");
    table->add_option("--families", table_opt.families, "comma-separated family list");
    table->add_option("--max-n", table_opt.max_n, "largest dimension");
    table->add_option("--max-b", table_opt.max_b, "largest interval endpoint");
    table->add_option("--threads", table_opt.threads, "worker threads (0 = hardware)");
    table->add_option("--tol", table_opt.tol, "real-part tolerance");
    table->add_option("--output", table_opt.output, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (chi->parsed()) return cmd_chi(chi_opt);
        if (roots->parsed()) return cmd_roots(roots_opt);
        if (regions->parsed()) return cmd_regions(regions_opt);
        if (verify->parsed()) return cmd_verify(verify_opt);
        if (table->parsed()) return cmd_table(table_opt);
    } catch (const CliError& e) {
        std::fprintf(stderr, "error: %s\n", e.message.c_str());
        return e.exit_code;
    }
    return kExitUsage;
}
