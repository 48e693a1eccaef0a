#include "arrcalc.h"

#include <cstring>
#include <string>

#include "arrcalc/analysis.hpp"
#include "arrcalc/error.hpp"
#include "arrcalc/family.hpp"
#include "arrcalc/ffcount.hpp"
#include "arrcalc/formulas.hpp"
#include "arrcalc/poset.hpp"

using namespace arrcalc;

struct arrcalc_spec {
    FamilySpec spec;
};
struct arrcalc_arrangement {
    Arrangement arr;
};
struct arrcalc_poly {
    IntPoly poly;
};
struct arrcalc_riemann {
    RiemannReport report;
};

namespace {

thread_local std::string g_last_error;

arrcalc_status map_code(errc code) {
    switch (code) {
        case errc::invalid_argument: return ARRCALC_ERR_INVALID;
        case errc::unsupported: return ARRCALC_ERR_UNSUPPORTED;
        case errc::guard_refused: return ARRCALC_ERR_GUARD;
        case errc::assertion_failed: return ARRCALC_ERR_ASSERT;
        case errc::no_convergence: return ARRCALC_ERR_NOCONV;
        case errc::parse_error: return ARRCALC_ERR_PARSE;
    }
    return ARRCALC_ERR_INTERNAL;
}

template <typename Fn>
arrcalc_status guarded(Fn&& fn) {
    try {
        fn();
        return ARRCALC_OK;
    } catch (const error& e) {
        g_last_error = e.what();
        return map_code(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return ARRCALC_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return ARRCALC_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

Family family_from_string(const char* name) { return family_from_name(name); }

arrcalc_status copy_roots(const std::vector<std::complex<double>>& roots, double* re,
                          double* im, int capacity, int* count_out) {
    return guarded([&] {
        require(count_out != nullptr, errc::invalid_argument, "count_out is required");
        *count_out = static_cast<int>(roots.size());
        if (roots.empty()) return;
        require(re != nullptr && im != nullptr, errc::invalid_argument,
                "output buffers are required");
        require(capacity >= static_cast<int>(roots.size()), errc::invalid_argument,
                "buffer too small for the root list");
        for (size_t i = 0; i < roots.size(); ++i) {
            re[i] = roots[i].real();
            im[i] = roots[i].imag();
        }
    });
}

}  // namespace

extern "C" {

const char* arrcalc_version(void) { return "1.0.0"; }

const char* arrcalc_last_error(void) { return g_last_error.c_str(); }

void arrcalc_string_free(char* s) { std::free(s); }

arrcalc_status arrcalc_spec_parse(const char* text, arrcalc_spec** out) {
    return guarded([&] {
        require(text != nullptr && out != nullptr, errc::invalid_argument, "null argument");
        *out = new arrcalc_spec{parse_spec(text)};
    });
}

void arrcalc_spec_free(arrcalc_spec* spec) { delete spec; }

arrcalc_status arrcalc_spec_format(const arrcalc_spec* spec, char** out) {
    return guarded([&] {
        require(spec != nullptr && out != nullptr, errc::invalid_argument, "null argument");
        *out = dup_string(format_spec(spec->spec));
    });
}

int arrcalc_spec_dim(const arrcalc_spec* spec) { return spec ? spec->spec.n : 0; }

int arrcalc_spec_rank(const arrcalc_spec* spec) {
    return spec ? rank_of(spec->spec) : 0;
}

arrcalc_status arrcalc_spec_reflect(const arrcalc_spec* spec, arrcalc_spec** out) {
    return guarded([&] {
        require(spec != nullptr && out != nullptr, errc::invalid_argument, "null argument");
        *out = new arrcalc_spec{reflect(spec->spec)};
    });
}

arrcalc_status arrcalc_build(const arrcalc_spec* spec, arrcalc_arrangement** out) {
    return guarded([&] {
        require(spec != nullptr && out != nullptr, errc::invalid_argument, "null argument");
        *out = new arrcalc_arrangement{build(spec->spec)};
    });
}

void arrcalc_arrangement_free(arrcalc_arrangement* arr) { delete arr; }

int arrcalc_arrangement_dim(const arrcalc_arrangement* arr) { return arr ? arr->arr.dim : 0; }

long arrcalc_arrangement_size(const arrcalc_arrangement* arr) {
    return arr ? static_cast<long>(arr->arr.hyperplanes.size()) : 0;
}

long arrcalc_arrangement_distinct(const arrcalc_arrangement* arr) {
    return arr ? static_cast<long>(dedup_count(arr->arr)) : 0;
}

int arrcalc_arrangement_modulus(const arrcalc_arrangement* arr) {
    return arr ? arr->arr.modulus : 0;
}

arrcalc_status arrcalc_count_points(const arrcalc_arrangement* arr, long q, int threads,
                                    char** count_out) {
    return guarded([&] {
        require(arr != nullptr && count_out != nullptr, errc::invalid_argument,
                "null argument");
        *count_out = dup_string(count_complement(arr->arr, q, threads).get_str());
    });
}

arrcalc_status arrcalc_chi(const arrcalc_spec* spec, const char* method, int threads,
                           arrcalc_poly** out, char** provenance_out) {
    return guarded([&] {
        require(spec != nullptr && method != nullptr && out != nullptr,
                errc::invalid_argument, "null argument");
        std::string m = method;
        IntPoly chi;
        std::string provenance;
        if (m == "closed") {
            FormulaResult r;
            if (spec->spec.family == Family::S62)
                r = chi_special62(spec->spec.n, spec->spec.lo);
            else if (spec->spec.family == Family::S63)
                r = chi_special63(spec->spec.n, spec->spec.lo);
            else
                r = chi_interval(spec->spec, threads);
            chi = std::move(r.chi);
            provenance = std::move(r.provenance);
        } else if (m == "ff") {
            chi = chi_interpolated(build(spec->spec), threads);
            provenance = "ff";
        } else if (m == "mobius") {
            chi = chi_mobius(build(spec->spec));
            provenance = "mobius";
        } else {
            fail(errc::invalid_argument, "method must be closed, ff or mobius");
        }
        *out = new arrcalc_poly{std::move(chi)};
        if (provenance_out) *provenance_out = dup_string(provenance);
    });
}

void arrcalc_poly_free(arrcalc_poly* p) { delete p; }

int arrcalc_poly_degree(const arrcalc_poly* p) { return p ? p->poly.degree() : -1; }

arrcalc_status arrcalc_poly_coeff(const arrcalc_poly* p, int k, char** decimal_out) {
    return guarded([&] {
        require(p != nullptr && decimal_out != nullptr, errc::invalid_argument,
                "null argument");
        *decimal_out = dup_string(p->poly[k].get_str());
    });
}

int arrcalc_poly_equal(const arrcalc_poly* p, const arrcalc_poly* q) {
    if (!p || !q) return 0;
    return p->poly == q->poly ? 1 : 0;
}

arrcalc_status arrcalc_poly_to_string(const arrcalc_poly* p, char** out) {
    return guarded([&] {
        require(p != nullptr && out != nullptr, errc::invalid_argument, "null argument");
        *out = dup_string(p->poly.to_string());
    });
}

arrcalc_status arrcalc_poly_eval(const arrcalc_poly* p, const char* x_decimal,
                                 char** value_out) {
    return guarded([&] {
        require(p != nullptr && x_decimal != nullptr && value_out != nullptr,
                errc::invalid_argument, "null argument");
        Int x;
        require(x.set_str(x_decimal, 10) == 0, errc::parse_error,
                std::string("bad integer '") + x_decimal + "'");
        *value_out = dup_string(p->poly.eval(x).get_str());
    });
}

arrcalc_status arrcalc_poly_roots(const arrcalc_poly* p, double* re, double* im,
                                  int capacity, int* count_out) {
    if (!p) {
        g_last_error = "null argument";
        return ARRCALC_ERR_INVALID;
    }
    try {
        return copy_roots(poly_roots(p->poly), re, im, capacity, count_out);
    } catch (const error& e) {
        g_last_error = e.what();
        return map_code(e.code());
    }
}

arrcalc_status arrcalc_regions(const arrcalc_poly* chi, int dim, char** count_out) {
    return guarded([&] {
        require(chi != nullptr && count_out != nullptr, errc::invalid_argument,
                "null argument");
        *count_out = dup_string(region_count(chi->poly, dim).get_str());
    });
}

arrcalc_status arrcalc_linial_regions(const char* family, int n, char** count_out) {
    return guarded([&] {
        require(family != nullptr && count_out != nullptr, errc::invalid_argument,
                "null argument");
        *count_out = dup_string(linial_regions_closed(family_from_string(family), n).get_str());
    });
}

arrcalc_status arrcalc_verify_riemann(const char* family, int n, long a, long b, double tol,
                                      int threads, arrcalc_riemann** out) {
    return guarded([&] {
        require(family != nullptr && out != nullptr, errc::invalid_argument, "null argument");
        RiemannReport rep = verify_riemann(family_from_string(family), n, a, b, tol, threads);
        *out = new arrcalc_riemann{std::move(rep)};
    });
}

void arrcalc_riemann_free(arrcalc_riemann* rep) { delete rep; }

long arrcalc_riemann_hyperplanes(const arrcalc_riemann* rep) {
    return rep ? rep->report.h : 0;
}

int arrcalc_riemann_rank(const arrcalc_riemann* rep) { return rep ? rep->report.l : 0; }

double arrcalc_riemann_target(const arrcalc_riemann* rep) {
    return rep ? rep->report.target.get_d() : 0.0;
}

double arrcalc_riemann_deviation(const arrcalc_riemann* rep) {
    return rep ? rep->report.max_re_deviation : 0.0;
}

int arrcalc_riemann_pass(const arrcalc_riemann* rep) {
    return rep && rep->report.pass ? 1 : 0;
}

arrcalc_status arrcalc_riemann_roots(const arrcalc_riemann* rep, double* re, double* im,
                                     int capacity, int* count_out) {
    if (!rep) {
        g_last_error = "null argument";
        return ARRCALC_ERR_INVALID;
    }
    return copy_roots(rep->report.roots, re, im, capacity, count_out);
}

arrcalc_status arrcalc_riemann_chi(const arrcalc_riemann* rep, int essential,
                                   arrcalc_poly** out) {
    return guarded([&] {
        require(rep != nullptr && out != nullptr, errc::invalid_argument, "null argument");
        *out = new arrcalc_poly{essential ? rep->report.chi_essential : rep->report.chi};
    });
}

}  // extern "C"
