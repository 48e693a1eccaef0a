#include "arrcalc/family.hpp"

#include <numeric>
#include <set>
#include <sstream>

#include "arrcalc/error.hpp"

namespace arrcalc {

const char* family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::BC: return "BC";
        case Family::DQ: return "DQ";
        case Family::S62: return "S62";
        case Family::S63: return "S63";
    }
    return "?";
}

bool family_is_special(Family f) { return f == Family::S62 || f == Family::S63; }

Family family_from_name(const std::string& s) {
    if (s == "A") return Family::A;
    if (s == "B") return Family::B;
    if (s == "C") return Family::C;
    if (s == "D") return Family::D;
    if (s == "BC") return Family::BC;
    if (s == "DQ") return Family::DQ;
    if (s == "S62" || s == "SPECIAL62") return Family::S62;
    if (s == "S63" || s == "SPECIAL63") return Family::S63;
    fail(errc::parse_error, "unknown family '" + s + "'");
}

namespace {

long parse_long(const std::string& s) {
    size_t pos = 0;
    long v;
    try {
        v = std::stol(s, &pos);
    } catch (const std::exception&) {
        fail(errc::parse_error, "bad integer '" + s + "'");
    }
    require(pos == s.size(), errc::parse_error, "bad integer '" + s + "'");
    return v;
}

void validate(const FamilySpec& spec) {
    require(spec.n >= 1, errc::invalid_argument, "dimension must be positive");
    switch (spec.family) {
        case Family::A:
            require(spec.n >= 2, errc::invalid_argument, "family A requires n >= 2");
            break;
        case Family::D:
        case Family::DQ:
            require(spec.n >= 2, errc::invalid_argument, "family D requires n >= 2");
            break;
        case Family::S62:
        case Family::S63:
            require(spec.lo == spec.hi && spec.lo >= 1, errc::invalid_argument,
                    "special arrangements take one parameter a >= 1");
            break;
        default:
            break;
    }
}

}  // namespace

FamilySpec parse_spec(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    require(parts.size() >= 2, errc::parse_error,
            "spec must look like FAMILY:n:lo:hi or FAMILY:n:a, got '" + text + "'");
    FamilySpec spec;
    spec.family = family_from_name(parts[0]);
    spec.n = static_cast<int>(parse_long(parts[1]));
    if (family_is_special(spec.family)) {
        require(parts.size() == 3, errc::parse_error,
                "special arrangements take FAMILY:n:a, got '" + text + "'");
        spec.lo = spec.hi = parse_long(parts[2]);
    } else {
        require(parts.size() == 4, errc::parse_error,
                "spec must look like FAMILY:n:lo:hi, got '" + text + "'");
        spec.lo = parse_long(parts[2]);
        spec.hi = parse_long(parts[3]);
    }
    validate(spec);
    return spec;
}

std::string format_spec(const FamilySpec& spec) {
    std::ostringstream out;
    out << family_name(spec.family) << ":" << spec.n;
    if (family_is_special(spec.family))
        out << ":" << spec.lo;
    else
        out << ":" << spec.lo << ":" << spec.hi;
    return out.str();
}

namespace {

void add_single(Arrangement& arr, int i, long coeff, long k) {
    Hyperplane h;
    h.normal.assign(arr.dim, 0);
    h.normal[i] = coeff;
    h.offset = k;
    arr.hyperplanes.push_back(std::move(h));
}

void add_pair(Arrangement& arr, int i, int j, long cj, long k) {
    Hyperplane h;
    h.normal.assign(arr.dim, 0);
    h.normal[i] = 1;
    h.normal[j] = cj;
    h.offset = k;
    arr.hyperplanes.push_back(std::move(h));
}

}  // namespace

Arrangement build(const FamilySpec& spec) {
    validate(spec);
    Arrangement arr;
    arr.dim = spec.n;
    arr.modulus = (spec.family == Family::A) ? 1 : 2;
    arr.label = format_spec(spec);
    const int n = spec.n;

    if (family_is_special(spec.family)) {
        const long a = spec.lo;
        if (spec.family == Family::S62) {
            for (int i = 0; i < n; ++i)
                for (long k = 0; k <= a; ++k) add_single(arr, i, 1, k);
            for (int i = 0; i < n; ++i)
                for (long k = 1; k <= 2 * a - 1; k += 2) add_single(arr, i, 2, k);
        } else {
            for (int i = 0; i < n; ++i)
                for (long k = 1; k <= 2 * a - 1; ++k) add_single(arr, i, 2, k);
        }
        const long plo = (spec.family == Family::S62) ? 0 : 1;
        const long phi = (spec.family == Family::S62) ? a : a - 1;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (long k = plo; k <= phi; ++k) add_pair(arr, i, j, -1, k);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (long k = plo; k <= phi; ++k) add_pair(arr, i, j, +1, k);
        return arr;
    }

    if (spec.lo > spec.hi) return arr;  // empty interval, empty arrangement

    const bool has_xi = spec.family == Family::B || spec.family == Family::BC;
    const bool has_2xi = spec.family == Family::C || spec.family == Family::BC;
    const bool has_diff = true;
    const bool has_sum = spec.family != Family::A;

    if (has_xi)
        for (int i = 0; i < n; ++i)
            for (long k = spec.lo; k <= spec.hi; ++k) add_single(arr, i, 1, k);
    if (spec.family == Family::DQ)
        for (int i = 0; i < n; ++i) add_single(arr, i, 1, 0);
    if (has_2xi)
        for (int i = 0; i < n; ++i)
            for (long k = spec.lo; k <= spec.hi; ++k) add_single(arr, i, 2, k);
    if (has_diff)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (long k = spec.lo; k <= spec.hi; ++k) add_pair(arr, i, j, -1, k);
    if (has_sum)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (long k = spec.lo; k <= spec.hi; ++k) add_pair(arr, i, j, +1, k);
    return arr;
}

CanonicalHyperplane canonical_form(const Hyperplane& h) {
    long g = 0;
    for (long v : h.normal) g = std::gcd(g, v);
    require(g != 0, errc::invalid_argument, "hyperplane normal must be nonzero");
    long sign = 0;
    for (long v : h.normal) {
        if (v != 0) {
            sign = v > 0 ? 1 : -1;
            break;
        }
    }
    CanonicalHyperplane c;
    c.normal.reserve(h.normal.size());
    for (long v : h.normal) c.normal.push_back(v / g * sign);
    c.offset = Rat(Int(h.offset) * sign, Int(g));
    c.offset.canonicalize();
    return c;
}

std::size_t dedup_count(const Arrangement& arr) {
    std::set<std::pair<std::vector<long>, Rat>> keys;
    for (const auto& h : arr.hyperplanes) {
        CanonicalHyperplane c = canonical_form(h);
        keys.emplace(std::move(c.normal), std::move(c.offset));
    }
    return keys.size();
}

int rank_of(const FamilySpec& spec) {
    return spec.family == Family::A ? spec.n - 1 : spec.n;
}

FamilySpec reflect(const FamilySpec& spec) {
    require(!family_is_special(spec.family), errc::invalid_argument,
            "reflect applies to interval families only");
    FamilySpec out = spec;
    out.lo = -spec.hi;
    out.hi = -spec.lo;
    return out;
}

}  // namespace arrcalc
