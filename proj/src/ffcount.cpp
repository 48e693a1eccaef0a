#include "arrcalc/ffcount.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <thread>

#include "arrcalc/error.hpp"

namespace arrcalc {

namespace {

long mod_reduce(long v, long q) {
    long r = v % q;
    return r < 0 ? r + q : r;
}

// x with a*x = 1 (mod m), for gcd(a, m) = 1.
long mod_inverse(long a, long m) {
    long old_r = a, r = m, old_s = 1, s = 0;
    while (r != 0) {
        long quot = old_r / r;
        long tmp = old_r - quot * r;
        old_r = r;
        r = tmp;
        tmp = old_s - quot * s;
        old_s = s;
        s = tmp;
    }
    return mod_reduce(old_s, m);
}

// One hyperplane compiled against a fixed q. `prior` lists the coordinates
// (all below `target`) whose assigned values feed the right-hand side; the
// forbidden residues of `target` solve tcoeff * x = rhs - sum (mod q).
struct Constraint {
    int target = 0;
    long tcoeff = 0;
    long rhs = 0;
    std::vector<std::pair<int, long>> prior;
    // solution structure of tcoeff * x = r: gcd d, step q/d, inverse of
    // tcoeff/d modulo q/d
    long d = 1;
    long step = 0;
    long inv = 1;
};

struct Compiled {
    long q = 0;
    int n = 0;
    bool covered = false;                          // some equation holds identically
    std::vector<Constraint> unary;                 // applied before the search
    std::vector<std::vector<Constraint>> trigger;  // by depth of last prior coordinate
};

Compiled compile(const Arrangement& arr, long q) {
    Compiled cc;
    cc.q = q;
    cc.n = arr.dim;
    cc.trigger.assign(arr.dim, {});
    for (const auto& h : arr.hyperplanes) {
        Constraint c;
        c.rhs = mod_reduce(h.offset, q);
        int target = -1;
        for (int i = 0; i < arr.dim; ++i) {
            long r = mod_reduce(h.normal[i], q);
            if (r == 0) continue;
            if (target >= 0) c.prior.emplace_back(target, c.tcoeff);
            target = i;
            c.tcoeff = r;
        }
        if (target < 0) {
            if (c.rhs == 0) cc.covered = true;  // 0 = 0 covers every point
            continue;                           // 0 = nonzero holds nowhere
        }
        c.target = target;
        c.d = std::gcd(c.tcoeff, q);
        c.step = q / c.d;
        c.inv = mod_inverse(c.tcoeff / c.d, c.step);
        if (c.prior.empty())
            cc.unary.push_back(std::move(c));
        else
            cc.trigger[c.prior.back().first].push_back(std::move(c));
    }
    return cc;
}

class ResidueSet {
public:
    void init(long q) {
        bits_.assign((q + 63) / 64, 0);
        count_ = 0;
    }
    bool test(long v) const { return (bits_[v >> 6] >> (v & 63)) & 1; }
    // true if the bit was newly set
    bool mark(long v) {
        uint64_t m = uint64_t(1) << (v & 63);
        if (bits_[v >> 6] & m) return false;
        bits_[v >> 6] |= m;
        ++count_;
        return true;
    }
    void unmark(long v) {
        bits_[v >> 6] &= ~(uint64_t(1) << (v & 63));
        --count_;
    }
    long count() const { return count_; }

private:
    std::vector<uint64_t> bits_;
    long count_ = 0;
};

class Searcher {
public:
    explicit Searcher(const Compiled& cc) : cc_(cc), q_(cc.q) {
        forbidden_.resize(cc.n);
        for (auto& f : forbidden_) f.init(q_);
        assigned_.assign(cc.n, 0);
        for (const auto& c : cc.unary) forbid(c, c.rhs);
    }

    // count solutions with the first coordinate restricted to [lo, hi)
    unsigned long long run(long lo, long hi) {
        total_ = 0;
        if (cc_.n == 1) {
            for (long v = lo; v < hi; ++v)
                if (!forbidden_[0].test(v)) ++total_;
            return total_;
        }
        for (long v = lo; v < hi; ++v) {
            if (forbidden_[0].test(v)) continue;
            size_t mark = journal_.size();
            assigned_[0] = v;
            apply(0);
            dfs(1);
            rollback(mark);
        }
        return total_;
    }

private:
    void forbid(const Constraint& c, long rhs) {
        if (rhs % c.d != 0) return;  // no residue satisfies the equation
        long x0 = mod_reduce(c.inv * (rhs / c.d), c.step);
        for (long t = 0; t < c.d; ++t) {
            long v = x0 + t * c.step;
            if (forbidden_[c.target].mark(v))
                journal_.emplace_back(c.target, v);
        }
    }

    void apply(int depth) {
        for (const auto& c : cc_.trigger[depth]) {
            long rhs = c.rhs;
            for (const auto& [idx, coef] : c.prior) rhs -= coef * assigned_[idx] % q_;
            forbid(c, mod_reduce(rhs, q_));
        }
    }

    void rollback(size_t mark) {
        while (journal_.size() > mark) {
            auto [tgt, v] = journal_.back();
            journal_.pop_back();
            forbidden_[tgt].unmark(v);
        }
    }

    void dfs(int depth) {
        if (depth == cc_.n - 1) {
            total_ += static_cast<unsigned long long>(q_ - forbidden_[depth].count());
            return;
        }
        const ResidueSet& fb = forbidden_[depth];
        for (long v = 0; v < q_; ++v) {
            if (fb.test(v)) continue;
            size_t mark = journal_.size();
            assigned_[depth] = v;
            apply(depth);
            dfs(depth + 1);
            rollback(mark);
        }
    }

    const Compiled& cc_;
    long q_;
    std::vector<ResidueSet> forbidden_;
    std::vector<long> assigned_;
    std::vector<std::pair<int, long>> journal_;
    unsigned long long total_ = 0;
};

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

}  // namespace

SamplePlan make_plan(const Arrangement& arr, int degree) {
    require(degree >= 0, errc::invalid_argument, "degree must be nonnegative");
    long max_offset = 0;
    for (const auto& h : arr.hyperplanes) max_offset = std::max(max_offset, std::labs(h.offset));
    SamplePlan plan;
    plan.modulus = arr.modulus;
    plan.q_min = 2L * (arr.dim + 1) * (max_offset + 1) + 1;
    long q = plan.q_min;
    while (static_cast<int>(plan.samples.size()) < degree + 2) {
        ++q;
        if (arr.modulus > 1 && std::gcd(q, static_cast<long>(arr.modulus)) != 1) continue;
        plan.samples.push_back(q);
    }
    return plan;
}

Int count_complement(const Arrangement& arr, long q, int threads) {
    require(q >= 1, errc::invalid_argument, "q must be positive");
    require(std::gcd(q, static_cast<long>(arr.modulus)) == 1, errc::invalid_argument,
            "q must be coprime to the arrangement's modulus class");
    Int bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(q),
                  static_cast<unsigned long>(arr.dim));
    require(mpz_sizeinbase(bound.get_mpz_t(), 2) <= 62, errc::guard_refused,
            "q^n too large to enumerate");

    Compiled cc = compile(arr, q);
    if (cc.covered) return 0;

    int nthreads = std::min<long>(resolve_threads(threads), q);
    if (nthreads <= 1 || arr.dim == 1) {
        Searcher s(cc);
        return Int(static_cast<unsigned long>(s.run(0, q)));
    }

    long nchunks = std::min<long>(q, static_cast<long>(nthreads) * 4);
    std::vector<unsigned long long> partial(nchunks, 0);
    std::atomic<long> next{0};
    auto worker = [&]() {
        Searcher s(cc);
        for (;;) {
            long idx = next.fetch_add(1);
            if (idx >= nchunks) break;
            long lo = q * idx / nchunks;
            long hi = q * (idx + 1) / nchunks;
            partial[idx] = s.run(lo, hi);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    Int total = 0;
    for (auto v : partial) total += Int(static_cast<unsigned long>(v));
    return total;
}

IntPoly chi_interpolated(const Arrangement& arr, int threads) {
    const int n = arr.dim;
    SamplePlan plan = make_plan(arr, n);
    for (int attempt = 0;; ++attempt) {
        try {
            std::vector<std::pair<long, Int>> points;
            points.reserve(plan.samples.size());
            for (long q : plan.samples) points.emplace_back(q, count_complement(arr, q, threads));
            IntPoly chi = lagrange_interpolate(points, n);
            require(chi.degree() == n, errc::assertion_failed,
                    "characteristic polynomial must have degree n");
            require(chi.leading() == 1, errc::assertion_failed,
                    "characteristic polynomial must be monic");
            return chi;
        } catch (const error& e) {
            if (e.code() != errc::assertion_failed || attempt >= 1)
                throw error(e.code(), std::string("sampling regime violated for ") + arr.label +
                                           ": " + e.what());
            // one retry from a larger bound
            long q_min = plan.q_min * 2 + 1;
            plan.q_min = q_min;
            plan.samples.clear();
            long q = q_min;
            while (static_cast<int>(plan.samples.size()) < n + 2) {
                ++q;
                if (arr.modulus > 1 && std::gcd(q, static_cast<long>(arr.modulus)) != 1) continue;
                plan.samples.push_back(q);
            }
        }
    }
}

}  // namespace arrcalc
