#include "arak/numtheory.hpp"

#include <algorithm>
#include <map>

#include "arak/error.hpp"

namespace arak {

mpz_class isqrt(const mpz_class& n) {
    if (sgn(n) < 0) throw Error(ErrorCode::OutOfRange, "isqrt of a negative integer");
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_perfect_square(const mpz_class& n) {
    return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

mpz_class floor_q(const mpq_class& x) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

mpz_class ceil_q(const mpq_class& x) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

mpz_class round_q(const mpq_class& x) { return floor_q(x + mpq_class(1, 2)); }

mpz_class floor_sqrt_q(const mpq_class& r) {
    if (sgn(r) < 0) throw Error(ErrorCode::OutOfRange, "square root of a negative rational");
    // floor(sqrt(n/m)) = floor(floor(sqrt(n*m)) / m)
    mpz_class nm = r.get_num() * r.get_den();
    mpz_class s = isqrt(nm);
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), s.get_mpz_t(), r.get_den_mpz_t());
    return q;
}

namespace {

bool miller_rabin_round(const mpz_class& n, const mpz_class& base, const mpz_class& odd,
                        unsigned twos) {
    mpz_class x;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), odd.get_mpz_t(), n.get_mpz_t());
    const mpz_class nm1 = n - 1;
    if (x == 1 || x == nm1) return true;
    for (unsigned i = 1; i < twos; ++i) {
        x = (x * x) % n;
        if (x == nm1) return true;
    }
    return false;
}

} // namespace

bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    static constexpr unsigned small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (unsigned p : small) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > 64) return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
    mpz_class odd = n - 1;
    unsigned twos = 0;
    while (mpz_even_p(odd.get_mpz_t())) {
        odd >>= 1;
        ++twos;
    }
    // These twelve bases are deterministic for n < 3.3 * 10^24.
    for (unsigned p : small) {
        if (!miller_rabin_round(n, mpz_class(p), odd, twos)) return false;
    }
    return true;
}

std::string_view to_string(Squarefree s) {
    switch (s) {
    case Squarefree::Yes: return "yes";
    case Squarefree::No: return "no";
    case Squarefree::Unknown: return "unknown";
    }
    return "unknown";
}

namespace {

// Brent's variant; returns 0 when the budget is exhausted.
mpz_class pollard_brent(const mpz_class& n, std::uint64_t budget, unsigned long c) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    mpz_class y = 2, x, ys, q = 1, g = 1, t;
    const std::uint64_t m = 128;
    std::uint64_t r = 1, spent = 0;
    auto f = [&](const mpz_class& v) -> mpz_class { return (v * v + c) % n; };
    while (g == 1) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) y = f(y);
        std::uint64_t k = 0;
        while (k < r && g == 1) {
            ys = y;
            const std::uint64_t lim = std::min(m, r - k);
            for (std::uint64_t i = 0; i < lim; ++i) {
                y = f(y);
                t = abs(x - y);
                q = (q * t) % n;
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += lim;
            spent += lim;
            if (spent > budget) return 0;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = f(ys);
            t = abs(x - ys);
            mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    return g == n ? mpz_class(0) : g;
}

} // namespace

Factorization factor(const mpz_class& input, const FactorEffort& effort) {
    Factorization out;
    std::map<mpz_class, unsigned> primes;
    mpz_class n = abs(input);
    if (n == 0) {
        out.status = Squarefree::No;
        return out;
    }
    for (std::uint64_t p = 2; p <= effort.trial_bound && p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            n /= p;
            ++primes[mpz_class(p)];
        }
    }
    std::vector<mpz_class> pending;
    if (n > 1) pending.push_back(n);
    const mpz_class bound = effort.trial_bound;
    while (!pending.empty()) {
        mpz_class m = pending.back();
        pending.pop_back();
        if (is_prime(m)) {
            ++primes[m];
            continue;
        }
        if (is_perfect_square(m)) {
            mpz_class s = isqrt(m);
            pending.push_back(s);
            pending.push_back(s);
            continue;
        }
        mpz_class g = 0;
        for (unsigned long c = 1; c <= 3 && g == 0; ++c) g = pollard_brent(m, effort.rho_iterations, c);
        if (g == 0) {
            out.unfactored.push_back(m);
            continue;
        }
        pending.push_back(g);
        pending.push_back(m / g);
    }
    for (auto& [p, e] : primes) out.primes.emplace_back(p, e);
    const bool repeated = std::any_of(out.primes.begin(), out.primes.end(),
                                      [](const auto& pe) { return pe.second > 1; });
    bool shared = false;
    for (const auto& u : out.unfactored) {
        for (const auto& [p, e] : out.primes) {
            if (mpz_divisible_p(u.get_mpz_t(), p.get_mpz_t())) shared = true;
        }
    }
    if (repeated || shared) {
        out.status = Squarefree::No;
    } else if (out.unfactored.empty()) {
        out.status = Squarefree::Yes;
    } else {
        const mpz_class cube = bound * bound * bound;
        const bool all_small = std::all_of(out.unfactored.begin(), out.unfactored.end(),
                                           [&](const mpz_class& u) { return u < cube; });
        bool coprime = true;
        for (std::size_t i = 0; i < out.unfactored.size(); ++i) {
            for (std::size_t j = i + 1; j < out.unfactored.size(); ++j) {
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), out.unfactored[i].get_mpz_t(), out.unfactored[j].get_mpz_t());
                if (g != 1) coprime = false;
            }
        }
        out.status = (all_small && coprime) ? Squarefree::Yes : Squarefree::Unknown;
        if (!coprime) out.status = Squarefree::No;
    }
    return out;
}

bool is_squarefree_u64(std::uint64_t n) {
    if (n == 0) return false;
    for (std::uint64_t p = 2; p * p <= n && p <= 1'000'000; ++p) {
        if (n % (p * p) == 0) return false;
        if (n % p == 0) n /= p;
    }
    if (n < 1'000'000ULL * 1'000'000ULL) return true;
    return factor(mpz_class(std::to_string(n))).status == Squarefree::Yes;
}

mpq_class parse_rational(std::string_view text) {
    std::string s(text);
    auto valid_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        return std::all_of(t.begin() + static_cast<long>(i), t.end(),
                           [](char ch) { return ch >= '0' && ch <= '9'; });
    };
    auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
    const auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) {
        throw Error(ErrorCode::InputError, "malformed rational '" + s + "'");
    }
    mpz_class n(strip_plus(num)), d(strip_plus(den));
    if (d == 0) throw Error(ErrorCode::InputError, "zero denominator in '" + s + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return q;
}

std::string rational_string(const mpq_class& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace arak
