#include "benz/finite_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace benz {

namespace {

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t i = 2; i * i <= n; ++i)
        if (n % i == 0) return false;
    return true;
}

// q = p^d with p prime, or fail
bool factor_prime_power(int64_t q, int64_t& p, int64_t& d) {
    if (q < 2) return false;
    int64_t base = q;
    for (int64_t i = 2; i * i <= base; ++i) {
        if (base % i == 0) {
            p = i;
            d = 0;
            while (base % i == 0) { base /= i; ++d; }
            return base == 1;
        }
    }
    p = q;
    d = 1;
    return true;
}

// ---- polynomial helpers over F_p (coefficient vectors, ascending degree) ----

using Poly = std::vector<int>;

int pdeg(const Poly& f) {
    for (int i = int(f.size()) - 1; i >= 0; --i)
        if (f[i]) return i;
    return -1;
}

Poly pmod(Poly a, const Poly& m, int64_t p) {
    int dm = pdeg(m);
    for (int i = int(a.size()) - 1; i >= dm; --i) {
        if (!a[i]) continue;
        int c = a[i]; // m is monic
        for (int j = 0; j <= dm; ++j) {
            int k = i - dm + j;
            a[k] = int(((a[k] - int64_t(c) * m[j]) % p + p) % p);
        }
    }
    a.resize(dm);
    return a;
}

Poly pmul(const Poly& a, const Poly& b, const Poly& m, int64_t p) {
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = int((r[i + j] + int64_t(a[i]) * b[j]) % p);
    }
    return pmod(std::move(r), m, p);
}

Poly ppowmod(Poly base, int64_t e, const Poly& m, int64_t p) {
    Poly r(std::max<size_t>(1, m.size() - 1), 0);
    r[0] = 1;
    base = pmod(std::move(base), m, p);
    while (e > 0) {
        if (e & 1) r = pmul(r, base, m, p);
        base = pmul(base, base, m, p);
        e >>= 1;
    }
    return r;
}

Poly pgcd(Poly a, Poly b, int64_t p) {
    auto inv_mod = [p](int64_t x) {
        int64_t r = 1, e = p - 2, base = x % p;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return r;
    };
    while (pdeg(b) >= 0) {
        // a mod b
        int db = pdeg(b);
        int64_t lead_inv = inv_mod(b[db]);
        Poly r = a;
        for (int i = pdeg(r); i >= db; i = pdeg(r)) {
            int64_t c = r[i] * lead_inv % p;
            for (int j = 0; j <= db; ++j) {
                int k = i - db + j;
                r[k] = int(((r[k] - c * b[j]) % p + p) % p);
            }
        }
        a = b;
        b = r;
    }
    return a;
}

// Rabin test: f (monic, degree d) is irreducible over F_p iff
// x^(p^d) = x mod f and gcd(x^(p^(d/r)) - x, f) = 1 for prime r | d.
bool is_irreducible(const Poly& f, int64_t p) {
    int d = pdeg(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    Poly x = {0, 1};
    auto pow_p_k = [&](int k) {
        Poly r = x;
        for (int i = 0; i < k; ++i) r = ppowmod(r, p, f, p);
        return r;
    };
    Poly xq = pow_p_k(d);
    Poly diff = xq;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = int(((diff[1] - 1) % p + p) % p);
    if (pdeg(diff) >= 0) return false;
    for (int r = 2; r <= d; ++r) {
        if (d % r != 0 || !is_prime(r)) continue;
        Poly g = pow_p_k(d / r);
        g.resize(std::max<size_t>(g.size(), 2), 0);
        g[1] = int(((g[1] - 1) % p + p) % p);
        Poly gc = pgcd(f, g, p);
        if (pdeg(gc) != 0) return false;
    }
    return true;
}

std::vector<int64_t> prime_divisors(int64_t n) {
    std::vector<int64_t> ps;
    for (int64_t i = 2; i * i <= n; ++i) {
        if (n % i == 0) {
            ps.push_back(i);
            while (n % i == 0) n /= i;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

} // namespace

FieldSpec::FieldSpec(int64_t q) {
    if (!factor_prime_power(q, p_, d_))
        throw Error(Err::NotAPrimePower, "q = " + std::to_string(q) + " is not a prime power");
    if (q > kMaxOrder)
        throw Error(Err::TooLarge, "field order " + std::to_string(q) + " exceeds limit");
    q_ = q;

    // smallest irreducible monic polynomial of degree d, coefficient vectors
    // enumerated as base-p integers
    if (d_ == 1) {
        modulus_ = {0, 1}; // x
    } else {
        for (int64_t code = 0;; ++code) {
            Poly f(d_ + 1, 0);
            int64_t c = code;
            for (int64_t i = 0; i < d_; ++i) { f[i] = int(c % p_); c /= p_; }
            if (c != 0) throw Error(Err::Invalid, "no irreducible polynomial found");
            f[d_] = 1;
            if (is_irreducible(f, p_)) { modulus_ = f; break; }
        }
    }

    // discrete log tables over a generator (smallest element code of full order)
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, -1);
    auto divisors = prime_divisors(q_ - 1);
    for (int g = 1; g < q_; ++g) {
        if (q_ > 2 && g == 1) continue;
        bool ok = true;
        for (int64_t r : divisors) {
            // g^((q-1)/r) via repeated squaring on codes with slow mul
            int64_t e = (q_ - 1) / r;
            int acc = 1, base = g;
            while (e) {
                if (e & 1) acc = mul_slow(acc, base);
                base = mul_slow(base, base);
                e >>= 1;
            }
            if (acc == 1) { ok = false; break; }
        }
        if (ok) { gen_ = g; break; }
    }
    if (gen_ == 0) {
        if (q_ == 2) gen_ = 1;
        else throw Error(Err::Invalid, "no generator found");
    }
    int cur = 1;
    for (int64_t k = 0; k < q_ - 1; ++k) {
        exp_[k] = cur;
        log_[cur] = int(k);
        cur = mul_slow(cur, gen_);
    }
    if (cur != 1) throw Error(Err::Invalid, "generator order mismatch");
}

int FieldSpec::mul_slow(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    if (d_ == 1) return int(int64_t(a) * b % p_);
    std::vector<int64_t> prod(2 * d_ - 1, 0);
    int64_t av = a;
    for (int64_t i = 0; i < d_; ++i, av /= p_) {
        int64_t ai = av % p_;
        if (!ai) continue;
        int64_t bv = b;
        for (int64_t j = 0; j < d_; ++j, bv /= p_) {
            int64_t bj = bv % p_;
            prod[i + j] = (prod[i + j] + ai * bj) % p_;
        }
    }
    for (int64_t i = 2 * d_ - 2; i >= d_; --i) {
        int64_t c = prod[i] % p_;
        if (!c) continue;
        for (int64_t j = 0; j < d_; ++j)
            prod[i - d_ + j] = ((prod[i - d_ + j] - c * modulus_[j]) % p_ + p_) % p_;
        prod[i] = 0;
    }
    int64_t code = 0;
    for (int64_t i = d_ - 1; i >= 0; --i) code = code * p_ + prod[i];
    return int(code);
}

int FieldSpec::add(int a, int b) const {
    if (d_ == 1) return int((a + b) % p_);
    int64_t code = 0, mulp = 1;
    for (int64_t i = 0; i < d_; ++i) {
        code += ((a + b) % p_) * mulp;
        a /= int(p_);
        b /= int(p_);
        mulp *= p_;
    }
    return int(code);
}

int FieldSpec::sub(int a, int b) const { return add(a, neg(b)); }

int FieldSpec::neg(int a) const {
    if (d_ == 1) return int((p_ - a) % p_);
    int64_t code = 0, mulp = 1;
    for (int64_t i = 0; i < d_; ++i) {
        code += ((p_ - a % p_) % p_) * mulp;
        a /= int(p_);
        mulp *= p_;
    }
    return int(code);
}

int FieldSpec::pow(int a, int64_t e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw Error(Err::DivisionByZero, "0 to a negative power");
        return 0;
    }
    int64_t le = (log_[a] * (e % (q_ - 1))) % (q_ - 1);
    if (le < 0) le += q_ - 1;
    return exp_[le];
}

int FieldSpec::frobenius(int a, int k) const {
    if (k < 0 || k >= d_) throw Error(Err::Invalid, "frobenius exponent out of range");
    int64_t pk = 1;
    for (int i = 0; i < k; ++i) pk *= p_;
    return pow(a, pk);
}

SquareClass FieldSpec::square_class(int a) const {
    if (a == 0) return SquareClass::Zero;
    if (p_ == 2) return SquareClass::Square; // F_q^* has odd order
    return (log_[a] % 2 == 0) ? SquareClass::Square : SquareClass::NonSquare;
}

int64_t FieldSpec::dlog(int a) const {
    if (a == 0) throw Error(Err::DivisionByZero, "dlog of zero");
    return log_[a];
}

std::vector<int> FieldSpec::digits(int a) const {
    std::vector<int> dig(d_);
    for (int64_t i = 0; i < d_; ++i) { dig[i] = int(a % p_); a /= int(p_); }
    return dig;
}

int FieldSpec::from_digits(const std::vector<int>& dig) const {
    int64_t code = 0;
    for (int64_t i = d_ - 1; i >= 0; --i) code = code * p_ + (i < int64_t(dig.size()) ? dig[i] % p_ : 0);
    return int(code);
}

std::string FieldSpec::to_string(int a) const {
    if (d_ == 1) return std::to_string(a);
    return std::to_string(a) + "#";
}

const FieldSpec& FieldSpec::get(int64_t q) {
    static std::mutex mu;
    static std::map<int64_t, std::unique_ptr<FieldSpec>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(q);
    if (it == cache.end())
        it = cache.emplace(q, std::unique_ptr<FieldSpec>(new FieldSpec(q))).first;
    return *it->second;
}

QuadExt::QuadExt(const FieldSpec& base, const FieldSpec& ext) : base_(&base), ext_(&ext) {
    if (ext.q() != base.q() * base.q())
        throw Error(Err::Invalid, "extension order must be q^2");
    // smallest root of the base modulus in the extension
    int theta = -1;
    const auto& m = base.modulus();
    for (int t = 0; t < ext.q(); ++t) {
        int acc = 0, tp = 1;
        for (size_t i = 0; i < m.size(); ++i) {
            acc = ext.add(acc, ext.mul(ext.from_int(m[i]), tp));
            tp = ext.mul(tp, t);
        }
        if (acc == 0) { theta = t; break; }
    }
    if (theta < 0) throw Error(Err::Invalid, "base modulus has no root in extension");
    embed_.assign(base.q(), 0);
    project_.assign(ext.q(), -1);
    for (int a = 0; a < base.q(); ++a) {
        auto dig = base.digits(a);
        int acc = 0, tp = 1;
        for (size_t i = 0; i < dig.size(); ++i) {
            acc = ext.add(acc, ext.mul(ext.from_int(dig[i]), tp));
            tp = ext.mul(tp, theta);
        }
        embed_[a] = acc;
        project_[acc] = a;
    }
}

int QuadExt::project(int e) const {
    if (project_[e] < 0) throw Error(Err::Invalid, "element not in the base subfield");
    return project_[e];
}

const QuadExt& QuadExt::get(int64_t q) {
    static std::mutex mu;
    static std::map<int64_t, std::unique_ptr<QuadExt>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(q);
    if (it == cache.end()) {
        const FieldSpec& b = FieldSpec::get(q);
        const FieldSpec& e = FieldSpec::get(q * q);
        it = cache.emplace(q, std::make_unique<QuadExt>(b, e)).first;
    }
    return *it->second;
}

} // namespace benz
