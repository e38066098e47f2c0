#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "benz/error.hpp"

namespace benz {

enum class SquareClass { Zero, Square, NonSquare };

// F_q, q = p^d, in polynomial basis modulo a fixed irreducible polynomial.
// Elements are codes 0..q-1: code = sum coeff_i * p^i, coeff_i the coefficient
// of x^i. The modulus is the monic irreducible polynomial of degree d over F_p
// whose coefficient vector, read as a base-p integer (constant term least
// significant), is smallest. This makes element encodings identical across
// runs and platforms.
class FieldSpec {
public:
    static constexpr int64_t kMaxOrder = int64_t{1} << 20;

    // Cached, one instance per q. Throws NotAPrimePower / TooLarge.
    static const FieldSpec& get(int64_t q);

    int64_t p() const { return p_; }
    int64_t degree() const { return d_; }
    int64_t q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; } // length d+1, monic

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[(log_[a] + log_[b]) % (q_ - 1)];
    }
    int inv(int a) const {
        if (a == 0) throw Error(Err::DivisionByZero, "inverse of zero");
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }
    int div(int a, int b) const {
        if (b == 0) throw Error(Err::DivisionByZero, "division by zero");
        return mul(a, inv(b));
    }
    // a^e for e >= 0 (e < 0 allowed when a != 0)
    int pow(int a, int64_t e) const;

    // a^(p^k), 0 <= k < d
    int frobenius(int a, int k) const;

    SquareClass square_class(int a) const;

    int generator() const { return gen_; }
    int64_t dlog(int a) const; // a != 0

    // code of the scalar c in {0..p-1}
    int from_int(int64_t c) const {
        c %= p_;
        if (c < 0) c += p_;
        return int(c);
    }
    int one() const { return 1; }

    std::vector<int> digits(int a) const; // coefficient vector, length d
    int from_digits(const std::vector<int>& dig) const;

    std::string to_string(int a) const;

private:
    explicit FieldSpec(int64_t q);
    int mul_slow(int a, int b) const; // polynomial multiplication mod modulus

    int64_t p_ = 0, d_ = 0, q_ = 0;
    std::vector<int> modulus_;
    std::vector<int> exp_, log_;
    int gen_ = 0;
};

// Field element bound to its FieldSpec. Mixing owners throws FieldMismatch.
// The code is the base-p digit encoding of the coefficient vector, so equal
// (p, d, modulus) specs share encodings.
struct Fq {
    const FieldSpec* f = nullptr;
    int v = 0;

    Fq() = default;
    Fq(const FieldSpec& spec, int code) : f(&spec), v(code) {}

    std::vector<int> coeffs() const { return f->digits(v); }

    friend void check_owner(const Fq& a, const Fq& b) {
        if (a.f != b.f) throw Error(Err::FieldMismatch, "elements of different fields");
    }
    friend Fq operator+(const Fq& a, const Fq& b) { check_owner(a, b); return {*a.f, a.f->add(a.v, b.v)}; }
    friend Fq operator-(const Fq& a, const Fq& b) { check_owner(a, b); return {*a.f, a.f->sub(a.v, b.v)}; }
    friend Fq operator*(const Fq& a, const Fq& b) { check_owner(a, b); return {*a.f, a.f->mul(a.v, b.v)}; }
    friend Fq operator/(const Fq& a, const Fq& b) { check_owner(a, b); return {*a.f, a.f->div(a.v, b.v)}; }
    Fq operator-() const { return {*f, f->neg(v)}; }
    Fq pow(int64_t e) const { return {*f, f->pow(v, e)}; }
    Fq frobenius(int k) const { return {*f, f->frobenius(v, k)}; }
    SquareClass square_class() const { return f->square_class(v); }
    friend bool operator==(const Fq& a, const Fq& b) { return a.f == b.f && a.v == b.v; }
};

// Embedding of F_q into F_{q^2}: the base modulus' smallest root in the
// extension generates the image, which is exactly the subfield fixed by
// x -> x^q.
class QuadExt {
public:
    QuadExt(const FieldSpec& base, const FieldSpec& ext);

    const FieldSpec& base() const { return *base_; }
    const FieldSpec& ext() const { return *ext_; }

    int embed(int a) const { return embed_[a]; }
    bool in_base(int e) const { return project_[e] >= 0; }
    int project(int e) const; // partial inverse, throws if e not in the image

    static const QuadExt& get(int64_t q); // cached F_q -> F_{q^2}

private:
    const FieldSpec* base_;
    const FieldSpec* ext_;
    std::vector<int> embed_;
    std::vector<int> project_;
};

} // namespace benz
