#include "benz/projective.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace benz {

ProjSpace::ProjSpace(int n, const FieldSpec& F) : n_(n), F_(&F) {
    if (n < 1 || n > 3) throw Error(Err::Invalid, "ProjSpace supports n in {1,2,3}");
    int64_t q = F.q();
    int64_t ncodes = 1;
    for (int i = 0; i <= n; ++i) ncodes *= q;
    if (n == 3 && q > 16) throw Error(Err::TooLarge, "PG(3,q) enumeration limited to q <= 16");
    if (n < 3 && q > 512) throw Error(Err::TooLarge, "PG(n,q) enumeration limit exceeded");

    // points: every code whose coordinate vector is already normalized
    code_to_id_.assign(ncodes, -1);
    for (int64_t code = 1; code < ncodes; ++code) {
        Coords c{};
        int64_t v = code;
        // coordinate 0 is the most significant digit so that enumeration is
        // lexicographic in (c0, c1, ..., cn)
        for (int i = n; i >= 0; --i) { c[i] = int(v % q); v /= q; }
        int lead = -1;
        for (int i = 0; i <= n; ++i)
            if (c[i]) { lead = i; break; }
        if (c[lead] != 1) continue;
        code_to_id_[code] = int32_t(pts_.size());
        pts_.push_back(c);
    }

    int64_t expect = 0;
    { int64_t t = 1; for (int i = 0; i <= n; ++i) { expect += t; t *= q; } }
    if (int64_t(pts_.size()) != expect) throw Error(Err::Invalid, "point count mismatch");

    if (n >= 2) {
        size_t np = pts_.size();
        line_of_pair_.assign(np * np, -1);
        lines_on_pt_.assign(np, {});
        for (int32_t p = 0; p < int32_t(np); ++p) {
            for (int32_t r = p + 1; r < int32_t(np); ++r) {
                if (line_of_pair_[size_t(p) * np + r] >= 0) continue;
                std::vector<int32_t> pts_on;
                pts_on.push_back(p);
                // points r + t*p, t in F_q, plus p itself (already added)
                for (int t = 0; t < q; ++t) {
                    Coords c{};
                    for (int i = 0; i <= n; ++i)
                        c[i] = F.add(pts_[r][i], F.mul(t, pts_[p][i]));
                    pts_on.push_back(point_id(c));
                }
                std::sort(pts_on.begin(), pts_on.end());
                int32_t lid = int32_t(lines_.size());
                Bits bits(np);
                for (int32_t x : pts_on) bits.set(x);
                for (size_t i = 0; i < pts_on.size(); ++i) {
                    lines_on_pt_[pts_on[i]].push_back(lid);
                    for (size_t j = i + 1; j < pts_on.size(); ++j) {
                        line_of_pair_[size_t(pts_on[i]) * np + pts_on[j]] = lid;
                        line_of_pair_[size_t(pts_on[j]) * np + pts_on[i]] = lid;
                    }
                }
                lines_.push_back(std::move(pts_on));
                line_bits_.push_back(std::move(bits));
            }
        }
    }

    if (n == 3) {
        size_t np = pts_.size();
        plane_bits_.assign(np, Bits(np));
        for (int32_t pl = 0; pl < int32_t(np); ++pl)
            for (int32_t pt = 0; pt < int32_t(np); ++pt)
                if (dot(pts_[pl], pts_[pt]) == 0) plane_bits_[pl].set(pt);
    }
}

Coords ProjSpace::normalize(Coords c) const {
    int lead = -1;
    for (int i = 0; i <= n_; ++i)
        if (c[i]) { lead = i; break; }
    if (lead < 0) throw Error(Err::Invalid, "zero vector has no projective point");
    if (c[lead] != 1) {
        int s = F_->inv(c[lead]);
        for (int i = 0; i <= n_; ++i) c[i] = F_->mul(c[i], s);
    }
    return c;
}

int32_t ProjSpace::point_id(Coords c) const {
    c = normalize(c);
    int64_t q = F_->q(), code = 0;
    for (int i = 0; i <= n_; ++i) code = code * q + c[i];
    int32_t id = code_to_id_[code];
    if (id < 0) throw Error(Err::Invalid, "coordinate lookup failed");
    return id;
}

std::string ProjSpace::point_label(int32_t id) const {
    std::string s = "(";
    for (int i = 0; i <= n_; ++i) {
        if (i) s += ",";
        s += std::to_string(pts_[id][i]);
    }
    return s + ")";
}

int ProjSpace::dot(const Coords& a, const Coords& b) const {
    int acc = 0;
    for (int i = 0; i <= n_; ++i) acc = F_->add(acc, F_->mul(a[i], b[i]));
    return acc;
}

std::vector<int32_t> ProjSpace::lines_in_plane_through(int32_t plane, int32_t point) const {
    std::vector<int32_t> out;
    for (int32_t l : lines_on_pt_[point]) {
        bool inside = true;
        for (int32_t x : lines_[l])
            if (!plane_bits_[plane].test(x)) { inside = false; break; }
        if (inside) out.push_back(l);
    }
    return out;
}

const ProjSpace& ProjSpace::get(int n, int64_t q) {
    static std::mutex mu;
    static std::map<std::pair<int, int64_t>, std::unique_ptr<ProjSpace>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto key = std::make_pair(n, q);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<ProjSpace>(n, FieldSpec::get(q))).first;
    return *it->second;
}

int QuadForm::kappa(const Coords& x) const {
    int acc = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j)
            if (a[i][j]) acc = F->add(acc, F->mul(a[i][j], F->mul(x[i], x[j])));
    return acc;
}

int QuadForm::bilinear(const Coords& x, const Coords& y) const {
    Coords s{};
    for (int i = 0; i < 4; ++i) s[i] = F->add(x[i], y[i]);
    return F->sub(F->sub(kappa(s), kappa(x)), kappa(y));
}

namespace {

// inverse of a 4x4 matrix over F_q by Gauss-Jordan; throws DegenerateForm
std::array<std::array<int, 4>, 4> invert4(const FieldSpec& F, std::array<std::array<int, 4>, 4> m) {
    std::array<std::array<int, 4>, 4> inv{};
    for (int i = 0; i < 4; ++i) inv[i][i] = 1;
    for (int col = 0; col < 4; ++col) {
        int piv = -1;
        for (int r = col; r < 4; ++r)
            if (m[r][col]) { piv = r; break; }
        if (piv < 0) throw Error(Err::DegenerateForm, "bilinear form is singular");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        int s = F.inv(m[col][col]);
        for (int j = 0; j < 4; ++j) {
            m[col][j] = F.mul(m[col][j], s);
            inv[col][j] = F.mul(inv[col][j], s);
        }
        for (int r = 0; r < 4; ++r) {
            if (r == col || !m[r][col]) continue;
            int f = m[r][col];
            for (int j = 0; j < 4; ++j) {
                m[r][j] = F.sub(m[r][j], F.mul(f, m[col][j]));
                inv[r][j] = F.sub(inv[r][j], F.mul(f, inv[col][j]));
            }
        }
    }
    return inv;
}

} // namespace

Polarity::Polarity(const ProjSpace& S, const QuadForm& form) : S_(&S), form_(form) {
    const FieldSpec& F = S.field();
    if (F.p() == 2)
        throw Error(Err::EvenCharacteristic, "polarity of a quadric requires odd q");
    Coords e[4];
    for (int i = 0; i < 4; ++i) { e[i] = Coords{}; e[i][i] = 1; }
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            B_[i][j] = form_.bilinear(e[i], e[j]);
    Binv_ = invert4(F, B_);
}

int32_t Polarity::point_perp(int32_t point) const {
    const FieldSpec& F = S_->field();
    const Coords& x = S_->point(point);
    Coords d{};
    for (int i = 0; i < 4; ++i) {
        int acc = 0;
        for (int j = 0; j < 4; ++j) acc = F.add(acc, F.mul(B_[i][j], x[j]));
        d[i] = acc;
    }
    return S_->point_id(d); // plane ids share the point enumeration
}

int32_t Polarity::plane_perp(int32_t plane) const {
    const FieldSpec& F = S_->field();
    const Coords& d = S_->plane_dual(plane);
    Coords x{};
    for (int i = 0; i < 4; ++i) {
        int acc = 0;
        for (int j = 0; j < 4; ++j) acc = F.add(acc, F.mul(Binv_[i][j], d[j]));
        x[i] = acc;
    }
    return S_->point_id(x);
}

int32_t Polarity::line_perp(int32_t line) const {
    const FieldSpec& F = S_->field();
    const auto& pts = S_->line(line);
    const Coords& x1 = S_->point(pts[0]);
    const Coords& x2 = S_->point(pts[1]);
    // solve b(x1,y) = b(x2,y) = 0: two rows of the Gram matrix applied
    int rows[2][4];
    for (int i = 0; i < 4; ++i) {
        int a1 = 0, a2 = 0;
        for (int j = 0; j < 4; ++j) {
            a1 = F.add(a1, F.mul(x1[j], B_[j][i]));
            a2 = F.add(a2, F.mul(x2[j], B_[j][i]));
        }
        rows[0][i] = a1;
        rows[1][i] = a2;
    }
    // nullspace of the 2x4 system via elimination
    int pivcol[2] = {-1, -1};
    int r = 0;
    for (int c = 0; c < 4 && r < 2; ++c) {
        int pr = -1;
        for (int i = r; i < 2; ++i)
            if (rows[i][c]) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(rows[pr], rows[r]);
        int s = F.inv(rows[r][c]);
        for (int j = 0; j < 4; ++j) rows[r][j] = F.mul(rows[r][j], s);
        for (int i = 0; i < 2; ++i) {
            if (i == r || !rows[i][c]) continue;
            int f = rows[i][c];
            for (int j = 0; j < 4; ++j) rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
        }
        pivcol[r++] = c;
    }
    if (r != 2) throw Error(Err::DegenerateForm, "perp of a line needs rank 2");
    std::vector<Coords> basis;
    for (int c = 0; c < 4; ++c) {
        if (c == pivcol[0] || c == pivcol[1]) continue;
        Coords v{};
        v[c] = 1;
        for (int i = 0; i < 2; ++i) v[pivcol[i]] = F.neg(rows[i][c]);
        basis.push_back(v);
    }
    int32_t p1 = S_->point_id(basis[0]);
    int32_t p2 = S_->point_id(basis[1]);
    return S_->line_through(p1, p2);
}

} // namespace benz
