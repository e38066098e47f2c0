#include "benz/pgl2.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace benz {

std::array<int, 4> PGL2::normalize(std::array<int, 4> m) const {
    int lead = -1;
    for (int i = 0; i < 4; ++i)
        if (m[i]) { lead = i; break; }
    if (lead < 0) throw Error(Err::Invalid, "zero matrix");
    if (m[lead] != 1) {
        int s = F_->inv(m[lead]);
        for (int i = 0; i < 4; ++i) m[i] = F_->mul(m[i], s);
    }
    return m;
}

int64_t PGL2::code_of(const std::array<int, 4>& m) const {
    int64_t q = F_->q(), code = 0;
    for (int i = 0; i < 4; ++i) code = code * q + m[i];
    return code;
}

PGL2::PGL2(const FieldSpec& F) : F_(&F) {
    int64_t q = F.q();
    if (q > 64) throw Error(Err::TooLarge, "PGL(2,q) enumeration limited to q <= 64");

    // PG(1,q) points, same enumeration as ProjSpace(1,q)
    for (int64_t code = 1; code < q * q; ++code) {
        int x0 = int(code / q), x1 = int(code % q);
        if ((x0 == 0 && x1 == 1) || x0 == 1) pg1_pts_.push_back({x0, x1});
    }

    int64_t ncodes = q * q * q * q;
    code_to_id_.assign(ncodes, -1);
    for (int64_t code = 0; code < ncodes; ++code) {
        std::array<int, 4> m;
        int64_t v = code;
        for (int i = 3; i >= 0; --i) { m[i] = int(v % q); v /= q; }
        int lead = -1;
        for (int i = 0; i < 4; ++i)
            if (m[i]) { lead = i; break; }
        if (lead < 0 || m[lead] != 1) continue;
        int det = F.sub(F.mul(m[0], m[3]), F.mul(m[1], m[2]));
        if (det == 0) continue;
        code_to_id_[code] = int32_t(elems_.size());
        elems_.push_back(m);
    }
    if (int64_t(elems_.size()) != q * q * q - q)
        throw Error(Err::Invalid, "PGL(2,q) order mismatch");
    id_ = id_of({1, 0, 0, 1});

    perm_.assign(elems_.size(), std::vector<int32_t>(pg1_pts_.size()));
    for (int32_t a = 0; a < int32_t(elems_.size()); ++a) {
        const auto& m = elems_[a];
        for (int32_t p = 0; p < int32_t(pg1_pts_.size()); ++p) {
            int y0 = F.add(F.mul(m[0], pg1_pts_[p][0]), F.mul(m[1], pg1_pts_[p][1]));
            int y1 = F.add(F.mul(m[2], pg1_pts_[p][0]), F.mul(m[3], pg1_pts_[p][1]));
            perm_[a][p] = pg1_id(y0, y1);
        }
    }
}

int32_t PGL2::id_of(std::array<int, 4> m) const {
    int32_t id = code_to_id_[code_of(normalize(m))];
    if (id < 0) throw Error(Err::Invalid, "singular matrix");
    return id;
}

int32_t PGL2::mul(int32_t a, int32_t b) const {
    const auto& x = elems_[a];
    const auto& y = elems_[b];
    std::array<int, 4> r;
    r[0] = F_->add(F_->mul(x[0], y[0]), F_->mul(x[1], y[2]));
    r[1] = F_->add(F_->mul(x[0], y[1]), F_->mul(x[1], y[3]));
    r[2] = F_->add(F_->mul(x[2], y[0]), F_->mul(x[3], y[2]));
    r[3] = F_->add(F_->mul(x[2], y[1]), F_->mul(x[3], y[3]));
    return id_of(r);
}

int32_t PGL2::inverse(int32_t a) const {
    const auto& m = elems_[a];
    std::array<int, 4> r = {m[3], F_->neg(m[1]), F_->neg(m[2]), m[0]};
    return id_of(r);
}

SquareClass PGL2::det_class(int32_t a) const {
    const auto& m = elems_[a];
    int det = F_->sub(F_->mul(m[0], m[3]), F_->mul(m[1], m[2]));
    return F_->square_class(det);
}

int PGL2::fixed_point_count(int32_t a) const {
    int c = 0;
    for (int32_t p = 0; p < int32_t(pg1_pts_.size()); ++p)
        if (perm_[a][p] == p) ++c;
    return c;
}

std::array<int, 2> PGL2::pg1_point(int32_t id) const { return pg1_pts_[id]; }

int32_t PGL2::pg1_id(int x0, int x1) const {
    if (x0 == 0) {
        if (x1 == 0) throw Error(Err::Invalid, "zero vector");
        return 0; // (0,1)
    }
    if (x0 != 1) x1 = F_->div(x1, x0);
    return 1 + x1;
}

ClassLabel PGL2::classify(int32_t a) const {
    const FieldSpec& F = *F_;
    int64_t q = F.q();
    const auto& m = elems_[a];
    if (m[1] == 0 && m[2] == 0 && m[0] == m[3]) return {ClassKind::Identity, 0};
    int tr = F.add(m[0], m[3]);
    int det = F.sub(F.mul(m[0], m[3]), F.mul(m[1], m[2]));
    // roots of t^2 - tr t + det over F_q
    std::vector<int> roots;
    for (int t = 0; t < q; ++t) {
        int v = F.add(F.sub(F.mul(t, t), F.mul(tr, t)), det);
        if (v == 0) roots.push_back(t);
    }
    if (roots.size() == 1) return {ClassKind::Unipotent, 0};
    if (roots.size() == 2) {
        int x = F.div(roots[1], roots[0]);
        int64_t e = F.dlog(x);
        int64_t e2 = (q - 1 - e) % (q - 1);
        return {ClassKind::Split, std::min(e, e2)};
    }
    // irreducible characteristic polynomial: root coset in F_{q^2}^*/F_q^*
    const QuadExt& E = QuadExt::get(q);
    const FieldSpec& F2 = E.ext();
    int tr2 = E.embed(tr), det2 = E.embed(det);
    int64_t r = -1;
    for (int t = 0; t < F2.q(); ++t) {
        int v = F2.add(F2.sub(F2.mul(t, t), F2.mul(tr2, t)), det2);
        if (v == 0) { r = t; break; }
    }
    if (r < 0) throw Error(Err::Invalid, "characteristic polynomial has no root in F_{q^2}");
    int64_t c = F2.dlog(int(r)) % (q + 1);
    int64_t c2 = (q + 1 - c) % (q + 1);
    return {ClassKind::NonSplit, std::min(c, c2)};
}

std::vector<ConjugacyClass> PGL2::conjugacy_classes() const {
    std::map<ClassLabel, ConjugacyClass> by_label;
    for (int32_t a = 0; a < int32_t(elems_.size()); ++a) {
        ClassLabel lbl = classify(a);
        auto it = by_label.find(lbl);
        if (it == by_label.end())
            by_label.emplace(lbl, ConjugacyClass{lbl, 1, a});
        else
            it->second.size++;
    }
    std::vector<ConjugacyClass> out;
    for (auto& [lbl, cc] : by_label) out.push_back(cc);
    return out; // map order = Identity, Unipotent, Split asc, NonSplit asc
}

CharacterTable character_table(const FieldSpec& F) {
    int64_t q = F.q();
    if (q % 2 == 0) throw Error(Err::WrongParity, "character table implemented for odd q");
    const PGL2& G = PGL2::get(q);
    CharacterTable T;
    T.q = q;
    T.classes = G.conjugacy_classes();
    const double pi = std::acos(-1.0);

    auto value = [&](const std::string& row, int64_t j, const ClassLabel& c) -> std::complex<double> {
        auto sgn_split = [&](int64_t e) { return (e % 2 == 0) ? 1.0 : -1.0; };
        auto sgn_nonsplit = [&](int64_t cc) { return (cc % 2 == 0) ? 1.0 : -1.0; };
        if (row == "lambda1") return 1.0;
        if (row == "lambda-1") {
            switch (c.kind) {
            case ClassKind::Identity: case ClassKind::Unipotent: return 1.0;
            case ClassKind::Split: return sgn_split(c.param);
            case ClassKind::NonSplit: return sgn_nonsplit(c.param);
            }
        }
        if (row == "psi1") {
            switch (c.kind) {
            case ClassKind::Identity: return double(q);
            case ClassKind::Unipotent: return 0.0;
            case ClassKind::Split: return 1.0;
            case ClassKind::NonSplit: return -1.0;
            }
        }
        if (row == "psi-1") {
            switch (c.kind) {
            case ClassKind::Identity: return double(q);
            case ClassKind::Unipotent: return 0.0;
            case ClassKind::Split: return sgn_split(c.param);
            case ClassKind::NonSplit: return -sgn_nonsplit(c.param);
            }
        }
        if (row == "eta") { // degree q-1, indexed by morphisms of F_{q^2}^*/F_q^*
            switch (c.kind) {
            case ClassKind::Identity: return double(q - 1);
            case ClassKind::Unipotent: return -1.0;
            case ClassKind::Split: return 0.0;
            case ClassKind::NonSplit:
                return -2.0 * std::cos(2.0 * pi * double(j) * double(c.param) / double(q + 1));
            }
        }
        if (row == "nu") { // degree q+1, indexed by morphisms of F_q^*
            switch (c.kind) {
            case ClassKind::Identity: return double(q + 1);
            case ClassKind::Unipotent: return 1.0;
            case ClassKind::Split:
                return 2.0 * std::cos(2.0 * pi * double(j) * double(c.param) / double(q - 1));
            case ClassKind::NonSplit: return 0.0;
            }
        }
        throw Error(Err::Invalid, "unknown character row");
    };

    auto add_row = [&](const std::string& label, const std::string& row, int64_t j, int64_t degree) {
        std::vector<std::complex<double>> vals;
        for (const auto& c : T.classes) vals.push_back(value(row, j, c.label));
        T.row_labels.push_back(label);
        T.values.push_back(std::move(vals));
        T.degrees.push_back(degree);
    };

    add_row("lambda_1", "lambda1", 0, 1);
    add_row("lambda_-1", "lambda-1", 0, 1);
    add_row("psi_1", "psi1", 0, q);
    add_row("psi_-1", "psi-1", 0, q);
    for (int64_t j = 1; j <= (q - 1) / 2; ++j)
        add_row("eta_" + std::to_string(j), "eta", j, q - 1);
    for (int64_t j = 1; j <= (q - 3) / 2; ++j)
        add_row("nu_" + std::to_string(j), "nu", j, q + 1);
    return T;
}

double CharacterTable::row_orthogonality_error() const {
    int64_t order = q * q * q - q;
    double worst = 0.0;
    for (size_t i = 0; i < values.size(); ++i) {
        for (size_t j = 0; j < values.size(); ++j) {
            std::complex<double> acc = 0.0;
            for (size_t c = 0; c < classes.size(); ++c)
                acc += double(classes[c].size) * values[i][c] * std::conj(values[j][c]);
            double want = (i == j) ? double(order) : 0.0;
            worst = std::max(worst, std::abs(acc - want));
        }
    }
    return worst;
}

double CharacterTable::column_orthogonality_error() const {
    int64_t order = q * q * q - q;
    double worst = 0.0;
    for (size_t c = 0; c < classes.size(); ++c) {
        for (size_t d = 0; d < classes.size(); ++d) {
            std::complex<double> acc = 0.0;
            for (size_t i = 0; i < values.size(); ++i)
                acc += values[i][c] * std::conj(values[i][d]);
            double want = (c == d) ? double(order) / double(classes[c].size) : 0.0;
            worst = std::max(worst, std::abs(acc - want));
        }
    }
    return worst;
}

const PGL2& PGL2::get(int64_t q) {
    static std::mutex mu;
    static std::map<int64_t, std::unique_ptr<PGL2>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(q);
    if (it == cache.end())
        it = cache.emplace(q, std::make_unique<PGL2>(FieldSpec::get(q))).first;
    return *it->second;
}

} // namespace benz
