#include "benz/spectral.hpp"

#include <algorithm>
#include <map>

namespace benz {

namespace {

RelationFamily pack_relations(int64_t n, std::vector<std::pair<std::string, std::vector<Bits>>> raw,
                              const std::vector<uint8_t>& raw_rel_of) {
    RelationFamily fam;
    fam.n = n;
    std::vector<int> keep_index(raw.size(), -1);
    for (size_t r = 0; r < raw.size(); ++r) {
        bool empty = true;
        for (const auto& row : raw[r].second)
            if (row.any()) { empty = false; break; }
        if (empty && r != 0) {
            fam.dropped.push_back(raw[r].first);
            continue;
        }
        keep_index[r] = int(fam.rels.size());
        fam.labels.push_back(raw[r].first);
        fam.rels.push_back(std::move(raw[r].second));
    }
    fam.rel_of.assign(size_t(n) * n, 0);
    for (int64_t x = 0; x < n; ++x)
        for (int64_t y = 0; y < n; ++y) {
            int r = keep_index[raw_rel_of[size_t(x) * n + y]];
            if (r < 0) throw Error(Err::Invalid, "pair assigned to a dropped relation");
            fam.rel_of[size_t(x) * n + y] = uint8_t(r);
        }
    return fam;
}

} // namespace

RelationFamily intersection_relations(const CircleGeometry& g) {
    int64_t n = g.num_circles(), q = g.q;
    std::vector<std::pair<std::string, std::vector<Bits>>> raw(4);
    raw[0] = {"R0 |s|=" + std::to_string(g.circle_size()), std::vector<Bits>(n, Bits(n))};
    raw[1] = {"R1 |s|=1", std::vector<Bits>(n, Bits(n))};
    raw[2] = {"R2 |s|=2", std::vector<Bits>(n, Bits(n))};
    raw[3] = {"R3 |s|=0", std::vector<Bits>(n, Bits(n))};
    std::vector<uint8_t> rel_of(size_t(n) * n, 0);
    for (int32_t x = 0; x < n; ++x) {
        raw[0].second[x].set(x);
        for (int32_t y = x + 1; y < n; ++y) {
            int64_t s = g.intersection_size(x, y);
            int r;
            if (s == 1) r = 1;
            else if (s == 2) r = 2;
            else if (s == 0) r = 3;
            else throw Error(Err::Invalid, "distinct circles sharing " + std::to_string(s) +
                                               " points (q=" + std::to_string(q) + ")");
            raw[r].second[x].set(y);
            raw[r].second[y].set(x);
            rel_of[size_t(x) * n + y] = uint8_t(r);
            rel_of[size_t(y) * n + x] = uint8_t(r);
        }
    }
    return pack_relations(n, std::move(raw), rel_of);
}

RelationFamily splice_minkowski_odd(const CircleGeometry& g) {
    if (g.rho != 2) throw Error(Err::Invalid, "splicing applies to Minkowski planes");
    if (g.q % 2 == 0) throw Error(Err::WrongParity, "splicing applies to odd order");
    if (g.circle_type.empty())
        throw Error(Err::Invalid, "geometry carries no square-type labels");
    int64_t n = g.num_circles();
    std::vector<std::pair<std::string, std::vector<Bits>>> raw(6);
    raw[0] = {"R0 equal", std::vector<Bits>(n, Bits(n))};
    raw[1] = {"R1 |s|=1", std::vector<Bits>(n, Bits(n))};
    raw[2] = {"R2 |s|=2 same type", std::vector<Bits>(n, Bits(n))};
    raw[3] = {"R3 |s|=2 diff type", std::vector<Bits>(n, Bits(n))};
    raw[4] = {"R4 |s|=0 same type", std::vector<Bits>(n, Bits(n))};
    raw[5] = {"R5 |s|=0 diff type", std::vector<Bits>(n, Bits(n))};
    std::vector<uint8_t> rel_of(size_t(n) * n, 0);
    for (int32_t x = 0; x < n; ++x) {
        raw[0].second[x].set(x);
        for (int32_t y = x + 1; y < n; ++y) {
            int64_t s = g.intersection_size(x, y);
            bool same = g.circle_type[x] == g.circle_type[y];
            int r;
            if (s == 1) {
                if (!same)
                    throw Error(Err::Invalid, "tangent circles of different square type");
                r = 1;
            } else if (s == 2) {
                r = same ? 2 : 3;
            } else if (s == 0) {
                r = same ? 4 : 5;
            } else {
                throw Error(Err::Invalid, "unexpected intersection size");
            }
            raw[r].second[x].set(y);
            raw[r].second[y].set(x);
            rel_of[size_t(x) * n + y] = uint8_t(r);
            rel_of[size_t(y) * n + x] = uint8_t(r);
        }
    }
    return pack_relations(n, std::move(raw), rel_of);
}

SchemeResult verify_scheme(const RelationFamily& fam) {
    SchemeResult res;
    int64_t n = fam.n;
    int64_t m = int64_t(fam.rels.size());
    auto& s = res.data;
    s.n = n;
    s.labels = fam.labels;
    s.valencies.assign(m, -1);
    for (int64_t r = 0; r < m; ++r) {
        for (int32_t x = 0; x < n; ++x) {
            int64_t deg = int64_t(fam.rels[r][x].count());
            if (s.valencies[r] < 0) s.valencies[r] = deg;
            else if (s.valencies[r] != deg) {
                res.witness = "relation " + std::to_string(r) + " is not regular";
                return res;
            }
        }
    }
    s.p.assign(m, std::vector<std::vector<int64_t>>(m, std::vector<int64_t>(m, -1)));
    for (int64_t i = 0; i < m; ++i)
        for (int64_t j = 0; j < m; ++j)
            for (int64_t k = 0; k < m; ++k)
                if (i == 0 || j == 0)
                    s.p[i][j][k] = (i == 0 && j == k) || (j == 0 && i == k) ? 1 : 0;
    // p_00^k fix: A_0 A_0 = A_0
    for (int64_t k = 0; k < m; ++k) s.p[0][0][k] = (k == 0) ? 1 : 0;

    for (int64_t i = 1; i < m; ++i)
        for (int64_t j = 1; j < m; ++j) {
            std::vector<int64_t> cell(m, -1);
            for (int32_t x = 0; x < n; ++x)
                for (int32_t y = 0; y < n; ++y) {
                    int64_t c = int64_t(Bits::count_and(fam.rels[i][x], fam.rels[j][y]));
                    int k = fam.rel(x, y);
                    if (cell[k] < 0) cell[k] = c;
                    else if (cell[k] != c) {
                        res.witness = "A_" + std::to_string(i) + "A_" + std::to_string(j) +
                                      " not constant on relation " + std::to_string(k) +
                                      " (pair " + std::to_string(x) + "," + std::to_string(y) +
                                      ": " + std::to_string(c) + " vs " + std::to_string(cell[k]) + ")";
                        return res;
                    }
                }
            for (int64_t k = 0; k < m; ++k) s.p[i][j][k] = std::max<int64_t>(cell[k], 0);
        }
    for (int64_t i = 0; i < m; ++i)
        for (int64_t j = 0; j < m; ++j)
            for (int64_t k = 0; k < m; ++k)
                if (s.p[i][j][k] != s.p[j][i][k]) {
                    res.witness = "p_ij^k != p_ji^k at (" + std::to_string(i) + "," +
                                  std::to_string(j) + "," + std::to_string(k) + ")";
                    return res;
                }
    res.ok = true;
    return res;
}

// ------------------------------------------------ exact rational eigenwork ---

namespace {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

// reduced row echelon form, returns pivot columns
std::vector<int> rref(RatMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pr = r;
        while (pr < rows && m[pr][c].num == 0) ++pr;
        if (pr == rows) continue;
        std::swap(m[pr], m[r]);
        Rat inv = Rat(1) / m[r][c];
        for (size_t j = 0; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].num == 0) continue;
            Rat f = m[i][c];
            for (size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(int(c));
        ++r;
    }
    return pivots;
}

RatMat nullspace(RatMat m) {
    size_t cols = m.empty() ? 0 : m[0].size();
    std::vector<int> piv = rref(m);
    std::vector<char> is_piv(cols, 0);
    for (int c : piv) is_piv[c] = 1;
    RatMat basis;
    for (size_t c = 0; c < cols; ++c) {
        if (is_piv[c]) continue;
        RatVec v(cols, Rat(0));
        v[c] = Rat(1);
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

// solve B^T x = v for x where the rows of B are independent; empty on failure
RatVec solve_in_basis(const RatMat& basis, const RatVec& v) {
    size_t dim = basis.size(), cols = v.size();
    RatMat aug(cols, RatVec(dim + 1, Rat(0)));
    for (size_t i = 0; i < cols; ++i) {
        for (size_t j = 0; j < dim; ++j) aug[i][j] = basis[j][i];
        aug[i][dim] = v[i];
    }
    rref(aug);
    RatVec x(dim, Rat(0));
    for (size_t r = 0; r < cols; ++r) {
        int lead = -1;
        for (size_t c = 0; c <= dim; ++c)
            if (aug[r][c].num != 0) { lead = int(c); break; }
        if (lead < 0) continue;
        if (lead == int(dim)) return {}; // inconsistent
        x[lead] = aug[r][dim];
        for (size_t c = lead + 1; c < dim; ++c)
            if (aug[r][c].num != 0) return {}; // not in echelon-solvable shape
    }
    return x;
}

// monic characteristic polynomial coefficients c (p(t) = t^n + c[0] t^{n-1} + ... + c[n-1])
RatVec char_poly(const RatMat& a) {
    size_t n = a.size();
    RatMat m(n, RatVec(n, Rat(0)));
    RatVec coeffs;
    RatMat prev = a;
    Rat c1 = Rat(0);
    for (size_t i = 0; i < n; ++i) c1 -= a[i][i];
    coeffs.push_back(c1);
    for (size_t k = 2; k <= n; ++k) {
        // prev = A * (prev_{k-1} + c_{k-1} I)
        RatMat tmp = prev;
        for (size_t i = 0; i < n; ++i) tmp[i][i] += coeffs.back();
        RatMat next(n, RatVec(n, Rat(0)));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                Rat acc(0);
                for (size_t l = 0; l < n; ++l)
                    if (a[i][l].num != 0 && tmp[l][j].num != 0) acc += a[i][l] * tmp[l][j];
                next[i][j] = acc;
            }
        Rat ck(0);
        for (size_t i = 0; i < n; ++i) ck -= next[i][i];
        ck /= Rat((long long)k);
        coeffs.push_back(ck);
        prev = std::move(next);
    }
    return coeffs;
}

// integer roots with multiplicity of a monic integer polynomial; roots are
// known to lie in [-bound, bound]; throws if the polynomial does not split
std::vector<int64_t> integer_roots(RatVec coeffs, int64_t bound) {
    std::vector<int64_t> roots;
    while (!coeffs.empty()) {
        bool found = false;
        for (int64_t r = -bound; r <= bound && !found; ++r) {
            // Horner on monic polynomial
            Rat acc(1);
            for (const Rat& c : coeffs) acc = acc * Rat(r) + c;
            if (acc.num == 0) {
                roots.push_back(r);
                // deflate: synthetic division by (t - r)
                RatVec next;
                Rat carry(1);
                for (size_t i = 0; i + 1 < coeffs.size(); ++i) {
                    carry = coeffs[i] + carry * Rat(r);
                    next.push_back(carry);
                }
                coeffs = std::move(next);
                found = true;
            }
        }
        if (!found)
            throw Error(Err::NonIntegerEigenvalue, "characteristic polynomial has a non-integer root");
    }
    return roots;
}

} // namespace

void eigenvalue_matrix(SchemeData& s) {
    int64_t m = int64_t(s.valencies.size());
    // intersection matrices: (C_j)_{ik} = p_ij^k acting on eigenvalue vectors
    std::vector<RatMat> C(m, RatMat(m, RatVec(m, Rat(0))));
    for (int64_t j = 0; j < m; ++j)
        for (int64_t i = 0; i < m; ++i)
            for (int64_t k = 0; k < m; ++k) C[j][i][k] = Rat(s.p[i][j][k]);

    // refine joint eigenspaces
    std::vector<RatMat> spaces;
    {
        RatMat full(m, RatVec(m, Rat(0)));
        for (int64_t i = 0; i < m; ++i) full[i][i] = Rat(1);
        spaces.push_back(full);
    }
    for (int64_t j = 1; j < m; ++j) {
        std::vector<RatMat> next;
        for (auto& V : spaces) {
            if (V.size() == 1) { next.push_back(V); continue; }
            size_t dim = V.size();
            // matrix of C_j restricted to V
            RatMat restr(dim, RatVec(dim, Rat(0)));
            for (size_t col = 0; col < dim; ++col) {
                RatVec img(m, Rat(0));
                for (int64_t r = 0; r < m; ++r)
                    for (int64_t c = 0; c < m; ++c)
                        if (C[j][r][c].num != 0 && V[col][c].num != 0) img[r] += C[j][r][c] * V[col][c];
                RatVec x = solve_in_basis(V, img);
                if (x.empty()) throw Error(Err::Invalid, "subspace not invariant");
                for (size_t r = 0; r < dim; ++r) restr[r][col] = x[r];
            }
            RatVec cp = char_poly(restr);
            std::vector<int64_t> roots = integer_roots(cp, s.valencies[j]);
            std::sort(roots.begin(), roots.end());
            roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
            for (int64_t lam : roots) {
                RatMat shifted = restr;
                for (size_t i = 0; i < dim; ++i) shifted[i][i] -= Rat(lam);
                RatMat kern = nullspace(shifted);
                if (kern.empty()) continue;
                RatMat lifted;
                for (const auto& kv : kern) {
                    RatVec w(m, Rat(0));
                    for (size_t bidx = 0; bidx < dim; ++bidx)
                        for (int64_t c = 0; c < m; ++c) w[c] += kv[bidx] * V[bidx][c];
                    lifted.push_back(std::move(w));
                }
                next.push_back(std::move(lifted));
            }
        }
        spaces = std::move(next);
    }
    if (int64_t(spaces.size()) != m)
        throw Error(Err::NonIntegerEigenvalue, "joint eigenspaces did not split to dimension one");

    std::vector<std::vector<int64_t>> rows;
    for (auto& V : spaces) {
        if (V.size() != 1) throw Error(Err::NonIntegerEigenvalue, "joint eigenspace of dimension > 1");
        RatVec v = V[0];
        if (v[0].num == 0) throw Error(Err::Invalid, "eigenvalue vector with zero first entry");
        Rat scale = Rat(1) / v[0];
        std::vector<int64_t> row;
        for (int64_t c = 0; c < m; ++c) {
            Rat e = v[c] * scale;
            if (!e.is_integer())
                throw Error(Err::NonIntegerEigenvalue, "non-integer eigenvalue entry");
            row.push_back(e.as_int());
        }
        rows.push_back(std::move(row));
    }

    // valency row first, remaining rows lexicographic
    std::vector<int64_t> val = s.valencies;
    auto it = std::find(rows.begin(), rows.end(), val);
    if (it == rows.end()) throw Error(Err::Invalid, "valency row missing from eigenvalue matrix");
    rows.erase(it);
    std::sort(rows.begin(), rows.end());
    s.P.clear();
    s.P.push_back(val);
    for (auto& r : rows) s.P.push_back(std::move(r));

    // multiplicities: m_r = n / sum_i P_ri^2 / v_i
    s.multiplicities.clear();
    int64_t total = 0;
    for (const auto& row : s.P) {
        Rat denom(0);
        for (int64_t i = 0; i < m; ++i)
            denom += Rat(row[i] * row[i], s.valencies[i]);
        Rat mult = Rat(s.n) / denom;
        if (!mult.is_integer() || mult.num <= 0)
            throw Error(Err::Invalid, "non-integer multiplicity");
        s.multiplicities.push_back(mult.as_int());
        total += mult.as_int();
    }
    if (total != s.n) throw Error(Err::Invalid, "multiplicities do not sum to n");
}

// ------------------------------------------------------------ closed forms ---

std::vector<std::vector<int64_t>> reference_matrix(MatrixKind kind, int64_t q) {
    switch (kind) {
    case MatrixKind::MobiusEven:
        return {{1, q * q - 1, q * q * (q + 1) / 2, q * (q - 1) * (q - 2) / 2},
                {1, q - 1, -q, 0},
                {1, -2, q * (q - 1) / 2, -(q + 1) * (q - 2) / 2},
                {1, -(q + 1), 0, q}};
    case MatrixKind::LaguerreOdd:
        return {{1, q * q - 1, q * (q * q - 1) / 2, q * (q - 1) * (q - 1) / 2},
                {1, -1, q * (q - 1) / 2, -q * (q - 1) / 2},
                {1, q - 1, -q, 0},
                {1, -(q + 1), 0, q}};
    case MatrixKind::MinkowskiEven:
        return {{1, q * q - 1, q * (q + 1) * (q - 2) / 2, (q - 1) * q * q / 2},
                {1, q - 1, -q, 0},
                {1, -(q + 1), 0, q},
                {1, 0, (q * q - q - 2) / 2, -(q - 1) * q / 2}};
    case MatrixKind::ExtendedLaguerre:
        return {{1, (q + 2) * (q + 1) / 2 * (q - 1), (q - 1) * (q - 1) * q / 2},
                {1, -(q + 2) / 2, q / 2},
                {1, (q + 1) * (q - 2) / 2, -(q - 1) * q / 2}};
    case MatrixKind::MinkowskiOddSpliced: {
        std::vector<std::vector<int64_t>> m = {
            {1, q * q - 1, q * (q - 3) * (q + 1) / 4, q * (q * q - 1) / 4, q * (q - 1) * (q - 1) / 4,
             q * (q * q - 1) / 4},
            {1, q * q - 1, q * (q - 3) * (q + 1) / 4, -q * (q * q - 1) / 4,
             q * (q - 1) * (q - 1) / 4, -q * (q * q - 1) / 4},
            {1, 0, (q - 3) * (q + 1) / 4, (q * q - 1) / 4, -(q - 1) * (q - 1) / 4, -(q * q - 1) / 4},
            {1, 0, (q - 3) * (q + 1) / 4, -(q * q - 1) / 4, -(q - 1) * (q - 1) / 4, (q * q - 1) / 4},
            {1, -(q + 1), 0, 0, q, 0},
            {1, q - 1, -q, 0, 0, 0}};
        if (q == 3) {
            // relation R2 is empty and the last eigenspace has dimension 0
            m.pop_back();
            for (auto& row : m) row.erase(row.begin() + 2);
        }
        return m;
    }
    }
    throw Error(Err::Invalid, "unknown matrix kind");
}

std::vector<int64_t> reference_multiplicities_6x6(int64_t q) {
    std::vector<int64_t> m = {1, 1, q * q, q * q, (q - 1) * (q - 1) * (q - 1) / 2,
                              (q + 1) * (q + 1) * (q - 3) / 2};
    if (q == 3) m.pop_back();
    return m;
}

bool same_rows_up_to_permutation(const std::vector<std::vector<int64_t>>& a,
                                 const std::vector<std::vector<int64_t>>& b) {
    if (a.size() != b.size()) return false;
    auto sa = a, sb = b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    return sa == sb;
}

int64_t closed_m1(int64_t q, int rho) { return q * (q - 3 + rho) * (q - 3 + rho) / 4; }
int64_t closed_m2(int64_t q, int rho) {
    return (q - 1) * (q * q + 2 * (rho - 2) * (q - 1) + 1) / 4;
}
int64_t closed_m3(int64_t q, int rho) { return (q - 1) * (q - 1) * (q - 3 + 2 * rho) / 4; }
int64_t closed_p133(int64_t q, int rho) { return q * (q - 2 + rho) * (q - 4 + rho) / 4; }
int64_t closed_p233(int64_t q, int rho) { return (q - 1) * (q - 2 + rho) * (q - 2 + rho) / 4; }

} // namespace benz
