#include <algorithm>
#include <cmath>
#include <cstring>

#include "benz/spectral.hpp"

namespace benz {

// ------------------------------------------------------------- G_i graphs ---

GiGraph graph_Gi(const CircleGeometry& g, int i) {
    GiGraph out;
    out.i = i;
    int64_t n = g.num_circles();
    out.adj.assign(n, Bits(n));
    for (int32_t x = 0; x < n; ++x)
        for (int32_t y = x + 1; y < n; ++y)
            if (g.intersection_size(x, y) == i) {
                out.adj[x].set(y);
                out.adj[y].set(x);
            }
    out.regular = true;
    out.degree = n ? int64_t(out.adj[0].count()) : 0;
    for (int32_t x = 1; x < n; ++x)
        if (int64_t(out.adj[x].count()) != out.degree) { out.regular = false; out.degree = -1; break; }

    std::vector<char> seen(n, 0);
    for (int32_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int32_t> comp, stack = {s};
        seen[s] = 1;
        while (!stack.empty()) {
            int32_t v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            out.adj[v].for_each([&](size_t w) {
                if (!seen[w]) { seen[w] = 1; stack.push_back(int32_t(w)); }
            });
        }
        std::sort(comp.begin(), comp.end());
        out.components.push_back(std::move(comp));
    }
    return out;
}

DezaReport deza_check(const CircleGeometry& g, const GiGraph& g1,
                      const std::vector<int32_t>& component) {
    DezaReport rep;
    int64_t q = g.q;
    rep.value_meet = 2 * (q - 1);
    rep.value_disjoint = 2 * (q + 1);
    rep.ok = true;
    for (size_t a = 0; a < component.size() && rep.ok; ++a)
        for (size_t b = a + 1; b < component.size(); ++b) {
            int32_t u = component[a], v = component[b];
            int64_t common = int64_t(Bits::count_and(g1.adj[u], g1.adj[v]));
            int64_t s = g.intersection_size(u, v);
            int64_t want = (s == 0) ? rep.value_disjoint : rep.value_meet;
            if (common != want) {
                rep.ok = false;
                rep.witness = "pair (" + std::to_string(u) + "," + std::to_string(v) + ") |s|=" +
                              std::to_string(s) + " has " + std::to_string(common) +
                              " common neighbours, expected " + std::to_string(want);
                break;
            }
        }
    return rep;
}

G1IsoReport g1_isomorphism_check(const FieldSpec& F, int k) {
    G1IsoReport rep;
    CircleGeometry base = minkowski_sharply3(F, 0);
    CircleGeometry twisted = minkowski_sharply3(F, k);
    GiGraph a = graph_Gi(base, 1);
    GiGraph b = graph_Gi(twisted, 1);
    // circle i is the graph of f_{M_i} in both models: M -> f_M is the map
    int64_t n = base.num_circles();
    rep.ok = true;
    for (int32_t x = 0; x < n; ++x) {
        if (!(a.adj[x] == b.adj[x])) {
            rep.ok = false;
            rep.witness = "adjacency differs at vertex " + std::to_string(x);
            break;
        }
    }
    rep.pairs_checked = n * n;
    return rep;
}

// -------------------------------------------------------- exact spectrum ---

namespace {

using u128 = unsigned __int128;

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) { return uint64_t(u128(a) * b % m); }

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool miller_rabin(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { comp = false; break; }
        }
        if (comp) return false;
    }
    return true;
}

std::vector<uint64_t> primes_61bit(int count) {
    std::vector<uint64_t> ps;
    uint64_t c = (uint64_t(1) << 61) - 1; // M61 is prime
    while (int(ps.size()) < count) {
        if (miller_rabin(c)) ps.push_back(c);
        c -= 2;
    }
    return ps;
}

// Jacobi eigenvalues of a symmetric matrix (values only)
std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
    size_t n = a.size();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
        if (off < 1e-18) break;
        for (size_t p = 0; p < n; ++p)
            for (size_t q = p + 1; q < n; ++q) {
                if (std::fabs(a[p][q]) < 1e-15) continue;
                double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1), s = t * c;
                for (size_t k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (size_t k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> eig(n);
    for (size_t i = 0; i < n; ++i) eig[i] = a[i][i];
    return eig;
}

int64_t rank_mod_p(std::vector<std::vector<uint64_t>> m, uint64_t p) {
    size_t rows = m.size(), cols = rows ? m[0].size() : 0, r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        uint64_t inv = powmod(m[r][c], p - 2, p);
        for (size_t j = c; j < cols; ++j) m[r][j] = mulmod(m[r][j], inv, p);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            uint64_t f = m[i][c];
            for (size_t j = c; j < cols; ++j)
                m[i][j] = (m[i][j] + p - mulmod(f, m[r][j], p)) % p;
        }
        ++r;
    }
    return int64_t(r);
}

} // namespace

std::vector<std::pair<int64_t, int64_t>> exact_integer_spectrum(
    const std::vector<std::vector<int64_t>>& sym) {
    size_t n = sym.size();
    if (n == 0) return {};

    std::vector<std::vector<double>> ad(n, std::vector<double>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) ad[i][j] = double(sym[i][j]);
    std::vector<double> approx = jacobi_eigenvalues(std::move(ad));

    std::vector<int64_t> cands;
    for (double v : approx) {
        double r = std::nearbyint(v);
        if (std::fabs(v - r) > 0.25)
            throw Error(Err::NonIntegerEigenvalue,
                        "numeric eigenvalue " + std::to_string(v) + " is not near an integer");
        cands.push_back(int64_t(r));
    }
    std::sort(cands.begin(), cands.end(), std::greater<int64_t>());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    size_t t = cands.size();

    int64_t maxabs = 0;
    for (const auto& row : sym)
        for (int64_t v : row) maxabs = std::max<int64_t>(maxabs, v < 0 ? -v : v);
    for (int64_t c : cands) maxabs = std::max<int64_t>(maxabs, c < 0 ? -c : c);

    // entry bound of the annihilating product: (n * 2*maxabs)^t
    double log2bound = double(t) * std::log2(double(n) * 2.0 * double(maxabs) + 1.0) + 1.0;
    int nprimes = int(log2bound / 60.0) + 1;
    std::vector<uint64_t> primes = primes_61bit(nprimes);

    // Pi (A - lambda I) must vanish identically
    for (uint64_t p : primes) {
        std::vector<std::vector<uint64_t>> acc(n, std::vector<uint64_t>(n, 0)),
            am(n, std::vector<uint64_t>(n));
        for (size_t i = 0; i < n; ++i) acc[i][i] = 1;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                am[i][j] = uint64_t(((sym[i][j]) % int64_t(p) + int64_t(p)) % int64_t(p));
        for (int64_t lam : cands) {
            uint64_t lm = uint64_t(((lam) % int64_t(p) + int64_t(p)) % int64_t(p));
            std::vector<std::vector<uint64_t>> factor = am;
            for (size_t i = 0; i < n; ++i) factor[i][i] = (factor[i][i] + p - lm) % p;
            std::vector<std::vector<uint64_t>> next(n, std::vector<uint64_t>(n, 0));
            for (size_t i = 0; i < n; ++i)
                for (size_t k = 0; k < n; ++k) {
                    if (acc[i][k] == 0) continue;
                    uint64_t a = acc[i][k];
                    for (size_t j = 0; j < n; ++j)
                        next[i][j] = (next[i][j] + u128(a) * factor[k][j]) % p;
                }
            acc = std::move(next);
        }
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (acc[i][j] != 0)
                    throw Error(Err::NonIntegerEigenvalue,
                                "candidate eigenvalues do not annihilate the matrix");
    }

    // multiplicities: m_lambda = n - rank(A - lambda I); the mod-p rank equals
    // the rational rank here because sum over candidates of the mod-p
    // nullities cannot exceed n, while each is >= the rational nullity
    uint64_t p0 = primes[0];
    std::vector<std::pair<int64_t, int64_t>> spectrum;
    int64_t total = 0;
    for (int64_t lam : cands) {
        std::vector<std::vector<uint64_t>> m(n, std::vector<uint64_t>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                int64_t v = sym[i][j] - (i == j ? lam : 0);
                m[i][j] = uint64_t((v % int64_t(p0) + int64_t(p0)) % int64_t(p0));
            }
        int64_t mult = int64_t(n) - rank_mod_p(std::move(m), p0);
        if (mult > 0) spectrum.push_back({lam, mult});
        total += mult;
    }
    if (total != int64_t(n))
        throw Error(Err::NonIntegerEigenvalue, "multiplicities do not sum to the dimension");
    return spectrum;
}

// -------------------------------------------------------------- G_P suite ---

namespace {

bool is_typed_odd(const CircleGeometry& g) {
    return !g.circle_type.empty() && g.q % 2 == 1 && (g.rho == 0 || g.rho == 2);
}

// exact check N v = lambda v for a sparse +-1 test vector
bool is_eigenvector(const std::vector<std::vector<int64_t>>& N,
                    const std::vector<int64_t>& v, int64_t lambda) {
    size_t n = N.size();
    for (size_t i = 0; i < n; ++i) {
        __int128 acc = 0;
        for (size_t j = 0; j < n; ++j)
            if (v[j]) acc += __int128(N[i][j]) * v[j];
        if (acc != __int128(lambda) * v[i]) return false;
    }
    return true;
}

} // namespace

GPProfile gp_profile(const CircleGeometry& g, int32_t base) {
    GPProfile prof;
    prof.base = base;
    int64_t q = g.q;
    int rho = g.rho;

    auto blocks_ids = pencil_blocks(g, base);
    for (const auto& blk : blocks_ids) {
        std::vector<int32_t> pos;
        for (int32_t c : blk) {
            pos.push_back(int32_t(prof.L.size()));
            prof.L.push_back(c);
        }
        prof.blocks.push_back(std::move(pos));
    }
    Bits inL(g.num_circles());
    for (int32_t c : prof.L) inL.set(c);
    for (int32_t c = 0; c < g.num_circles(); ++c)
        if (!inL.test(c)) prof.R.push_back(c);

    if (is_typed_odd(g)) {
        // residue parallel classes are uniformly typed, square half first
        int64_t h = (q + 1 - rho) / 2;
        if (int64_t(prof.blocks.size()) != 2 * h)
            throw Error(Err::Invalid, "unexpected tangency block count");
        for (int64_t b = 0; b < int64_t(prof.blocks.size()); ++b) {
            int8_t t0 = g.circle_type[prof.L[prof.blocks[b][0]]];
            if (t0 != (b < h ? 0 : 1))
                throw Error(Err::Invalid, "square-type blocks not split in halves");
            for (int32_t pos : prof.blocks[b])
                if (g.circle_type[prof.L[pos]] != t0)
                    throw Error(Err::Invalid, "tangency block of mixed square type");
        }
    }

    // bipartite disjointness adjacency
    int64_t nl = int64_t(prof.L.size()), nr = int64_t(prof.R.size());
    std::vector<Bits> rows(nl, Bits(nr));
    for (int64_t i = 0; i < nl; ++i)
        for (int64_t j = 0; j < nr; ++j)
            if (g.intersection_size(prof.L[i], prof.R[j]) == 0) rows[i].set(j);

    prof.delta = (q + rho - 2) * q * (q - 1) / 2;
    prof.r_degree = (q + rho - 2) * (q + 1 - rho) / 2;
    prof.degrees_ok = true;
    for (int64_t i = 0; i < nl; ++i)
        if (int64_t(rows[i].count()) != prof.delta) { prof.degrees_ok = false; break; }
    if (prof.degrees_ok) {
        std::vector<int64_t> rdeg(nr, 0);
        for (int64_t i = 0; i < nl; ++i)
            rows[i].for_each([&](size_t j) { rdeg[j]++; });
        for (int64_t j = 0; j < nr; ++j)
            if (rdeg[j] != prof.r_degree) { prof.degrees_ok = false; break; }
    }

    prof.N.assign(nl, std::vector<int64_t>(nl, 0));
    for (int64_t i = 0; i < nl; ++i)
        for (int64_t j = i; j < nl; ++j)
            prof.N[i][j] = prof.N[j][i] = int64_t(Bits::count_and(rows[i], rows[j]));

    prof.spectrum = exact_integer_spectrum(prof.N);
    if (prof.spectrum.size() >= 2)
        prof.lambda2_squared =
            prof.spectrum[0].second > 1 ? prof.spectrum[0].first : prof.spectrum[1].first;
    else if (!prof.spectrum.empty())
        prof.lambda2_squared = prof.spectrum[0].first;

    // a plain even-order Laguerre plane has the same disjointness graph as
    // its extension, so it inherits the extended closed form
    bool uniform_n = g.extended || (q % 2 == 0 && rho == 1);
    if (uniform_n)
        prof.lambda2_closed_form = q * q * (q - 1) / 4;
    else if (is_typed_odd(g))
        prof.lambda2_closed_form = q * (q * q - 1) / 4;
    else if ((q % 2 == 0 && (rho == 0 || rho == 2)) || (q % 2 == 1 && rho == 1))
        prof.lambda2_closed_form = q * (q + 2 - rho) * (q - 2 + rho) / 4;

    // claimed eigenvector families
    prof.eigenvectors_ok = true;
    auto check = [&](const std::vector<int64_t>& v, int64_t lam) {
        if (!is_eigenvector(prof.N, v, lam)) prof.eigenvectors_ok = false;
    };
    std::vector<int64_t> ones(nl, 1);
    check(ones, prof.delta * prof.r_degree);
    if (uniform_n) {
        int64_t c = (q - 2) * (q - 1) * q / 4;
        for (int64_t j = 1; j < nl; ++j) {
            std::vector<int64_t> v(nl, 0);
            v[0] = 1;
            v[j] = -1;
            check(v, prof.delta - c);
        }
    } else if (is_typed_odd(g)) {
        int64_t m1 = closed_m1(q, rho), m2 = closed_m2(q, rho), m3 = closed_m3(q, rho);
        int64_t h = (q + 1 - rho) / 2;
        for (const auto& blk : prof.blocks)
            for (size_t tpos = 1; tpos < blk.size(); ++tpos) {
                std::vector<int64_t> v(nl, 0);
                v[blk[0]] = 1;
                v[blk[tpos]] = -1;
                check(v, prof.delta - m1);
            }
        for (int64_t half = 0; half < 2; ++half)
            for (int64_t b = 1; b < h; ++b) {
                std::vector<int64_t> v(nl, 0);
                for (int32_t pos : prof.blocks[half * h]) v[pos] = 1;
                for (int32_t pos : prof.blocks[half * h + b]) v[pos] = -1;
                check(v, 0);
            }
        {
            std::vector<int64_t> v(nl, 0);
            for (int64_t b = 0; b < h; ++b)
                for (int32_t pos : prof.blocks[b]) v[pos] = 1;
            for (int64_t b = h; b < 2 * h; ++b)
                for (int32_t pos : prof.blocks[b]) v[pos] = -1;
            check(v, prof.delta + (q - 1) * m1 + q * ((q - 1 - rho) / 2) * m2 -
                         q * ((q + 1 - rho) / 2) * m3);
        }
    } else {
        int64_t p1 = closed_p133(q, rho), p2 = closed_p233(q, rho);
        check(ones, prof.delta + p1 * (q - 1) + p2 * (q - rho) * q);
        for (const auto& blk : prof.blocks)
            for (size_t tpos = 1; tpos < blk.size(); ++tpos) {
                std::vector<int64_t> v(nl, 0);
                v[blk[0]] = 1;
                v[blk[tpos]] = -1;
                check(v, prof.delta - p1);
            }
        for (size_t b = 1; b < prof.blocks.size(); ++b) {
            std::vector<int64_t> v(nl, 0);
            for (int32_t pos : prof.blocks[0]) v[pos] = 1;
            for (int32_t pos : prof.blocks[b]) v[pos] = -1;
            check(v, 0);
        }
    }
    return prof;
}

N00Pair n00_pair(const CircleGeometry& g, int32_t base, int32_t c1, int32_t c2) {
    if (g.extended) throw Error(Err::Invalid, "counting formula applies to ordinary CM(rho,q)");
    N00Pair out;
    int64_t q = g.q;
    int rho = g.rho;
    out.s = g.intersection_size(c1, c2);
    for (int32_t c = 0; c < g.num_circles(); ++c) {
        if (g.circle_bits[c].test(base)) continue;
        int64_t s1 = g.intersection_size(c, c1), s2 = g.intersection_size(c, c2);
        if (s1 == 0 && s2 == 0) out.n00++;
        if (s1 == 1 && s2 == 1) out.n11++;
    }
    Rat formula = Rat((q - out.s + 1) * (q - 3 + rho + out.s) * (q - 5 + rho + out.s), 4) +
                  Rat(out.n11, 4);
    out.formula_ok = (formula == Rat(out.n00));
    if (is_typed_odd(g)) {
        out.same_type = g.circle_type[c1] == g.circle_type[c2];
        if (out.s == 1)
            out.resolved = closed_m1(q, rho);
        else if (out.s == 2)
            out.resolved = out.same_type ? closed_m2(q, rho) : closed_m3(q, rho);
    }
    return out;
}

SweepReport n00_sweep(const CircleGeometry& g, const std::vector<int32_t>& base_points) {
    SweepReport rep;
    rep.ok = true;
    for (int32_t p : base_points) {
        const auto& pen = g.pencil(p);
        for (size_t i = 0; i < pen.size() && rep.ok; ++i)
            for (size_t j = i + 1; j < pen.size(); ++j) {
                N00Pair pair = n00_pair(g, p, pen[i], pen[j]);
                bool ok = pair.formula_ok && (pair.resolved < 0 || pair.resolved == pair.n00);
                ++rep.checked;
                if (!ok) {
                    rep.ok = false;
                    rep.witness = "P=" + std::to_string(p) + " circles (" + std::to_string(pen[i]) +
                                  "," + std::to_string(pen[j]) + "): n00=" + std::to_string(pair.n00) +
                                  " n11=" + std::to_string(pair.n11) + " s=" + std::to_string(pair.s);
                    break;
                }
            }
        if (!rep.ok) break;
    }
    return rep;
}

SweepReport square_split_check(const CircleGeometry& g) {
    SweepReport rep;
    if (g.circle_type.empty() || g.q % 2 == 0)
        throw Error(Err::WrongParity, "square-type split needs a typed odd-order geometry");
    rep.ok = true;
    for (int32_t p = 0; p < g.num_points(); ++p) {
        const auto& pen = g.pencil(p);
        int64_t sq = 0;
        for (int32_t c : pen)
            if (g.circle_type[c] == 0) ++sq;
        ++rep.checked;
        if (2 * sq != int64_t(pen.size())) {
            rep.ok = false;
            rep.witness = "point " + std::to_string(p) + ": " + std::to_string(sq) + " of " +
                          std::to_string(pen.size()) + " circles are square";
            break;
        }
    }
    return rep;
}

} // namespace benz
