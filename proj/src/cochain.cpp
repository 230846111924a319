#include "triplesym/cochain.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

namespace triplesym {

namespace {

int imod(long long a, int m) {
    int r = (int)(a % m);
    return r < 0 ? r + m : r;
}

long long llgcd(long long a, long long b) {
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

// x with a*x == 1 mod m (gcd(a,m) = 1).
long long llinv(long long a, long long m) {
    long long r0 = m, r1 = imod(a, (int)m), s0 = 0, s1 = 1;
    while (r1) {
        long long q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    return ((s0 % m) + m) % m;
}

void require_same_context(const Cochain& a, const Cochain& b) {
    if (a.group != b.group || a.modulus != b.modulus)
        throw Error("CochainMismatch", "operands live on different groups or moduli");
}

}  // namespace

GroupPtr make_group(std::vector<std::vector<int>> table) {
    const int m = (int)table.size();
    if (m == 0) throw Error("NotAGroup", "empty table");
    for (const auto& row : table) {
        if ((int)row.size() != m) throw Error("NotAGroup", "table is not square");
        for (int v : row)
            if (v < 0 || v >= m) throw Error("NotAGroup", "entry outside element range");
    }
    int identity = -1;
    for (int e = 0; e < m; ++e) {
        bool ok = true;
        for (int g = 0; g < m && ok; ++g) ok = table[e][g] == g && table[g][e] == g;
        if (ok) {
            identity = e;
            break;
        }
    }
    if (identity < 0) throw Error("NotAGroup", "no two-sided identity");
    std::vector<int> inverse(m, -1);
    for (int g = 0; g < m; ++g) {
        for (int h = 0; h < m; ++h)
            if (table[g][h] == identity && table[h][g] == identity) {
                inverse[g] = h;
                break;
            }
        if (inverse[g] < 0) throw Error("NotAGroup", "element without inverse");
    }
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw Error("NotAGroup", "associativity fails");
    auto g = std::make_shared<FiniteGroup>();
    g->order = m;
    g->table = std::move(table);
    g->identity = identity;
    g->inverse = std::move(inverse);
    return g;
}

GroupPtr cyclic_group(int n) {
    if (n < 1) throw Error("NotAGroup", "cyclic group needs n >= 1");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return make_group(std::move(t));
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
    const int m = a->order * b->order;
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    auto pack = [&](int x, int y) { return x * b->order + y; };
    for (int x1 = 0; x1 < a->order; ++x1)
        for (int y1 = 0; y1 < b->order; ++y1)
            for (int x2 = 0; x2 < a->order; ++x2)
                for (int y2 = 0; y2 < b->order; ++y2)
                    t[pack(x1, y1)][pack(x2, y2)] = pack(a->table[x1][x2], b->table[y1][y2]);
    return make_group(std::move(t));
}

GroupPtr dihedral_group(int m) {
    if (m < 1) throw Error("NotAGroup", "dihedral group needs m >= 1");
    // element s^e r^k encoded as e*m + k; s r^k s = r^-k
    const int order = 2 * m;
    std::vector<std::vector<int>> t(order, std::vector<int>(order));
    for (int e1 = 0; e1 < 2; ++e1)
        for (int k1 = 0; k1 < m; ++k1)
            for (int e2 = 0; e2 < 2; ++e2)
                for (int k2 = 0; k2 < m; ++k2) {
                    // (s^e1 r^k1)(s^e2 r^k2) = s^(e1+e2) r^(k2 + k1 or -k1)
                    int k = e2 == 0 ? imod(k1 + k2, m) : imod(k2 - k1, m);
                    t[e1 * m + k1][e2 * m + k2] = ((e1 + e2) % 2) * m + k;
                }
    return make_group(std::move(t));
}

int element_order(const FiniteGroup& g, int x) {
    int acc = x, k = 1;
    while (acc != g.identity) {
        acc = g.table[acc][x];
        ++k;
        if (k > g.order) throw Error("NotAGroup", "element order exceeds group order");
    }
    return k;
}

namespace {

// Assigns images element by element; products between assigned elements must
// already match, products with unassigned results are checked once those get
// their image.
bool extend_isomorphism(const FiniteGroup& a, const FiniteGroup& b,
                        const std::vector<int>& ord_a, const std::vector<int>& ord_b,
                        std::vector<int>& img, std::vector<bool>& used, int g) {
    if (g == a.order) return true;
    if (img[g] >= 0) return extend_isomorphism(a, b, ord_a, ord_b, img, used, g + 1);
    for (int h = 0; h < b.order; ++h) {
        if (used[h] || ord_b[h] != ord_a[g]) continue;
        bool ok = true;
        for (int x = 0; x <= g && ok; ++x) {
            if (img[x] < 0) continue;
            int z = a.table[x][g];
            if (img[z] >= 0 && img[z] != b.table[img[x]][h]) ok = false;
            z = a.table[g][x];
            if (img[z] >= 0 && img[z] != b.table[h][img[x]]) ok = false;
        }
        if (!ok) continue;
        img[g] = h;
        used[h] = true;
        if (extend_isomorphism(a, b, ord_a, ord_b, img, used, g + 1)) return true;
        img[g] = -1;
        used[h] = false;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
    if (a.order != b.order) return std::nullopt;
    std::vector<int> ord_a(a.order), ord_b(b.order);
    for (int x = 0; x < a.order; ++x) ord_a[x] = element_order(a, x);
    for (int x = 0; x < b.order; ++x) ord_b[x] = element_order(b, x);
    {
        auto sa = ord_a, sb = ord_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    std::vector<int> img(a.order, -1);
    std::vector<bool> used(b.order, false);
    img[a.identity] = b.identity;
    used[b.identity] = true;
    if (!extend_isomorphism(a, b, ord_a, ord_b, img, used, 0)) return std::nullopt;
    // final full verification of the homomorphism property
    for (int x = 0; x < a.order; ++x)
        for (int y = 0; y < a.order; ++y)
            if (img[a.table[x][y]] != b.table[img[x]][img[y]])
                throw Error("SolverInconsistency", "isomorphism search returned a non-map");
    return img;
}

// ---------------------------------------------------------------------------
// Cochains

bool Cochain::is_zero() const {
    return std::all_of(values.begin(), values.end(), [](int v) { return v == 0; });
}

namespace {

size_t table_size(const FiniteGroup& g, int degree) {
    size_t s = 1;
    for (int i = 0; i < degree; ++i) s *= (size_t)g.order;
    return s;
}

void check_cochain_args(const GroupPtr& g, int degree, int n) {
    if (!g) throw Error("CochainMismatch", "null group");
    if (g->order > kMaxCochainGroupOrder)
        throw Error("GroupTooLarge", "cochain groups are capped at " +
                                         std::to_string(kMaxCochainGroupOrder) + " elements");
    if (degree < 1 || degree > 3) throw Error("BadDegree", "cochain degree must be 1, 2 or 3");
    if (n < 2) throw Error("BadModulus", "coefficient modulus must be at least 2");
}

}  // namespace

Cochain zero_cochain(const GroupPtr& g, int degree, int n) {
    check_cochain_args(g, degree, n);
    return Cochain{g, degree, n, std::vector<int>(table_size(*g, degree), 0)};
}

Cochain cochain_from(const GroupPtr& g, int degree, int n,
                     const std::function<int(const std::vector<int>&)>& f) {
    Cochain c = zero_cochain(g, degree, n);
    std::vector<int> tuple(degree, 0);
    for (size_t idx = 0; idx < c.values.size(); ++idx) {
        size_t rest = idx;
        for (int i = degree - 1; i >= 0; --i) {
            tuple[i] = (int)(rest % g->order);
            rest /= g->order;
        }
        c.values[idx] = imod(f(tuple), n);
    }
    return c;
}

Cochain add(const Cochain& a, const Cochain& b) {
    require_same_context(a, b);
    if (a.degree != b.degree) throw Error("CochainMismatch", "adding different degrees");
    Cochain out = a;
    for (size_t i = 0; i < out.values.size(); ++i)
        out.values[i] = imod(out.values[i] + b.values[i], a.modulus);
    return out;
}

Cochain negate(const Cochain& a) {
    Cochain out = a;
    for (int& v : out.values) v = imod(-v, a.modulus);
    return out;
}

bool is_homomorphism(const Cochain& chi) {
    if (chi.degree != 1) return false;
    const FiniteGroup& g = *chi.group;
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y)
            if (chi.at(g.table[x][y]) != imod(chi.at(x) + chi.at(y), chi.modulus)) return false;
    return true;
}

Cochain coboundary(const Cochain& f) {
    const FiniteGroup& g = *f.group;
    const int n = f.modulus;
    if (f.degree == 1) {
        Cochain out = zero_cochain(f.group, 2, n);
        for (int a = 0; a < g.order; ++a)
            for (int b = 0; b < g.order; ++b)
                out.values[a * g.order + b] = imod(f.at(b) - f.at(g.table[a][b]) + f.at(a), n);
        return out;
    }
    if (f.degree == 2) {
        Cochain out = zero_cochain(f.group, 3, n);
        for (int a = 0; a < g.order; ++a)
            for (int b = 0; b < g.order; ++b)
                for (int c = 0; c < g.order; ++c)
                    out.values[(a * g.order + b) * g.order + c] =
                        imod(f.at(b, c) - f.at(g.table[a][b], c) + f.at(a, g.table[b][c]) -
                                 f.at(a, b),
                             n);
        return out;
    }
    throw Error("BadDegree", "coboundary implemented for degrees 1 and 2");
}

bool is_cocycle(const Cochain& f) {
    if (f.degree == 3) throw Error("BadDegree", "no degree-4 coboundary to test against");
    return coboundary(f).is_zero();
}

Cochain cup(const Cochain& f, const Cochain& g) {
    require_same_context(f, g);
    const FiniteGroup& gr = *f.group;
    const int n = f.modulus;
    if (f.degree == 1 && g.degree == 1) {
        Cochain out = zero_cochain(f.group, 2, n);
        for (int a = 0; a < gr.order; ++a)
            for (int b = 0; b < gr.order; ++b)
                out.values[a * gr.order + b] = imod((long long)f.at(a) * g.at(b), n);
        return out;
    }
    if (f.degree + g.degree == 3) {
        Cochain out = zero_cochain(f.group, 3, n);
        for (int a = 0; a < gr.order; ++a)
            for (int b = 0; b < gr.order; ++b)
                for (int c = 0; c < gr.order; ++c) {
                    long long v = f.degree == 1 ? (long long)f.at(a) * g.at(b, c)
                                                : (long long)f.at(a, b) * g.at(c);
                    out.values[(a * gr.order + b) * gr.order + c] = imod(v, n);
                }
        return out;
    }
    throw Error("BadDegree", "cup supports degrees (1,1), (1,2) and (2,1)");
}

// ---------------------------------------------------------------------------
// Coboundary solver: diagonalize the integer matrix of d^1 : C^1 -> C^2 by
// row and column operations (Smith reduction without the divisor-chain
// cleanup, which solving does not need), then solve the diagonal system
// mod n coordinate by coordinate.

namespace {

class CobSolver {
public:
    // Solves d(x) = c for c of degree tdeg (2 or 3) on g.
    CobSolver(const GroupPtr& g, int n, int tdeg = 2) : group_(g), n_(n), tdeg_(tdeg) {
        const int m = g->order;
        if (tdeg == 2) {
            rows_ = m * m;
            cols_ = m;
        } else {
            if (m > 9)
                throw Error("GroupTooLarge",
                            "degree-3 coboundary solving is capped at 9 elements");
            rows_ = m * m * m;
            cols_ = m * m;
        }
        std::vector<std::vector<long long>> a(rows_, std::vector<long long>(cols_, 0));
        if (tdeg == 2) {
            for (int g1 = 0; g1 < m; ++g1)
                for (int g2 = 0; g2 < m; ++g2) {
                    int r = g1 * m + g2;
                    a[r][g2] += 1;
                    a[r][g->table[g1][g2]] -= 1;
                    a[r][g1] += 1;
                }
        } else {
            for (int g1 = 0; g1 < m; ++g1)
                for (int g2 = 0; g2 < m; ++g2)
                    for (int g3 = 0; g3 < m; ++g3) {
                        int r = (g1 * m + g2) * m + g3;
                        a[r][g2 * m + g3] += 1;
                        a[r][g->table[g1][g2] * m + g3] -= 1;
                        a[r][g1 * m + g->table[g2][g3]] += 1;
                        a[r][g1 * m + g2] -= 1;
                    }
        }
        v_.assign(cols_, std::vector<long long>(cols_, 0));
        for (int i = 0; i < cols_; ++i) v_[i][i] = 1;
        diagonalize(a);
    }

    // Canonical x with dx = c mod n, free coordinates zero.
    std::optional<Cochain> solve(const Cochain& c) const {
        std::vector<long long> rhs = transform_rhs(c);
        std::vector<long long> xp(cols_, 0);
        for (int k = 0; k < cols_; ++k) {
            long long d = diag_[k];
            long long g = llgcd(d, n_);
            if (g == 0) g = n_;
            if (imod(rhs[k], (int)g) != 0) return std::nullopt;
            long long m2 = n_ / g;
            if (d != 0 && m2 > 1)
                xp[k] = imod(imod(rhs[k] / g, (int)m2) * llinv(d / g, m2), (int)m2);
        }
        for (int k = cols_; k < rows_; ++k)
            if (imod(rhs[k], n_) != 0) return std::nullopt;
        Cochain x = zero_cochain(group_, tdeg_ - 1, n_);
        for (int i = 0; i < cols_; ++i) {
            long long s = 0;
            for (int k = 0; k < cols_; ++k) s += v_[i][k] * xp[k];
            x.values[i] = imod(s, n_);
        }
        if (!add(coboundary(x), negate(stripped(c))).is_zero())
            throw Error("SolverInconsistency", "diagonal witness failed the exact recheck");
        return x;
    }

    // Linear invariant vanishing exactly on coboundary classes; slot k lives
    // in Z / key_moduli()[k].
    std::vector<int> class_key(const Cochain& c) const {
        std::vector<long long> rhs = transform_rhs(c);
        std::vector<int> mods = key_moduli();
        std::vector<int> key;
        key.reserve(rows_);
        for (int k = 0; k < rows_; ++k) key.push_back(imod(rhs[k], mods[k]));
        return key;
    }

    std::vector<int> key_moduli() const {
        std::vector<int> mods;
        mods.reserve(rows_);
        for (int k = 0; k < rows_; ++k) {
            long long g = k < cols_ ? llgcd(diag_[k], n_) : n_;
            if (g == 0) g = n_;
            mods.push_back((int)g);
        }
        return mods;
    }

    // All homomorphisms G -> Z/n = kernel of the matrix mod n.
    std::vector<Cochain> kernel() const {
        std::vector<long long> step(cols_), count(cols_);
        long long total = 1;
        for (int k = 0; k < cols_; ++k) {
            long long g = llgcd(diag_[k], n_);
            if (g == 0) g = n_;
            step[k] = n_ / g;
            count[k] = g;
            total *= g;
        }
        if (total > 4096) throw Error("GroupTooLarge", "character group too large to enumerate");
        std::vector<Cochain> out;
        std::vector<long long> idx(cols_, 0);
        for (long long t = 0; t < total; ++t) {
            long long rest = t;
            for (int k = 0; k < cols_; ++k) {
                idx[k] = (rest % count[k]) * step[k];
                rest /= count[k];
            }
            Cochain x = zero_cochain(group_, 1, n_);
            for (int i = 0; i < cols_; ++i) {
                long long s = 0;
                for (int k = 0; k < cols_; ++k) s += v_[i][k] * idx[k];
                x.values[i] = imod(s, n_);
            }
            out.push_back(std::move(x));
        }
        std::sort(out.begin(), out.end(),
                  [](const Cochain& a, const Cochain& b) { return a.values < b.values; });
        return out;
    }

private:
    struct Op {
        bool swap;
        int i, j;
        long long q;
    };

    Cochain stripped(const Cochain& c) const {
        Cochain out = c;
        for (int& v : out.values) v = imod(v, n_);
        return out;
    }

    std::vector<long long> transform_rhs(const Cochain& c) const {
        if (c.degree != tdeg_ || c.group != group_ || c.modulus != n_)
            throw Error("CochainMismatch", "solver expects a degree-" + std::to_string(tdeg_) +
                                               " cochain on its group");
        std::vector<long long> rhs(c.values.begin(), c.values.end());
        for (const Op& op : rowops_) {
            if (op.swap)
                std::swap(rhs[op.i], rhs[op.j]);
            else
                rhs[op.i] -= op.q * rhs[op.j];
        }
        return rhs;
    }

    void diagonalize(std::vector<std::vector<long long>>& a) {
        const int lim = std::min(rows_, cols_);
        diag_.assign(cols_, 0);
        for (int k = 0; k < lim; ++k) {
            // find a nonzero pivot of least magnitude
            int pi = -1, pj = -1;
            long long best = 0;
            for (int i = k; i < rows_; ++i)
                for (int j = k; j < cols_; ++j)
                    if (a[i][j] != 0 && (pi < 0 || std::abs(a[i][j]) < best)) {
                        best = std::abs(a[i][j]);
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) break;
            row_swap(a, k, pi);
            col_swap(a, k, pj);
            for (bool dirty = true; dirty;) {
                dirty = false;
                for (int i = k + 1; i < rows_; ++i)
                    while (a[i][k] != 0) {
                        long long q = a[i][k] / a[k][k];
                        row_axpy(a, i, k, q);
                        if (a[i][k] != 0) row_swap(a, k, i);
                    }
                for (int j = k + 1; j < cols_; ++j)
                    while (a[k][j] != 0) {
                        long long q = a[k][j] / a[k][k];
                        col_axpy(a, j, k, q);
                        if (a[k][j] != 0) {
                            col_swap(a, k, j);
                            dirty = true;  // column swap may repopulate the pivot column
                        }
                    }
            }
            diag_[k] = a[k][k];
        }
    }

    void row_swap(std::vector<std::vector<long long>>& a, int i, int j) {
        if (i == j) return;
        std::swap(a[i], a[j]);
        rowops_.push_back({true, i, j, 0});
    }
    void row_axpy(std::vector<std::vector<long long>>& a, int i, int j, long long q) {
        if (q == 0) return;
        for (int c = 0; c < cols_; ++c) a[i][c] -= q * a[j][c];
        rowops_.push_back({false, i, j, q});
    }
    void col_swap(std::vector<std::vector<long long>>& a, int i, int j) {
        if (i == j) return;
        for (int r = 0; r < rows_; ++r) std::swap(a[r][i], a[r][j]);
        for (int r = 0; r < cols_; ++r) std::swap(v_[r][i], v_[r][j]);
    }
    void col_axpy(std::vector<std::vector<long long>>& a, int j, int k, long long q) {
        if (q == 0) return;
        for (int r = 0; r < rows_; ++r) a[r][j] -= q * a[r][k];
        for (int r = 0; r < cols_; ++r) v_[r][j] -= q * v_[r][k];
    }

    GroupPtr group_;
    int n_, tdeg_ = 2, rows_ = 0, cols_ = 0;
    std::vector<long long> diag_;
    std::vector<std::vector<long long>> v_;
    std::vector<Op> rowops_;
};

}  // namespace

std::vector<Cochain> characters(const GroupPtr& g, int n) {
    check_cochain_args(g, 1, n);
    return CobSolver(g, n).kernel();
}

std::optional<Cochain> is_coboundary(const Cochain& c) {
    if (c.degree != 2 && c.degree != 3)
        throw Error("BadDegree", "coboundary test expects a degree-2 or degree-3 cochain");
    if (c.degree == 2 && !is_cocycle(c)) throw Error("NotACocycle", "cochain has nonzero coboundary");
    return CobSolver(c.group, c.modulus, c.degree).solve(c);
}

bool same_class(const Cochain& a, const Cochain& b) {
    return is_coboundary(add(a, negate(b))).has_value();
}

// ---------------------------------------------------------------------------
// Heisenberg group

int HeisenbergGroup::pack(int a, int bb, int c) const { return (a * n + bb) * n + c; }

std::array<int, 3> HeisenbergGroup::unpack(int g) const {
    return {g / (n * n), (g / n) % n, g % n};
}

HeisenbergGroup heisenberg_group(int n) {
    if (n < 2) throw Error("BadModulus", "heisenberg group needs n >= 2");
    const int order = n * n * n;
    std::vector<std::vector<int>> t(order, std::vector<int>(order));
    auto pack = [n](int a, int b, int c) { return (a * n + b) * n + c; };
    for (int a1 = 0; a1 < n; ++a1)
        for (int b1 = 0; b1 < n; ++b1)
            for (int c1 = 0; c1 < n; ++c1)
                for (int a2 = 0; a2 < n; ++a2)
                    for (int b2 = 0; b2 < n; ++b2)
                        for (int c2 = 0; c2 < n; ++c2)
                            t[pack(a1, b1, c1)][pack(a2, b2, c2)] =
                                pack((a1 + a2) % n, (b1 + b2 + a1 * c2) % n, (c1 + c2) % n);
    HeisenbergGroup h;
    h.n = n;
    h.group = make_group(std::move(t));
    if (h.group->order <= kMaxCochainGroupOrder) {
        h.chi_a = cochain_from(h.group, 1, n, [&](const std::vector<int>& g) {
            return g[0] / (n * n);
        });
        h.chi_c = cochain_from(h.group, 1, n,
                               [&](const std::vector<int>& g) { return g[0] % n; });
        h.b = cochain_from(h.group, 1, n,
                           [&](const std::vector<int>& g) { return (g[0] / n) % n; });
    }
    return h;
}

// ---------------------------------------------------------------------------
// Lifting obstruction

namespace {

void require_pair_hom(const PairHom& phi, int n) {
    if (phi.chi1.group != phi.chi2.group || phi.chi1.modulus != n || phi.chi2.modulus != n)
        throw Error("CochainMismatch", "pair homomorphism coordinates disagree");
    if (!is_homomorphism(phi.chi1) || !is_homomorphism(phi.chi2))
        throw Error("NotAHomomorphism", "coordinate map is not a character");
}

}  // namespace

Cochain delta_phi(const PairHom& phi, const HeisenbergGroup& d, const Section& section) {
    const int n = d.n;
    require_pair_hom(phi, n);
    const GroupPtr& g = phi.chi1.group;
    auto lift = [&](int x) -> std::array<int, 3> {
        int a = phi.chi1.at(x), c = phi.chi2.at(x);
        return {a, imod(section(a, c), n), c};
    };
    return cochain_from(g, 2, n, [&](const std::vector<int>& t) {
        auto u = lift(t[0]), v = lift(t[1]);
        auto w = lift(g->table[t[0]][t[1]]);
        // (u*v) * w^-1 lies in the center {(0,b,0)}; its b-coordinate is the
        // cocycle value.  w^-1 = (-w.a, -w.b + w.a*w.c, -w.c).
        int pa = (u[0] + v[0]) % n;
        int pb = imod(u[1] + v[1] + u[0] * v[2], n);
        int pc = (u[2] + v[2]) % n;
        if (pa != w[0] || pc != w[2])
            throw Error("NotAHomomorphism", "projection mismatch in obstruction cocycle");
        int wb = imod(-w[1] + w[0] * w[2], n);
        return imod(pb + wb + pa * imod(-w[2], n), n);
    });
}

Cochain delta_phi(const PairHom& phi, const HeisenbergGroup& d) {
    return delta_phi(phi, d, [](int, int) { return 0; });
}

std::optional<std::vector<int>> lift_exhaustive(const PairHom& phi, const HeisenbergGroup& d) {
    const int n = d.n;
    require_pair_hom(phi, n);
    const GroupPtr& g = phi.chi1.group;
    const int m = g->order;
    if (m > 12) throw Error("GroupTooLarge", "exhaustive lifting is capped at 12 elements");
    // A lift is pinned down by the middle coordinate beta: G -> Z/n with
    // beta(xy) = beta(x) + beta(y) + chi1(x) chi2(y); sweep all n^m choices.
    std::vector<int> beta(m, 0);
    long long total = 1;
    for (int i = 0; i < m; ++i) total *= n;
    for (long long t = 0; t < total; ++t) {
        long long rest = t;
        for (int i = 0; i < m; ++i) {
            beta[i] = (int)(rest % n);
            rest /= n;
        }
        bool ok = true;
        for (int x = 0; x < m && ok; ++x)
            for (int y = 0; y < m && ok; ++y)
                ok = beta[g->table[x][y]] ==
                     imod(beta[x] + beta[y] + phi.chi1.at(x) * phi.chi2.at(y), n);
        if (!ok) continue;
        std::vector<int> img(m);
        for (int x = 0; x < m; ++x) img[x] = d.pack(phi.chi1.at(x), beta[x], phi.chi2.at(x));
        return img;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Massey product

MasseyResult massey(const GroupPtr& g, const Cochain& x1, const Cochain& x2, const Cochain& x3) {
    for (const Cochain* x : {&x1, &x2, &x3})
        if (x->group != g || !is_homomorphism(*x))
            throw Error("NotAHomomorphism", "massey inputs must be characters on the group");
    const int n = x1.modulus;
    CobSolver solver(g, n);
    auto c12 = solver.solve(cup(x1, x2));
    if (!c12) throw Error("CupNotTrivial", "cup(x1, x2) has nonzero class (1,2)");
    auto c23 = solver.solve(cup(x2, x3));
    if (!c23) throw Error("CupNotTrivial", "cup(x2, x3) has nonzero class (2,3)");

    MasseyResult out{add(cup(*c12, x3), cup(x1, *c23)), *c12, *c23, {}, 1};

    // Indeterminacy x1 u H^1 + H^1 u x3: class keys are linear in the
    // cochain, so the spanned classes are the slotwise sums of the two key
    // sets.
    std::vector<Cochain> chars = solver.kernel();
    std::vector<int> mods = solver.key_moduli();
    std::set<std::vector<int>> gen_keys, left, right;
    auto note_gen = [&](const Cochain& w, const std::vector<int>& key) {
        bool zero = std::all_of(key.begin(), key.end(), [](int v) { return v == 0; });
        if (!zero && gen_keys.insert(key).second) out.indeterminacy_gens.push_back(w);
    };
    for (const Cochain& u : chars) {
        Cochain lw = cup(x1, u), rw = cup(u, x3);
        std::vector<int> lk = solver.class_key(lw), rk = solver.class_key(rw);
        note_gen(lw, lk);
        note_gen(rw, rk);
        left.insert(std::move(lk));
        right.insert(std::move(rk));
    }
    std::set<std::vector<int>> sums;
    for (const auto& a : left)
        for (const auto& b : right) {
            std::vector<int> s(a.size());
            for (size_t i = 0; i < s.size(); ++i) s[i] = (a[i] + b[i]) % mods[i];
            sums.insert(std::move(s));
        }
    out.indeterminacy_classes = (long)sums.size();
    return out;
}

}  // namespace triplesym
