#include "cubhom/int_linalg.hpp"

#include <algorithm>

namespace cubhom {

namespace {

Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

// Floor division for positive divisor.
Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && a < 0) q -= 1;
    return q;
}

// Row Hermite normal form of m: unique canonical representative of the
// row lattice.  Pivots positive, entries above each pivot reduced into
// [0, pivot), zero rows dropped.
IntMatrix hnf_rows(IntMatrix h) {
    const int rows = h.rows(), cols = h.cols();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        // gcd-combine rows >= r until at most one has a nonzero in column c
        while (true) {
            int best = -1;
            for (int i = r; i < rows; ++i)
                if (h.at(i, c) != 0 && (best < 0 || abs_int(h.at(i, c)) < abs_int(h.at(best, c))))
                    best = i;
            if (best < 0) break;
            h.swap_rows(r, best);
            bool clear = true;
            for (int i = r + 1; i < rows; ++i) {
                if (h.at(i, c) == 0) continue;
                Int q = h.at(i, c) / h.at(r, c);
                h.add_row_multiple(i, r, -q);
                if (h.at(i, c) != 0) clear = false;
            }
            if (clear) break;
        }
        if (h.at(r, c) == 0) continue;
        if (h.at(r, c) < 0) h.negate_row(r);
        for (int i = 0; i < r; ++i) {
            Int q = floor_div(h.at(i, c), h.at(r, c));
            h.add_row_multiple(i, r, -q);
        }
        ++r;
    }
    return h.block(0, 0, r, cols);
}

}  // namespace

SmithResult snf(const IntMatrix& m) {
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    IntMatrix v = IntMatrix::identity(m.cols());
    const int rows = a.rows(), cols = a.cols();
    int t = 0;
    while (t < rows && t < cols) {
        // minimal nonzero pivot in the trailing submatrix
        int pi = -1, pj = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (a.at(i, j) != 0 &&
                    (pi < 0 || abs_int(a.at(i, j)) < abs_int(a.at(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);

        bool clean = true;
        for (int i = t + 1; i < rows; ++i) {
            if (a.at(i, t) == 0) continue;
            Int q = a.at(i, t) / a.at(t, t);
            a.add_row_multiple(i, t, -q);
            u.add_row_multiple(i, t, -q);
            if (a.at(i, t) != 0) clean = false;
        }
        if (!clean) continue;
        for (int j = t + 1; j < cols; ++j) {
            if (a.at(t, j) == 0) continue;
            Int q = a.at(t, j) / a.at(t, t);
            a.add_col_multiple(j, t, -q);
            v.add_col_multiple(j, t, -q);
            if (a.at(t, j) != 0) clean = false;
        }
        if (!clean) continue;

        // divisibility fix: pull a non-divisible entry into row t
        int br = -1, bc = -1;
        for (int i = t + 1; i < rows && br < 0; ++i)
            for (int j = t + 1; j < cols; ++j)
                if (a.at(i, j) % a.at(t, t) != 0) {
                    br = i;
                    bc = j;
                    break;
                }
        if (br >= 0) {
            a.add_row_multiple(t, br, 1);
            u.add_row_multiple(t, br, 1);
            continue;
        }
        ++t;
    }
    for (int i = 0; i < std::min(rows, cols); ++i)
        if (a.at(i, i) < 0) {
            a.negate_row(i);
            u.negate_row(i);
        }
    return {std::move(u), std::move(a), std::move(v)};
}

std::vector<Int> smith_diagonal(const IntMatrix& m) {
    SmithResult r = snf(m);
    std::vector<Int> d;
    for (int i = 0; i < std::min(r.s.rows(), r.s.cols()); ++i) d.push_back(r.s.at(i, i));
    return d;
}

ColEchelon col_echelon(const IntMatrix& m) {
    ColEchelon res;
    res.e = m;
    res.v = IntMatrix::identity(m.cols());
    IntMatrix& e = res.e;
    IntMatrix& v = res.v;
    const int rows = e.rows(), cols = e.cols();
    int pc = 0;
    for (int r = 0; r < rows && pc < cols; ++r) {
        while (true) {
            int best = -1;
            for (int c = pc; c < cols; ++c)
                if (e.at(r, c) != 0 && (best < 0 || abs_int(e.at(r, c)) < abs_int(e.at(r, best))))
                    best = c;
            if (best < 0) break;  // no pivot in this row
            e.swap_cols(pc, best);
            v.swap_cols(pc, best);
            bool clear = true;
            for (int c = pc + 1; c < cols; ++c) {
                if (e.at(r, c) == 0) continue;
                Int q = e.at(r, c) / e.at(r, pc);
                e.add_col_multiple(c, pc, -q);
                v.add_col_multiple(c, pc, -q);
                if (e.at(r, c) != 0) clear = false;
            }
            if (clear) {
                if (e.at(r, pc) < 0) {
                    e.negate_col(pc);
                    v.negate_col(pc);
                }
                res.pivots.emplace_back(r, pc);
                ++pc;
                break;
            }
        }
    }
    return res;
}

IntMatrix integer_kernel(const IntMatrix& m) {
    ColEchelon ce = col_echelon(m);
    const int rank = static_cast<int>(ce.pivots.size());
    if (rank == m.cols()) return IntMatrix(m.cols(), 0);
    return lattice_canonical(ce.v.block(0, rank, m.cols(), m.cols() - rank));
}

std::optional<std::vector<Int>> solve(const IntMatrix& m, const std::vector<Int>& b) {
    IntMatrix bm(m.rows(), 1);
    bm.set_column(0, b);
    auto x = solve_columns(m, bm);
    if (!x) return std::nullopt;
    return x->column(0);
}

std::optional<IntMatrix> solve_columns(const IntMatrix& m, const IntMatrix& b) {
    if (m.rows() != b.rows()) throw std::invalid_argument("solve_columns: row mismatch");
    ColEchelon ce = col_echelon(m);
    IntMatrix x(m.cols(), b.cols());
    for (int k = 0; k < b.cols(); ++k) {
        std::vector<Int> resid = b.column(k);
        std::vector<Int> y(m.cols());
        for (const auto& [pr, pc] : ce.pivots) {
            const Int& piv = ce.e.at(pr, pc);
            if (resid[pr] % piv != 0) return std::nullopt;
            Int q = resid[pr] / piv;
            if (q != 0) {
                y[pc] = q;
                for (int r = 0; r < m.rows(); ++r)
                    if (ce.e.at(r, pc) != 0) resid[r] -= q * ce.e.at(r, pc);
            }
        }
        for (const auto& r : resid)
            if (r != 0) return std::nullopt;
        x.set_column(k, ce.v.apply(y));
    }
    return x;
}

IntMatrix lattice_canonical(const IntMatrix& m) {
    return hnf_rows(m.transpose()).transpose();
}

bool lattice_equal(const IntMatrix& a, const IntMatrix& b) {
    return lattice_canonical(a) == lattice_canonical(b);
}

bool lattice_member(const IntMatrix& lattice_gens, const std::vector<Int>& v) {
    return solve(lattice_gens, v).has_value();
}

IntMatrix lattice_sum(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("lattice_sum: ambient rank mismatch");
    return lattice_canonical(a.hcat(b));
}

Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    const int n = m.rows();
    if (n == 0) return 1;
    IntMatrix b = m;
    Int sign = 1, prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (b.at(k, k) == 0) {
            int sw = -1;
            for (int i = k + 1; i < n; ++i)
                if (b.at(i, k) != 0) {
                    sw = i;
                    break;
                }
            if (sw < 0) return 0;
            b.swap_rows(k, sw);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                b.at(i, j) = (b.at(i, j) * b.at(k, k) - b.at(i, k) * b.at(k, j)) / prev;
        prev = b.at(k, k);
    }
    return sign * b.at(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& m) {
    if (m.rows() != m.cols()) return false;
    Int d = determinant(m);
    return d == 1 || d == -1;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("unimodular_inverse: matrix not square");
    SmithResult r = snf(m);
    for (int i = 0; i < m.rows(); ++i)
        if (r.s.at(i, i) != 1) throw std::invalid_argument("unimodular_inverse: matrix not unimodular");
    // u m v = 1  =>  m^{-1} = v u
    return r.v * r.u;
}

}  // namespace cubhom
