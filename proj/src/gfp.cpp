#include "k3strat/gfp.hpp"

#include "k3strat/rational.hpp"

namespace k3strat {

int mod_norm(long long a, int p) {
    long long r = a % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

int mod_pow(long long a, long long e, int p) {
    long long base = mod_norm(a, p), acc = 1;
    for (; e > 0; e >>= 1) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
    }
    return static_cast<int>(acc);
}

int mod_inv(int a, int p) {
    a = mod_norm(a, p);
    if (a == 0) throw DomainError("zero has no inverse mod p");
    return mod_pow(a, p - 2, p);
}

Matrix rref(Matrix rows, int p) {
    const size_t ncols = rows.empty() ? 0 : rows[0].size();
    size_t pivot_row = 0;
    for (size_t col = 0; col < ncols && pivot_row < rows.size(); ++col) {
        size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][col] % p == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[pivot_row], rows[sel]);
        const int inv = mod_inv(rows[pivot_row][col], p);
        for (size_t c = col; c < ncols; ++c)
            rows[pivot_row][c] = mod_norm(static_cast<long long>(rows[pivot_row][c]) * inv, p);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == pivot_row || rows[r][col] % p == 0) continue;
            const long long f = rows[r][col];
            for (size_t c = 0; c < ncols; ++c)
                rows[r][c] = mod_norm(rows[r][c] - f * rows[pivot_row][c], p);
        }
        ++pivot_row;
    }
    rows.resize(pivot_row);
    return rows;
}

int rank_of(const Matrix& rows, int p) {
    return static_cast<int>(rref(rows, p).size());
}

Row reduce_against(Row v, const Matrix& rref_rows, int p) {
    for (const Row& r : rref_rows) {
        size_t lead = 0;
        while (lead < r.size() && r[lead] == 0) ++lead;
        if (lead == r.size()) continue;
        const long long f = v[lead];
        if (f % p == 0) continue;
        for (size_t c = 0; c < v.size(); ++c)
            v[c] = mod_norm(v[c] - f * r[c], p);
    }
    return v;
}

bool in_span(const Row& v, const Matrix& rref_rows, int p) {
    for (int x : reduce_against(v, rref_rows, p))
        if (x % p != 0) return false;
    return true;
}

Matrix invert(const Matrix& a, int p) {
    const size_t n = a.size();
    Matrix work = a;
    Matrix inv(n, Row(n, 0));
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw DomainError("matrix must be square");
        inv[i][i] = 1;
    }
    for (size_t col = 0; col < n; ++col) {
        size_t sel = col;
        while (sel < n && work[sel][col] % p == 0) ++sel;
        if (sel == n) throw DomainError("matrix is singular mod p");
        std::swap(work[col], work[sel]);
        std::swap(inv[col], inv[sel]);
        const int f = mod_inv(work[col][col], p);
        for (size_t c = 0; c < n; ++c) {
            work[col][c] = mod_norm(static_cast<long long>(work[col][c]) * f, p);
            inv[col][c] = mod_norm(static_cast<long long>(inv[col][c]) * f, p);
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || work[r][col] % p == 0) continue;
            const long long g = work[r][col];
            for (size_t c = 0; c < n; ++c) {
                work[r][c] = mod_norm(work[r][c] - g * work[col][c], p);
                inv[r][c] = mod_norm(inv[r][c] - g * inv[col][c], p);
            }
        }
    }
    return inv;
}

Matrix kernel_basis(const Matrix& a, int ncols, int p) {
    const Matrix r = rref(a, p);
    std::vector<int> pivot_col;
    std::vector<char> is_pivot(ncols, 0);
    for (const Row& row : r) {
        int lead = 0;
        while (lead < ncols && row[lead] == 0) ++lead;
        pivot_col.push_back(lead);
        if (lead < ncols) is_pivot[lead] = 1;
    }
    Matrix basis;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        Row v(ncols, 0);
        v[free] = 1;
        for (size_t i = 0; i < r.size(); ++i)
            v[pivot_col[i]] = mod_norm(-r[i][free], p);
        basis.push_back(std::move(v));
    }
    return rref(std::move(basis), p);
}

Row mat_vec(const Matrix& a, const Row& x, int p) {
    Row out(a.size(), 0);
    for (size_t r = 0; r < a.size(); ++r) {
        long long acc = 0;
        for (size_t c = 0; c < x.size(); ++c)
            acc += static_cast<long long>(a[r][c]) * x[c] % p;
        out[r] = mod_norm(acc, p);
    }
    return out;
}

Row vec_mat(const Row& x, const Matrix& a, int p) {
    const size_t ncols = a.empty() ? 0 : a[0].size();
    Row out(ncols, 0);
    for (size_t c = 0; c < ncols; ++c) {
        long long acc = 0;
        for (size_t r = 0; r < a.size(); ++r)
            acc += static_cast<long long>(x[r]) * a[r][c] % p;
        out[c] = mod_norm(acc, p);
    }
    return out;
}

}  // namespace k3strat
