#include "k3strat/qflag.hpp"

#include <algorithm>
#include <functional>

#include "k3strat/rational.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace k3strat {

namespace {

void require_budget_power(int base, int exponent, long long budget, const char* what) {
    long long acc = 1;
    for (int i = 0; i < exponent; ++i) {
        acc *= base;
        if (acc > budget)
            throw BudgetError(std::string(what) + " needs " + std::to_string(base) + "^" +
                              std::to_string(exponent) + " within the budget of " +
                              std::to_string(budget));
    }
}

bool is_zero_row(const Row& v, int p) {
    for (int x : v)
        if (x % p != 0) return false;
    return true;
}

void normalize_leading(Row& v, int p) {
    for (int x : v) {
        if (x != 0) {
            const int f = mod_inv(x, p);
            for (int& y : v) y = mod_norm(static_cast<long long>(y) * f, p);
            return;
        }
    }
}

// Orthogonal complement of the row span, as an RREF basis.
Matrix perp(const QuadraticSpace& V, const Matrix& s) {
    Matrix constraints;
    constraints.reserve(s.size());
    for (const Row& r : s) {
        Row c(V.n);
        for (int i = 0; i < V.n; ++i) c[i] = r[V.n - 1 - i];
        constraints.push_back(std::move(c));
    }
    if (constraints.empty()) {
        Matrix full(V.n, Row(V.n, 0));
        for (int i = 0; i < V.n; ++i) full[i][i] = 1;
        return full;
    }
    return kernel_basis(constraints, V.n, V.p);
}

// Rows of `big` that fall outside the span of `small`; the returned rows are
// reduced residuals, appended triangularly so later reductions stay valid.
Matrix complement_rows(const Matrix& small, const Matrix& big, int p) {
    Matrix acc = small;
    Matrix out;
    for (const Row& r : big) {
        Row res = reduce_against(r, acc, p);
        if (is_zero_row(res, p)) continue;
        normalize_leading(res, p);
        acc.push_back(res);
        out.push_back(acc.back());
    }
    return out;
}

// Every maximal isotropic chain extending the current one, reported as the
// list of spanning rows (row j spans step j+1 over step j).
void extend_chains(const QuadraticSpace& V, Matrix& chain, const Matrix& span,
                   const std::function<void(const Matrix&)>& leaf) {
    const int m = V.n / 2;
    const int k = static_cast<int>(span.size());
    if (k == m) {
        leaf(chain);
        return;
    }
    const Matrix comp = complement_rows(span, perp(V, span), V.p);
    const int d = static_cast<int>(comp.size());  // n - 2k
    for (int lead = 0; lead < d; ++lead) {
        long long assignments = 1;
        for (int t = lead + 1; t < d; ++t) assignments *= V.p;
        for (long long idx = 0; idx < assignments; ++idx) {
            Row u = comp[lead];
            long long rem = idx;
            for (int t = lead + 1; t < d; ++t) {
                const int digit = static_cast<int>(rem % V.p);
                rem /= V.p;
                if (digit)
                    for (int c = 0; c < V.n; ++c)
                        u[c] = mod_norm(u[c] + static_cast<long long>(digit) * comp[t][c], V.p);
            }
            if (V.pair(u, u) != 0) continue;
            chain.push_back(u);
            Matrix next = span;
            next.push_back(u);
            extend_chains(V, chain, rref(std::move(next), V.p), leaf);
            chain.pop_back();
        }
    }
}

// First-step choices, i.e. representatives of the isotropic lines.
std::vector<Row> isotropic_line_reps(const QuadraticSpace& V) {
    std::vector<Row> reps;
    const Matrix comp = complement_rows({}, perp(V, {}), V.p);
    const int d = static_cast<int>(comp.size());
    for (int lead = 0; lead < d; ++lead) {
        long long assignments = 1;
        for (int t = lead + 1; t < d; ++t) assignments *= V.p;
        for (long long idx = 0; idx < assignments; ++idx) {
            Row u = comp[lead];
            long long rem = idx;
            for (int t = lead + 1; t < d; ++t) {
                const int digit = static_cast<int>(rem % V.p);
                rem /= V.p;
                if (digit)
                    for (int c = 0; c < V.n; ++c)
                        u[c] = mod_norm(u[c] + static_cast<long long>(digit) * comp[t][c], V.p);
            }
            if (V.pair(u, u) == 0) reps.push_back(std::move(u));
        }
    }
    return reps;
}

// New spanning vector of each step over the one before, topped up with one
// vector completing the full space; n rows for a complete flag.
Matrix adapted_basis(const QuadraticSpace& V, const IsotropicFlag& f) {
    Matrix acc;
    Matrix out;
    for (int j = 1; j <= f.step_count(); ++j) {
        for (const Row& r : f.step(j)) {
            Row res = reduce_against(r, acc, V.p);
            if (is_zero_row(res, V.p)) continue;
            normalize_leading(res, V.p);
            acc.push_back(res);
            out.push_back(acc.back());
            break;
        }
    }
    for (int i = 0; i < V.n && static_cast<int>(out.size()) < V.n; ++i) {
        Row e(V.n, 0);
        e[i] = 1;
        Row res = reduce_against(e, acc, V.p);
        if (is_zero_row(res, V.p)) continue;
        normalize_leading(res, V.p);
        acc.push_back(res);
        out.push_back(acc.back());
    }
    return out;
}

struct AdaptedFrame {
    Matrix basis_inverse;  // inverse of the adapted-basis row matrix
};

AdaptedFrame frame_of(const QuadraticSpace& V, const IsotropicFlag& f) {
    return {invert(adapted_basis(V, f), V.p)};
}

// Jump positions of B's steps across A's chain: bottom pivots of B's new
// vectors in A-adapted coordinates under column echelon reduction.
WeylElement relpos_core(const QuadraticSpace& V, const AdaptedFrame& a,
                        const IsotropicFlag& b) {
    const int n = V.n;
    const Matrix bv = adapted_basis(V, b);
    std::vector<Row> pivot_col(n);
    std::vector<char> has_pivot(n, 0);
    std::vector<int> one_line(n, 0);
    for (int j = 0; j < n; ++j) {
        Row c = vec_mat(bv[j], a.basis_inverse, V.p);
        int i = n - 1;
        for (;;) {
            while (i >= 0 && c[i] == 0) --i;
            if (i < 0) throw DomainError("flag steps must add a new direction each");
            if (!has_pivot[i]) break;
            const long long f = c[i];
            for (int k = 0; k <= i; ++k)
                c[k] = mod_norm(c[k] - f * pivot_col[i][k], V.p);
        }
        const int f = mod_inv(c[i], V.p);
        for (int& x : c) x = mod_norm(static_cast<long long>(x) * f, V.p);
        pivot_col[i] = std::move(c);
        has_pivot[i] = 1;
        one_line[j] = i + 1;
    }
    return WeylElement::from_one_line(n % 2 ? Family::B : Family::C, std::move(one_line));
}

IsotropicFlag complete_from_chain(const QuadraticSpace& V, const Matrix& chain) {
    return complete_flag(V, IsotropicFlag::from_chain(V, chain));
}

}  // namespace

int QuadraticSpace::pair(const Row& u, const Row& v) const {
    if (static_cast<int>(u.size()) != n || static_cast<int>(v.size()) != n)
        throw DomainError("vectors must have the space dimension");
    long long acc = 0;
    for (int i = 0; i < n; ++i)
        acc += static_cast<long long>(mod_norm(u[i], p)) * mod_norm(v[n - 1 - i], p) % p;
    return mod_norm(acc, p);
}

QuadraticSpace make_split_space(int n, int p) {
    if (n < 3) throw DomainError("space dimension must be at least 3");
    if (!is_odd_prime(p)) throw DomainError("characteristic must be an odd prime");
    return {n, p};
}

bool is_isotropic(const QuadraticSpace& V, const Matrix& subspace) {
    if (rank_of(subspace, V.p) != static_cast<int>(subspace.size()))
        throw DomainError("subspace rows must be independent");
    for (size_t i = 0; i < subspace.size(); ++i)
        for (size_t j = i; j < subspace.size(); ++j)
            if (V.pair(subspace[i], subspace[j]) != 0) return false;
    return true;
}

IsotropicFlag IsotropicFlag::from_chain(const QuadraticSpace& V, const Matrix& rows) {
    for (const Row& r : rows)
        if (static_cast<int>(r.size()) != V.n)
            throw DomainError("chain rows must have the space dimension");
    Matrix normalized = rows;
    for (Row& r : normalized)
        for (int& x : r) x = mod_norm(x, V.p);
    if (!normalized.empty() && !is_isotropic(V, normalized))
        throw DomainError("chain rows must span an isotropic subspace");
    IsotropicFlag f;
    Matrix prefix;
    for (const Row& r : normalized) {
        prefix.push_back(r);
        Matrix step = rref(prefix, V.p);
        if (step.size() != prefix.size())
            throw DomainError("chain rows must be independent");
        f.steps_.push_back(std::move(step));
    }
    return f;
}

IsotropicFlag IsotropicFlag::from_steps(const QuadraticSpace& V, std::vector<Matrix> steps) {
    IsotropicFlag f;
    for (size_t j = 0; j < steps.size(); ++j) {
        Matrix step = rref(std::move(steps[j]), V.p);
        if (step.size() != j + 1)
            throw DomainError("step " + std::to_string(j + 1) + " must have dimension " +
                              std::to_string(j + 1));
        if (j > 0)
            for (const Row& r : f.steps_[j - 1])
                if (!in_span(r, step, V.p))
                    throw DomainError("flag steps must be nested");
        f.steps_.push_back(std::move(step));
    }
    const int iso_top = std::min<int>(f.step_count(), V.n / 2);
    if (iso_top > 0 && !is_isotropic(V, f.steps_[iso_top - 1]))
        throw DomainError("the form must vanish on the isotropic part of the flag");
    return f;
}

const Matrix& IsotropicFlag::step(int j) const {
    if (j < 1 || j > step_count())
        throw DomainError("flag step index out of range");
    return steps_[j - 1];
}

bool IsotropicFlag::is_complete(const QuadraticSpace& V) const {
    if (step_count() != V.n - 1) return false;
    for (int j = 1; j <= V.n / 2; ++j)
        if (steps_[V.n - j - 1] != perp(V, steps_[j - 1])) return false;
    return true;
}

IsotropicFlag complete_flag(const QuadraticSpace& V, const IsotropicFlag& flag) {
    const int m = V.n / 2;
    if (flag.step_count() == V.n - 1) {
        if (!flag.is_complete(V))
            throw DomainError("full-length flag is not self-dual");
        return flag;
    }
    if (flag.step_count() != m)
        throw DomainError("completion needs the maximal isotropic chain of " +
                          std::to_string(m) + " steps");
    IsotropicFlag out = flag;
    out.steps_.reserve(V.n - 1);
    for (int j = m + 1; j <= V.n - 1; ++j)
        out.steps_.push_back(perp(V, flag.step(V.n - j)));
    return out;
}

IsotropicFlag twist_flag(const QuadraticSpace& V, const IsotropicFlag& flag) {
    if (V.n % 2 != 0)
        throw DomainError("twisting needs an even-dimensional space");
    if (!flag.is_complete(V))
        throw DomainError("twisting needs a complete self-dual flag");
    const int m = V.n / 2;
    const Matrix& below = flag.step(m - 1);
    const Matrix& above = flag.step(m + 1);
    const Matrix comp = complement_rows(below, above, V.p);
    if (comp.size() != 2)
        throw DomainError("middle quotient must be a plane");

    std::vector<Matrix> candidates;
    for (int t = 0; t <= V.p; ++t) {
        Row u = t < V.p ? comp[0] : comp[1];
        if (t > 0 && t < V.p)
            for (int c = 0; c < V.n; ++c)
                u[c] = mod_norm(u[c] + static_cast<long long>(t) * comp[1][c], V.p);
        if (V.pair(u, u) != 0) continue;
        Matrix rows = below;
        rows.push_back(u);
        candidates.push_back(rref(std::move(rows), V.p));
    }
    if (candidates.size() != 2)
        throw DomainError("split middle quotient must carry exactly two isotropic lines");

    const Matrix& other = candidates[0] == flag.step(m) ? candidates[1] : candidates[0];
    std::vector<Matrix> steps;
    for (int j = 1; j <= V.n - 1; ++j) steps.push_back(j == m ? other : flag.step(j));
    return IsotropicFlag::from_steps(V, std::move(steps));
}

IsotropicFlag standard_flag(const QuadraticSpace& V) {
    Matrix rows;
    for (int i = 0; i < V.n / 2; ++i) {
        Row e(V.n, 0);
        e[i] = 1;
        rows.push_back(std::move(e));
    }
    return complete_flag(V, IsotropicFlag::from_chain(V, rows));
}

WeylElement relative_position(const QuadraticSpace& V, const IsotropicFlag& a,
                              const IsotropicFlag& b) {
    if (!a.is_complete(V) || !b.is_complete(V))
        throw DomainError("relative position needs complete self-dual flags");
    return relpos_core(V, frame_of(V, a), b);
}

std::vector<IsotropicFlag> enumerate_isotropic_flags(const QuadraticSpace& V,
                                                     long long budget) {
    require_budget_power(V.p, V.n, budget, "flag enumeration");
    std::vector<IsotropicFlag> out;
    Matrix chain;
    extend_chains(V, chain, {}, [&](const Matrix& rows) {
        out.push_back(complete_from_chain(V, rows));
    });
    return out;
}

long long count_isotropic_flags_serial(const QuadraticSpace& V, long long budget) {
    require_budget_power(V.p, V.n, budget, "flag enumeration");
    long long total = 0;
    Matrix chain;
    extend_chains(V, chain, {}, [&](const Matrix&) { ++total; });
    return total;
}

long long count_isotropic_flags(const QuadraticSpace& V, long long budget) {
    require_budget_power(V.p, V.n, budget, "flag enumeration");
    const std::vector<Row> firsts = isotropic_line_reps(V);
    long long total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
    for (size_t i = 0; i < firsts.size(); ++i) {
        Matrix chain{firsts[i]};
        long long local = 0;
        extend_chains(V, chain, rref({firsts[i]}, V.p),
                      [&](const Matrix&) { ++local; });
        total += local;
    }
    return total;
}

CensusMap bruhat_cell_census_serial(const QuadraticSpace& V, const IsotropicFlag& a,
                                    long long budget) {
    require_budget_power(V.p, V.n, budget, "flag census");
    if (!a.is_complete(V))
        throw DomainError("census needs a complete self-dual reference flag");
    const AdaptedFrame frame = frame_of(V, a);
    CensusMap census;
    Matrix chain;
    extend_chains(V, chain, {}, [&](const Matrix& rows) {
        ++census[relpos_core(V, frame, complete_from_chain(V, rows))];
    });
    return census;
}

CensusMap bruhat_cell_census(const QuadraticSpace& V, const IsotropicFlag& a,
                             long long budget) {
    require_budget_power(V.p, V.n, budget, "flag census");
    if (!a.is_complete(V))
        throw DomainError("census needs a complete self-dual reference flag");
    const AdaptedFrame frame = frame_of(V, a);
    const std::vector<Row> firsts = isotropic_line_reps(V);

#ifdef _OPENMP
    const int workers = omp_get_max_threads();
#else
    const int workers = 1;
#endif
    std::vector<CensusMap> locals(workers);
#pragma omp parallel for schedule(dynamic)
    for (size_t i = 0; i < firsts.size(); ++i) {
#ifdef _OPENMP
        CensusMap& mine = locals[omp_get_thread_num()];
#else
        CensusMap& mine = locals[0];
#endif
        Matrix chain{firsts[i]};
        extend_chains(V, chain, rref({firsts[i]}, V.p), [&](const Matrix& rows) {
            ++mine[relpos_core(V, frame, complete_from_chain(V, rows))];
        });
    }
    CensusMap census;
    for (const CensusMap& local : locals)
        for (const auto& [w, c] : local) census[w] += c;
    return census;
}

long long hermitian_point_count(int p, long long budget) {
    if (!is_odd_prime(p))
        throw DomainError("the scan needs an odd prime");
    require_budget_power(p, 4, budget, "Hermitian point scan");

    int r = 0;  // least quadratic nonresidue
    for (int a = 2; a < p; ++a) {
        if (mod_pow(a, (p - 1) / 2, p) == p - 1) {
            r = a;
            break;
        }
    }
    // norm of a + b*t with t^2 = r: a^2 - r b^2
    std::vector<long long> norm_count(p, 0);
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            ++norm_count[mod_norm(static_cast<long long>(a) * a -
                                      static_cast<long long>(r) * b % p * b,
                                  p)];

    long long total = 0;
    for (int u = 0; u < p; ++u) {
        const int v = mod_norm(-1 - u, p);  // 1 + u + v = 0
        total += norm_count[u] * norm_count[v];
    }
    total += norm_count[p - 1];  // x = 0, y = 1: 1 + N(z) = 0
    return total;
}

}  // namespace k3strat
