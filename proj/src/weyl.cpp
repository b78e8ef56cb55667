#include "k3strat/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "k3strat/rational.hpp"

namespace k3strat {

namespace {

// Negative window entries of a full 0-based one-line over N points: a window
// value v (1-based) folds negative exactly when v > m.
int window_negatives(const std::vector<int>& perm0, int m) {
    int c = 0;
    for (int i = 0; i < m; ++i)
        if (perm0[i] + 1 > m) ++c;
    return c;
}

// Sign of s*e_a + t*e_b in the chosen positive system (a != b, s,t in {1,-1}).
bool pair_is_negative(int a, int s, int b, int t) {
    if (s < 0 && t < 0) return true;
    if (s > 0 && t > 0) return false;
    const int plus = s > 0 ? a : b;
    const int minus = s > 0 ? b : a;
    return plus > minus;
}

// Index swap induced by conjugating the standard generators with s'_m.
int conjugated_index(int m, int i) {
    if (i == m) return m - 1;
    if (i == m - 1) return m;
    return i;
}

WeylElement odd_coset_partner(const WeylElement& w) {
    return multiply(w, simple_reflection(Family::C, w.rank(), twisted_letter));
}

bool in_odd_coset(const WeylElement& w) {
    return w.family() == Family::C;
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
    }
    throw DomainError("unknown family tag");
}

Family family_from_name(const std::string& s) {
    if (s == "B" || s == "b") return Family::B;
    if (s == "C" || s == "c") return Family::C;
    if (s == "D" || s == "d") return Family::D;
    throw DomainError("family must be one of B, C, D");
}

WeylElement WeylElement::make_checked(Family f, std::vector<int> perm0) {
    const int N = static_cast<int>(perm0.size());
    int m = 0;
    if (f == Family::B) {
        if (N % 2 != 1 || N < 3)
            throw DomainError("family B needs an odd number of points, at least 3");
        m = (N - 1) / 2;
    } else {
        if (N % 2 != 0 || N < 4)
            throw DomainError("families C and D need an even number of points, at least 4");
        m = N / 2;
    }

    std::vector<char> seen(N, 0);
    for (int v : perm0) {
        if (v < 0 || v >= N || seen[v])
            throw DomainError("one-line values must be a permutation of 1..N");
        seen[v] = 1;
    }
    for (int i = 0; i < N; ++i)
        if (perm0[i] + perm0[N - 1 - i] != N - 1)
            throw DomainError("permutation must satisfy sigma(i) + sigma(N+1-i) = N+1");

    Family tag = f;
    if (f != Family::B) {
        const bool even_parity = window_negatives(perm0, m) % 2 == 0;
        if (f == Family::D && !even_parity)
            throw DomainError("family D requires an even number of negative window entries");
        tag = even_parity ? Family::D : Family::C;
    }
    return WeylElement(tag, m, std::move(perm0));
}

WeylElement WeylElement::identity(Family f, int m) {
    if (f == Family::B) {
        if (m < 1) throw DomainError("family B needs rank at least 1");
    } else if (m < 2) {
        throw DomainError("families C and D need rank at least 2");
    }
    const int N = f == Family::B ? 2 * m + 1 : 2 * m;
    std::vector<int> p(N);
    std::iota(p.begin(), p.end(), 0);
    Family tag = f == Family::B ? Family::B : Family::D;
    return WeylElement(tag, m, std::move(p));
}

WeylElement WeylElement::from_window(Family f, const std::vector<int>& window) {
    const int m = static_cast<int>(window.size());
    if (f == Family::B) {
        if (m < 1) throw DomainError("family B window needs at least one entry");
    } else if (m < 2) {
        throw DomainError("families C and D windows need at least two entries");
    }
    const int N = f == Family::B ? 2 * m + 1 : 2 * m;
    std::vector<int> p(N, -1);
    for (int i = 0; i < m; ++i) {
        const int v = window[i];
        if (v < 1 || v > N)
            throw DomainError("window entries must lie in 1..N");
        p[i] = v - 1;
        p[N - 1 - i] = N - 1 - (v - 1);
    }
    if (f == Family::B) p[m] = m;
    return make_checked(f, std::move(p));
}

WeylElement WeylElement::from_one_line(Family f, std::vector<int> one_line) {
    for (int& v : one_line) --v;
    return make_checked(f, std::move(one_line));
}

int WeylElement::apply(int x) const {
    if (x < 1 || x > points())
        throw DomainError("argument out of range 1..N");
    return perm_[x - 1] + 1;
}

std::vector<int> WeylElement::window() const {
    std::vector<int> w(m_);
    for (int i = 0; i < m_; ++i) w[i] = perm_[i] + 1;
    return w;
}

std::vector<int> WeylElement::one_line() const {
    std::vector<int> w(perm_.size());
    for (size_t i = 0; i < perm_.size(); ++i) w[i] = perm_[i] + 1;
    return w;
}

std::vector<int> WeylElement::signed_window() const {
    const int N = points();
    std::vector<int> s(m_);
    for (int i = 0; i < m_; ++i) {
        const int v = perm_[i] + 1;
        s[i] = v <= m_ ? v : -(N + 1 - v);
    }
    return s;
}

WeylElement WeylElement::inverse() const {
    std::vector<int> inv(perm_.size());
    for (size_t i = 0; i < perm_.size(); ++i) inv[perm_[i]] = static_cast<int>(i);
    return make_checked(family_ == Family::B ? Family::B : Family::C, std::move(inv));
}

bool WeylElement::is_identity() const {
    for (size_t i = 0; i < perm_.size(); ++i)
        if (perm_[i] != static_cast<int>(i)) return false;
    return true;
}

WeylElement simple_reflection(Family f, int m, int i) {
    WeylElement e = WeylElement::identity(f, m);
    const int N = e.points();
    std::vector<int> p = e.one_line();  // 1-based values; convert at the end
    auto swap1 = [&](int a, int b) { std::swap(p[a - 1], p[b - 1]); };

    if (f == Family::B) {
        if (i < 1 || i > m)
            throw DomainError("family B generator index must lie in 1..m");
        if (i < m) {
            swap1(i, i + 1);
            swap1(N - i, N + 1 - i);
        } else {
            swap1(m, m + 2);
        }
    } else {
        if (i == twisted_letter) {
            swap1(m, m + 1);
        } else if (i >= 1 && i < m) {
            swap1(i, i + 1);
            swap1(N - i, N + 1 - i);
        } else if (i == m) {
            swap1(m - 1, m + 1);
            swap1(m, m + 2);
        } else {
            throw DomainError("even-family generator index must lie in 1..m or be the twisted letter");
        }
    }
    return WeylElement::from_one_line(f == Family::B ? Family::B : Family::C, std::move(p));
}

WeylElement multiply(const WeylElement& u, const WeylElement& v) {
    if (u.points() != v.points())
        throw DomainError("cannot multiply elements over different point counts");
    if ((u.family() == Family::B) != (v.family() == Family::B))
        throw DomainError("cannot mix family B with the even families");
    const int N = u.points();
    std::vector<int> r(N);
    for (int i = 0; i < N; ++i) r[i] = u.perm_[v.perm_[i]];
    return WeylElement::make_checked(u.family() == Family::B ? Family::B : Family::C,
                                     std::move(r));
}

int length(const WeylElement& w) {
    if (in_odd_coset(w)) return length(odd_coset_partner(w));
    const int m = w.rank();
    const std::vector<int> s = w.signed_window();
    auto fold = [&](int i) {  // 1-based window position -> (index, sign)
        const int v = s[i - 1];
        return std::pair<int, int>(v > 0 ? v : -v, v > 0 ? 1 : -1);
    };
    int count = 0;
    for (int i = 1; i <= m; ++i) {
        const auto [a, sa] = fold(i);
        for (int j = i + 1; j <= m; ++j) {
            const auto [b, sb] = fold(j);
            if (pair_is_negative(a, sa, b, -sb)) ++count;  // e_i - e_j
            if (pair_is_negative(a, sa, b, sb)) ++count;   // e_i + e_j
        }
        if (w.family() == Family::B && s[i - 1] < 0) ++count;  // e_i
    }
    return count;
}

int sign(const WeylElement& w) {
    const std::vector<int> p = w.one_line();
    const int N = static_cast<int>(p.size());
    std::vector<char> seen(N + 1, 0);
    int parity = 0;
    for (int i = 1; i <= N; ++i) {
        if (seen[i]) continue;
        int cycle = 0;
        for (int j = i; !seen[j]; j = p[j - 1]) {
            seen[j] = 1;
            ++cycle;
        }
        parity ^= (cycle - 1) & 1;
    }
    return parity ? -1 : 1;
}

bool is_right_descent(const WeylElement& w, int i) {
    const int m = w.rank();
    if (i < 1 || i > m)
        throw DomainError("descent index must lie in 1..m");
    if (in_odd_coset(w))
        return is_right_descent(odd_coset_partner(w), conjugated_index(m, i));

    const std::vector<int> s = w.signed_window();
    auto fold = [&](int pos) {
        const int v = s[pos - 1];
        return std::pair<int, int>(v > 0 ? v : -v, v > 0 ? 1 : -1);
    };
    if (i < m) {
        const auto [a, sa] = fold(i);
        const auto [b, sb] = fold(i + 1);
        return pair_is_negative(a, sa, b, -sb);
    }
    if (w.family() == Family::B) return s[m - 1] < 0;
    const auto [a, sa] = fold(m - 1);
    const auto [b, sb] = fold(m);
    return pair_is_negative(a, sa, b, sb);
}

std::vector<int> reduced_word(const WeylElement& w) {
    if (in_odd_coset(w)) {
        std::vector<int> word = reduced_word(odd_coset_partner(w));
        word.push_back(twisted_letter);
        return word;
    }
    const int m = w.rank();
    std::vector<int> collected;
    WeylElement x = w;
    while (!x.is_identity()) {
        int descent = 0;
        for (int i = 1; i <= m; ++i) {
            if (is_right_descent(x, i)) {
                descent = i;
                break;
            }
        }
        if (descent == 0)
            throw DomainError("non-identity element without a right descent");
        x = multiply(x, simple_reflection(x.family(), m, descent));
        collected.push_back(descent);
    }
    std::reverse(collected.begin(), collected.end());
    return collected;
}

bool bruhat_leq(const WeylElement& u, const WeylElement& w) {
    if (u.points() != w.points() || (u.family() == Family::B) != (w.family() == Family::B))
        throw DomainError("comparison requires the same family and rank");
    if (u.family() != Family::B && (u.family() == Family::C) != (w.family() == Family::C))
        throw DomainError("comparison is only defined within one coset of the even subgroup");

    WeylElement a = in_odd_coset(u) ? odd_coset_partner(u) : u;
    const WeylElement b = in_odd_coset(w) ? odd_coset_partner(w) : w;
    if (length(a) > length(b)) return false;

    const int m = a.rank();
    const std::vector<int> word = reduced_word(b);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (is_right_descent(a, *it))
            a = multiply(a, simple_reflection(a.family(), m, *it));
    }
    return a.is_identity();
}

std::vector<WeylElement> final_elements(Family f, int m) {
    if (f == Family::C)
        throw DomainError("final elements are indexed for families B and D");
    if (f == Family::B && m < 1)
        throw DomainError("family B needs rank at least 1");
    if (f == Family::D && m < 2)
        throw DomainError("family D needs rank at least 2");
    const int N = f == Family::B ? 2 * m + 1 : 2 * m;

    // Generators of the stabilizer of the first flag step: index >= 2 and
    // fixing position 1. (The rank-2 even case keeps nothing.)
    std::vector<int> strip;
    for (int j = 2; j <= m; ++j) {
        if (simple_reflection(f, m, j).apply(1) == 1) strip.push_back(j);
    }

    std::vector<WeylElement> out;
    out.reserve(2 * m);
    for (int j = 1; j <= 2 * m; ++j) {
        int label;  // signed value at position 1
        if (f == Family::B) {
            label = j <= m ? -j : 2 * m + 1 - j;
        } else {
            if (j <= m - 1) label = -j;
            else if (j == m) label = -m;
            else if (j == m + 1) label = m;
            else label = 2 * m + 1 - j;
        }
        std::vector<int> window(m);
        window[0] = label > 0 ? label : N + 1 + label;
        int pos = 1;
        for (int v = 1; v <= m; ++v) {
            if (v == (label > 0 ? label : -label)) continue;
            window[pos++] = v;
        }
        if (f == Family::D && label < 0)
            window[m - 1] = N + 1 - window[m - 1];  // restore even parity

        WeylElement x = WeylElement::from_window(f, window);
        bool changed = true;
        while (changed) {
            changed = false;
            for (int jstrip : strip) {
                if (is_right_descent(x, jstrip)) {
                    x = multiply(x, simple_reflection(f, m, jstrip));
                    changed = true;
                }
            }
        }
        out.push_back(std::move(x));
    }
    return out;
}

bool is_final(const WeylElement& w) {
    for (int j = 2; j <= w.rank(); ++j)
        if (is_right_descent(w, j)) return false;
    return true;
}

WeylElement twist(const WeylElement& w) {
    if (w.family() == Family::B)
        throw DomainError("the twist is defined for the even families only");
    return multiply(w, simple_reflection(Family::C, w.rank(), twisted_letter));
}

std::vector<WeylElement> all_elements(Family f, int m) {
    if (f == Family::B) {
        if (m < 1) throw DomainError("family B needs rank at least 1");
    } else if (m < 2) {
        throw DomainError("families C and D need rank at least 2");
    }
    if (m > 4) throw DomainError("exhaustive enumeration is capped at rank 4");
    const int N = f == Family::B ? 2 * m + 1 : 2 * m;

    std::vector<int> abs(m);
    std::iota(abs.begin(), abs.end(), 1);
    std::vector<WeylElement> out;
    do {
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            std::vector<int> window(m);
            int negatives = 0;
            for (int i = 0; i < m; ++i) {
                if (mask >> i & 1u) {
                    window[i] = N + 1 - abs[i];
                    ++negatives;
                } else {
                    window[i] = abs[i];
                }
            }
            if (f == Family::D && negatives % 2 != 0) continue;
            out.push_back(WeylElement::from_window(
                f == Family::B ? Family::B : Family::C, window));
        }
    } while (std::next_permutation(abs.begin(), abs.end()));
    std::sort(out.begin(), out.end());
    return out;
}

std::string window_string(const WeylElement& w) {
    std::ostringstream os;
    os << '[';
    const std::vector<int> win = w.window();
    for (size_t i = 0; i < win.size(); ++i) {
        if (i) os << ',';
        os << win[i];
    }
    os << ']';
    return os.str();
}

}  // namespace k3strat
