#pragma once

#include <compare>
#include <string>
#include <vector>

namespace k3strat {

// B is the Weyl group of SO(2m+1), realized inside S_{2m+1}.
// C is the Weyl group of O(2m) inside S_{2m}; D is its index-two subgroup.
// Elements over an even number of points carry the canonical tag for their
// coset: D when the signed window has an even number of negative entries,
// C when it is odd (the twisted coset W_m^C \ W_m^D).
enum class Family : unsigned char { B, C, D };

std::string family_name(Family f);
Family family_from_name(const std::string& s);

// Reduced-word letter for the distinguished generator s'_m of the even family.
// Standard generators use their index 1..m.
inline constexpr int twisted_letter = 0;

class WeylElement {
public:
    static WeylElement identity(Family f, int m);
    // window = images of 1..m; the symmetry sigma(i) + sigma(N+1-i) = N+1
    // determines the rest.
    static WeylElement from_window(Family f, const std::vector<int>& window);
    static WeylElement from_one_line(Family f, std::vector<int> one_line);

    Family family() const { return family_; }
    int rank() const { return m_; }
    int points() const { return static_cast<int>(perm_.size()); }

    int apply(int x) const;  // sigma(x), 1-based
    std::vector<int> window() const;
    std::vector<int> one_line() const;
    // Entries in {-m..-1, 1..m}: value v <= m stays +v, value v > m+1 (resp.
    // v > m for even N) folds to -(N+1-v).
    std::vector<int> signed_window() const;

    WeylElement inverse() const;
    bool is_identity() const;

    bool operator==(const WeylElement&) const = default;
    std::strong_ordering operator<=>(const WeylElement&) const = default;

private:
    WeylElement(Family f, int m, std::vector<int> perm)
        : family_(f), m_(m), perm_(std::move(perm)) {}
    static WeylElement make_checked(Family f, std::vector<int> perm0);

    Family family_;
    int m_;
    std::vector<int> perm_;  // 0-based one-line notation

    friend WeylElement multiply(const WeylElement& u, const WeylElement& v);
};

// i in 1..m, or twisted_letter for s'_m (families C/D only).
WeylElement simple_reflection(Family f, int m, int i);

// (u*v)(x) = u(v(x)).
WeylElement multiply(const WeylElement& u, const WeylElement& v);

// Coxeter length. For elements of the twisted coset this is the D-length of
// w*s'_m, so the distinguished generator itself has length 0.
int length(const WeylElement& w);

// Sign as a permutation of the N points; +1 or -1.
int sign(const WeylElement& w);

// True iff length(w*s_i) < length(w); i in 1..m.
bool is_right_descent(const WeylElement& w, int i);

// Deterministic reduced word: repeatedly strips the smallest right descent.
// The product of the letters in written order reproduces w. Twisted-coset
// elements get the word of w*s'_m with twisted_letter appended; that letter
// contributes zero length.
std::vector<int> reduced_word(const WeylElement& w);

// Bruhat order via the subword property on the fixed reduced word of w.
// Comparisons require the same family and rank; even-family comparisons are
// only defined within one coset of the index-two subgroup.
bool bruhat_leq(const WeylElement& u, const WeylElement& w);

// The 2m minimal representatives of the cosets modulo the stabilizer of the
// first flag step, ordered w_1, ..., w_{2m} as in the stratification:
// B gives a chain with lengths 2m-1..0; D gives the diamond with the two
// length m-1 elements at positions m (label -m) and m+1 (label +m).
std::vector<WeylElement> final_elements(Family f, int m);

// Literal right-coset test: no right descent at any index >= 2.
bool is_final(const WeylElement& w);

// w * s'_m; even families only. Involution onto the other coset.
WeylElement twist(const WeylElement& w);

// Exhaustive group enumeration; rank capped at 4.
std::vector<WeylElement> all_elements(Family f, int m);

// Window rendered "[5,2]".
std::string window_string(const WeylElement& w);

}  // namespace k3strat
