#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "golden/golden_num.hpp"

namespace golden::words {

/// Finite word over {0,1}, stored as a string of '0'/'1'.
using Word01 = std::string;
/// Finite word over {-1,0,1}.
using SignedWord = std::vector<int>;

/// The blocks w_0 = 00 < w_1 = 001 < w_2 = 01.  A word is in admissible
/// block form when it is 10 or 1 w_{i_1} ... w_{i_n} (1 - i_n/2) with
/// i_n != 1 and, for n >= 2, i_1 = 2.
struct BlockDecomposition {
    std::vector<int> indices;  // i_1, ..., i_n over {0,1,2}
    int terminal = 0;          // 1 - i_n/2
    bool exceptional = false;  // the word 10
};

struct NotAdmissible : std::runtime_error {
    /// Position (0-based) in the word where the block parse failed.
    size_t position;
    explicit NotAdmissible(size_t pos)
        : std::runtime_error("not an admissible word (position " + std::to_string(pos) + ")"),
          position(pos) {}
};

/// Unique decomposition of w, or NotAdmissible (thrown) when w is not in
/// admissible block form.
BlockDecomposition parse_block_form(const Word01& w);
Word01 assemble(const BlockDecomposition& blocks);

/// phi(10) = 0(-1); otherwise the negated mirrored block word
/// 0 w_{2-i_1} ... w_{2-i_n} (i_n/2).
SignedWord phi(const BlockDecomposition& blocks);
SignedWord phi(const Word01& w);

SignedWord to_signed(const Word01& w);
SignedWord negate(SignedWord w);

/// Lexicographic comparison of u and w after zero-padding to a common
/// length; returns -1, 0 or 1.
int lex_compare(const SignedWord& u, const SignedWord& w);

struct PropertyMResult {
    bool holds = false;
    bool admissible = false;
    /// When !admissible, the failing position; otherwise, when !holds, the
    /// violating shift j.
    std::optional<size_t> witness;
};

/// Property M: w is in admissible block form and every shift of w and of
/// -phi(w) is lexicographically <= w (zero-padded).
PropertyMResult property_M_check(const Word01& w);

/// v(w) = sum_j w_j beta^{-j}; v(empty) = 0.
GoldenNum valuation(const SignedWord& w);
/// Same, for words over digits '0'..'9' given as a string.
GoldenNum valuation(const std::string& w);

struct Interval {
    GoldenNum lo;
    GoldenNum hi;
    bool closed_right = false;
};

/// The matching interval I_d: (1+1/beta^2, beta] for d = 10 (right-closed),
/// otherwise ((beta^m+beta^{d_m})/(beta^m v(d)+beta^{d_m}),
///            (beta^m-beta^{1-d_m})/(beta^m v(d)-beta^{1-d_m})).
Interval interval_endpoints(const Word01& d);

/// Cylinder of points in [0,1] whose beta-expansion begins with u (no two
/// consecutive 1s required): [v(u), v(u)+1/beta^n) for u_n = 0, and
/// [v(u), v(u)+1/beta^{n+1}) for u_n = 1.
Interval cylinder(const Word01& u);

/// Cascade map: psi(d) = d(-e) when d_m = 0 and d(-e_2...e_m) when d_m = 1,
/// where e = phi(d).  Throws std::domain_error for the exceptional words 10
/// and 1001.
Word01 psi(const Word01& d);

/// Substitution word: Xi(10) = 101, else 1 xi(w_{i_1}) ... xi(w_{i_n}) 01
/// with xi(w_0) = xi(w_2) = 02 and xi(w_1) = 030.  Digits over {0,1,2,3}.
std::string xi(const BlockDecomposition& blocks);

/// n(d) = #{j : d_j = 1} - #{j : e_j = -1}.
int n_count(const Word01& d);

/// K_d from its defining double sum over prefixes.
GoldenNum k_constant(const Word01& d);
/// The rearranged closed form of K_d (d != 10); used as a cross-check.
GoldenNum k_constant_alternate(const Word01& d);

struct MatchingRecord {
    Word01 d;
    SignedWord e;
    int m = 0;
    BlockDecomposition blocks;
    GoldenNum alpha_minus;
    GoldenNum alpha_plus;
    bool closed_right = false;
    int n = 0;
    GoldenNum K;
    std::string xi_word;
    GoldenNum xi_valuation;
    /// Word whose cascade image is d, when that word is in the same atlas.
    Word01 cascade_parent;
};

MatchingRecord make_record(const Word01& d);

/// All matching words of length <= max_len, sorted by alpha_minus
/// descending, with cascade_parent links resolved within the list.
std::vector<MatchingRecord> enumerate_matching_words(int max_len);

std::string signed_to_string(const SignedWord& w);

/// CSV atlas with header: word, e_word, m, alpha_minus_exact,
/// alpha_plus_exact, alpha_minus_dec, alpha_plus_dec, length_dec, n_count,
/// K_d_exact, freq_S_exact, cascade_parent.
std::string atlas_to_csv(const std::vector<MatchingRecord>& atlas);
std::string atlas_to_json(const std::vector<MatchingRecord>& atlas);

/// Digit-0 frequency of S_alpha on I_d, from the matching-word data alone:
/// 1 - (1/(beta v(Xi(d)))) ((n(d)-1)/alpha - K_d).
GoldenNum freq_S_closed_form(const MatchingRecord& rec, const GoldenNum& alpha);

}  // namespace golden::words
