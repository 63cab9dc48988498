#pragma once

#include <basephi/report.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace basephi {

/// Letters are indices into a morphism's alphabet; alphabets of up to 256
/// letters are supported.  Display names live in the owning Morphism.
using Letter = std::uint8_t;
using Word = std::vector<Letter>;

/// A substitution morphism over a finite alphabet: one nonempty replacement
/// word per letter, applied letter by letter and respecting concatenation.
class Morphism {
  public:
    /// Throws std::invalid_argument if a rule is empty, a rule image uses a
    /// letter outside the alphabet, or names/rules sizes disagree.
    Morphism(std::vector<std::string> letter_names, std::vector<Word> rules);

    std::size_t alphabet_size() const { return rules_.size(); }
    const std::string& letter_name(Letter letter) const { return names_.at(letter); }
    std::optional<Letter> letter_by_name(std::string_view name) const;
    const Word& rule(Letter letter) const;

    Word apply(const Word& word) const;
    Word iterate(const Word& seed, std::size_t n) const;

    /// True iff rule(seed) starts with seed and has length >= 2, which makes
    /// the one-sided fixed point starting at seed exist and be unique.
    bool prolongable_on(Letter seed) const;

    /// First `length` letters of the fixed point starting at `seed`.
    /// Generated by streaming (each consumed letter appends its image), so
    /// cost and memory are proportional to the output length.
    Word fixed_point_prefix(Letter seed, std::size_t length) const;

    /// Renders a word: names are concatenated when every letter name is a
    /// single character, space-separated otherwise.
    std::string format(const Word& word) const;

    /// Parses a word of letter names; whitespace and commas separate letters
    /// and are optional.  Longest name wins at each position.
    Word parse_word(std::string_view text) const;

  private:
    std::vector<std::string> names_;
    std::vector<Word> rules_;
    bool single_char_names_ = true;
};

/// 1-based positions of `target` in prefix ++ fixed_point(m, seed), up to
/// and including position `limit`.  The optional prefix lets callers index a
/// sequence that extends the fixed point by finitely many letters in front.
std::vector<std::size_t> letter_positions(const Morphism& m, Letter seed, Letter target,
                                          std::size_t limit, const Word& prefix = {});

/// Fibonacci morphism 0 -> 01, 1 -> 0.
Morphism sigma_morphism();

/// Four-letter morphism A -> AB, B -> C, C -> D, D -> ABC.
Morphism gamma_morphism();

/// Extension of gamma^(k+2) to the eight-letter alphabet
/// {A0, A1, B0, B1, C0, C1, D0, D1}: each rule image is the T+ coding (base
/// letter plus digit d_k) of one of the four defining blocks of N, computed
/// directly from base-phi expansions.  X0 and X1 share their image.
/// Requires k >= 1.
Morphism gamma_plus(int k);

/// Checks, for every n in [2, n_max]: |gamma^n(A)| = lucas(n),
/// |gamma^n(B)| = lucas(n-1), |gamma^n(C)| = lucas(n),
/// |gamma^n(D)| = lucas(n+1), and the word identities
/// gamma^n(A) = gamma^n(C) and gamma^n(A) = gamma^(n+1)(B).
VerificationReport check_lemma_31(int n_max);

}  // namespace basephi
