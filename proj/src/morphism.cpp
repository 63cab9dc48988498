#include <basephi/morphism.hpp>

#include <basephi/expansion.hpp>
#include <basephi/sequences.hpp>
#include <basephi/theorems.hpp>

#include <algorithm>
#include <array>
#include <stdexcept>

namespace basephi {

Morphism::Morphism(std::vector<std::string> letter_names, std::vector<Word> rules)
    : names_(std::move(letter_names)), rules_(std::move(rules)) {
    if (names_.size() != rules_.size())
        throw std::invalid_argument("morphism: one name per rule required");
    if (rules_.empty() || rules_.size() > 256)
        throw std::invalid_argument("morphism: alphabet must have 1..256 letters");
    for (std::size_t letter = 0; letter < rules_.size(); ++letter) {
        if (rules_[letter].empty())
            throw std::invalid_argument("morphism: empty rule for letter " + names_[letter]);
        for (Letter image : rules_[letter])
            if (image >= rules_.size())
                throw std::invalid_argument("morphism: rule for " + names_[letter] +
                                            " uses a letter outside the alphabet");
    }
    for (const std::string& name : names_)
        if (name.size() != 1) single_char_names_ = false;
}

std::optional<Letter> Morphism::letter_by_name(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<Letter>(i);
    return std::nullopt;
}

const Word& Morphism::rule(Letter letter) const {
    if (letter >= rules_.size())
        throw std::invalid_argument("morphism: letter " + std::to_string(letter) +
                                    " outside alphabet");
    return rules_[letter];
}

Word Morphism::apply(const Word& word) const {
    std::size_t total = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] >= rules_.size())
            throw std::invalid_argument("morphism: letter " + std::to_string(word[i]) +
                                        " outside alphabet at position " + std::to_string(i + 1));
        total += rules_[word[i]].size();
    }
    Word out;
    out.reserve(total);
    for (Letter letter : word) out.insert(out.end(), rules_[letter].begin(), rules_[letter].end());
    return out;
}

Word Morphism::iterate(const Word& seed, std::size_t n) const {
    Word word = seed;
    for (std::size_t i = 0; i < n; ++i) word = apply(word);
    return word;
}

bool Morphism::prolongable_on(Letter seed) const {
    if (seed >= rules_.size()) return false;
    const Word& image = rules_[seed];
    return image.size() >= 2 && image.front() == seed;
}

Word Morphism::fixed_point_prefix(Letter seed, std::size_t length) const {
    if (!prolongable_on(seed))
        throw std::invalid_argument("morphism: not prolongable on seed " +
                                    (seed < names_.size() ? names_[seed] : "?"));
    Word out = rules_[seed];
    out.reserve(std::max(length, out.size()));
    // out is a prefix of the fixed point; consuming letter i appends its
    // image, and the read cursor can never catch up with the write end.
    for (std::size_t i = 1; out.size() < length; ++i) {
        const Word& image = rules_[out[i]];
        out.insert(out.end(), image.begin(), image.end());
    }
    out.resize(std::min(length, out.size()));
    return out;
}

std::string Morphism::format(const Word& word) const {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (!single_char_names_ && i > 0) out += ' ';
        out += letter_name(word[i]);
    }
    return out;
}

Word Morphism::parse_word(std::string_view text) const {
    Word word;
    std::size_t pos = 0;
    while (pos < text.size()) {
        char c = text[pos];
        if (c == ' ' || c == '\t' || c == ',') {
            ++pos;
            continue;
        }
        std::size_t best_len = 0;
        Letter best = 0;
        for (std::size_t i = 0; i < names_.size(); ++i) {
            const std::string& name = names_[i];
            if (name.size() > best_len && text.substr(pos, name.size()) == name) {
                best_len = name.size();
                best = static_cast<Letter>(i);
            }
        }
        if (best_len == 0)
            throw std::invalid_argument("unknown letter at position " + std::to_string(pos + 1) +
                                        " in \"" + std::string(text) + "\"");
        word.push_back(best);
        pos += best_len;
    }
    return word;
}

std::vector<std::size_t> letter_positions(const Morphism& m, Letter seed, Letter target,
                                          std::size_t limit, const Word& prefix) {
    std::vector<std::size_t> positions;
    if (limit == 0) return positions;
    Word sequence = prefix;
    if (sequence.size() < limit) {
        Word tail = m.fixed_point_prefix(seed, limit - sequence.size());
        sequence.insert(sequence.end(), tail.begin(), tail.end());
    }
    for (std::size_t i = 0; i < limit && i < sequence.size(); ++i)
        if (sequence[i] == target) positions.push_back(i + 1);
    return positions;
}

Morphism sigma_morphism() {
    return Morphism({"0", "1"}, {{0, 1}, {0}});
}

Morphism gamma_morphism() {
    // A=0, B=1, C=2, D=3
    return Morphism({"A", "B", "C", "D"}, {{0, 1}, {2}, {3}, {0, 1, 2}});
}

Morphism gamma_plus(int k) {
    if (k < 1) throw std::invalid_argument("gamma_plus: k must be >= 1");
    // Rule images are the T+ codings of the four blocks
    //   [2, L(k+2)+1], [L(k+2)+2, L(k+3)+1], [L(k+3)+2, L(k+4)+1],
    //   [L(k+4)+2, L(k+5)+1],
    // each computed directly from the expansion of every N in the block.
    std::vector<Word> rules(8);
    Int n = 2;
    for (int block = 0; block < 4; ++block) {
        const Int end = lucas(k + 2 + block) + 1;
        Word image;
        for (; n <= end; ++n) {
            TPlusCode code = t_plus_code(n, k);
            image.push_back(static_cast<Letter>(2 * static_cast<int>(code.base) + code.subscript));
        }
        rules[2 * block] = image;
        rules[2 * block + 1] = std::move(image);
    }
    return Morphism({"A0", "A1", "B0", "B1", "C0", "C1", "D0", "D1"}, std::move(rules));
}

VerificationReport check_lemma_31(int n_max) {
    if (n_max < 2) throw std::invalid_argument("check_lemma_31: n_max must be >= 2");
    VerificationReport report;
    report.id = "l31";
    report.add_param("n_max", std::to_string(n_max));
    timed(report, [&] {
        const Morphism gamma = gamma_morphism();
        std::array<Word, 4> words = {Word{0}, Word{1}, Word{2}, Word{3}};
        const char names[4] = {'A', 'B', 'C', 'D'};
        for (int n = 1; n <= n_max; ++n) {
            for (Word& word : words) word = gamma.apply(word);
            if (n < 2) continue;
            const int length_index[4] = {n, n - 1, n, n + 1};
            for (int x = 0; x < 4; ++x) {
                ++report.items_checked;
                const Int want = lucas(length_index[x]);
                if (Int(words[x].size()) != want)
                    report.add_mismatch(Int(n),
                                        std::string("|gamma^n(") + names[x] + ")| = " + want.str(),
                                        std::to_string(words[x].size()));
            }
            ++report.items_checked;
            if (words[0] != words[2])
                report.add_mismatch(Int(n), "gamma^n(A) = gamma^n(C)", "words differ");
            ++report.items_checked;
            if (gamma.apply(words[1]) != words[0])
                report.add_mismatch(Int(n), "gamma^(n+1)(B) = gamma^n(A)", "words differ");
        }
    });
    return report;
}

}  // namespace basephi
