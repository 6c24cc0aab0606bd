#pragma once

#include "factcat/fincat.hpp"

namespace factcat::rewrite {

/// A composable path through a typed alphabet, in diagrammatic order:
/// letters[0] is applied first. The empty word at an object has
/// src = tgt = that object.
struct Word {
    Name src;
    Name tgt;
    std::vector<Name> letters;

    bool operator==(const Word&) const = default;
};

/// shortlex: length first, then lexicographic on the letter sequence.
int shortlex_cmp(const Word& a, const Word& b);

struct Rule {
    Word lhs;
    Word rhs;
};

using Alphabet = std::map<Name, MorInfo>;   // letter -> src/tgt

Word concat(const Word& a, const Word& b);   // a then b
Word reduce(const Word& w, const std::vector<Rule>& rules);

/// Knuth–Bendix completion over typed words with the shortlex order.
/// Budget is counted in rule additions; run() returns early when the
/// system is confluent.
class KnuthBendix {
public:
    KnuthBendix(Alphabet alphabet, std::vector<std::pair<Word, Word>> equations);

    /// Process until confluent or `budget` rule additions are spent.
    /// Decrements budget as it goes; returns true iff complete.
    bool run(std::size_t& budget);

    bool complete() const { return complete_; }
    const std::vector<Rule>& rules() const { return rules_; }
    std::size_t rules_added() const { return rules_added_; }

private:
    void push_critical_pairs(std::size_t rule_index);

    Alphabet alphabet_;
    std::vector<Rule> rules_;
    std::vector<std::pair<Word, Word>> pending_;
    std::size_t rules_added_ = 0;
    bool complete_ = false;
};

/// The irreducible words of a confluent system, or an infiniteness
/// certificate: a composable letter cycle every iterate of which is
/// irreducible.
struct NormalFormLanguage {
    enum class Status { Finite, Infinite, TooMany } status;
    std::vector<Word> words;        // Finite only; includes empty words
    std::vector<Name> cycle;        // Infinite only
};

NormalFormLanguage normal_forms(const Alphabet& alphabet, const std::vector<Rule>& rules,
                                const std::vector<Name>& objects, std::size_t limit);

}   // namespace factcat::rewrite
