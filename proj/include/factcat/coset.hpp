#pragma once

#include "factcat/fincat.hpp"

namespace factcat::coset {

/// A finitely presented group. Relators are words in signed generator
/// indices: +i means generator i, -i means its inverse (1-based).
struct GroupPresentation {
    std::size_t ngens = 0;
    std::vector<std::vector<int>> relators;
};

/// Coset enumeration over the trivial subgroup (HLT strategy). When the
/// table closes the cosets are exactly the group elements.
class ToddCoxeter {
public:
    explicit ToddCoxeter(GroupPresentation p);

    /// Spend up to `budget` coset definitions; decrements budget.
    /// Returns true iff the table closed.
    bool run(std::size_t& budget);

    bool closed() const { return closed_; }
    std::size_t order() const;   // closed() only
    std::size_t cosets_defined() const { return defined_; }

    /// Element arithmetic on the closed table. Elements are the live
    /// coset numbers 0..order()-1 after compression, 0 the identity.
    std::size_t apply(std::size_t elt, int signed_gen) const;
    std::size_t mul(std::size_t a, std::size_t b) const;
    std::size_t inv(std::size_t a) const;
    /// A word in signed generators evaluating to element a.
    const std::vector<int>& rep(std::size_t a) const { return reps_[a]; }

private:
    std::size_t col(int signed_gen) const;
    std::size_t find(std::size_t c) const;
    std::size_t define(std::size_t c, std::size_t column);
    void merge(std::size_t a, std::size_t b);
    void process_coincidences();
    void compress();

    GroupPresentation pres_;
    std::vector<std::vector<std::ptrdiff_t>> table_;   // -1 = undefined
    mutable std::vector<std::size_t> parent_;          // union-find
    std::vector<std::pair<std::size_t, std::size_t>> coincidences_;
    std::vector<std::vector<int>> reps_;
    std::size_t defined_ = 0;
    std::size_t scan_pos_ = 0;
    bool closed_ = false;
};

}   // namespace factcat::coset
