#include "factcat/coset.hpp"

#include <algorithm>
#include <deque>

namespace factcat::coset {

ToddCoxeter::ToddCoxeter(GroupPresentation p) : pres_(std::move(p)) {
    table_.emplace_back(2 * pres_.ngens, -1);   // coset 0 = the subgroup
    parent_.push_back(0);
}

std::size_t ToddCoxeter::col(int signed_gen) const {
    std::size_t i = static_cast<std::size_t>(signed_gen > 0 ? signed_gen : -signed_gen) - 1;
    return 2 * i + (signed_gen > 0 ? 0 : 1);
}

std::size_t ToddCoxeter::find(std::size_t c) const {
    while (parent_[c] != c) {
        parent_[c] = parent_[parent_[c]];
        c = parent_[c];
    }
    return c;
}

std::size_t ToddCoxeter::define(std::size_t c, std::size_t column) {
    std::size_t n = table_.size();
    table_.emplace_back(2 * pres_.ngens, -1);
    parent_.push_back(n);
    table_[c][column] = static_cast<std::ptrdiff_t>(n);
    table_[n][column ^ 1] = static_cast<std::ptrdiff_t>(c);
    ++defined_;
    return n;
}

void ToddCoxeter::merge(std::size_t a, std::size_t b) {
    coincidences_.emplace_back(a, b);
    process_coincidences();
}

void ToddCoxeter::process_coincidences() {
    while (!coincidences_.empty()) {
        auto [a, b] = coincidences_.back();
        coincidences_.pop_back();
        a = find(a);
        b = find(b);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        parent_[b] = a;   // b dies; transfer its row into a
        for (std::size_t c = 0; c < 2 * pres_.ngens; ++c) {
            std::ptrdiff_t de = table_[b][c];
            if (de < 0) continue;
            std::size_t d = find(static_cast<std::size_t>(de));
            std::ptrdiff_t e = table_[a][c];
            if (e < 0) {
                table_[a][c] = static_cast<std::ptrdiff_t>(d);
                std::ptrdiff_t f = table_[d][c ^ 1];
                if (f < 0)
                    table_[d][c ^ 1] = static_cast<std::ptrdiff_t>(a);
                else if (find(static_cast<std::size_t>(f)) != a)
                    coincidences_.emplace_back(find(static_cast<std::size_t>(f)), a);
            } else if (find(static_cast<std::size_t>(e)) != d) {
                coincidences_.emplace_back(find(static_cast<std::size_t>(e)), d);
            }
        }
    }
}

bool ToddCoxeter::run(std::size_t& budget) {
    if (closed_) return true;
    while (scan_pos_ < table_.size()) {
        std::size_t c = scan_pos_;
        if (find(c) != c) {
            ++scan_pos_;
            continue;
        }
        for (const auto& w : pres_.relators) {
            // scan relator w at c, filling gaps (HLT)
            std::size_t f = find(c);
            std::size_t i = 0;
            const std::size_t n = w.size();
            bool done = false;
            while (!done) {
                while (i < n && table_[f][col(w[i])] >= 0) {
                    f = find(static_cast<std::size_t>(table_[f][col(w[i])]));
                    ++i;
                }
                if (i == n) {
                    if (f != find(c)) merge(f, find(c));
                    done = true;
                    continue;
                }
                // scan backwards from c
                std::size_t bk = find(c);
                std::size_t j = n;
                while (j > i + 1 && table_[bk][col(-w[j - 1])] >= 0) {
                    bk = find(static_cast<std::size_t>(table_[bk][col(-w[j - 1])]));
                    --j;
                }
                if (j == i + 1) {
                    // gap of one: deduction table[f]·w[i] = bk
                    std::size_t cf = col(w[i]);
                    if (table_[f][cf] >= 0)
                        merge(find(static_cast<std::size_t>(table_[f][cf])), bk);
                    else if (table_[bk][cf ^ 1] >= 0)
                        merge(find(static_cast<std::size_t>(table_[bk][cf ^ 1])), f);
                    else {
                        table_[f][cf] = static_cast<std::ptrdiff_t>(bk);
                        table_[bk][cf ^ 1] = static_cast<std::ptrdiff_t>(f);
                    }
                    done = true;
                    continue;
                }
                if (budget == 0) return false;
                --budget;
                f = define(f, col(w[i]));
                ++i;
            }
            if (find(c) != c) break;   // c died during processing
        }
        if (find(c) != c) {
            ++scan_pos_;
            continue;
        }
        for (std::size_t cl = 0; cl < 2 * pres_.ngens; ++cl) {
            if (find(c) != c) break;
            if (table_[c][cl] >= 0) continue;
            if (budget == 0) return false;
            --budget;
            define(c, cl);
        }
        ++scan_pos_;
    }
    closed_ = true;
    compress();
    return true;
}

void ToddCoxeter::compress() {
    std::vector<std::ptrdiff_t> remap(table_.size(), -1);
    std::vector<std::vector<std::ptrdiff_t>> live;
    for (std::size_t c = 0; c < table_.size(); ++c)
        if (find(c) == c) {
            remap[c] = static_cast<std::ptrdiff_t>(live.size());
            live.push_back(table_[c]);
        }
    for (auto& row : live)
        for (auto& e : row) e = remap[find(static_cast<std::size_t>(e))];
    table_ = std::move(live);
    parent_.resize(table_.size());
    for (std::size_t c = 0; c < parent_.size(); ++c) parent_[c] = c;

    // representative words via breadth-first search from the identity
    reps_.assign(table_.size(), {});
    std::vector<bool> seen(table_.size(), false);
    std::deque<std::size_t> q{0};
    seen[0] = true;
    while (!q.empty()) {
        std::size_t c = q.front();
        q.pop_front();
        for (std::size_t g = 1; g <= pres_.ngens; ++g) {
            for (int s : {static_cast<int>(g), -static_cast<int>(g)}) {
                auto d = static_cast<std::size_t>(table_[c][col(s)]);
                if (seen[d]) continue;
                seen[d] = true;
                reps_[d] = reps_[c];
                reps_[d].push_back(s);
                q.push_back(d);
            }
        }
    }
}

std::size_t ToddCoxeter::order() const { return table_.size(); }

std::size_t ToddCoxeter::apply(std::size_t elt, int signed_gen) const {
    return static_cast<std::size_t>(table_[elt][col(signed_gen)]);
}

std::size_t ToddCoxeter::mul(std::size_t a, std::size_t b) const {
    std::size_t c = a;
    for (int s : reps_[b]) c = apply(c, s);
    return c;
}

std::size_t ToddCoxeter::inv(std::size_t a) const {
    std::size_t c = 0;
    const auto& w = reps_[a];
    for (auto it = w.rbegin(); it != w.rend(); ++it) c = apply(c, -*it);
    return c;
}

}   // namespace factcat::coset
