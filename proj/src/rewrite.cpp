#include "factcat/rewrite.hpp"

#include <algorithm>
#include <functional>

namespace factcat::rewrite {

int shortlex_cmp(const Word& a, const Word& b) {
    if (a.letters.size() != b.letters.size())
        return a.letters.size() < b.letters.size() ? -1 : 1;
    if (a.letters < b.letters) return -1;
    if (b.letters < a.letters) return 1;
    return 0;
}

Word concat(const Word& a, const Word& b) {
    if (a.tgt != b.src) throw std::invalid_argument("concat: words are not composable");
    Word w{a.src, b.tgt, a.letters};
    w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
    return w;
}

static bool matches_at(const std::vector<Name>& w, std::size_t pos, const std::vector<Name>& lhs) {
    if (pos + lhs.size() > w.size()) return false;
    return std::equal(lhs.begin(), lhs.end(), w.begin() + static_cast<std::ptrdiff_t>(pos));
}

Word reduce(const Word& w, const std::vector<Rule>& rules) {
    Word out = w;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < out.letters.size() && !changed; ++i) {
            for (const auto& r : rules) {
                if (!matches_at(out.letters, i, r.lhs.letters)) continue;
                std::vector<Name> next(out.letters.begin(),
                                       out.letters.begin() + static_cast<std::ptrdiff_t>(i));
                next.insert(next.end(), r.rhs.letters.begin(), r.rhs.letters.end());
                next.insert(next.end(),
                            out.letters.begin() + static_cast<std::ptrdiff_t>(i + r.lhs.letters.size()),
                            out.letters.end());
                out.letters = std::move(next);
                changed = true;
                break;
            }
        }
    }
    return out;
}

KnuthBendix::KnuthBendix(Alphabet alphabet, std::vector<std::pair<Word, Word>> equations)
    : alphabet_(std::move(alphabet)), pending_(std::move(equations)) {}

void KnuthBendix::push_critical_pairs(std::size_t rule_index) {
    auto overlaps = [&](const Rule& r1, const Rule& r2, bool same_rule) {
        const auto& l1 = r1.lhs.letters;
        const auto& l2 = r2.lhs.letters;
        // suffix of l1 meets prefix of l2
        for (std::size_t k = 1; k <= std::min(l1.size(), l2.size()); ++k) {
            if (same_rule && k == l1.size() && k == l2.size()) continue;
            if (!std::equal(l2.begin(), l2.begin() + static_cast<std::ptrdiff_t>(k),
                            l1.end() - static_cast<std::ptrdiff_t>(k)))
                continue;
            Word p1{r1.rhs.src, r2.lhs.tgt, r1.rhs.letters};
            p1.letters.insert(p1.letters.end(), l2.begin() + static_cast<std::ptrdiff_t>(k),
                              l2.end());
            Word p2{r1.lhs.src, r2.rhs.tgt,
                    {l1.begin(), l1.end() - static_cast<std::ptrdiff_t>(k)}};
            p2.letters.insert(p2.letters.end(), r2.rhs.letters.begin(), r2.rhs.letters.end());
            pending_.emplace_back(p1, p2);
        }
        // l2 strictly inside l1 (boundary cases are suffix/prefix overlaps)
        if (l2.size() < l1.size()) {
            for (std::size_t i = 1; i + l2.size() < l1.size(); ++i) {
                if (!matches_at(l1, i, l2)) continue;
                Word p2{r1.lhs.src, r1.lhs.tgt,
                        {l1.begin(), l1.begin() + static_cast<std::ptrdiff_t>(i)}};
                p2.letters.insert(p2.letters.end(), r2.rhs.letters.begin(), r2.rhs.letters.end());
                p2.letters.insert(p2.letters.end(),
                                  l1.begin() + static_cast<std::ptrdiff_t>(i + l2.size()),
                                  l1.end());
                pending_.emplace_back(r1.rhs, p2);
            }
        }
    };
    const Rule nr = rules_[rule_index];   // copy: pending_ growth may reallocate
    for (std::size_t j = 0; j < rules_.size(); ++j) {
        overlaps(nr, rules_[j], j == rule_index);
        if (j != rule_index) overlaps(rules_[j], nr, false);
    }
}

bool KnuthBendix::run(std::size_t& budget) {
    // fair selection: always take a smallest pending equation, so short
    // relations are never starved by a flood of longer critical pairs
    auto weight = [](const std::pair<Word, Word>& e) {
        return e.first.letters.size() + e.second.letters.size();
    };
    while (!pending_.empty()) {
        auto it = std::min_element(pending_.begin(), pending_.end(),
                                   [&](const auto& x, const auto& y) {
                                       auto wx = weight(x), wy = weight(y);
                                       if (wx != wy) return wx < wy;
                                       return std::tie(x.first.letters, x.second.letters) <
                                              std::tie(y.first.letters, y.second.letters);
                                   });
        auto [a, b] = *it;
        *it = std::move(pending_.back());
        pending_.pop_back();
        a = reduce(a, rules_);
        b = reduce(b, rules_);
        if (a == b) continue;
        if (shortlex_cmp(a, b) < 0) std::swap(a, b);
        if (budget == 0) {
            pending_.emplace_back(a, b);
            return false;
        }
        --budget;
        ++rules_added_;
        Rule nr{a, b};
        // interreduce: drop rules whose lhs the new rule rewrites, and
        // normalize surviving right-hand sides
        std::vector<Rule> kept;
        std::vector<Rule> one{nr};
        for (auto& r : rules_) {
            bool lhs_hit = false;
            for (std::size_t i = 0; i + nr.lhs.letters.size() <= r.lhs.letters.size() && !lhs_hit;
                 ++i)
                lhs_hit = matches_at(r.lhs.letters, i, nr.lhs.letters);
            if (lhs_hit) {
                pending_.emplace_back(r.lhs, r.rhs);
            } else {
                r.rhs = reduce(r.rhs, one);
                kept.push_back(std::move(r));
            }
        }
        rules_ = std::move(kept);
        rules_.push_back(std::move(nr));
        push_critical_pairs(rules_.size() - 1);
    }
    complete_ = true;
    return true;
}

NormalFormLanguage normal_forms(const Alphabet& alphabet, const std::vector<Rule>& rules,
                                const std::vector<Name>& objects, std::size_t limit) {
    // prefix automaton over irreducible words: a state is (current target
    // object, longest trailing factor that is a proper prefix of some lhs)
    std::set<std::vector<Name>> prefixes;
    for (const auto& r : rules)
        for (std::size_t k = 0; k < r.lhs.letters.size(); ++k)
            prefixes.insert({r.lhs.letters.begin(),
                             r.lhs.letters.begin() + static_cast<std::ptrdiff_t>(k)});
    prefixes.insert({});

    using State = std::pair<Name, std::vector<Name>>;
    std::map<State, std::size_t> index;
    std::vector<State> states;
    std::vector<std::vector<std::pair<Name, std::size_t>>> edges;   // letter, next
    std::vector<std::size_t> starts;

    auto intern = [&](const State& s) {
        auto [it, fresh] = index.emplace(s, states.size());
        if (fresh) {
            states.push_back(s);
            edges.emplace_back();
        }
        return it->second;
    };

    for (const auto& o : objects) starts.push_back(intern({o, {}}));

    for (std::size_t s = 0; s < states.size(); ++s) {
        const auto [obj, pfx] = states[s];
        for (const auto& [x, info] : alphabet) {
            if (info.src != obj) continue;
            std::vector<Name> t = pfx;
            t.push_back(x);
            bool blocked = false;
            for (const auto& r : rules) {
                const auto& l = r.lhs.letters;
                if (l.size() <= t.size() &&
                    std::equal(l.begin(), l.end(), t.end() - static_cast<std::ptrdiff_t>(l.size())))
                    blocked = true;
            }
            if (blocked) continue;
            // longest suffix of t that is a proper prefix of some lhs
            std::vector<Name> best;
            for (std::size_t k = std::min(t.size(), prefixes.empty() ? 0 : t.size()); k > 0; --k) {
                std::vector<Name> suf(t.end() - static_cast<std::ptrdiff_t>(k), t.end());
                if (prefixes.count(suf)) {
                    best = std::move(suf);
                    break;
                }
            }
            std::size_t next = intern({info.tgt, std::move(best)});   // may grow edges
            edges[s].emplace_back(x, next);
        }
    }

    // cycle detection from the start states
    std::vector<int> color(states.size(), 0);   // 0 white, 1 on stack, 2 done
    std::vector<std::pair<std::size_t, Name>> stack_edges;
    NormalFormLanguage out;
    std::function<bool(std::size_t)> dfs = [&](std::size_t s) -> bool {
        color[s] = 1;
        for (const auto& [x, n] : edges[s]) {
            if (color[n] == 1) {
                // unwind the stack back to n to read off the loop letters
                std::vector<Name> cyc;
                std::size_t i = stack_edges.size();
                while (i > 0 && stack_edges[i - 1].first != n) --i;
                for (; i < stack_edges.size(); ++i) cyc.push_back(stack_edges[i].second);
                cyc.push_back(x);
                out.cycle = std::move(cyc);
                return true;
            }
            if (color[n] == 0) {
                stack_edges.emplace_back(n, x);
                if (dfs(n)) return true;
                stack_edges.pop_back();
            }
        }
        color[s] = 2;
        return false;
    };
    for (auto s : starts) {
        if (color[s] == 0) {
            stack_edges.clear();
            stack_edges.emplace_back(s, Name{});
            // the sentinel start entry never matches a back edge target search
            stack_edges.clear();
            if (dfs(s)) {
                out.status = NormalFormLanguage::Status::Infinite;
                return out;
            }
        }
    }

    // acyclic: enumerate every path from every start
    std::vector<Name> word;
    bool too_many = false;
    std::function<void(std::size_t, const Name&, const Name&)> walk =
        [&](std::size_t s, const Name& src, const Name& tgt) {
            if (too_many) return;
            if (out.words.size() >= limit) {
                too_many = true;
                return;
            }
            out.words.push_back(Word{src, tgt, word});
            for (const auto& [x, n] : edges[s]) {
                word.push_back(x);
                walk(n, src, alphabet.at(x).tgt);
                word.pop_back();
            }
        };
    for (std::size_t i = 0; i < starts.size(); ++i) {
        word.clear();
        walk(starts[i], states[starts[i]].first, states[starts[i]].first);
    }
    out.status = too_many ? NormalFormLanguage::Status::TooMany : NormalFormLanguage::Status::Finite;
    if (too_many) out.words.clear();
    return out;
}

}   // namespace factcat::rewrite
