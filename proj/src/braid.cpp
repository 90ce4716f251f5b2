// gammaq — exact computations with derived preprojective algebras of quivers
//
// Copyright (c) 2026 the gammaq authors
// SPDX-License-Identifier: MIT

#include "gammaq/braid.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "gammaq/errors.hpp"

namespace gammaq {

bool BraidWord::positive() const {
    return std::none_of(letters.begin(), letters.end(),
                        [](const BraidLetter& l) { return l.inverse; });
}

std::string BraidWord::str() const {
    std::string out;
    for (const BraidLetter& l : letters) {
        if (!out.empty()) out += ' ';
        out += std::to_string(l.vertex);
        if (l.inverse) out += '\'';
    }
    return out;
}

BraidWord parse_braid_word(const std::string& text) {
    BraidWord w;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        BraidLetter l;
        if (token.back() == '\'') {
            l.inverse = true;
            token.pop_back();
        }
        if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) {
                return c >= '0' && c <= '9';
            }))
            throw ConfigError("bad braid letter '" + token + "'");
        l.vertex = std::stoi(token);
        w.letters.push_back(l);
    }
    return w;
}

void validate_word(const Quiver& q, const BraidWord& w) {
    for (const BraidLetter& l : w.letters)
        if (!q.has_vertex(l.vertex))
            throw ConfigError("braid letter at unknown vertex " +
                              std::to_string(l.vertex));
}

BraidWord inverse_word(const BraidWord& w) {
    BraidWord out;
    out.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        out.letters.push_back(BraidLetter{it->vertex, !it->inverse});
    return out;
}

BraidWord free_reduce(const BraidWord& w) {
    std::vector<BraidLetter> stack;
    for (const BraidLetter& l : w.letters) {
        if (!stack.empty() && stack.back().vertex == l.vertex &&
            stack.back().inverse != l.inverse)
            stack.pop_back();
        else
            stack.push_back(l);
    }
    return BraidWord{std::move(stack)};
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
    BraidWord out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

BraidWord random_word(const Quiver& q, int length, bool signed_letters,
                      std::mt19937_64& rng) {
    const auto& vs = q.vertices();
    std::uniform_int_distribution<std::size_t> pick(0, vs.size() - 1);
    std::uniform_int_distribution<int> flip(0, 1);
    BraidWord w;
    for (int k = 0; k < length; ++k) {
        BraidLetter l;
        l.vertex = vs[pick(rng)];
        l.inverse = signed_letters && flip(rng) == 1;
        w.letters.push_back(l);
    }
    return w;
}

std::vector<BraidWord> positive_words(const Quiver& q, int length) {
    std::vector<BraidWord> out;
    BraidWord w;
    // iterative odometer over vertex choices
    std::vector<std::size_t> idx(static_cast<std::size_t>(length), 0);
    const auto& vs = q.vertices();
    if (length == 0) return {w};
    while (true) {
        w.letters.clear();
        for (std::size_t k = 0; k < idx.size(); ++k)
            w.letters.push_back(BraidLetter{vs[idx[k]], false});
        out.push_back(w);
        std::size_t k = idx.size();
        while (k > 0) {
            --k;
            if (++idx[k] < vs.size()) break;
            idx[k] = 0;
            if (k == 0) return out;
        }
    }
}

std::set<std::vector<int>> rewriting_class(const Quiver& q, const BraidWord& w) {
    if (!w.positive())
        throw ConfigError("rewriting closure is defined for positive words only");
    std::vector<int> start;
    for (const BraidLetter& l : w.letters) start.push_back(l.vertex);

    std::set<std::vector<int>> seen{start};
    std::deque<std::vector<int>> queue{start};
    while (!queue.empty()) {
        std::vector<int> cur = queue.front();
        queue.pop_front();
        for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
            const int a = cur[k], b = cur[k + 1];
            if (a != b && q.arrows_between(a, b) == 0) {
                std::vector<int> next = cur;
                std::swap(next[k], next[k + 1]);
                if (seen.insert(next).second) queue.push_back(next);
            }
            if (k + 2 < cur.size() && cur[k + 2] == a && a != b &&
                q.arrows_between(a, b) == 1) {
                std::vector<int> next = cur; // iji -> jij
                next[k] = b;
                next[k + 1] = a;
                next[k + 2] = b;
                if (seen.insert(next).second) queue.push_back(next);
            }
        }
    }
    return seen;
}

bool positive_words_braid_equal(const Quiver& q, const BraidWord& a,
                                const BraidWord& b) {
    if (a.size() != b.size()) return false;
    std::vector<int> bv;
    for (const BraidLetter& l : b.letters) bv.push_back(l.vertex);
    return rewriting_class(q, a).count(bv) > 0;
}

} // namespace gammaq
