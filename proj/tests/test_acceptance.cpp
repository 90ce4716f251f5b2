// gammaq — exact computations with derived preprojective algebras of quivers
//
// Copyright (c) 2026 the gammaq authors
// SPDX-License-Identifier: MIT
//
// Acceptance gate: runs the ten structural checks at their pinned
// parameters, one pass/fail line per criterion, plus an independent
// brute-force cross-check of the two-term enumeration.  Exits nonzero on
// any failure; never loosens a criterion to get there.

#include <iostream>
#include <string>
#include <vector>

#include "gammaq/checks.hpp"
#include "gammaq/equal.hpp"
#include "gammaq/io.hpp"
#include "support/two_term_oracle.hpp"

namespace {

using namespace gammaq;

/// Matches the breadth-first interval enumeration on A2 against the
/// independent brute-force oracle: same count, a bijection up to
/// isomorphism, and unimodular g-vector matrices throughout.
bool oracle_cross_check(std::string& note) {
    auto dq = std::make_shared<DoubleQuiver>(Quiver::type_a(2));
    Field f = Field::rationals();
    TwistOptions opt;
    opt.weight_bound = 8;

    SiltingPoset poset = enumerate_interval(dq, f, 1, opt);
    std::vector<SiltingObject> pairs = testsupport::two_term_silting_pairs(dq, f, 8);

    if (pairs.size() != 6) {
        note = "oracle found " + std::to_string(pairs.size()) + " two-term objects, expected 6";
        return false;
    }
    if (poset.nodes.size() != pairs.size()) {
        note = "enumeration has " + std::to_string(poset.nodes.size()) +
               " nodes against " + std::to_string(pairs.size()) + " oracle objects";
        return false;
    }

    std::vector<bool> used(pairs.size(), false);
    for (const PosetNode& node : poset.nodes) {
        int match = -1;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (used[i]) continue;
            IsoResult r = equal_upto_iso(node.object.total(), pairs[i].total());
            if (r.verdict == IsoVerdict::Unknown) {
                note = "inconclusive isomorphism test during cross-match: " + r.detail;
                return false;
            }
            if (r.verdict == IsoVerdict::Equal) {
                match = static_cast<int>(i);
                break;
            }
        }
        if (match < 0) {
            note = "enumerated object has no oracle partner: " + node.object.describe();
            return false;
        }
        used[static_cast<std::size_t>(match)] = true;
    }

    for (const SiltingObject& pair : pairs) {
        const std::vector<long> g0 = g_vector(pair.blocks[0]);
        const std::vector<long> g1 = g_vector(pair.blocks[1]);
        const long det = g0[0] * g1[1] - g0[1] * g1[0];
        if (det != 1 && det != -1) {
            note = "silting pair with non-unimodular g-matrix: " + g_vector_str(pair);
            return false;
        }
    }
    note = "6 objects on both sides, matched one to one, all g-matrices unimodular";
    return true;
}

} // namespace

int main() {
    using namespace gammaq;
    std::cout << "== acceptance: structural checks at pinned parameters ==\n"
              << std::flush;

    CheckOptions opt; // rationals, pinned windows, single-threaded
    SuiteResult suite = run_check_suite(opt, &std::cout);

    std::string note;
    const bool oracle_ok = oracle_cross_check(note);
    std::cout << (oracle_ok ? "PASS   " : "FAIL   ") << "interval-enumeration-oracle ("
              << note << ")\n";

    const bool all = suite.all_pass() && oracle_ok;
    std::cout << "== acceptance verdict: " << (all ? "PASS" : "FAIL") << " ==\n";
    return all ? 0 : 1;
}
